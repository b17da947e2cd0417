"""
oddgrass package initialization

Odd symmetric functions, odd nil-Hecke algebras, equivariant cohomology of
Grassmannians, the odd Grassmannian bimodules and the singular Rouquier
complex, all over exact integer scalars.
"""

__version__ = '0.1.0'

from .errors import InternalError

try:
    from .qpi_scalars import GPScalar, qp_binom, qp_int
    from .osym import OSymElem
    from .onh import ONHWord, OPolElem
    from .grass_cohomology import OHElem, REllElem
    from .bimodules import BimodVec, TensorChain, VUTensor
    from .rouquier import ComplexOverK, build_complex, homology, verify_src
    from .uqpi import VModule
    from .verify import SUITES, run_suite
    from .utils import load_report, save_report

    __all__ = ['InternalError', 'GPScalar', 'qp_binom', 'qp_int', 'OSymElem', 'ONHWord', 'OPolElem',
               'OHElem', 'REllElem', 'BimodVec', 'TensorChain', 'VUTensor', 'ComplexOverK',
               'build_complex', 'homology', 'verify_src', 'VModule', 'SUITES', 'run_suite',
               'load_report', 'save_report']
except ImportError:
    # sympy missing: only the error types are available
    __all__ = ['InternalError']
