"""Exact Khovanov homology and the Jones splitting formula along admissible cuts."""
from .algebra import ExactMatrix, LaurentPolynomial, RationalFunction
from .diagrams import CutPresentation, OrientedDiagram, glue
from .double_complex import build_double_complex, compare_with_khovanov, e2_direct, spectral_sequence
from .khovanov import BigradedDims, homology, jones, khovanov_complex, khovanov_homology
from .partitions import SetPartition, enumerate_nc, is_noncrossing, join, meet
from .splitting import build_splitting_matrix, jones_split, verify_decomposition
from .surgery import surgery, surgery_family

__version__ = "0.1.0"

__all__ = [
    "ExactMatrix", "LaurentPolynomial", "RationalFunction", "CutPresentation", "OrientedDiagram", "glue",
    "build_double_complex", "compare_with_khovanov", "e2_direct", "spectral_sequence", "BigradedDims",
    "homology", "jones", "khovanov_complex", "khovanov_homology", "SetPartition", "enumerate_nc",
    "is_noncrossing", "join", "meet", "build_splitting_matrix", "jones_split", "verify_decomposition",
    "surgery", "surgery_family", "__version__",
]
