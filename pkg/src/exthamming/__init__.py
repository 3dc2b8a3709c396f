"""Construction and exact spectral verification of hypercube-like graph families.

Families: hypercubes Q_n, folded hypercubes FQ_n, Hamming graphs H(n, m) and
extended Hamming graphs EH(n, 2^n) (Hamming graph plus the complementary
perfect matching u <-> u^c).
"""

__version__ = "0.1.0"

from exthamming.errors import BudgetError, GuardrailError
from exthamming.graphcore import Graph, cartesian_product, complete_graph
from exthamming.families import (
    Family,
    GraphSpec,
    build,
    complement_vertex,
    extended_hamming,
    folded_hypercube,
    hamming,
    hypercube,
)
from exthamming.spectra import (
    Spectrum,
    aggregate_eh,
    krawtchouk_diag,
    spectrum_extended_hamming_fine,
    spectrum_folded_hypercube,
    spectrum_hamming,
    spectrum_hypercube,
)

__all__ = [
    "BudgetError",
    "GuardrailError",
    "Graph",
    "cartesian_product",
    "complete_graph",
    "Family",
    "GraphSpec",
    "build",
    "complement_vertex",
    "extended_hamming",
    "folded_hypercube",
    "hamming",
    "hypercube",
    "Spectrum",
    "aggregate_eh",
    "krawtchouk_diag",
    "spectrum_extended_hamming_fine",
    "spectrum_folded_hypercube",
    "spectrum_hamming",
    "spectrum_hypercube",
]
