"""Defining-graph analysis for Artin groups over their Coxeter quotients.

Public surface: graph parsing and join decomposition (`graphs`), the
Coxeter word-problem and enumeration oracles (`coxeter`), group
classification and verdicts (`classify`), candidate-element synthesis
(`gamma`), certificates (`cert`), coset cube-complex shadows
(`shadow`), and the command-line front end (`cli`).
"""

__version__ = "0.1.0"

from .graphs import (DefiningGraph, JoinDecomposition, join_decompose,
                     make_defining_graph, parse_defining_graph)
from .classify import (ClassificationReport, Verdict, classify,
                       decide_acyl, center_report, finite_type_recognize)
from .coxeter import (BallResult, cox_equal, enumerate_ball,
                      in_product_of_parabolics, is_finite_parabolic,
                      reduce_word, reduced_expressions, support)
from .gamma import GammaPlan, build_gamma, plan_from_json
from .cert import Certificate, certify, hyperplane_schedule
from .shadow import (DeltaSets, ShadowComplex, build_shadow, delta_sets,
                     links_full_check, separation_check)
from .errors import (ArtinAcylError, CertificateError, GraphFormatError,
                     HypothesisError, ResourceLimitError)

__all__ = [
    "DefiningGraph", "JoinDecomposition", "join_decompose",
    "make_defining_graph", "parse_defining_graph",
    "ClassificationReport", "Verdict", "classify", "decide_acyl",
    "center_report", "finite_type_recognize",
    "BallResult", "cox_equal", "enumerate_ball",
    "in_product_of_parabolics", "is_finite_parabolic", "reduce_word",
    "reduced_expressions", "support",
    "GammaPlan", "build_gamma", "plan_from_json",
    "Certificate", "certify", "hyperplane_schedule",
    "DeltaSets", "ShadowComplex", "build_shadow", "delta_sets",
    "links_full_check", "separation_check",
    "ArtinAcylError", "CertificateError", "GraphFormatError",
    "HypothesisError", "ResourceLimitError",
    "__version__",
]
