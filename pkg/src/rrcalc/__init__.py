"""Exact Chern-class, Gysin and Riemann-Roch calculus for oriented theories.

Everything is computed over the rationals on projective-bundle towers:

>>> from rrcalc import k_theory, lci_map, k_class
>>> f = lci_map(("proj", 2), k_theory())
>>> f.push(k_class(f.source_ring, (2,)))
<6 in RingTower[K]()>
"""

from .catalog import CATALOG, CatalogCase, run_catalog
from .chern import (
    Bundle,
    VirtualBundle,
    apply_rootwise,
    bundle_dual,
    bundle_tensor_line,
    chern_character,
    direct_sum,
    line_bundle,
    mult_extension,
    todd_class,
    trivial_bundle,
    whitney_sum,
)
from .fgl import (
    FormalGroupLaw,
    fgl_additive,
    fgl_conjugate,
    fgl_f_part,
    fgl_inverse,
    fgl_multiplicative,
    fgl_n_series,
    fgl_validate,
)
from .gysin import (
    LciMap,
    Projection,
    RegEmbedding,
    Space,
    Theory,
    additive_theory,
    cl_class,
    diagonal_class,
    embed_diagonal,
    embed_hypersurface,
    embed_linear,
    embed_zero_section,
    get_theory,
    k_class,
    k_flip_theory,
    k_theory,
    lci_map,
    line_c1,
    product_space,
    projection_pushforward,
    projective_space,
    pushforward_embedding,
    pushforward_lci,
    thom_class,
)
from .oracles import chow_pushforward_oracle, euler_char_oracle, hypersurface_chi_oracle
from .ring import RingElement, RingMap, RingTower
from .rr import (
    RRReport,
    TheoryMorphism,
    chern_character_morphism,
    extract_G,
    module_rr_reduced,
    morphism_apply,
    verify_rr,
    verify_rr_oriented,
)
from .series import PowerSeries, Rational, todd_series

__version__ = "0.1.0"

__all__ = [
    "additive_theory",
    "apply_rootwise",
    "Bundle",
    "bundle_dual",
    "bundle_tensor_line",
    "CATALOG",
    "CatalogCase",
    "chern_character",
    "chern_character_morphism",
    "chow_pushforward_oracle",
    "cl_class",
    "diagonal_class",
    "direct_sum",
    "embed_diagonal",
    "embed_hypersurface",
    "embed_linear",
    "embed_zero_section",
    "euler_char_oracle",
    "extract_G",
    "fgl_additive",
    "fgl_conjugate",
    "fgl_f_part",
    "fgl_inverse",
    "fgl_multiplicative",
    "fgl_n_series",
    "fgl_validate",
    "FormalGroupLaw",
    "get_theory",
    "hypersurface_chi_oracle",
    "k_class",
    "k_flip_theory",
    "k_theory",
    "lci_map",
    "LciMap",
    "line_bundle",
    "line_c1",
    "module_rr_reduced",
    "morphism_apply",
    "mult_extension",
    "PowerSeries",
    "product_space",
    "Projection",
    "projection_pushforward",
    "projective_space",
    "pushforward_embedding",
    "pushforward_lci",
    "Rational",
    "RegEmbedding",
    "RingElement",
    "RingMap",
    "RingTower",
    "RRReport",
    "run_catalog",
    "Space",
    "Theory",
    "TheoryMorphism",
    "thom_class",
    "todd_class",
    "todd_series",
    "trivial_bundle",
    "verify_rr",
    "verify_rr_oriented",
    "VirtualBundle",
    "whitney_sum",
]
