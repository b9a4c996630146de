"""Hosoya index of multigraphs and caterpillar-bond graphs.

The main entry points are re-exported here; see the submodules for the
full surface.
"""

from .caterpillar import (
    CaterpillarBondSpec,
    canonical_spec,
    cf_from_spec,
    continuant,
    expand_spec,
    format_spec,
    parse_spec,
    reverse_spec,
    spec_from_cf,
    z_fast,
)
from .contfrac import (
    GeneralizedCF,
    Rational,
    contract_tail,
    convergents,
    evaluate,
    format_cf,
    parse_cf,
    simple_cf_expand,
)
from .errors import (
    HosoyaError,
    NotApplicableError,
    ParseError,
    SizeLimitError,
    UnsupportedStructureError,
)
from .inverse import InverseClass, inverse_exhaustive, inverse_paper, paper_expansion
from .multigraph import (
    Multigraph,
    canonical_tree_code,
    hosoya_index,
    is_isomorphic,
    matching_counts,
)
from .sequences import FAMILIES, RecurrenceDef, terms

__version__ = "0.1.0"
