"""Outputs of the reduction builders."""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from diamkit.models.formula import CoveringCollection, NaeFormula
from diamkit.models.graph import Edge, Graph


class SubstitutionPattern(str, Enum):
    """Bipartite graph that replaces an edge, endpoints on one side."""

    K23 = "K2,3"
    K22 = "K2,2"

    @property
    def internal_vertices(self) -> int:
        return 3 if self is SubstitutionPattern.K23 else 2


class GadgetKind(str, Enum):
    IS_TRIANGLE_FREE = "is-trianglefree"
    IS_K14_FREE = "is-k14free"
    DOMINATING = "dominating"
    IOCT = "ioct-gadget"
    ACYCLIC = "acyclic-gadget"
    STAR = "star-gadget"
    EXTREMAL = "gd"


@dataclass(frozen=True)
class GadgetOutput:
    """A constructed graph with its role map and the claims it should satisfy.

    ``roles[v]`` names the construction symbol of vertex ``v``. For the
    independent-set gadgets ``source`` is the input graph and
    ``alpha_offset`` the claimed difference alpha(graph) - alpha(source);
    for the dominating-vertex rule the claim is alpha(graph) = max(alpha(source), 1)
    and ``alpha_offset`` is None.
    """

    kind: GadgetKind
    graph: Graph
    roles: Tuple[str, ...]
    k: Optional[int] = None
    diameter_bound: Optional[int] = None
    diameter_exact: bool = False
    forbidden: Optional[str] = None
    formula: Optional[NaeFormula] = None
    collection: Optional[CoveringCollection] = None
    source: Optional[Graph] = None
    alpha_offset: Optional[int] = None
    substituted: Tuple[Edge, ...] = ()
    parameter: Optional[int] = None

    def vertices_with_role(self, prefix: str) -> Tuple[int, ...]:
        return tuple(v for v, role in enumerate(self.roles) if role.split(":")[0] == prefix)

    def vertex_of(self, role: str) -> int:
        return self.roles.index(role)
