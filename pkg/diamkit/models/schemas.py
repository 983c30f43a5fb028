"""Pydantic models for configuration, results and command boundaries."""
from enum import Enum
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, model_validator


class ProblemKind(str, Enum):
    """Decision problems answered by the solver and the oracle."""

    THREECOL = "threecol"
    ACYCLIC3COL = "acyclic3col"
    STAR3COL = "star3col"
    NEARBIP = "nearbip"
    IFVS = "ifvs"
    IOCT = "ioct"

    @property
    def is_colouring(self) -> bool:
        return self in (ProblemKind.THREECOL, ProblemKind.ACYCLIC3COL, ProblemKind.STAR3COL)

    @property
    def is_transversal(self) -> bool:
        return not self.is_colouring


class ColouringMode(str, Enum):
    PROPER = "proper"
    ACYCLIC = "acyclic"
    STAR = "star"


class TransversalKind(BaseModel):
    """Independent transversal kind with an optional size bound."""

    kind: Literal["ifvs", "ioct"]
    k: Optional[int] = Field(None, ge=0, description="Maximum size of the transversal")


Route = Literal["tiny", "bipartite", "whole_graph", "minus_private", "infeasible"]


class Answer(BaseModel):
    """Solver answer with a certificate for every yes."""

    problem: ProblemKind
    k: Optional[int] = Field(None, ge=0)
    answer: bool
    optimum: Optional[int] = Field(None, description="Minimum transversal size when known")
    colouring: Optional[List[int]] = Field(None, description="Labels 1..3 per vertex")
    transversal: Optional[List[int]] = Field(None, description="Vertex set I, ascending")
    route: Route


class OracleResult(BaseModel):
    """Exhaustive-search answer."""

    answer: bool
    optimum: Optional[int] = None
    witness_set: Optional[List[int]] = None
    colouring: Optional[List[int]] = None


PatternKind = Literal[
    "path", "cycle", "complete", "star", "subdivided_claw", "subdivided_star", "explicit"
]


class PatternSpec(BaseModel):
    """Forbidden pattern description.

    ``r`` sizes paths, cycles, cliques and stars; ``h <= i <= j`` are the arm
    lengths of a subdivided claw; ``ell`` counts the subdivisions of one
    star edge. ``edges`` and ``vertex_count`` describe an explicit graph.
    """

    kind: PatternKind
    r: Optional[int] = None
    h: Optional[int] = None
    i: Optional[int] = None
    j: Optional[int] = None
    ell: Optional[int] = None
    vertex_count: Optional[int] = None
    edges: List[List[int]] = Field(default_factory=list)

    @property
    def name(self) -> str:
        if self.kind == "path":
            return f"P{self.r}"
        if self.kind == "cycle":
            return f"C{self.r}"
        if self.kind == "complete":
            return f"K{self.r}"
        if self.kind == "star":
            return f"K1,{self.r}"
        if self.kind == "subdivided_claw":
            return f"S{self.h},{self.i},{self.j}"
        if self.kind == "subdivided_star":
            return f"K1,{self.r}^{self.ell}"
        return f"explicit({self.vertex_count})"


class ClaimResult(BaseModel):
    name: str
    status: Literal["pass", "fail", "skipped"]
    detail: str = ""


class GadgetReport(BaseModel):
    """Claim-by-claim verification report of a constructed gadget."""

    kind: str
    vertex_count: int
    claims: List[ClaimResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(claim.status != "fail" for claim in self.claims)

    def status_of(self, name: str) -> Optional[str]:
        for claim in self.claims:
            if claim.name == name:
                return claim.status
        return None


class CapsConfig(BaseModel):
    """Size caps guarding every exponential procedure."""

    enumeration: int = Field(10**7, gt=0, description="3-colourings enumerated by the family builder")
    count: int = Field(10**8, gt=0, description="3-colourings counted by the oracle")
    oracle_vertices: int = Field(20, gt=0)
    independent_set_vertices: int = Field(40, gt=0)
    nae_variables: int = Field(24, gt=0)
    pattern_vertices: int = Field(24, gt=0)
    gd_max_depth: int = Field(22, gt=0)
    verification_vertices: int = Field(24, gt=0, description="Largest gadget checked by oracles")


class CommandConfig(BaseModel):
    """Validated CLI invocation."""

    subcommand: str
    problem: Optional[ProblemKind] = None
    k: Optional[int] = Field(None, ge=0)
    d: Optional[int] = Field(None, ge=1)
    verify_chair_free: bool = False
    verify_diameter: bool = False
    inputs: List[str] = Field(default_factory=list)
    output: Optional[str] = None
    caps: CapsConfig = Field(default_factory=CapsConfig)
    seed: Optional[int] = None
    options: Dict[str, str] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _solve_needs_bound(self) -> "CommandConfig":
        if self.subcommand == "solve" and (self.d is None or self.problem is None):
            raise ValueError("solve requires --problem and --d")
        if self.subcommand == "oracle" and self.problem is None:
            raise ValueError("oracle requires --problem")
        return self


class CommandResult(BaseModel):
    """What a controller hands back to the router."""

    status: int = 0
    output: str = ""
    destination: Optional[str] = Field(None, description="Output path, stdout when None")
