"""Not-all-equal CNF formulas and covering collections.

Literals are signed integers in the DIMACS convention: ``+i`` is variable
``x_i`` and ``-i`` its negation (variables are 1-based). Clause indices are
0-based internally and 1-based in files.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, Optional, Sequence, Tuple

Clause = Tuple[int, int, int]
Pair = Tuple[int, int]


@dataclass(frozen=True)
class NaeFormula:
    """3-literal CNF read under not-all-equal semantics."""

    num_variables: int
    clauses: Tuple[Clause, ...]

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def occurrences(self) -> Counter:
        """Occurrence count per literal, one per clause slot."""
        return Counter(lit for clause in self.clauses for lit in clause)

    def literals(self) -> Tuple[int, ...]:
        """Occurring literals in order of first appearance."""
        seen: Dict[int, None] = {}
        for clause in self.clauses:
            for lit in clause:
                seen.setdefault(lit, None)
        return tuple(seen)

    @property
    def is_variant_a(self) -> bool:
        """Every literal occupies at most two clause slots."""
        return all(count <= 2 for count in self.occurrences().values())

    @property
    def is_variant_b(self) -> bool:
        """All literals positive, each in at most four different clauses."""
        if any(lit < 0 for clause in self.clauses for lit in clause):
            return False
        distinct = Counter(lit for clause in self.clauses for lit in set(clause))
        return all(count <= 4 for count in distinct.values())

    def is_satisfied_by(self, assignment: Sequence[bool]) -> bool:
        """Whether every clause has a true and a false literal.

        Args:
            assignment: Truth value per variable, ``assignment[i - 1]`` for ``x_i``
        """
        for clause in self.clauses:
            values = {literal_value(lit, assignment) for lit in clause}
            if len(values) < 2:
                return False
        return True


def literal_value(lit: int, assignment: Sequence[bool]) -> bool:
    value = assignment[abs(lit) - 1]
    return value if lit > 0 else not value


@dataclass(frozen=True)
class CoveringCollection:
    """Set of ``(literal, clause index)`` pairs."""

    pairs: FrozenSet[Pair]

    @classmethod
    def of(cls, pairs) -> "CoveringCollection":
        return cls(pairs=frozenset(pairs))

    def __iter__(self) -> Iterator[Pair]:
        return iter(sorted(self.pairs, key=lambda p: (p[1], abs(p[0]), p[0] < 0)))

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def clause_of(self, lit: int) -> Optional[int]:
        for pair_lit, clause_index in self.pairs:
            if pair_lit == lit:
                return clause_index
        return None

    def uncovered(self, formula: NaeFormula) -> Tuple[int, ...]:
        """Indices of clauses that own no pair."""
        covered = {clause_index for _, clause_index in self.pairs}
        return tuple(i for i in range(formula.num_clauses) if i not in covered)

    def gamma(self, formula: NaeFormula) -> int:
        """Uncovered-clause count."""
        return len(self.uncovered(formula))

    def is_collection_of(self, formula: NaeFormula) -> bool:
        """Exactly one pair per occurring literal, each naming a clause holding it."""
        per_literal = Counter(lit for lit, _ in self.pairs)
        if set(per_literal) != set(formula.literals()):
            return False
        if any(count != 1 for count in per_literal.values()):
            return False
        return all(
            0 <= i < formula.num_clauses and lit in formula.clauses[i] for lit, i in self.pairs
        )

    def is_covering(self, formula: NaeFormula) -> bool:
        return self.is_collection_of(formula) and self.gamma(formula) == 0
