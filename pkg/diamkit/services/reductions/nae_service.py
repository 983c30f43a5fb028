"""NAE-3-SAT formulas: file formats and the variant-A transformer."""
from typing import Dict, List, Tuple

from diamkit.exceptions import GraphFormatError, InvalidInputError
from diamkit.models import CoveringCollection, NaeFormula
from diamkit.utils import get_category_logger

logger = get_category_logger(__name__, "reduction")

Clause = Tuple[int, int, int]


class NaeService:
    """Service for NAE formulas and covering collections."""

    # ------------------------------------------------------------------ I/O

    def parse_nae(self, text: str) -> NaeFormula:
        """Parse ``p nae <vars> <clauses>`` followed by lines ``a b c 0``.

        Raises:
            GraphFormatError: On a malformed header or clause line
            InvalidInputError: On a literal outside the declared variables
        """
        header = None
        clauses: List[Clause] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            if header is None:
                if len(tokens) != 4 or tokens[:2] != ["p", "nae"]:
                    raise GraphFormatError(f"line {number}: expected 'p nae <vars> <clauses>'")
                header = (self._int(tokens[2], number), self._int(tokens[3], number))
                continue
            values = [self._int(t, number) for t in tokens]
            if len(values) != 4 or values[3] != 0 or 0 in values[:3]:
                raise GraphFormatError(
                    f"line {number}: a clause is three non-zero literals followed by 0"
                )
            for lit in values[:3]:
                if abs(lit) > header[0]:
                    raise InvalidInputError(f"line {number}: literal {lit} beyond {header[0]} variables")
            clauses.append((values[0], values[1], values[2]))
        if header is None:
            raise GraphFormatError("missing 'p nae <vars> <clauses>' header")
        if len(clauses) != header[1]:
            raise GraphFormatError(f"header announces {header[1]} clauses, found {len(clauses)}")
        return NaeFormula(num_variables=header[0], clauses=tuple(clauses))

    @staticmethod
    def serialize_nae(formula: NaeFormula) -> str:
        lines = [f"p nae {formula.num_variables} {formula.num_clauses}"]
        lines.extend(f"{a} {b} {c} 0" for a, b, c in formula.clauses)
        return "\n".join(lines) + "\n"

    def parse_collection(self, text: str) -> CoveringCollection:
        """Parse lines ``pair <literal> <clause>`` with 1-based clause indices."""
        pairs = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            if len(tokens) != 3 or tokens[0] != "pair":
                raise GraphFormatError(f"line {number}: expected 'pair <literal> <clause>'")
            lit, clause = self._int(tokens[1], number), self._int(tokens[2], number)
            if lit == 0 or clause < 1:
                raise GraphFormatError(f"line {number}: literal must be non-zero, clause 1-based")
            pairs.append((lit, clause - 1))
        return CoveringCollection.of(pairs)

    @staticmethod
    def serialize_collection(collection: CoveringCollection) -> str:
        return "".join(f"pair {lit} {clause + 1}\n" for lit, clause in collection)

    @staticmethod
    def _int(token: str, number: int) -> int:
        try:
            return int(token)
        except ValueError:
            raise GraphFormatError(f"line {number}: '{token}' is not an integer")

    # ----------------------------------------------------------- variant A

    def to_variant_a(self, formula: NaeFormula) -> Tuple[NaeFormula, CoveringCollection]:
        """Transform into an equivalent formula where every literal fills at
        most two clause slots, together with a covering collection.

        Both steps add three clauses over fresh variables y, z1, z2 that
        force z1 and z2 to equal the replaced literal z.
        """
        num_variables = formula.num_variables
        clauses = [list(clause) for clause in formula.clauses]

        # step 1: split literals filling three or more slots
        while True:
            counts: Dict[int, int] = {}
            for clause in clauses:
                for lit in clause:
                    counts[lit] = counts.get(lit, 0) + 1
            heavy = next((lit for lit, count in counts.items() if count >= 3), None)
            if heavy is None:
                break
            y, z1, z2 = num_variables + 1, num_variables + 2, num_variables + 3
            num_variables += 3
            slots = [(i, j) for i, clause in enumerate(clauses) for j, lit in enumerate(clause) if lit == heavy]
            (i1, j1), (i2, j2) = slots[0], slots[1]
            clauses[i1][j1] = z1
            clauses[i2][j2] = z2
            clauses.extend([[y, z1, -z2], [y, -z1, z2], [heavy, -z1, -z2]])
            logger.debug(f"Split literal {heavy} over {len(slots)} slots")

        # step 2: repair uncovered clauses
        owner: Dict[int, int] = {}
        for i, clause in enumerate(clauses):
            for lit in clause:
                owner.setdefault(lit, i)
        while True:
            covered = set(owner.values())
            c1 = next((i for i in range(len(clauses)) if i not in covered), None)
            if c1 is None:
                break
            lit = clauses[c1][0]
            c2 = owner[lit]
            m = len(clauses)
            y, z1, z2 = num_variables + 1, num_variables + 2, num_variables + 3
            num_variables += 3
            clauses[c1][clauses[c1].index(lit)] = z1
            clauses[c2][clauses[c2].index(lit)] = z2
            clauses.extend([[y, z1, -z2], [y, -z1, z2], [lit, -z1, -z2]])
            owner.update({y: m + 1, lit: m + 2, z1: c1, z2: c2, -z1: m + 2, -z2: m})
            logger.debug(f"Covered clause {c1 + 1} through literal {lit}")

        result = NaeFormula(num_variables=num_variables, clauses=tuple(tuple(c) for c in clauses))
        collection = CoveringCollection.of(owner.items())
        logger.info(
            f"Variant A: {formula.num_clauses} -> {result.num_clauses} clauses, "
            f"{formula.num_variables} -> {num_variables} variables"
        )
        return result, collection

    @staticmethod
    def require_variant_a(formula: NaeFormula) -> None:
        if not formula.is_variant_a:
            heavy = next(lit for lit, count in formula.occurrences().items() if count > 2)
            raise InvalidInputError(f"literal {heavy} fills more than two clause slots")

    @staticmethod
    def require_variant_b(formula: NaeFormula) -> None:
        if not formula.is_variant_b:
            raise InvalidInputError(
                "variant B needs positive literals, each in at most four clauses"
            )
