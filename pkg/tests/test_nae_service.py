import itertools
import random

import pytest

from diamkit.exceptions import GraphFormatError, InvalidInputError
from diamkit.models import CoveringCollection, NaeFormula


def _satisfiable(formula):
    return any(
        formula.is_satisfied_by(values)
        for values in itertools.product((False, True), repeat=formula.num_variables)
    )


def _random_formula(rng):
    n = rng.randint(1, 4)
    clauses = tuple(
        tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(3))
        for _ in range(rng.randint(1, 4))
    )
    return NaeFormula(num_variables=n, clauses=clauses)


class TestFormats:

    def test_parse(self, nae_service, three_clause_formula):
        text = "# sample\np nae 3 3\n1 2 3 0\n-1 -2 -3 0\n1 -2 -3 0\n"
        assert nae_service.parse_nae(text) == three_clause_formula

    def test_serialize(self, nae_service, single_clause_formula):
        assert nae_service.serialize_nae(single_clause_formula) == "p nae 3 1\n1 2 3 0\n"

    def test_round_trip(self, nae_service, positive_formula):
        text = nae_service.serialize_nae(positive_formula)
        assert nae_service.parse_nae(text) == positive_formula

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "p cnf 3 1\n1 2 3 0\n",
            "p nae 3 1\n1 2 0\n",
            "p nae 3 1\n1 0 2 0\n",
            "p nae 3 2\n1 2 3 0\n",
            "p nae 3 1\n1 2 x 0\n",
        ],
    )
    def test_malformed(self, nae_service, text):
        with pytest.raises(GraphFormatError):
            nae_service.parse_nae(text)

    def test_literal_out_of_range(self, nae_service):
        with pytest.raises(InvalidInputError):
            nae_service.parse_nae("p nae 2 1\n1 2 3 0\n")

    def test_collection(self, nae_service):
        collection = nae_service.parse_collection("pair 1 1\npair -2 2\n")
        assert (1, 0) in collection
        assert (-2, 1) in collection
        assert nae_service.serialize_collection(collection) == "pair 1 1\npair -2 2\n"

    def test_collection_malformed(self, nae_service):
        with pytest.raises(GraphFormatError):
            nae_service.parse_collection("pair 1 0\n")
        with pytest.raises(GraphFormatError):
            nae_service.parse_collection("lit 1 1\n")


class TestFormula:

    def test_variants(self, three_clause_formula, positive_formula):
        assert three_clause_formula.is_variant_a
        assert not three_clause_formula.is_variant_b
        assert positive_formula.is_variant_b
        assert not positive_formula.is_variant_a

    def test_satisfaction(self, single_clause_formula):
        assert single_clause_formula.is_satisfied_by((True, False, False))
        assert not single_clause_formula.is_satisfied_by((True, True, True))

    def test_collection_membership(self, three_clause_formula):
        collection = CoveringCollection.of([(1, 0), (2, 0), (3, 0), (-1, 1), (-2, 1), (-3, 1)])
        assert collection.is_collection_of(three_clause_formula)
        assert collection.gamma(three_clause_formula) == 1
        assert not collection.is_covering(three_clause_formula)
        assert collection.clause_of(-2) == 1

    def test_covering_three_clause(self, three_clause_formula):
        collection = CoveringCollection.of([(1, 2), (2, 0), (3, 0), (-1, 1), (-2, 2), (-3, 1)])
        assert collection.is_covering(three_clause_formula)


class TestVariantA:

    def test_already_covered(self, nae_service, single_clause_formula):
        formula, collection = nae_service.to_variant_a(single_clause_formula)
        assert formula == single_clause_formula
        assert collection.is_covering(formula)

    def test_heavy_literal_is_split(self, nae_service, positive_formula):
        formula, collection = nae_service.to_variant_a(positive_formula)
        assert formula.is_variant_a
        assert collection.is_covering(formula)
        assert formula.clauses[: positive_formula.num_clauses] != positive_formula.clauses

    def test_random_formulas(self, nae_service, oracle_service):
        rng = random.Random(23)
        checked = 0
        for _ in range(200):
            formula = _random_formula(rng)
            result, collection = nae_service.to_variant_a(formula)
            assert result.is_variant_a
            assert collection.is_covering(result)
            if result.num_variables > 15:
                continue
            checked += 1
            assert (oracle_service.nae_brute(result) is not None) == _satisfiable(formula)
        assert checked > 100

    def test_require(self, nae_service, three_clause_formula, positive_formula):
        nae_service.require_variant_a(three_clause_formula)
        nae_service.require_variant_b(positive_formula)
        with pytest.raises(InvalidInputError):
            nae_service.require_variant_a(positive_formula)
        with pytest.raises(InvalidInputError):
            nae_service.require_variant_b(three_clause_formula)
