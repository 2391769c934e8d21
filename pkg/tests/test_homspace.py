import itertools

import pytest

from oracles import sympy_rank

from ksbim.bimodule import counit, identity_morphism, morphism_compose, right_mul_matrix, unit
from ksbim.errors import BudgetExceeded, ShapeMismatch
from ksbim.homspace import (
    PRIMES,
    HomRankReport,
    _commutant_rows,
    _specialize_matrix,
    bs_square_idempotents,
    generate_hom,
    hom_rank_predicted,
    hom_rank_specialized,
    hom_to_twisted_rank,
    span_rank,
    specialization_point,
    specialized_rank,
    subsequence_products,
)
from ksbim.laurent import Specializer, monomial
from ksbim.linalg import nullity, rank


def test_subsequence_products(a1, a2):
    s = a1.simple(0)
    assert subsequence_products(a1, (0, 0)) == {a1.identity: 2, s: 2}
    assert subsequence_products(a1, ()) == {a1.identity: 1}
    m = subsequence_products(a2, (0, 1))
    assert m == {a2.identity: 1, a2.simple(0): 1, a2.simple(1): 1, a2.element((0, 1)): 1}
    assert sum(subsequence_products(a2, (0, 1, 0, 1)).values()) == 16


@pytest.mark.parametrize("label, x, y, expected", [
    ("A1", (0,), (0,), 2),
    ("A1", (), (0,), 1),
    ("A1", (0, 0), (0, 0), 8),
    ("A2", (0, 1), (1, 0), 3),
    ("A2", (0, 1, 0), (0, 1, 0), 12),
])
def test_predicted(label, x, y, expected):
    from ksbim.root_datum import build_root_datum

    assert hom_rank_predicted(build_root_datum(label), x, y) == expected


def test_prediction_symmetric(datum):
    words = [w for n in range(4) for w in itertools.product(range(datum.rank), repeat=n)]
    for x in words:
        for y in words:
            assert hom_rank_predicted(datum, x, y) == hom_rank_predicted(datum, y, x)


def test_prediction_for_distinct_products(a2):
    # all 2^n subsequence products of (1,2) are distinct
    assert hom_rank_predicted(a2, (0, 1), (0, 1)) == 4


@pytest.mark.parametrize("label, x, y, expected", [
    ("A1", (0,), (0,), 2),
    ("A1", (), (), 1),
    ("A2", (0, 1), (1, 0), 3),
    ("B2", (0, 1), (0, 1), 4),
])
def test_specialized_examples(label, x, y, expected):
    from ksbim.root_datum import build_root_datum

    report = hom_rank_specialized(build_root_datum(label), x, y, seed=0, trials=3)
    assert report.predicted == expected
    assert [n for _, n in report.computed] == [expected] * 3
    assert report.agreed


def test_balanced_generators_agree(datum):
    for x, y in [((0,), (0,)), ((), (0,)), ((0, datum.rank - 1), (datum.rank - 1, 0))]:
        ring = hom_rank_specialized(datum, x, y, seed=1)
        balanced = hom_rank_specialized(datum, x, y, seed=1, generators="balanced")
        assert ring.computed == balanced.computed


def test_budget(a1):
    with pytest.raises(BudgetExceeded):
        hom_rank_specialized(a1, (0, 0, 0, 0), (0, 0, 0))
    assert hom_rank_specialized(a1, (0, 0, 0, 0), (0, 0, 0), budget=7, trials=1).agreed


def test_commutant_nullity_matches_sympy(a2):
    point, _ = specialization_point(a2, 5)
    spec = Specializer(point)
    x, y = (0, 1), (1,)
    gens = [monomial(a2.fundamental_weight(i), 1) for i in range(2)]
    a = [_specialize_matrix(spec, right_mul_matrix(a2, x, r)) for r in gens]
    b = [_specialize_matrix(spec, right_mul_matrix(a2, y, r)) for r in gens]
    rows = _commutant_rows(a, b, 4, 2)
    assert rank(rows) == sympy_rank(rows)
    assert nullity(rows, 8) == 8 - sympy_rank(rows)


def test_specialization_point(datum):
    p1, _ = specialization_point(datum, 42)
    p2, _ = specialization_point(datum, 42)
    assert p1 == p2
    assert len(set(p1)) == datum.rank and set(p1) <= set(PRIMES)


def test_report_json(a2):
    report = hom_rank_specialized(a2, (0, 1), (1, 0), seed=3, trials=3)
    data = report.to_json()
    assert set(data) == {"x", "y", "predicted", "trials", "agreed"}
    assert data["x"] == [1, 2] and data["y"] == [2, 1]
    assert [t["seed"] for t in data["trials"]] == [3000, 3001, 3002]
    again = HomRankReport.from_json(data)
    assert again.to_json() == data


def test_report_agreement_flag():
    r = HomRankReport((0,), (0,), 2, [(0, 2), (1, 3)])
    assert not r.agreed
    assert not HomRankReport((), (), 1).agreed


def test_twisted_ranks(datum):
    for w in datum:
        assert hom_to_twisted_rank(datum, w) == (1 if w.is_identity() else 0)


def test_generate_hom_examples(a1):
    found = generate_hom(a1, (0,), (0,), 2)
    ident = identity_morphism(a1, (0,))
    uc = morphism_compose(unit(a1, 0), counit(a1, 0))
    assert ident in found and uc in found and ident != uc
    assert unit(a1, 0) in generate_hom(a1, (), (0,), 1)
    ends = generate_hom(a1, (), (), 2)
    assert identity_morphism(a1, ()) in ends
    cu = morphism_compose(counit(a1, 0), unit(a1, 0))
    assert cu.matrix == ((1 - monomial((-2,)),),)
    assert cu in ends


def test_generate_hom_guard(a2):
    import ksbim.homspace as hs

    old = hs.MAX_GENERATED
    hs.MAX_GENERATED = 10
    try:
        with pytest.raises(BudgetExceeded):
            generate_hom(a2, (0, 1), (0, 1), 3)
    finally:
        hs.MAX_GENERATED = old


def test_span_rank(a1):
    ident = identity_morphism(a1, (0,))
    uc = morphism_compose(unit(a1, 0), counit(a1, 0))
    assert span_rank(a1, [ident]) == 1
    assert span_rank(a1, [ident, ident]) == 1
    assert span_rank(a1, [ident, uc]) == 2
    assert span_rank(a1, []) == 0
    with pytest.raises(ShapeMismatch):
        span_rank(a1, [ident, identity_morphism(a1, ())])


@pytest.mark.parametrize("x, y", [((0,), (0,)), ((), (0,)), ((0, 0), (0,))])
def test_generated_span_saturates(a1, x, y):
    ms = generate_hom(a1, x, y, 4)
    assert span_rank(a1, ms) == hom_rank_predicted(a1, x, y)


def test_idempotents(a1, a2):
    for d in (a1, a2):
        for s in range(d.rank):
            e, c = bs_square_idempotents(d, s)
            assert morphism_compose(e, e) == e
            assert morphism_compose(c, c) == c
            assert morphism_compose(e, c).is_zero() and morphism_compose(c, e).is_zero()
            assert e + c == identity_morphism(d, (s, s))
            assert specialized_rank(d, e) == 2 and specialized_rank(d, c) == 2


def test_empty_hom_rank_is_one(datum):
    report = hom_rank_specialized(datum, (), (), trials=3)
    assert [n for _, n in report.computed] == [1, 1, 1]
