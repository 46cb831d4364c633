import pytest

from sgideals.core import Semigroup, build_semigroup, isomorphic_fixing_one_zero
from sgideals.corpus import (
    NontrivialUnits,
    NotRightChain,
    all_monoids_with_zero,
    build_adjoined,
    build_chain_x,
    build_delta,
    build_ef,
    build_min_chain,
    build_minimal,
    chain_x_names,
    corpus,
    corpus_entry,
    ef_names,
    enumerate_monoids_with_zero,
    evaluate_expected,
    generator_names,
)
from sgideals.classify import is_right_chain
from sgideals.localize import is_right_p_comparable

from oracles import isomorphic_bruteforce


def test_ef_construction(ef4):
    s = ef4.semigroup
    names = ef4.element_names
    assert s.n == 9 and len(names) == 9
    e, x = names.index("e"), names.index("x")
    assert s.mul(e, x) == x == s.mul(x, e)
    x2, x3 = names.index("x2"), names.index("x3")
    assert s.mul(x2, x3) == s.zero  # degrees add past the truncation
    assert build_ef(2).n == 7
    with pytest.raises(ValueError):
        build_ef(1)


def test_chain_x_and_names():
    c = build_chain_x(4)
    assert c.n == 6 and chain_x_names(4) == ("0", "1", "x", "x2", "x3", "x4")
    assert c.mul(2, 2) == 3  # x * x == x2
    assert c.power(2, 5) == 0
    with pytest.raises(ValueError):
        build_chain_x(0)


def test_min_chain_and_delta():
    m = build_min_chain(3)
    assert m.mul(3, 4) == 3 and m.mul(4, 3) == 3
    d = build_delta(3)
    assert d.mul(2, 2) == 2 and d.mul(2, 3) == d.zero
    assert generator_names(3) == ("0", "1", "x1", "x2", "x3")
    with pytest.raises(ValueError):
        build_delta(1)
    with pytest.raises(ValueError):
        build_min_chain(1)


def test_adjoined_matches_ef():
    for n_pow in range(2, 7):
        adj = build_adjoined(build_chain_x(n_pow))
        ef = build_ef(n_pow)
        assert adj.n == ef.n == n_pow + 5
        assert isomorphic_fixing_one_zero(adj, ef)
    # spot check the canonical-form equality against raw permutation search
    assert isomorphic_bruteforce(build_adjoined(build_chain_x(2)), build_ef(2))


def test_adjoined_properties():
    h = build_chain_x(3)
    s = build_adjoined(h)
    assert not is_right_chain(s)
    assert is_right_p_comparable(s, h.nonunits_mask()).holds


def test_adjoined_rejects_bad_bases():
    with pytest.raises(NotRightChain):
        build_adjoined(build_delta(2))
    c2_with_zero = build_semigroup([[0, 0, 0], [0, 1, 2], [0, 2, 1]], 1, 0)
    assert is_right_chain(c2_with_zero)
    with pytest.raises(NontrivialUnits):
        build_adjoined(c2_with_zero)


def test_minimal():
    m = build_minimal()
    assert m.n == 2 and m.mul(1, 1) == 1


def test_enumeration_counts():
    assert enumerate_monoids_with_zero(2) == 1
    assert enumerate_monoids_with_zero(3) == 3
    assert enumerate_monoids_with_zero(4) == 15
    with pytest.raises(ValueError):
        enumerate_monoids_with_zero(1)


def test_enumeration_no_dedupe_counts_raw_tables():
    assert enumerate_monoids_with_zero(4, dedupe=False) == 25


def test_enumeration_emits_valid_deduped(pool234):
    seen = set()
    for s in pool234:
        assert isinstance(s, Semigroup)
        assert s.one == 1 and s.zero == 0
        form = s.canonical_form()
        assert form not in seen
        seen.add(form)


def test_enumeration_complete_at_3():
    # every 3x3 table with forced 0/1 rows is determined by the one free
    # cell; all three choices are associative and pairwise non-isomorphic
    pool = all_monoids_with_zero(3)
    assert len(pool) == 3
    cells = sorted(s.rows[2][2] for s in pool)
    assert cells == [0, 1, 2]


def test_corpus_registry_and_facts():
    reg = corpus()
    assert set(reg) == {"min2", "chain_x4", "ef4", "min_chain3", "min_chain4", "delta3"}
    for entry in reg.values():
        assert len(entry.element_names) == entry.semigroup.n
        for key, ok, got in evaluate_expected(entry):
            assert ok, (entry.name, key, got)


def test_corpus_entry_lookup():
    assert corpus_entry("ef4").name == "ef4"
    with pytest.raises(KeyError):
        corpus_entry("nope")


def test_ef_names_layout():
    assert ef_names(4)[:5] == ("0", "1", "e", "f", "ef")


def test_enumeration_order_bound():
    from sgideals.corpus import MAX_ENUM_ORDER

    with pytest.raises(ValueError):
        enumerate_monoids_with_zero(MAX_ENUM_ORDER + 1)
