"""Poset construction against an independently coded brute-force oracle,
plus interval, isomorphism, and monotone-map behavior."""

import pytest

from sytkit.knuthclass import knuth_class_words
from sytkit.permutation import inversions_left
from sytkit.tableau import (
    all_standard_tableaux,
    beside,
    evacuate,
    format_tableau,
    over,
    parse_tableau,
    restrict,
    shape_of,
    transpose,
)
from sytkit.weakorder import (
    build_poset,
    cached_poset,
    canonical_key,
    check_monotone_descent,
    check_monotone_shape,
    induced_covers,
    interval,
    is_isomorphic,
    leq,
    poset_to_json,
    to_dot,
)


# --- brute-force oracle -------------------------------------------------------
# Independent route: compare whole classes by inversion containment, close
# with a naive Warshall pass on dict sets, reduce naively.

def oracle_relation(n):
    tabs = sorted(all_standard_tableaux(n), key=canonical_key)
    classes = {t: knuth_class_words(t) for t in tabs}
    invs = {t: [inversions_left(w) for w in sorted(classes[t])] for t in tabs}
    direct = {
        t: {
            s
            for s in tabs
            if any(a <= b for a in invs[t] for b in invs[s])
        }
        for t in tabs
    }
    closure = {t: set(direct[t]) | {t} for t in tabs}
    changed = True
    while changed:
        changed = False
        for t in tabs:
            for mid in list(closure[t]):
                extra = closure[mid] - closure[t]
                if extra:
                    closure[t] |= extra
                    changed = True
    covers = set()
    for a in tabs:
        for b in closure[a]:
            if a == b:
                continue
            if any(c not in (a, b) and c in closure[a] and b in closure[c]
                   for c in tabs):
                continue
            covers.add((a, b))
    return tabs, closure, covers


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_poset_matches_direct_definition_oracle(n):
    p = cached_poset(n)
    tabs, closure, covers = oracle_relation(n)
    assert p.nodes == tuple(tabs)
    for a, ta in enumerate(tabs):
        ups = {tabs[b] for b in range(len(tabs)) if p.leq_ids(a, b)}
        assert ups == closure[ta]
    got_covers = {(p.nodes[a], p.nodes[b]) for a, b in p.covers}
    assert got_covers == covers


# --- golden structure ------------------------------------------------------------

def test_n3_diamond():
    p = cached_poset(3)
    labels = [format_tableau(t) for t in p.nodes]
    assert labels == ["1/2/3", "1,3/2", "1,2/3", "1,2,3"]
    assert p.covers == ((1, 0), (2, 0), (3, 1), (3, 2))
    assert leq(p, parse_tableau("1,2,3"), parse_tableau("1/2/3"))
    assert not leq(p, parse_tableau("1,3/2"), parse_tableau("1,2/3"))
    assert not leq(p, parse_tableau("1,2/3"), parse_tableau("1,3/2"))


def test_node_counts():
    assert [len(cached_poset(n).nodes) for n in range(2, 6)] == [2, 4, 10, 26]


def test_build_poset_guards():
    with pytest.raises(ValueError):
        build_poset(0)
    with pytest.raises(ValueError):
        build_poset(10)


def test_parallel_build_is_identical():
    serial = build_poset(4, jobs=1)
    parallel = build_poset(4, jobs=2)
    assert serial.nodes == parallel.nodes
    assert serial.covers == parallel.covers
    assert serial.reach == parallel.reach


def test_closure_is_needed_at_n5():
    p = cached_poset(5)
    lower = parse_tableau("1,2,5/3,4")
    upper = parse_tableau("1,4/2,5/3")
    assert leq(p, lower, upper)
    # no single pair of class words certifies the relation directly
    lo_invs = [inversions_left(w) for w in knuth_class_words(lower)]
    up_invs = [inversions_left(w) for w in knuth_class_words(upper)]
    assert not any(a <= b for a in lo_invs for b in up_invs)


def test_leq_rejects_foreign_nodes():
    p = cached_poset(3)
    with pytest.raises(ValueError):
        leq(p, parse_tableau("1,2"), parse_tableau("1/2"))


# --- intervals and induced covers ---------------------------------------------------

def test_interval_golden_four_members():
    p = cached_poset(5)
    left = parse_tableau("1,2/3")
    right = parse_tableau("1/2")
    iv = interval(p, beside(left, right), over(left, right))
    labels = sorted(format_tableau(t) for t in iv.member_tableaux())
    assert labels == ["1,2,4/3,5", "1,2,4/3/5", "1,2/3,4/5", "1,2/3/4/5"]
    assert iv.bottom in iv.members and iv.top in iv.members


def test_interval_of_equal_endpoints():
    p = cached_poset(4)
    t = parse_tableau("1,2/3,4")
    iv = interval(p, t, t)
    assert iv.members == (p.node_id(t),)
    assert iv.covers == ()


def test_induced_covers_differ_from_restriction_of_global_covers():
    # on a 3-chain {a < b < c}, the subset {a, c} has induced cover (a, c)
    p = cached_poset(3)
    bottom = p.node_id(parse_tableau("1,2,3"))
    top = p.node_id(parse_tableau("1/2/3"))
    assert (bottom, top) not in p.covers
    assert induced_covers(p, [bottom, top]) == ((bottom, top),)


def test_induced_covers_contain_known_failure_pair():
    p = cached_poset(6)
    sub = parse_tableau("1,2,4/3")
    members = [
        i for i, t in enumerate(p.nodes)
        if shape_of(t)[0] >= 3 and _inner(t, 4) == sub
    ]
    pair = (
        p.node_id(parse_tableau("1,2,4/3,5,6")),
        p.node_id(parse_tableau("1,2,4/3,6/5")),
    )
    assert pair in induced_covers(p, members)


def _inner(tab, k):
    from sytkit.tableau import inner_tableau

    return inner_tableau(tab, k)


# --- isomorphism ------------------------------------------------------------------------

def test_isomorphic_reflexive_and_size_check():
    p = cached_poset(5)
    left = parse_tableau("1,2/3")
    right = parse_tableau("1/2")
    iv = interval(p, beside(left, right), over(left, right))
    assert is_isomorphic(iv, iv)
    smaller = interval(p, p.nodes[0], p.nodes[0])
    assert not is_isomorphic(iv, smaller)


def test_same_shapes_give_isomorphic_intervals_n5():
    p = cached_poset(5)
    pairs = []
    for left in (parse_tableau("1,2/3"), parse_tableau("1,3/2")):
        iv = interval(p, beside(left, parse_tableau("1/2")),
                      over(left, parse_tableau("1/2")))
        pairs.append(iv)
    assert is_isomorphic(pairs[0], pairs[1])


def test_non_isomorphic_intervals_detected():
    p = cached_poset(3)
    chain = interval(p, p.node_id(parse_tableau("1,2,3")),
                     p.node_id(parse_tableau("1,3/2")))
    diamond = interval(p, p.node_id(parse_tableau("1,2,3")),
                       p.node_id(parse_tableau("1/2/3")))
    assert not is_isomorphic(chain, diamond)


# --- monotone maps -------------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_monotone_descent(n):
    report = check_monotone_descent(cached_poset(n))
    assert report.passed
    assert report.checked > 0


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_monotone_shape_direction_down(n):
    report = check_monotone_shape(cached_poset(n))
    assert report.passed
    assert report.details["direction"] == "down"


def test_restriction_is_order_monotone_n5():
    p = cached_poset(5)
    small = {m: cached_poset(m) for m in range(2, 6)}
    for a in range(len(p.nodes)):
        for b in range(len(p.nodes)):
            if a == b or not p.leq_ids(a, b):
                continue
            for i in range(1, 5):
                for j in range(i + 1, 6):
                    q = small[j - i + 1]
                    assert leq(q, restrict(p.nodes[a], i, j),
                               restrict(p.nodes[b], i, j))


def test_evac_transpose_monotone_n5():
    p = cached_poset(5)
    for a in range(len(p.nodes)):
        for b in range(len(p.nodes)):
            if a == b or not p.leq_ids(a, b):
                continue
            assert leq(p, evacuate(p.nodes[a]), evacuate(p.nodes[b]))
            assert leq(p, transpose(p.nodes[b]), transpose(p.nodes[a]))


# --- exports ----------------------------------------------------------------------------------

EXPECTED_DOT_3 = """digraph weak_order_syt_3 {
  rankdir=BT;
  n0 [label="1/2/3"];
  n1 [label="1,3/2"];
  n2 [label="1,2/3"];
  n3 [label="1,2,3"];
  n1 -> n0;
  n2 -> n0;
  n3 -> n1;
  n3 -> n2;
}
"""


def test_dot_export_golden():
    assert to_dot(cached_poset(3)) == EXPECTED_DOT_3


def test_json_export():
    got = poset_to_json(cached_poset(3))
    assert got["n"] == 3
    assert got["nodes"] == ["1/2/3", "1,3/2", "1,2/3", "1,2,3"]
    assert got["covers"] == [[1, 0], [2, 0], [3, 1], [3, 2]]


def test_exports_are_deterministic():
    a = to_dot(build_poset(4))
    b = to_dot(build_poset(4))
    assert a == b
