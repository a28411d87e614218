"""The weak order on standard Young tableaux of a fixed size, as an
explicit poset.

Nodes are all tableaux with n cells in a canonical order (shape first, then
row word).  Raw comparabilities are projected from adjacent-transposition
covers of words through the insertion map; reachability is their
reflexive-transitive closure, stored per node as an integer bitmask, and
the cover relation is recovered by transitive reduction.  Antisymmetry of
the closure is a checked fact (see sytkit.verify), not an assumption.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from itertools import permutations as _lex_permutations
from math import factorial

from .report import VerificationReport, stopwatch
from .tableau import (
    Rows,
    all_standard_tableaux,
    check_standard,
    descent_set,
    dominance_leq,
    format_tableau,
    insertion_tableau,
    row_word,
    shape_of,
)

MAX_POSET_N = 9

NodeRef = Rows | int  # tableaux or node ids are accepted interchangeably


def canonical_key(rows: Rows) -> tuple:
    return (shape_of(rows), row_word(rows))


@dataclass
class TableauPoset:
    """Built once, then immutable; safe to share between threads.

    ``reach[a]`` has bit b set iff a <= b (reflexively); ``below`` is the
    transpose.  ``covers`` is the transitive reduction, sorted.
    """

    n: int
    nodes: tuple[Rows, ...]
    covers: tuple[tuple[int, int], ...]
    reach: tuple[int, ...]
    below: tuple[int, ...]
    index: dict[Rows, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.nodes)

    def node_id(self, node: NodeRef) -> int:
        if isinstance(node, int):
            if not 0 <= node < len(self.nodes):
                raise ValueError(f"node id {node} out of range")
            return node
        key = check_standard(node)
        try:
            return self.index[key]
        except KeyError:
            raise ValueError(
                f"not a node of the size-{self.n} poset: {format_tableau(key)}"
            ) from None

    def leq_ids(self, a: int, b: int) -> bool:
        return bool(self.reach[a] >> b & 1)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _edge_chunk(args: tuple[int, int, int]) -> set[tuple[int, int]]:
    """Projected cover edges for one slice of the word enumeration."""
    n, start, stop = args
    nodes = tuple(sorted(all_standard_tableaux(n), key=canonical_key))
    index = {t: i for i, t in enumerate(nodes)}
    edges: set[tuple[int, int]] = set()
    words = islice(_lex_permutations(range(1, n + 1)), start, stop)
    for u in words:
        a = index[insertion_tableau(u)]
        for p in range(n - 1):
            if u[p] < u[p + 1]:
                w = u[:p] + (u[p + 1], u[p]) + u[p + 2:]
                b = index[insertion_tableau(w)]
                if a != b:
                    edges.add((a, b))
    return edges


def build_poset(n: int, jobs: int = 1) -> TableauPoset:
    """Project every adjacent-ascent cover of words and close transitively.

    Deterministic for any enumeration split: edge sets are merged before
    the closure, and nodes are canonically sorted up front.
    """
    if not (1 <= n <= MAX_POSET_N):
        raise ValueError(f"n must be in 1..{MAX_POSET_N}")
    nodes = tuple(sorted(all_standard_tableaux(n), key=canonical_key))
    index = {t: i for i, t in enumerate(nodes)}
    total = factorial(n)
    if jobs <= 1:
        edges = _edge_chunk((n, 0, total))
    else:
        bounds = [total * i // jobs for i in range(jobs + 1)]
        chunks = [(n, bounds[i], bounds[i + 1]) for i in range(jobs)]
        edges = set()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_edge_chunk, chunks):
                edges |= part

    count = len(nodes)
    reach = [1 << i for i in range(count)]
    for a, b in edges:
        reach[a] |= 1 << b
    for k in range(count):
        bit_k = 1 << k
        reach_k = reach[k]
        for i in range(count):
            row = reach[i]
            if row & bit_k and row | reach_k != row:
                reach[i] = row | reach_k

    below = [1 << j for j in range(count)]
    for a in range(count):
        for b in _bits(reach[a] & ~(1 << a)):
            below[b] |= 1 << a

    # every cover is among the projected edges, so testing those for a
    # bypass is a full transitive reduction
    covers = []
    for a, b in sorted(edges):
        gap = reach[a] & below[b] & ~((1 << a) | (1 << b))
        if gap == 0:
            covers.append((a, b))

    return TableauPoset(
        n=n,
        nodes=nodes,
        covers=tuple(covers),
        reach=tuple(reach),
        below=tuple(below),
        index=index,
    )


_POSET_CACHE: dict[int, TableauPoset] = {}


def cached_poset(n: int, jobs: int = 1) -> TableauPoset:
    if n not in _POSET_CACHE:
        _POSET_CACHE[n] = build_poset(n, jobs=jobs)
    return _POSET_CACHE[n]


def leq(p: TableauPoset, s: NodeRef, t: NodeRef) -> bool:
    return p.leq_ids(p.node_id(s), p.node_id(t))


@dataclass
class Interval:
    """Order interval with its induced cover relation."""

    poset: TableauPoset
    bottom: int
    top: int
    members: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]

    def member_tableaux(self) -> tuple[Rows, ...]:
        return tuple(self.poset.nodes[i] for i in self.members)


def induced_covers(
    p: TableauPoset, member_ids: tuple[int, ...] | list[int]
) -> tuple[tuple[int, int], ...]:
    """Hasse edges of the order induced on a node subset.

    Computed within the subset (an induced cover need not be a cover of the
    whole poset).
    """
    members = sorted(p.node_id(m) for m in member_ids)
    mask = 0
    for m in members:
        mask |= 1 << m
    out = []
    for a in members:
        for b in _bits(p.reach[a] & mask & ~(1 << a)):
            gap = p.reach[a] & p.below[b] & mask & ~((1 << a) | (1 << b))
            if gap == 0:
                out.append((a, b))
    return tuple(sorted(out))


def interval(p: TableauPoset, bottom: NodeRef, top: NodeRef) -> Interval:
    lo = p.node_id(bottom)
    hi = p.node_id(top)
    members = tuple(_bits(p.reach[lo] & p.below[hi]))
    return Interval(p, lo, hi, members, induced_covers(p, members))


def _interval_signatures(iv: Interval) -> dict[int, tuple[int, int, int, int]]:
    up_deg = {m: 0 for m in iv.members}
    down_deg = {m: 0 for m in iv.members}
    for a, b in iv.covers:
        up_deg[a] += 1
        down_deg[b] += 1
    mask = 0
    for m in iv.members:
        mask |= 1 << m
    p = iv.poset
    return {
        m: (
            up_deg[m],
            down_deg[m],
            (p.reach[m] & mask).bit_count(),
            (p.below[m] & mask).bit_count(),
        )
        for m in iv.members
    }


def is_isomorphic(a: Interval, b: Interval) -> bool:
    """Order isomorphism test by backtracking with invariant pruning."""
    if len(a.members) != len(b.members):
        return False
    sig_a = _interval_signatures(a)
    sig_b = _interval_signatures(b)
    if sorted(sig_a.values()) != sorted(sig_b.values()):
        return False

    def local_leq(iv: Interval, x: int, y: int) -> bool:
        return iv.poset.leq_ids(x, y)

    # match rare signatures first to fail fast
    freq: dict[tuple, int] = {}
    for sig in sig_a.values():
        freq[sig] = freq.get(sig, 0) + 1
    order = sorted(a.members, key=lambda m: (freq[sig_a[m]], m))
    candidates = {
        m: [x for x in b.members if sig_b[x] == sig_a[m]] for m in order
    }
    assigned: dict[int, int] = {}
    used: set[int] = set()

    def extend(idx: int) -> bool:
        if idx == len(order):
            return True
        x = order[idx]
        for y in candidates[x]:
            if y in used:
                continue
            ok = True
            for px, py in assigned.items():
                if local_leq(a, x, px) != local_leq(b, y, py) or local_leq(
                    a, px, x
                ) != local_leq(b, py, y):
                    ok = False
                    break
            if ok:
                assigned[x] = y
                used.add(y)
                if extend(idx + 1):
                    return True
                del assigned[x]
                used.remove(y)
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# monotone-map checks

def check_monotone_descent(p: TableauPoset) -> VerificationReport:
    """Along every order relation, descent sets only gain elements."""
    masks = []
    for t in p.nodes:
        m = 0
        for i in descent_set(t):
            m |= 1 << i
        masks.append(m)
    checked = 0
    violations = []
    with stopwatch() as sw:
        for a in range(len(p.nodes)):
            for b in _bits(p.reach[a] & ~(1 << a)):
                checked += 1
                if masks[a] & ~masks[b]:
                    violations.append(
                        {
                            "S": format_tableau(p.nodes[a]),
                            "T": format_tableau(p.nodes[b]),
                            "des_S": sorted(descent_set(p.nodes[a])),
                            "des_T": sorted(descent_set(p.nodes[b])),
                        }
                    )
    return VerificationReport(
        "monotone-descent-map", {"n": p.n}, checked, violations, sw.ms
    )


def check_monotone_shape(p: TableauPoset) -> VerificationReport:
    """Shapes change monotonically in dominance along the order.

    The direction is detected on the cover relation first, then asserted on
    every comparable pair; the report names the direction that holds.
    """
    shapes = [shape_of(t) for t in p.nodes]
    with stopwatch() as sw:
        down = all(dominance_leq(shapes[b], shapes[a]) for a, b in p.covers)
        up = all(dominance_leq(shapes[a], shapes[b]) for a, b in p.covers)
        if down:
            direction = "down"
        elif up:
            direction = "up"
        else:
            direction = "none"
        checked = len(p.covers)
        violations = []
        if direction == "none":
            for a, b in p.covers:
                if not dominance_leq(shapes[b], shapes[a]):
                    violations.append(
                        {
                            "S": format_tableau(p.nodes[a]),
                            "T": format_tableau(p.nodes[b]),
                            "sh_S": list(shapes[a]),
                            "sh_T": list(shapes[b]),
                        }
                    )
        else:
            for a in range(len(p.nodes)):
                for b in _bits(p.reach[a] & ~(1 << a)):
                    checked += 1
                    lo, hi = (b, a) if direction == "down" else (a, b)
                    if not dominance_leq(shapes[lo], shapes[hi]):
                        violations.append(
                            {
                                "S": format_tableau(p.nodes[a]),
                                "T": format_tableau(p.nodes[b]),
                                "sh_S": list(shapes[a]),
                                "sh_T": list(shapes[b]),
                            }
                        )
    label = {
        "down": "shape moves down in dominance as tableaux move up",
        "up": "shape moves up in dominance as tableaux move up",
        "none": "no direction holds on the covers",
    }[direction]
    return VerificationReport(
        "monotone-shape-map",
        {"n": p.n},
        checked,
        violations,
        sw.ms,
        details={"direction": direction, "meaning": label},
    )


# ---------------------------------------------------------------------------
# exports

def to_dot(p: TableauPoset) -> str:
    """Hasse diagram in DOT, nodes labeled by tableau text form."""
    lines = [f"digraph weak_order_syt_{p.n} {{", "  rankdir=BT;"]
    for i, t in enumerate(p.nodes):
        lines.append(f'  n{i} [label="{format_tableau(t)}"];')
    for a, b in p.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_json(p: TableauPoset) -> dict:
    return {
        "n": p.n,
        "nodes": [format_tableau(t) for t in p.nodes],
        "covers": [list(edge) for edge in p.covers],
    }
