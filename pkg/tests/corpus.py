"""Shared example inventory: groupoids and graphs the whole test suite
runs against.  Randomized entries use fixed seeds so every run sees the
same corpus."""
from __future__ import annotations

import random
from itertools import permutations

from gpdalg.constructions import (
    action_groupoid,
    cyclic_table,
    disjoint_union,
    group_groupoid,
    klein_table,
    pair_groupoid,
    product_with_group,
    symmetric_table,
)
from gpdalg.leavitt import Graph


def groupoid_corpus():
    """List of (name, FiniteGroupoid); every entry passes validate()."""
    out = []
    for n in (2, 3, 4):
        out.append((f"pair{n}", pair_groupoid([f"x{i}" for i in range(n)])))
    tables = [(f"Z{n}", cyclic_table(n)) for n in range(1, 7)]
    tables.append(("V4", klein_table()))
    tables.append(("S3", symmetric_table(3)))
    for name, t in tables:
        out.append((name, group_groupoid(t)))
    pair2 = pair_groupoid(["x", "y"])
    pair3 = pair_groupoid(["x", "y", "z"])
    out.append(("pair2_Z2", product_with_group(pair2, cyclic_table(2))))
    out.append(("pair2_Z3", product_with_group(pair2, cyclic_table(3))))
    out.append(("pair3_Z2", product_with_group(pair3, cyclic_table(2))))
    out.append(("pair2_V4", product_with_group(pair2, klein_table())))
    out.append(("pair2_S3", product_with_group(pair2, symmetric_table(3))))
    out.append(("pair2_u_Z2", disjoint_union(pair2, group_groupoid(cyclic_table(2)))))
    out.append(("Z3_u_pair3", disjoint_union(group_groupoid(cyclic_table(3)), pair3)))
    out.append(("pair2_u_pair3", disjoint_union(pair2, pair3)))
    out.append((
        "pair2Z2_u_Z4",
        disjoint_union(
            product_with_group(pair2, cyclic_table(2)),
            group_groupoid(cyclic_table(4)),
        ),
    ))
    out.append(("act_cycle3", action_groupoid([(1, 2, 0)], 3)))
    out.append(("act_swap3", action_groupoid([(1, 0, 2)], 3)))
    out.append(("act_S3", action_groupoid([(1, 2, 0), (1, 0, 2)], 3)))
    out.append(("act_Z4", action_groupoid([(1, 2, 3, 0)], 4)))
    out.append(("act_V4", action_groupoid([(1, 0, 3, 2), (2, 3, 0, 1)], 4)))
    rng = random.Random(20260815)
    all_perms = list(permutations(range(4)))
    made = 0
    while made < 3:
        gens = [rng.choice(all_perms) for _ in range(rng.randint(1, 2))]
        g = action_groupoid(gens, 4)
        if g.arrow_count <= 30:
            out.append((f"act_rand{made}", g))
            made += 1
    return out


def _graph(vertices, edges):
    return Graph.make(vertices, edges)


def graph_corpus():
    """List of (name, Graph, expect_finite_boundary)."""
    out = []
    for n in range(1, 6):
        vs = [f"v{i}" for i in range(n)]
        es = [(f"e{i}", f"v{i}", f"v{i+1}") for i in range(n - 1)]
        out.append((f"a{n}", _graph(vs, es), True))
    out.append(("loop", _graph(["v"], [("e", "v", "v")]), True))
    out.append(("loop_spoke", _graph(["v", "w"], [("e", "v", "v"), ("f", "w", "v")]), True))
    out.append((
        "loop_spoke2",
        _graph(["v", "w", "u"], [("e", "v", "v"), ("f", "w", "v"), ("g", "u", "w")]),
        True,
    ))
    out.append((
        "c3",
        _graph(["a", "b", "c"], [("x", "a", "b"), ("y", "b", "c"), ("z", "c", "a")]),
        True,
    ))
    out.append((
        "c4",
        _graph(
            ["a", "b", "c", "d"],
            [("x", "a", "b"), ("y", "b", "c"), ("z", "c", "d"), ("w", "d", "a")],
        ),
        True,
    ))
    out.append((
        "c3_spoke",
        _graph(
            ["a", "b", "c", "p"],
            [("x", "a", "b"), ("y", "b", "c"), ("z", "c", "a"), ("s", "p", "a")],
        ),
        True,
    ))
    out.append((
        "two_loops",
        _graph(["v", "w"], [("e", "v", "v"), ("f", "w", "w")]),
        True,
    ))
    out.append((
        "loop_u_a2",
        _graph(["v", "p", "q"], [("e", "v", "v"), ("f", "p", "q")]),
        True,
    ))
    out.append((
        "tree7",
        _graph(
            ["r", "a", "b", "s1", "s2", "s3", "s4"],
            [
                ("ea", "r", "a"), ("eb", "r", "b"),
                ("e1", "a", "s1"), ("e2", "a", "s2"),
                ("e3", "b", "s3"), ("e4", "b", "s4"),
            ],
        ),
        True,
    ))
    out.append((
        "star3",
        _graph(
            ["r", "s1", "s2", "s3"],
            [("e1", "r", "s1"), ("e2", "r", "s2"), ("e3", "r", "s3")],
        ),
        True,
    ))
    out.append((
        "parallel2",
        _graph(["u", "v"], [("e1", "u", "v"), ("e2", "u", "v")]),
        True,
    ))
    out.append(("rose2", _graph(["v"], [("e", "v", "v"), ("f", "v", "v")]), False))
    out.append((
        "c3_exit",
        _graph(
            ["a", "b", "c", "d"],
            [("x", "a", "b"), ("y", "b", "c"), ("z", "c", "a"), ("out", "b", "d")],
        ),
        False,
    ))
    out.append((
        "rose2_u_a2",
        _graph(
            ["v", "p", "q"],
            [("e", "v", "v"), ("f", "v", "v"), ("g", "p", "q")],
        ),
        False,
    ))
    out.append((
        "shared_vertex_cycles",
        _graph(
            ["a", "b", "c"],
            [("x", "a", "b"), ("y", "b", "a"), ("z", "a", "c"), ("w", "c", "a")],
        ),
        False,
    ))
    return out
