"""Independent oracles used across the test suite.

Everything here recomputes a claim from its definition, by a different
route than the package takes, so agreement is evidence and not an
echo."""
from __future__ import annotations

from gpdalg import AlgebraElement, FiniteGroupoid
from gpdalg.leavitt import Graph, Lasso, SinkPath


def groupoid_axiom_problems(g: FiniteGroupoid) -> list:
    """Check every groupoid axiom directly on the raw tables; returns a
    list of short problem strings, empty when g is a groupoid."""
    problems = []
    n = g.arrow_count
    comp = dict(g.comp)

    for x in range(len(g.objects)):
        e = g.identity_of[x]
        if e is None:
            problems.append(f"no identity at object {x}")
        elif not (g.dom[e] == x == g.cod[e]):
            problems.append(f"identity at object {x} is not a loop there")
    for f in range(n):
        ex = g.identity_of[g.cod[f]]
        ey = g.identity_of[g.dom[f]]
        if ex is not None and comp.get((ex, f)) != f:
            problems.append(f"left identity law fails at arrow {f}")
        if ey is not None and comp.get((f, ey)) != f:
            problems.append(f"right identity law fails at arrow {f}")

    for f in range(n):
        for h in range(n):
            defined = (f, h) in comp
            if defined != (g.dom[f] == g.cod[h]):
                problems.append(f"composability mismatch on ({f}, {h})")
            if defined:
                k = comp[(f, h)]
                if g.dom[k] != g.dom[h] or g.cod[k] != g.cod[f]:
                    problems.append(f"composite of ({f}, {h}) has the wrong span")

    for f in range(n):
        for h in range(n):
            for j in range(n):
                if (h, j) in comp and (f, h) in comp:
                    left = comp.get((comp[(f, h)], j))
                    right = comp.get((f, comp[(h, j)]))
                    if left != right or left is None:
                        problems.append(f"associativity fails on ({f}, {h}, {j})")

    for f in range(n):
        finv = g.inv[f]
        if finv is None:
            problems.append(f"arrow {f} has no inverse")
            continue
        if g.dom[finv] != g.cod[f] or g.cod[finv] != g.dom[f]:
            problems.append(f"inverse of {f} has the wrong span")
            continue
        if comp.get((f, finv)) != g.identity_of[g.cod[f]]:
            problems.append(f"f . f^-1 is not the identity for {f}")
        if comp.get((finv, f)) != g.identity_of[g.dom[f]]:
            problems.append(f"f^-1 . f is not the identity for {f}")
    return problems


def naive_convolution(f1: AlgebraElement, f2: AlgebraElement) -> AlgebraElement:
    """Convolution directly from the displayed formula

        (f1 * f2)(g) = sum over h with dom(h) = dom(g) of f1(g h^-1) f2(h)

    iterating over every arrow g of the groupoid, not over support
    pairs."""
    g = f1.groupoid
    c2 = dict(f2.coeffs)
    items = []
    for a in range(g.arrow_count):
        acc = None
        for h, v2 in c2.items():
            if g.dom[h] != g.dom[a]:
                continue
            gh_inv = g.compose(a, g.inv[h])
            if gh_inv is None:
                continue
            term = f1.coefficient(gh_inv) * v2
            acc = term if acc is None else acc + term
        if acc is not None and not acc.is_zero:
            items.append((a, acc))
    return AlgebraElement.make(g, f1.ring, items)


def paths_to_sinks(g: Graph) -> dict:
    """sink vertex index -> number of finite paths ending there
    (including the empty path), by depth-first enumeration backward."""
    in_edges = [[] for _ in g.vertices]
    for e in range(g.edge_count):
        in_edges[g.dst[e]].append(e)

    def count_into(v, depth):
        if depth > g.edge_count + 1:
            raise RuntimeError("graph is not acyclic")
        total = 1
        for e in in_edges[v]:
            total += count_into(g.src[e], depth + 1)
        return total

    return {v: count_into(v, 0) for v in range(len(g.vertices)) if g.is_sink(v)}


def _unrolled(g: Graph, bp, length: int) -> tuple:
    """First `length` edges of the boundary path as a tuple; sink paths
    are padded with ("stop", sink) markers."""
    out = []
    if isinstance(bp, SinkPath):
        out.extend(bp.edges)
        while len(out) < length:
            out.append(("stop", bp.sink))
        return tuple(out[:length])
    out.extend(bp.spoke)
    n = bp.cycle.length()
    i = bp.entry_pos
    while len(out) < length:
        out.append(bp.cycle.edges[i % n])
        i += 1
    return tuple(out[:length])


def truncation_is_arrow(g: Graph, eta, k: int, gamma) -> bool:
    """Decide tail equivalence with shift k by brute truncation: look
    for drop counts a, b with a - b = k whose dropped words agree on a
    long window."""
    def prefix_len(bp):
        if isinstance(bp, SinkPath):
            return len(bp.edges)
        return len(bp.spoke)

    def period(bp):
        return 1 if isinstance(bp, SinkPath) else bp.cycle.length()

    bound = abs(k) + prefix_len(eta) + prefix_len(gamma) + 2 * (period(eta) + period(gamma)) + 2
    window = prefix_len(eta) + prefix_len(gamma) + 2 * period(eta) * period(gamma) + 2
    word_eta = _unrolled(g, eta, bound + window)
    word_gamma = _unrolled(g, gamma, bound + window)

    def max_drop(bp):
        # a finite path only factors as alpha.delta with |alpha| <= |path|
        return len(bp.edges) if isinstance(bp, SinkPath) else bound

    for a in range(min(bound, max_drop(eta)) + 1):
        b = a - k
        if b < 0 or b > min(bound, max_drop(gamma)):
            continue
        if word_eta[a:a + window] == word_gamma[b:b + window]:
            return True
    return False
