"""Finite inverse semigroups and their algebras.

An inverse semigroup is a semigroup in which every element s has a
unique pseudo-inverse s* (meaning s s* s = s and s* s s* = s*).  Its
elements form a groupoid: s is an arrow from the idempotent s*s to the
idempotent ss*, with composition the semigroup product restricted to
the pairs where domains match.

The semigroup algebra RS is isomorphic to the algebra of that groupoid
by the base change

    s  |->  sum of [t] over t <= s

where <= is the natural partial order (t <= s iff t = (t t*) s, or
equivalently t = e s for some idempotent e).  The transition matrix is
unitriangular in any linear extension of <=, so the map is a bijection
on bases; this module verifies multiplicativity exhaustively on all
pairs and the unimodularity of the transition matrix.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement, VerificationReport, convolve
from .errors import InternalCheckError, OracleBudgetError, ParseError
from .group_algebra import FiniteGroupTable
from .groupoid import FiniteGroupoid, structured_from_finite, validate
from .linalg import int_det
from .rings import RingDescriptor, RingElement, render_ring_descriptor
from .verdicts import CITE_BLOCK, Verdict, verdicts

ISG_SIZE_LIMIT = 64


@dataclass(frozen=True)
class InverseSemigroup:
    elements: tuple   # names, declaration order
    table: tuple      # table[i][j] = index of elements[i] . elements[j]
    star: tuple       # index -> index of the unique pseudo-inverse

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {name: i for i, name in enumerate(self.elements)}
        )

    @staticmethod
    def from_table(elements, rows) -> "InverseSemigroup":
        """Verify the semigroup and inverse axioms exhaustively.

        rows[i][j] is the index of the product elements[i] . elements[j].
        Raises ValueError naming a witness when associativity fails or
        when some element's pseudo-inverse is missing or not unique."""
        elements = tuple(elements)
        n = len(elements)
        if n == 0:
            raise ValueError("empty inverse semigroup")
        table = tuple(tuple(row) for row in rows)
        if len(table) != n or any(len(row) != n for row in table):
            raise ValueError("multiplication table is not square")
        for row in table:
            for v in row:
                if not 0 <= v < n:
                    raise ValueError(f"table entry {v} out of range")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if table[table[i][j]][k] != table[i][table[j][k]]:
                        raise ValueError(
                            f"associativity fails at "
                            f"({elements[i]}.{elements[j]}).{elements[k]} != "
                            f"{elements[i]}.({elements[j]}.{elements[k]})"
                        )
        star = []
        for i in range(n):
            pseudo = [
                t
                for t in range(n)
                if table[table[i][t]][i] == i and table[table[t][i]][t] == t
            ]
            if len(pseudo) != 1:
                shown = ", ".join(f"'{elements[t]}'" for t in pseudo[:4])
                raise ValueError(
                    f"element '{elements[i]}' has {len(pseudo)} pseudo-inverses"
                    f"{' (' + shown + ')' if pseudo else ''}; "
                    f"not an inverse semigroup"
                )
            star.append(pseudo[0])
        return InverseSemigroup(elements, table, tuple(star))

    @property
    def size(self) -> int:
        return len(self.elements)

    def element_index(self, name: str) -> int:
        return self._index[name]

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def idempotents(self):
        return tuple(i for i in range(self.size) if self.table[i][i] == i)

    def identity_element(self):
        """Index of the two-sided identity, or None."""
        for i in range(self.size):
            if all(
                self.table[i][j] == j and self.table[j][i] == j
                for j in range(self.size)
            ):
                return i
        return None


def parse_isg(text: str) -> InverseSemigroup:
    """Line format:

        elements: a b c
        row a: a b c

    where 'row x:' lists the products x.a x.b x.c in declaration order.
    '#' comments and blank lines allowed.  Structural problems raise
    ParseError; axiom failures raise ValueError from the table check."""
    elements: list = []
    eset: dict = {}
    rows: dict = {}
    pending: list = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            for name in line[len("elements:"):].split():
                if name in eset:
                    raise ParseError(f"element '{name}' declared twice", line=ln)
                eset[name] = len(elements)
                elements.append(name)
        elif line.startswith("row "):
            rest = line[len("row "):]
            if ":" not in rest:
                raise ParseError("row declaration needs ':'", line=ln)
            name, prods = (s.strip() for s in rest.split(":", 1))
            if name not in eset:
                raise ParseError(f"element '{name}' not declared", line=ln)
            if name in rows:
                raise ParseError(f"row for '{name}' declared twice", line=ln)
            entries = prods.split()
            pending.append((ln, name, entries))
            rows[name] = entries
        else:
            raise ParseError(f"unknown directive '{line.split()[0]}'", line=ln)
    if not elements:
        raise ParseError("no elements declared", line=1)
    n = len(elements)
    table = [[0] * n for _ in range(n)]
    seen = set()
    for ln, name, entries in pending:
        if len(entries) != n:
            raise ParseError(
                f"row for '{name}' has {len(entries)} entries, expected {n}",
                line=ln,
            )
        for j, prod in enumerate(entries):
            if prod not in eset:
                raise ParseError(f"element '{prod}' not declared", line=ln)
            table[eset[name]][j] = eset[prod]
        seen.add(name)
    missing = [e for e in elements if e not in seen]
    if missing:
        raise ParseError(f"no row for element '{missing[0]}'", line=1)
    return InverseSemigroup.from_table(elements, table)


def render_isg(s: InverseSemigroup) -> str:
    lines = ["elements: " + " ".join(s.elements)]
    for i, name in enumerate(s.elements):
        lines.append(
            f"row {name}: " + " ".join(s.elements[v] for v in s.table[i])
        )
    return "\n".join(lines) + "\n"


def natural_partial_order(s: InverseSemigroup):
    """below[i][j] is True iff elements[i] <= elements[j].

    Computed two ways (t = (t t*) s, and t = e s for an idempotent e)
    which must agree."""
    n = s.size
    idem = s.idempotents()
    below = []
    for t in range(n):
        tt = s.mul(t, s.star[t])
        row = []
        for x in range(n):
            first = s.mul(tt, x) == t
            second = any(s.mul(e, x) == t for e in idem)
            if first != second:
                raise InternalCheckError(
                    "the two descriptions of the natural partial order disagree"
                )
            row.append(first)
        below.append(tuple(row))
    return tuple(below)


def underlying_groupoid(s: InverseSemigroup) -> FiniteGroupoid:
    """The groupoid with one arrow per element: s runs from s*s to ss*,
    composition is the product on matching pairs.  The result passes
    the exhaustive groupoid validator; a failure would be a bug here,
    not a property of the input."""
    idem = s.idempotents()
    obj_of = {e: k for k, e in enumerate(idem)}
    dom = [obj_of[s.mul(s.star[i], i)] for i in range(s.size)]
    cod = [obj_of[s.mul(i, s.star[i])] for i in range(s.size)]
    identity_of = [e for e in idem]
    comp = {}
    for i in range(s.size):
        for j in range(s.size):
            if dom[i] == cod[j]:
                comp[(i, j)] = s.mul(i, j)
    g = FiniteGroupoid.make(
        [s.elements[e] for e in idem],
        list(s.elements),
        dom,
        cod,
        identity_of,
        comp,
        list(s.star),
    )
    violations = validate(g)
    if violations:
        raise InternalCheckError(
            f"underlying groupoid fails validation: {violations[0].message}"
        )
    return g


def maximal_subgroup(s: InverseSemigroup, e: int):
    """Element indices of the maximal subgroup at the idempotent e,
    with its abstract group table."""
    if s.table[e][e] != e:
        raise ValueError(f"'{s.elements[e]}' is not an idempotent")
    members = [
        i
        for i in range(s.size)
        if s.mul(s.star[i], i) == e and s.mul(i, s.star[i]) == e
    ]
    index = {m: k for k, m in enumerate(members)}
    rows = []
    for a in members:
        row = []
        for b in members:
            prod = s.mul(a, b)
            if prod not in index:
                raise InternalCheckError("maximal subgroup is not closed")
            row.append(index[prod])
        rows.append(row)
    table = FiniteGroupTable.from_table(rows)
    return tuple(members), table


@dataclass(frozen=True)
class IsgIsomorphism:
    semigroup: InverseSemigroup
    ring: RingDescriptor
    groupoid: FiniteGroupoid
    images: tuple          # per element, an AlgebraElement of the groupoid
    transition_det: int    # determinant of the 0/1 order matrix
    report: VerificationReport


def semigroup_algebra_iso(s: InverseSemigroup, ring: RingDescriptor) -> IsgIsomorphism:
    """The base change s |-> sum of [t] over t <= s, with exhaustive
    multiplicativity verification on all ordered pairs."""
    if s.size > ISG_SIZE_LIMIT:
        raise OracleBudgetError(
            f"inverse semigroup has {s.size} elements; "
            f"the pairwise verification budget stops at {ISG_SIZE_LIMIT}"
        )
    g = underlying_groupoid(s)
    below = natural_partial_order(s)
    unit_coeff = RingElement.one(ring)
    images = tuple(
        AlgebraElement.make(
            g,
            ring,
            [(t, unit_coeff) for t in range(s.size) if below[t][i]],
        )
        for i in range(s.size)
    )
    matrix = [[1 if below[t][i] else 0 for t in range(s.size)] for i in range(s.size)]
    det = int_det(matrix)
    if abs(det) != 1:
        raise InternalCheckError(
            f"transition matrix of the natural partial order has determinant "
            f"{det}, expected a unit"
        )
    total = 0
    passed = 0
    failures = []
    for i in range(s.size):
        for j in range(s.size):
            total += 1
            lhs = convolve(images[i], images[j])
            rhs = images[s.mul(i, j)]
            if lhs == rhs:
                passed += 1
            else:
                failures.append(
                    f"image({s.elements[i]}) * image({s.elements[j]}) "
                    f"!= image({s.elements[s.mul(i, j)]})"
                )
    one = s.identity_element()
    if one is not None:
        total += 1
        if images[one] == AlgebraElement.unit(g, ring):
            passed += 1
        else:
            failures.append("image of the identity element is not the unit")
    report = VerificationReport(
        f"semigroup algebra pairs over {render_ring_descriptor(ring)}",
        total,
        passed,
        tuple(failures),
    )
    return IsgIsomorphism(s, ring, g, images, det, report)


def isg_verdicts(s: InverseSemigroup, ring: RingDescriptor) -> Verdict:
    """Chain conditions of RS, read off the underlying groupoid."""
    g = underlying_groupoid(s)
    sg = structured_from_finite(g)
    base = verdicts(sg, ring)
    lines = (
        f"semigroup algebra matches the groupoid algebra of the underlying "
        f"groupoid: {s.size} elements, {len(g.objects)} idempotents, "
        f"unitriangular base change [{CITE_BLOCK}]",
    ) + base.justification
    return Verdict(
        base.noetherian,
        base.artinian,
        base.semisimple,
        base.shape,
        base.shape_string,
        lines,
    )
