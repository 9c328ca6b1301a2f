"""Finite groupoids given by explicit arrow tables.

Conventions used throughout the package:

  * compose(f, g) means "f after g" and is defined exactly when
    dom(f) = cod(g); the composite runs dom(g) -> cod(f).
  * parse accepts structurally well-formed input (every referenced name
    declared, composition lines only for composable pairs) and defers
    all axioms to validate(), which checks them exhaustively and
    returns every violation with a witness.
  * orbits and frames are deterministic: the basepoint of an orbit is
    its lexicographically least object, connecting arrows come from a
    breadth-first search that scans arrows in lexicographic id order,
    and matrix positions follow the sorted member list.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .group_algebra import FiniteGroupTable, IntegerGroup

# file format directives
_OBJECTS = "objects:"


@dataclass(frozen=True)
class FiniteGroupoid:
    objects: tuple          # object names, declaration order
    arrows: tuple           # arrow names, declaration order
    dom: tuple              # arrow index -> object index
    cod: tuple
    identity_of: tuple      # object index -> arrow index or None
    comp: tuple             # sorted tuple of ((f, g), f_after_g)
    inv: tuple              # arrow index -> arrow index or None

    def __post_init__(self):
        object.__setattr__(self, "_comp_map", dict(self.comp))
        object.__setattr__(
            self, "_obj_index", {name: i for i, name in enumerate(self.objects)}
        )
        object.__setattr__(
            self, "_arrow_index", {name: i for i, name in enumerate(self.arrows)}
        )

    @staticmethod
    def make(objects, arrows, dom, cod, identity_of, comp, inv) -> "FiniteGroupoid":
        return FiniteGroupoid(
            tuple(objects),
            tuple(arrows),
            tuple(dom),
            tuple(cod),
            tuple(identity_of),
            tuple(sorted(dict(comp).items())),
            tuple(inv),
        )

    def object_index(self, name: str) -> int:
        return self._obj_index[name]

    def arrow_index(self, name: str) -> int:
        return self._arrow_index[name]

    def compose(self, f: int, g: int):
        """Index of f after g, or None when no entry is recorded."""
        return self._comp_map.get((f, g))

    def composable(self, f: int, g: int) -> bool:
        return self.dom[f] == self.cod[g]

    def identity_arrows(self):
        return tuple(a for a in self.identity_of if a is not None)

    @property
    def arrow_count(self) -> int:
        return len(self.arrows)


def parse_groupoid(text: str) -> FiniteGroupoid:
    """Parse the line format:

        objects: a b
        arrow f : a -> b
        identity a = id_a
        compose f g = h
        inverse f = g

    '#' starts a comment; blank lines are skipped.
    """
    objects: list = []
    obj_set: dict = {}
    arrows: list = []
    arr_set: dict = {}
    dom: list = []
    cod: list = []
    identity_decl: dict = {}
    comp: dict = {}
    inv: dict = {}

    def need_object(name, ln):
        if name not in obj_set:
            raise ParseError(f"object '{name}' not declared", line=ln)
        return obj_set[name]

    def need_arrow(name, ln):
        if name not in arr_set:
            raise ParseError(f"arrow '{name}' not declared", line=ln)
        return arr_set[name]

    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith(_OBJECTS):
            for name in line[len(_OBJECTS):].split():
                if name in obj_set:
                    raise ParseError(f"object '{name}' declared twice", line=ln)
                obj_set[name] = len(objects)
                objects.append(name)
            continue
        parts = line.split()
        if parts[0] == "arrow":
            # arrow NAME : SRC -> DST
            rest = line[len("arrow"):].strip()
            if ":" not in rest:
                raise ParseError("arrow declaration needs ':'", line=ln)
            name, spanspec = (s.strip() for s in rest.split(":", 1))
            if "->" not in spanspec:
                raise ParseError("arrow declaration needs '->'", line=ln)
            src, dst = (s.strip() for s in spanspec.split("->", 1))
            if not name or not src or not dst:
                raise ParseError("malformed arrow declaration", line=ln)
            if name in arr_set:
                raise ParseError(f"arrow '{name}' declared twice", line=ln)
            arr_set[name] = len(arrows)
            arrows.append(name)
            dom.append(need_object(src, ln))
            cod.append(need_object(dst, ln))
        elif parts[0] == "identity":
            # identity OBJ = ARROW
            if len(parts) != 4 or parts[2] != "=":
                raise ParseError("expected: identity OBJ = ARROW", line=ln)
            x = need_object(parts[1], ln)
            if x in identity_decl:
                raise ParseError(f"identity for '{parts[1]}' declared twice", line=ln)
            identity_decl[x] = need_arrow(parts[3], ln)
        elif parts[0] == "compose":
            # compose F G = H
            if len(parts) != 5 or parts[3] != "=":
                raise ParseError("expected: compose F G = H", line=ln)
            f = need_arrow(parts[1], ln)
            g = need_arrow(parts[2], ln)
            h = need_arrow(parts[4], ln)
            if dom[f] != cod[g]:
                raise ParseError(
                    f"'{parts[1]}' and '{parts[2]}' are not composable: "
                    f"dom({parts[1]}) = {objects[dom[f]]} but "
                    f"cod({parts[2]}) = {objects[cod[g]]}",
                    line=ln,
                )
            if (f, g) in comp:
                raise ParseError(f"compose {parts[1]} {parts[2]} declared twice", line=ln)
            comp[(f, g)] = h
        elif parts[0] == "inverse":
            # inverse F = G
            if len(parts) != 4 or parts[2] != "=":
                raise ParseError("expected: inverse F = G", line=ln)
            f = need_arrow(parts[1], ln)
            if f in inv:
                raise ParseError(f"inverse of '{parts[1]}' declared twice", line=ln)
            inv[f] = need_arrow(parts[3], ln)
        else:
            raise ParseError(f"unknown directive '{parts[0]}'", line=ln)

    if not objects:
        raise ParseError("no objects declared", line=1)
    identity_of = tuple(identity_decl.get(x) for x in range(len(objects)))
    inv_total = tuple(inv.get(a) for a in range(len(arrows)))
    return FiniteGroupoid.make(objects, arrows, dom, cod, identity_of, comp, inv_total)


def render_groupoid(g: FiniteGroupoid) -> str:
    """Text form accepted back by parse_groupoid, deterministic."""
    lines = ["objects: " + " ".join(g.objects)]
    for a, name in enumerate(g.arrows):
        lines.append(f"arrow {name} : {g.objects[g.dom[a]]} -> {g.objects[g.cod[a]]}")
    for x, a in enumerate(g.identity_of):
        if a is not None:
            lines.append(f"identity {g.objects[x]} = {g.arrows[a]}")
    for a, b in enumerate(g.inv):
        if b is not None:
            lines.append(f"inverse {g.arrows[a]} = {g.arrows[b]}")
    for (f, h), k in g.comp:
        lines.append(f"compose {g.arrows[f]} {g.arrows[h]} = {g.arrows[k]}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple
    message: str

    def __str__(self):
        return self.message


def validate(g: FiniteGroupoid) -> list:
    """Exhaustively check the groupoid axioms.

    Covers: identities present and lawful, composition total on
    composable pairs and only on them, dom/cod coherence, associativity
    on every composable triple, inverses total and two-sided.  Returns
    all violations, deterministically ordered; empty list means valid.
    """
    out: list = []
    arrows = range(g.arrow_count)

    def name(a):
        return g.arrows[a]

    for x, obj in enumerate(g.objects):
        e = g.identity_of[x]
        if e is None:
            out.append(Violation("identity-missing", (obj,), f"object '{obj}' has no identity arrow"))
            continue
        if g.dom[e] != x or g.cod[e] != x:
            out.append(Violation(
                "identity-span", (obj, name(e)),
                f"identity arrow '{name(e)}' of '{obj}' is not a loop at '{obj}'",
            ))

    for (f, h), k in g.comp:
        if not g.composable(f, h):
            out.append(Violation(
                "composition-domain", (name(f), name(h)),
                f"composition recorded for non-composable pair ({name(f)}, {name(h)})",
            ))
            continue
        if g.dom[k] != g.dom[h] or g.cod[k] != g.cod[f]:
            out.append(Violation(
                "composition-span", (name(f), name(h), name(k)),
                f"compose {name(f)} {name(h)} = {name(k)} breaks dom/cod coherence",
            ))

    for f in arrows:
        for h in arrows:
            if g.composable(f, h) and g.compose(f, h) is None:
                out.append(Violation(
                    "composition-missing", (name(f), name(h)),
                    f"no composition declared for composable pair ({name(f)}, {name(h)})",
                ))

    for x in range(len(g.objects)):
        e = g.identity_of[x]
        if e is None:
            continue
        for f in arrows:
            if g.dom[f] == x:
                got = g.compose(f, e)
                if got is not None and got != f:
                    out.append(Violation(
                        "identity-law", (name(f), name(e)),
                        f"{name(f)} after {name(e)} is {name(got)}, expected {name(f)}",
                    ))
            if g.cod[f] == x:
                got = g.compose(e, f)
                if got is not None and got != f:
                    out.append(Violation(
                        "identity-law", (name(e), name(f)),
                        f"{name(e)} after {name(f)} is {name(got)}, expected {name(f)}",
                    ))

    for f in arrows:
        for h in arrows:
            if not g.composable(f, h):
                continue
            fh = g.compose(f, h)
            if fh is None:
                continue
            for k in arrows:
                if not g.composable(h, k):
                    continue
                hk = g.compose(h, k)
                if hk is None:
                    continue
                left = g.compose(fh, k)
                right = g.compose(f, hk)
                if left is not None and right is not None and left != right:
                    out.append(Violation(
                        "associativity", (name(f), name(h), name(k)),
                        f"associativity fails on ({name(f)}, {name(h)}, {name(k)}): "
                        f"({name(f)}{name(h)}){name(k)} = {name(left)} but "
                        f"{name(f)}({name(h)}{name(k)}) = {name(right)}",
                    ))

    for f in arrows:
        fi = g.inv[f]
        if fi is None:
            out.append(Violation("inverse-missing", (name(f),), f"arrow '{name(f)}' has no inverse"))
            continue
        if g.dom[fi] != g.cod[f] or g.cod[fi] != g.dom[f]:
            out.append(Violation(
                "inverse-span", (name(f), name(fi)),
                f"inverse of '{name(f)}' has the wrong endpoints",
            ))
            continue
        e_dom = g.identity_of[g.dom[f]]
        e_cod = g.identity_of[g.cod[f]]
        if e_dom is not None and g.compose(fi, f) not in (None, e_dom):
            out.append(Violation(
                "inverse-law", (name(f),),
                f"'{name(fi)}' after '{name(f)}' is not the identity at dom",
            ))
        if e_cod is not None and g.compose(f, fi) not in (None, e_cod):
            out.append(Violation(
                "inverse-law", (name(f),),
                f"'{name(f)}' after '{name(fi)}' is not the identity at cod",
            ))
    return out


@dataclass(frozen=True)
class Orbit:
    """One connected component with its frame.

    members are sorted object indices (matrix order); basepoint is
    members[0]; connecting[k] is an arrow basepoint -> members[k], with
    the identity at the basepoint in position 0.
    """

    members: tuple
    connecting: tuple


def orbits(g: FiniteGroupoid) -> list:
    """Connected components with deterministic frames.  Requires a
    groupoid that passed validate()."""
    n_obj = len(g.objects)
    # arrows scanned in lexicographic name order makes the BFS canonical
    order = sorted(range(g.arrow_count), key=lambda a: g.arrows[a])
    out_arrows: list = [[] for _ in range(n_obj)]
    for a in order:
        out_arrows[g.dom[a]].append(a)

    seen = [False] * n_obj
    result = []
    for start in sorted(range(n_obj), key=lambda x: g.objects[x]):
        if seen[start]:
            continue
        base = start
        connecting = {base: g.identity_of[base]}
        seen[base] = True
        queue = [base]
        while queue:
            y = queue.pop(0)
            for a in out_arrows[y]:
                z = g.cod[a]
                if not seen[z]:
                    seen[z] = True
                    connecting[z] = g.compose(a, connecting[y])
                    queue.append(z)
        members = tuple(sorted(connecting, key=lambda x: g.objects[x]))
        result.append(Orbit(members, tuple(connecting[m] for m in members)))
    return result


@dataclass(frozen=True)
class IsotropyGroup:
    """Loops at one object, packaged as a verified group table."""

    object_index: int
    arrows: tuple           # loop arrow indices, sorted by arrow name
    table: FiniteGroupTable


def isotropy(g: FiniteGroupoid, x: int) -> IsotropyGroup:
    loops = sorted(
        (a for a in range(g.arrow_count) if g.dom[a] == x and g.cod[a] == x),
        key=lambda a: g.arrows[a],
    )
    pos = {a: i for i, a in enumerate(loops)}
    rows = []
    for a in loops:
        row = []
        for b in loops:
            c = g.compose(a, b)
            if c is None or c not in pos:
                raise ValueError(
                    f"loops at '{g.objects[x]}' are not closed under composition"
                )
            row.append(pos[c])
        rows.append(row)
    table = FiniteGroupTable.from_table(rows)
    return IsotropyGroup(x, tuple(loops), table)


@dataclass(frozen=True)
class OrbitSummary:
    size: int
    isotropy: object  # FiniteGroupTable | IntegerGroup


@dataclass(frozen=True)
class StructuredGroupoid:
    """What the verdict engine needs: per orbit, its size and isotropy."""

    orbits: tuple

    @property
    def object_count(self) -> int:
        return sum(o.size for o in self.orbits)

    def arrow_count(self):
        """Total arrows when all isotropy is finite, else None."""
        total = 0
        for o in self.orbits:
            if isinstance(o.isotropy, IntegerGroup):
                return None
            total += o.size * o.size * o.isotropy.size
        return total


def structured_from_finite(g: FiniteGroupoid) -> StructuredGroupoid:
    summaries = []
    for orb in orbits(g):
        iso = isotropy(g, orb.members[0])
        summaries.append(OrbitSummary(len(orb.members), iso.table))
    return StructuredGroupoid(tuple(summaries))
