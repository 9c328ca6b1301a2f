"""Chain-condition verdicts and the brute-force semisimplicity oracle.

verdicts() reads facts off the block decomposition: the algebra of a
finite groupoid is a finite product of matrix algebras over isotropy
group algebras, so

  * Noetherian  iff the coefficient ring is Noetherian and every
    isotropy group algebra is (finite groups: module-finite transfer;
    infinite cyclic: Laurent polynomials, Hilbert basis theorem);
  * Artinian    iff the coefficient ring is Artinian and every isotropy
    group is finite (Connell's theorem for group rings);
  * semisimple  iff the coefficient ring is a finite product of fields
    none of whose characteristics divides any isotropy order
    (Maschke's theorem), with all isotropy finite.

radical_oracle() answers the semisimplicity question for the same
algebra without using any of that structure: it works directly on the
arrow basis of a validated finite groupoid.  Over Q the radical is the
nullspace of the trace form of the left regular representation.  Over
GF(p) the oracle searches for a nonzero element a whose right ideal aA
is nilpotent; the search is exhaustive when p^dim is small, otherwise
candidates come from an iterated trace-lift filtration (the classical
radical algorithm over prime fields).  Either way every nonzero answer
is certified on the spot: the reported radical must be a nilpotent
ideal and the witness must satisfy (aA)^k = 0, so a wrong "not
semisimple" cannot escape.  A wrong "semisimple" cannot either: the
radical is always contained in the trace-form kernel respectively the
filtration result, and those coming out zero forces the radical to be
zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from .algebra import AlgebraElement
from .errors import InternalCheckError, OracleBudgetError
from .group_algebra import IntegerGroup, entry_ring_rendering
from .groupoid import FiniteGroupoid, StructuredGroupoid
from .linalg import frac_kernel, frac_rref, modp_in_span, modp_kernel, modp_rref
from .rings import (
    GaloisField,
    Rationals,
    RingDescriptor,
    RingElement,
    render_ring_descriptor,
    ring_predicates,
)

ORACLE_DIMENSION_LIMIT_CHAR0 = 64
ORACLE_DIMENSION_LIMIT_CHARP = 12
_EXHAUSTIVE_LIMIT = 4096  # largest p**dim the element sweep will walk

CITE_BLOCK = "block reduction"
CITE_CONNELL = "Connell"
CITE_MASCHKE = "Maschke"
CITE_HILBERT = "Hilbert basis"


@dataclass(frozen=True)
class Verdict:
    noetherian: bool
    artinian: bool
    semisimple: bool
    shape: tuple          # (size, isotropy descriptor, entry ring rendering)
    shape_string: str
    justification: tuple


def _shape_of(sg: StructuredGroupoid, ring: RingDescriptor):
    shape = tuple(
        (o.size, o.isotropy, entry_ring_rendering(o.isotropy, ring))
        for o in sg.orbits
    )
    shape_string = " x ".join(f"M_{size}({entry})" for size, _, entry in shape)
    return shape, shape_string


def verdicts(sg: StructuredGroupoid, ring: RingDescriptor) -> Verdict:
    preds = ring_predicates(ring)
    rname = render_ring_descriptor(ring)
    shape, shape_string = _shape_of(sg, ring)
    finite_orders = [
        o.isotropy.size for o in sg.orbits if not isinstance(o.isotropy, IntegerGroup)
    ]
    infinite_isotropy = any(isinstance(o.isotropy, IntegerGroup) for o in sg.orbits)
    lines = [f"algebra decomposes as {shape_string} [{CITE_BLOCK}]"]

    noetherian = preds.noetherian
    if noetherian:
        line = (
            f"Noetherian: {rname} is Noetherian and each isotropy group algebra "
            f"over it is Noetherian [{CITE_BLOCK}]"
        )
        if infinite_isotropy:
            line += f"; infinite cyclic isotropy gives Laurent polynomial entries [{CITE_HILBERT}]"
        lines.append(line)
    else:
        lines.append(f"not Noetherian: {rname} is not Noetherian [{CITE_BLOCK}]")

    bad_char = None
    for p in sorted(preds.characteristics):
        if p == 0:
            continue
        for i, n in enumerate(finite_orders):
            if n % p == 0:
                bad_char = (p, i, n)
                break
        if bad_char:
            break

    artinian = preds.artinian and not infinite_isotropy
    if artinian:
        lines.append(
            f"Artinian: {rname} is Artinian and every isotropy group is finite [{CITE_CONNELL}]"
        )
    elif not preds.artinian:
        lines.append(f"not Artinian: {rname} is not Artinian [{CITE_CONNELL}]")
    else:
        lines.append(
            f"not Artinian: an orbit has infinite cyclic isotropy, so the arrow "
            f"space is infinite [{CITE_CONNELL}]"
        )

    semisimple = preds.field_product and not infinite_isotropy and bad_char is None
    if semisimple:
        chars = "{" + ",".join(str(c) for c in sorted(preds.characteristics)) + "}"
        lines.append(
            f"semisimple: {rname} is a finite product of fields with characteristics "
            f"{chars}, none dividing an isotropy order [{CITE_MASCHKE}]"
        )
    elif not preds.field_product:
        lines.append(
            f"not semisimple: {rname} is not a finite product of fields [{CITE_MASCHKE}]"
        )
    elif infinite_isotropy:
        lines.append(
            f"not semisimple: infinite cyclic isotropy, Laurent entries are never "
            f"semisimple [{CITE_MASCHKE}]"
        )
    else:
        p, i, n = bad_char
        lines.append(
            f"not semisimple: characteristic {p} divides the isotropy order {n} "
            f"of orbit {i} [{CITE_MASCHKE}]"
        )

    return Verdict(noetherian, artinian, semisimple, shape, shape_string, tuple(lines))


# ---------------------------------------------------------------------------
# the oracle


@dataclass(frozen=True)
class RadicalReport:
    semisimple: bool
    witness: object          # AlgebraElement or None
    method: str
    dimension: int
    radical_dimension: object  # int when the full radical was computed


def _basis_products(g: FiniteGroupoid):
    """bp[i][j] = index of arrow i after arrow j, or -1."""
    d = g.arrow_count
    bp = [[-1] * d for _ in range(d)]
    for (i, j), k in g.comp:
        bp[i][j] = k
    return bp


def _vec_mul(bp, u, v, d):
    out = [0] * d
    for i, ui in enumerate(u):
        if ui:
            row = bp[i]
            for j, vj in enumerate(v):
                if vj:
                    k = row[j]
                    if k >= 0:
                        out[k] += ui * vj
    return out


def _vec_mul_frac(bp, u, v, d):
    out = [Fraction(0)] * d
    for i, ui in enumerate(u):
        if ui:
            row = bp[i]
            for j, vj in enumerate(v):
                if vj:
                    k = row[j]
                    if k >= 0:
                        out[k] += ui * vj
    return out


def _right_ideal_nilpotent_modp(bp, w, d, p):
    """Is the right ideal generated by w nilpotent mod p?  Exact: build
    a basis of wA, then take ideal powers until zero or stabilization."""
    gens = [[x % p for x in _vec_mul(bp, w, e, d)] for e in _unit_vectors(d)]
    gens.append([x % p for x in w])
    base, piv = modp_rref(gens, p)
    if not base:
        return True
    current, cpiv = base, piv
    while True:
        if not current:
            return True
        nxt = []
        for u in current:
            for v in base:
                nxt.append([x % p for x in _vec_mul(bp, u, v, d)])
        reduced, rpiv = modp_rref(nxt, p)
        if len(reduced) >= len(current):
            # no strict descent and still nonzero: never reaches zero
            return not reduced
        current, cpiv = reduced, rpiv


def _right_ideal_nilpotent_frac(bp, w, d):
    gens = [_vec_mul_frac(bp, w, e, d) for e in _unit_vectors(d)]
    gens.append([Fraction(x) for x in w])
    base, _ = frac_rref(gens)
    current = base
    while True:
        if not current:
            return True
        nxt = []
        for u in current:
            for v in base:
                nxt.append(_vec_mul_frac(bp, u, v, d))
        reduced, _ = frac_rref(nxt)
        if len(reduced) >= len(current):
            return not reduced
        current = reduced


def _unit_vectors(d):
    for j in range(d):
        e = [0] * d
        e[j] = 1
        yield e


def _ideal_certified_nilpotent_modp(bp, basis, d, p):
    """basis spans a subspace V; certify V is a two-sided ideal and
    nilpotent.  Used to vouch for the filtration's nonzero answers."""
    rref, piv = modp_rref(basis, p)
    for u in rref:
        for e in _unit_vectors(d):
            left = [x % p for x in _vec_mul(bp, e, u, d)]
            right = [x % p for x in _vec_mul(bp, u, e, d)]
            if not modp_in_span(rref, piv, left, p):
                return False
            if not modp_in_span(rref, piv, right, p):
                return False
    current = rref
    while current:
        nxt = []
        for u in current:
            for v in rref:
                nxt.append([x % p for x in _vec_mul(bp, u, v, d)])
        reduced, _ = modp_rref(nxt, p)
        if len(reduced) >= len(current):
            return not reduced
        current = reduced
    return True


def _ideal_certified_nilpotent_frac(bp, basis, d):
    rref, piv = frac_rref(basis)
    for u in rref:
        for e in _unit_vectors(d):
            for vec in (_vec_mul_frac(bp, e, u, d), _vec_mul_frac(bp, u, e, d)):
                v = list(vec)
                for col, row in zip(piv, rref):
                    if v[col]:
                        f = v[col]
                        v = [a - f * b for a, b in zip(v, row)]
                if any(v):
                    return False
    current = rref
    while current:
        nxt = []
        for u in current:
            for v in rref:
                nxt.append(_vec_mul_frac(bp, u, v, d))
        reduced, _ = frac_rref(nxt)
        if len(reduced) >= len(current):
            return not reduced
        current = reduced
    return True


def _left_mult_trace(bp, d):
    """tr[c] = trace of left multiplication by arrow c."""
    tr = [0] * d
    for c in range(d):
        row = bp[c]
        tr[c] = sum(1 for k in range(d) if row[k] == k)
    return tr


def _radical_char0(g: FiniteGroupoid, ring):
    """Nullspace of the trace form, exact over Q.  In characteristic
    zero this nullspace is the radical; both inclusions are rechecked
    at runtime (witness ideals must be nilpotent)."""
    d = g.arrow_count
    bp = _basis_products(g)
    tr = _left_mult_trace(bp, d)
    gram = []
    for i in range(d):
        row = []
        for j in range(d):
            k = bp[i][j]
            row.append(Fraction(tr[k]) if k >= 0 else Fraction(0))
        gram.append(row)
    kernel = frac_kernel(gram)
    if not kernel:
        return True, None, 0
    if not _ideal_certified_nilpotent_frac(bp, kernel, d):
        raise InternalCheckError("trace-form kernel is not a nilpotent ideal")
    witness = kernel[0]
    if not _right_ideal_nilpotent_frac(bp, witness, d):
        raise InternalCheckError("radical witness fails the right-ideal check")
    return False, witness, len(kernel)


def _matrix_power_trace_mod(m, q, mod, d):
    def matmul(a, b):
        out = [[0] * d for _ in range(d)]
        for r in range(d):
            ar = a[r]
            outr = out[r]
            for k in range(d):
                ark = ar[k]
                if ark:
                    bk = b[k]
                    for c in range(d):
                        outr[c] = (outr[c] + ark * bk[c]) % mod
        return out
    result = None
    base = [[v % mod for v in row] for row in m]
    e = q
    while e:
        if e & 1:
            result = base if result is None else matmul(result, base)
        e >>= 1
        if e:
            base = matmul(base, base)
    return sum(result[i][i] for i in range(d)) % mod


def _left_mult_matrix_int(bp, z, d):
    m = [[0] * d for _ in range(d)]
    for i, zi in enumerate(z):
        if zi:
            row = bp[i]
            for c in range(d):
                k = row[c]
                if k >= 0:
                    m[k][c] += zi
    return m


def _filtration_radical_modp(bp, d, p):
    """Iterated trace-lift filtration.  Stage 0 is the plain trace form
    mod p; stage j divides the trace of the p^j-th power of the lifted
    left multiplication by p^j and reads it mod p.  The radical is
    contained in every stage, and the chain reaches it once p^stage
    covers the dimension."""
    stages = 1
    while p ** stages < d:
        stages += 1
    basis = [list(e) for e in _unit_vectors(d)]
    for j in range(stages + 1):
        if not basis:
            break
        q = p ** j
        mod = p ** (j + 1)
        rows = []
        for y in basis:
            row = []
            for b in basis:
                z = _vec_mul(bp, b, y, d)
                t = _matrix_power_trace_mod(_left_mult_matrix_int(bp, z, d), q, mod, d)
                if t % q:
                    raise InternalCheckError("trace filtration divisibility failed")
                row.append((t // q) % p)
            rows.append(row)
        coeff_kernel = modp_kernel(rows, p)
        new_basis = []
        for coeffs in coeff_kernel:
            vec = [0] * d
            for c, b in zip(coeffs, basis):
                if c:
                    for idx in range(d):
                        vec[idx] = (vec[idx] + c * b[idx]) % p
            new_basis.append(vec)
        basis, _ = modp_rref(new_basis, p)
    return basis


def _radical_charp(g: FiniteGroupoid, p: int, method: str):
    d = g.arrow_count
    bp = _basis_products(g)
    if method == "exhaustive":
        if p ** d > _EXHAUSTIVE_LIMIT:
            raise OracleBudgetError(
                f"element sweep over GF({p})^{d} exceeds the oracle budget"
            )
        for w in iter_product(range(p), repeat=d):
            if not any(w):
                continue
            if not _nilpotent_element_modp(bp, list(w), d, p):
                continue
            if _right_ideal_nilpotent_modp(bp, list(w), d, p):
                return False, list(w), None
        return True, None, 0
    # filtration
    basis = _filtration_radical_modp(bp, d, p)
    if not basis:
        return True, None, 0
    if not _ideal_certified_nilpotent_modp(bp, basis, d, p):
        raise InternalCheckError("filtration result is not a nilpotent ideal")
    witness = basis[0]
    if not _right_ideal_nilpotent_modp(bp, witness, d, p):
        raise InternalCheckError("radical witness fails the right-ideal check")
    return False, witness, len(basis)


def _nilpotent_element_modp(bp, w, d, p):
    """Quick soundness filter: anything in the radical is nilpotent."""
    current = w
    steps = 0
    limit = 1
    while limit < d:
        limit <<= 1
        steps += 1
    for _ in range(max(steps, 1)):
        current = [x % p for x in _vec_mul(bp, current, current, d)]
        if not any(current):
            return True
    return not any(current)


def radical_oracle(g: FiniteGroupoid, ring: RingDescriptor, method: str = "auto") -> RadicalReport:
    """Decide semisimplicity of the groupoid algebra by brute force.

    Supports Q (dimension up to 64) and GF(p) (dimension up to 12).
    The groupoid must already have passed validate().  method is
    "auto", "exhaustive", or "filtration" (the last two only over
    GF(p)).
    """
    d = g.arrow_count
    if isinstance(ring, Rationals):
        if d > ORACLE_DIMENSION_LIMIT_CHAR0:
            raise OracleBudgetError(f"dimension {d} beyond the char-0 oracle budget")
        semisimple, witness_vec, rad_dim = _radical_char0(g, ring)
        witness = None
        if witness_vec is not None:
            witness = AlgebraElement.make(
                g, ring,
                [(a, RingElement(ring, c)) for a, c in enumerate(witness_vec) if c],
            )
        return RadicalReport(semisimple, witness, "trace form", d, rad_dim)
    if isinstance(ring, GaloisField):
        if d > ORACLE_DIMENSION_LIMIT_CHARP:
            raise OracleBudgetError(f"dimension {d} beyond the char-p oracle budget")
        p = ring.p
        if method == "auto":
            method = "exhaustive" if p ** d <= _EXHAUSTIVE_LIMIT else "filtration"
        if method not in ("exhaustive", "filtration"):
            raise ValueError(f"unknown oracle method '{method}'")
        semisimple, witness_vec, rad_dim = _radical_charp(g, p, method)
        witness = None
        if witness_vec is not None:
            witness = AlgebraElement.make(
                g, ring,
                [(a, RingElement(ring, c % p)) for a, c in enumerate(witness_vec) if c % p],
            )
        return RadicalReport(semisimple, witness, method, d, rad_dim)
    raise ValueError(
        f"oracle supports Q and GF(p) only, not {render_ring_descriptor(ring)}"
    )
