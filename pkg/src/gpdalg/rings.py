"""Exact coefficient rings.

A ring descriptor is an immutable value naming one of:

    Z, Q, GF(p), Z/n, Laurent(base), Product(r1, ..., rk)

Elements carry their descriptor and a canonical payload:

    Z          int
    Q          Fraction (always reduced, positive denominator)
    GF(p)      int residue in [0, p)
    Z/n        int residue in [0, n)
    Laurent    sorted tuple of (exponent, base payload), no zero terms
    Product    tuple of factor payloads

All arithmetic is exact; nothing here ever touches a float.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import LaurentOverflowError, ParseError, RingMismatchError

# Laurent exponents are plain ints but bounded, so that exponent
# arithmetic can never silently wrap a huge value into a wrong answer.
MAX_LAURENT_EXPONENT = 2 ** 20


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Integers:
    def __repr__(self):
        return "Z"


@dataclass(frozen=True)
class Rationals:
    def __repr__(self):
        return "Q"


@dataclass(frozen=True)
class GaloisField:
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"GF({self.p}): {self.p} is not prime")

    def __repr__(self):
        return f"GF({self.p})"


@dataclass(frozen=True)
class ModularIntegers:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"Z/{self.n}: modulus must be at least 2")

    def __repr__(self):
        return f"Z/{self.n}"


@dataclass(frozen=True)
class Laurent:
    base: "RingDescriptor"

    def __post_init__(self):
        if isinstance(self.base, Laurent):
            raise ValueError("Laurent rings do not nest")

    def __repr__(self):
        return f"Laurent({self.base!r})"


@dataclass(frozen=True)
class Product:
    factors: tuple["RingDescriptor", ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("Product needs at least one factor")

    def __repr__(self):
        inner = ", ".join(repr(f) for f in self.factors)
        return f"Product({inner})"


RingDescriptor = Union[Integers, Rationals, GaloisField, ModularIntegers, Laurent, Product]

Z = Integers()
Q = Rationals()


def render_ring_descriptor(ring: RingDescriptor) -> str:
    """Canonical text form; parse_ring_descriptor inverts it exactly."""
    return repr(ring)


# ---------------------------------------------------------------------------
# descriptor parser: recursive descent over the grammar
#   ring := 'Z' | 'Q' | 'GF(' int ')' | 'Z/' int
#         | 'Laurent(' ring ')' | 'Product(' ring (',' ring)* ')'
# Whitespace is ignored everywhere between tokens.


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos:self.pos + 1]

    def expect(self, token: str):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            raise ParseError(f"expected '{token}'", column=self.pos + 1)
        self.pos += len(token)

    def match_word(self, word: str) -> bool:
        """Consume word if present and not followed by more letters."""
        self.skip_ws()
        end = self.pos + len(word)
        if not self.text.startswith(word, self.pos):
            return False
        if end < len(self.text) and (self.text[end].isalnum() or self.text[end] == "_"):
            return False
        self.pos = end
        return True

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", column=start + 1)
        return int(self.text[start:self.pos])


def _parse_ring(sc: _Scanner) -> RingDescriptor:
    start = sc.pos
    if sc.match_word("Laurent"):
        sc.expect("(")
        sc.skip_ws()
        if sc.text.startswith("Laurent", sc.pos):
            raise ParseError("Laurent rings do not nest", column=sc.pos + 1)
        base = _parse_ring(sc)
        sc.expect(")")
        return Laurent(base)
    if sc.match_word("Product"):
        sc.expect("(")
        factors = [_parse_ring(sc)]
        while sc.peek() == ",":
            sc.expect(",")
            factors.append(_parse_ring(sc))
        sc.expect(")")
        return Product(tuple(factors))
    if sc.match_word("GF"):
        sc.expect("(")
        at = sc.pos
        p = sc.integer()
        sc.expect(")")
        if not _is_prime(p):
            raise ParseError(f"GF({p}): {p} is not prime", column=at + 1)
        return GaloisField(p)
    if sc.match_word("Q"):
        return Q
    sc.skip_ws()
    if sc.text.startswith("Z", sc.pos):
        sc.pos += 1
        if sc.peek() == "/":
            sc.expect("/")
            at = sc.pos
            n = sc.integer()
            if n < 2:
                raise ParseError(f"Z/{n}: modulus must be at least 2", column=at + 1)
            return ModularIntegers(n)
        return Z
    raise ParseError("expected a ring descriptor", column=start + 1)


def parse_ring_descriptor(text: str) -> RingDescriptor:
    sc = _Scanner(text)
    ring = _parse_ring(sc)
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise ParseError("trailing input after ring descriptor", column=sc.pos + 1)
    return ring


# ---------------------------------------------------------------------------
# payload arithmetic


def zero_payload(ring: RingDescriptor):
    if isinstance(ring, (Integers, GaloisField, ModularIntegers)):
        return 0
    if isinstance(ring, Rationals):
        return Fraction(0)
    if isinstance(ring, Laurent):
        return ()
    if isinstance(ring, Product):
        return tuple(zero_payload(f) for f in ring.factors)
    raise TypeError(f"not a ring descriptor: {ring!r}")


def one_payload(ring: RingDescriptor):
    return int_payload(ring, 1)


def int_payload(ring: RingDescriptor, k: int):
    """Image of the integer k under the unique map Z -> ring."""
    if isinstance(ring, Integers):
        return k
    if isinstance(ring, Rationals):
        return Fraction(k)
    if isinstance(ring, GaloisField):
        return k % ring.p
    if isinstance(ring, ModularIntegers):
        return k % ring.n
    if isinstance(ring, Laurent):
        c = int_payload(ring.base, k)
        return () if _payload_is_zero(ring.base, c) else ((0, c),)
    if isinstance(ring, Product):
        return tuple(int_payload(f, k) for f in ring.factors)
    raise TypeError(f"not a ring descriptor: {ring!r}")


def _payload_is_zero(ring: RingDescriptor, a) -> bool:
    return a == zero_payload(ring)


def _laurent_normalize(ring: Laurent, terms: dict):
    out = []
    for e in sorted(terms):
        if abs(e) > MAX_LAURENT_EXPONENT:
            raise LaurentOverflowError(f"Laurent exponent {e} out of range")
        c = terms[e]
        if not _payload_is_zero(ring.base, c):
            out.append((e, c))
    return tuple(out)


def add_payload(ring: RingDescriptor, a, b):
    if isinstance(ring, (Integers, Rationals)):
        return a + b
    if isinstance(ring, GaloisField):
        return (a + b) % ring.p
    if isinstance(ring, ModularIntegers):
        return (a + b) % ring.n
    if isinstance(ring, Laurent):
        terms = dict(a)
        for e, c in b:
            terms[e] = add_payload(ring.base, terms.get(e, zero_payload(ring.base)), c)
        return _laurent_normalize(ring, terms)
    if isinstance(ring, Product):
        return tuple(add_payload(f, x, y) for f, x, y in zip(ring.factors, a, b))
    raise TypeError(f"not a ring descriptor: {ring!r}")


def neg_payload(ring: RingDescriptor, a):
    if isinstance(ring, (Integers, Rationals)):
        return -a
    if isinstance(ring, GaloisField):
        return (-a) % ring.p
    if isinstance(ring, ModularIntegers):
        return (-a) % ring.n
    if isinstance(ring, Laurent):
        return tuple((e, neg_payload(ring.base, c)) for e, c in a)
    if isinstance(ring, Product):
        return tuple(neg_payload(f, x) for f, x in zip(ring.factors, a))
    raise TypeError(f"not a ring descriptor: {ring!r}")


def mul_payload(ring: RingDescriptor, a, b):
    if isinstance(ring, (Integers, Rationals)):
        return a * b
    if isinstance(ring, GaloisField):
        return (a * b) % ring.p
    if isinstance(ring, ModularIntegers):
        return (a * b) % ring.n
    if isinstance(ring, Laurent):
        terms: dict = {}
        for e1, c1 in a:
            for e2, c2 in b:
                e = e1 + e2
                c = mul_payload(ring.base, c1, c2)
                if e in terms:
                    terms[e] = add_payload(ring.base, terms[e], c)
                else:
                    terms[e] = c
        return _laurent_normalize(ring, terms)
    if isinstance(ring, Product):
        return tuple(mul_payload(f, x, y) for f, x, y in zip(ring.factors, a, b))
    raise TypeError(f"not a ring descriptor: {ring!r}")


def render_payload(ring: RingDescriptor, a) -> str:
    if isinstance(ring, (Integers, GaloisField, ModularIntegers)):
        return str(a)
    if isinstance(ring, Rationals):
        return str(a)
    if isinstance(ring, Laurent):
        if not a:
            return "0"
        parts = []
        for e, c in a:
            cs = render_payload(ring.base, c)
            if "," in cs or " " in cs:
                cs = f"({cs})"
            if e == 0:
                parts.append(cs)
            elif e == 1:
                parts.append(f"{cs}*x" if cs != "1" else "x")
            else:
                parts.append(f"{cs}*x^{e}" if cs != "1" else f"x^{e}")
        return " + ".join(parts)
    if isinstance(ring, Product):
        return "(" + ",".join(render_payload(f, x) for f, x in zip(ring.factors, a)) + ")"
    raise TypeError(f"not a ring descriptor: {ring!r}")


@dataclass(frozen=True)
class RingElement:
    """A value of a specific coefficient ring.  Payloads are canonical,
    so == and hash are structural."""

    ring: RingDescriptor
    value: object

    @staticmethod
    def zero(ring: RingDescriptor) -> "RingElement":
        return RingElement(ring, zero_payload(ring))

    @staticmethod
    def one(ring: RingDescriptor) -> "RingElement":
        return RingElement(ring, one_payload(ring))

    @staticmethod
    def from_int(ring: RingDescriptor, k: int) -> "RingElement":
        return RingElement(ring, int_payload(ring, k))

    @staticmethod
    def rational(ring: RingDescriptor, num: int, den: int) -> "RingElement":
        if not isinstance(ring, Rationals):
            raise RingMismatchError("fractional literals only make sense over Q")
        return RingElement(ring, Fraction(num, den))

    def _check(self, other: "RingElement"):
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    @property
    def is_zero(self) -> bool:
        return _payload_is_zero(self.ring, self.value)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ring, add_payload(self.ring, self.value, other.value))

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, neg_payload(self.ring, self.value))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ring, mul_payload(self.ring, self.value, other.value))

    def __str__(self) -> str:
        return render_payload(self.ring, self.value)


def laurent_variable(ring: Laurent, exponent: int = 1) -> RingElement:
    """x^exponent as an element of Laurent(base)."""
    if abs(exponent) > MAX_LAURENT_EXPONENT:
        raise LaurentOverflowError(f"Laurent exponent {exponent} out of range")
    return RingElement(ring, ((exponent, one_payload(ring.base)),))


# ---------------------------------------------------------------------------
# chain-condition predicates


@dataclass(frozen=True)
class RingPredicates:
    noetherian: bool
    artinian: bool
    field_product: bool
    characteristics: frozenset


def _squarefree(n: int) -> bool:
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def _prime_divisors(n: int) -> frozenset:
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return frozenset(out)


def ring_predicates(ring: RingDescriptor) -> RingPredicates:
    """Chain-condition facts used by the verdict engine.

    field_product means: isomorphic to a finite direct product of
    fields.  Z/n qualifies exactly when n is squarefree (Chinese
    remainder splits it into prime fields).  characteristics collects
    the characteristic of every field factor (0 for Q, primes
    otherwise); for non-field-products it still records the primes or 0
    relevant to the ring so reports can name them.
    """
    if isinstance(ring, Integers):
        return RingPredicates(True, False, False, frozenset([0]))
    if isinstance(ring, Rationals):
        return RingPredicates(True, True, True, frozenset([0]))
    if isinstance(ring, GaloisField):
        return RingPredicates(True, True, True, frozenset([ring.p]))
    if isinstance(ring, ModularIntegers):
        return RingPredicates(True, True, _squarefree(ring.n), _prime_divisors(ring.n))
    if isinstance(ring, Laurent):
        base = ring_predicates(ring.base)
        return RingPredicates(base.noetherian, False, False, base.characteristics)
    if isinstance(ring, Product):
        parts = [ring_predicates(f) for f in ring.factors]
        chars = frozenset().union(*(p.characteristics for p in parts))
        return RingPredicates(
            all(p.noetherian for p in parts),
            all(p.artinian for p in parts),
            all(p.field_product for p in parts),
            chars,
        )
    raise TypeError(f"not a ring descriptor: {ring!r}")
