"""Finite ring constructors over a dense integer carrier.

Every ring is presented uniformly: a carrier {0, ..., size-1} with total
add/mul/neg operations, distinguished zero and one, a display name per
element, and the spec it was built from. Rings with at most 256 elements
get fully materialized operation tables; larger rings compute operations
on the fly from their structure. Construction is deterministic: the same
spec always yields identical tables and names.

Supported constructions: Z_n, GF(p^k) via the least monic irreducible
polynomial, direct products, k x k matrix rings over a commutative base,
and quotients by the nilradical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Union

from .bitsets import iter_bits
from .errors import InvalidSpecError, UnsupportedOperationError

DEFAULT_CAP = 4096
TABLE_CAP = 256  # materialize operation tables up to this carrier size


# ---------------------------------------------------------------------------
# Ring specs (abstract syntax describing how a ring is constructed)


@dataclass(frozen=True)
class Zn:
    n: int


@dataclass(frozen=True)
class GF:
    p: int
    k: int


@dataclass(frozen=True)
class Product:
    left: "RingSpec"
    right: "RingSpec"


@dataclass(frozen=True)
class MatrixRing:
    k: int
    inner: "RingSpec"


@dataclass(frozen=True)
class NilQuotient:
    inner: "RingSpec"


RingSpec = Union[Zn, GF, Product, MatrixRing, NilQuotient]


def format_spec(spec: RingSpec) -> str:
    """Canonical surface form of a spec ("Z10", "GF(25)", "M2(Z2)", ...).

    Products are printed left-associatively; parentheses appear only where
    the grammar needs them.
    """
    if isinstance(spec, Zn):
        return f"Z{spec.n}"
    if isinstance(spec, GF):
        return f"GF({spec.p ** spec.k})"
    if isinstance(spec, Product):
        left = format_spec(spec.left)
        right = format_spec(spec.right)
        if isinstance(spec.right, Product):  # grammar is left-associative
            right = f"({right})"
        return f"{left} x {right}"
    if isinstance(spec, MatrixRing):
        return f"M{spec.k}({format_spec(spec.inner)})"
    if isinstance(spec, NilQuotient):
        inner = format_spec(spec.inner)
        if isinstance(spec.inner, Product):
            inner = f"({inner})"
        return f"{inner}/nil"
    raise TypeError(f"not a ring spec: {spec!r}")


# ---------------------------------------------------------------------------
# The carrier-plus-operations interface


class FiniteRing:
    """A finite ring with carrier {0, ..., size-1} and nonzero identity.

    Immutable after construction: `add`, `mul`, `neg` are total pure
    functions on the carrier, safe for any number of concurrent readers.
    """

    def __init__(self, size: int, zero: int, one: int,
                 add: Callable[[int, int], int], mul: Callable[[int, int], int],
                 neg: Callable[[int], int], names, is_commutative: bool,
                 spec: RingSpec):
        if size < 2:
            raise InvalidSpecError("a ring with non zero identity needs size >= 2")
        if zero == one:
            raise InvalidSpecError("ring identity must differ from zero")
        self.size = size
        self.zero = zero
        self.one = one
        self.is_commutative = is_commutative
        self.spec = spec
        self._names = tuple(names)
        if len(self._names) != size or len(set(self._names)) != size:
            raise InvalidSpecError("element names must be one injective name per element")
        if size <= TABLE_CAP:
            add_t = [[add(a, b) for b in range(size)] for a in range(size)]
            mul_t = [[mul(a, b) for b in range(size)] for a in range(size)]
            neg_t = [neg(a) for a in range(size)]
            self.add = lambda a, b: add_t[a][b]
            self.mul = lambda a, b: mul_t[a][b]
            self.neg = lambda a: neg_t[a]
        else:
            self.add = add
            self.mul = mul
            self.neg = neg

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def name(self, a: int) -> str:
        return self._names[a]

    def names(self) -> tuple[str, ...]:
        return self._names

    def __repr__(self):
        return f"FiniteRing({format_spec(self.spec)}, size={self.size})"


def operation_tables(ring: FiniteRing):
    """Fully materialized (add, mul, neg) tables; used by determinism and
    axiom checks regardless of whether the ring itself stores tables."""
    n = ring.size
    add = [[ring.add(a, b) for b in range(n)] for a in range(n)]
    mul = [[ring.mul(a, b) for b in range(n)] for a in range(n)]
    neg = [ring.neg(a) for a in range(n)]
    return add, mul, neg


# ---------------------------------------------------------------------------
# Z_n


def make_zn(n: int, cap: int = DEFAULT_CAP) -> FiniteRing:
    """The ring of integers modulo n, with decimal element names."""
    if n < 2:
        raise InvalidSpecError(f"Z_n: n must be >= 2, got {n}")
    if n > cap:
        raise InvalidSpecError(f"Z_{n} exceeds the size cap {cap}")
    return FiniteRing(
        size=n, zero=0, one=1,
        add=lambda a, b: (a + b) % n,
        mul=lambda a, b: (a * b) % n,
        neg=lambda a: (-a) % n,
        names=[str(a) for a in range(n)],
        is_commutative=True,
        spec=Zn(n),
    )


# ---------------------------------------------------------------------------
# GF(p^k): polynomial arithmetic over Z_p and the least irreducible modulus


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factor_prime_power(q: int):
    """Return (p, k) with q = p^k, or None when q is not a prime power."""
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
        p += 1
    return (q, 1)  # q itself prime


@dataclass(frozen=True)
class PolyMod:
    """A monic polynomial over Z_p, coefficients constant-term first."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != 1:
            raise InvalidSpecError("modulus polynomial must be monic")
        if any(not 0 <= c < self.p for c in self.coeffs):
            raise InvalidSpecError("coefficients must lie in [0, p)")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        return _poly_str(self.coeffs, "x")


def _poly_str(coeffs, sym: str) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{sym}" if c == 1 else f"{c}{sym}")
        else:
            terms.append(f"{sym}^{i}" if c == 1 else f"{c}{sym}^{i}")
    return "+".join(terms) if terms else "0"


def _poly_rem(num, den, p):
    """Remainder of num modulo the monic polynomial den, over Z_p."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        num[i] = 0
        for j in range(dd):
            num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    return num[:dd] if dd > 0 else []


def _is_irreducible(coeffs, p) -> bool:
    # trial division by every monic polynomial of degree up to deg/2;
    # degree-1 divisors cover the root test
    k = len(coeffs) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            div = (*tail, 1)
            if not any(_poly_rem(coeffs, div, p)):
                return False
    return True


def find_least_irreducible(p: int, k: int) -> PolyMod:
    """The least monic irreducible polynomial of degree k over Z_p.

    Candidates are ordered by coefficient vector, constant term most
    significant; the first irreducible one wins, so the choice is
    deterministic and dependency-free.
    """
    if not is_prime(p):
        raise InvalidSpecError(f"{p} is not prime")
    if k < 2:
        raise InvalidSpecError("irreducible search needs degree k >= 2")
    for tail in itertools.product(range(p), repeat=k):
        coeffs = (*tail, 1)
        if _is_irreducible(coeffs, p):
            return PolyMod(p=p, coeffs=coeffs)
    raise AssertionError("no irreducible found; impossible over a prime field")


def make_gf(p: int, k: int, cap: int = DEFAULT_CAP) -> FiniteRing:
    """The finite field GF(p^k).

    For k = 1 this is Z_p (decimal names); otherwise the carrier is the
    polynomials of degree < k over Z_p reduced modulo the least monic
    irreducible of degree k, named in the generator symbol "a" ("2a+3").
    Element i has base-p digits of i as coefficients, constant term least
    significant.
    """
    if not is_prime(p):
        raise InvalidSpecError(f"GF base {p} is not prime")
    if k < 1:
        raise InvalidSpecError("GF needs k >= 1")
    size = p ** k
    if size > cap:
        raise InvalidSpecError(f"GF({size}) exceeds the size cap {cap}")
    if k == 1:
        return FiniteRing(
            size=p, zero=0, one=1,
            add=lambda a, b: (a + b) % p,
            mul=lambda a, b: (a * b) % p,
            neg=lambda a: (-a) % p,
            names=[str(a) for a in range(p)],
            is_commutative=True,
            spec=GF(p, 1),
        )

    modulus = find_least_irreducible(p, k)
    mod_coeffs = modulus.coeffs

    def decode(e):
        digits = []
        for _ in range(k):
            e, r = divmod(e, p)
            digits.append(r)
        return digits  # digits[i] = coefficient of x^i

    def encode(digits):
        e = 0
        for d in reversed(digits):
            e = e * p + d
        return e

    def add(a, b):
        da, db = decode(a), decode(b)
        return encode([(x + y) % p for x, y in zip(da, db)])

    def neg(a):
        return encode([(-x) % p for x in decode(a)])

    def mul(a, b):
        da, db = decode(a), decode(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_rem(prod, mod_coeffs, p)
        rem += [0] * (k - len(rem))
        return encode(rem)

    names = [_poly_str(decode(e), "a") for e in range(size)]
    return FiniteRing(size=size, zero=0, one=1, add=add, mul=mul, neg=neg,
                      names=names, is_commutative=True, spec=GF(p, k))


# ---------------------------------------------------------------------------
# Direct products


def make_product(left: FiniteRing, right: FiniteRing, cap: int = DEFAULT_CAP) -> FiniteRing:
    """Direct product with componentwise operations; names "(a;b)"."""
    size = left.size * right.size
    if size > cap:
        raise InvalidSpecError(
            f"product of sizes {left.size} x {right.size} exceeds the size cap {cap}")
    rs = right.size

    def add(a, b):
        a1, a2 = divmod(a, rs)
        b1, b2 = divmod(b, rs)
        return left.add(a1, b1) * rs + right.add(a2, b2)

    def mul(a, b):
        a1, a2 = divmod(a, rs)
        b1, b2 = divmod(b, rs)
        return left.mul(a1, b1) * rs + right.mul(a2, b2)

    def neg(a):
        a1, a2 = divmod(a, rs)
        return left.neg(a1) * rs + right.neg(a2)

    names = [f"({left.name(a1)};{right.name(a2)})"
             for a1 in range(left.size) for a2 in range(right.size)]
    return FiniteRing(
        size=size, zero=left.zero * rs + right.zero, one=left.one * rs + right.one,
        add=add, mul=mul, neg=neg, names=names,
        is_commutative=left.is_commutative and right.is_commutative,
        spec=Product(left.spec, right.spec),
    )


# ---------------------------------------------------------------------------
# Matrix rings


def make_matrix_ring(k: int, base: FiniteRing, cap: int = DEFAULT_CAP) -> FiniteRing:
    """The ring of k x k matrices over a commutative base ring.

    Matrices are encoded as base-|R| digit strings of their row-major
    entries; names are nested bracket lists like "[[1;0];[0;1]]".
    """
    if k < 1:
        raise InvalidSpecError("matrix ring needs k >= 1")
    if not base.is_commutative:
        raise InvalidSpecError("matrix rings are built over commutative bases only")
    size = base.size ** (k * k)
    if size > cap:
        raise InvalidSpecError(
            f"M_{k} over a size-{base.size} ring has {size} elements, over cap {cap}")
    bs = base.size
    cells = k * k

    def decode(e):
        entries = []
        for _ in range(cells):
            e, r = divmod(e, bs)
            entries.append(r)
        return entries  # entries[i*k + j] = row i, column j

    def encode(entries):
        e = 0
        for d in reversed(entries):
            e = e * bs + d
        return e

    def add(a, b):
        return encode([base.add(x, y) for x, y in zip(decode(a), decode(b))])

    def neg(a):
        return encode([base.neg(x) for x in decode(a)])

    def mul(a, b):
        da, db = decode(a), decode(b)
        out = []
        for i in range(k):
            for j in range(k):
                acc = base.zero
                for t in range(k):
                    acc = base.add(acc, base.mul(da[i * k + t], db[t * k + j]))
                out.append(acc)
        return encode(out)

    zero = encode([base.zero] * cells)
    one = encode([base.one if i == j else base.zero
                  for i in range(k) for j in range(k)])

    def matrix_name(e):
        entries = decode(e)
        rows = []
        for i in range(k):
            rows.append("[" + ";".join(base.name(entries[i * k + j])
                                       for j in range(k)) + "]")
        return "[" + ";".join(rows) + "]"

    return FiniteRing(
        size=size, zero=zero, one=one, add=add, mul=mul, neg=neg,
        names=[matrix_name(e) for e in range(size)],
        is_commutative=(k == 1 and base.is_commutative),
        spec=MatrixRing(k, base.spec),
    )


# ---------------------------------------------------------------------------
# Nilradical quotient


def nilradical_quotient(ring: FiniteRing):
    """Quotient R/Nil(R) for commutative R.

    Returns (quotient ring, projection) where projection[x] is the quotient
    element id of x's coset. Coset representatives are the least element id
    in each coset; the representative order is ascending, so the projection
    of zero's coset is the quotient's zero.
    """
    if not ring.is_commutative:
        raise UnsupportedOperationError(
            "nilradical quotient needs a commutative ring (Nil(R) must be an ideal)")
    from .classify import nilpotents  # deferred: classify imports this module

    nil = nilpotents(ring)
    n = ring.size
    rep = [-1] * n
    reps = []
    for x in range(n):
        if rep[x] >= 0:
            continue
        coset = [ring.add(x, v) for v in iter_bits(nil)]
        for m in coset:
            rep[m] = x  # x is the least member: smaller ones were seen first
        reps.append(x)
    index = {r: i for i, r in enumerate(reps)}
    projection = [index[rep[x]] for x in range(n)]

    def q_add(i, j):
        return index[rep[ring.add(reps[i], reps[j])]]

    def q_mul(i, j):
        return index[rep[ring.mul(reps[i], reps[j])]]

    def q_neg(i):
        return index[rep[ring.neg(reps[i])]]

    quotient = FiniteRing(
        size=len(reps), zero=projection[ring.zero], one=projection[ring.one],
        add=q_add, mul=q_mul, neg=q_neg,
        names=[ring.name(r) for r in reps],
        is_commutative=True,
        spec=NilQuotient(ring.spec),
    )
    return quotient, projection


# ---------------------------------------------------------------------------
# Spec realization


def build_ring(spec: RingSpec, cap: int = DEFAULT_CAP) -> FiniteRing:
    """Realize a ring spec, enforcing the size cap at every level."""
    if isinstance(spec, Zn):
        return make_zn(spec.n, cap)
    if isinstance(spec, GF):
        return make_gf(spec.p, spec.k, cap)
    if isinstance(spec, Product):
        return make_product(build_ring(spec.left, cap), build_ring(spec.right, cap), cap)
    if isinstance(spec, MatrixRing):
        return make_matrix_ring(spec.k, build_ring(spec.inner, cap), cap)
    if isinstance(spec, NilQuotient):
        inner = build_ring(spec.inner, cap)
        if not inner.is_commutative:
            raise InvalidSpecError("/nil requires a commutative ring")
        quotient, _ = nilradical_quotient(inner)
        return quotient
    raise TypeError(f"not a ring spec: {spec!r}")
