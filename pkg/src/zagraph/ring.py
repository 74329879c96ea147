"""Finite rings with identity, stored as indexed operation laws.

Elements are the indices ``0..order-1`` and index 0 is always the ring zero.
Each constructor fixes a deterministic enumeration:

* ``Z_n``: residues ascending.
* polynomial quotients and ``GF(p^s)``: coefficient tuples, constant term
  varying fastest.
* products: tuples in lexicographic order (first factor most significant).
* matrices: entries row-major, first entry most significant.

Laws are vectorized callables that broadcast over index arrays.  For rings
up to ``max_table_order`` elements the full Cayley tables are materialized
and the laws become table lookups.
"""
from dataclasses import dataclass
import itertools
import math

import numpy as np

from . import kernels
from .errors import (
    CapacityError,
    EmptyProductError,
    InvalidCharacteristicError,
    InvalidOrderError,
    NonMonicModulusError,
)

DEFAULT_MAX_TABLE_ORDER = 4096
# hard cap on the number of elements any constructor will produce
DEFAULT_MAX_ORDER = 1 << 20

SIDES = ("left", "right", "two_sided")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int):
    """Return ``(p, s)`` with ``q == p**s`` and p prime, or None."""
    if q < 2:
        return None
    p = next(d for d in itertools.count(2) if q % d == 0)
    s = 0
    while q % p == 0:
        q //= p
        s += 1
    return (p, s) if q == 1 else None


def _check_side(side):
    if side == "twosided":
        side = "two_sided"
    if side not in SIDES:
        raise ValueError(f"unknown annihilator side {side!r}")
    return side


# ---------------------------------------------------------------------------
# element sets

@dataclass(frozen=True, eq=False)
class ElementSet:
    """Subset of a ring's element domain as a membership bit-vector."""

    members: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.members, dtype=bool).copy()
        arr.setflags(write=False)
        object.__setattr__(self, "members", arr)

    @classmethod
    def from_indices(cls, ring_order: int, indices) -> "ElementSet":
        members = np.zeros(ring_order, dtype=bool)
        members[list(indices)] = True
        return cls(members)

    @classmethod
    def empty(cls, ring_order: int) -> "ElementSet":
        return cls(np.zeros(ring_order, dtype=bool))

    @classmethod
    def full(cls, ring_order: int) -> "ElementSet":
        return cls(np.ones(ring_order, dtype=bool))

    @property
    def ring_order(self) -> int:
        return self.members.shape[0]

    def indices(self) -> list:
        return [int(i) for i in np.flatnonzero(self.members)]

    def __contains__(self, x) -> bool:
        return bool(self.members[x])

    def __len__(self) -> int:
        return int(self.members.sum())

    def __iter__(self):
        return iter(self.indices())

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.members | other.members)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.members & other.members)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.members & ~other.members)

    def __invert__(self) -> "ElementSet":
        return ElementSet(~self.members)

    def __le__(self, other: "ElementSet") -> bool:
        return not bool((self.members & ~other.members).any())

    def __lt__(self, other: "ElementSet") -> bool:
        return self <= other and len(self) < len(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return np.array_equal(self.members, other.members)

    def __hash__(self) -> int:
        return hash(self.members.tobytes())

    def is_zero_only(self) -> bool:
        return bool(self.members[0]) and len(self) == 1

    def __repr__(self) -> str:
        return f"ElementSet({self.indices()})"


# ---------------------------------------------------------------------------
# polynomials over Z_n

@dataclass(frozen=True)
class Polynomial:
    """Polynomial over ``Z_modulus``; coefficients lowest degree first."""

    modulus: int
    coefficients: tuple = ()

    def __post_init__(self):
        coeffs = [int(c) % self.modulus for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def monomial(cls, modulus: int, degree: int, coeff: int = 1) -> "Polynomial":
        return cls(modulus, (0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __add__(self, other):
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (n - len(self.coefficients))
        b = other.coefficients + (0,) * (n - len(other.coefficients))
        return Polynomial(self.modulus, tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other):
        if not self.coefficients or not other.coefficients:
            return Polynomial(self.modulus)
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial(self.modulus, tuple(out))

    def divmod(self, divisor: "Polynomial"):
        """Quotient and remainder by a monic divisor."""
        if not divisor.is_monic:
            raise NonMonicModulusError(f"cannot divide by non-monic {divisor}")
        rem = list(self.coefficients)
        d = divisor.degree
        quot = [0] * max(0, len(rem) - d)
        for t in range(len(rem) - 1, d - 1, -1):
            c = rem[t] % self.modulus
            if c:
                quot[t - d] = c
                for i, f in enumerate(divisor.coefficients):
                    rem[t - d + i] -= c * f
        return Polynomial(self.modulus, tuple(quot)), Polynomial(self.modulus, tuple(rem[:d]))

    def __str__(self) -> str:
        return render_poly(self.coefficients, "x")


def render_poly(coefficients, var: str = "x") -> str:
    terms = []
    for deg in range(len(coefficients) - 1, -1, -1):
        c = coefficients[deg]
        if c == 0:
            continue
        if deg == 0:
            terms.append(str(c))
        else:
            mono = var if deg == 1 else f"{var}^{deg}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def _monic_polys(p: int, degree: int):
    # lex order on (c_0, ..., c_{degree-1}), c_0 most significant
    for lower in itertools.product(range(p), repeat=degree):
        yield Polynomial(p, lower + (1,))


def is_irreducible(f: Polynomial) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    for d in range(1, f.degree // 2 + 1):
        for g in _monic_polys(f.modulus, d):
            if not f.divmod(g)[1].coefficients:
                return False
    return f.degree >= 1


def find_irreducible(p: int, s: int) -> Polynomial:
    """Lexicographically least monic irreducible polynomial of degree s over Z_p."""
    if not is_prime(p):
        raise InvalidCharacteristicError(f"{p} is not prime")
    if s < 1:
        raise InvalidOrderError(f"degree must be >= 1, got {s}")
    for f in _monic_polys(p, s):
        if is_irreducible(f):
            return f
    raise AssertionError("an irreducible polynomial of every degree exists")  # pragma: no cover


# ---------------------------------------------------------------------------
# the ring object

def _decode(idx, radices):
    """Mixed-radix digits of ``idx``; the last radix varies fastest."""
    idx = np.asarray(idx, dtype=np.int64)
    digits = []
    for r in reversed(radices):
        digits.append(idx % r)
        idx = idx // r
    return digits[::-1]


def _encode(digits, radices):
    out = np.zeros(np.broadcast(*digits).shape, dtype=np.int64) if digits else 0
    for d, r in zip(digits, radices):
        out = out * r + d
    return out


class FiniteRing:
    """A finite ring with nonzero identity given by indexed operation laws.

    Instances are treated as immutable.  ``add`` and ``mul`` accept integer
    indices or broadcastable index arrays.
    """

    zero_index = 0

    def __init__(self, order, add_law, mul_law, one_index, *, label, element_labels,
                 kind="table", commutative=None, max_table_order=DEFAULT_MAX_TABLE_ORDER,
                 **meta):
        if order < 2:
            raise InvalidOrderError(f"a ring with nonzero identity needs order >= 2, got {order}")
        self.order = int(order)
        self.one_index = int(one_index)
        self.label = label
        self.element_labels = tuple(element_labels)
        self.kind = kind
        self.meta = meta
        self._add_law = add_law
        self._mul_law = mul_law
        self._add_table = None
        self._mul_table = None
        if self.order <= max_table_order:
            idx = np.arange(self.order)
            self._add_table = np.asarray(add_law(idx[:, None], idx[None, :]), dtype=np.int64)
            self._mul_table = np.asarray(mul_law(idx[:, None], idx[None, :]), dtype=np.int64)
            for t in (self._add_table, self._mul_table):
                t.setflags(write=False)
        if commutative is None:
            commutative = self.noncommuting_pair() is None
        self.commutative = bool(commutative)

    @classmethod
    def from_tables(cls, add_table, mul_table, one_index, *, label="R", element_labels=None,
                    commutative=None, **meta):
        add_table = np.array(add_table, dtype=np.int64)
        mul_table = np.array(mul_table, dtype=np.int64)
        n = add_table.shape[0]
        if element_labels is None:
            element_labels = [str(i) for i in range(n)]
        return cls(n, lambda a, b: add_table[a, b], lambda a, b: mul_table[a, b], one_index,
                   label=label, element_labels=element_labels, commutative=commutative,
                   max_table_order=max(n, DEFAULT_MAX_TABLE_ORDER), **meta)

    # laws -----------------------------------------------------------------
    def add(self, a, b):
        if self._add_table is not None:
            return self._add_table[a, b]
        return self._add_law(np.asarray(a), np.asarray(b))

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a, b]
        return self._mul_law(np.asarray(a), np.asarray(b))

    def neg(self, a):
        return np.argmax(self.add_table == self.zero_index, axis=1)[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.order)

    @property
    def add_table(self) -> np.ndarray:
        if self._add_table is not None:
            return self._add_table
        idx = self.elements
        return np.asarray(self._add_law(idx[:, None], idx[None, :]), dtype=np.int64)

    @property
    def mul_table(self) -> np.ndarray:
        if self._mul_table is not None:
            return self._mul_table
        idx = self.elements
        return np.asarray(self._mul_law(idx[:, None], idx[None, :]), dtype=np.int64)

    @property
    def has_tables(self) -> bool:
        return self._mul_table is not None

    def noncommuting_pair(self):
        """First pair (a, b) with ab != ba, scanning row by row, or None."""
        idx = self.elements
        for a in range(self.order):
            row = np.asarray(self.mul(a, idx))
            col = np.asarray(self.mul(idx, a))
            bad = np.flatnonzero(row != col)
            if bad.size:
                return (a, int(bad[0]))
        return None

    def power(self, x, k: int):
        out = self.one_index
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def element(self, label: str) -> int:
        return self.element_labels.index(label)

    def same_tables(self, other: "FiniteRing") -> bool:
        return (self.order == other.order and self.one_index == other.one_index
                and np.array_equal(self.add_table, other.add_table)
                and np.array_equal(self.mul_table, other.mul_table))

    def __repr__(self) -> str:
        return f"<FiniteRing {self.label} order={self.order}>"


def _check_capacity(order, max_order):
    if order > max_order:
        raise CapacityError(f"ring of order {order} exceeds the size cap {max_order}")


# ---------------------------------------------------------------------------
# constructors

def make_zn(n: int, *, max_table_order=DEFAULT_MAX_TABLE_ORDER,
            max_order=DEFAULT_MAX_ORDER) -> FiniteRing:
    if n < 2:
        raise InvalidOrderError(f"Z_n needs n >= 2, got {n}")
    _check_capacity(n, max_order)
    return FiniteRing(
        n, lambda a, b: (a + b) % n, lambda a, b: (a * b) % n, 1 % n,
        label=f"Z{n}", element_labels=[str(i) for i in range(n)], kind="zn",
        commutative=True, max_table_order=max_table_order, modulus=n)


def _poly_laws(n, f):
    d = f.degree
    radices = [n] * d
    low = f.coefficients[:d]

    def digits(a):
        # constant term first
        return _decode(a, radices)[::-1]

    def encode(coeffs):
        return _encode(coeffs[::-1], radices)

    def add(a, b):
        return encode([(x + y) % n for x, y in zip(digits(a), digits(b))])

    def mul(a, b):
        da, db = digits(a), digits(b)
        shape = np.broadcast(np.asarray(a), np.asarray(b)).shape
        prod = [np.zeros(shape, dtype=np.int64) for _ in range(2 * d - 1)]
        for i in range(d):
            for j in range(d):
                prod[i + j] = prod[i + j] + da[i] * db[j]
        for t in range(2 * d - 2, d - 1, -1):
            c = prod[t] % n
            for i in range(d):
                prod[t - d + i] = prod[t - d + i] - c * low[i]
        return encode([c % n for c in prod[:d]])

    return add, mul


def make_poly_quotient(n: int, f: Polynomial, *, label=None,
                       max_table_order=DEFAULT_MAX_TABLE_ORDER,
                       max_order=DEFAULT_MAX_ORDER) -> FiniteRing:
    """``Z_n[x]/(f)`` for a monic f of degree >= 1."""
    if n < 2:
        raise InvalidOrderError(f"coefficient ring Z_n needs n >= 2, got {n}")
    f = Polynomial(n, f.coefficients)
    if not f.is_monic:
        raise NonMonicModulusError(f"modulus {f} is not monic over Z{n}")
    if f.degree < 1:
        raise NonMonicModulusError("modulus must have degree >= 1")
    d = f.degree
    order = n ** d
    _check_capacity(order, max_order)
    add, mul = _poly_laws(n, f)
    labels = [render_poly(tuple(int(c) for c in reversed(t)), "x")
              for t in itertools.product(range(n), repeat=d)]
    return FiniteRing(
        order, add, mul, 1 if order > 1 else 0,
        label=label or f"Z{n}[x]/({f})", element_labels=labels, kind="poly",
        commutative=True, max_table_order=max_table_order, modulus=n, polynomial=f)


def make_gf(p: int, s: int = 1, **kwargs) -> FiniteRing:
    """The field of order p**s as ``Z_p[x]/(f)`` with f from ``find_irreducible``."""
    f = find_irreducible(p, s)
    ring = make_poly_quotient(p, f, label=f"GF({p ** s})", **kwargs)
    ring.kind = "gf"
    ring.meta.update(p=p, s=s)
    return ring


def make_product(factors, *, label=None, max_table_order=DEFAULT_MAX_TABLE_ORDER,
                 max_order=DEFAULT_MAX_ORDER) -> FiniteRing:
    factors = list(factors)
    if not factors:
        raise EmptyProductError("direct product of an empty list of rings")
    radices = [r.order for r in factors]
    order = math.prod(radices)
    _check_capacity(order, max_order)

    def law(name):
        def apply(a, b):
            da, db = _decode(a, radices), _decode(b, radices)
            return _encode([getattr(r, name)(x, y) for r, x, y in zip(factors, da, db)], radices)
        return apply

    labels = ["(" + ",".join(parts) + ")"
              for parts in itertools.product(*(r.element_labels for r in factors))]
    one = int(_encode([np.int64(r.one_index) for r in factors], radices))
    if label is None:
        label = " x ".join(f"({r.label})" if r.kind == "product" else r.label for r in factors)
    return FiniteRing(
        order, law("add"), law("mul"), one, label=label, element_labels=labels,
        kind="product", commutative=all(r.commutative for r in factors),
        max_table_order=max_table_order, factors=tuple(factors))


def make_matrix_ring(base: FiniteRing, k: int, *, label=None,
                     max_table_order=DEFAULT_MAX_TABLE_ORDER,
                     max_order=DEFAULT_MAX_ORDER) -> FiniteRing:
    """k x k matrices over a commutative ring."""
    if not base.commutative:
        raise ValueError("matrix rings are only built over commutative rings")
    if k < 1:
        raise InvalidOrderError(f"matrix size must be >= 1, got {k}")
    if base.order ** (k * k) > max_order:
        raise CapacityError(
            f"M{k}({base.label}) has {base.order}^{k * k} elements, above the size cap {max_order}")
    radices = [base.order] * (k * k)
    order = base.order ** (k * k)

    def add(a, b):
        da, db = _decode(a, radices), _decode(b, radices)
        return _encode([base.add(x, y) for x, y in zip(da, db)], radices)

    def mul(a, b):
        da, db = _decode(a, radices), _decode(b, radices)
        out = []
        for i in range(k):
            for j in range(k):
                acc = base.mul(da[i * k], db[j])
                for t in range(1, k):
                    acc = base.add(acc, base.mul(da[i * k + t], db[t * k + j]))
                out.append(acc)
        return _encode(out, radices)

    labels = []
    for entries in itertools.product(base.element_labels, repeat=k * k):
        rows = ["[" + ",".join(entries[i * k:(i + 1) * k]) + "]" for i in range(k)]
        labels.append("[" + ",".join(rows) + "]")
    identity = [np.int64(base.one_index if i == j else base.zero_index)
                for i in range(k) for j in range(k)]
    return FiniteRing(
        order, add, mul, int(_encode(identity, radices)),
        label=label or f"M{k}({base.label})", element_labels=labels, kind="matrix",
        commutative=None if k > 1 else True, max_table_order=max_table_order,
        base=base, size=k)


def matrix_index(ring: FiniteRing, rows) -> int:
    """Index of the matrix given as nested lists of base-ring indices."""
    base = ring.meta["base"]
    flat = [int(x) for row in rows for x in row]
    return int(_encode([np.int64(x) for x in flat], [base.order] * len(flat)))


def product_index(ring: FiniteRing, components) -> int:
    radices = [r.order for r in ring.meta["factors"]]
    return int(_encode([np.int64(c) for c in components], radices))


def product_components(ring: FiniteRing, x) -> tuple:
    radices = [r.order for r in ring.meta["factors"]]
    return tuple(int(d) for d in _decode(x, radices))


# ---------------------------------------------------------------------------
# audit, classification, annihilators

@dataclass(frozen=True)
class AuditResult:
    ok: bool
    message: str = "pass"
    triple: tuple = None
    noncommuting_pair: tuple = None

    def __bool__(self) -> bool:
        return self.ok


def ring_axiom_audit(ring: FiniteRing) -> AuditResult:
    """Exhaustive check of the ring axioms and of the commutativity flag."""
    code, a, b, c = kernels.audit_tables(ring.add_table, ring.mul_table,
                                         ring.zero_index, ring.one_index)
    if ring.one_index == ring.zero_index:
        return AuditResult(False, "identity equals zero", (ring.one_index,))
    if code != kernels.AUDIT_OK:
        return AuditResult(False, kernels.AUDIT_MESSAGES[code], (a, b, c))
    pair = ring.noncommuting_pair()
    if ring.commutative and pair is not None:
        return AuditResult(False, "flagged commutative but ab != ba", pair, pair)
    if not ring.commutative and pair is None:
        return AuditResult(False, "flagged noncommutative but all pairs commute")
    return AuditResult(True, noncommuting_pair=pair)


@dataclass(frozen=True)
class ElementClasses:
    units: ElementSet
    idempotents: ElementSet
    nilpotents: ElementSet
    zero_divisors: ElementSet
    nonzero_nonunits: ElementSet


def classify_elements(ring: FiniteRing) -> ElementClasses:
    n = ring.order
    mul = ring.mul_table
    one = ring.one_index
    units = ((mul == one) & (mul.T == one)).any(axis=1)
    idx = np.arange(n)
    idempotents = mul[idx, idx] == idx
    nil = idx == 0
    power = idx.copy()
    for _ in range(n):
        power = mul[power, idx]
        nil |= power == 0
    zero_col = mul == 0
    nonzero = idx != 0
    # x is a zero divisor if rx = 0 or xr = 0 for some nonzero r
    zd = (zero_col[1:, :].any(axis=0)) | (zero_col[:, 1:].any(axis=1))
    zd[0] = True
    return ElementClasses(
        units=ElementSet(units),
        idempotents=ElementSet(idempotents),
        nilpotents=ElementSet(nil),
        zero_divisors=ElementSet(zd),
        nonzero_nonunits=ElementSet(nonzero & ~units),
    )


def annihilator_matrix(ring: FiniteRing, side="two_sided") -> np.ndarray:
    """Boolean (n, n) array whose row x is the annihilator of x."""
    side = _check_side(side)
    zero = ring.mul_table == ring.zero_index
    if side == "left":
        return zero.T.copy()  # row x: {r : r x = 0}
    if side == "right":
        return zero.copy()  # row x: {r : x r = 0}
    return zero.T & zero


def annihilator(ring: FiniteRing, x: int, side="two_sided") -> ElementSet:
    side = _check_side(side)
    idx = ring.elements
    left = np.asarray(ring.mul(idx, x)) == ring.zero_index
    right = np.asarray(ring.mul(x, idx)) == ring.zero_index
    if ring.commutative:
        assert np.array_equal(left, right), "commutative ring with asymmetric annihilator"
    if side == "left":
        return ElementSet(left)
    if side == "right":
        return ElementSet(right)
    return ElementSet(left & right)


def default_side(ring: FiniteRing) -> str:
    return "two_sided" if ring.commutative else "left"

