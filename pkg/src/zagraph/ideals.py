"""Ideals of finite rings: spans, the full lattice, spectra and quotients."""
from dataclasses import dataclass
import math

import numpy as np

from .errors import CapacityError, InvalidQuotientError
from .ring import (
    DEFAULT_MAX_TABLE_ORDER,
    ElementSet,
    FiniteRing,
    annihilator_matrix,
    classify_elements,
)

DEFAULT_MAX_IDEALS = 4096


@dataclass(frozen=True)
class Ideal:
    ring_label: str
    members: ElementSet

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x) -> bool:
        return x in self.members

    def __le__(self, other: "Ideal") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "Ideal") -> bool:
        return self.members < other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.members == other.members

    def indices(self) -> list:
        return self.members.indices()

    @property
    def is_zero(self) -> bool:
        return self.members.is_zero_only()

    @property
    def is_whole(self) -> bool:
        return len(self) == self.members.ring_order

    def sort_key(self):
        return (len(self), self.indices())

    def __repr__(self) -> str:
        return f"Ideal({self.indices()})"


def _closure(ring: FiniteRing, members: np.ndarray) -> np.ndarray:
    members = members.copy()
    members[ring.zero_index] = True
    everything = ring.elements
    while True:
        idx = np.flatnonzero(members)
        grown = members.copy()
        grown[np.asarray(ring.add(idx[:, None], idx[None, :])).ravel()] = True
        grown[np.asarray(ring.mul(everything[:, None], idx[None, :])).ravel()] = True
        if not ring.commutative:
            grown[np.asarray(ring.mul(idx[:, None], everything[None, :])).ravel()] = True
        if np.array_equal(grown, members):
            return members
        members = grown


def ideal_span(ring: FiniteRing, generators) -> Ideal:
    """Smallest two-sided ideal containing ``generators``."""
    if isinstance(generators, ElementSet):
        members = generators.members.copy()
    else:
        members = np.zeros(ring.order, dtype=bool)
        members[list(generators)] = True
    return Ideal(ring.label, ElementSet(_closure(ring, members)))


def principal_ideal(ring: FiniteRing, x: int) -> Ideal:
    if ring.commutative:
        # Rx is already closed under addition
        members = np.zeros(ring.order, dtype=bool)
        members[np.asarray(ring.mul(ring.elements, x))] = True
        return Ideal(ring.label, ElementSet(members))
    return ideal_span(ring, [x])


def _lattice_cache(ring):
    cache = ring.__dict__.setdefault("_ideal_cache", {})
    return cache


def principal_ideals(ring: FiniteRing) -> list:
    cache = _lattice_cache(ring)
    if "principal" not in cache:
        found = {}
        for x in range(ring.order):
            ideal = principal_ideal(ring, x)
            found.setdefault(ideal, None)
        cache["principal"] = sorted(found, key=Ideal.sort_key)
    return cache["principal"]


def all_ideals(ring: FiniteRing, max_ideals: int = DEFAULT_MAX_IDEALS) -> list:
    """Every ideal, as sums of principal ideals closed to a fixpoint.

    Sorted by (cardinality, member indices).
    """
    cache = _lattice_cache(ring)
    if "all" in cache:
        if len(cache["all"]) > max_ideals:
            raise CapacityError(f"{ring.label} has more than {max_ideals} ideals")
        return cache["all"]
    add = ring.add
    known = {ideal.members.members.tobytes(): ideal.members.members
             for ideal in principal_ideals(ring)}
    if len(known) > max_ideals:
        raise CapacityError(f"{ring.label} has more than {max_ideals} ideals")
    frontier = list(known.values())
    while frontier:
        fresh = []
        current = list(known.values())
        for a in frontier:
            ia = np.flatnonzero(a)
            for b in current:
                if (a <= b).all() or (b <= a).all():
                    continue
                ib = np.flatnonzero(b)
                s = np.zeros(ring.order, dtype=bool)
                s[np.asarray(add(ia[:, None], ib[None, :])).ravel()] = True
                key = s.tobytes()
                if key not in known:
                    known[key] = s
                    fresh.append(s)
                    if len(known) > max_ideals:
                        raise CapacityError(f"{ring.label} has more than {max_ideals} ideals")
        frontier = fresh
    ideals = sorted((Ideal(ring.label, ElementSet(m)) for m in known.values()), key=Ideal.sort_key)
    cache["all"] = ideals
    return ideals


@dataclass(frozen=True)
class IdealAlgebra:
    sum: Ideal
    intersection: Ideal
    product: Ideal


def ideal_algebra(ring: FiniteRing, I: Ideal, J: Ideal) -> IdealAlgebra:
    ii, jj = np.array(I.indices()), np.array(J.indices())
    total = ideal_span(ring, I.members | J.members)
    meet = I.members & J.members
    assert ideal_span(ring, meet).members == meet, "intersection of ideals is not an ideal"
    products = np.asarray(ring.mul(ii[:, None], jj[None, :])).ravel()
    return IdealAlgebra(total, Ideal(ring.label, meet), ideal_span(ring, set(int(p) for p in products)))


def ideal_annihilator(ring: FiniteRing, I) -> Ideal:
    """Elements killing every member of I (on both sides)."""
    members = I.indices() if hasattr(I, "indices") else list(I)
    ann = annihilator_matrix(ring, "two_sided")
    result = ann[members].all(axis=0) if members else np.ones(ring.order, dtype=bool)
    return Ideal(ring.label, ElementSet(result))


@dataclass(frozen=True)
class IdealClass:
    proper: bool
    prime: bool
    maximal: bool
    # (a, b) with aRb inside I but neither a nor b in I
    prime_witness: tuple = None


def _prime_witness(ring: FiniteRing, I: Ideal):
    inside = I.members.members
    mul = ring.mul_table
    if ring.commutative:
        bad = inside[mul] & ~inside[:, None] & ~inside[None, :]
    else:
        # aRb subset of I, checked for all r at once
        arb = mul[mul[:, :, None], np.arange(ring.order)[None, None, :]]  # [a, r, b]
        bad = inside[arb].all(axis=1) & ~inside[:, None] & ~inside[None, :]
    hits = np.argwhere(bad)
    return tuple(int(v) for v in hits[0]) if hits.size else None


def classify_ideal(ring: FiniteRing, I: Ideal, lattice=None) -> IdealClass:
    proper = not I.is_whole
    if not proper:
        return IdealClass(False, False, False)
    witness = _prime_witness(ring, I)
    lattice = all_ideals(ring) if lattice is None else lattice
    maximal = not any(I < J and not J.is_whole for J in lattice)
    return IdealClass(True, witness is None, maximal, witness)


@dataclass(frozen=True)
class SpectrumSummary:
    maximal_ideals: tuple
    prime_ideals: tuple
    minimal_primes: tuple
    jacobson_radical: Ideal


def spectrum(ring: FiniteRing) -> SpectrumSummary:
    cache = _lattice_cache(ring)
    if "spectrum" in cache:
        return cache["spectrum"]
    lattice = all_ideals(ring)
    classes = [(I, classify_ideal(ring, I, lattice)) for I in lattice]
    maximal = tuple(I for I, c in classes if c.maximal)
    primes = tuple(I for I, c in classes if c.prime)
    minimal = tuple(P for P in primes if not any(Q < P for Q in primes))
    jac = np.ones(ring.order, dtype=bool)
    for m in maximal:
        jac &= m.members.members
    out = SpectrumSummary(maximal, primes, minimal, Ideal(ring.label, ElementSet(jac)))
    cache["spectrum"] = out
    return out


def quotient_ring(ring: FiniteRing, I: Ideal, max_table_order=DEFAULT_MAX_TABLE_ORDER) -> FiniteRing:
    """R/I on least coset representatives."""
    if I.is_whole:
        raise InvalidQuotientError("cannot take the quotient by the whole ring")
    members = np.array(I.indices())
    cosets = np.asarray(ring.add(ring.elements[:, None], members[None, :]))
    rep = cosets.min(axis=1)
    reps = np.unique(rep)
    new_index = np.full(ring.order, -1, dtype=np.int64)
    new_index[reps] = np.arange(reps.size)

    def law(op):
        return lambda a, b: new_index[rep[np.asarray(op(reps[a], reps[b]))]]

    label = ring.label if I.is_zero else f"{ring.label}/{ideal_label(ring, I)}"
    return FiniteRing(
        reps.size, law(ring.add), law(ring.mul), new_index[rep[ring.one_index]],
        label=label, element_labels=[ring.element_labels[r] for r in reps], kind="quotient",
        commutative=None, max_table_order=max_table_order, parent=ring, ideal=I)


def ideal_label(ring, I) -> str:
    """``(g)`` for the least generator g of a principal ideal, else the member list."""
    for x in range(1, ring.order):
        if principal_ideal(ring, x) == I:
            return f"({ring.element_labels[x]})"
    return "{" + ",".join(ring.element_labels[x] for x in I.indices()) + "}"


@dataclass(frozen=True)
class RingPredicates:
    local: bool
    field: bool
    chained: bool
    bezout: bool
    reduced: bool
    semiprimitive: bool
    integral_domain: bool


def ring_predicates(ring: FiniteRing) -> RingPredicates:
    cache = _lattice_cache(ring)
    if "predicates" in cache:
        return cache["predicates"]
    lattice = all_ideals(ring)
    spec = spectrum(ring)
    classes = classify_elements(ring)
    nonzero = ring.order - 1
    chained = all(I <= J or J <= I for i, I in enumerate(lattice) for J in lattice[i + 1:])
    principal = set(principal_ideals(ring))
    no_zero_divisors = len(classes.zero_divisors) == 1
    out = RingPredicates(
        local=len(spec.maximal_ideals) == 1,
        field=ring.commutative and len(classes.units) == nonzero,
        chained=chained,
        bezout=all(I in principal for I in lattice),
        reduced=len(classes.nilpotents) == 1,
        semiprimitive=spec.jacobson_radical.is_zero,
        integral_domain=ring.commutative and no_zero_divisors,
    )
    cache["predicates"] = out
    return out


def is_field(ring: FiniteRing) -> bool:
    classes = classify_elements(ring)
    return ring.commutative and len(classes.units) == ring.order - 1


def crt_decompose(ring: FiniteRing):
    """Quotients by the maximal ideals when R is a product of fields, else None.

    The result is only returned after checking that Jac(R) = 0, that every
    quotient is a field and that the quotient orders multiply to |R|.
    """
    spec = spectrum(ring)
    if not spec.jacobson_radical.is_zero:
        return None
    factors = sorted((quotient_ring(ring, m) for m in spec.maximal_ideals), key=lambda f: f.order)
    if math.prod(f.order for f in factors) != ring.order:
        return None
    if not all(is_field(f) for f in factors):
        return None
    return factors
