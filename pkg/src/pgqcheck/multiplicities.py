"""Eigenvalue multiplicities of torsion units under integral characters.

A normalized torsion unit u of order n in an integral group ring maps to a
matrix of finite order under any representation, so its eigenvalues are n-th
roots of unity. When every character value involved is a rational integer,
the eigenvalue multiplicities are constant along Galois orbits of roots of
unity, leaving one multiplicity per divisor of n. For n = p * q with p, q
distinct primes the four multiplicities are determined by chi(1), chi(u^p),
chi(u^q) and chi(u), and for prime n by chi(1) and chi(u). Character values
at the powers of u come from partial augmentations, since chi(u) equals the
sum of eps_x(u) * chi(x) over conjugacy classes x. The HeLP constraints say
all multiplicities must be non-negative integers; everything here is exact
integer arithmetic (Python integers never overflow).
"""

from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "ClassInfo",
    "CharacterData",
    "PartialAugmentationVector",
    "UnitCandidate",
    "MultiplicityQuadruple",
    "MultiplicityPair",
    "Infeasible",
    "is_prime",
    "prime_pair",
    "chi_of_unit",
    "multiplicities_order_pq",
    "multiplicities_prime_order",
    "forward_character_values",
]


def is_prime(n):
    """Trial division primality test; unit orders here are tiny."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_pair(n):
    """Factor n = p * q with p < q distinct primes, else raise ValueError."""
    for p in range(2, n):
        if p * p >= n:
            break
        if n % p == 0:
            q = n // p
            if is_prime(p) and is_prime(q):
                return p, q
            break
    raise ValueError(f"{n} is not a product of two distinct primes")


@dataclass(frozen=True)
class ClassInfo:
    """A conjugacy class: its label and the order of its elements."""

    id: str
    element_order: int

    def __post_init__(self):
        if not self.id or not isinstance(self.id, str):
            raise ValueError("class id must be a nonempty string")
        if not isinstance(self.element_order, int) or self.element_order < 1:
            raise ValueError(f"element order must be a positive integer: {self.element_order}")


@dataclass(frozen=True)
class CharacterData:
    """An integer valued character: id, degree and values by class id.

    kind is "ordinary" or "brauer"; Brauer characters carry the defining
    characteristic and are only evaluated at elements of coprime order.
    Value maps may be partial; evaluation fails loudly on a missing class.
    """

    id: str
    degree: int
    values: dict
    kind: str = "ordinary"
    characteristic: int = None

    def __post_init__(self):
        if not self.id or not isinstance(self.id, str):
            raise ValueError("character id must be a nonempty string")
        if not isinstance(self.degree, int) or isinstance(self.degree, bool) or self.degree < 1:
            raise ValueError(f"degree must be a positive integer: {self.degree}")
        if self.kind not in ("ordinary", "brauer"):
            raise ValueError(f"kind must be ordinary or brauer: {self.kind}")
        if self.kind == "brauer":
            if not isinstance(self.characteristic, int) or not is_prime(self.characteristic):
                raise ValueError(f"Brauer character needs a prime characteristic: {self.characteristic}")
        elif self.characteristic is not None:
            raise ValueError("ordinary characters carry no characteristic")
        values = dict(self.values)
        for cid, v in values.items():
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"character value at {cid} must be an integer: {v!r}")
        object.__setattr__(self, "values", values)


@dataclass(frozen=True)
class PartialAugmentationVector:
    """Partial augmentations of a normalized unit, keyed by class id.

    The values must sum to 1 (units of augmentation 1); classes with zero
    augmentation may be omitted.
    """

    unit_order: int
    eps: dict

    def __post_init__(self):
        if not isinstance(self.unit_order, int) or self.unit_order < 1:
            raise ValueError(f"unit order must be a positive integer: {self.unit_order}")
        eps = dict(self.eps)
        for cid, v in eps.items():
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"partial augmentation at {cid} must be an integer: {v!r}")
        if sum(eps.values()) != 1:
            raise ValueError(
                f"partial augmentations must sum to 1, got {sum(eps.values())}"
            )
        object.__setattr__(self, "eps", eps)

    def as_tuple(self, class_ids):
        """Augmentations in the given class order, zero where absent."""
        return tuple(self.eps.get(cid, 0) for cid in class_ids)


@dataclass(frozen=True)
class UnitCandidate:
    """A hypothetical unit of order p * q with its power data.

    pa_u describes u itself, pa_up its p-th power u^p (a unit of order q)
    and pa_uq its q-th power u^q (a unit of order p).
    """

    p: int
    q: int
    pa_u: PartialAugmentationVector
    pa_up: PartialAugmentationVector
    pa_uq: PartialAugmentationVector

    def __post_init__(self):
        p, q = self.p, self.q
        if not (is_prime(p) and is_prime(q) and p != q):
            raise ValueError(f"p and q must be distinct primes: {p}, {q}")
        if self.pa_u.unit_order != p * q:
            raise ValueError("pa_u must have unit order p * q")
        if self.pa_up.unit_order != q:
            raise ValueError("pa_up describes u^p, a unit of order q")
        if self.pa_uq.unit_order != p:
            raise ValueError("pa_uq describes u^q, a unit of order p")


class MultiplicityQuadruple(NamedTuple):
    """Multiplicities of the eigenvalue orbits 1, zeta_p, zeta_q, zeta_pq."""

    mu_1: int
    mu_zp: int
    mu_zq: int
    mu_zpq: int


class MultiplicityPair(NamedTuple):
    """Multiplicities of the orbits 1 and zeta_r for prime order r."""

    mu_1: int
    mu_zr: int


@dataclass(frozen=True)
class Infeasible:
    """A HeLP violation: which constraint failed and the offending value."""

    reason: str
    detail: str = ""

    def __bool__(self):
        return False


def chi_of_unit(chi, pa):
    """chi(u) as the integer sum of eps_x(u) * chi(x) over classes.

    Raises ValueError when chi lacks a value on a class with nonzero
    augmentation, or when a Brauer character is evaluated at a unit whose
    order is divisible by the defining characteristic.
    """
    if chi.kind == "brauer" and pa.unit_order % chi.characteristic == 0:
        raise ValueError(
            f"Brauer character {chi.id} of characteristic {chi.characteristic} "
            f"cannot be evaluated at a unit of order {pa.unit_order}"
        )
    total = 0
    for cid, e in pa.eps.items():
        if e == 0:
            continue
        if cid not in chi.values:
            raise ValueError(f"character {chi.id} has no value on class {cid}")
        total += e * chi.values[cid]
    return total


def multiplicities_order_pq(d, x, y, z, p, q):
    """Eigenvalue orbit multiplicities for a unit of order p * q.

    d = chi(1), x = chi(u^p), y = chi(u^q), z = chi(u). Returns a
    MultiplicityQuadruple, or Infeasible("non-integral" or "negative") when
    a HeLP constraint fails; infeasibility is an ordinary result, since the
    enumerator uses it as a pruning signal.
    """
    n = p * q
    forms = (
        ("mu_1", d + (q - 1) * x + (p - 1) * y + (p - 1) * (q - 1) * z),
        ("mu_zp", d + (q - 1) * x - y - (q - 1) * z),
        ("mu_zq", d - x + (p - 1) * y - (p - 1) * z),
        ("mu_zpq", d - x - y + z),
    )
    for name, value in forms:
        if value % n:
            return Infeasible("non-integral", f"{name} = {value}/{n}")
    quad = MultiplicityQuadruple(*(value // n for _, value in forms))
    for name, value in zip(quad._fields, quad):
        if value < 0:
            return Infeasible("negative", f"{name} = {value}")
    return quad


def multiplicities_prime_order(d, z, r):
    """Eigenvalue orbit multiplicities for a unit of prime order r.

    d = chi(1), z = chi(u). Returns a MultiplicityPair or Infeasible.
    """
    forms = (("mu_1", d + (r - 1) * z), ("mu_zr", d - z))
    for name, value in forms:
        if value % r:
            return Infeasible("non-integral", f"{name} = {value}/{r}")
    pair = MultiplicityPair(*(value // r for _, value in forms))
    for name, value in zip(pair._fields, pair):
        if value < 0:
            return Infeasible("negative", f"{name} = {value}")
    return pair


def forward_character_values(quad, p, q):
    """Character values (chi(1), chi(u^q), chi(u^p), chi(u)) realizing quad.

    Inverse of multiplicities_order_pq: feeding the result back through it
    returns the original quadruple whenever that is feasible.
    """
    mu_1, mu_zp, mu_zq, mu_zpq = quad
    d = mu_1 + (p - 1) * mu_zp + (q - 1) * mu_zq + (p - 1) * (q - 1) * mu_zpq
    yq = mu_1 - mu_zp + (q - 1) * mu_zq - (q - 1) * mu_zpq
    xp = mu_1 + (p - 1) * mu_zp - mu_zq - (p - 1) * mu_zpq
    zu = mu_1 - mu_zp - mu_zq + mu_zpq
    return (d, yq, xp, zu)
