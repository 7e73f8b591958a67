"""HeLP enumeration of partial augmentation candidates.

The search space for a unit of order n is the set of integer vectors eps
over the non-identity classes whose element order divides n, with sum 1 and
every coordinate bounded by a box bound B in absolute value. Constraint
characters prune the space: every eigenvalue multiplicity must be a
non-negative integer. The non-negativity constraints are linear half planes
in the per-character value z = chi(u), so each character contributes a
closed window of admissible z values; interval propagation over partially
fixed coordinates shrinks the scan, the final free coordinate is solved
against its windows exactly, and the divisibility constraints are applied
as a final exact filter. Candidates whose coordinates touch the box bound
are flagged, since the true solution set might extend beyond the box.
"""

from dataclasses import dataclass

from .multiplicities import (
    Infeasible,
    PartialAugmentationVector,
    UnitCandidate,
    chi_of_unit,
    is_prime,
    multiplicities_order_pq,
    multiplicities_prime_order,
    prime_pair,
)

__all__ = [
    "HelpQuery",
    "CandidateSet",
    "enumerate_prime_order",
    "enumerate_order_pq",
    "candidate_flat_tuple",
    "prime_flat_tuple",
]

DEFAULT_BOUND = 128


@dataclass(frozen=True)
class HelpQuery:
    """One enumeration request: unit order, constraints, class universe."""

    unit_order: int
    characters: tuple
    classes: tuple
    bound: int = DEFAULT_BOUND

    def __post_init__(self):
        object.__setattr__(self, "characters", tuple(self.characters))
        object.__setattr__(self, "classes", tuple(self.classes))
        if not isinstance(self.unit_order, int) or self.unit_order < 2:
            raise ValueError(f"unit order must be an integer >= 2: {self.unit_order}")
        if not isinstance(self.bound, int) or self.bound < 1:
            raise ValueError(f"bound must be a positive integer: {self.bound}")
        seen = set()
        for cls in self.classes:
            if cls.id in seen:
                raise ValueError(f"duplicate class id {cls.id}")
            seen.add(cls.id)
        for chi in self.characters:
            if chi.kind == "brauer" and self.unit_order % chi.characteristic == 0:
                raise ValueError(
                    f"Brauer character {chi.id} of characteristic "
                    f"{chi.characteristic} cannot constrain units of order "
                    f"{self.unit_order}"
                )

    def support(self):
        """Non-identity classes of order dividing the unit order, in
        declaration order; partial augmentations vanish elsewhere."""
        return tuple(
            cls
            for cls in self.classes
            if cls.element_order > 1 and self.unit_order % cls.element_order == 0
        )


@dataclass(frozen=True)
class CandidateSet:
    """Enumeration result: surviving candidates plus any warnings."""

    unit_order: int
    candidates: tuple
    warnings: tuple = ()


def _values_on(chi, class_ids):
    try:
        return tuple(chi.values[cid] for cid in class_ids)
    except KeyError as missing:
        raise ValueError(
            f"character {chi.id} has no value on class {missing.args[0]}"
        ) from None


def _ceil_div(a, b):
    return -((-a) // b)


def _scan_eps(vecs, windows, bound):
    """Yield integer vectors eps with sum 1, sup norm <= bound, and every
    dot product vecs[c] . eps inside the closed interval windows[c].

    The last coordinate is forced by the sum; the remaining coordinates are
    searched depth first. At each depth the reachable range of each dot
    product is compared against its window, and the final free coordinate
    is solved exactly against all windows.
    """
    k = len(vecs[0]) if vecs else 0
    nchars = len(vecs)
    if any(lo > hi for lo, hi in windows):
        return
    if k == 0:
        return
    if k == 1:
        if all(lo <= v[0] <= hi for v, (lo, hi) in zip(vecs, windows)):
            yield (1,)
        return
    shifted = [[v[i] - v[-1] for i in range(k - 1)] for v in vecs]
    slack = []
    for c in range(nchars):
        acc = [0] * k
        for t in range(k - 2, -1, -1):
            acc[t] = acc[t + 1] + abs(shifted[c][t]) * bound
        slack.append(acc)
    eps = [0] * k

    def rec(t, bases, chosen_sum):
        if t == k - 2:
            elo, ehi = -bound, bound
            for c in range(nchars):
                w = shifted[c][t]
                lo, hi = windows[c]
                lo -= bases[c]
                hi -= bases[c]
                if w == 0:
                    if lo > 0 or hi < 0:
                        return
                elif w > 0:
                    elo = max(elo, _ceil_div(lo, w))
                    ehi = min(ehi, hi // w)
                else:
                    elo = max(elo, _ceil_div(hi, w))
                    ehi = min(ehi, lo // w)
                if elo > ehi:
                    return
            for e in range(elo, ehi + 1):
                last = 1 - chosen_sum - e
                if abs(last) > bound:
                    continue
                eps[t] = e
                eps[k - 1] = last
                yield tuple(eps)
            return
        for e in range(-bound, bound + 1):
            nb = []
            ok = True
            for c in range(nchars):
                base = bases[c] + shifted[c][t] * e
                s = slack[c][t + 1]
                lo, hi = windows[c]
                if base - s > hi or base + s < lo:
                    ok = False
                    break
                nb.append(base)
            if ok:
                eps[t] = e
                yield from rec(t + 1, nb, chosen_sum + e)

    yield from rec(0, [v[-1] for v in vecs], 0)


def prime_flat_tuple(pa, classes):
    """eps of a prime order unit over its support, in declaration order."""
    support = [c.id for c in classes if c.element_order == pa.unit_order]
    return pa.as_tuple(support)


def candidate_flat_tuple(candidate, classes):
    """Serialized order p*q candidate, powers first.

    The tuple lists the augmentations of u^q on the order p classes, then
    those of u on all support classes, each block in class declaration
    order. (u^p is determined by the order q block of u's own support in
    the cases this package targets, and is reported separately.)
    """
    p, q = candidate.p, candidate.q
    first = [
        candidate.pa_uq.eps.get(c.id, 0)
        for c in classes
        if c.element_order == p
    ]
    rest = [
        candidate.pa_u.eps.get(c.id, 0)
        for c in classes
        if c.element_order in (p, q, p * q)
    ]
    return tuple(first + rest)


def enumerate_prime_order(query):
    """All partial augmentation vectors passing HeLP for prime order.

    Requires at least one class of the given prime order. The result is
    sorted by the eps tuple in class declaration order; every candidate is
    re-checked through the public multiplicity interface before being
    returned.
    """
    r = query.unit_order
    if not is_prime(r):
        raise ValueError(f"unit order {r} is not prime")
    support = [c.id for c in query.support()]
    if not support:
        raise ValueError(f"no conjugacy classes of element order {r}")
    bound = query.bound
    vecs, windows = [], []
    for chi in query.characters:
        vecs.append(_values_on(chi, support))
        d = chi.degree
        windows.append((_ceil_div(-d, r - 1), d))
    found = []
    for eps in _scan_eps(vecs, windows, bound) if query.characters else _scan_box(len(support), bound):
        ok = True
        for chi, vec in zip(query.characters, vecs):
            z = sum(v * e for v, e in zip(vec, eps))
            if isinstance(multiplicities_prime_order(chi.degree, z, r), Infeasible):
                ok = False
                break
        if ok:
            found.append(eps)
    found.sort()
    warnings = []
    if any(any(abs(e) == bound for e in eps) for eps in found):
        warnings.append(
            f"order {r}: a surviving candidate touches the box bound {bound}; "
            "the candidate set may be incomplete, rerun with a larger bound"
        )
    candidates = []
    for eps in found:
        pa = PartialAugmentationVector(r, dict(zip(support, eps)))
        for chi in query.characters:
            check = multiplicities_prime_order(chi.degree, chi_of_unit(chi, pa), r)
            if isinstance(check, Infeasible):
                raise AssertionError(
                    f"enumeration soundness failure at {eps} for {chi.id}"
                )
        candidates.append(pa)
    return CandidateSet(r, tuple(candidates), tuple(warnings))


def _scan_box(k, bound):
    """Unconstrained sum 1 box scan, for queries without characters."""
    if k == 1:
        yield (1,)
        return

    def rec(t, chosen_sum, acc):
        if t == k - 1:
            last = 1 - chosen_sum
            if abs(last) <= bound:
                yield tuple(acc) + (last,)
            return
        for e in range(-bound, bound + 1):
            yield from rec(t + 1, chosen_sum + e, acc + [e])

    yield from rec(0, 0, [])


def enumerate_order_pq(query, power_candidates_p, power_candidates_q):
    """Candidates for units of order p * q given both power candidate sets.

    power_candidates_p lists the admissible vectors for u^p (units of order
    q) and power_candidates_q those for u^q (units of order p). Every pair
    of power vectors is combined with every eps vector for u on the support
    classes; a combination survives when, for every constraint character,
    all four orbit multiplicities are non-negative integers. Candidates are
    sorted by their flat serialization.
    """
    n = query.unit_order
    p, q = prime_pair(n)
    if power_candidates_p.unit_order != q:
        raise ValueError("power_candidates_p must hold units of order q (for u^p)")
    if power_candidates_q.unit_order != p:
        raise ValueError("power_candidates_q must hold units of order p (for u^q)")
    support = [c.id for c in query.support()]
    if not support:
        raise ValueError(f"no conjugacy classes of order dividing {n} besides 1")
    bound = query.bound
    chars = query.characters
    vecs = [_values_on(chi, support) for chi in chars]
    found = []
    warnings = list(power_candidates_p.warnings) + list(power_candidates_q.warnings)
    for pa_up in power_candidates_p.candidates:
        xs = [chi_of_unit(chi, pa_up) for chi in chars]
        for pa_uq in power_candidates_q.candidates:
            ys = [chi_of_unit(chi, pa_uq) for chi in chars]
            windows = []
            for chi, x, y in zip(chars, xs, ys):
                d = chi.degree
                lo = max(
                    _ceil_div(-(d + (q - 1) * x + (p - 1) * y), (p - 1) * (q - 1)),
                    x + y - d,
                )
                hi = min(
                    (d + (q - 1) * x - y) // (q - 1),
                    (d - x + (p - 1) * y) // (p - 1),
                )
                windows.append((lo, hi))
            scan = (
                _scan_eps(vecs, windows, bound)
                if chars
                else _scan_box(len(support), bound)
            )
            for eps in scan:
                ok = True
                for chi, vec, x, y in zip(chars, vecs, xs, ys):
                    z = sum(v * e for v, e in zip(vec, eps))
                    quad = multiplicities_order_pq(chi.degree, x, y, z, p, q)
                    if isinstance(quad, Infeasible):
                        ok = False
                        break
                if ok:
                    found.append((eps, pa_up, pa_uq))
    if any(any(abs(e) == bound for e in eps) for eps, _, _ in found):
        warnings.append(
            f"order {n}: a surviving candidate touches the box bound {bound}; "
            "the candidate set may be incomplete, rerun with a larger bound"
        )
    candidates = []
    for eps, pa_up, pa_uq in found:
        pa_u = PartialAugmentationVector(n, dict(zip(support, eps)))
        cand = UnitCandidate(p, q, pa_u, pa_up, pa_uq)
        for chi in chars:
            quad = multiplicities_order_pq(
                chi.degree,
                chi_of_unit(chi, pa_up),
                chi_of_unit(chi, pa_uq),
                chi_of_unit(chi, pa_u),
                p,
                q,
            )
            if isinstance(quad, Infeasible):
                raise AssertionError(
                    f"enumeration soundness failure at {eps} for {chi.id}"
                )
        candidates.append(cand)
    classes = query.classes
    candidates.sort(key=lambda c: candidate_flat_tuple(c, classes))
    return CandidateSet(n, tuple(candidates), tuple(warnings))
