"""Brauer tree line criterion for excluding torsion units.

For a block with cyclic defect group of order p whose Brauer tree is an open
line chi_1 - chi_2 - ... - chi_p, the restrictions to a hypothetical unit u
of order p * q constrain each other along the line. Write s_i and r_i for
the eigenvalue multiplicities mu(xi, u, chi_i) and mu(xi * zeta_p, u, chi_i)
of a fixed p'-th root of unity xi and its twist by a primitive p-th root.
When p is unramified in a suitable coefficient ring, the lattice structure
of the line forces

    r_{p-1} - r_p  <=  s_1 - sum_{i=1}^{p-2} (-1)^i r_i,

so a violation certifies that no such unit exists. The inequality follows
from a chain of Littlewood-Richardson conditions: partitions

    lambda_i(a_i) = (p^{a_i}, (p-1)^{r_i - a_i}, 1^{s_i - a_i})

must satisfy mu_1 = lambda_1(a_1), mu_{p-1} = lambda_p(a_p) and
c^{lambda_i(a_i)}_{mu_{i-1}, mu_i} != 0 for 2 <= i <= p - 1 for some choice
of the a_i and intermediate partitions mu_i. chain_feasibility searches for
such a chain directly; cross_validate checks the implication between the
two criteria, which is a pure consistency test of the implementation.
"""

import itertools
from dataclasses import dataclass

from .multiplicities import is_prime
from .tableaux import check_partition, contains, lr_nonzero_contents

__all__ = [
    "BrauerLineCase",
    "EigenvalueProfile",
    "ModuleDecomposition",
    "Theorem2Result",
    "ChainVerdict",
    "CrossValidation",
    "indecomposable_partition",
    "theorem2_check",
    "chain_feasibility",
    "cross_validate",
    "cross_validate_exhaustive",
]

DEFAULT_SIZE_CEILING = 40


@dataclass(frozen=True)
class BrauerLineCase:
    """An open line Brauer tree: the prime p and the ordered character ids.

    unramified_asserted records the hypothesis that p is unramified in the
    coefficient ring; it is an assertion about the input data, not something
    this package can verify, and the criterion refuses to run without it.
    xi_label documents which m-th root of unity component the s row refers
    to (default: the trivial one).
    """

    p: int
    line: tuple
    unramified_asserted: bool
    xi_label: str = "1"

    def __post_init__(self):
        object.__setattr__(self, "line", tuple(self.line))
        if not is_prime(self.p) or self.p < 3:
            raise ValueError(f"the line prime must be an odd prime: {self.p}")
        if len(self.line) != self.p:
            raise ValueError(
                f"an open line for p = {self.p} has exactly {self.p} characters, "
                f"got {len(self.line)}"
            )
        if len(set(self.line)) != len(self.line):
            raise ValueError("line characters must be distinct")


@dataclass(frozen=True)
class EigenvalueProfile:
    """Positional multiplicity rows (s_1..s_p, r_1..r_p) along a line."""

    s: tuple
    r: tuple

    def __post_init__(self):
        s = tuple(int(v) for v in self.s)
        r = tuple(int(v) for v in self.r)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "r", r)
        if len(s) != len(r):
            raise ValueError("s and r rows must have equal length")
        if any(v < 0 for v in s + r):
            raise ValueError("eigenvalue multiplicities are non-negative")


@dataclass(frozen=True)
class Theorem2Result:
    """Outcome of the line inequality: verdict plus both exact sides."""

    verdict: str
    lhs: int
    rhs: int


@dataclass(frozen=True)
class ChainVerdict:
    """Outcome of the chain search.

    status is "feasible", "infeasible" or "skipped (size)"; a skipped search
    is never silently treated as either answer. For feasible chains, witness
    holds ((a_1, ..., a_p), (mu_1, ..., mu_{p-1})).
    """

    status: str
    witness: tuple = None

    @property
    def feasible(self):
        """True, False, or None when the search was skipped."""
        if self.status == "skipped (size)":
            return None
        return self.status == "feasible"


@dataclass(frozen=True)
class CrossValidation:
    """Joint run of both criteria; consistent is None when the chain was
    skipped for size."""

    consistent: bool
    theorem2: Theorem2Result
    chain: ChainVerdict


def indecomposable_partition(p, r, s, a):
    """The partition (p^a, (p-1)^(r-a), 1^(s-a)); needs 0 <= a <= min(r, s)."""
    if not 0 <= a <= min(r, s):
        raise ValueError(f"a = {a} outside 0..min({r}, {s})")
    return (p,) * a + (p - 1,) * (r - a) + (1,) * (s - a)


@dataclass(frozen=True)
class ModuleDecomposition:
    """One choice of the free parameter a for multiplicities (r, s).

    Describes a module decomposing into a indecomposables of dimension p,
    r - a of dimension p - 1 and s - a of dimension 1; partition() is the
    corresponding Young diagram row multiset.
    """

    p: int
    r: int
    s: int
    a: int

    def __post_init__(self):
        if not 0 <= self.a <= min(self.r, self.s):
            raise ValueError(
                f"a = {self.a} outside 0..min({self.r}, {self.s})"
            )

    def partition(self):
        return indecomposable_partition(self.p, self.r, self.s, self.a)


def _profile_for(case, profile):
    p = case.p
    if len(profile.s) != p:
        raise ValueError(
            f"profile carries {len(profile.s)} characters, the line needs {p}"
        )
    return profile


def theorem2_check(profile, case):
    """Evaluate the line inequality; "violated" certifies exclusion.

    lhs = r_{p-1} - r_p and rhs = s_1 - sum_{i=1}^{p-2} (-1)^i r_i; the
    verdict is "holds" when lhs <= rhs. Requires the unramified assertion.
    """
    if not case.unramified_asserted:
        raise ValueError(
            "the line inequality needs the unramified assertion on the case"
        )
    profile = _profile_for(case, profile)
    p = case.p
    r = profile.r
    lhs = r[p - 2] - r[p - 1]
    rhs = profile.s[0] - sum((-1) ** i * r[i - 1] for i in range(1, p - 1))
    return Theorem2Result("holds" if lhs <= rhs else "violated", lhs, rhs)


def chain_feasibility(profile, case, size_ceiling=DEFAULT_SIZE_CEILING):
    """Search for a Littlewood-Richardson chain realizing the profile.

    Works level by level: the set of partitions reachable as mu_i is
    propagated through lr_nonzero_contents, with parent pointers for witness
    reconstruction. Partition sizes are forced by telescoping, which gives a
    cheap necessary filter. Profiles whose partitions exceed size_ceiling
    boxes return status "skipped (size)" instead of an answer.
    """
    profile = _profile_for(case, profile)
    p = case.p
    r, s = profile.r, profile.s
    sizes = [(p - 1) * r[i] + s[i] for i in range(p)]
    if max(sizes) > size_ceiling:
        return ChainVerdict("skipped (size)")
    need = [sizes[0]]
    for i in range(1, p - 1):
        need.append(sizes[i] - need[-1])
    if any(n < 0 for n in need):
        return ChainVerdict("infeasible")
    if any(need[i] > sizes[i + 1] for i in range(p - 2)):
        return ChainVerdict("infeasible")
    if need[-1] != sizes[p - 1]:
        return ChainVerdict("infeasible")

    levels = []
    first = {}
    for a in range(min(r[0], s[0]) + 1):
        first.setdefault(indecomposable_partition(p, r[0], s[0], a), a)
    levels.append(first)
    for i in range(1, p - 1):
        lam_opts = [
            (a, indecomposable_partition(p, r[i], s[i], a))
            for a in range(min(r[i], s[i]) + 1)
        ]
        level = {}
        for mu_prev in sorted(levels[-1]):
            for a, lam in lam_opts:
                if not contains(lam, mu_prev):
                    continue
                for nu in lr_nonzero_contents(lam, mu_prev):
                    if nu not in level:
                        level[nu] = (mu_prev, a)
        if not level:
            return ChainVerdict("infeasible")
        levels.append(level)

    targets = {}
    for a in range(min(r[p - 1], s[p - 1]) + 1):
        targets.setdefault(indecomposable_partition(p, r[p - 1], s[p - 1], a), a)
    hits = sorted(set(levels[-1]) & set(targets))
    if not hits:
        return ChainVerdict("infeasible")
    end = hits[0]
    mus = [end]
    a_rev = [targets[end]]
    node = end
    for level in reversed(levels[1:]):
        mu_prev, a = level[node]
        a_rev.append(a)
        mus.append(mu_prev)
        node = mu_prev
    a_rev.append(levels[0][node])
    a_vec = tuple(reversed(a_rev))
    mu_vec = tuple(reversed(mus))
    return ChainVerdict("feasible", (a_vec, mu_vec))


def cross_validate(profile, case, size_ceiling=DEFAULT_SIZE_CEILING):
    """Run both criteria and test "chain feasible implies inequality holds".

    The inequality is a consequence of chain feasibility, so a feasible
    chain together with a violated inequality can only mean an
    implementation bug. consistent is None when the chain was skipped.
    """
    t2 = theorem2_check(profile, case)
    chain = chain_feasibility(profile, case, size_ceiling)
    if chain.status == "skipped (size)":
        return CrossValidation(None, t2, chain)
    consistent = not (chain.status == "feasible" and t2.verdict == "violated")
    return CrossValidation(consistent, t2, chain)


def cross_validate_exhaustive(p, max_entry, holds_sample_step=0):
    """Confirm the implication over every profile with entries <= max_entry.

    The implication "chain feasible implies inequality holds" restricts
    nothing when the inequality holds, so those profiles satisfy it
    vacuously; the chain search therefore only needs to run on the violated
    profiles, where feasibility would expose a bug (the contrapositive).
    Size telescoping fixes s_p from the rest of a violated profile, which
    prunes the scan further; profiles it rejects are chain infeasible by the
    size argument alone. With holds_sample_step > 0, every that-many-th
    holding profile additionally runs the full joint cross_validate as a
    smoke test of the non-violated path. Returns a dict of counters;
    "inconsistencies" lists offending profiles and must stay empty.
    """
    case = BrauerLineCase(
        p, tuple(f"chi{i + 1}" for i in range(p)), unramified_asserted=True
    )
    rng = range(max_entry + 1)
    tail_count = (max_entry + 1) ** (p - 1)
    counters = {
        "profiles": 0,
        "violated_profiles": 0,
        "chain_searches": 0,
        "holds_samples": 0,
        "inconsistencies": [],
    }
    holds_seen = 0
    for r in itertools.product(rng, repeat=p):
        lhs = r[p - 2] - r[p - 1]
        alternating = sum((-1) ** i * r[i - 1] for i in range(1, p - 1))
        for s1 in rng:
            rhs = s1 - alternating
            counters["profiles"] += tail_count
            if lhs <= rhs:
                holds_seen += tail_count
                if holds_sample_step and holds_seen >= holds_sample_step:
                    holds_seen -= holds_sample_step
                    mid = tuple((s1 + r[i]) % (max_entry + 1) for i in range(1, p))
                    sample = EigenvalueProfile((s1,) + mid, r)
                    outcome = cross_validate(sample, case, size_ceiling=10**9)
                    counters["holds_samples"] += 1
                    if outcome.consistent is False:
                        counters["inconsistencies"].append(sample)
                continue
            counters["violated_profiles"] += tail_count
            for mid in itertools.product(rng, repeat=p - 2):
                s = (s1,) + mid
                sizes = [(p - 1) * r[i] + s[i] for i in range(p - 1)]
                need = sizes[0]
                ok = True
                for i in range(1, p - 1):
                    need = sizes[i] - need
                    if need < 0:
                        ok = False
                        break
                if not ok:
                    continue
                sp = need - (p - 1) * r[p - 1]
                if not 0 <= sp <= max_entry:
                    continue
                profile = EigenvalueProfile(s + (sp,), r)
                verdict = chain_feasibility(profile, case, size_ceiling=10**9)
                counters["chain_searches"] += 1
                if verdict.status == "feasible":
                    counters["inconsistencies"].append(profile)
    return counters
