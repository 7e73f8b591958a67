"""Target orchestration: enumeration, multiplicities, criterion, verdicts.

run_target executes one declared unit order of a case end to end:
power-order enumeration first, then the mixed order, then per candidate
the multiplicity quadruples of the configured Brauer line, the line
inequality for the configured eigenvalue component, and the chain
search.  run_case does this for every target and assembles a report.
"""

from __future__ import annotations

from dataclasses import dataclass

from .casefile import CaseFile
from .criterion import (
    DEFAULT_SIZE_CEILING,
    EigenvalueProfile,
    chain_feasibility,
    theorem2_check,
)
from .helpenum import (
    DEFAULT_BOUND,
    HelpQuery,
    candidate_flat_tuple,
    enumerate_order_pq,
    enumerate_prime_order,
    prime_flat_tuple,
)
from .multiplicities import (
    Infeasible,
    chi_of_unit,
    is_prime,
    multiplicities_order_pq,
    prime_pair,
)


class RunError(RuntimeError):
    """A target could not be executed or failed a pinned expectation."""


@dataclass(frozen=True)
class CandidateReport:
    """Everything computed for one surviving candidate.

    rows holds (character id, MultiplicityQuadruple) for each line
    character; theorem2 and chain are the criterion outcomes for the
    configured component; cross_theorem2 is the same inequality for the
    line-prime component when the configured one differs from it.
    """

    flat: tuple
    rows: tuple = None
    theorem2: object = None
    cross_theorem2: object = None
    chain: object = None
    excluded: bool = False
    notes: tuple = ()


@dataclass(frozen=True)
class TargetReport:
    """One target order: candidates, verdicts and conclusion."""

    unit_order: int
    mode: str
    p: int
    q: int
    power_block_ids: tuple
    support_ids: tuple
    line_id: str
    component: str
    cross_component: str
    zeta_order: int
    candidates: tuple
    conclusion: str
    warnings: tuple = ()

    @property
    def excluded(self):
        return self.conclusion.startswith("no units of order")


@dataclass(frozen=True)
class CaseReport:
    """All targets of one case file."""

    group_name: str
    provenance: str
    targets: tuple

    def target(self, order):
        for t in self.targets:
            if t.unit_order == order:
                return t
        raise KeyError(f"report has no target of order {order}")


def _component_prime(component, p, q):
    return p if component == "zeta_p" else q


def run_target(case, order, bound=DEFAULT_BOUND,
               chain_ceiling=DEFAULT_SIZE_CEILING):
    """Run one declared target order of a case; returns a TargetReport.

    Raises RunError when the target is undeclared, when enumeration is
    impossible, or when a pinned expectation in the case file disagrees
    with the computed candidate set.  An undecided outcome is reported
    as such, never upgraded to an exclusion.
    """
    try:
        target = case.target_for_order(order)
    except KeyError as exc:
        raise RunError(str(exc)) from None
    chars = tuple(case.character_by_id(i) for i in target.constraints)
    classes = case.classes

    if is_prime(order):
        return _run_prime_target(case, target, chars, classes, bound)

    p, q = prime_pair(order)
    try:
        set_p = enumerate_prime_order(HelpQuery(p, chars, classes, bound))
        set_q = enumerate_prime_order(HelpQuery(q, chars, classes, bound))
        cset = enumerate_order_pq(HelpQuery(order, chars, classes, bound),
                                  power_candidates_p=set_q,
                                  power_candidates_q=set_p)
    except ValueError as exc:
        raise RunError(f"order {order}: {exc}") from None
    flats = tuple(candidate_flat_tuple(c, classes) for c in cset.candidates)
    _check_expectations(target, flats)

    line = case.brauer_lines[target.line_id] if target.line_id else None
    component = cross_component = None
    zeta_order = 0
    line_chars = ()
    if line is not None:
        line_prime_component = "zeta_p" if line.p == p else "zeta_q"
        component = target.criterion_component or line_prime_component
        if component != line_prime_component:
            cross_component = line_prime_component
        zeta_order = _component_prime(component, p, q)
        line_chars = tuple(case.character_by_id(i) for i in line.line)

    reports = []
    for cand, flat in zip(cset.candidates, flats):
        if line is None:
            reports.append(CandidateReport(flat=flat))
            continue
        reports.append(_judge_candidate(cand, flat, line, line_chars, p, q,
                                        component, cross_component,
                                        chain_ceiling))

    if target.mode == "survey":
        conclusion = f"survey: {len(reports)} candidates"
    elif not reports:
        conclusion = f"no units of order {order}"
    elif all(r.excluded for r in reports):
        conclusion = f"no units of order {order}"
    else:
        conclusion = "undecided"

    return TargetReport(
        unit_order=order, mode=target.mode, p=p, q=q,
        power_block_ids=tuple(c.id for c in case.classes_of_order(p)),
        support_ids=tuple(c.id for c in case.support_classes(order)),
        line_id=target.line_id, component=component,
        cross_component=cross_component, zeta_order=zeta_order,
        candidates=tuple(reports), conclusion=conclusion,
        warnings=tuple(cset.warnings),
    )


def _run_prime_target(case, target, chars, classes, bound):
    order = target.unit_order
    try:
        cset = enumerate_prime_order(HelpQuery(order, chars, classes, bound))
    except ValueError as exc:
        raise RunError(f"order {order}: {exc}") from None
    flats = tuple(prime_flat_tuple(pa, classes) for pa in cset.candidates)
    _check_expectations(target, flats)
    reports = tuple(CandidateReport(flat=f) for f in flats)
    if target.mode == "survey":
        conclusion = f"survey: {len(reports)} candidates"
    elif not reports:
        conclusion = f"no units of order {order}"
    else:
        conclusion = "undecided"
    return TargetReport(
        unit_order=order, mode=target.mode, p=order, q=0,
        power_block_ids=(),
        support_ids=tuple(c.id for c in case.support_classes(order)),
        line_id=None, component=None, cross_component=None, zeta_order=0,
        candidates=reports, conclusion=conclusion,
        warnings=tuple(cset.warnings),
    )


def _check_expectations(target, flats):
    if target.expected_candidates is not None:
        if flats != target.expected_candidates:
            raise RunError(
                f"order {target.unit_order}: computed candidates "
                f"{list(flats)} disagree with the pinned expectation "
                f"{list(target.expected_candidates)}"
            )
    if target.expected_count is not None:
        if len(flats) != target.expected_count:
            raise RunError(
                f"order {target.unit_order}: computed {len(flats)} "
                f"candidates, expected {target.expected_count}"
            )


def _judge_candidate(cand, flat, line, line_chars, p, q, component,
                     cross_component, chain_ceiling):
    """Quadruples for every line character, then inequality and chain."""
    rows = []
    for ch in line_chars:
        x = chi_of_unit(ch, cand.pa_up)
        y = chi_of_unit(ch, cand.pa_uq)
        z = chi_of_unit(ch, cand.pa_u)
        quad = multiplicities_order_pq(ch.degree, x, y, z, p, q)
        if isinstance(quad, Infeasible):
            note = (f"line character {ch.id} rules the candidate out "
                    f"directly ({quad.reason})")
            return CandidateReport(flat=flat, rows=tuple(rows),
                                   excluded=True, notes=(note,))
        rows.append((ch.id, quad))

    s_row = tuple(quad.mu_1 for _, quad in rows)
    r_rows = {
        "zeta_p": tuple(quad.mu_zp for _, quad in rows),
        "zeta_q": tuple(quad.mu_zq for _, quad in rows),
    }
    profile = EigenvalueProfile(s_row, r_rows[component])
    t2 = theorem2_check(profile, line)
    chain = chain_feasibility(profile, line, size_ceiling=chain_ceiling)
    cross_t2 = None
    if cross_component is not None:
        cross_t2 = theorem2_check(
            EigenvalueProfile(s_row, r_rows[cross_component]), line)
    excluded = t2.verdict == "violated" or chain.feasible is False
    return CandidateReport(flat=flat, rows=tuple(rows), theorem2=t2,
                           cross_theorem2=cross_t2, chain=chain,
                           excluded=excluded)


def run_case(case, orders=None, bound=DEFAULT_BOUND,
             chain_ceiling=DEFAULT_SIZE_CEILING):
    """Run every declared target (or the selected orders) of a case."""
    if orders is None:
        selected = [t.unit_order for t in case.targets]
    else:
        selected = list(orders)
    reports = tuple(
        run_target(case, order, bound=bound, chain_ceiling=chain_ceiling)
        for order in selected
    )
    return CaseReport(group_name=case.group_name,
                      provenance=case.provenance, targets=reports)


def exit_status(report):
    """0 when every exclude-mode target concluded an exclusion, else 2.

    Survey targets are informational; they never flip the status.
    """
    for t in report.targets:
        if t.mode == "exclude" and not t.excluded:
            return 2
    return 0
