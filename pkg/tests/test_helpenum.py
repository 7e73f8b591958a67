"""Tests for the HeLP candidate enumeration."""

import itertools

import pytest

from pgqcheck import (
    CharacterData,
    ClassInfo,
    HelpQuery,
    Infeasible,
    PartialAugmentationVector,
    candidate_flat_tuple,
    chi_of_unit,
    enumerate_order_pq,
    enumerate_prime_order,
    multiplicities_order_pq,
    multiplicities_prime_order,
    prime_flat_tuple,
)

CO3_ORDER5 = [(-4, 5), (-3, 4), (-2, 3), (-1, 2), (0, 1), (1, 0)]
CO3_ORDER35 = [(-4, 5, 3, 12, -14), (-3, 4, 4, 11, -14)]


def co3_constraints(case, ids=("chi2", "chi3")):
    return tuple(case.character_by_id(i) for i in ids)


class TestHelpQuery:
    def test_rejects_duplicate_classes(self):
        classes = (ClassInfo("5a", 5), ClassInfo("5a", 5))
        with pytest.raises(ValueError):
            HelpQuery(5, (), classes)

    def test_rejects_tiny_order(self):
        with pytest.raises(ValueError):
            HelpQuery(1, (), (ClassInfo("5a", 5),))

    def test_rejects_bad_bound(self):
        with pytest.raises(ValueError):
            HelpQuery(5, (), (ClassInfo("5a", 5),), bound=0)

    def test_rejects_brauer_character_at_divisible_order(self):
        psi = CharacterData("psi", 24, {"5a": 1}, kind="brauer", characteristic=5)
        with pytest.raises(ValueError):
            HelpQuery(35, (psi,), (ClassInfo("5a", 5),))

    def test_support_keeps_declaration_order(self):
        classes = (
            ClassInfo("1a", 1),
            ClassInfo("7a", 7),
            ClassInfo("5a", 5),
            ClassInfo("3a", 3),
            ClassInfo("35a", 35),
        )
        query = HelpQuery(35, (), classes)
        assert tuple(c.id for c in query.support()) == ("7a", "5a", "35a")


class TestPrimeOrder:
    def test_co3_order5(self, co3_case):
        cs = enumerate_prime_order(
            HelpQuery(5, co3_constraints(co3_case), co3_case.classes)
        )
        flats = [prime_flat_tuple(pa, co3_case.classes) for pa in cs.candidates]
        assert flats == CO3_ORDER5
        assert cs.warnings == ()

    def test_single_class_is_forced(self, co3_case):
        cs = enumerate_prime_order(
            HelpQuery(7, co3_constraints(co3_case), co3_case.classes)
        )
        flats = [prime_flat_tuple(pa, co3_case.classes) for pa in cs.candidates]
        assert flats == [(1,)]

    def test_trivial_distributions_survive(self, co3_case):
        # genuine group elements always pass HeLP
        cs = enumerate_prime_order(
            HelpQuery(5, co3_constraints(co3_case), co3_case.classes)
        )
        flats = {prime_flat_tuple(pa, co3_case.classes) for pa in cs.candidates}
        assert (1, 0) in flats and (0, 1) in flats

    def test_deterministic(self, co3_case):
        query = HelpQuery(5, co3_constraints(co3_case), co3_case.classes)
        assert enumerate_prime_order(query) == enumerate_prime_order(query)

    def test_rejects_composite_order(self, co3_case):
        with pytest.raises(ValueError):
            enumerate_prime_order(
                HelpQuery(35, co3_constraints(co3_case), co3_case.classes)
            )

    def test_requires_support_classes(self):
        chi = CharacterData("chi", 2, {"5a": 1})
        with pytest.raises(ValueError):
            enumerate_prime_order(HelpQuery(3, (chi,), (ClassInfo("5a", 5),)))

    def test_missing_value_fails_loudly(self):
        chi = CharacterData("chi", 2, {"5a": 1})
        classes = (ClassInfo("5a", 5), ClassInfo("5b", 5))
        with pytest.raises(ValueError):
            enumerate_prime_order(HelpQuery(5, (chi,), classes))

    def test_unconstrained_box_scan_warns_on_saturation(self):
        classes = (ClassInfo("5a", 5), ClassInfo("5b", 5))
        cs = enumerate_prime_order(HelpQuery(5, (), classes, bound=2))
        flats = [prime_flat_tuple(pa, classes) for pa in cs.candidates]
        assert flats == [(-1, 2), (0, 1), (1, 0), (2, -1)]
        assert len(cs.warnings) == 1
        assert "box bound 2" in cs.warnings[0]

    def test_matches_direct_scan(self):
        # independent re-enumeration: scan the whole box, filter by HeLP
        classes = (ClassInfo("3a", 3), ClassInfo("3b", 3))
        chi = CharacterData("chi", 4, {"3a": 1, "3b": -2})
        bound = 6
        cs = enumerate_prime_order(HelpQuery(3, (chi,), classes, bound=bound))
        got = [prime_flat_tuple(pa, classes) for pa in cs.candidates]
        want = []
        for a in range(-bound, bound + 1):
            b = 1 - a
            if abs(b) > bound:
                continue
            z = a * 1 + b * (-2)
            if not isinstance(multiplicities_prime_order(4, z, 3), Infeasible):
                want.append((a, b))
        assert got == sorted(want)


class TestOrderPQ:
    def build(self, case, ids=("chi2", "chi3"), bound=128):
        chars = co3_constraints(case, ids)
        cs5 = enumerate_prime_order(HelpQuery(5, chars, case.classes, bound))
        cs7 = enumerate_prime_order(HelpQuery(7, chars, case.classes, bound))
        query = HelpQuery(35, chars, case.classes, bound)
        return enumerate_order_pq(
            query, power_candidates_p=cs7, power_candidates_q=cs5
        )

    def test_co3_order35(self, co3_case):
        cs = self.build(co3_case)
        flats = [candidate_flat_tuple(c, co3_case.classes) for c in cs.candidates]
        assert flats == CO3_ORDER35
        assert cs.warnings == ()

    def test_flat_layout(self, co3_case):
        cand = self.build(co3_case).candidates[0]
        assert cand.p == 5 and cand.q == 7
        assert cand.pa_uq.as_tuple(("5a", "5b")) == (-4, 5)
        assert cand.pa_up.as_tuple(("7a",)) == (1,)
        assert cand.pa_u.as_tuple(("5a", "5b", "7a")) == (3, 12, -14)
        flat = candidate_flat_tuple(cand, co3_case.classes)
        assert flat == (-4, 5) + (3, 12, -14)

    def test_constraints_are_monotone(self, co3_case):
        # adding a character can only shrink the candidate set
        wide = {
            candidate_flat_tuple(c, co3_case.classes)
            for c in self.build(co3_case, ids=("chi2",)).candidates
        }
        narrow = {
            candidate_flat_tuple(c, co3_case.classes)
            for c in self.build(co3_case).candidates
        }
        assert narrow <= wide
        assert len(wide) == 102

    def test_deterministic(self, co3_case):
        assert self.build(co3_case) == self.build(co3_case)

    def test_candidates_pass_all_quadruples(self, co3_case):
        chars = co3_constraints(co3_case)
        for cand in self.build(co3_case).candidates:
            for chi in chars:
                quad = multiplicities_order_pq(
                    chi.degree,
                    chi_of_unit(chi, cand.pa_up),
                    chi_of_unit(chi, cand.pa_uq),
                    chi_of_unit(chi, cand.pa_u),
                    cand.p,
                    cand.q,
                )
                assert not isinstance(quad, Infeasible)

    def test_power_set_order_validation(self, co3_case):
        chars = co3_constraints(co3_case)
        cs5 = enumerate_prime_order(HelpQuery(5, chars, co3_case.classes))
        cs7 = enumerate_prime_order(HelpQuery(7, chars, co3_case.classes))
        query = HelpQuery(35, chars, co3_case.classes)
        with pytest.raises(ValueError):
            enumerate_order_pq(query, power_candidates_p=cs5, power_candidates_q=cs7)

    def test_composite_order_required(self, co3_case):
        chars = co3_constraints(co3_case)
        cs5 = enumerate_prime_order(HelpQuery(5, chars, co3_case.classes))
        with pytest.raises(ValueError):
            enumerate_order_pq(
                HelpQuery(25, chars, co3_case.classes),
                power_candidates_p=cs5,
                power_candidates_q=cs5,
            )

    def test_power_warnings_propagate(self):
        # an unconstrained order 3 power scan saturates its box and the
        # mixed order enumeration must surface that warning
        classes = (
            ClassInfo("3a", 3),
            ClassInfo("3b", 3),
            ClassInfo("7a", 7),
        )
        cs3 = enumerate_prime_order(HelpQuery(3, (), classes, bound=2))
        cs7 = enumerate_prime_order(HelpQuery(7, (), classes, bound=2))
        assert cs3.warnings
        cs21 = enumerate_order_pq(
            HelpQuery(21, (), classes, bound=1),
            power_candidates_p=cs7,
            power_candidates_q=cs3,
        )
        assert any("order 3" in w for w in cs21.warnings)
        assert any("order 21" in w for w in cs21.warnings)

    def test_matches_direct_scan(self):
        # independent re-enumeration over all power pairs and box vectors
        classes = (ClassInfo("3a", 3), ClassInfo("5a", 5), ClassInfo("5b", 5))
        chi = CharacterData("chi", 6, {"3a": 3, "5a": 1, "5b": -4})
        bound = 4
        cs3 = enumerate_prime_order(HelpQuery(3, (chi,), classes, bound=bound))
        cs5 = enumerate_prime_order(HelpQuery(5, (chi,), classes, bound=bound))
        cs15 = enumerate_order_pq(
            HelpQuery(15, (chi,), classes, bound=bound),
            power_candidates_p=cs5,
            power_candidates_q=cs3,
        )
        got = [candidate_flat_tuple(c, classes) for c in cs15.candidates]

        want = []
        support = ("3a", "5a", "5b")
        values = tuple(chi.values[c] for c in support)
        for pa_up in cs5.candidates:
            x = chi_of_unit(chi, pa_up)
            for pa_uq in cs3.candidates:
                y = chi_of_unit(chi, pa_uq)
                for eps in itertools.product(
                    range(-bound, bound + 1), repeat=len(support)
                ):
                    if sum(eps) != 1:
                        continue
                    z = sum(v * e for v, e in zip(values, eps))
                    quad = multiplicities_order_pq(6, x, y, z, 3, 5)
                    if isinstance(quad, Infeasible):
                        continue
                    uq = prime_flat_tuple(pa_uq, classes)
                    want.append(uq + eps)
        assert got == sorted(want)
