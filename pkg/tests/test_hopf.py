import pytest

from curveform.freealg import NcPoly, TensorPoly
from curveform.hopf import (alt_generators, apply_antipode, apply_counit,
                            apply_delta, check_alt_presentation, check_coideal,
                            check_hopf_axioms, check_identities,
                            check_welldefined, relation_polys, tensor_nf,
                            units_bounded_check, units_suite, _solve_sparse)
from curveform.parser import parse_expr
from curveform.scalar import ONE, Scalar, ZERO


class TestStructureMaps:
    def test_delta_grouplikes(self, alg, maps):
        for ch in "agb":
            d = apply_delta(NcPoly.word(ch), alg, maps)
            assert d == TensorPoly(2, {(ch, ch): ONE})

    def test_delta_x(self, alg, maps):
        q = alg.point.q
        d = apply_delta(NcPoly.word("x"), alg, maps)
        assert d == TensorPoly(2, {("", "x"): ONE, ("", "a"): -q, ("x", "a"): ONE})

    def test_delta_multiplicative(self, alg, maps):
        f = parse_expr("x*y + 2*a*b", alg.point)
        g = parse_expr("y - 3*b", alg.point)
        lhs = apply_delta(alg.nf(f * g), alg, maps)
        rhs = tensor_nf(apply_delta(f, alg, maps) * apply_delta(g, alg, maps), alg)
        assert lhs == rhs

    def test_counit_values(self, alg, maps):
        assert apply_counit(NcPoly.word("x"), maps) == alg.point.q
        assert apply_counit(NcPoly.word("y"), maps) == alg.point.p
        assert apply_counit(NcPoly.word("agb"), maps) == ONE
        assert apply_counit(parse_expr("y^2 - x^2 - x^3", alg.point), maps) == ZERO

    def test_counit_lands_on_curve(self, maps_by_t):
        # eps(x), eps(y) is the chosen curve point; the curve equation is the
        # scalar shadow of y^2 = x^2 + x^3
        for m in maps_by_t.values():
            q, p = m.counit_gen["x"], m.counit_gen["y"]
            assert p * p == q * q + q * q * q

    def test_antipode_grouplikes(self, alg, maps):
        assert apply_antipode(NcPoly.word("a"), alg, maps) == NcPoly.word("g")
        assert apply_antipode(NcPoly.word("g"), alg, maps) == NcPoly.word("a")
        sb = apply_antipode(NcPoly.word("b"), alg, maps)
        assert alg.nf(sb * NcPoly.word("b")) == NcPoly.one()

    def test_antipode_anti_multiplicative(self, alg, maps):
        f = parse_expr("x*a", alg.point)
        sx = apply_antipode(NcPoly.word("x"), alg, maps)
        sa = apply_antipode(NcPoly.word("a"), alg, maps)
        assert apply_antipode(f, alg, maps) == alg.nf(sa * sx)

    def test_antipode_squared_is_not_identity_on_y(self, alg, maps):
        # S has infinite order here; S^2(y) = y only at p = 0
        y = NcPoly.word("y")
        s2 = apply_antipode(apply_antipode(y, alg, maps), alg, maps)
        assert s2 != alg.nf(y)


class TestWelldefined:
    def test_thirteen_relations(self, alg):
        assert len(relation_polys(alg.point)) == 13

    def test_all_points(self, algebras, maps_by_t):
        for t, a in algebras.items():
            report = check_welldefined(a, maps_by_t[t])
            assert report.ok, [e.name for e in report.entries if not e.ok]
            assert len(report.entries) == 39


class TestAxioms:
    def test_generators_and_samples(self, alg, maps):
        report = check_hopf_axioms(alg, maps, samples=25, max_len=5, seed=3)
        assert report.ok, [e.name for e in report.entries if not e.ok]

    def test_other_points_smoke(self, algebras, maps_by_t):
        for t in (1, 0, 3):
            report = check_hopf_axioms(algebras[t], maps_by_t[t], samples=5,
                                       max_len=4, seed=1)
            assert report.ok


class TestIdentities:
    def test_all_points(self, algebras):
        for a in algebras.values():
            report = check_identities(a)
            assert report.ok
            assert len(report.entries) == 3


class TestCoideal:
    def test_left_legs_stay_in_b(self, alg, maps):
        report = check_coideal(alg, maps, max_deg=5)
        assert report.ok

    def test_delta_of_y_squared(self, alg, maps):
        # every left leg of delta(y^2) is a word in x, y only
        d = apply_delta(alg.parse_nf("y^2"), alg, maps)
        assert all(set(k[0]) <= set("xy") for k in d.terms)


class TestAltPresentation:
    def test_generator_normal_forms(self, alg):
        c, d, e = alt_generators(alg)
        q, p = alg.point.q, alg.point.p
        assert c == NcPoly({"x": Scalar(3), "a": -(ONE + 3 * q), "": ONE})
        assert d == NcPoly({"y": Scalar(3), "b": -6 * p})
        assert alg.nf(e) == e

    def test_relations_at_node(self, algebras):
        # at (q, p) = (0, 0) every listed relation holds
        report = check_alt_presentation(algebras[1])
        assert report.ok
        assert len(report.entries) == 14

    def test_bd_relation_fails_off_node(self, algebras):
        # the listed relation bd = -db fails whenever p != 0:
        # bd + db = -6p b^2 = -6p a^3
        for t, expect_ok in ((2, False), (1, True), (0, True), (3, False)):
            report = check_alt_presentation(algebras[t])
            entry = {e.name: e for e in report.entries}["bd = -db"]
            assert entry.ok == expect_ok
            if not expect_ok:
                p = algebras[t].point.p
                assert entry.residual == NcPoly.word("aaa", -6 * p)

    def test_all_other_relations_hold_everywhere(self, algebras):
        for a in algebras.values():
            report = check_alt_presentation(a)
            for e in report.entries:
                if e.name != "bd = -db":
                    assert e.ok, (e.name, a.point)

    def test_corrected_bd_relation(self, algebras):
        # bd = -db - 6p a^3 holds at every point
        for a in algebras.values():
            c, d, e = alt_generators(a)
            b = NcPoly.word("b")
            p = a.point.p
            residual = a.nf(b * d + d * b + NcPoly.word("aaa", 6 * p))
            assert not residual


class TestSolver:
    def test_solves_small_system(self):
        cols = [{"u": ONE, "v": ONE}, {"v": ONE}]
        sol = _solve_sparse(cols, {"u": Scalar(2), "v": Scalar(5)})
        assert sol == [Scalar(2), Scalar(3)]

    def test_detects_inconsistency(self):
        cols = [{"u": ONE}]
        assert _solve_sparse(cols, {"u": ONE, "v": ONE}) is None

    def test_underdetermined_is_fine(self):
        cols = [{"u": ONE}, {"u": Scalar(2)}]
        sol = _solve_sparse(cols, {"u": Scalar(4)})
        total = sol[0] + Scalar(2) * sol[1]
        assert total == Scalar(4)


class TestUnits:
    def test_group_like_units(self, alg):
        for name, inverse in (("a", "a^-1"), ("b", "a^-3*b"), ("a^2*b", "a^-5*b")):
            f = parse_expr(name, alg.point)
            entry = units_bounded_check(alg, alg.nf(f), max_len=6)
            assert entry.invertible
            assert alg.nf(f * entry.witness) == NcPoly.one()
            assert entry.witness == alg.parse_nf(inverse)

    def test_non_units_at_bound(self, alg):
        for text in ("x", "1 + x"):
            entry = units_bounded_check(alg, alg.parse_nf(text), max_len=4)
            assert not entry.invertible and entry.witness is None

    def test_suite_expected_pattern(self, alg):
        # a^2 b needs the length-6 inverse a^-5 b, so bound at 6
        report = units_suite(alg, max_len=6)
        verdicts = {e.element: e.invertible for e in report.entries}
        assert verdicts == {"a": True, "b": True, "a^2*b": True, "a^-1*b": True,
                            "1+x": False, "x": False, "c": False, "1+y": False}

    def test_rejects_zero(self, alg):
        with pytest.raises(ValueError):
            units_bounded_check(alg, NcPoly.zero())
