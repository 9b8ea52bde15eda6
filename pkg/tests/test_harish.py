import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsuper.algebra import AlgebraElement, gen_e, gen_f, gen_k
from qsuper.center import casimir, gamma_operator, z_element
from qsuper.harish import (
    LaurentInvariant,
    cartan_part,
    central_eigenvalue,
    gamma_shift,
    hc_project,
    iota_image,
    sch_compare,
    wsup_membership,
)
from qsuper.modules import (
    CharacterElement,
    characters,
    dual_module,
    simple_quotient,
    vector_module,
    verma_module,
)
from qsuper.rootdata import build_root_datum
from qsuper.scalars import ONE, Scalar, scal_sum

A10 = build_root_datum("A", (1, 0))
C2 = build_root_datum("C", (2,))
B01 = build_root_datum("B", (0, 1))
B11 = build_root_datum("B", (1, 1))


def inv_of(datum, table):
    return LaurentInvariant(
        datum, {vec: Scalar.from_int(n) for vec, n in table.items()}
    )


def isotropic_directions(datum):
    return [v for v in datum.pos_odd_vec if datum.form_vec(v, v) == 0]


# Membership oracle: the defining conditions checked with a pairwise
# union-by-difference grouping, no shared code with the base-point keying
# used by wsup_membership.

def naive_mode_a(datum, inv):
    support = inv.support()
    for vec in support:
        w = datum.weight_from_vec(vec)
        if not datum.lattice_tests(w)["in_2Lambda_cap_ZPhi"]:
            return False
        for x in datum.weyl_orbit(w):
            if inv.coefficient_at(x) != inv.terms[vec]:
                return False
    for avec in isotropic_directions(datum):
        alpha = datum.weight_from_vec(avec)
        remaining = list(support)
        while remaining:
            line = [remaining.pop()]
            for other in remaining[:]:
                diff = [Fraction(a) - Fraction(b) for a, b in zip(other, line[0])]
                ratios = {d / a for d, a in zip(diff, avec) if a}
                aligned = all(d == 0 for d, a in zip(diff, avec) if not a)
                if aligned and len(ratios) == 1 and next(iter(ratios)).denominator == 1:
                    line.append(other)
                    remaining.remove(other)
            if datum.form(datum.weight_from_vec(line[0]), alpha) != 0:
                if not scal_sum(inv.terms[v] for v in line).is_zero():
                    return False
    return True


def symmetrized(datum, table):
    out = {}
    for vec, n in table.items():
        w = datum.weight_from_vec(vec)
        for mat, _ in datum.weyl_elements():
            x = datum.vec_from_weight(datum.apply_matrix(mat, w))
            key = tuple(int(c) for c in x)
            out[key] = out.get(key, 0) + n
    return out


def supersymmetrized(datum, lam_vec):
    """Symmetrize K_lam times the product of (1 - K_{-2 alpha}) over the
    positive isotropic roots.  Such elements always satisfy the line sum
    rule, whatever the lattice point lam."""
    inner = {tuple(lam_vec): 1}
    for avec in isotropic_directions(datum):
        nxt = {}
        for vec, n in inner.items():
            nxt[vec] = nxt.get(vec, 0) + n
            shift = tuple(x - 2 * int(a) for x, a in zip(vec, avec))
            nxt[shift] = nxt.get(shift, 0) - n
        inner = nxt
    return symmetrized(datum, inner)


def random_lattice_vec(datum, rng, span=4):
    while True:
        vec = tuple(rng.randrange(-span, span + 1) for _ in range(datum.rank))
        if datum.lattice_tests(datum.weight_from_vec(vec))["in_2Lambda_cap_ZPhi"]:
            return vec


# Explicit members of the image ring, one per small rank type, with the
# dominant weight spelled out in simple root coordinates.

K_LAMBDA_A10 = {
    (2, 2): 1, (2, 0): -1, (0, 2): 1, (0, 0): -2,
    (0, -2): 1, (-2, 0): -1, (-2, -2): 1,
}
K_LAMBDA_C2 = {
    (2, 2): 1, (0, 2): -1, (2, 0): 1, (0, 0): -2,
    (-2, 0): 1, (0, -2): -1, (-2, -2): 1,
}
K_LAMBDA_B11 = {
    (4, 6): 1, (-4, -2): 1, (4, 2): 1, (-4, -6): 1,
    (2, 6): -1, (-2, 2): -1, (2, -2): -1, (-2, -6): -1,
    (2, 2): -2, (-2, -2): -2, (0, 2): 2, (0, -2): 2,
}


@pytest.fixture(scope="module")
def a10_central():
    V = vector_module(A10)
    g = gamma_operator(V)
    Vd = dual_module(V)
    return {
        "V": V,
        "Vd": Vd,
        "c1": casimir(V, 1, g),
        "c2": casimir(V, 2, g),
        "zV": z_element(V),
        "zVd": z_element(Vd),
    }


class TestProjection:
    def test_first_casimir_display(self, a10_central):
        expected = inv_of(A10, {(0, -2): 1, (-2, -2): 1, (-2, -4): -1})
        assert hc_project(a10_central["c1"]) == expected

    def test_rho_pairings(self):
        assert A10.form(A10.rho, A10.simple[0]) == 1
        assert A10.form(A10.rho, A10.simple[1]) == 0

    def test_projection_drops_worded_terms(self):
        e1, f1 = gen_e(A10, 0), gen_f(A10, 0)
        assert cartan_part(f1 * e1).is_zero()
        commutator = e1 * f1 - f1 * e1
        lam = ONE / (A10.q(1) - A10.q(-1))
        expected = LaurentInvariant(A10, {(1, 0): lam, (-1, 0): Scalar.zero() - lam})
        assert cartan_part(commutator) == expected

    def test_weight_zero_required(self):
        for bad in (gen_e(A10, 0), gen_f(A10, 1), gen_e(A10, 0) * gen_e(A10, 1)):
            with pytest.raises(ValueError, match="weight zero"):
                hc_project(bad)

    def test_gamma_shifts_compose(self):
        kl = inv_of(A10, K_LAMBDA_A10)
        assert gamma_shift(gamma_shift(kl, A10.rho), -A10.rho) == kl
        a1, a2 = A10.simple[0], A10.simple[1]
        assert gamma_shift(gamma_shift(kl, a1), a2) == gamma_shift(kl, A10.canonical(a1 + a2))

    def test_cartan_input_is_only_shifted(self):
        z = gen_k(A10, (2, 0)) + gen_k(A10, (0, -2)) * Scalar.from_int(3)
        assert hc_project(z) == gamma_shift(cartan_part(z), -A10.rho)

    def test_multiplicative_on_central_products(self, a10_central):
        zs = [a10_central["c1"], a10_central["c2"], a10_central["zVd"]]
        for z1 in zs:
            for z2 in zs:
                assert hc_project(z1 * z2) == hc_project(z1) * hc_project(z2)

    def test_injectivity_probe(self, a10_central):
        keys = ["c1", "c2", "zV", "zVd"]
        for a in keys:
            for b in keys:
                if a10_central[a] != a10_central[b]:
                    assert hc_project(a10_central[a]) != hc_project(a10_central[b])


class TestLaurentInvariant:
    def test_unit_and_zero(self):
        assert LaurentInvariant.unit(A10).coefficient((0, 0)) == ONE
        assert LaurentInvariant.zero(A10).is_zero()
        assert not LaurentInvariant.unit(A10).is_zero()

    def test_convolution(self):
        a = inv_of(A10, {(1, 0): 1})
        b = inv_of(A10, {(1, 0): 1, (-1, 0): 2})
        assert a * b == inv_of(A10, {(2, 0): 1, (0, 0): 2})

    def test_scalar_action_and_subtraction(self):
        kl = inv_of(A10, K_LAMBDA_A10)
        assert kl - kl == LaurentInvariant.zero(A10)
        assert (kl * 3) - kl - kl - kl == LaurentInvariant.zero(A10)
        assert 2 * kl == kl + kl

    def test_element_round_trip(self, a10_central):
        inv = hc_project(a10_central["c2"])
        assert cartan_part(inv.to_element()) == inv

    def test_payload_round_trip(self, a10_central):
        inv = hc_project(a10_central["c1"])
        payload = inv.to_payload()
        assert payload == sorted(payload, key=lambda row: row["kexp"])
        assert LaurentInvariant.from_payload(A10, payload) == inv

    @given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2),
                              st.integers(-3, 3)), max_size=4))
    @settings(max_examples=40, deadline=None)
    def test_ring_laws(self, rows):
        a = inv_of(A10, {(x, y): n for x, y, n in rows[: len(rows) // 2]})
        b = inv_of(A10, {(x, y): n for x, y, n in rows[len(rows) // 2 :]})
        u = LaurentInvariant.unit(A10)
        assert a * b == b * a
        assert a * u == a
        assert (a + b) * b == a * b + b * b


class TestEigenvalue:
    def test_k_monomial(self):
        lam = A10.weight_from_vec((1, 2))
        for vec in ((1, 0), (0, 1), (-2, 3)):
            mu = A10.weight_from_vec(vec)
            assert central_eigenvalue(lam, gen_k(A10, vec)) == A10.q(A10.form(lam, mu))

    def test_verma_highest_vector(self, a10_central):
        lam = A10.canonical(A10.weight_from_vec((1, 0)))
        vm = verma_module(A10, lam, depth=4)
        for z in (a10_central["c1"], a10_central["zV"]):
            mat = vm.apply_element(z)
            assert mat[0][0] == central_eigenvalue(lam, z)
            assert all(mat[r][0].is_zero() for r in range(1, vm.dim))

    def test_weyl_linkage(self, a10_central):
        lam = A10.canonical(A10.weight_from_vec((1, 0)))
        linked = A10.canonical(A10.weight_from_vec((-2, 0)))
        for z in (a10_central["c1"], a10_central["c2"], a10_central["zV"]):
            assert central_eigenvalue(lam, z) == central_eigenvalue(linked, z)

    def test_isotropic_shift(self, a10_central):
        z = a10_central["c1"]
        for b in (0, 3):
            lam = A10.canonical(A10.weight_from_vec((0, b)))
            shifted = A10.canonical(A10.weight_from_vec((0, b - 1)))
            assert A10.form(lam, A10.simple[1]) == 0
            assert central_eigenvalue(lam, z) == central_eigenvalue(shifted, z)

    def test_requires_weight_zero(self):
        lam = A10.weight_from_vec((1, 0))
        with pytest.raises(ValueError, match="weight zero"):
            central_eigenvalue(lam, gen_e(A10, 0))


class TestSchCompare:
    def test_trivial_module(self):
        trivial = simple_quotient(A10, A10.canonical(A10.weight_from_vec((0, 0))))
        assert sch_compare(trivial, AlgebraElement.unit(A10))

    def test_dual_vector_display(self, a10_central):
        display = CharacterElement(A10, {
            A10.canonical(A10.weight_from_vec((0, 1))): 1,
            A10.canonical(A10.weight_from_vec((1, 1))): 1,
            A10.canonical(A10.weight_from_vec((1, 2))): -1,
        })
        assert characters(a10_central["Vd"])[1] == display
        assert iota_image(hc_project(a10_central["c1"])) == display
        assert sch_compare(a10_central["Vd"], a10_central["c1"])

    def test_z_element_of_each_module(self, a10_central):
        trivial = simple_quotient(A10, A10.canonical(A10.weight_from_vec((0, 0))))
        typical = simple_quotient(A10, A10.canonical(A10.weight_from_vec((1, 0))))
        for mod in (trivial, a10_central["V"], a10_central["Vd"], typical):
            assert sch_compare(mod, z_element(mod))

    def test_mismatched_module_fails(self, a10_central):
        assert not sch_compare(a10_central["V"], a10_central["zVd"])

    def test_non_integer_coefficients_fail(self, a10_central):
        scaled = a10_central["c1"] * A10.q(1)
        assert not sch_compare(a10_central["Vd"], scaled)
        with pytest.raises(ValueError, match="constant integer"):
            iota_image(hc_project(scaled))

    def test_requires_finite_module(self, a10_central):
        vm = verma_module(A10, A10.canonical(A10.weight_from_vec((1, 0))), depth=3)
        with pytest.raises(ValueError, match="finite"):
            sch_compare(vm, a10_central["c1"])


class TestMembership:
    @pytest.mark.parametrize(
        "datum,table,lam_vec",
        [(A10, K_LAMBDA_A10, (2, 2)), (C2, K_LAMBDA_C2, (2, 2)),
         (B11, K_LAMBDA_B11, (4, 6))],
        ids=["A(1,0)", "C(2)", "B(1,1)"],
    )
    def test_k_lambda_displays(self, datum, table, lam_vec):
        kl = inv_of(datum, table)
        assert inv_of(datum, supersymmetrized(datum, lam_vec)) == kl
        for mode in ("A", "B", "both"):
            report = wsup_membership(kl, mode=mode)
            assert report.ok and not report.reasons

    def test_k_alpha1_fails(self):
        report = wsup_membership(gen_k(A10, (1, 0)))
        assert not report.ok
        assert any("Weyl" in reason for reason in report.reasons)

    def test_symmetrized_pair_fails_line_sums(self):
        h = gen_k(A10, (2, 0)) + gen_k(A10, (-2, 0))
        ra = wsup_membership(h, mode="A")
        rb = wsup_membership(h, mode="B")
        assert not ra.ok and not rb.ok
        assert any("sum to zero" in reason for reason in ra.reasons)
        assert any("remainder" in reason for reason in rb.reasons)

    def test_off_lattice_fails(self):
        report = wsup_membership(gen_k(A10, (0, 1)))
        assert not report.ok
        assert any("2*Lambda" in reason for reason in report.reasons)

    def test_unit_zero_and_worded_input(self):
        assert wsup_membership(LaurentInvariant.unit(A10)).ok
        assert wsup_membership(LaurentInvariant.zero(A10)).ok
        report = wsup_membership(gen_e(A10, 0) * gen_f(A10, 0))
        assert not report.ok
        assert any("Cartan" in reason for reason in report.reasons)

    def test_mode_validation(self):
        with pytest.raises(ValueError, match="mode"):
            wsup_membership(LaurentInvariant.unit(A10), mode="C")
        with pytest.raises(TypeError):
            wsup_membership("K1")

    def test_hc_images_of_central_elements(self, a10_central):
        for key in ("c1", "c2", "zV", "zVd"):
            inv = hc_project(a10_central[key])
            assert wsup_membership(inv, mode="A").ok
            assert wsup_membership(inv, mode="B").ok

    @pytest.mark.parametrize("descriptor", ["B(0,1)", "C(2)"])
    def test_hc_images_other_types(self, descriptor):
        datum = build_root_datum(descriptor)
        V = vector_module(datum)
        assert wsup_membership(hc_project(casimir(V, 1))).ok
        assert wsup_membership(hc_project(z_element(V))).ok

    def test_modes_agree_on_random_elements(self):
        rng = random.Random(29)
        verdicts = {True: 0, False: 0}
        for datum in (A10, C2, B11):
            for trial in range(167):
                style = trial % 3
                if style == 0:
                    table = {}
                    while len(table) < 3:
                        table[random_lattice_vec(datum, rng)] = rng.choice(
                            [-2, -1, 1, 2]
                        )
                    table = symmetrized(datum, table)
                elif style == 1:
                    table = supersymmetrized(datum, random_lattice_vec(datum, rng))
                else:
                    table = supersymmetrized(datum, random_lattice_vec(datum, rng))
                    bump = symmetrized(datum, {random_lattice_vec(datum, rng): 1})
                    for vec, n in bump.items():
                        table[vec] = table.get(vec, 0) + n
                h = inv_of(datum, table)
                ra = wsup_membership(h, mode="A")
                rb = wsup_membership(h, mode="B")
                assert ra.ok == rb.ok
                assert ra.ok == naive_mode_a(datum, h)
                if style == 1:
                    assert ra.ok
                verdicts[ra.ok] += 1
        assert sum(verdicts.values()) == 501
        assert verdicts[True] >= 167 and verdicts[False] >= 100
