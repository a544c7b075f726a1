// Cross-checks: every nontrivial example value used elsewhere in the suite
// is recomputed here by an independent method (direct subspace arithmetic,
// hand-expanded series, exact curve evaluation) rather than by the code path
// under test.
#include <doctest.h>

#include <random>

#include "addact/error.hpp"
#include "addact/limits.hpp"
#include "addact/models.hpp"

using namespace addact;

namespace {

Subspace span_units(int dim, std::initializer_list<int> idx) {
    Mat rows;
    for (int k : idx) rows.push_back(unit_vec(dim, k));
    return Subspace(dim, rows);
}

}  // namespace

TEST_CASE("span(x^2, x^3) generates only span(1, x^2, x^3) in chain(4)") {
    LocalAlgebra a = chain_algebra(4);
    Subspace gen = a.subalgebra_generated(span_units(4, {2, 3}));
    CHECK(gen == span_units(4, {0, 2, 3}));
    CHECK(gen.dim() == 3);  // so the pair cannot validate
}

TEST_CASE("degree 2 of chain(4) with span(x, x^3), by raw ideal powers") {
    LocalAlgebra a = chain_algebra(4);
    Subspace u = span_units(4, {1, 3});
    CHECK(a.ideal_power(2) == span_units(4, {2, 3}));
    CHECK_FALSE(u.contains(unit_vec(4, 2)));          // m^2 not inside U
    CHECK(u.contains(unit_vec(4, 3)));                // m^3 inside U
    CHECK(counterexample_pair().degree() == 2);
}

TEST_CASE("socles of the chain and quadric algebras, by direct annihilation") {
    LocalAlgebra chain = chain_algebra(4);
    Subspace soc = chain.socle();
    CHECK(soc == span_units(4, {3}));
    // Brute re-check: x^3 kills every basis element of m.
    for (int i = 1; i < 4; ++i) CHECK(is_zero_vec(chain.mul(unit_vec(4, 3), unit_vec(4, i))));
    // Soc lies inside U for the degenerate pair, outside for the cubic pair.
    CHECK(span_units(4, {1, 3}).contains(unit_vec(4, 3)));
    CHECK_FALSE(span_units(4, {1, 2}).contains(unit_vec(4, 3)));
}

TEST_CASE("the reduced counterexample core multiplies like chain(3)") {
    ReductionTrace tr = reduce(counterexample_pair());
    const LocalAlgebra& core = tr.core.algebra();
    REQUIRE(core.dim() == 3);
    CHECK(core.mul(unit_vec(3, 1), unit_vec(3, 1)) == unit_vec(3, 2));
    CHECK(is_zero_vec(core.mul(unit_vec(3, 1), unit_vec(3, 2))));
    CHECK(is_zero_vec(core.mul(unit_vec(3, 2), unit_vec(3, 2))));
    // The recorded projection maps x -> x and x^2 -> x^2, killing x^3.
    const Mat& proj = tr.steps[0].projection;
    CHECK(core.project(proj, unit_vec(4, 1)) == unit_vec(3, 1));
    CHECK(core.project(proj, unit_vec(4, 3)) == zero_vec(3));
}

TEST_CASE("binomial substitution expands as multiplied-out products") {
    std::vector<std::string> vars = {"z0", "z1", "s1"};
    MultiPoly z1 = MultiPoly::variable(vars, "z1");
    MultiPoly image = z1 + MultiPoly::variable(vars, "s1") * MultiPoly::variable(vars, "z0");
    std::map<std::string, MultiPoly> sub;
    sub["z1"] = image;
    CHECK((z1 * z1).substitute(sub) == image * image);
}

TEST_CASE("canonical forms have Gaussian-integer coefficients, unit content, positive lead") {
    std::vector<std::string> vars = {"z0", "z1"};
    for (const char* text : {"z0*z1 - 1/3*z1^2", "-2*z0^2", "(0+1*i)*z0*z1",
                             "(3+6*i)*z0^2 + (9-3*i)*z1^2"}) {
        MultiPoly f = MultiPoly::parse(vars, text);
        MultiPoly c = canonicalize(f);
        Scalar factor;
        CHECK(c.scalar_multiple_of(f, &factor));  // same projective polynomial
        for (const auto& [e, coef] : c.terms()) {
            CHECK(coef.re().get_den() == 1);
            CHECK(coef.im().get_den() == 1);
        }
        Scalar lead = c.leading_coeff();
        bool positive = lead.re() > 0 || (lead.re() == 0 && lead.im() > 0);
        CHECK(positive);
    }
}

TEST_CASE("one essential variable in (z0+z1)^2, by explicit partials") {
    std::vector<std::string> vars = {"z0", "z1"};
    MultiPoly f = MultiPoly::parse(vars, "z0^2 + 2*z0*z1 + z1^2");
    MultiPoly d0 = f.derivative("z0");
    MultiPoly d1 = f.derivative("z1");
    Scalar ratio;
    CHECK(d1.scalar_multiple_of(d0, &ratio));  // partials span one line
    CHECK(ratio == Scalar(1));
    CHECK(essential_variable_count(f) == 1);
}

TEST_CASE("the cubic equation evaluates to 1 at [1:1:0:0]") {
    MultiPoly f = equation(cubic_pair());
    std::map<std::string, Scalar> at;
    at["z0"] = Scalar(1);
    at["z1"] = Scalar(1);
    at["z2"] = Scalar(0);
    at["z3"] = Scalar(0);
    CHECK(f.eval(at) == Scalar(1));  // canonical scaling of the raw value 1/3
}

TEST_CASE("complement membership via raw powers") {
    LocalAlgebra chain = chain_algebra(4);
    // (x^2)^3 = 0 lies in U; x^3 does not lie in span(x, x^2).
    Element x2 = chain.basis_element(2);
    CHECK((x2 * x2 * x2).is_zero());
    CHECK_FALSE(span_units(4, {1, 2}).contains(unit_vec(4, 3)));

    // (x1 + i*x2)^2 = q + i^2 q = 0 in the quadric algebra.
    LocalAlgebra qa = quadric_pair(2).algebra();
    Element iso = qa.element(Vec{Scalar(0), Scalar(1), Scalar::i(), Scalar(0)});
    CHECK((iso * iso).is_zero());
}

TEST_CASE("exp of x in chain(4) by hand-summed series") {
    LocalAlgebra a = chain_algebra(4);
    Element x = a.basis_element(1);
    Element series = a.one() + x + Scalar(1, 2) * (x * x) + Scalar(1, 6) * (x * x * x);
    CHECK(a.exp(x) == series);
    CHECK(act(cubic_pair(), x, a.one()) == series);
}

TEST_CASE("x^2 and x^2 + 5x^3 differ by the unit 1 + 5x") {
    LocalAlgebra a = chain_algebra(4);
    Element unit = a.element(Vec{Scalar(1), Scalar(5), Scalar(0), Scalar(0)});
    CHECK(a.is_invertible(unit));
    Element x2 = a.basis_element(2);
    CHECK(x2 * unit == a.element(Vec{Scalar(0), Scalar(0), Scalar(1), Scalar(5)}));
    CHECK(same_orbit(cubic_pair(), x2, x2 * unit));
}

TEST_CASE("curve coefficients confirmed by exact evaluation at many t") {
    HPair p = cubic_pair();
    Element x = p.algebra().basis_element(1);
    TCurve c = curve_of(p, x, p.algebra().one());
    for (long t : {1L, 2L, 7L, 100L}) {
        Scalar ts(t);
        Vec expected{Scalar(1), ts, ts * ts * Scalar(1, 2), ts * ts * ts * Scalar(1, 6)};
        CHECK(c.eval(ts) == expected);
    }

    HPair q = quadric_pair(2);
    Element v = q.algebra().element(Vec{Scalar(0), Scalar(1), Scalar(1), Scalar(0)});
    TCurve qc = curve_of(q, v, q.algebra().one());
    for (long t : {1L, 3L, 10L}) {
        Scalar ts(t);
        CHECK(qc.eval(ts) == Vec{Scalar(1), ts, ts, ts * ts});
    }
}

TEST_CASE("the isotropic limit of the quadric has last coordinate exactly zero") {
    // The probe is the oracle here: at every finite t the curve's last
    // coordinate vanishes identically, so the limit direction (0, 1, i, 0)
    // is confirmed against any alternative with a nonzero last coordinate.
    HPair q = quadric_pair(2);
    Element iso = q.algebra().element(Vec{Scalar(0), Scalar(1), Scalar::i(), Scalar(0)});
    TCurve c = curve_of(q, iso, q.algebra().one());
    CHECK(c.coords[3].is_zero());
    for (long t : {10L, 1000L, 99999L}) {
        Vec at = c.eval(Scalar(t));
        CHECK(at[3].is_zero());
        CHECK(at[2] == Scalar(t) * Scalar::i());
    }
    CHECK(one_param_limit(q, iso) ==
          ProjectivePoint(Vec{Scalar(0), Scalar(1), Scalar::i(), Scalar(0)}));
}

TEST_CASE("probe confirmation of limits over random directions") {
    std::mt19937_64 rng(31337);
    std::vector<HPair> pairs = {cubic_pair(), counterexample_pair(), quadric_pair(2)};
    for (const HPair& p : pairs) {
        for (int trial = 0; trial < 20; ++trial) {
            bool nonzero = false;
            std::vector<Element> basis = p.u_basis();
            Element v = p.algebra().zero();
            for (const Element& b : basis) {
                long c = long(rng() % 9) - 4;
                if (c != 0) nonzero = true;
                v = v + Scalar(c) * b;
            }
            if (!nonzero) continue;
            ProjectivePoint lim = one_param_limit(p, v);
            // Large-t probe: the curve evaluated at t, rescaled by its
            // leading power, must converge coordinate-wise; exactness lets
            // us check the t-polynomials directly instead.
            TCurve c = curve_of(p, v, p.algebra().one());
            int K = 0;
            for (const UniPoly& co : c.coords) K = std::max(K, co.degree());
            Vec lead;
            for (const UniPoly& co : c.coords) lead.push_back(co.coeff(K));
            CHECK(ProjectivePoint(lead) == lim);
        }
    }
}

TEST_CASE("degree gate value for chain(5) with span(x, x^2, x^3), by raw powers") {
    LocalAlgebra a = chain_algebra(5);
    Subspace u = span_units(5, {1, 2, 3});
    CHECK(a.ideal_power(4) == span_units(5, {4}));
    CHECK_FALSE(u.contains(unit_vec(5, 4)));
    CHECK(a.ideal_power(5).is_zero());
    HPair p = HPair::validate(a, u);
    CHECK(p.degree() == 4);
}

TEST_CASE("x squares to x^2 in chain(3): the projective-space witness") {
    LocalAlgebra a = chain_algebra(3);
    CHECK(a.mul(unit_vec(3, 1), unit_vec(3, 1)) == unit_vec(3, 2));
    CHECK_FALSE(a.ideal_power(2).is_zero());
}

TEST_CASE("brute-force orbit hull membership for the refutation witness") {
    // Sample many exp(u) * x^2 for the degenerate chain pair; all land in
    // the affine line x^2 + span(x^3) with unit x^2-coefficient, so the
    // limit point [0:0:0:1] is outside the orbit.
    HPair p = counterexample_pair();
    Element x2 = p.algebra().basis_element(2);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Element u = p.algebra().zero();
        for (const Element& b : p.u_basis())
            u = u + Scalar(long(rng() % 11) - 5, 1 + long(rng() % 3)) * b;
        Element moved = act(p, u, x2);
        CHECK(moved[0].is_zero());
        CHECK(moved[1].is_zero());
        CHECK(moved[2] == Scalar(1));  // never reaches the socle point
    }
}
