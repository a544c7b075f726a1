#include <doctest.h>

#include <map>
#include <random>

#include "addact/error.hpp"
#include "addact/poly.hpp"

using namespace addact;

namespace {

const std::vector<std::string> Z3 = {"z0", "z1", "z2"};

MultiPoly P(const std::vector<std::string>& vars, const std::string& text) {
    return MultiPoly::parse(vars, text);
}

}  // namespace

TEST_CASE("parse and print round-trip in canonical grlex order") {
    std::vector<std::string> vars = {"z0", "z1", "z2", "z3"};
    const std::string cubic = "3*z0^2*z3 - 3*z0*z1*z2 + z1^3";
    CHECK(P(vars, cubic).str() == cubic);
    CHECK(P(vars, "z1^3 + 3*z0^2*z3 - 3*z0*z1*z2").str() == cubic);
    CHECK(P(Z3, "(1+1*i)*z0 - 1/2*z1").str() == "(1+1*i)*z0 - 1/2*z1");
    CHECK(P(Z3, "0").is_zero());
    CHECK(P(Z3, "z0 - z0").str() == "0");
}

TEST_CASE("ring operations are exact") {
    MultiPoly a = P(Z3, "z0 + z1");
    MultiPoly b = P(Z3, "z0 - z1");
    CHECK(a * b == P(Z3, "z0^2 - z1^2"));
    CHECK(a + MultiPoly(Z3) == a);
    CHECK(a - a == MultiPoly(Z3));
    CHECK(a.pow(2) == P(Z3, "z0^2 + 2*z0*z1 + z1^2"));
    CHECK(a.scaled(Scalar::i()).str() == "(1*i)*z0 + (1*i)*z1");
}

TEST_CASE("substitution is simultaneous") {
    std::vector<std::string> zs = {"z0", "z1", "s1"};
    MultiPoly f = P(zs, "z1^2");
    std::map<std::string, MultiPoly> images;
    images["z1"] = P(zs, "z1 + s1*z0");
    CHECK(f.substitute(images) == P(zs, "z1^2 + 2*s1*z0*z1 + s1^2*z0^2"));

    // Swapping two variables at once must not cascade.
    std::map<std::string, MultiPoly> swap;
    swap["z0"] = P(Z3, "z1");
    swap["z1"] = P(Z3, "z0");
    CHECK(P(Z3, "z0^2 + z1").substitute(swap) == P(Z3, "z1^2 + z0"));
}

TEST_CASE("substitution rejects unknown variables") {
    std::map<std::string, MultiPoly> images;
    images["w"] = P(Z3, "z0");
    CHECK_THROWS_AS(P(Z3, "z0").substitute(images), Error);
}

TEST_CASE("substitution composes on random instances") {
    std::mt19937_64 rng(7);
    auto rnd_poly = [&] {
        MultiPoly out(Z3);
        for (int t = 0; t < 4; ++t) {
            std::vector<int> e = {int(rng() % 3), int(rng() % 3), int(rng() % 2)};
            out.add_term(e, Scalar(long(rng() % 7) - 3, 1 + long(rng() % 2)));
        }
        return out;
    };
    for (int trial = 0; trial < 25; ++trial) {
        MultiPoly f = rnd_poly();
        std::map<std::string, MultiPoly> sigma, tau, composed;
        for (const std::string& v : Z3) {
            sigma[v] = rnd_poly();
            tau[v] = rnd_poly();
        }
        for (const std::string& v : Z3) composed[v] = sigma[v].substitute(tau);
        CHECK(f.substitute(sigma).substitute(tau) == f.substitute(composed));
    }
}

TEST_CASE("canonicalize clears denominators and normalizes the lead") {
    CHECK(canonicalize(P(Z3, "z0*z1 - 1/3*z1^2")) == P(Z3, "3*z0*z1 - z1^2"));
    CHECK(canonicalize(P(Z3, "-2*z0^2")) == P(Z3, "z0^2"));
    CHECK(canonicalize(P(Z3, "(0+1*i)*z0*z1")) == P(Z3, "z0*z1"));
    CHECK_THROWS_AS(canonicalize(MultiPoly(Z3)), Error);
}

TEST_CASE("canonicalize is idempotent and scale-invariant") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly f(Z3);
        for (int t = 0; t < 3; ++t) {
            std::vector<int> e = {int(rng() % 3), int(rng() % 3), int(rng() % 3)};
            Scalar c = Scalar(long(rng() % 9) - 4, 1 + long(rng() % 3));
            if (rng() % 3 == 0) c = c * Scalar::i();
            f.add_term(e, c);
        }
        if (f.is_zero()) continue;
        MultiPoly canon = canonicalize(f);
        CHECK(canonicalize(canon) == canon);
        Scalar c = Scalar(2, 7) + Scalar(5, 3) * Scalar::i();
        CHECK(canonicalize(f.scaled(c)) == canon);
        CHECK(canonicalize(-f) == canon);
    }
}

TEST_CASE("essential variable count is the rank of the first partials") {
    CHECK(essential_variable_count(P(Z3, "z0^2 + z1^2")) == 2);
    CHECK(essential_variable_count(P({"z0", "z1"}, "z0^2 + 2*z0*z1 + z1^2")) == 1);
    std::vector<std::string> z4 = {"z0", "z1", "z2", "z3"};
    CHECK(essential_variable_count(P(z4, "2*z0*z3 - z1^2 - z2^2")) == 4);
    CHECK_THROWS_AS(essential_variable_count(P(Z3, "z0^2 + z1")), Error);
}

TEST_CASE("with_variables embeds by name") {
    MultiPoly f = P({"z1"}, "z1^2");
    CHECK(f.with_variables(Z3) == P(Z3, "z1^2"));
    CHECK_THROWS_AS(f.with_variables({"z0", "z2"}), Error);
}

TEST_CASE("projective points normalize the first nonzero coordinate") {
    ProjectivePoint p(Vec{Scalar(0), Scalar(2), Scalar(4)});
    CHECK(p.str() == "[0 : 1 : 2]");
    CHECK(p == ProjectivePoint(Vec{Scalar(0), Scalar(-1), Scalar(-2)}));
    CHECK(p != ProjectivePoint(Vec{Scalar(0), Scalar(1), Scalar(3)}));
    ProjectivePoint q(Vec{Scalar::i(), Scalar(1)});
    CHECK(q.coords()[0] == Scalar(1));
    CHECK(q.coords()[1] == -Scalar::i());
    CHECK_THROWS_AS(ProjectivePoint(Vec{Scalar(0), Scalar(0)}), Error);
}

TEST_CASE("univariate polynomials evaluate and print") {
    UniPoly p(Vec{Scalar(1), Scalar(0), Scalar(3)});
    CHECK(p.degree() == 2);
    CHECK(p.eval(Scalar(2)) == Scalar(13));
    CHECK(p.coeff(1) == Scalar(0));
    CHECK(p.coeff(5) == Scalar(0));
    CHECK(UniPoly().is_zero());
}
