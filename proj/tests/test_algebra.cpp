#include <doctest.h>

#include <random>

#include "addact/error.hpp"
#include "addact/models.hpp"

using namespace addact;

namespace {

Vec coords(const LocalAlgebra& a, std::initializer_list<const char*> parts) {
    REQUIRE(static_cast<int>(parts.size()) == a.dim());
    Vec out;
    for (const char* p : parts) out.push_back(Scalar::parse(p));
    return out;
}

}  // namespace

TEST_CASE("dual numbers validate") {
    LocalAlgebra a = LocalAlgebra::validate(2, {});
    CHECK(a.dim() == 2);
    CHECK(a.ideal_power(2).is_zero());
}

TEST_CASE("chain algebra multiplies like truncated powers") {
    LocalAlgebra a = chain_algebra(4);
    CHECK(a.mul(unit_vec(4, 1), unit_vec(4, 2)) == unit_vec(4, 3));
    CHECK(is_zero_vec(a.mul(unit_vec(4, 2), unit_vec(4, 3))));
    CHECK(a.one() * a.basis_element(2) == a.basis_element(2));
}

TEST_CASE("quadric model products") {
    LocalAlgebra a = quadric_pair(2).algebra();
    CHECK(is_zero_vec(a.mul(unit_vec(4, 1), unit_vec(4, 2))));
    CHECK(a.mul(unit_vec(4, 1), unit_vec(4, 1)) == unit_vec(4, 3));
    CHECK(a.mul(unit_vec(4, 2), unit_vec(4, 2)) == unit_vec(4, 3));
}

TEST_CASE("idempotent basis vector fails nilpotency") {
    LocalAlgebra::Table t;
    t[{1, 1}] = Vec{Scalar(0), Scalar(1)};
    CHECK_THROWS_WITH_AS(LocalAlgebra::validate(2, t), doctest::Contains("NotNilpotent"),
                         ValidationError);
}

TEST_CASE("non-associative table is reported with a witness triple") {
    // (e1e1)e2 = e2e2 = e3 but e1(e1e2) = e1*0 = 0.
    LocalAlgebra::Table t;
    t[{1, 1}] = unit_vec(4, 2);
    t[{2, 2}] = unit_vec(4, 3);
    CHECK_THROWS_WITH_AS(LocalAlgebra::validate(4, t), doctest::Contains("NotAssociative"),
                         ValidationError);
}

TEST_CASE("product escaping the maximal ideal is rejected") {
    LocalAlgebra::Table t;
    t[{1, 1}] = Vec{Scalar(1), Scalar(0)};
    CHECK_THROWS_WITH_AS(LocalAlgebra::validate(2, t),
                         doctest::Contains("NotClosedInMaxIdeal"), ValidationError);
}

TEST_CASE("ideal powers of the chain algebra") {
    LocalAlgebra a = chain_algebra(4);
    CHECK(a.ideal_power(1) == a.max_ideal());
    CHECK(a.ideal_power(3) == Subspace(4, {unit_vec(4, 3)}));
    CHECK(a.ideal_power(4).is_zero());
    for (int k = 1; k < 4; ++k) CHECK(a.ideal_power(k).contains(a.ideal_power(k + 1)));
}

TEST_CASE("quadric ideal square is the socle line") {
    LocalAlgebra a = quadric_pair(2).algebra();
    CHECK(a.ideal_power(2) == Subspace(4, {unit_vec(4, 3)}));
    CHECK(a.socle() == Subspace(4, {unit_vec(4, 3)}));
}

TEST_CASE("socle examples") {
    CHECK(chain_algebra(4).socle() == Subspace(4, {unit_vec(4, 3)}));
    LocalAlgebra sq = pn_square_zero(3).algebra();
    CHECK(sq.socle() == sq.max_ideal());
}

TEST_CASE("socle annihilates the maximal ideal") {
    for (const LocalAlgebra& a :
         {chain_algebra(5), quadric_pair(3).algebra(), cubic_pair().algebra()}) {
        Subspace soc = a.socle();
        for (const Vec& s : soc.basis()) {
            for (int k = 1; k < a.dim(); ++k) {
                CHECK(is_zero_vec(a.mul(s, unit_vec(a.dim(), k))));
            }
        }
    }
}

TEST_CASE("exp series in the chain algebra") {
    LocalAlgebra a = chain_algebra(4);
    CHECK(a.exp(a.zero()) == a.one());
    CHECK(a.exp(a.basis_element(1)).coords() == coords(a, {"1", "1", "1/2", "1/6"}));
    CHECK_THROWS_AS(a.exp(a.one()), Error);
}

TEST_CASE("exp in the quadric model collapses squares") {
    HPair p = quadric_pair(2);
    const LocalAlgebra& a = p.algebra();
    Element m = Scalar(2) * a.basis_element(1) + Scalar(3) * a.basis_element(2);
    CHECK(a.exp(m).coords() == coords(a, {"1", "2", "3", "13/2"}));
}

TEST_CASE("log series and roundtrip") {
    LocalAlgebra a = chain_algebra(4);
    CHECK(a.log(a.one()) == a.zero());
    Element one_plus_x = a.one() + a.basis_element(1);
    CHECK(a.log(one_plus_x).coords() == coords(a, {"0", "1", "-1/2", "1/3"}));
    CHECK(a.log(a.exp(a.basis_element(1))) == a.basis_element(1));
    CHECK_THROWS_AS(a.log(a.basis_element(1)), Error);
}

TEST_CASE("nilpotency exponents") {
    LocalAlgebra a = chain_algebra(4);
    CHECK(a.nilpotency_exponent(a.basis_element(1)) == 3);
    CHECK(a.nilpotency_exponent(a.basis_element(2)) == 1);
    LocalAlgebra q = quadric_pair(2).algebra();
    Element iso = q.basis_element(1) + Scalar::i() * q.basis_element(2);
    CHECK(q.nilpotency_exponent(iso) == 1);
    CHECK_THROWS_AS(a.nilpotency_exponent(a.zero()), Error);
    CHECK_THROWS_AS(a.nilpotency_exponent(a.one()), Error);
}

TEST_CASE("quotient by the top socle line truncates the chain") {
    LocalAlgebra a = chain_algebra(4);
    auto q = a.quotient(Subspace(4, {unit_vec(4, 3)}));
    CHECK(q.algebra.dim() == 3);
    CHECK(q.algebra == chain_algebra(3));
    CHECK(a.quotient(Subspace(4)).algebra == a);
    CHECK_THROWS_AS(a.quotient(Subspace(4, {unit_vec(4, 1)})), Error);
}

TEST_CASE("socle extension quotient recovers the base") {
    HPair ext = socle_extension(quadric_pair(2), 1);
    const LocalAlgebra& a = ext.algebra();
    auto q = a.quotient(Subspace(5, {unit_vec(5, 4)}));
    CHECK(q.algebra == quadric_pair(2).algebra());
}

TEST_CASE("quotient algebras validate") {
    LocalAlgebra a = chain_algebra(5);
    auto q = a.quotient(a.ideal_power(3));
    CHECK_NOTHROW(LocalAlgebra::validate(q.algebra.dim(), q.algebra.table()));
}

TEST_CASE("subalgebra generation") {
    LocalAlgebra a = chain_algebra(4);
    CHECK(a.subalgebra_generated(a.max_ideal()) == Subspace::full(4));
    CHECK(a.subalgebra_generated(Subspace(4, {unit_vec(4, 1)})) == Subspace::full(4));
    Subspace from_sq = a.subalgebra_generated(Subspace(4, {unit_vec(4, 2)}));
    CHECK(from_sq == Subspace(4, {unit_vec(4, 0), unit_vec(4, 2)}));
}

TEST_CASE("associativity spot-check on random triples") {
    std::mt19937_64 g(3);
    std::uniform_int_distribution<long> num(-4, 4);
    for (const LocalAlgebra& a : {chain_algebra(5), quadric_pair(3).algebra(),
                                  socle_extension(cubic_pair(), 2).algebra()}) {
        for (int rep = 0; rep < 40; ++rep) {
            auto rnd = [&] {
                Vec v;
                for (int k = 0; k < a.dim(); ++k) v.push_back(Scalar(num(g)));
                return a.element(v);
            };
            Element x = rnd(), y = rnd(), z = rnd();
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * y == y * x);
        }
    }
}
