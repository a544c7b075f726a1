#include <doctest.h>

#include <random>

#include "addact/error.hpp"
#include "addact/subspace.hpp"

using namespace addact;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

Vec row(std::initializer_list<const char*> parts) {
    Vec out;
    for (const char* p : parts) out.push_back(S(p));
    return out;
}

}  // namespace

TEST_CASE("scalar parse and print round-trip") {
    for (const char* text : {"0", "3", "-3", "1/2", "-7/3", "i", "-i", "2*i", "-1/2*i",
                             "1/2+1/3*i", "-2+i", "3-2*i"}) {
        Scalar s = Scalar::parse(text);
        CHECK(Scalar::parse(s.str()) == s);
    }
    CHECK(Scalar::parse(" 1/2 + 1/3 * i ") == Scalar::parse("1/2+1/3*i"));
    CHECK(Scalar::parse("3") == Scalar(3));
    CHECK(Scalar::parse("4/6") == Scalar(2, 3));
}

TEST_CASE("scalar field arithmetic") {
    Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    Scalar z = S("1/2+1/3*i");
    CHECK(z * z.inverse() == Scalar(1));
    CHECK(z + (-z) == Scalar(0));
    CHECK(z.conj() == S("1/2-1/3*i"));
    CHECK((z / z) == Scalar(1));
    CHECK_THROWS_AS(Scalar(0).inverse(), Error);
}

TEST_CASE("rref examples") {
    SUBCASE("identity is fixed") {
        Mat id{row({"1", "0"}), row({"0", "1"})};
        CHECK(rref(id) == id);
    }
    SUBCASE("dependent rows collapse") {
        Mat m{row({"2", "4"}), row({"1", "2"})};
        CHECK(rref(m) == Mat{row({"1", "2"})});
    }
    SUBCASE("imaginary pivot is normalized") {
        Mat m{row({"0", "i"}), row({"0", "2*i"})};
        CHECK(rref(m) == Mat{row({"0", "1"})});
    }
}

TEST_CASE("rref is idempotent on random matrices") {
    std::mt19937_64 g(7);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<int> dims(1, 6);
    for (int rep = 0; rep < 50; ++rep) {
        int r = dims(g), c = dims(g);
        Mat m;
        for (int a = 0; a < r; ++a) {
            Vec v;
            for (int b = 0; b < c; ++b) {
                v.push_back(Scalar(num(g)) + Scalar::i() * Scalar(num(g)));
            }
            m.push_back(std::move(v));
        }
        Mat once = rref(m);
        CHECK(rref(once) == once);
        CHECK(static_cast<int>(once.size()) == rank(m));
    }
}

TEST_CASE("kernel vectors annihilate the matrix") {
    Mat m{row({"1", "2", "3"}), row({"0", "1", "1"})};
    Mat k = kernel(m, 3);
    REQUIRE(k.size() == 1);
    for (const Vec& mrow : m) {
        Scalar dot(0);
        for (size_t j = 0; j < 3; ++j) dot += mrow[j] * k[0][j];
        CHECK(dot == Scalar(0));
    }
}

TEST_CASE("solve_combination finds unique coefficients") {
    Mat rows{row({"1", "0", "1"}), row({"0", "1", "2"})};
    auto c = solve_combination(rows, row({"2", "3", "8"}));
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Scalar(2));
    CHECK((*c)[1] == Scalar(3));
    CHECK(!solve_combination(rows, row({"0", "0", "1"})).has_value());
}

TEST_CASE("subspace sum examples") {
    Subspace e1(3, {row({"1", "0", "0"})});
    Subspace e2(3, {row({"0", "1", "0"})});
    CHECK((e1 + e2).dim() == 2);
    CHECK((e1 + e1) == e1);
    Subspace diag(2, {row({"1", "1"})});
    Subspace anti(2, {row({"1", "-1"})});
    CHECK((diag + anti) == Subspace::full(2));
}

TEST_CASE("subspace intersection examples") {
    Subspace v(3, {row({"1", "0", "0"}), row({"0", "1", "0"})});
    CHECK(intersect(v, v) == v);
    Subspace w(3, {row({"0", "1", "0"}), row({"0", "0", "1"})});
    CHECK(intersect(v, w) == Subspace(3, {row({"0", "1", "0"})}));
    Subspace e1(3, {row({"1", "0", "0"})});
    Subspace e3(3, {row({"0", "0", "1"})});
    CHECK(intersect(e1, e3).is_zero());
}

TEST_CASE("containment over the gaussian rationals") {
    Subspace s(2, {row({"1", "i"})});
    CHECK(s.contains(row({"i", "-1"})));  // i*(e1 + i e2)
    CHECK(!s.contains(row({"0", "1"})));
    CHECK(s.contains(zero_vec(2)));
}

TEST_CASE("dimension formula on random subspaces") {
    std::mt19937_64 g(11);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<int> counts(0, 4);
    const int ambient = 5;
    auto random_space = [&] {
        Mat rows;
        int r = counts(g);
        for (int a = 0; a < r; ++a) {
            Vec v;
            for (int b = 0; b < ambient; ++b) v.push_back(Scalar(num(g)));
            rows.push_back(std::move(v));
        }
        return Subspace(ambient, rows);
    };
    for (int rep = 0; rep < 60; ++rep) {
        Subspace a = random_space(), b = random_space();
        CHECK(a.dim() + b.dim() == (a + b).dim() + intersect(a, b).dim());
        CHECK((a + b).contains(a));
        CHECK(a.contains(intersect(a, b)));
    }
}

TEST_CASE("membership agrees with brute-force solvability") {
    std::mt19937_64 g(13);
    std::uniform_int_distribution<long> num(-3, 3);
    const int ambient = 8;
    for (int rep = 0; rep < 40; ++rep) {
        Mat rows;
        for (int a = 0; a < 3; ++a) {
            Vec v;
            for (int b = 0; b < ambient; ++b) v.push_back(Scalar(num(g)));
            rows.push_back(std::move(v));
        }
        Vec target;
        for (int b = 0; b < ambient; ++b) target.push_back(Scalar(num(g)));
        Subspace s(ambient, rows);
        // Independent oracle: consistency of the transposed linear system.
        Mat aug;
        for (int b = 0; b < ambient; ++b) {
            Vec col;
            for (const Vec& r : rows) col.push_back(r[static_cast<size_t>(b)]);
            col.push_back(target[static_cast<size_t>(b)]);
            aug.push_back(std::move(col));
        }
        bool solvable = rank(aug) == [&] {
            Mat cols_only = aug;
            for (Vec& r : cols_only) r.pop_back();
            return rank(cols_only);
        }();
        CHECK(s.contains(target) == solvable);
    }
}

TEST_CASE("mixed-length vector arithmetic is rejected") {
    CHECK_THROWS_AS(add(zero_vec(2), zero_vec(3)), Error);
    CHECK_THROWS_AS(Subspace(2, {row({"1", "0", "0"})}), Error);
}
