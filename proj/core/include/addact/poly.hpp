#pragma once

#include <map>
#include <string>
#include <vector>

#include "addact/scalar.hpp"

namespace addact {

// Graded-lexicographic order on exponent vectors, descending: larger total
// degree first, ties broken lexicographically with the earlier declared
// variable counted as greater.
struct GrlexGreater {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial over Q(i). Every polynomial carries its
// ordered variable list; binary operations require identical lists (use
// with_variables to align). No zero coefficients are stored, and the term
// map iterates leading term first, which makes printing canonical.
class MultiPoly {
public:
    using Terms = std::map<std::vector<int>, Scalar, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Scalar& c);
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name);
    static MultiPoly monomial(std::vector<std::string> vars, std::vector<int> exps,
                              const Scalar& c);

    const std::vector<std::string>& variables() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;
    bool is_constant() const;
    Scalar constant_value() const;  // requires is_constant()

    // Same polynomial over a superset variable list (values permuted by
    // name); throws if a used variable is missing from the new list.
    MultiPoly with_variables(std::vector<std::string> vars) const;

    Scalar coeff(const std::vector<int>& exps) const;
    Scalar leading_coeff() const;  // requires nonzero

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Scalar& c) const;
    MultiPoly pow(int k) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Simultaneous substitution. Every key must be a declared variable; all
    // images must share one variable list, which becomes the result's list.
    // Unmapped variables must exist in the image list and map to themselves.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& images) const;

    Scalar eval(const std::map<std::string, Scalar>& values) const;
    MultiPoly derivative(const std::string& var) const;

    // True iff b = c*a for a single scalar c (with a nonzero); returns c.
    bool scalar_multiple_of(const MultiPoly& a, Scalar* factor) const;

    // Text syntax: "3*z0^2*z3 - 3*z0*z1*z2 + z1^3"; coefficients use the
    // Scalar syntax (complex coefficients must be parenthesized, e.g.
    // "(1+1*i)*z0"). parse/print round-trips.
    static MultiPoly parse(std::vector<std::string> vars, const std::string& text);
    std::string str() const;

    void add_term(const std::vector<int>& exps, const Scalar& c);

private:
    std::vector<std::string> vars_;
    Terms terms_;
};

// Scales a nonzero polynomial by the unique scalar making every coefficient
// a Gaussian integer with trivial common Gaussian-integer content, and the
// leading coefficient a+bi normalized to a > 0, or a = 0 and b > 0.
MultiPoly canonicalize(const MultiPoly& p);

// Minimal number of variables needed to express a homogeneous polynomial
// after linear change of variables = rank of the span of its first partials.
int essential_variable_count(const MultiPoly& p);

// Point of projective space with exact coordinates; the stored
// representative is scaled so its first nonzero coordinate is 1.
class ProjectivePoint {
public:
    explicit ProjectivePoint(Vec coords);
    const Vec& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) {
        return !(a == b);
    }

    std::string str() const;  // "[a : b : c]"

private:
    Vec coords_;
};

// Univariate polynomial in t over Q(i), dense ascending coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Vec coeffs);

    static UniPoly constant(const Scalar& c) { return UniPoly(Vec{c}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Scalar coeff(int k) const;
    const Vec& coeffs() const { return coeffs_; }

    Scalar eval(const Scalar& t) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str(const std::string& var = "t") const;

private:
    Vec coeffs_;
};

}  // namespace addact
