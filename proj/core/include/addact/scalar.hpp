#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace addact {

// Element of Q(i), the Gaussian rationals. Both components are kept in
// lowest terms with positive denominator (mpq_class canonical form), so
// equality is exact structural equality.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}  // NOLINT: implicit by intent
    Scalar(const mpq_class& re) : re_(re), im_(0) { canon(); }
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) { canon(); }
    Scalar(long num, long den);

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    // |z|^2 = re^2 + im^2, a nonnegative rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // Arbitrary total order, used only for deterministic container keys.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    // Text form: "a/b", "a/b+c/d*i" or "c/d*i", integer shorthand allowed.
    // parse accepts the same syntax whitespace-insensitively; a bare "i" and
    // "-i" are accepted. str() round-trips through parse exactly.
    static Scalar parse(const std::string& text);
    std::string str() const;

private:
    void canon() {
        re_.canonicalize();
        im_.canonicalize();
    }
    mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vec = std::vector<Scalar>;

}  // namespace addact
