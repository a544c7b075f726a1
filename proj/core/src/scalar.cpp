#include "addact/scalar.hpp"

#include <cctype>
#include <ostream>

#include "addact/error.hpp"

namespace addact {

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw Error("DivisionByZero", "rational with zero denominator");
    canon();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of zero scalar");
    mpq_class n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rat(std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.empty()) throw Error("ParseError", "empty rational");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error("ParseError", "bad rational '" + s + "'");
    if (q.get_den() == 0) throw Error("ParseError", "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error("ParseError", "empty scalar");

    mpq_class re = 0, im = 0;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t start = pos;
        if (s[pos] == '+' || s[pos] == '-') ++pos;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
        std::string part = s.substr(start, pos - start);
        if (part.empty() || part == "+" || part == "-")
            throw Error("ParseError", "bad scalar '" + text + "'");
        bool imag = part.back() == 'i';
        if (imag) {
            part.pop_back();
            if (!part.empty() && part.back() == '*') part.pop_back();
            if (part.empty() || part == "+") part = "1";
            else if (part == "-") part = "-1";
        }
        (imag ? im : re) += parse_rat(part);
    }
    return Scalar(re, im);
}

std::string Scalar::str() const {
    if (im_ == 0) return rat_str(re_);
    std::string imag = rat_str(abs(im_)) + "*i";
    if (re_ == 0) return (im_ < 0 ? "-" : "") + imag;
    return rat_str(re_) + (im_ < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace addact
