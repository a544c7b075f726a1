#include "addact/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "addact/error.hpp"
#include "addact/matrix.hpp"

namespace addact {

bool GrlexGreater::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;  // earlier variable counted as greater
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Scalar& c) {
    MultiPoly p(std::move(vars));
    p.add_term(std::vector<int>(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
    if (it == p.vars_.end()) throw Error("UnknownVariable", name);
    std::vector<int> e(p.vars_.size(), 0);
    e[static_cast<size_t>(it - p.vars_.begin())] = 1;
    p.add_term(e, Scalar(1));
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, std::vector<int> exps,
                              const Scalar& c) {
    MultiPoly p(std::move(vars));
    if (exps.size() != p.vars_.size()) throw Error("DimensionMismatch", "exponent vector length");
    p.add_term(exps, c);
    return p;
}

void MultiPoly::add_term(const std::vector<int>& exps, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& lead = terms_.begin()->first;
    return std::accumulate(lead.begin(), lead.end(), 0);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree();
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    return true;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::accumulate(terms_.begin()->first.begin(),
                                                  terms_.begin()->first.end(), 0) == 0);
}

Scalar MultiPoly::constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant()) throw Error("BadArgument", "polynomial is not constant");
    return terms_.begin()->second;
}

MultiPoly MultiPoly::with_variables(std::vector<std::string> vars) const {
    MultiPoly out(std::move(vars));
    std::vector<int> where(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(out.vars_.begin(), out.vars_.end(), vars_[i]);
        if (it != out.vars_.end()) where[i] = static_cast<int>(it - out.vars_.begin());
    }
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne(out.vars_.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0) throw Error("UnknownVariable", vars_[i] + " missing from new list");
            ne[static_cast<size_t>(where[i])] = e[i];
        }
        out.add_term(ne, c);
    }
    return out;
}

Scalar MultiPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw Error("ZeroPolynomial", "leading coefficient of zero");
    return terms_.begin()->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

static void check_same_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.variables() != b.variables())
        throw Error("VariableMismatch", "polynomials over different variable lists");
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    check_same_vars(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    check_same_vars(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_vars(a, b);
    MultiPoly r(a.variables());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            std::vector<int> e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MultiPoly MultiPoly::pow(int k) const {
    MultiPoly r = constant(vars_, Scalar(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& images) const {
    std::vector<std::string> target;
    for (const auto& [name, img] : images) {
        if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
            throw Error("UnknownVariable", name);
        if (target.empty())
            target = img.variables();
        else if (img.variables() != target)
            throw Error("VariableMismatch", "substitution images over different variable lists");
    }
    if (target.empty()) target = vars_;

    std::vector<MultiPoly> image_of;
    for (const auto& v : vars_) {
        auto it = images.find(v);
        if (it != images.end())
            image_of.push_back(it->second);
        else
            image_of.push_back(MultiPoly::variable(target, v));  // throws if absent
    }
    MultiPoly out(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * image_of[i].pow(e[i]);
        out = out + term;
    }
    return out;
}

Scalar MultiPoly::eval(const std::map<std::string, Scalar>& values) const {
    Scalar out(0);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = values.find(vars_[i]);
            if (it == values.end()) throw Error("UnknownVariable", vars_[i] + " has no value");
            for (int k = 0; k < e[i]; ++k) t *= it->second;
        }
        out += t;
    }
    return out;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw Error("UnknownVariable", var);
    size_t idx = static_cast<size_t>(it - vars_.begin());
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        std::vector<int> ne = e;
        ne[idx] -= 1;
        r.add_term(ne, c * Scalar(e[idx]));
    }
    return r;
}

bool MultiPoly::scalar_multiple_of(const MultiPoly& a, Scalar* factor) const {
    check_same_vars(*this, a);
    if (a.is_zero()) return false;
    if (is_zero()) {
        if (factor) *factor = Scalar(0);
        return true;
    }
    if (terms_.size() != a.terms_.size()) return false;
    Scalar c = terms_.begin()->second / a.terms_.begin()->second;
    auto ita = a.terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it, ++ita) {
        if (it->first != ita->first || it->second != c * ita->second) return false;
    }
    if (factor) *factor = c;
    return true;
}

// ---------------------------------------------------------------------------
// printing / parsing

namespace {

std::string monomial_str(const std::vector<std::string>& vars, const std::vector<int>& e) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono = monomial_str(vars_, e);
        std::string coef;
        bool neg = false;
        if (c.is_real()) {
            Scalar a = c;
            if (a.re() < 0) {
                neg = true;
                a = -a;
            }
            if (!(a.is_one() && !mono.empty())) coef = a.str();
        } else {
            coef = "(" + c.str() + ")";
        }
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (!coef.empty() && !mono.empty())
            out += coef + "*" + mono;
        else
            out += coef.empty() ? mono : coef;
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const std::vector<std::string>& vars;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    MultiPoly parse_sum() {
        MultiPoly acc(vars);
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (s[pos++] == '-');
        acc = acc + parse_term(neg);
        while (!eof()) {
            char c = peek();
            if (c != '+' && c != '-') throw Error("ParseError", "expected + or - in polynomial");
            ++pos;
            acc = acc + parse_term(c == '-');
        }
        return acc;
    }

    MultiPoly parse_term(bool neg) {
        MultiPoly prod = MultiPoly::constant(vars, Scalar(neg ? -1 : 1));
        for (;;) {
            prod = prod * parse_factor();
            if (peek() == '*') {
                ++pos;
                continue;
            }
            break;
        }
        return prod;
    }

    MultiPoly parse_factor() {
        skip_ws();
        if (pos >= s.size()) throw Error("ParseError", "unexpected end of polynomial");
        if (s[pos] == '(') {
            size_t depth = 1, start = ++pos;
            while (pos < s.size() && depth) {
                if (s[pos] == '(') ++depth;
                if (s[pos] == ')') --depth;
                ++pos;
            }
            if (depth) throw Error("ParseError", "unbalanced parenthesis");
            return with_exponent(
                MultiPoly::constant(vars, Scalar::parse(s.substr(start, pos - 1 - start))));
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
                ++pos;
            return with_exponent(
                MultiPoly::constant(vars, Scalar::parse(s.substr(start, pos - start))));
        }
        // variable name: longest declared name matching at this position
        size_t best = 0;
        std::string chosen;
        for (const auto& v : vars)
            if (v.size() > best && s.compare(pos, v.size(), v) == 0) {
                best = v.size();
                chosen = v;
            }
        if (best == 0) throw Error("ParseError", "unknown symbol at '" + s.substr(pos, 8) + "'");
        pos += best;
        return with_exponent(MultiPoly::variable(vars, chosen));
    }

    MultiPoly with_exponent(MultiPoly base) {
        if (peek() == '^') {
            ++pos;
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw Error("ParseError", "missing exponent");
            base = base.pow(std::stoi(s.substr(start, pos - start)));
        }
        return base;
    }
};

}  // namespace

MultiPoly MultiPoly::parse(std::vector<std::string> vars, const std::string& text) {
    Parser p{text, 0, vars};
    MultiPoly out = p.parse_sum();
    return out;
}

// ---------------------------------------------------------------------------
// canonicalization over the Gaussian integers

namespace {

struct Gint {
    mpz_class a, b;  // a + b*i
    bool is_zero() const { return a == 0 && b == 0; }
};

Gint gmul(const Gint& x, const Gint& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
}

Gint gsub(const Gint& x, const Gint& y) { return {x.a - y.a, x.b - y.b}; }

mpz_class round_div(const mpz_class& num, const mpz_class& den) {
    // nearest integer to num/den, den > 0
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) ++q;
    return q;
}

// Euclidean algorithm in Z[i] with nearest-rounding division.
Gint ggcd(Gint x, Gint y) {
    while (!y.is_zero()) {
        mpz_class n = y.a * y.a + y.b * y.b;
        Gint conj{y.a, -y.b};
        Gint num = gmul(x, conj);
        Gint q{round_div(num.a, n), round_div(num.b, n)};
        Gint r = gsub(x, gmul(q, y));
        x = y;
        y = r;
    }
    return x;
}

}  // namespace

MultiPoly canonicalize(const MultiPoly& p) {
    if (p.is_zero()) throw Error("ZeroPolynomial", "cannot canonicalize the zero polynomial");
    // Clear denominators.
    mpz_class den(1);
    for (const auto& [e, c] : p.terms()) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.re().get_den().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), l.get_mpz_t(), c.im().get_den().get_mpz_t());
    }
    // Divide by the Gaussian-integer content.
    Gint content{0, 0};
    for (const auto& [e, c] : p.terms()) {
        mpq_class a = c.re() * den, b = c.im() * den;
        a.canonicalize();
        b.canonicalize();
        content = ggcd(content, Gint{a.get_num(), b.get_num()});
    }
    Scalar factor = Scalar(mpq_class(den)) / Scalar(mpq_class(content.a), mpq_class(content.b));
    MultiPoly q = p.scaled(factor);
    // Unit fix: leading coefficient a+bi with a > 0, or a = 0 and b > 0.
    Scalar lead = q.leading_coeff();
    for (int k = 0; k < 4; ++k) {
        if (lead.re() > 0 || (lead.re() == 0 && lead.im() > 0)) break;
        lead *= Scalar::i();
        q = q.scaled(Scalar::i());
    }
    return q;
}

int essential_variable_count(const MultiPoly& p) {
    if (p.is_zero()) throw Error("ZeroPolynomial", "essential variables of zero");
    if (!p.is_homogeneous()) throw Error("NotHomogeneous", "essential variables need a form");
    // Rank of the span of the first partial derivatives inside the space of
    // polynomials (valid in characteristic zero).
    std::vector<MultiPoly> partials;
    std::map<std::vector<int>, int> mono_index;
    for (const auto& v : p.variables()) {
        MultiPoly d = p.derivative(v);
        for (const auto& [e, c] : d.terms())
            mono_index.emplace(e, static_cast<int>(mono_index.size()));
        partials.push_back(std::move(d));
    }
    Mat rows;
    for (const auto& d : partials) {
        Vec row = zero_vec(static_cast<int>(mono_index.size()));
        for (const auto& [e, c] : d.terms()) row[static_cast<size_t>(mono_index[e])] = c;
        rows.push_back(std::move(row));
    }
    if (mono_index.empty()) return 0;
    return rank(rows);
}

// ---------------------------------------------------------------------------

ProjectivePoint::ProjectivePoint(Vec coords) : coords_(std::move(coords)) {
    size_t first = 0;
    while (first < coords_.size() && coords_[first].is_zero()) ++first;
    if (first == coords_.size())
        throw Error("ZeroElement", "projective point needs a nonzero coordinate");
    Scalar inv = coords_[first].inverse();
    for (auto& c : coords_) c *= inv;
}

std::string ProjectivePoint::str() const {
    std::string out = "[";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += " : ";
        out += coords_[i].str();
    }
    return out + "]";
}

UniPoly::UniPoly(Vec coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Scalar(0);
    return coeffs_[static_cast<size_t>(k)];
}

Scalar UniPoly::eval(const Scalar& t) const {
    Scalar out(0);
    for (size_t k = coeffs_.size(); k-- > 0;) out = out * t + coeffs_[k];
    return out;
}

std::string UniPoly::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeffs_[k].str() + ")";
        if (k >= 1) out += "*" + var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace addact
