#include "addact/algebra.hpp"

#include <sstream>

#include "addact/error.hpp"

namespace addact {

Element::Element(const LocalAlgebra* alg, Vec coords) : alg_(alg), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != alg_->dim())
        throw Error("DimensionMismatch", "element coordinate length");
}

static void check_same_algebra(const Element& a, const Element& b) {
    if (!(a.algebra() == b.algebra())) throw Error("AlgebraMismatch", "elements of different algebras");
}

Element operator+(const Element& a, const Element& b) {
    check_same_algebra(a, b);
    return Element(&a.algebra(), add(a.coords(), b.coords()));
}

Element operator-(const Element& a, const Element& b) {
    check_same_algebra(a, b);
    return Element(&a.algebra(), sub(a.coords(), b.coords()));
}

Element operator*(const Element& a, const Element& b) {
    check_same_algebra(a, b);
    return Element(&a.algebra(), a.algebra().mul(a.coords(), b.coords()));
}

Element operator*(const Scalar& c, const Element& a) {
    return Element(&a.algebra(), scale(a.coords(), c));
}

bool operator==(const Element& a, const Element& b) {
    return a.algebra() == b.algebra() && a.coords() == b.coords();
}

std::string Element::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ",";
        os << coords_[i];
    }
    os << ")";
    return os.str();
}

const Vec* LocalAlgebra::product_entry(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = table_.find({i, j});
    return it == table_.end() ? nullptr : &it->second;
}

Vec LocalAlgebra::mul(const Vec& a, const Vec& b) const {
    if (static_cast<int>(a.size()) != dim_ || static_cast<int>(b.size()) != dim_)
        throw Error("DimensionMismatch", "element coordinate length");
    // c = a0*b + b0*(a - a0*e0) + sum_{i,j>=1} a_i b_j (e_i e_j)
    Vec r = scale(b, a[0]);
    for (int i = 1; i < dim_; ++i) r[i] += b[0] * a[i];
    for (int i = 1; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 1; j < dim_; ++j) {
            if (b[j].is_zero()) continue;
            const Vec* e = product_entry(i, j);
            if (!e) continue;
            Scalar f = a[i] * b[j];
            for (int k = 0; k < dim_; ++k) r[k] += f * (*e)[k];
        }
    }
    return r;
}

LocalAlgebra LocalAlgebra::validate(int dim, const Table& table,
                                    std::vector<std::string> basis_names) {
    std::vector<std::string> bad;
    if (dim <= 0) throw ValidationError("MalformedTable", {"dimension must be positive"});
    Table tab;
    for (const auto& [key, prod] : table) {
        auto [i, j] = key;
        if (i < 1 || j < 1 || i >= dim || j >= dim) {
            bad.push_back("MalformedTable: index pair (" + std::to_string(i) + "," +
                          std::to_string(j) + ") out of range");
            continue;
        }
        if (static_cast<int>(prod.size()) != dim) {
            bad.push_back("MalformedTable: product vector for (" + std::to_string(i) + "," +
                          std::to_string(j) + ") has wrong length");
            continue;
        }
        std::pair<int, int> k{std::min(i, j), std::max(i, j)};
        auto it = tab.find(k);
        if (it != tab.end() && it->second != prod)
            bad.push_back("MalformedTable: conflicting entries for unordered pair (" +
                          std::to_string(k.first) + "," + std::to_string(k.second) + ")");
        else if (!is_zero_vec(prod))
            tab[k] = prod;
    }
    if (!bad.empty()) throw ValidationError("MalformedTable", bad);

    if (basis_names.empty()) {
        basis_names.push_back("1");
        for (int i = 1; i < dim; ++i) basis_names.push_back("e" + std::to_string(i));
    }
    LocalAlgebra A(dim, std::move(tab), std::move(basis_names));

    for (const auto& [key, prod] : A.table_) {
        if (!prod[0].is_zero())
            bad.push_back("NotClosedInMaxIdeal: e" + std::to_string(key.first) + "*e" +
                          std::to_string(key.second) + " has a nonzero unit component");
    }

    // Commutativity holds by the unordered keying; check associativity on
    // all triples of maximal-ideal basis vectors.
    for (int i = 1; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            Vec eij = A.mul(unit_vec(dim, i), unit_vec(dim, j));
            for (int k = 1; k < dim; ++k) {
                Vec lhs = A.mul(eij, unit_vec(dim, k));
                Vec rhs = A.mul(unit_vec(dim, i), A.mul(unit_vec(dim, j), unit_vec(dim, k)));
                if (lhs != rhs)
                    bad.push_back("NotAssociative: witness triple (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    }

    if (bad.empty()) {
        // m^dim = 0 is equivalent to m nil in the commutative
        // finite-dimensional case.
        if (!A.ideal_power(dim).is_zero())
            bad.push_back("NotNilpotent: m^" + std::to_string(dim) + " is nonzero");
        else {
            Subspace soc = A.socle();
            for (const auto& row : soc.basis())
                if (!row[0].is_zero())
                    bad.push_back("SocleOutsideMaxIdeal: socle vector with unit component");
        }
    }

    if (!bad.empty()) throw ValidationError("InvalidAlgebra", bad);
    return A;
}

Subspace LocalAlgebra::max_ideal() const {
    Mat rows;
    for (int i = 1; i < dim_; ++i) rows.push_back(unit_vec(dim_, i));
    return Subspace(dim_, rows);
}

Subspace LocalAlgebra::ideal_power(int k) const {
    if (k < 1) throw Error("BadArgument", "ideal power requires k >= 1");
    Subspace v = max_ideal();
    for (int step = 1; step < k; ++step) {
        Mat rows;
        for (const auto& b : v.basis())
            for (int i = 1; i < dim_; ++i) rows.push_back(mul(b, unit_vec(dim_, i)));
        v = Subspace(dim_, rows);
        if (v.is_zero()) break;
    }
    return v;
}

Subspace LocalAlgebra::socle() const {
    // Kernel of a -> (a*e1, ..., a*e_{dim-1}).
    Mat system;
    for (int i = 1; i < dim_; ++i) {
        for (int row = 0; row < dim_; ++row) {
            Vec r = zero_vec(dim_);
            for (int j = 0; j < dim_; ++j) r[j] = mul(unit_vec(dim_, j), unit_vec(dim_, i))[row];
            system.push_back(std::move(r));
        }
    }
    return Subspace(dim_, kernel(system, dim_));
}

Element LocalAlgebra::exp(const Element& m) const {
    if (!m.in_max_ideal()) throw Error("NotInMaximalIdeal", "exp requires an element of m");
    Vec acc = unit_vec(dim_, 0);
    Vec pow = unit_vec(dim_, 0);
    Scalar fact(1);
    for (int i = 1; i < dim_; ++i) {
        pow = mul(pow, m.coords());
        if (is_zero_vec(pow)) break;
        fact *= Scalar(i);
        acc = add(acc, scale(pow, fact.inverse()));
    }
    return element(acc);
}

Element LocalAlgebra::log(const Element& u) const {
    if (!u[0].is_one()) throw Error("NotUnipotent", "log requires an element of 1 + m");
    Vec m = u.coords();
    m[0] = Scalar(0);
    Vec acc = zero_vec(dim_);
    Vec pow = unit_vec(dim_, 0);
    for (int i = 1; i < dim_; ++i) {
        pow = mul(pow, m);
        if (is_zero_vec(pow)) break;
        Scalar coef = Scalar((i % 2) ? 1 : -1) / Scalar(i);
        acc = add(acc, scale(pow, coef));
    }
    return element(acc);
}

int LocalAlgebra::nilpotency_exponent(const Element& m) const {
    if (m.is_zero()) throw Error("ZeroElement", "nilpotency exponent of zero");
    if (!m.in_max_ideal()) throw Error("NotInMaximalIdeal", "element is invertible");
    int k = 1;
    Vec pow = m.coords();
    for (;;) {
        Vec next = mul(pow, m.coords());
        if (is_zero_vec(next)) return k;
        pow = std::move(next);
        ++k;
        if (k > dim_) throw Error("NotNilpotent", "power sequence did not vanish");
    }
}

Element LocalAlgebra::power(const Element& m, int k) const {
    Vec pow = unit_vec(dim_, 0);
    for (int i = 0; i < k; ++i) pow = mul(pow, m.coords());
    return element(pow);
}

bool LocalAlgebra::is_ideal(const Subspace& w) const {
    if (w.ambient_dim() != dim_) throw Error("DimensionMismatch", "subspace of wrong ambient");
    for (const auto& b : w.basis()) {
        if (!b[0].is_zero()) return false;  // must sit inside m
        for (int i = 1; i < dim_; ++i)
            if (!w.contains(mul(b, unit_vec(dim_, i)))) return false;
    }
    return true;
}

Quotient LocalAlgebra::quotient(const Subspace& w) const {
    if (!is_ideal(w)) throw Error("NotAnIdeal", "quotient requires an ideal inside m");
    const Mat& wb = w.basis();
    std::vector<bool> is_pivot(dim_, false);
    for (const auto& row : wb)
        for (int c = 0; c < dim_; ++c)
            if (!row[c].is_zero()) {
                is_pivot[c] = true;
                break;
            }
    std::vector<int> keep;  // coordinates completing W; always includes e0
    for (int c = 0; c < dim_; ++c)
        if (!is_pivot[c]) keep.push_back(c);
    const int qdim = static_cast<int>(keep.size());

    // projection: reduce modulo W, then read the kept coordinates.
    auto project_vec = [&](Vec v) {
        for (const auto& row : wb) {
            int p = -1;
            for (int c = 0; c < dim_; ++c)
                if (!row[c].is_zero()) {
                    p = c;
                    break;
                }
            if (p >= 0 && !v[p].is_zero()) {
                Scalar f = v[p];
                for (int c = 0; c < dim_; ++c) v[c] -= f * row[c];
            }
        }
        Vec out = zero_vec(qdim);
        for (int c = 0; c < qdim; ++c) out[c] = v[keep[c]];
        return out;
    };

    Mat proj;
    for (int c = 0; c < dim_; ++c) {
        Vec img = project_vec(unit_vec(dim_, c));
        for (int r = 0; r < qdim; ++r) {
            if (c == 0) proj.push_back(zero_vec(dim_));
            proj[r][c] = img[r];
        }
    }

    Table qtab;
    for (int i = 1; i < qdim; ++i) {
        for (int j = i; j < qdim; ++j) {
            Vec prod = project_vec(mul(unit_vec(dim_, keep[i]), unit_vec(dim_, keep[j])));
            if (!is_zero_vec(prod)) qtab[{i, j}] = prod;
        }
    }
    std::vector<std::string> names;
    for (int c : keep) names.push_back(names_[static_cast<size_t>(c)]);
    return Quotient{LocalAlgebra::validate(qdim, qtab, names), proj};
}

Vec LocalAlgebra::project(const Mat& projection, const Vec& v) const {
    Vec out = zero_vec(static_cast<int>(projection.size()));
    for (size_t r = 0; r < projection.size(); ++r)
        for (int c = 0; c < dim_; ++c) out[r] += projection[r][c] * v[c];
    return out;
}

Subspace LocalAlgebra::project_subspace(const Mat& projection, const Subspace& s) const {
    Mat rows;
    for (const auto& b : s.basis()) rows.push_back(project(projection, b));
    return Subspace(static_cast<int>(projection.size()), rows);
}

Subspace LocalAlgebra::subalgebra_generated(const Subspace& s) const {
    if (!max_ideal().contains(s)) throw Error("NotInMaximalIdeal", "generators must lie in m");
    Mat rows;
    rows.push_back(unit_vec(dim_, 0));
    rows.insert(rows.end(), s.basis().begin(), s.basis().end());
    Subspace v(dim_, rows);
    for (;;) {
        Mat next = v.basis();
        for (const auto& a : v.basis())
            for (const auto& g : s.basis()) next.push_back(mul(a, g));
        Subspace grown(dim_, next);
        if (grown == v) return v;
        v = grown;
    }
}

}  // namespace addact
