#include "addact/limits.hpp"

#include <algorithm>

#include "addact/error.hpp"

namespace addact {

Vec TCurve::eval(const Scalar& t) const {
    Vec out;
    for (const auto& c : coords) out.push_back(c.eval(t));
    return out;
}

Vec TCurve::at_zero() const { return eval(Scalar(0)); }

Vec TCurve::leading_coeffs() const {
    int top = -1;
    for (const auto& c : coords) top = std::max(top, c.degree());
    if (top < 0) throw Error("ZeroElement", "zero curve");
    Vec out;
    for (const auto& c : coords) out.push_back(c.coeff(top));
    return out;
}

TCurve curve_of(const HPair& p, const Element& v, const Element& a) {
    if (a.is_zero()) throw Error("ZeroElement", "curve through the zero vector");
    const Subspace& allowed =
        p.mode() == PairMode::ProjectiveSpace ? p.algebra().max_ideal() : p.u();
    if (!allowed.contains(v.coords())) throw Error("NotInSubspace", "direction outside U");
    const LocalAlgebra& A = p.algebra();
    const int dim = A.dim();
    // exp(tv)a = sum_k t^k (v^k a) / k!
    std::vector<Vec> coeffs;  // coeffs[k] = coordinates of t^k coefficient
    Vec term = a.coords();
    coeffs.push_back(term);
    Scalar fact(1);
    Vec pow = unit_vec(dim, 0);
    for (int k = 1; k < dim; ++k) {
        pow = A.mul(pow, v.coords());
        if (is_zero_vec(pow)) break;
        fact *= Scalar(k);
        Vec c = A.mul(pow, a.coords());
        coeffs.push_back(scale(c, fact.inverse()));
    }
    TCurve out;
    for (int i = 0; i < dim; ++i) {
        Vec poly;
        for (const auto& c : coeffs) poly.push_back(c[static_cast<size_t>(i)]);
        out.coords.push_back(UniPoly(std::move(poly)));
    }
    return out;
}

ProjectivePoint projective_limit(const TCurve& c) { return ProjectivePoint(c.leading_coeffs()); }

ProjectivePoint one_param_limit(const HPair& p, const Element& v) {
    if (v.is_zero()) throw Error("ZeroElement", "limit of the zero direction");
    int k = p.algebra().nilpotency_exponent(v);
    ProjectivePoint lim(p.algebra().power(v, k).coords());
    ProjectivePoint via_curve = projective_limit(curve_of(p, v, p.algebra().one()));
    if (!(lim == via_curve))
        throw Error("InternalError", "leading-term limit disagrees with curve expansion");
    return lim;
}

std::vector<ProjectivePoint> limit_probe(const HPair& p, const Element& v,
                                         const std::vector<long>& t_values) {
    if (v.is_zero()) throw Error("ZeroElement", "probe of the zero direction");
    TCurve c = curve_of(p, v, p.algebra().one());
    std::vector<ProjectivePoint> out;
    for (long t : t_values) out.emplace_back(c.eval(Scalar(t)));
    return out;
}

// ---------------------------------------------------------------------------
// exact square roots in Q and Q(i)

namespace {

std::optional<mpz_class> mpz_sqrt_exact(const mpz_class& n) {
    if (n < 0) return std::nullopt;
    mpz_class r = sqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    auto num = mpz_sqrt_exact(q.get_num());
    auto den = mpz_sqrt_exact(q.get_den());
    if (!num || !den) return std::nullopt;
    return mpq_class(*num, *den);
}

}  // namespace

std::optional<Scalar> gaussian_sqrt(const Scalar& w) {
    // (x+yi)^2 = u+vi: x^2 - y^2 = u, 2xy = v, and x^2 + y^2 = sqrt(u^2+v^2).
    if (w.is_zero()) return Scalar(0);
    const mpq_class &u = w.re(), &v = w.im();
    auto n = rational_sqrt(u * u + v * v);
    if (!n) return std::nullopt;
    mpq_class x2 = (u + *n) / 2;
    auto x = rational_sqrt(x2);
    if (x && *x != 0) {
        mpq_class y = v / (2 * *x);
        Scalar r(*x, y);
        if (r * r == w) return r;
        return std::nullopt;
    }
    // u + n == 0: w is a nonpositive real, root purely imaginary.
    auto y = rational_sqrt(-u);
    if (!y) return std::nullopt;
    Scalar r(mpq_class(0), *y);
    if (r * r == w) return r;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// stratified symbolic limits

namespace {

// c * (linear form)^e recognition for a homogeneous polynomial; returns the
// linear form. Monomials in a single variable are the simplest case.
std::optional<MultiPoly> as_linear_power(const MultiPoly& p) {
    const int e = p.total_degree();
    if (e < 1) return std::nullopt;
    if (e == 1) return p;
    const auto& vars = p.variables();
    const auto& lead_exp = p.terms().begin()->first;
    // Leading monomial of c*l^e is s_j0^e for the leading variable of l.
    size_t j0 = 0;
    while (j0 < lead_exp.size() && lead_exp[j0] == 0) ++j0;
    if (j0 == lead_exp.size() || lead_exp[j0] != e) return std::nullopt;
    Scalar c = p.leading_coeff();
    MultiPoly ell = MultiPoly::variable(vars, vars[j0]);
    for (size_t j = j0 + 1; j < vars.size(); ++j) {
        std::vector<int> exp(vars.size(), 0);
        exp[j0] = e - 1;
        exp[j] = 1;
        Scalar a = p.coeff(exp) / (c * Scalar(e));
        if (!a.is_zero()) ell = ell + MultiPoly::variable(vars, vars[j]).scaled(a);
    }
    if (ell.pow(e).scaled(c) == p) return ell;
    return std::nullopt;
}

// Product of variables with positive exponent, when p is a single monomial.
std::optional<std::vector<MultiPoly>> as_monomial_factors(const MultiPoly& p) {
    if (p.terms().size() != 1) return std::nullopt;
    const auto& exps = p.terms().begin()->first;
    std::vector<MultiPoly> out;
    for (size_t j = 0; j < exps.size(); ++j)
        if (exps[j] > 0) out.push_back(MultiPoly::variable(p.variables(), p.variables()[j]));
    if (out.empty()) return std::nullopt;
    return out;
}

// Binary quadratic a*x^2 + b*x*y + c*y^2 into two linear forms over Q(i).
std::optional<std::vector<MultiPoly>> as_binary_quadratic_factors(const MultiPoly& p) {
    if (p.total_degree() != 2) return std::nullopt;
    std::vector<size_t> used;
    for (const auto& [e, c] : p.terms())
        for (size_t j = 0; j < e.size(); ++j)
            if (e[j] > 0 && std::find(used.begin(), used.end(), j) == used.end())
                used.push_back(j);
    if (used.size() != 2) return std::nullopt;
    std::sort(used.begin(), used.end());
    const auto& vars = p.variables();
    auto mono = [&](int ex, int ey) {
        std::vector<int> e(vars.size(), 0);
        e[used[0]] = ex;
        e[used[1]] = ey;
        return e;
    };
    Scalar a = p.coeff(mono(2, 0)), b = p.coeff(mono(1, 1)), c = p.coeff(mono(0, 2));
    MultiPoly x = MultiPoly::variable(vars, vars[used[0]]);
    MultiPoly y = MultiPoly::variable(vars, vars[used[1]]);
    if (a.is_zero()) {
        // y * (b*x + c*y)
        std::vector<MultiPoly> out{y, x.scaled(b) + y.scaled(c)};
        if (out[0] * out[1] == p) return out;
        return std::nullopt;
    }
    auto root = gaussian_sqrt(b * b - Scalar(4) * a * c);
    if (!root) return std::nullopt;
    Scalar r1 = (-b + *root) / (Scalar(2) * a);
    Scalar r2 = (-b - *root) / (Scalar(2) * a);
    std::vector<MultiPoly> out{(x - y.scaled(r1)).scaled(a), x - y.scaled(r2)};
    if (out[0] * out[1] == p) return out;
    return std::nullopt;
}

std::optional<std::vector<MultiPoly>> linear_factors(const MultiPoly& p, bool quadratics) {
    if (auto l = as_linear_power(p)) return std::vector<MultiPoly>{*l};
    if (auto m = as_monomial_factors(p)) return m;
    if (quadratics)
        if (auto q = as_binary_quadratic_factors(p)) return q;
    return std::nullopt;
}

// Divide out the shared polynomial shape: when every coordinate is a scalar
// multiple of one nonzero coordinate the point is constant in the stratum.
void normalize_stratum_limit(LimitStratum& node) {
    const MultiPoly* base = nullptr;
    for (const auto& c : node.limit_coords)
        if (!c.is_zero()) {
            base = &c;
            break;
        }
    if (!base) throw Error("InternalError", "stratum limit vanished identically");
    Vec constant;
    for (const auto& c : node.limit_coords) {
        Scalar f;
        if (!c.scalar_multiple_of(*base, &f)) return;  // genuinely parameter-dependent
        constant.push_back(f);
    }
    node.constant_limit = ProjectivePoint(constant);
    std::vector<MultiPoly> canon;
    const auto& vars = base->variables();
    for (const auto& f : node.constant_limit->coords())
        canon.push_back(MultiPoly::constant(vars, f));
    node.limit_coords = std::move(canon);
}

void build_stratum(const LocalAlgebra& A, LimitStratum& node, bool quadratics, int depth) {
    if (depth > A.dim() + 1) throw Error("InternalError", "stratification failed to terminate");
    const int m = static_cast<int>(node.dirs.size());
    node.params = s_vars(m);
    PolyElement v = poly_element_zero(A, node.params);
    for (int i = 0; i < m; ++i) {
        MultiPoly s = MultiPoly::variable(node.params, node.params[static_cast<size_t>(i)]);
        for (int k = 0; k < A.dim(); ++k)
            if (!node.dirs[static_cast<size_t>(i)][k].is_zero())
                v[static_cast<size_t>(k)] =
                    v[static_cast<size_t>(k)] + s.scaled(node.dirs[static_cast<size_t>(i)][k]);
    }
    PolyElement pw = v;
    int k = 1;
    for (;;) {
        PolyElement next = poly_element_mul(A, pw, v);
        if (poly_element_is_zero(next)) break;
        pw = std::move(next);
        ++k;
    }
    node.power = k;
    node.limit_coords = pw;
    normalize_stratum_limit(node);

    // Sub-strata: simultaneous vanishing of all nonzero coordinates of v^k
    // (the pre-normalization coordinates; normalization may hide the locus).
    std::vector<std::vector<MultiPoly>> factored;
    for (const auto& c : pw) {
        if (c.is_zero()) continue;
        auto f = linear_factors(c, quadratics);
        if (!f) {
            LimitStratum leaf;
            leaf.unresolved = true;
            leaf.unresolved_condition = c.str();
            leaf.conditions.push_back(c.str() + " = 0");
            node.children.push_back(std::move(leaf));
            return;
        }
        factored.push_back(std::move(*f));
    }
    if (factored.empty()) return;  // limit never degenerates further

    // One linear form per condition; each combination cuts a linear
    // subspace of the parameter space.
    std::vector<size_t> choice(factored.size(), 0);
    std::vector<Subspace> seen;
    for (;;) {
        Mat rows;  // linear forms as covectors on the parameter space
        std::vector<std::string> conds;
        for (size_t i = 0; i < factored.size(); ++i) {
            const MultiPoly& ell = factored[i][choice[i]];
            Vec row = zero_vec(m);
            for (const auto& [e, c] : ell.terms())
                for (int j = 0; j < m; ++j)
                    if (e[static_cast<size_t>(j)] == 1) row[static_cast<size_t>(j)] = c;
            rows.push_back(std::move(row));
            conds.push_back(ell.str() + " = 0");
        }
        Mat ker = kernel(rows, m);
        if (!ker.empty()) {
            Subspace sol(m, ker);
            bool dup = false;
            for (const auto& s : seen) dup = dup || s == sol;
            if (!dup) {
                seen.push_back(sol);
                LimitStratum child;
                child.conditions = conds;
                for (const auto& coeffs : sol.basis()) {
                    Vec dir = zero_vec(A.dim());
                    for (int i = 0; i < m; ++i)
                        dir = add(dir, scale(node.dirs[static_cast<size_t>(i)].coords(),
                                             coeffs[static_cast<size_t>(i)]));
                    child.dirs.push_back(A.element(dir));
                }
                build_stratum(A, child, quadratics, depth + 1);
                node.children.push_back(std::move(child));
            }
        }
        // next combination
        size_t i = 0;
        while (i < choice.size() && ++choice[i] == factored[i].size()) choice[i++] = 0;
        if (i == choice.size()) break;
    }
}

void collect(const LimitStratum& s, std::vector<const LimitStratum*>& out) {
    out.push_back(&s);
    for (const auto& c : s.children) collect(c, out);
}

bool resolved(const LimitStratum& s) {
    if (s.unresolved) return false;
    for (const auto& c : s.children)
        if (!resolved(c)) return false;
    return true;
}

}  // namespace

bool StratificationTree::fully_resolved() const { return resolved(root); }

std::vector<const LimitStratum*> StratificationTree::all_strata() const {
    std::vector<const LimitStratum*> out;
    collect(root, out);
    return out;
}

StratificationTree generic_limit(const HPair& p, const GenericLimitOptions& opts) {
    StratificationTree tree;
    tree.root.dirs = p.u_basis();
    build_stratum(p.algebra(), tree.root, opts.quadratic_factoring, 0);
    return tree;
}

}  // namespace addact
