#include "addact/geometry.hpp"

#include "addact/error.hpp"

namespace addact {

std::vector<std::string> z_vars(int dim) {
    std::vector<std::string> v;
    for (int i = 0; i < dim; ++i) v.push_back("z" + std::to_string(i));
    return v;
}

std::vector<std::string> s_vars(int count) {
    std::vector<std::string> v;
    for (int i = 1; i <= count; ++i) v.push_back("s" + std::to_string(i));
    return v;
}

std::vector<std::string> zs_vars(int dim, int params) {
    std::vector<std::string> v = z_vars(dim);
    for (const auto& s : s_vars(params)) v.push_back(s);
    return v;
}

PolyElement poly_element_zero(const LocalAlgebra& a, const std::vector<std::string>& vars) {
    return PolyElement(static_cast<size_t>(a.dim()), MultiPoly(vars));
}

bool poly_element_is_zero(const PolyElement& x) {
    for (const auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

PolyElement poly_element_mul(const LocalAlgebra& a, const PolyElement& x, const PolyElement& y) {
    const int dim = a.dim();
    PolyElement r = poly_element_zero(a, x[0].variables());
    // unit components
    for (int k = 0; k < dim; ++k) r[k] = r[k] + x[0] * y[k];
    for (int k = 1; k < dim; ++k) r[k] = r[k] + y[0] * x[k];
    for (int i = 1; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 1; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Vec prod = a.mul(unit_vec(dim, i), unit_vec(dim, j));
            MultiPoly f = x[i] * y[j];
            for (int k = 0; k < dim; ++k)
                if (!prod[k].is_zero()) r[k] = r[k] + f.scaled(prod[k]);
        }
    }
    return r;
}

PolyElement symbolic_exp(const LocalAlgebra& a, const std::vector<Element>& dirs,
                         const std::vector<std::string>& param_names,
                         const std::vector<std::string>& all_vars) {
    if (dirs.size() != param_names.size())
        throw Error("DimensionMismatch", "one parameter name per direction");
    const int dim = a.dim();
    PolyElement u = poly_element_zero(a, all_vars);
    for (size_t i = 0; i < dirs.size(); ++i) {
        MultiPoly s = MultiPoly::variable(all_vars, param_names[i]);
        for (int k = 0; k < dim; ++k)
            if (!dirs[i][k].is_zero()) u[k] = u[k] + s.scaled(dirs[i][k]);
    }
    PolyElement acc = poly_element_zero(a, all_vars);
    acc[0] = MultiPoly::constant(all_vars, Scalar(1));
    PolyElement pw = acc;
    Scalar fact(1);
    for (int i = 1; i < dim; ++i) {
        pw = poly_element_mul(a, pw, u);
        if (poly_element_is_zero(pw)) break;
        fact *= Scalar(i);
        Scalar inv = fact.inverse();
        for (int k = 0; k < dim; ++k) acc[k] = acc[k] + pw[k].scaled(inv);
    }
    return acc;
}

Vec u_annihilator(const HPair& p) {
    const int n = p.dim() - 1;  // coordinates e1..en of m
    Mat rows;
    for (const auto& b : p.u().basis()) rows.push_back(Vec(b.begin() + 1, b.end()));
    Mat ker = kernel(rows, n);
    if (ker.size() != 1) throw Error("InternalError", "U annihilator is not one-dimensional");
    return ker[0];
}

MultiPoly equation(const HPair& p) {
    if (p.mode() != PairMode::Hypersurface)
        throw Error("WrongMode", "equation is defined for hypersurface pairs");
    const int d = p.degree();
    if (d < 2) throw Error("DegreeOneHyperplane", "pair defines a hyperplane, no equation synthesized");
    const int dim = p.dim();
    const LocalAlgebra& A = p.algebra();
    auto vars = z_vars(dim);
    Vec phi = u_annihilator(p);

    // w = z1*e1 + ... + zn*en with symbolic coordinates.
    PolyElement w = poly_element_zero(A, vars);
    for (int k = 1; k < dim; ++k) w[k] = MultiPoly::variable(vars, vars[static_cast<size_t>(k)]);

    // F = sum_{j=1..d} (-1)^{j+1}/j * z0^{d-j} * phi(w^j); powers beyond d
    // drop into U and are killed by phi.
    MultiPoly z0 = MultiPoly::variable(vars, "z0");
    MultiPoly f(vars);
    PolyElement pw = w;
    for (int j = 1; j <= d; ++j) {
        if (j > 1) pw = poly_element_mul(A, pw, w);
        MultiPoly proj(vars);
        for (int k = 1; k < dim; ++k)
            if (!phi[static_cast<size_t>(k - 1)].is_zero())
                proj = proj + pw[static_cast<size_t>(k)].scaled(phi[static_cast<size_t>(k - 1)]);
        if (proj.is_zero()) continue;
        Scalar coef = Scalar((j % 2) ? 1 : -1) / Scalar(j);
        f = f + (z0.pow(d - j) * proj).scaled(coef);
    }
    if (f.is_zero()) throw Error("InternalError", "synthesized equation vanished");
    return canonicalize(f);
}

bool contains_point(const MultiPoly& f, const ProjectivePoint& pt) {
    if (static_cast<int>(f.variables().size()) != pt.dim())
        throw Error("DimensionMismatch", "equation and point dimensions differ");
    std::map<std::string, Scalar> values;
    for (int i = 0; i < pt.dim(); ++i)
        values[f.variables()[static_cast<size_t>(i)]] = pt.coords()[static_cast<size_t>(i)];
    return f.eval(values).is_zero();
}

bool complement_test(const HPair& p, const Element& m) {
    if (m.is_zero()) throw Error("ZeroElement", "complement test needs a nonzero element");
    if (!m.in_max_ideal()) throw Error("NotInMaximalIdeal", "complement test is about [m], m in m");
    int d = p.degree();
    return p.u().contains(p.algebra().power(m, d).coords());
}

Element act(const HPair& p, const Element& u, const Element& a) {
    if (!p.u().contains(u.coords())) throw Error("NotInSubspace", "action parameter outside U");
    return p.algebra().exp(u) * a;
}

ActionFormula action_formula(const HPair& p) {
    const int dim = p.dim();
    auto dirs = p.u_basis();
    auto params = s_vars(static_cast<int>(dirs.size()));
    auto vars = zs_vars(dim, static_cast<int>(dirs.size()));
    PolyElement e = symbolic_exp(p.algebra(), dirs, params, vars);
    PolyElement z = poly_element_zero(p.algebra(), vars);
    for (int k = 0; k < dim; ++k) z[k] = MultiPoly::variable(vars, "z" + std::to_string(k));
    ActionFormula out;
    out.coordinate_polys = poly_element_mul(p.algebra(), e, z);
    return out;
}

std::vector<std::string> ActionFormula::str() const {
    std::vector<std::string> out;
    for (const auto& c : coordinate_polys) out.push_back(c.str());
    return out;
}

Subspace principal_ideal(const LocalAlgebra& a, const Element& m) {
    Mat rows;
    for (int i = 0; i < a.dim(); ++i) rows.push_back(a.mul(m.coords(), unit_vec(a.dim(), i)));
    return Subspace(a.dim(), rows);
}

bool same_orbit(const HPair& p, const Element& m1, const Element& m2) {
    if (!p.is_nondegenerate())
        throw Error("DegeneratePairUnsupported",
                    "orbit equality via associates requires a non-degenerate pair");
    if (m1.is_zero() || m2.is_zero()) throw Error("ZeroElement", "orbit of the zero element");
    return principal_ideal(p.algebra(), m2).contains(m1.coords()) &&
           principal_ideal(p.algebra(), m1).contains(m2.coords());
}

int orbit_dimension(const HPair& p, const Element& m) {
    if (m.is_zero()) throw Error("ZeroElement", "orbit dimension of the zero point");
    Mat rows;
    rows.push_back(m.coords());
    for (const auto& u : p.u().basis()) rows.push_back(p.algebra().mul(u, m.coords()));
    return static_cast<int>(Subspace(p.dim(), rows).dim()) - 1;
}

Subspace orbit_hull(const HPair& p, const Element& m) {
    Mat rows;
    rows.push_back(m.coords());
    for (int i = 1; i < p.dim(); ++i)
        rows.push_back(p.algebra().mul(m.coords(), unit_vec(p.dim(), i)));
    return Subspace(p.dim(), rows);
}

}  // namespace addact
