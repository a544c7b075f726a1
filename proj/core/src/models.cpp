#include "addact/models.hpp"

#include <cctype>

#include "addact/error.hpp"

namespace addact {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error("BadModelParameter", what);
}

std::vector<std::string> chain_names(int n) {
    std::vector<std::string> names{"1", "x"};
    for (int k = 2; k < n; ++k) names.push_back("x^" + std::to_string(k));
    return names;
}

Subspace span_of_units(int dim, const std::vector<int>& idx) {
    Mat rows;
    for (int k : idx) rows.push_back(unit_vec(dim, k));
    return Subspace(dim, rows);
}

}  // namespace

LocalAlgebra chain_algebra(int n) {
    require(n >= 2, "chain(n) needs n >= 2");
    LocalAlgebra::Table table;
    for (int i = 1; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (i + j < n) table[{i, j}] = unit_vec(n, i + j);
        }
    }
    return LocalAlgebra::validate(n, table, chain_names(n));
}

HPair pn_square_zero(int n) {
    require(n >= 1, "pn_square_zero(n) needs n >= 1");
    std::vector<std::string> names{"1"};
    for (int k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
    LocalAlgebra a = LocalAlgebra::validate(n + 1, {}, std::move(names));
    Subspace u = a.max_ideal();
    return HPair::validate(std::move(a), std::move(u), PairMode::ProjectiveSpace);
}

HPair quadric_pair(int n) {
    require(n >= 1, "quadric_pair(n) needs n >= 1");
    int dim = n + 2;
    LocalAlgebra::Table table;
    for (int i = 1; i <= n; ++i) table[{i, i}] = unit_vec(dim, n + 1);
    std::vector<std::string> names{"1"};
    for (int k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
    names.push_back("q");
    LocalAlgebra a = LocalAlgebra::validate(dim, table, std::move(names));
    std::vector<int> idx;
    for (int k = 1; k <= n; ++k) idx.push_back(k);
    Subspace u = span_of_units(dim, idx);
    return HPair::validate(std::move(a), std::move(u));
}

HPair cubic_pair() {
    LocalAlgebra a = chain_algebra(4);
    Subspace u = span_of_units(4, {1, 2});
    return HPair::validate(std::move(a), std::move(u));
}

HPair counterexample_pair() {
    LocalAlgebra a = chain_algebra(4);
    Subspace u = span_of_units(4, {1, 3});
    return HPair::validate(std::move(a), std::move(u));
}

HPair socle_extension(const HPair& base, int r) {
    require(r >= 1, "socle_extension(base, r) needs r >= 1");
    int old_dim = base.dim();
    int dim = old_dim + r;
    LocalAlgebra::Table table;
    for (const auto& [key, prod] : base.algebra().table()) {
        Vec padded = prod;
        padded.resize(static_cast<size_t>(dim), Scalar(0));
        table[key] = std::move(padded);
    }
    std::vector<std::string> names = base.algebra().basis_names();
    for (int k = 1; k <= r; ++k) names.push_back("y" + std::to_string(k));
    LocalAlgebra a = LocalAlgebra::validate(dim, table, std::move(names));
    Mat rows;
    for (const Vec& row : base.u().basis()) {
        Vec padded = row;
        padded.resize(static_cast<size_t>(dim), Scalar(0));
        rows.push_back(std::move(padded));
    }
    for (int k = 0; k < r; ++k) rows.push_back(unit_vec(dim, old_dim + k));
    return HPair::validate(std::move(a), Subspace(dim, rows), base.mode());
}

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

std::string parse_name(Cursor& cur) {
    cur.skip_space();
    size_t start = cur.pos;
    while (cur.pos < cur.text.size() &&
           (std::isalnum(static_cast<unsigned char>(cur.text[cur.pos])) ||
            cur.text[cur.pos] == '_')) {
        ++cur.pos;
    }
    if (cur.pos == start) throw Error("BadModelId", "expected a model name in '" + cur.text + "'");
    return cur.text.substr(start, cur.pos - start);
}

int parse_int(Cursor& cur) {
    cur.skip_space();
    size_t start = cur.pos;
    while (cur.pos < cur.text.size() &&
           std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
        ++cur.pos;
    }
    if (cur.pos == start) throw Error("BadModelId", "expected an integer in '" + cur.text + "'");
    return std::stoi(cur.text.substr(start, cur.pos - start));
}

ModelId parse_id(Cursor& cur) {
    ModelId id;
    id.name = parse_name(cur);
    if (id.name == "socle_extension") {
        if (!cur.eat('(')) throw Error("BadModelId", "socle_extension needs (base, r)");
        id.base = std::make_shared<ModelId>(parse_id(cur));
        if (!cur.eat(',')) throw Error("BadModelId", "socle_extension needs (base, r)");
        id.params.push_back(parse_int(cur));
        if (!cur.eat(')')) throw Error("BadModelId", "unbalanced parentheses");
        return id;
    }
    if (cur.eat('(')) {
        id.params.push_back(parse_int(cur));
        while (cur.eat(',')) id.params.push_back(parse_int(cur));
        if (!cur.eat(')')) throw Error("BadModelId", "unbalanced parentheses");
    }
    size_t arity;
    if (id.name == "chain" || id.name == "pn_square_zero" || id.name == "quadric_pair")
        arity = 1;
    else if (id.name == "cubic_pair" || id.name == "counterexample_pair")
        arity = 0;
    else
        throw Error("BadModelId", "unknown model '" + id.name + "'");
    if (id.params.size() != arity)
        throw Error("BadModelId", id.name + " takes " + std::to_string(arity) +
                                      " parameter(s)");
    return id;
}

ModelId make_id(const std::string& name, std::vector<int> params = {},
                std::shared_ptr<ModelId> base = nullptr) {
    ModelId id;
    id.name = name;
    id.params = std::move(params);
    id.base = std::move(base);
    return id;
}

}  // namespace

ModelId ModelId::parse(const std::string& text) {
    Cursor cur{text};
    ModelId id = parse_id(cur);
    cur.skip_space();
    if (cur.pos != text.size()) {
        throw Error("BadModelId", "trailing characters in '" + text + "'");
    }
    return id;
}

std::string ModelId::str() const {
    std::string out = name;
    if (base) {
        out += "(" + base->str();
        for (int p : params) out += "," + std::to_string(p);
        out += ")";
        return out;
    }
    if (!params.empty()) {
        out += "(";
        for (size_t k = 0; k < params.size(); ++k) {
            if (k) out += ",";
            out += std::to_string(params[k]);
        }
        out += ")";
    }
    return out;
}

BuiltModel build(const ModelId& id) {
    auto one_param = [&](const char* what) {
        require(id.params.size() == 1, std::string(what) + " takes one parameter");
        return id.params[0];
    };
    BuiltModel out;
    if (id.name == "chain") {
        out.algebra = chain_algebra(one_param("chain"));
    } else if (id.name == "pn_square_zero") {
        out.pair = pn_square_zero(one_param("pn_square_zero"));
    } else if (id.name == "quadric_pair") {
        out.pair = quadric_pair(one_param("quadric_pair"));
    } else if (id.name == "cubic_pair") {
        require(id.params.empty(), "cubic_pair takes no parameters");
        out.pair = cubic_pair();
    } else if (id.name == "counterexample_pair") {
        require(id.params.empty(), "counterexample_pair takes no parameters");
        out.pair = counterexample_pair();
    } else if (id.name == "socle_extension") {
        require(id.base != nullptr && id.params.size() == 1,
                "socle_extension takes (base, r)");
        BuiltModel inner = build(*id.base);
        require(inner.pair.has_value(), "socle_extension base must be a pair");
        out.pair = socle_extension(*inner.pair, id.params[0]);
    } else {
        throw Error("BadModelId", "unknown model '" + id.name + "'");
    }
    return out;
}

std::vector<std::string> family_list() {
    return {
        "pn_square_zero(n), n >= 1: projective space P^n with the square-zero algebra",
        "chain(n), n >= 2: the algebra C[x]/(x^n) (no pair)",
        "quadric_pair(n), n >= 1: nondegenerate quadric of dimension n",
        "cubic_pair: C[x]/(x^4) with U = span(x, x^2)",
        "counterexample_pair: C[x]/(x^4) with U = span(x, x^3)",
        "socle_extension(base, r), r >= 1: base pair with r annihilator directions added",
    };
}

std::vector<CatalogEntry> catalog() {
    std::vector<CatalogEntry> out;
    auto add = [&](ModelId id, int degree, std::string eq, Outcome o, Certificate::Kind k) {
        out.push_back(CatalogEntry{std::move(id), degree, std::move(eq), o, k});
    };
    add(make_id("pn_square_zero", {1}), -1, "", Outcome::Yes, Certificate::Kind::PnSquareZero);
    add(make_id("pn_square_zero", {2}), -1, "", Outcome::Yes, Certificate::Kind::PnSquareZero);
    add(make_id("pn_square_zero", {3}), -1, "", Outcome::Yes, Certificate::Kind::PnSquareZero);
    add(make_id("quadric_pair", {1}), 2, "2*z0*z2 - z1^2", Outcome::Yes,
        Certificate::Kind::CoreClassification);
    add(make_id("quadric_pair", {2}), 2, "2*z0*z3 - z1^2 - z2^2", Outcome::Yes,
        Certificate::Kind::CoreClassification);
    add(make_id("quadric_pair", {3}), 2, "2*z0*z4 - z1^2 - z2^2 - z3^2", Outcome::Yes,
        Certificate::Kind::CoreClassification);
    add(make_id("quadric_pair", {4}), 2, "2*z0*z5 - z1^2 - z2^2 - z3^2 - z4^2", Outcome::Yes,
        Certificate::Kind::CoreClassification);
    add(make_id("cubic_pair"), 3, "3*z0^2*z3 - 3*z0*z1*z2 + z1^3", Outcome::Yes,
        Certificate::Kind::CoreClassification);
    add(make_id("counterexample_pair"), 2, "2*z0*z2 - z1^2", Outcome::No,
        Certificate::Kind::UnreachableOrbit);
    add(make_id("socle_extension", {1}, std::make_shared<ModelId>(make_id("quadric_pair", {2}))),
        2, "2*z0*z3 - z1^2 - z2^2", Outcome::Yes, Certificate::Kind::SocleExtension);
    add(make_id("socle_extension", {1}, std::make_shared<ModelId>(make_id("cubic_pair"))),
        3, "3*z0^2*z3 - 3*z0*z1*z2 + z1^3", Outcome::Yes, Certificate::Kind::SocleExtension);
    add(make_id("socle_extension", {2}, std::make_shared<ModelId>(make_id("cubic_pair"))),
        3, "3*z0^2*z3 - 3*z0*z1*z2 + z1^3", Outcome::Yes, Certificate::Kind::SocleExtension);
    return out;
}

}  // namespace addact
