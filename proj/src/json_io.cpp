#include "cwp/json_io.hpp"

namespace cwp {

json poly_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"exp", e}, {"coef", c.get_str()}});
    }
    return {{"arity", p.arity()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const json& j) {
    LaurentPoly p(j.at("arity").get<int>());
    for (const auto& t : j.at("terms")) {
        LaurentPoly::Exponents e = t.at("exp").get<std::vector<int>>();
        if (static_cast<int>(e.size()) != p.arity())
            throw std::invalid_argument("exponent length mismatch");
        p.add_term(std::move(e), Int(t.at("coef").get<std::string>()));
    }
    return p;
}

json rf_to_json(const RationalFunction& f) {
    return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RationalFunction rf_from_json(const json& j) {
    return RationalFunction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json exchange_to_json(const ExchangeMatrix& Z) {
    json rows = json::array();
    for (const auto& row : Z.entries()) {
        json r = json::array();
        for (const Int& v : row) r.push_back(v.get_si());
        rows.push_back(std::move(r));
    }
    return rows;
}

ExchangeMatrix exchange_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    std::vector<std::vector<Int>> m;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
        std::vector<Int> r;
        for (const auto& v : row) r.emplace_back(v.get<long>());
        m.push_back(std::move(r));
    }
    return ExchangeMatrix(std::move(m));
}

json seed_to_json(const Seed& s) {
    json vars = json::array();
    for (const auto& f : s.variables) vars.push_back(rf_to_json(f));
    return {{"n", s.matrix.n()},
            {"Z", exchange_to_json(s.matrix)},
            {"variables", std::move(vars)},
            {"history", s.history}};
}

Seed seed_from_json(const json& j) {
    ExchangeMatrix Z = exchange_from_json(j.at("Z"));
    if (j.contains("n") && j.at("n").get<int>() != Z.n())
        throw std::invalid_argument("n does not match Z");
    Seed s = initial_seed(Z);
    if (j.contains("variables") && !j.at("variables").empty()) {
        std::vector<RationalFunction> vars;
        for (const auto& v : j.at("variables")) vars.push_back(rf_from_json(v));
        if (static_cast<int>(vars.size()) != Z.n())
            throw std::invalid_argument("variable count");
        s.variables = std::move(vars);
    }
    if (j.contains("history")) s.history = j.at("history").get<std::vector<int>>();
    return s;
}

json qmat_to_json(const QMat& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const Rat& v : row) r.push_back(rat_to_string(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

QMat qmat_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    QMat m;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
        QVec r;
        for (const auto& v : row) r.push_back(parse_rat(v.get<std::string>()));
        m.push_back(std::move(r));
    }
    return m;
}

json triangulation_to_json(const IdealTriangulation& t) {
    json tris = json::array();
    for (const auto& tri : t.side_triples()) tris.push_back({tri[0], tri[1], tri[2]});
    json pairing = json::array();
    for (int e = 0; e < t.num_edges(); ++e) {
        auto [a, b] = t.edge_sides(e);
        pairing.push_back({a, b});
    }
    return {{"triangles", std::move(tris)},
            {"pairing", std::move(pairing)},
            {"edge_names", t.edge_names()}};
}

IdealTriangulation triangulation_from_json(const json& j) {
    std::vector<std::array<int, 3>> tris;
    for (const auto& t : j.at("triangles")) {
        if (t.size() != 3) throw std::invalid_argument("triangle needs 3 sides");
        tris.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    std::vector<std::pair<int, int>> pairing;
    for (const auto& p : j.at("pairing")) {
        if (p.size() != 2) throw std::invalid_argument("pairing entry needs 2 sides");
        pairing.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    std::vector<std::string> names;
    if (j.contains("edge_names")) names = j.at("edge_names").get<std::vector<std::string>>();
    return IdealTriangulation(std::move(tris), std::move(pairing), std::move(names));
}

json report_json(const std::string& check, const std::string& surface,
                 const std::vector<int>& word, bool pass, json witness) {
    return {{"check", check},
            {"surface", surface},
            {"word", word},
            {"pass", pass},
            {"witness", std::move(witness)}};
}

}  // namespace cwp
