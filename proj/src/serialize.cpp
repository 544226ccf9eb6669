#include "leonard/serialize.hpp"

namespace leonard {

namespace {

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    if (arr.empty()) arr.push_back("0");
    return arr;
}

Poly poly_from_json(const json& j) {
    std::vector<Rational> cs;
    for (const auto& e : j) cs.push_back(rational_from_string(e.get<std::string>()));
    return Poly(std::move(cs));
}

}  // namespace

void to_json(json& j, const RationalFunction& f) {
    j = json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

void from_json(const json& j, RationalFunction& f) {
    f = RationalFunction::normalized(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

void to_json(json& j, const QuadExtElement& e) {
    j = json{{"base", e.base()}, {"rad", e.rad()}, {"disc", e.disc()}};
}

void to_json(json& j, const FieldMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        rows.push_back(std::move(row));
    }
    j = json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

void from_json(const json& j, FieldMatrix& m) {
    size_t rows = j.at("rows").get<size_t>(), cols = j.at("cols").get<size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows) throw Error("matrix row count mismatch");
    m = FieldMatrix(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw Error("matrix column count mismatch");
        for (size_t k = 0; k < cols; ++k) m(i, k) = entries[i][k].get<RationalFunction>();
    }
}

void to_json(json& j, const EigenvalueSeq& s) { j = s.values; }

void from_json(const json& j, EigenvalueSeq& s) {
    s = EigenvalueSeq(j.get<FieldVector>());
}

void to_json(json& j, const ParameterArray& p) {
    j = json{{"d", p.d},
             {"theta", p.theta},
             {"theta_star", p.theta_star},
             {"varphi", p.varphi},
             {"phi", p.phi}};
}

void from_json(const json& j, ParameterArray& p) {
    p.d = j.at("d").get<int>();
    p.theta = j.at("theta").get<EigenvalueSeq>();
    p.theta_star = j.at("theta_star").get<EigenvalueSeq>();
    p.varphi = j.at("varphi").get<FieldVector>();
    p.phi = j.at("phi").get<FieldVector>();
}

void to_json(json& j, const ClosedFormParams& cf) {
    j = json{{"d", cf.d},           {"alpha", cf.alpha},
             {"alpha_star", cf.alpha_star}, {"a", cf.a},
             {"a_prime", cf.a_prime},       {"b", cf.b},
             {"b_prime", cf.b_prime}};
    j["xi"] = cf.xi ? json(*cf.xi) : json(nullptr);
    j["c"] = cf.c ? json(*cf.c) : json(nullptr);
}

void from_json(const json& j, ClosedFormParams& cf) {
    cf.d = j.at("d").get<int>();
    cf.alpha = j.at("alpha").get<RationalFunction>();
    cf.alpha_star = j.at("alpha_star").get<RationalFunction>();
    cf.a = j.at("a").get<RationalFunction>();
    cf.a_prime = j.at("a_prime").get<RationalFunction>();
    cf.b = j.at("b").get<RationalFunction>();
    cf.b_prime = j.at("b_prime").get<RationalFunction>();
    cf.xi.reset();
    cf.c.reset();
    if (j.contains("xi") && !j.at("xi").is_null()) cf.xi = j.at("xi").get<RationalFunction>();
    if (j.contains("c") && !j.at("c").is_null()) cf.c = j.at("c").get<RationalFunction>();
}

void to_json(json& j, const LBTDPair& pair) {
    j = json{{"d", pair.d}, {"A", pair.A}, {"Astar", pair.Astar}};
    j["provenance"] = pair.provenance ? json(*pair.provenance) : json(nullptr);
}

void from_json(const json& j, LBTDPair& pair) {
    pair.d = j.at("d").get<int>();
    pair.A = j.at("A").get<FieldMatrix>();
    pair.Astar = j.at("Astar").get<FieldMatrix>();
    pair.provenance.reset();
    if (j.contains("provenance") && !j.at("provenance").is_null())
        pair.provenance = j.at("provenance").get<ClosedFormParams>();
}

void to_json(json& j, const AWScalars& s) {
    j = json{{"beta", s.beta},   {"gamma", s.gamma},     {"gamma_star", s.gamma_star},
             {"rho", s.rho},     {"rho_star", s.rho_star}, {"omega", s.omega},
             {"eta", s.eta},     {"eta_star", s.eta_star}};
}

void from_json(const json& j, AWScalars& s) {
    s.beta = j.at("beta").get<RationalFunction>();
    s.gamma = j.at("gamma").get<RationalFunction>();
    s.gamma_star = j.at("gamma_star").get<RationalFunction>();
    s.rho = j.at("rho").get<RationalFunction>();
    s.rho_star = j.at("rho_star").get<RationalFunction>();
    s.omega = j.at("omega").get<RationalFunction>();
    s.eta = j.at("eta").get<RationalFunction>();
    s.eta_star = j.at("eta_star").get<RationalFunction>();
}

void to_json(json& j, const RecoveryResult& r) {
    j = json{{"q_inverted", r.q_inverted},
             {"alpha", r.alpha},
             {"a", r.a},
             {"a_prime", r.a_prime},
             {"c", r.c},
             {"alpha_star", r.alpha_star},
             {"b_plus_bprime", r.b_plus_bprime},
             {"b_times_bprime", r.b_times_bprime}};
    j["b_split"] = r.b_split ? json{r.b_split->first, r.b_split->second} : json(nullptr);
    j["b_split_ext"] =
        r.b_split_ext ? json{r.b_split_ext->first, r.b_split_ext->second} : json(nullptr);
}

}  // namespace leonard
