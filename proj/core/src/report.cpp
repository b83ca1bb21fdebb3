#include "blockrb/report.hpp"

#include <cstdio>
#include <fstream>

namespace blockrb {

void to_json(nlohmann::json& j, const Rational& r) { j = r.str(); }

void from_json(const nlohmann::json& j, Rational& r) {
    r = Rational::parse(j.get<std::string>());
}

void to_json(nlohmann::json& j, const Scalar& s) {
    j = nlohmann::json::object();
    for (const auto& [mono, coeff] : s.terms())
        j[monomial_str(mono)] = coeff.str();
}

void from_json(const nlohmann::json& j, Scalar& s) {
    s = Scalar();
    for (const auto& [key, value] : j.items()) {
        Scalar term{Rational::parse(value.get<std::string>())};
        for (const auto& [sym, exp] : parse_monomial(key))
            for (unsigned e = 0; e < exp; ++e)
                term *= Scalar::symbol(sym);
        s += term;
    }
}

void to_json(nlohmann::json& j, const Bidegree& d) { j = nlohmann::json::array({d.m, d.i}); }

void from_json(const nlohmann::json& j, Bidegree& d) {
    d.m = j.at(0).get<std::int64_t>();
    d.i = j.at(1).get<std::int64_t>();
}

void to_json(nlohmann::json& j, const GradedElement& e) {
    j = nlohmann::json::array();
    for (const auto& [d, c] : e.terms())
        j.push_back(nlohmann::json::array({d.m, d.i, c}));
}

void from_json(const nlohmann::json& j, GradedElement& e) {
    e = GradedElement();
    for (const auto& triple : j)
        e.add_term(Bidegree{triple.at(0).get<std::int64_t>(), triple.at(1).get<std::int64_t>()},
                   triple.at(2).get<Scalar>());
}

void to_json(nlohmann::json& j, const Window& w) {
    j = nlohmann::json{{"mMin", w.mMin}, {"mMax", w.mMax}, {"iMin", w.iMin}, {"iMax", w.iMax}};
}

void from_json(const nlohmann::json& j, Window& w) {
    j.at("mMin").get_to(w.mMin);
    j.at("mMax").get_to(w.mMax);
    j.at("iMin").get_to(w.iMin);
    j.at("iMax").get_to(w.iMax);
}

void to_json(nlohmann::json& j, const Profile1D& g) {
    j = nlohmann::json::object();
    j["kind"] = profile_kind(g);
    if (const auto* p = std::get_if<ConstantProfile>(&g)) {
        j["c"] = p->c;
    } else if (const auto* p = std::get_if<KroneckerProfile>(&g)) {
        j["i0"] = p->i0;
        j["c"] = p->c;
    } else if (const auto* p = std::get_if<TableProfile>(&g)) {
        nlohmann::json values = nlohmann::json::object();
        for (const auto& [i, v] : p->values)
            values[std::to_string(i)] = v;
        j["values"] = std::move(values);
    } else if (const auto* p = std::get_if<ExponentialProfile>(&g)) {
        j["b"] = p->base;
    } else if (const auto* p = std::get_if<PolynomialProfile>(&g)) {
        j["coeffs"] = p->coeffs;
    } else if (const auto* p = std::get_if<PeriodicProfile>(&g)) {
        j["table"] = p->table;
    }
}

void from_json(const nlohmann::json& j, Profile1D& g) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") {
        g = ConstantProfile{j.at("c").get<Scalar>()};
    } else if (kind == "kronecker") {
        g = KroneckerProfile{j.at("i0").get<std::int64_t>(), j.at("c").get<Scalar>()};
    } else if (kind == "table") {
        TableProfile p;
        for (const auto& [key, value] : j.at("values").items()) {
            Scalar v = value.get<Scalar>();
            if (!v.is_zero())
                p.values[std::stoll(key)] = std::move(v);
        }
        g = std::move(p);
    } else if (kind == "exponential") {
        g = ExponentialProfile{j.at("b").get<Rational>()};
    } else if (kind == "polynomial") {
        g = PolynomialProfile{j.at("coeffs").get<std::vector<Scalar>>()};
    } else if (kind == "periodic") {
        g = PeriodicProfile{j.at("table").get<std::vector<Scalar>>()};
    } else {
        throw std::invalid_argument("profile: unknown kind '" + kind + "'");
    }
    validate_profile(g);
}

void to_json(nlohmann::json& j, const ProfileSpec& f) {
    j = nlohmann::json::object();
    nlohmann::json lines = nlohmann::json::array();
    for (const auto& [m0, g] : f.lines)
        lines.push_back(nlohmann::json{{"m0", m0}, {"g", g}});
    j["lines"] = std::move(lines);
    if (!f.extra.empty()) {
        nlohmann::json extra = nlohmann::json::array();
        for (const auto& [d, v] : f.extra)
            extra.push_back(nlohmann::json::array({d.m, d.i, v}));
        j["extra"] = std::move(extra);
    }
}

void from_json(const nlohmann::json& j, ProfileSpec& f) {
    f = ProfileSpec();
    for (const auto& line : j.at("lines"))
        f.lines.emplace_back(line.at("m0").get<std::int64_t>(), line.at("g").get<Profile1D>());
    if (j.contains("extra")) {
        for (const auto& triple : j.at("extra")) {
            Scalar v = triple.at(2).get<Scalar>();
            if (!v.is_zero())
                f.extra[Bidegree{triple.at(0).get<std::int64_t>(),
                                 triple.at(1).get<std::int64_t>()}] = std::move(v);
        }
    }
    f.validate();
}

void to_json(nlohmann::json& j, const OperatorSpec& op) {
    j = nlohmann::json{{"k", op.k}, {"kprime", op.kprime}, {"profile", op.profile}};
}

void from_json(const nlohmann::json& j, OperatorSpec& op) {
    j.at("k").get_to(op.k);
    j.at("kprime").get_to(op.kprime);
    j.at("profile").get_to(op.profile);
}

void to_json(nlohmann::json& j, const Witness& w) {
    j = nlohmann::json::object();
    j["inputs"] = w.inputs;
    if (!w.residual.is_zero())
        j["residual"] = w.residual;
    if (!w.value.is_zero())
        j["value"] = w.value;
}

void from_json(const nlohmann::json& j, Witness& w) {
    w = Witness();
    j.at("inputs").get_to(w.inputs);
    if (j.contains("residual"))
        j.at("residual").get_to(w.residual);
    if (j.contains("value"))
        j.at("value").get_to(w.value);
}

void to_json(nlohmann::json& j, const Verdict& v) {
    j = nlohmann::json::object();
    j["claim"] = v.claim;
    if (!v.config.is_null())
        j["config"] = v.config;
    if (!v.notes.empty())
        j["notes"] = v.notes;
    j["status"] = to_string(v.status);
    j["truncated"] = v.truncated;
    j["window"] = v.window;
    j["witnesses"] = v.witnesses;
}

void from_json(const nlohmann::json& j, Verdict& v) {
    v = Verdict();
    j.at("claim").get_to(v.claim);
    if (j.contains("config"))
        v.config = j.at("config");
    if (j.contains("notes"))
        j.at("notes").get_to(v.notes);
    const std::string status = j.at("status").get<std::string>();
    if (status == "holds-on-window")
        v.status = VerdictStatus::HoldsOnWindow;
    else if (status == "fails")
        v.status = VerdictStatus::Fails;
    else if (status == "mixed")
        v.status = VerdictStatus::Mixed;
    else
        throw std::invalid_argument("verdict: unknown status '" + status + "'");
    j.at("truncated").get_to(v.truncated);
    j.at("window").get_to(v.window);
    j.at("witnesses").get_to(v.witnesses);
}

void to_json(nlohmann::json& j, const Mismatch& m) {
    j = nlohmann::json{{"m", m.m},
                       {"i", m.i},
                       {"n", m.n},
                       {"j", m.j},
                       {"printed", m.printed},
                       {"kernel_coefficient", m.kernel_coefficient}};
}

void from_json(const nlohmann::json& j, Mismatch& m) {
    j.at("m").get_to(m.m);
    j.at("i").get_to(m.i);
    j.at("n").get_to(m.n);
    j.at("j").get_to(m.j);
    j.at("printed").get_to(m.printed);
    j.at("kernel_coefficient").get_to(m.kernel_coefficient);
}

void to_json(nlohmann::json& j, const DiscrepancyReport& r) {
    j = nlohmann::json{{"equation", to_string(r.equation)},
                       {"window", r.window},
                       {"pairs_checked", r.pairs_checked},
                       {"mismatches", r.mismatches}};
}

void from_json(const nlohmann::json& j, DiscrepancyReport& r) {
    r.equation = parse_equation_id(j.at("equation").get<std::string>());
    j.at("window").get_to(r.window);
    j.at("pairs_checked").get_to(r.pairs_checked);
    j.at("mismatches").get_to(r.mismatches);
}

void to_json(nlohmann::json& j, const AuditReport& r) {
    j = nlohmann::json{{"config", r.config},
                       {"generated_by", r.generated_by},
                       {"schema_version", r.schema_version},
                       {"verdicts", r.verdicts}};
}

void from_json(const nlohmann::json& j, AuditReport& r) {
    r.config = j.at("config");
    j.at("generated_by").get_to(r.generated_by);
    j.at("schema_version").get_to(r.schema_version);
    j.at("verdicts").get_to(r.verdicts);
}

void to_json(nlohmann::json& j, const AdmissibilityCell& cell) {
    j = nlohmann::json{{"family", cell.family},
                       {"regime", to_string(cell.regime)},
                       {"variant", to_string(cell.variant)},
                       {"pass", cell.pass},
                       {"witnesses", cell.witnesses},
                       {"truncated", cell.truncated}};
}

void to_json(nlohmann::json& j, const FeqSearchResult& r) {
    nlohmann::json solutions = nlohmann::json::array();
    for (const auto& table : r.solutions) {
        nlohmann::json entry = nlohmann::json::array();
        for (const auto& [i, v] : table)
            entry.push_back(nlohmann::json::array({i, v}));
        solutions.push_back(std::move(entry));
    }
    j = nlohmann::json{{"search_window", nlohmann::json{r.lo, r.hi}},
                       {"values", r.values},
                       {"q", r.q},
                       {"kprime", r.kprime},
                       {"variant", to_string(r.variant)},
                       {"boundary", r.boundary},
                       {"solutions", std::move(solutions)}};
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_json_atomic(const nlohmann::json& j, const std::string& path) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + tmp + "' for writing");
        out << dump_json(j);
        out.flush();
        if (!out)
            throw IoError("write failed for '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot rename '" + tmp + "' to '" + path + "'");
    }
}

}  // namespace blockrb
