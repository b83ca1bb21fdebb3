#include "blockrb/config.hpp"

#include "blockrb/report.hpp"

#include <fstream>

namespace blockrb {

namespace {

ParamSpec parse_param(const std::string& field, const std::string& text) {
    if (text == "symbolic")
        return ParamSpec::symbolic();
    if (text == "inherit")
        return ParamSpec();
    try {
        return ParamSpec::of(Rational::parse(text));
    } catch (const std::invalid_argument&) {
        throw ConfigError(field, field + ": expected a rational, 'symbolic' or 'inherit', got '" +
                                     text + "'");
    }
}

std::string param_str(const ParamSpec& p) {
    switch (p.kind) {
        case ParamSpec::Kind::Inherit: return "inherit";
        case ParamSpec::Kind::Symbolic: return "symbolic";
        case ParamSpec::Kind::Value: return p.value.str();
    }
    return "inherit";
}

std::int64_t parse_int(const std::string& field, const std::string& text) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(field, field + ": expected an integer, got '" + text + "'");
    }
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(',', start);
        if (pos == std::string::npos) {
            if (start < text.size())
                out.push_back(text.substr(start));
            return out;
        }
        if (pos > start)
            out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

Scalar RunConfig::q_scalar() const {
    switch (q.kind) {
        case ParamSpec::Kind::Symbolic: return Scalar::symbol('q');
        case ParamSpec::Kind::Value: return Scalar(q.value);
        case ParamSpec::Kind::Inherit: break;
    }
    throw ConfigError("q", "q cannot inherit");
}

AlgebraParams RunConfig::algebra_params() const {
    auto resolve = [&](const ParamSpec& p, Symbol sym) -> Scalar {
        switch (p.kind) {
            case ParamSpec::Kind::Inherit: return q_scalar();
            case ParamSpec::Kind::Symbolic: return Scalar::symbol(sym);
            case ParamSpec::Kind::Value: return Scalar(p.value);
        }
        return Scalar();
    };
    return AlgebraParams{resolve(alpha, 'a'), resolve(beta, 'b')};
}

OperatorSpec RunConfig::operator_spec() const {
    return OperatorSpec{k, kprime, parse_profile_shorthand(profile, -k)};
}

std::vector<std::string> RunConfig::resolved_claims() const {
    std::vector<std::string> out;
    for (const std::string& claim : claims) {
        if (claim == "all") {
            for (const ClaimInfo& info : claim_registry())
                out.push_back(info.id);
        } else {
            out.push_back(claim);
        }
    }
    return out;
}

AuditConfig RunConfig::audit_config() const {
    AuditConfig cfg;
    cfg.window_n = window;
    cfg.q = q_scalar();
    cfg.k = k;
    cfg.kprime = kprime;
    cfg.witness_cap = witness_cap;
    cfg.search_lo = search_lo;
    cfg.search_hi = search_hi;
    cfg.search_values = values;
    cfg.variants = variants;
    cfg.claims = resolved_claims();
    return cfg;
}

void RunConfig::validate() const {
    if (q.kind == ParamSpec::Kind::Inherit)
        throw ConfigError("q", "q must be a rational or 'symbolic'");
    if (window < 1)
        throw ConfigError("window", "window must be >= 1");
    if (witness_cap < 1)
        throw ConfigError("witness-cap", "witness cap must be >= 1");
    if (search_lo > search_hi)
        throw ConfigError("search-window", "empty search window");
    if (values.empty())
        throw ConfigError("values", "need at least one value");
    for (const std::string& claim : claims)
        if (claim != "all" && !is_known_claim(claim))
            throw ConfigError("claims", "unknown claim id '" + claim + "'");
    try {
        (void)operator_spec();
    } catch (const std::exception& e) {
        throw ConfigError("profile", std::string("profile: ") + e.what());
    }
}

RunConfig parse_config(const std::vector<std::string>& raw_args) {
    RunConfig config;

    // Normalize "--flag=value" to "--flag value".
    std::vector<std::string> args;
    args.reserve(raw_args.size());
    for (const std::string& arg : raw_args) {
        auto eq = arg.find('=');
        if (arg.rfind("--", 0) == 0 && eq != std::string::npos) {
            args.push_back(arg.substr(0, eq));
            args.push_back(arg.substr(eq + 1));
        } else {
            args.push_back(arg);
        }
    }

    // The config file, when present, is applied before any flag.
    for (std::size_t idx = 0; idx < args.size(); ++idx) {
        if (args[idx] != "--config")
            continue;
        if (idx + 1 >= args.size())
            throw ConfigError("config", "--config: missing file path");
        std::ifstream in(args[idx + 1]);
        if (!in)
            throw ConfigError("config", "--config: cannot open '" + args[idx + 1] + "'");
        nlohmann::json j;
        try {
            in >> j;
            config = j.get<RunConfig>();
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError("config", std::string("--config: ") + e.what());
        }
    }

    for (std::size_t idx = 0; idx < args.size(); ++idx) {
        const std::string& flag = args[idx];
        auto next = [&]() -> const std::string& {
            if (idx + 1 >= args.size())
                throw ConfigError(flag.substr(2), flag + ": missing value");
            return args[++idx];
        };
        if (flag == "--config") {
            ++idx;  // handled above
        } else if (flag == "--q") {
            config.q = parse_param("q", next());
        } else if (flag == "--alpha") {
            config.alpha = parse_param("alpha", next());
        } else if (flag == "--beta") {
            config.beta = parse_param("beta", next());
        } else if (flag == "--k") {
            config.k = parse_int("k", next());
        } else if (flag == "--kprime") {
            config.kprime = parse_int("kprime", next());
        } else if (flag == "--window") {
            config.window = parse_int("window", next());
        } else if (flag == "--profile") {
            config.profile = next();
        } else if (flag == "--variant") {
            config.variants.clear();
            for (const std::string& part : split_csv(next())) {
                try {
                    config.variants.push_back(parse_equation_id(part));
                } catch (const std::invalid_argument& e) {
                    throw ConfigError("variant", e.what());
                }
            }
            if (config.variants.empty())
                throw ConfigError("variant", "--variant: empty list");
        } else if (flag == "--claims") {
            config.claims = split_csv(next());
            if (config.claims.empty())
                throw ConfigError("claims", "--claims: empty list");
        } else if (flag == "--values") {
            config.values.clear();
            for (const std::string& part : split_csv(next())) {
                try {
                    config.values.push_back(Rational::parse(part));
                } catch (const std::invalid_argument&) {
                    throw ConfigError("values", "values: bad rational '" + part + "'");
                }
            }
        } else if (flag == "--search-window") {
            std::string text = next();
            auto dots = text.find("..");
            auto comma = text.find(',');
            std::string lo, hi;
            if (dots != std::string::npos) {
                lo = text.substr(0, dots);
                hi = text.substr(dots + 2);
            } else if (comma != std::string::npos) {
                lo = text.substr(0, comma);
                hi = text.substr(comma + 1);
            } else {
                throw ConfigError("search-window", "search-window: expected 'lo..hi'");
            }
            config.search_lo = parse_int("search-window", lo);
            config.search_hi = parse_int("search-window", hi);
        } else if (flag == "--witness-cap") {
            std::int64_t cap = parse_int("witness-cap", next());
            if (cap < 1)
                throw ConfigError("witness-cap", "witness cap must be >= 1");
            config.witness_cap = static_cast<std::size_t>(cap);
        } else if (flag == "--out") {
            config.out = next();
        } else {
            throw ConfigError("args", "unknown flag '" + flag + "'");
        }
    }

    config.validate();
    return config;
}

void to_json(nlohmann::json& j, const RunConfig& config) {
    j = nlohmann::json::object();
    j["q"] = param_str(config.q);
    if (config.alpha.kind != ParamSpec::Kind::Inherit)
        j["alpha"] = param_str(config.alpha);
    if (config.beta.kind != ParamSpec::Kind::Inherit)
        j["beta"] = param_str(config.beta);
    j["k"] = config.k;
    j["kprime"] = config.kprime;
    j["window"] = config.window;
    j["profile"] = config.profile;
    nlohmann::json variants = nlohmann::json::array();
    for (EquationId v : config.variants)
        variants.push_back(to_string(v));
    j["variants"] = std::move(variants);
    j["claims"] = config.claims;
    if (!config.out.empty())
        j["out"] = config.out;
    j["witness_cap"] = config.witness_cap;
    j["values"] = config.values;
    j["search_window"] = nlohmann::json{config.search_lo, config.search_hi};
}

void from_json(const nlohmann::json& j, RunConfig& config) {
    config = RunConfig();
    if (j.contains("q"))
        config.q = parse_param("q", j.at("q").get<std::string>());
    if (j.contains("alpha"))
        config.alpha = parse_param("alpha", j.at("alpha").get<std::string>());
    if (j.contains("beta"))
        config.beta = parse_param("beta", j.at("beta").get<std::string>());
    if (j.contains("k"))
        j.at("k").get_to(config.k);
    if (j.contains("kprime"))
        j.at("kprime").get_to(config.kprime);
    if (j.contains("window"))
        j.at("window").get_to(config.window);
    if (j.contains("profile"))
        j.at("profile").get_to(config.profile);
    if (j.contains("variants")) {
        config.variants.clear();
        for (const auto& v : j.at("variants"))
            config.variants.push_back(parse_equation_id(v.get<std::string>()));
    }
    if (j.contains("claims"))
        j.at("claims").get_to(config.claims);
    if (j.contains("out"))
        j.at("out").get_to(config.out);
    if (j.contains("witness_cap"))
        j.at("witness_cap").get_to(config.witness_cap);
    if (j.contains("values")) {
        config.values.clear();
        for (const auto& v : j.at("values"))
            config.values.push_back(Rational::parse(v.get<std::string>()));
    }
    if (j.contains("search_window")) {
        j.at("search_window").at(0).get_to(config.search_lo);
        j.at("search_window").at(1).get_to(config.search_hi);
    }
}

}  // namespace blockrb
