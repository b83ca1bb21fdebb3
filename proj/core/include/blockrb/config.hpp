#pragma once

#include "blockrb/audit.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace blockrb {

/// A parameter that is a concrete rational, the matching symbol, or (for
/// alpha/beta) inherited from q.
struct ParamSpec {
    enum class Kind { Inherit, Symbolic, Value };
    Kind kind = Kind::Inherit;
    Rational value;

    static ParamSpec symbolic() { return {Kind::Symbolic, Rational()}; }
    static ParamSpec of(Rational r) { return {Kind::Value, std::move(r)}; }

    friend bool operator==(const ParamSpec&, const ParamSpec&) = default;
};

/// The CLI/file configuration. Field-for-field JSON mirror; see
/// parse_config for the flag spelling.
struct RunConfig {
    ParamSpec q = ParamSpec::of(Rational(1, 2));
    ParamSpec alpha;  // Inherit -> q
    ParamSpec beta;   // Inherit -> q
    std::int64_t k = 1;
    std::int64_t kprime = 0;
    std::int64_t window = 4;
    std::string profile = "constant:1";
    std::vector<EquationId> variants{EquationId::FEQ_NONRES, EquationId::FEQ_PLUS,
                                     EquationId::KERNEL};
    std::vector<std::string> claims{"all"};
    std::string out;
    std::size_t witness_cap = kDefaultWitnessCap;
    std::vector<Rational> values{Rational(0), Rational(1)};
    std::int64_t search_lo = -3;
    std::int64_t search_hi = 3;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;

    Scalar q_scalar() const;
    AlgebraParams algebra_params() const;
    /// Parses the profile shorthand; the default support line is m = -k.
    OperatorSpec operator_spec() const;
    Window window_box() const { return Window::square(window); }
    /// Resolves "all" against the claim registry.
    std::vector<std::string> resolved_claims() const;
    AuditConfig audit_config() const;

    void validate() const;  // throws ConfigError naming the offending field
};

/// Merges an optional "--config <file>" JSON (applied first) with flag
/// overrides. Throws ConfigError on unknown flags, malformed values or
/// invariant violations.
RunConfig parse_config(const std::vector<std::string>& args);

void to_json(nlohmann::json& j, const RunConfig& config);
void from_json(const nlohmann::json& j, RunConfig& config);

}  // namespace blockrb
