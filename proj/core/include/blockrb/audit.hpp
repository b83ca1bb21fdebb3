#pragma once

#include "blockrb/equations.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace blockrb {

/// Regime I: q = k' or k = 0 (profile unrestricted per the classification);
/// Regime II: q != k' and k != 0. A symbolic q with k != 0 is classified as
/// Regime II generically (q - k' is a nonzero polynomial), flagged below.
enum class RegimeKind { I, II };
std::string to_string(RegimeKind kind);

struct Regime {
    RegimeKind kind = RegimeKind::I;
    bool generic_in_q = false;
    std::string note;
};

/// q must be a concrete rational or a non-constant polynomial in q.
Regime classify_regime(const Scalar& q, std::int64_t k, std::int64_t kprime);

/// The registry of checkable claims. Each id maps to exactly one checker.
struct ClaimInfo {
    std::string id;
    std::string summary;
};
const std::vector<ClaimInfo>& claim_registry();
bool is_known_claim(const std::string& id);

struct ConfigError : std::runtime_error {
    ConfigError(std::string field_, const std::string& message)
        : std::runtime_error(message), field(std::move(field_)) {}
    std::string field;
};

/// Parameters of a full audit run. The q/k/kprime triple is the
/// non-resonant instance; resonant checkers use q := kprime with the same
/// degree. Scalar-equation admissibility cells sweep (i,j) over
/// [feq_lo, feq_hi]^2; element sweeps use the window [-window_n, window_n]^2.
struct AuditConfig {
    std::int64_t window_n = 4;
    Scalar q = Scalar(Rational(1, 2));
    std::int64_t k = 1;
    std::int64_t kprime = 0;
    std::size_t witness_cap = kDefaultWitnessCap;
    std::int64_t feq_lo = -6, feq_hi = 6;
    std::int64_t search_lo = -3, search_hi = 3;
    std::vector<Rational> search_values{Rational(0), Rational(1)};
    std::vector<EquationId> variants{EquationId::FEQ_NONRES, EquationId::FEQ_PLUS,
                                     EquationId::KERNEL};
    std::vector<std::string> claims;  // resolved ids; empty selection allowed

    void validate() const;
    nlohmann::json echo() const;
};

struct AuditReport {
    nlohmann::json config;
    std::vector<Verdict> verdicts;
    std::string generated_by;
    std::string schema_version = "1";
};

/// Runs every selected claim checker and aggregates the verdicts, ordered
/// lexicographically by claim id (stable within a claim).
AuditReport run_all(const AuditConfig& config);

// ---- Table 1: admissibility of the canonical profile families ----

/// Family keys in table order.
const std::vector<std::string>& canonical_families();
/// Fixed default parameters: c=1, Kronecker{0,1}, table {0:1,1:1}, b=2,
/// g(i)=i, period-2 table [1,2].
Profile1D default_family_profile(const std::string& family);

struct AdmissibilityCell {
    std::string family;
    RegimeKind regime = RegimeKind::I;
    EquationId variant = EquationId::FEQ_NONRES;
    bool pass = false;
    std::vector<Witness> witnesses;
    bool truncated = false;
};

/// One column of the table: every canonical family evaluated against the
/// selected residual for the given (q, k, k'). Scalar variants sweep (i,j)
/// over the window's i-range; KERNEL sweeps ordered basis pairs and places
/// each family on the line m = -k.
std::vector<AdmissibilityCell> admissibility_matrix(const Window& w, const Scalar& q,
                                                    std::int64_t k, std::int64_t kprime,
                                                    EquationId variant,
                                                    std::size_t witness_cap = kDefaultWitnessCap);

/// Fixed-width text table with one row per family and the two regime
/// columns, matching the layout "Regime I" / "Regime II".
std::string render_admissibility_table(EquationId variant,
                                       const std::vector<AdmissibilityCell>& regime1,
                                       const std::vector<AdmissibilityCell>& regime2);

// ---- Individual claim operations ----

/// Two-line superposition probe at resonance (requires q = k', a != b).
/// Status comes from the kernel sweep of the superposed operator; notes
/// record the printed-equation mismatch count and whether restricting to
/// either single line would rescue the identity on the window.
Verdict two_line_test(const AlgebraParams& params, std::int64_t a, const Profile1D& ga,
                      std::int64_t b, const Profile1D& gb, std::int64_t k, std::int64_t kprime,
                      const Scalar& q, const Window& w,
                      std::size_t witness_cap = kDefaultWitnessCap);

/// Places g on each candidate line in the window's m-range and sweeps the
/// kernel; requires q = k'. Lines whose profile is invisible to the window
/// (vacuously holding) are flagged in the notes.
std::map<std::int64_t, Verdict> rigidity_support_scan(const Scalar& q, std::int64_t k,
                                                      std::int64_t kprime, const Profile1D& g,
                                                      const Window& w,
                                                      std::size_t witness_cap = kDefaultWitnessCap);

// ---- Brute-force functional-equation search ----

struct FeqSearchResult {
    std::int64_t lo = 0, hi = 0;
    std::vector<Rational> values;
    Rational q;
    std::int64_t kprime = 0;
    EquationId variant = EquationId::FEQ_NONRES;
    /// Pairs whose i+j+k' leaves the window are skipped, never fabricated.
    std::string boundary = "skip-outside";
    /// Solutions as finite tables over [lo, hi] (zero entries omitted),
    /// canonically ordered by the value tuple.
    std::vector<std::map<std::int64_t, Rational>> solutions;
};

/// Backtracking enumeration of all g : [lo,hi] -> values with zero residual
/// on every in-window pair. Desk scale only: |values| <= 4, window size <= 9,
/// |values|^size <= 4^9 (std::invalid_argument otherwise).
FeqSearchResult feq_solution_search(std::int64_t lo, std::int64_t hi,
                                    std::vector<Rational> values, const Rational& q,
                                    std::int64_t kprime, EquationId variant);

/// Recomputes a witness from the verdict's config and compares against the
/// stored payload. Used by the acceptance suite; returns false when the
/// config is insufficient or the recomputation disagrees.
bool reevaluate_witness(const Verdict& verdict, const Witness& witness);

}  // namespace blockrb
