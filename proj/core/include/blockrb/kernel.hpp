#pragma once

#include "blockrb/operators.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace blockrb {

/// Finite index box; its basis set is {L(m,i) : m in [mMin,mMax], i in [iMin,iMax]}.
struct Window {
    std::int64_t mMin = 0, mMax = 0, iMin = 0, iMax = 0;

    static Window square(std::int64_t n) { return {-n, n, -n, n}; }

    void validate() const {
        if (mMin > mMax || iMin > iMax)
            throw std::invalid_argument("window: empty index range");
    }
    bool contains(const Bidegree& d) const {
        return d.m >= mMin && d.m <= mMax && d.i >= iMin && d.i <= iMax;
    }
    std::vector<Bidegree> basis_degrees() const;

    friend bool operator==(const Window&, const Window&) = default;
};

/// A concrete counterexample: the basis inputs together with the nonzero
/// residual they produce. Element-valued checks fill `residual`;
/// scalar-equation checks fill `value`.
struct Witness {
    std::vector<Bidegree> inputs;
    GradedElement residual;
    Scalar value;
};

enum class VerdictStatus { HoldsOnWindow, Fails, Mixed };
std::string to_string(VerdictStatus s);

struct Verdict {
    std::string claim;
    nlohmann::json config;  // everything needed to re-evaluate the witnesses
    Window window;
    VerdictStatus status = VerdictStatus::HoldsOnWindow;
    std::vector<Witness> witnesses;  // lexicographically ordered, capped
    bool truncated = false;
    std::string notes;
};

/// First-principles weight-0 Rota-Baxter residual
///   [R(u), R(v)] - R([R(u), v] + [u, R(v)]),
/// computed from bracket and apply_operator alone. Zero exactly when the
/// identity holds on (u, v).
GradedElement rb_residual(const AlgebraParams& params, const OperatorSpec& op,
                          const GradedElement& u, const GradedElement& v);

constexpr std::size_t kDefaultWitnessCap = 100;

/// Evaluates rb_residual on every ordered basis pair of the window.
/// holds-on-window iff all residuals vanish; otherwise the complete,
/// lexicographically ordered witness list, capped (truncated flag set when
/// the cap was hit).
Verdict window_sweep(const AlgebraParams& params, const OperatorSpec& op, const Window& w,
                     std::size_t witness_cap = kDefaultWitnessCap,
                     std::string claim = "RB_KERNEL_SWEEP");

}  // namespace blockrb
