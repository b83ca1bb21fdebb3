#pragma once

#include "blockrb/algebra.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace blockrb {

// The canonical one-line profile families. Values are Scalars so that
// audits can run symbolically in q (or in a generic constant c).

struct ConstantProfile {
    Scalar c;
};

struct KroneckerProfile {
    std::int64_t i0 = 0;
    Scalar c;
};

/// Finite-support table; stores no zero values.
struct TableProfile {
    std::map<std::int64_t, Scalar> values;
};

/// g(i) = base^i with a nonzero rational base, exact for negative i too.
struct ExponentialProfile {
    Rational base;
};

/// g(i) = sum_d coeffs[d] * i^d.
struct PolynomialProfile {
    std::vector<Scalar> coeffs;
};

/// g(i) = table[i mod p] with the nonnegative (mathematical) modulus.
struct PeriodicProfile {
    std::vector<Scalar> table;
};

using Profile1D = std::variant<ConstantProfile, KroneckerProfile, TableProfile,
                               ExponentialProfile, PolynomialProfile, PeriodicProfile>;

Scalar profile_value(const Profile1D& g, std::int64_t i);
bool profile_is_zero(const Profile1D& g);
/// True when g takes a single value everywhere (the non-constancy of a
/// periodic profile is a checkable predicate, not an invariant).
bool profile_is_constant(const Profile1D& g);
std::string profile_kind(const Profile1D& g);
/// Throws std::invalid_argument when a family invariant is violated
/// (zero exponential base, empty periodic table, zero table entries).
void validate_profile(const Profile1D& g);

/// The scalar profile f(m, i): a sum of one-dimensional profiles, each
/// supported on an affine line {m = m0}, plus an optional finite 2D table.
struct ProfileSpec {
    std::vector<std::pair<std::int64_t, Profile1D>> lines;  // pairwise distinct m0
    std::map<Bidegree, Scalar> extra;                       // no zero values

    static ProfileSpec single_line(std::int64_t m0, Profile1D g);

    Scalar eval(std::int64_t m, std::int64_t i) const;
    /// Sorted m-values on which the profile is not identically zero.
    std::vector<std::int64_t> support_lines() const;
    void validate() const;
};

/// A homogeneous degree-(k,k') weight-0 Rota-Baxter candidate:
/// R(L(m,i)) = f(m,i) L(m+k, i+k').
struct OperatorSpec {
    std::int64_t k = 0;
    std::int64_t kprime = 0;
    ProfileSpec profile;

    static OperatorSpec single_line(std::int64_t k, std::int64_t kprime, std::int64_t m0,
                                    Profile1D g) {
        return {k, kprime, ProfileSpec::single_line(m0, std::move(g))};
    }
    /// Operator on the canonical support line m = -k.
    static OperatorSpec canonical(std::int64_t k, std::int64_t kprime, Profile1D g) {
        return single_line(k, kprime, -k, std::move(g));
    }
};

/// Linear extension of the basis action; grading shifts by (k, k').
GradedElement apply_operator(const OperatorSpec& op, const GradedElement& u);

/// CLI shorthand for profiles, e.g. "constant:1", "kronecker:0:1", "exp:2",
/// "poly:0,1", "periodic:1;2", "table:0=1,1=1". A "m0=<int>:" prefix places
/// the profile on a specific line (default is m = -k); several lines can be
/// joined with '+'. Values are rational literals or a single symbol letter.
Profile1D parse_profile1d_shorthand(const std::string& text);
ProfileSpec parse_profile_shorthand(const std::string& text, std::int64_t default_m0);

}  // namespace blockrb
