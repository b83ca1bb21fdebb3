#pragma once

#include "blockrb/kernel.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace blockrb {

/// The scalar equations under audit. RB_PRINTED/CONSTRAINT/FEQ_NONRES are
/// the B(q) forms; the _ABSTRACT ids are the generalized (alpha, beta)
/// forms. FEQ_PLUS is the variant of FEQ_NONRES with "+" in the bracketed
/// difference (the form produced by direct substitution of m = n = -k into
/// RB_PRINTED); KERNEL selects the element-level residual instead of a
/// scalar equation.
enum class EquationId {
    RB_PRINTED,
    RB_ABSTRACT,
    CONSTRAINT,
    CONSTRAINT_ABSTRACT,
    FEQ_NONRES,
    FEQ_ABSTRACT,
    FEQ_PLUS,
    KERNEL,
};

std::string to_string(EquationId id);
EquationId parse_equation_id(const std::string& text);

/// LHS - RHS of the scalar Rota-Baxter equation for B(q), transcribed
/// exactly as printed:
///   LHS = f(m,i) f(n,j) (n(i+q) - m(j+q))
///   RHS = f(m+n+k, i+j+k') [ f(m,i)(n(i+k'+q) - (m+k)(j+q))
///                          - f(n,j)((n+k)(i+q) - m(j+k'+q)) ].
/// Note the LHS coefficient uses the unshifted indices; the first-principles
/// kernel produces the shifted ones. cross_check surfaces the difference.
Scalar printed_rb_residual(const ProfileSpec& f, std::int64_t m, std::int64_t i, std::int64_t n,
                           std::int64_t j, const Scalar& q, std::int64_t k, std::int64_t kprime);

/// Generalized form with a_i = i + alpha, b_j = j + beta; specializes to
/// printed_rb_residual when alpha = beta = q.
Scalar abstract_rb_residual(const ProfileSpec& f, std::int64_t m, std::int64_t i, std::int64_t n,
                            std::int64_t j, const Scalar& alpha, const Scalar& beta,
                            std::int64_t k, std::int64_t kprime);

/// (q - k')(m + k) f(m,i)^2 ; pass beta for the generalized form.
Scalar constraint_value(const ProfileSpec& f, std::int64_t m, std::int64_t i,
                        const Scalar& q_or_beta, std::int64_t k, std::int64_t kprime);

/// (i-j) g(i) g(j) - g(i+j+k') [ (i+k'+q) g(i) -/+ (j+k'+q) g(j) ].
/// plus_variant selects the "+" form. Pass alpha for the generalized form.
Scalar feq_residual(const Profile1D& g, std::int64_t i, std::int64_t j, const Scalar& q_or_alpha,
                    std::int64_t kprime, bool plus_variant = false);

/// Dispatch on FEQ_NONRES / FEQ_ABSTRACT / FEQ_PLUS.
Scalar feq_residual(EquationId variant, const Profile1D& g, std::int64_t i, std::int64_t j,
                    const Scalar& q_or_alpha, std::int64_t kprime);

/// A basis pair where the printed equation and the kernel disagree on
/// whether the residual vanishes.
struct Mismatch {
    std::int64_t m = 0, i = 0, n = 0, j = 0;
    Scalar printed;
    Scalar kernel_coefficient;
};

struct DiscrepancyReport {
    EquationId equation = EquationId::RB_PRINTED;
    Window window;
    std::size_t pairs_checked = 0;
    std::vector<Mismatch> mismatches;
};

/// Adjudicates the printed equation against the kernel over all ordered
/// basis pairs of the window. Requires alpha = beta (the B(q) case);
/// throws std::invalid_argument otherwise. A pair agrees when both
/// residuals are zero or both are nonzero; mismatches are listed in full.
DiscrepancyReport cross_check(const AlgebraParams& params, const OperatorSpec& op,
                              const Window& w);

}  // namespace blockrb
