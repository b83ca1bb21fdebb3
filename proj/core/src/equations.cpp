#include "blockrb/equations.hpp"

#include <stdexcept>

namespace blockrb {

std::string to_string(EquationId id) {
    switch (id) {
        case EquationId::RB_PRINTED: return "RB_PRINTED";
        case EquationId::RB_ABSTRACT: return "RB_ABSTRACT";
        case EquationId::CONSTRAINT: return "CONSTRAINT";
        case EquationId::CONSTRAINT_ABSTRACT: return "CONSTRAINT_ABSTRACT";
        case EquationId::FEQ_NONRES: return "FEQ_NONRES";
        case EquationId::FEQ_ABSTRACT: return "FEQ_ABSTRACT";
        case EquationId::FEQ_PLUS: return "FEQ_PLUS";
        case EquationId::KERNEL: return "KERNEL";
    }
    return "unknown";
}

EquationId parse_equation_id(const std::string& text) {
    for (EquationId id :
         {EquationId::RB_PRINTED, EquationId::RB_ABSTRACT, EquationId::CONSTRAINT,
          EquationId::CONSTRAINT_ABSTRACT, EquationId::FEQ_NONRES, EquationId::FEQ_ABSTRACT,
          EquationId::FEQ_PLUS, EquationId::KERNEL}) {
        if (to_string(id) == text)
            return id;
    }
    throw std::invalid_argument("unknown equation id '" + text + "'");
}

Scalar abstract_rb_residual(const ProfileSpec& f, std::int64_t m, std::int64_t i, std::int64_t n,
                            std::int64_t j, const Scalar& alpha, const Scalar& beta,
                            std::int64_t k, std::int64_t kprime) {
    const Scalar fmi = f.eval(m, i);
    const Scalar fnj = f.eval(n, j);
    const Scalar fshift = f.eval(m + n + k, i + j + kprime);

    // a_x = x + alpha, b_x = x + beta
    const Scalar lhs = fmi * fnj * (Scalar(n) * (alpha + i) - Scalar(m) * (beta + j));
    const Scalar rhs =
        fshift * (fmi * (Scalar(n) * (alpha + (i + kprime)) - Scalar(m + k) * (beta + j)) -
                  fnj * (Scalar(n + k) * (alpha + i) - Scalar(m) * (beta + (j + kprime))));
    return lhs - rhs;
}

Scalar printed_rb_residual(const ProfileSpec& f, std::int64_t m, std::int64_t i, std::int64_t n,
                           std::int64_t j, const Scalar& q, std::int64_t k, std::int64_t kprime) {
    return abstract_rb_residual(f, m, i, n, j, q, q, k, kprime);
}

Scalar constraint_value(const ProfileSpec& f, std::int64_t m, std::int64_t i,
                        const Scalar& q_or_beta, std::int64_t k, std::int64_t kprime) {
    const Scalar fmi = f.eval(m, i);
    return (q_or_beta - kprime) * Scalar(m + k) * fmi * fmi;
}

Scalar feq_residual(const Profile1D& g, std::int64_t i, std::int64_t j, const Scalar& q_or_alpha,
                    std::int64_t kprime, bool plus_variant) {
    const Scalar gi = profile_value(g, i);
    const Scalar gj = profile_value(g, j);
    const Scalar gshift = profile_value(g, i + j + kprime);

    const Scalar lhs = Scalar(i - j) * gi * gj;
    const Scalar first = (q_or_alpha + (i + kprime)) * gi;
    const Scalar second = (q_or_alpha + (j + kprime)) * gj;
    const Scalar rhs = gshift * (plus_variant ? first + second : first - second);
    return lhs - rhs;
}

Scalar feq_residual(EquationId variant, const Profile1D& g, std::int64_t i, std::int64_t j,
                    const Scalar& q_or_alpha, std::int64_t kprime) {
    switch (variant) {
        case EquationId::FEQ_NONRES:
        case EquationId::FEQ_ABSTRACT:
            return feq_residual(g, i, j, q_or_alpha, kprime, false);
        case EquationId::FEQ_PLUS:
            return feq_residual(g, i, j, q_or_alpha, kprime, true);
        default:
            throw std::invalid_argument("feq_residual: not a functional-equation variant: " +
                                        to_string(variant));
    }
}

DiscrepancyReport cross_check(const AlgebraParams& params, const OperatorSpec& op,
                              const Window& w) {
    if (!params.symmetric())
        throw std::invalid_argument("cross_check: requires alpha = beta = q");
    const Scalar& q = params.alpha;

    DiscrepancyReport report;
    report.equation = EquationId::RB_PRINTED;
    report.window = w;

    const auto degrees = w.basis_degrees();
    for (const Bidegree& d1 : degrees) {
        const GradedElement u = GradedElement::basis(d1.m, d1.i);
        for (const Bidegree& d2 : degrees) {
            const GradedElement v = GradedElement::basis(d2.m, d2.i);
            ++report.pairs_checked;

            Scalar printed =
                printed_rb_residual(op.profile, d1.m, d1.i, d2.m, d2.i, q, op.k, op.kprime);

            GradedElement res = rb_residual(params, op, u, v);
            // Both contributions land at (m+n+2k, i+j+2k'); anything else
            // would be a kernel bug.
            if (res.terms().size() > 1)
                throw std::logic_error("cross_check: kernel residual not single-bidegree");
            Scalar kernel_coeff = res.coefficient(
                Bidegree{d1.m + d2.m + 2 * op.k, d1.i + d2.i + 2 * op.kprime});
            if (!res.is_zero() && kernel_coeff.is_zero())
                throw std::logic_error("cross_check: kernel residual at unexpected bidegree");

            if (printed.is_zero() != kernel_coeff.is_zero())
                report.mismatches.push_back(
                    Mismatch{d1.m, d1.i, d2.m, d2.i, std::move(printed), std::move(kernel_coeff)});
        }
    }
    return report;
}

}  // namespace blockrb
