#include "blockrb/kernel.hpp"

namespace blockrb {

std::vector<Bidegree> Window::basis_degrees() const {
    validate();
    std::vector<Bidegree> out;
    out.reserve(static_cast<std::size_t>((mMax - mMin + 1) * (iMax - iMin + 1)));
    for (std::int64_t m = mMin; m <= mMax; ++m)
        for (std::int64_t i = iMin; i <= iMax; ++i)
            out.push_back(Bidegree{m, i});
    return out;
}

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::HoldsOnWindow: return "holds-on-window";
        case VerdictStatus::Fails: return "fails";
        case VerdictStatus::Mixed: return "mixed";
    }
    return "unknown";
}

GradedElement rb_residual(const AlgebraParams& params, const OperatorSpec& op,
                          const GradedElement& u, const GradedElement& v) {
    GradedElement ru = apply_operator(op, u);
    GradedElement rv = apply_operator(op, v);
    GradedElement lhs = bracket(params, ru, rv);
    GradedElement rhs = apply_operator(op, bracket(params, ru, v) + bracket(params, u, rv));
    return lhs - rhs;
}

Verdict window_sweep(const AlgebraParams& params, const OperatorSpec& op, const Window& w,
                     std::size_t witness_cap, std::string claim) {
    if (witness_cap < 1)
        throw std::invalid_argument("window_sweep: witness cap must be >= 1");
    Verdict verdict;
    verdict.claim = std::move(claim);
    verdict.window = w;

    const auto degrees = w.basis_degrees();
    for (const Bidegree& d1 : degrees) {
        const GradedElement u = GradedElement::basis(d1.m, d1.i);
        for (const Bidegree& d2 : degrees) {
            const GradedElement v = GradedElement::basis(d2.m, d2.i);
            GradedElement res = rb_residual(params, op, u, v);
            if (res.is_zero())
                continue;
            if (verdict.witnesses.size() >= witness_cap) {
                verdict.truncated = true;
                verdict.status = VerdictStatus::Fails;
                return verdict;
            }
            verdict.witnesses.push_back(Witness{{d1, d2}, std::move(res), Scalar()});
        }
    }
    verdict.status =
        verdict.witnesses.empty() ? VerdictStatus::HoldsOnWindow : VerdictStatus::Fails;
    return verdict;
}

}  // namespace blockrb
