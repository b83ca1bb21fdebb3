#include "blockrb/algebra.hpp"

namespace blockrb {

void GradedElement::add_term(const Bidegree& d, const Scalar& coeff) {
    if (coeff.is_zero())
        return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

GradedElement GradedElement::operator-() const {
    GradedElement out;
    for (const auto& [d, c] : terms_)
        out.terms_.emplace(d, -c);
    return out;
}

GradedElement operator+(const GradedElement& x, const GradedElement& y) {
    GradedElement out = x;
    for (const auto& [d, c] : y.terms_)
        out.add_term(d, c);
    return out;
}

GradedElement operator-(const GradedElement& x, const GradedElement& y) {
    GradedElement out = x;
    for (const auto& [d, c] : y.terms_)
        out.add_term(d, -c);
    return out;
}

GradedElement operator*(const Scalar& c, const GradedElement& x) {
    GradedElement out;
    for (const auto& [d, coeff] : x.terms_)
        out.add_term(d, c * coeff);
    return out;
}

std::string GradedElement::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first)
            out += " + ";
        first = false;
        out += "(" + c.str() + ")*L(" + std::to_string(d.m) + "," + std::to_string(d.i) + ")";
    }
    return out;
}

GradedElement bracket(const AlgebraParams& params, const GradedElement& u, const GradedElement& v) {
    GradedElement out;
    for (const auto& [du, cu] : u.terms()) {
        for (const auto& [dv, cv] : v.terms()) {
            // n a_i - m b_j with (m,i) = du, (n,j) = dv.
            Scalar coeff = Scalar(dv.m) * (params.alpha + du.i) - Scalar(du.m) * (params.beta + dv.i);
            if (coeff.is_zero())
                continue;
            out.add_term(Bidegree{du.m + dv.m, du.i + dv.i}, coeff * cu * cv);
        }
    }
    return out;
}

GradedElement antisymmetry_defect(const AlgebraParams& params, const GradedElement& u,
                                  const GradedElement& v) {
    return bracket(params, u, v) + bracket(params, v, u);
}

GradedElement jacobi_defect(const AlgebraParams& params, const GradedElement& u,
                            const GradedElement& v, const GradedElement& w) {
    return bracket(params, u, bracket(params, v, w)) +
           bracket(params, v, bracket(params, w, u)) +
           bracket(params, w, bracket(params, u, v));
}

}  // namespace blockrb
