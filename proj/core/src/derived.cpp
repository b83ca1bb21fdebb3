#include "blockrb/derived.hpp"

#include "blockrb/report.hpp"

namespace blockrb {

GradedElement prelie_product(const AlgebraParams& params, const OperatorSpec& op,
                             const GradedElement& u, const GradedElement& v) {
    return bracket(params, apply_operator(op, u), v);
}

GradedElement prelie_closed_form(const Profile1D& g, std::int64_t k, std::int64_t kprime,
                                 const Scalar& q, std::int64_t m, std::int64_t i, std::int64_t n,
                                 std::int64_t j) {
    GradedElement out;
    if (m != -k)
        return out;
    Scalar coeff = profile_value(g, i) * Scalar(n) * (q + (i + kprime));
    out.add_term(Bidegree{n, i + j + kprime}, coeff);
    return out;
}

GradedElement left_symmetry_defect(const AlgebraParams& params, const OperatorSpec& op,
                                   const GradedElement& u, const GradedElement& v,
                                   const GradedElement& w) {
    auto assoc = [&](const GradedElement& x, const GradedElement& y, const GradedElement& z) {
        return prelie_product(params, op, prelie_product(params, op, x, y), z) -
               prelie_product(params, op, x, prelie_product(params, op, y, z));
    };
    return assoc(u, v, w) - assoc(v, u, w);
}

GradedElement deformed_bracket(const AlgebraParams& params, const OperatorSpec& op,
                               const GradedElement& u, const GradedElement& v) {
    return prelie_product(params, op, u, v) - prelie_product(params, op, v, u) +
           bracket(params, u, v);
}

GradedElement delta_term(const Profile1D& g, std::int64_t k, std::int64_t kprime, const Scalar& q,
                         std::int64_t m, std::int64_t i, std::int64_t n, std::int64_t j) {
    GradedElement out;
    if (m == -k) {
        Scalar coeff = profile_value(g, i) * Scalar(n) * (q + (i + kprime));
        out.add_term(Bidegree{n, i + j + kprime}, coeff);
    }
    if (n == -k) {
        Scalar coeff = profile_value(g, j) * Scalar(m) * (q + (j + kprime));
        out.add_term(Bidegree{m, i + j + kprime}, -coeff);
    }
    return out;
}

nlohmann::json derived_structure_export(const AlgebraParams& params, const OperatorSpec& op,
                                        const Window& w) {
    auto rows_for = [&](auto&& product) {
        nlohmann::json rows = nlohmann::json::array();
        for (const Bidegree& d1 : w.basis_degrees()) {
            const GradedElement u = GradedElement::basis(d1.m, d1.i);
            for (const Bidegree& d2 : w.basis_degrees()) {
                const GradedElement v = GradedElement::basis(d2.m, d2.i);
                GradedElement value = product(u, v, d1, d2);
                if (value.is_zero())
                    continue;
                nlohmann::json row;
                row["inputs"] = nlohmann::json::array({nlohmann::json{d1.m, d1.i},
                                                       nlohmann::json{d2.m, d2.i}});
                row["terms"] = value;
                rows.push_back(std::move(row));
            }
        }
        return rows;
    };

    nlohmann::json out;
    out["prelie"] = rows_for([&](const GradedElement& u, const GradedElement& v, const Bidegree&,
                                 const Bidegree&) { return prelie_product(params, op, u, v); });
    out["deformed"] = rows_for([&](const GradedElement& u, const GradedElement& v, const Bidegree&,
                                   const Bidegree&) { return deformed_bracket(params, op, u, v); });
    out["delta"] =
        rows_for([&](const GradedElement&, const GradedElement&, const Bidegree& d1,
                     const Bidegree& d2) {
            return deformed_bracket(params, op, GradedElement::basis(d1.m, d1.i),
                                    GradedElement::basis(d2.m, d2.i)) -
                   bracket(params, GradedElement::basis(d1.m, d1.i),
                           GradedElement::basis(d2.m, d2.i));
        });
    return out;
}

}  // namespace blockrb
