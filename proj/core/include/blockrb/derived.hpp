#pragma once

#include "blockrb/kernel.hpp"

#include <nlohmann/json.hpp>

namespace blockrb {

/// x |> y := [R(x), y], the product induced by a weight-0 operator.
GradedElement prelie_product(const AlgebraParams& params, const OperatorSpec& op,
                             const GradedElement& u, const GradedElement& v);

/// Literal evaluation of the closed form for basis pairs under a
/// single-line operator on m0 = -k:
///   L(m,i) |> L(n,j) = g(i) n (i+k'+q) L(n, i+j+k')  when m = -k, else 0.
/// Kept independent of prelie_product so the two routes cross-check.
GradedElement prelie_closed_form(const Profile1D& g, std::int64_t k, std::int64_t kprime,
                                 const Scalar& q, std::int64_t m, std::int64_t i, std::int64_t n,
                                 std::int64_t j);

/// assoc(u,v,w) - assoc(v,u,w) with assoc(x,y,z) = (x|>y)|>z - x|>(y|>z).
/// Vanishes exactly when |> is left-symmetric on the inputs; identically
/// equal to -[rb_residual(u,v), w] when the bracket is Lie.
GradedElement left_symmetry_defect(const AlgebraParams& params, const OperatorSpec& op,
                                   const GradedElement& u, const GradedElement& v,
                                   const GradedElement& w);

/// {x,y} := x|>y - y|>x + [x,y].
GradedElement deformed_bracket(const AlgebraParams& params, const OperatorSpec& op,
                               const GradedElement& u, const GradedElement& v);

/// Literal evaluation of the deformation term
///   Delta((m,i),(n,j)) = 1{m=-k} g(i) n (i+k'+q) L(n, i+j+k')
///                      - 1{n=-k} g(j) m (j+k'+q) L(m, i+j+k').
GradedElement delta_term(const Profile1D& g, std::int64_t k, std::int64_t kprime, const Scalar& q,
                         std::int64_t m, std::int64_t i, std::int64_t n, std::int64_t j);

/// Structure constants of |>, {,} and Delta on the window's basis pairs,
/// as JSON rows ordered lexicographically by input bidegrees.
nlohmann::json derived_structure_export(const AlgebraParams& params, const OperatorSpec& op,
                                        const Window& w);

}  // namespace blockrb
