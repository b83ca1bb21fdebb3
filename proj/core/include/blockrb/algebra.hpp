#pragma once

#include "blockrb/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace blockrb {

/// Index of a basis vector L(m, i). Ordered lexicographically on (m, i);
/// every serialization in the project iterates in this order.
struct Bidegree {
    std::int64_t m = 0;
    std::int64_t i = 0;
    auto operator<=>(const Bidegree&) const = default;
};

/// Affine coefficient offsets of the bracket: a_i = i + alpha, b_j = j + beta.
/// The symmetric case alpha = beta = q is the algebra B(q).
struct AlgebraParams {
    Scalar alpha;
    Scalar beta;

    static AlgebraParams bq(Scalar q) { return {q, q}; }
    static AlgebraParams bq_symbolic() { return bq(Scalar::symbol('q')); }
    /// Generic offsets: alpha = symbol 'a', beta = symbol 'b'.
    static AlgebraParams generic() { return {Scalar::symbol('a'), Scalar::symbol('b')}; }

    bool symmetric() const { return alpha == beta; }
};

/// Finitely supported linear combination of basis vectors, the elements of
/// the graded algebra. No zero coefficients are stored; the zero element is
/// the empty map.
class GradedElement {
public:
    GradedElement() = default;

    static GradedElement basis(std::int64_t m, std::int64_t i) {
        GradedElement e;
        e.terms_[Bidegree{m, i}] = Scalar(1);
        return e;
    }

    const std::map<Bidegree, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient at a bidegree (zero Scalar when absent).
    Scalar coefficient(const Bidegree& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const Bidegree& d, const Scalar& coeff);

    GradedElement operator-() const;
    friend GradedElement operator+(const GradedElement& x, const GradedElement& y);
    friend GradedElement operator-(const GradedElement& x, const GradedElement& y);
    friend GradedElement operator*(const Scalar& c, const GradedElement& x);
    GradedElement& operator+=(const GradedElement& o) { return *this = *this + o; }
    GradedElement& operator-=(const GradedElement& o) { return *this = *this - o; }

    friend bool operator==(const GradedElement& x, const GradedElement& y) {
        return x.terms_ == y.terms_;
    }

    std::string str() const;

private:
    std::map<Bidegree, Scalar> terms_;
};

/// Bilinear product [x_{m,i}, x_{n,j}] = (n a_i - m b_j) x_{m+n, i+j}.
/// Implemented as a plain bilinear product: the Lie axioms are checked by
/// the defect operations below, not presumed (they fail when alpha != beta).
GradedElement bracket(const AlgebraParams& params, const GradedElement& u, const GradedElement& v);

/// [u, v] + [v, u]. Identically zero iff the bracket is antisymmetric on
/// the swept inputs; for alpha != beta it equals (m+n)(alpha-beta) x_{m+n,i+j}
/// on basis pairs.
GradedElement antisymmetry_defect(const AlgebraParams& params, const GradedElement& u,
                                  const GradedElement& v);

/// [u,[v,w]] + [v,[w,u]] + [w,[u,v]].
GradedElement jacobi_defect(const AlgebraParams& params, const GradedElement& u,
                            const GradedElement& v, const GradedElement& w);

}  // namespace blockrb
