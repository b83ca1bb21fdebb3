#pragma once

#include "blockrb/rational.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace blockrb {

/// Parameter symbols are single lowercase letters. The conventional set is
/// 'q' (the algebra parameter), 'a'/'b' (the affine offsets alpha/beta) and
/// 'c' (a generic profile constant).
using Symbol = char;

/// A monomial over the symbol set: symbol -> exponent (entries are >= 1).
using Monomial = std::map<Symbol, unsigned>;

/// "1" for the empty monomial, "q" / "q^3" for one symbol, "a^1b^2" for
/// several (exponents always explicit in the multi-symbol form).
std::string monomial_str(const Monomial& m);
Monomial parse_monomial(const std::string& text);

struct MissingSymbolError : std::runtime_error {
    explicit MissingSymbolError(Symbol s)
        : std::runtime_error(std::string("no assignment for symbol '") + s + "'"), symbol(s) {}
    Symbol symbol;
};

/// Sparse multivariate polynomial over Rational in the parameter symbols.
/// Canonical form: no zero coefficients stored; the zero polynomial is the
/// empty map. Values are immutable in spirit; all operations return copies.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long n) : Scalar(Rational(n)) {}
    Scalar(Rational r) {
        if (!r.is_zero())
            terms_[Monomial{}] = std::move(r);
    }

    static Scalar symbol(Symbol s);

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term as a Rational; requires is_constant().
    Rational constant_value() const;
    /// Total degree; -1 for the zero polynomial.
    long long degree() const;
    std::set<Symbol> symbols() const;

    /// Exact evaluation; the assignment must cover every symbol occurring
    /// in the polynomial (MissingSymbolError otherwise).
    Rational eval(const std::map<Symbol, Rational>& assignment) const;

    /// Substitutes polynomials for symbols (used to specialize alpha/beta to q).
    Scalar substitute(const std::map<Symbol, Scalar>& assignment) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.terms_ == y.terms_; }
    friend bool operator<(const Scalar& x, const Scalar& y) { return x.terms_ < y.terms_; }

    /// Human-readable form, e.g. "q^2 - 1" or "5/6*q". Terms come out in
    /// monomial order (constants first).
    std::string str() const;

private:
    void add_term(const Monomial& mono, const Rational& coeff);

    std::map<Monomial, Rational> terms_;
};

inline Scalar operator+(const Scalar& x, long long n) { return x + Scalar(n); }
inline Scalar operator+(long long n, const Scalar& x) { return Scalar(n) + x; }
inline Scalar operator-(const Scalar& x, long long n) { return x - Scalar(n); }
inline Scalar operator*(const Scalar& x, long long n) { return x * Scalar(n); }
inline Scalar operator*(long long n, const Scalar& x) { return Scalar(n) * x; }
inline Scalar operator*(const Rational& r, const Scalar& x) { return Scalar(r) * x; }

}  // namespace blockrb
