#include "blockrb/scalar.hpp"

#include <cctype>

namespace blockrb {

std::string monomial_str(const Monomial& m) {
    if (m.empty())
        return "1";
    std::string out;
    const bool multi = m.size() > 1;
    for (const auto& [sym, exp] : m) {
        out += sym;
        if (exp != 1 || multi)
            out += "^" + std::to_string(exp);
    }
    return out;
}

Monomial parse_monomial(const std::string& text) {
    if (text == "1")
        return {};
    Monomial m;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char sym = text[pos];
        if (!std::islower(static_cast<unsigned char>(sym)))
            throw std::invalid_argument("monomial: bad symbol in '" + text + "'");
        ++pos;
        unsigned exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (start == pos)
                throw std::invalid_argument("monomial: missing exponent in '" + text + "'");
            exp = static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
            if (exp == 0)
                throw std::invalid_argument("monomial: zero exponent in '" + text + "'");
        }
        if (m.count(sym))
            throw std::invalid_argument("monomial: repeated symbol in '" + text + "'");
        m[sym] = exp;
    }
    return m;
}

Scalar Scalar::symbol(Symbol s) {
    if (!std::islower(static_cast<unsigned char>(s)))
        throw std::invalid_argument("Scalar: symbols are single lowercase letters");
    Scalar out;
    out.terms_[Monomial{{s, 1u}}] = Rational(1);
    return out;
}

bool Scalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Scalar::constant_value() const {
    if (terms_.empty())
        return Rational(0);
    if (!is_constant())
        throw std::logic_error("Scalar: not a constant: " + str());
    return terms_.begin()->second;
}

long long Scalar::degree() const {
    long long deg = -1;
    for (const auto& [mono, coeff] : terms_) {
        (void)coeff;
        long long d = 0;
        for (const auto& [sym, exp] : mono) {
            (void)sym;
            d += exp;
        }
        deg = std::max(deg, d);
    }
    return deg;
}

std::set<Symbol> Scalar::symbols() const {
    std::set<Symbol> out;
    for (const auto& [mono, coeff] : terms_) {
        (void)coeff;
        for (const auto& [sym, exp] : mono) {
            (void)exp;
            out.insert(sym);
        }
    }
    return out;
}

Rational Scalar::eval(const std::map<Symbol, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [mono, coeff] : terms_) {
        Rational value = coeff;
        for (const auto& [sym, exp] : mono) {
            auto it = assignment.find(sym);
            if (it == assignment.end())
                throw MissingSymbolError(sym);
            value *= it->second.pow(exp);
        }
        total += value;
    }
    return total;
}

Scalar Scalar::substitute(const std::map<Symbol, Scalar>& assignment) const {
    Scalar total;
    for (const auto& [mono, coeff] : terms_) {
        Scalar value{coeff};
        for (const auto& [sym, exp] : mono) {
            auto it = assignment.find(sym);
            Scalar base = (it != assignment.end()) ? it->second : Scalar::symbol(sym);
            for (unsigned e = 0; e < exp; ++e)
                value *= base;
        }
        total += value;
    }
    return total;
}

void Scalar::add_term(const Monomial& mono, const Rational& coeff) {
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        if (!coeff.is_zero())
            terms_.emplace(mono, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

Scalar Scalar::operator-() const {
    Scalar out;
    for (const auto& [mono, coeff] : terms_)
        out.terms_.emplace(mono, -coeff);
    return out;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    Scalar out = x;
    for (const auto& [mono, coeff] : y.terms_)
        out.add_term(mono, coeff);
    return out;
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    Scalar out = x;
    for (const auto& [mono, coeff] : y.terms_)
        out.add_term(mono, -coeff);
    return out;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    Scalar out;
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) {
            Monomial mono = mx;
            for (const auto& [sym, exp] : my)
                mono[sym] += exp;
            out.add_term(mono, cx * cy);
        }
    }
    return out;
}

std::string Scalar::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        Rational c = coeff;
        if (first) {
            if (c < Rational(0)) {
                out += "-";
                c = -c;
            }
        } else {
            out += (c < Rational(0)) ? " - " : " + ";
            if (c < Rational(0))
                c = -c;
        }
        first = false;
        if (mono.empty()) {
            out += c.str();
        } else {
            if (!c.is_one())
                out += c.str() + "*";
            out += monomial_str(mono);
        }
    }
    return out;
}

}  // namespace blockrb
