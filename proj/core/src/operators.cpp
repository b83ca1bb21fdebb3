#include "blockrb/operators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace blockrb {

namespace {

std::int64_t positive_mod(std::int64_t i, std::int64_t p) {
    std::int64_t r = i % p;
    return r < 0 ? r + p : r;
}

struct ValueVisitor {
    std::int64_t i;

    Scalar operator()(const ConstantProfile& g) const { return g.c; }
    Scalar operator()(const KroneckerProfile& g) const {
        return i == g.i0 ? g.c : Scalar();
    }
    Scalar operator()(const TableProfile& g) const {
        auto it = g.values.find(i);
        return it == g.values.end() ? Scalar() : it->second;
    }
    Scalar operator()(const ExponentialProfile& g) const {
        return Scalar(g.base.pow(i));
    }
    Scalar operator()(const PolynomialProfile& g) const {
        Scalar total;
        Rational power(1);
        for (const Scalar& c : g.coeffs) {
            total += c * Scalar(power);
            power *= Rational(i);
        }
        return total;
    }
    Scalar operator()(const PeriodicProfile& g) const {
        if (g.table.empty())
            throw std::invalid_argument("periodic profile: empty table");
        return g.table[static_cast<std::size_t>(
            positive_mod(i, static_cast<std::int64_t>(g.table.size())))];
    }
};

}  // namespace

Scalar profile_value(const Profile1D& g, std::int64_t i) {
    return std::visit(ValueVisitor{i}, g);
}

bool profile_is_zero(const Profile1D& g) {
    return std::visit(
        [](const auto& p) -> bool {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantProfile>) {
                return p.c.is_zero();
            } else if constexpr (std::is_same_v<T, KroneckerProfile>) {
                return p.c.is_zero();
            } else if constexpr (std::is_same_v<T, TableProfile>) {
                for (const auto& [i, v] : p.values)
                    if (!v.is_zero())
                        return false;
                return true;
            } else if constexpr (std::is_same_v<T, ExponentialProfile>) {
                return false;  // base != 0, so b^i never vanishes
            } else if constexpr (std::is_same_v<T, PolynomialProfile>) {
                for (const Scalar& c : p.coeffs)
                    if (!c.is_zero())
                        return false;
                return true;
            } else {
                for (const Scalar& c : p.table)
                    if (!c.is_zero())
                        return false;
                return true;
            }
        },
        g);
}

bool profile_is_constant(const Profile1D& g) {
    if (std::holds_alternative<ConstantProfile>(g))
        return true;
    if (const auto* p = std::get_if<PeriodicProfile>(&g)) {
        for (const Scalar& c : p->table)
            if (!(c == p->table.front()))
                return false;
        return true;
    }
    if (const auto* p = std::get_if<PolynomialProfile>(&g)) {
        for (std::size_t d = 1; d < p->coeffs.size(); ++d)
            if (!p->coeffs[d].is_zero())
                return false;
        return true;
    }
    return profile_is_zero(g);
}

std::string profile_kind(const Profile1D& g) {
    static const char* names[] = {"constant", "kronecker",  "table",
                                  "exponential", "polynomial", "periodic"};
    return names[g.index()];
}

void validate_profile(const Profile1D& g) {
    if (const auto* p = std::get_if<ExponentialProfile>(&g)) {
        if (p->base.is_zero())
            throw std::invalid_argument("exponential profile: base must be nonzero");
    } else if (const auto* p2 = std::get_if<PeriodicProfile>(&g)) {
        if (p2->table.empty())
            throw std::invalid_argument("periodic profile: period must be >= 1");
    } else if (const auto* p3 = std::get_if<TableProfile>(&g)) {
        for (const auto& [i, v] : p3->values)
            if (v.is_zero())
                throw std::invalid_argument("table profile: zero entry at i=" + std::to_string(i));
    }
}

ProfileSpec ProfileSpec::single_line(std::int64_t m0, Profile1D g) {
    ProfileSpec spec;
    spec.lines.emplace_back(m0, std::move(g));
    return spec;
}

Scalar ProfileSpec::eval(std::int64_t m, std::int64_t i) const {
    Scalar total;
    for (const auto& [m0, g] : lines)
        if (m == m0)
            total += profile_value(g, i);
    auto it = extra.find(Bidegree{m, i});
    if (it != extra.end())
        total += it->second;
    return total;
}

std::vector<std::int64_t> ProfileSpec::support_lines() const {
    std::set<std::int64_t> ms;
    for (const auto& [m0, g] : lines)
        if (!profile_is_zero(g))
            ms.insert(m0);
    for (const auto& [d, v] : extra)
        if (!v.is_zero())
            ms.insert(d.m);
    return {ms.begin(), ms.end()};
}

void ProfileSpec::validate() const {
    std::set<std::int64_t> seen;
    for (const auto& [m0, g] : lines) {
        if (!seen.insert(m0).second)
            throw std::invalid_argument("profile: duplicate support line m0=" + std::to_string(m0));
        validate_profile(g);
    }
    for (const auto& [d, v] : extra) {
        (void)d;
        if (v.is_zero())
            throw std::invalid_argument("profile: zero entry in the finite 2D table");
    }
}

GradedElement apply_operator(const OperatorSpec& op, const GradedElement& u) {
    GradedElement out;
    for (const auto& [d, c] : u.terms()) {
        Scalar f = op.profile.eval(d.m, d.i);
        if (f.is_zero())
            continue;
        out.add_term(Bidegree{d.m + op.k, d.i + op.kprime}, f * c);
    }
    return out;
}

namespace {

Scalar parse_scalar_literal(const std::string& text) {
    if (text.size() == 1 && std::islower(static_cast<unsigned char>(text[0])) &&
        !std::isdigit(static_cast<unsigned char>(text[0])))
        return Scalar::symbol(text[0]);
    return Scalar(Rational::parse(text));
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

Profile1D parse_profile1d_shorthand(const std::string& text) {
    auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);

    Profile1D g;
    if (kind == "constant") {
        g = ConstantProfile{parse_scalar_literal(rest)};
    } else if (kind == "kronecker") {
        auto parts = split(rest, ':');
        if (parts.size() != 2)
            throw std::invalid_argument("profile shorthand: expected kronecker:i0:c");
        g = KroneckerProfile{std::stoll(parts[0]), parse_scalar_literal(parts[1])};
    } else if (kind == "exp") {
        g = ExponentialProfile{Rational::parse(rest)};
    } else if (kind == "poly") {
        PolynomialProfile p;
        for (const auto& part : split(rest, ','))
            p.coeffs.push_back(parse_scalar_literal(part));
        g = p;
    } else if (kind == "periodic") {
        PeriodicProfile p;
        for (const auto& part : split(rest, ';'))
            p.table.push_back(parse_scalar_literal(part));
        g = p;
    } else if (kind == "table") {
        TableProfile p;
        if (!rest.empty()) {
            for (const auto& part : split(rest, ',')) {
                auto eq = part.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("profile shorthand: expected table:i=v,...");
                Scalar v = parse_scalar_literal(part.substr(eq + 1));
                if (!v.is_zero())
                    p.values[std::stoll(part.substr(0, eq))] = v;
            }
        }
        g = p;
    } else if (kind == "zero") {
        g = ConstantProfile{Scalar()};
    } else {
        throw std::invalid_argument("profile shorthand: unknown family '" + kind + "'");
    }
    validate_profile(g);
    return g;
}

ProfileSpec parse_profile_shorthand(const std::string& text, std::int64_t default_m0) {
    ProfileSpec spec;
    for (const auto& part : split(text, '+')) {
        std::int64_t m0 = default_m0;
        std::string body = part;
        if (part.rfind("m0=", 0) == 0) {
            auto colon = part.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("profile shorthand: expected m0=<int>:<profile>");
            m0 = std::stoll(part.substr(3, colon - 3));
            body = part.substr(colon + 1);
        }
        spec.lines.emplace_back(m0, parse_profile1d_shorthand(body));
    }
    spec.validate();
    return spec;
}

}  // namespace blockrb
