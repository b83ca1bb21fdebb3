#include "blockrb/audit.hpp"

#include <algorithm>

namespace blockrb {

namespace {

// Pairs (i, j) whose residual only references assigned positions <= last.
// Positions are assigned left to right, so a pair becomes checkable as soon
// as max(i, j, i+j+k') has been assigned.
struct PairCheck {
    std::int64_t i, j;
};

}  // namespace

FeqSearchResult feq_solution_search(std::int64_t lo, std::int64_t hi,
                                    std::vector<Rational> values, const Rational& q,
                                    std::int64_t kprime, EquationId variant) {
    if (lo > hi)
        throw std::invalid_argument("feq_solution_search: empty window");
    if (variant != EquationId::FEQ_NONRES && variant != EquationId::FEQ_PLUS)
        throw std::invalid_argument("feq_solution_search: variant must be FEQ_NONRES or FEQ_PLUS");
    const std::size_t size = static_cast<std::size_t>(hi - lo + 1);
    if (size > 9)
        throw std::invalid_argument("feq_solution_search: window larger than 9 positions");
    if (values.empty() || values.size() > 4)
        throw std::invalid_argument("feq_solution_search: need between 1 and 4 values");
    double space = 1;
    for (std::size_t p = 0; p < size; ++p)
        space *= static_cast<double>(values.size());
    if (space > 262144.0)  // 4^9
        throw std::invalid_argument("feq_solution_search: search space exceeds 4^9 assignments");

    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    const bool plus = variant == EquationId::FEQ_PLUS;

    // checks_at[p]: pairs fully determined once position p is assigned.
    std::vector<std::vector<PairCheck>> checks_at(size);
    for (std::int64_t i = lo; i <= hi; ++i) {
        for (std::int64_t j = lo; j <= hi; ++j) {
            const std::int64_t shifted = i + j + kprime;
            if (shifted < lo || shifted > hi)
                continue;  // boundary convention: skip, never fabricate
            const std::int64_t last = std::max({i, j, shifted});
            checks_at[static_cast<std::size_t>(last - lo)].push_back(PairCheck{i, j});
        }
    }

    std::vector<Rational> g(size, Rational(0));
    auto value_at = [&](std::int64_t i) -> const Rational& {
        return g[static_cast<std::size_t>(i - lo)];
    };
    auto residual_is_zero = [&](const PairCheck& pc) {
        const Rational& gi = value_at(pc.i);
        const Rational& gj = value_at(pc.j);
        const Rational& gs = value_at(pc.i + pc.j + kprime);
        Rational first = (q + Rational(pc.i + kprime)) * gi;
        Rational second = (q + Rational(pc.j + kprime)) * gj;
        Rational rhs = gs * (plus ? first + second : first - second);
        Rational lhs = Rational(pc.i - pc.j) * gi * gj;
        return (lhs - rhs).is_zero();
    };

    FeqSearchResult result;
    result.lo = lo;
    result.hi = hi;
    result.values = values;
    result.q = q;
    result.kprime = kprime;
    result.variant = variant;

    // Backtracking over positions lo..hi; prune as soon as a fully
    // determined pair has a nonzero residual.
    auto recurse = [&](auto&& self, std::size_t pos) -> void {
        if (pos == size) {
            std::map<std::int64_t, Rational> table;
            for (std::int64_t i = lo; i <= hi; ++i)
                if (!value_at(i).is_zero())
                    table[i] = value_at(i);
            result.solutions.push_back(std::move(table));
            return;
        }
        for (const Rational& v : values) {
            g[pos] = v;
            bool ok = true;
            for (const PairCheck& pc : checks_at[pos]) {
                if (!residual_is_zero(pc)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                self(self, pos + 1);
        }
        g[pos] = Rational(0);
    };
    recurse(recurse, 0);

    // The value-loop follows the sorted value list, so solutions come out
    // ordered by the assignment tuple already; keep the order canonical.
    return result;
}

}  // namespace blockrb
