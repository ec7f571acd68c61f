#include "lrc/regen.hpp"

#include "lrc/bounds.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace lrc {

namespace {

// Depth-first extension of independent column sets in ascending index order.
// A dependent extension of an independent set is a circuit iff dropping any
// one of the old members leaves an independent set; supersets of dependent
// sets are never explored, so each circuit is reached exactly once via its
// sorted prefix chain.
struct CircuitSearch {
    const Matrix& g;
    std::size_t max_size;
    const RegenBudget& budget;
    std::vector<RegeneratingSet> out;
    std::vector<std::size_t> current;
    std::size_t nodes = 0;

    bool independent(const std::vector<std::size_t>& cols) const {
        IncrementalBasis basis(g.spec(), g.rows());
        for (std::size_t c : cols)
            if (!basis.try_insert(g.column(c))) return false;
        return true;
    }

    void grow(std::size_t from, const IncrementalBasis& basis) {
        for (std::size_t j = from; j < g.cols(); ++j) {
            if (++nodes > budget.max_nodes)
                throw BudgetExceededError("circuit search node budget exceeded");
            IncrementalBasis next = basis;
            if (next.try_insert(g.column(j))) {
                if (current.size() + 1 < max_size) {
                    current.push_back(j);
                    grow(j + 1, next);
                    current.pop_back();
                }
                continue;
            }
            // current + {j} is dependent; minimal iff every one-removed subset
            // of it is independent
            bool minimal = true;
            for (std::size_t drop = 0; drop < current.size() && minimal; ++drop) {
                std::vector<std::size_t> sub;
                sub.reserve(current.size());
                for (std::size_t t = 0; t < current.size(); ++t)
                    if (t != drop) sub.push_back(current[t]);
                sub.push_back(j);
                minimal = independent(sub);
            }
            if (minimal) {
                std::vector<std::size_t> coords(current);
                coords.push_back(j);
                out.push_back({std::move(coords)});
                if (out.size() > budget.max_circuits)
                    throw BudgetExceededError("circuit budget exceeded");
            }
        }
    }
};

}  // namespace

std::vector<RegeneratingSet> enumerate_regenerating_sets(const LinearCode& c, std::size_t max_size,
                                                         const RegenBudget& budget) {
    if (c.length() > budget.max_length)
        throw BudgetExceededError("code length exceeds the regenerating-set search limit");
    if (max_size > c.length()) throw std::invalid_argument("max_size cannot exceed n");
    if (max_size == 0) return {};
    CircuitSearch search{c.generator(), max_size, budget, {}, {}};
    IncrementalBasis empty(c.spec(), c.dimension());
    search.grow(0, empty);
    return std::move(search.out);
}

namespace {

std::size_t popcount32(std::uint32_t v) { return static_cast<std::size_t>(std::popcount(v)); }

// Greedy nontrivial-union extension; yields valid (not necessarily optimal)
// union sizes used as pruning thresholds for the exact search.
std::vector<std::size_t> greedy_upper_bounds(const std::vector<std::uint32_t>& circuits,
                                             std::size_t x_max, std::size_t n) {
    std::vector<std::size_t> ub(x_max + 1, n);
    ub[0] = 0;
    std::uint32_t u = 0;
    for (std::size_t t = 1; t <= x_max; ++t) {
        std::uint32_t best = 0;
        std::size_t best_size = SIZE_MAX;
        for (std::uint32_t r : circuits) {
            if ((r & ~u) == 0) continue;  // r adds nothing new
            std::uint32_t merged = u | r;
            if (popcount32(merged) < best_size) {
                best_size = popcount32(merged);
                best = merged;
            }
        }
        if (best_size == SIZE_MAX) break;  // greedy stuck; keep trivial bound n
        u = best;
        ub[t] = best_size;
    }
    return ub;
}

}  // namespace

PhiTable phi(const LinearCode& c, std::size_t x_max, const RegenBudget& budget) {
    const std::size_t n = c.length();
    const std::size_t k = c.dimension();
    const std::size_t dual_dim = n - k;
    if (x_max > dual_dim)
        throw std::invalid_argument("x_max cannot exceed n - k (no nontrivial union is longer)");
    if (n > budget.max_length) throw BudgetExceededError("code length exceeds the Phi search limit");

    // every circuit can participate, so enumerate them all (size <= k + 1)
    std::vector<RegeneratingSet> sets =
        enumerate_regenerating_sets(c, std::min(n, k + 1), budget);
    std::vector<std::uint32_t> circuits;
    circuits.reserve(sets.size());
    for (const auto& s : sets) {
        std::uint32_t mask = 0;
        for (std::size_t i : s.coordinates) mask |= 1u << i;
        circuits.push_back(mask);
    }

    std::vector<std::size_t> ub = greedy_upper_bounds(circuits, x_max, n);
    // a state kept at level t must still be able to beat some achievable
    // union size at a later level, each further step adding at least one
    std::vector<std::size_t> keep_limit(x_max + 1, 0);
    for (std::size_t t = 0; t <= x_max; ++t) {
        std::size_t best = 0;
        for (std::size_t x = t; x <= x_max; ++x)
            best = std::max(best, ub[x] >= (x - t) ? ub[x] - (x - t) : 0);
        keep_limit[t] = best;
    }

    PhiTable table;
    table.values.assign(x_max + 1, 0);
    std::unordered_set<std::uint32_t> level{0u};
    std::size_t nodes = 0;
    for (std::size_t t = 1; t <= x_max; ++t) {
        std::unordered_set<std::uint32_t> next;
        for (std::uint32_t u : level) {
            for (std::uint32_t r : circuits) {
                if ((r & ~u) == 0) continue;  // trivial: r inside the union
                std::uint32_t merged = u | r;
                if (popcount32(merged) > keep_limit[t]) continue;
                if (++nodes > budget.max_nodes)
                    throw BudgetExceededError("Phi search node budget exceeded");
                next.insert(merged);
            }
        }
        if (next.empty()) throw std::logic_error("Phi: no nontrivial union of length x <= n - k");
        std::size_t best = SIZE_MAX;
        for (std::uint32_t u : next) best = std::min<std::size_t>(best, popcount32(u));
        table.values[t] = best;
        level = std::move(next);
    }

    // rho = max{ x : Phi(x) - x < k }; Phi(x) - x is non-decreasing
    table.rho = 0;
    for (std::size_t x = 0; x <= x_max; ++x)
        if (table.values[x] - x < k) table.rho = x;
    table.rho_exact =
        x_max == dual_dim || (x_max < dual_dim && table.values[x_max] - x_max >= k);
    return table;
}

std::size_t singleton_rho_bound(const LinearCode& c, const RegenBudget& budget) {
    PhiTable t = phi(c, c.length() - c.dimension(), budget);
    return c.length() - c.dimension() + 1 - t.rho;
}

std::size_t refined_rho_bound(const LinearCode& c, const RegenBudget& budget) {
    PhiTable t = phi(c, c.length() - c.dimension(), budget);
    const std::size_t n = c.length(), k = c.dimension();
    // with the Singleton substitution each term is n - k - x + 1, minimized
    // at x = rho; evaluate the minimum anyway to keep the route explicit
    std::size_t best = n - k + 1;
    for (std::size_t x = 1; x <= t.rho; ++x) {
        std::size_t np = n - t.values[x];
        std::size_t kp = k + x - t.values[x];
        best = std::min(best, np - kp + 1);
    }
    return best;
}

PhiBoundReport check_phi_locality_bounds(const LinearCode& c, const LocalityProfile& p,
                                        std::size_t x_max, const RegenBudget& budget) {
    x_max = std::min(x_max, c.length() - c.dimension());
    PhiTable table = phi(c, x_max, budget);

    std::vector<PartRD> parts;
    parts.reserve(p.parts().size());
    for (const auto& part : p.parts())
        parts.push_back({static_cast<long long>(part.indices.size()),
                         static_cast<long long>(part.r), static_cast<long long>(part.delta)});

    PhiBoundReport report;
    report.rho = table.rho;
    report.ok = true;
    const std::size_t x_top = std::min(x_max, table.rho + 1);  // bound is claimed up to rho + 1
    for (std::size_t x = 0; x <= x_top; ++x) {
        long long upper =
            phi_locality_upper(static_cast<long long>(x), parts, static_cast<long long>(c.dimension()));
        bool ok = static_cast<long long>(table.values[x]) <= upper;
        report.rows.push_back({x, table.values[x], upper, ok});
        if (!ok) report.ok = false;
    }
    return report;
}

}  // namespace lrc
