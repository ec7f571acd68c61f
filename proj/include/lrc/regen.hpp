// regen.hpp -- regenerating sets and the Phi function.
//
// A regenerating set of coordinate i is a minimal set R containing i whose
// generator columns are dependent -- a circuit of the column matroid of G,
// equivalently the support of a minimal-support dual codeword.  Phi(x) is the
// smallest union of x regenerating sets forming a nontrivial union (each set
// contributes a coordinate outside its predecessors), and
// rho = max{ x : Phi(x) - x < k } drives the distance bound n - k + 1 - rho.
//
// Searches are exact or they throw: budgets bound the work, exceeding a
// budget is an error, never an approximation.

#pragma once

#include "lrc/code.hpp"

#include <cstddef>
#include <vector>

namespace lrc {

struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RegenBudget {
    std::size_t max_length = 24;       // largest supported code length
    std::size_t max_circuits = 200000;
    std::size_t max_nodes = 50000000;  // search-state budget
};

struct RegeneratingSet {
    std::vector<std::size_t> coordinates;  // sorted ascending

    bool operator==(const RegeneratingSet&) const = default;
};

// All circuits of the generator column matroid with size <= max_size, in
// lexicographic order.  Every returned set is dependent with every proper
// subset independent, hence a regenerating set of each of its elements.
std::vector<RegeneratingSet> enumerate_regenerating_sets(const LinearCode& c, std::size_t max_size,
                                                         const RegenBudget& budget = {});

struct PhiTable {
    std::vector<std::size_t> values;  // values[x] = Phi(x) for x = 0..x_max
    std::size_t rho = 0;
    bool rho_exact = true;  // false when x_max < n - k cut the scan short
};

// Exact Phi(0..x_max) by breadth-first search over unions of circuit
// sequences; x_max must be <= n - k (beyond that no nontrivial union exists).
PhiTable phi(const LinearCode& c, std::size_t x_max, const RegenBudget& budget = {});

// d <= n - k + 1 - rho, with rho computed exactly.
std::size_t singleton_rho_bound(const LinearCode& c, const RegenBudget& budget = {});

// The rho-based bound with the best-distance table replaced by the Singleton
// bound: min over 1 <= x <= rho of (n - Phi(x)) - (k + x - Phi(x)) + 1, which
// collapses to n - k + 1 - rho.
std::size_t refined_rho_bound(const LinearCode& c, const RegenBudget& budget = {});

struct PhiBoundRow {
    std::size_t x = 0;
    std::size_t phi_exact = 0;
    long long upper = 0;
    bool ok = false;
};

struct PhiBoundReport {
    bool ok = false;
    std::size_t rho = 0;
    std::vector<PhiBoundRow> rows;  // x = 0 .. min(x_max, rho + 1)
};

// Compares exact Phi against the piecewise locality upper bound for every
// x up to min(x_max, rho + 1).  A violation indicates an implementation bug.
PhiBoundReport check_phi_locality_bounds(const LinearCode& c, const LocalityProfile& p,
                                         std::size_t x_max, const RegenBudget& budget = {});

}  // namespace lrc
