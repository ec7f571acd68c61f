// bounds.hpp -- closed-form Singleton-like upper bounds on the minimum
// distance of locally repairable codes, one calculator per formula, with the
// applicability conditions checked and reported instead of silently ignored.
//
// All ceilings are exact integer arithmetic; no floating point anywhere.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lrc {

enum class BoundFormula {
    r_local,           // d <= n - k - ceil(k/r) + 2
    r_delta,           // d <= n - k + 1 - (ceil(k/r) - 1)(delta - 1)
    info_profile,      // d <= n - k - sum_j ceil(k_j/j) + 2
    multi_local,       // parts (n_i, r_i), r strictly increasing, delta = 2
    two_locality,      // two parts (n_i, r_i, delta_i)
    r_delta_fallback,  // (r_1, delta_1) bound returned when two_locality's
                       // first condition fails
    multi_r_delta,     // s parts (n_i, r_i, delta_i)
    equal_delta,       // multi_r_delta specialized to a common delta
};

const char* formula_name(BoundFormula f);

struct BoundResult {
    long long value = 0;  // >= 1 when applicable
    bool applicable = false;
    std::string reason;  // why not applicable
    BoundFormula formula = BoundFormula::r_local;
};

struct PartR {
    long long n = 0;
    long long r = 0;
};

struct PartRD {
    long long n = 0;
    long long r = 0;
    long long delta = 2;
};

// ceil(a / b) for b > 0, correct for negative a.
long long ceil_div(long long a, long long b);

BoundResult bound_r_local(long long n, long long k, long long r);
BoundResult bound_r_delta(long long n, long long k, long long r, long long delta);

// ks[j-1] = number of information symbols with locality j; sum must be k and
// the last entry must be positive.
BoundResult bound_info_profile(long long n, long long k, std::span<const long long> ks);

// Parts with strictly increasing r; applicable when
// sum_{i<s} r_i ceil(n_i/(r_i+1)) < k - 1 (the strict form).
BoundResult bound_ml(long long n, long long k, std::span<const PartR> parts);

// Two parts, r1 <= r2, delta1 >= delta2 >= 2.  Returns the two-locality value
// when both conditions hold; falls back to the (r_1, delta_1) bound when the
// first condition fails; not applicable when only the Delta condition fails.
BoundResult bound_two_locality(long long n, long long k, PartRD p1, PartRD p2);

// s >= 2 parts with non-decreasing r and non-increasing delta >= 2.
BoundResult bound_multi(long long n, long long k, std::span<const PartRD> parts);

// bound_multi with all deltas equal.
BoundResult bound_equal_delta(long long n, long long k, std::span<const PartR> parts,
                              long long delta);

// Piecewise upper bound on Phi(x) for a code with the given localities
// (parts as in bound_multi, s >= 1).  Throws std::invalid_argument when the
// preconditions of the piecewise bound do not hold.
long long phi_locality_upper(long long x, std::span<const PartRD> parts, long long k);

}  // namespace lrc
