#include "lrc/bounds.hpp"

#include <stdexcept>

namespace lrc {

const char* formula_name(BoundFormula f) {
    switch (f) {
        case BoundFormula::r_local: return "r-local";
        case BoundFormula::r_delta: return "r-delta";
        case BoundFormula::info_profile: return "info-profile";
        case BoundFormula::multi_local: return "multi-local";
        case BoundFormula::two_locality: return "two-locality";
        case BoundFormula::r_delta_fallback: return "r-delta-fallback";
        case BoundFormula::multi_r_delta: return "multi-r-delta";
        case BoundFormula::equal_delta: return "equal-delta";
    }
    return "?";
}

long long ceil_div(long long a, long long b) {
    if (b <= 0) throw std::invalid_argument("ceil_div needs a positive divisor");
    long long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

namespace {

void check_nk(long long n, long long k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
}

BoundResult finish(BoundFormula f, long long value) {
    if (value < 1) {
        return {value, false, "bound is below 1: no such code exists", f};
    }
    return {value, true, "", f};
}

BoundResult not_applicable(BoundFormula f, std::string reason) {
    return {0, false, std::move(reason), f};
}

}  // namespace

BoundResult bound_r_local(long long n, long long k, long long r) {
    check_nk(n, k);
    if (r < 1) throw std::invalid_argument("locality r must be >= 1");
    return finish(BoundFormula::r_local, n - k - ceil_div(k, r) + 2);
}

BoundResult bound_r_delta(long long n, long long k, long long r, long long delta) {
    check_nk(n, k);
    if (r < 1) throw std::invalid_argument("locality r must be >= 1");
    if (delta < 2) throw std::invalid_argument("delta must be >= 2");
    return finish(BoundFormula::r_delta, n - k + 1 - (ceil_div(k, r) - 1) * (delta - 1));
}

BoundResult bound_info_profile(long long n, long long k, std::span<const long long> ks) {
    check_nk(n, k);
    if (ks.empty() || ks.back() < 1)
        throw std::invalid_argument("profile must end with a positive count");
    long long total = 0, terms = 0;
    for (std::size_t j = 0; j < ks.size(); ++j) {
        if (ks[j] < 0) throw std::invalid_argument("profile counts must be non-negative");
        total += ks[j];
        terms += ceil_div(ks[j], static_cast<long long>(j) + 1);
    }
    if (total != k) throw std::invalid_argument("profile counts must sum to k");
    return finish(BoundFormula::info_profile, n - k - terms + 2);
}

BoundResult bound_ml(long long n, long long k, std::span<const PartR> parts) {
    check_nk(n, k);
    if (parts.empty()) throw std::invalid_argument("need at least one part");
    long long total_n = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].n < 0 || parts[i].r < 1) throw std::invalid_argument("bad part parameters");
        if (i > 0 && parts[i].r <= parts[i - 1].r)
            throw std::invalid_argument("part localities must be strictly increasing");
        total_n += parts[i].n;
    }
    if (total_n != n) throw std::invalid_argument("part sizes must sum to n");

    long long groups = 0, covered = 0;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        long long g = ceil_div(parts[i].n, parts[i].r + 1);
        groups += g;
        covered += parts[i].r * g;
    }
    if (!(covered < k - 1)) {
        return not_applicable(BoundFormula::multi_local,
                              "sum r_i ceil(n_i/(r_i+1)) = " + std::to_string(covered) +
                                  " is not < k - 1 = " + std::to_string(k - 1));
    }
    long long rs = parts.back().r;
    return finish(BoundFormula::multi_local, n - k + 2 - groups - ceil_div(k - covered, rs));
}

BoundResult bound_two_locality(long long n, long long k, PartRD p1, PartRD p2) {
    check_nk(n, k);
    if (p1.r < 1 || p2.r < 1 || p1.n < 0 || p2.n < 0)
        throw std::invalid_argument("bad part parameters");
    if (p1.r > p2.r) throw std::invalid_argument("need r1 <= r2");
    if (p1.delta < p2.delta || p2.delta < 2) throw std::invalid_argument("need delta1 >= delta2 >= 2");
    if (p1.n + p2.n != n) throw std::invalid_argument("part sizes must sum to n");

    const long long m1 = ceil_div(p1.n, p1.r + p1.delta - 1);
    const long long covered = p1.r * m1;
    const long long big_delta = m1 * (p1.delta - 1);

    if (covered >= k) {
        // first condition fails: the (r1, delta1) bound applies instead
        return finish(BoundFormula::r_delta_fallback,
                      n - k + 1 - (ceil_div(k, p1.r) - 1) * (p1.delta - 1));
    }
    if (!(p1.r * ceil_div(big_delta - 1, p1.delta - 1) + (big_delta - 1) < p1.n)) {
        return not_applicable(BoundFormula::two_locality,
                              "Delta condition fails: r1*ceil((Delta-1)/(delta1-1)) + Delta - 1 "
                              "is not < n1");
    }
    long long value =
        n - k + 1 - big_delta - (ceil_div(k - covered, p2.r) - 1) * (p2.delta - 1);
    return finish(BoundFormula::two_locality, value);
}

BoundResult bound_multi(long long n, long long k, std::span<const PartRD> parts) {
    check_nk(n, k);
    if (parts.size() < 2) throw std::invalid_argument("need at least two parts");
    long long total_n = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].n < 0 || parts[i].r < 1 || parts[i].delta < 2)
            throw std::invalid_argument("bad part parameters");
        if (i > 0 && (parts[i].r < parts[i - 1].r || parts[i].delta > parts[i - 1].delta))
            throw std::invalid_argument("need non-decreasing r and non-increasing delta");
        total_n += parts[i].n;
    }
    if (total_n != n) throw std::invalid_argument("part sizes must sum to n");

    const std::size_t s = parts.size();
    long long covered = 0, delta_sum = 0;
    long long prev_cum = 0;  // Delta_{j-1}
    for (std::size_t j = 0; j + 1 < s; ++j) {
        const long long mj = ceil_div(parts[j].n, parts[j].r + parts[j].delta - 1);
        const long long cum = prev_cum + mj * (parts[j].delta - 1);  // Delta_j
        const long long gap = cum - prev_cum - 1;
        if (!(parts[j].r * ceil_div(gap, parts[j].delta - 1) + gap < parts[j].n)) {
            return not_applicable(BoundFormula::multi_r_delta,
                                  "per-part condition fails at part " + std::to_string(j + 1));
        }
        covered += parts[j].r * mj;
        delta_sum += mj * (parts[j].delta - 1);
        prev_cum = cum;
    }
    if (!(covered <= k - 1)) {
        return not_applicable(BoundFormula::multi_r_delta,
                              "sum r_i ceil(n_i/(r_i+delta_i-1)) = " + std::to_string(covered) +
                                  " exceeds k - 1 = " + std::to_string(k - 1));
    }
    long long value = n - k + 1 - delta_sum -
                      (ceil_div(k - covered, parts.back().r) - 1) * (parts.back().delta - 1);
    return finish(BoundFormula::multi_r_delta, value);
}

BoundResult bound_equal_delta(long long n, long long k, std::span<const PartR> parts,
                              long long delta) {
    if (delta < 2) throw std::invalid_argument("delta must be >= 2");
    std::vector<PartRD> full(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) full[i] = {parts[i].n, parts[i].r, delta};
    BoundResult inner = bound_multi(n, k, full);
    inner.formula = BoundFormula::equal_delta;
    return inner;
}

long long phi_locality_upper(long long x, std::span<const PartRD> parts, long long k) {
    if (x < 0) throw std::invalid_argument("x must be non-negative");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (parts.empty()) throw std::invalid_argument("need at least one part");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].n < 1 || parts[i].r < 1 || parts[i].delta < 2)
            throw std::invalid_argument("bad part parameters");
        if (i > 0 && (parts[i].r < parts[i - 1].r || parts[i].delta > parts[i - 1].delta))
            throw std::invalid_argument("need non-decreasing r and non-increasing delta");
    }

    // hypotheses: the per-part gap condition for every leading part, and the
    // leading parts together covering at most k - 1 information symbols
    const std::size_t s = parts.size();
    std::vector<long long> cum(s, 0);  // cum[j] = Delta_{j+1}, the cumulative split-row count
    long long covered = 0, prev_cum = 0;
    for (std::size_t j = 0; j + 1 < s; ++j) {
        const long long mj = ceil_div(parts[j].n, parts[j].r + parts[j].delta - 1);
        const long long c = prev_cum + mj * (parts[j].delta - 1);
        const long long gap = c - prev_cum - 1;
        if (!(parts[j].r * ceil_div(gap, parts[j].delta - 1) + gap < parts[j].n))
            throw std::invalid_argument("per-part condition fails at part " + std::to_string(j + 1));
        covered += parts[j].r * mj;
        cum[j] = c;
        prev_cum = c;
    }
    if (s >= 2 && !(covered <= k - 1))
        throw std::invalid_argument("sum r_i ceil(n_i/(r_i+delta_i-1)) exceeds k - 1");

    long long acc = 0;
    prev_cum = 0;
    for (std::size_t j = 0; j + 1 < s; ++j) {
        if (x <= cum[j])
            return acc + parts[j].r * ceil_div(x - prev_cum, parts[j].delta - 1) + x;
        acc += parts[j].r * ceil_div(parts[j].n, parts[j].r + parts[j].delta - 1);
        prev_cum = cum[j];
    }
    return acc + parts.back().r * ceil_div(x - prev_cum, parts.back().delta - 1) + x;
}

}  // namespace lrc
