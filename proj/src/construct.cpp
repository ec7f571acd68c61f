#include "lrc/construct.hpp"

#include <numeric>
#include <stdexcept>

namespace lrc {

namespace {

std::size_t total_length(const ConstructionParams& p) {
    std::size_t n = 0;
    for (const auto& part : p.parts) n += part.n;
    return n;
}

}  // namespace

ValidationReport validate(const ConstructionParams& params) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };

    if (params.parts.empty()) {
        fail("no parts given");
        return rep;
    }
    if (params.k < 1) fail("k must be >= 1");
    if (params.delta < 2) fail("delta must be >= 2");

    const std::size_t glen = params.delta >= 2 ? params.delta - 1 : 1;
    for (std::size_t i = 0; i < params.parts.size(); ++i) {
        const auto& part = params.parts[i];
        if (part.r < 2) fail("part " + std::to_string(i + 1) + ": locality r must be >= 2");
        if (i > 0 && part.r < params.parts[i - 1].r)
            fail("part localities must be non-decreasing");
        if (part.n == 0) {
            fail("part " + std::to_string(i + 1) + ": size must be >= 1");
            continue;
        }
        if (part.r >= 2 && part.n % (part.r + glen) != 0)
            fail("divisibility violated: (r_" + std::to_string(i + 1) + " + delta - 1) = " +
                 std::to_string(part.r + glen) + " does not divide n_" + std::to_string(i + 1) +
                 " = " + std::to_string(part.n));
    }
    if (!rep.ok) return rep;

    const std::size_t n = total_length(params);
    const std::size_t s = params.parts.size();
    long long covered = 0;  // sum over leading parts of r_i * (groups in part i)
    for (std::size_t i = 0; i + 1 < s; ++i)
        covered += static_cast<long long>(params.parts[i].r) *
                   static_cast<long long>(params.parts[i].n / (params.parts[i].r + glen));
    const long long k = static_cast<long long>(params.k);
    const long long rs = static_cast<long long>(params.parts.back().r);
    const long long last_groups =
        static_cast<long long>(params.parts.back().n / (params.parts.back().r + glen));
    const long long needed = ceil_div(k - covered, rs);
    if (last_groups != needed)
        fail("last-part balance violated: n_s/(r_s+delta-1) = " + std::to_string(last_groups) +
             " but ceil((k - " + std::to_string(covered) + ")/r_s) = " + std::to_string(needed));
    if (s >= 2 && covered > k - 1)
        fail("leading parts cover too much: sum r_i n_i/(r_i+delta-1) = " +
             std::to_string(covered) + " exceeds k - 1 = " + std::to_string(k - 1));

    const std::uint32_t q = params.q.value_or(0);
    if (params.q) {
        if (!is_prime(q)) fail("q = " + std::to_string(q) + " is not prime");
        if (q <= n) fail("field size q = " + std::to_string(q) +
                         " must exceed n = " + std::to_string(n));
    }
    return rep;
}

Matrix rs_parity_check(std::size_t n, std::size_t rows, const FieldSpec& spec) {
    if (spec.q() <= n)
        throw std::invalid_argument("need q > n for distinct evaluation points");
    if (rows > n) throw std::invalid_argument("rows cannot exceed n");
    Matrix h(spec, rows, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t point = static_cast<std::uint32_t>(j);
        for (std::size_t t = 0; t < rows; ++t)
            h.set(t, j, spec.pow(point, t));
    }
    return h;
}

ConstructionOutput build_multi_delta_lrc(const ConstructionParams& input) {
    ValidationReport rep = validate(input);
    if (!rep.ok) {
        std::string msg = "construction parameters rejected:";
        for (const auto& v : rep.violations) msg += "\n  " + v;
        throw std::invalid_argument(msg);
    }

    ConstructionParams params = input;
    const std::size_t n = total_length(params);
    const std::size_t delta = params.delta;
    const std::size_t k = params.k;
    if (!params.q) params.q = next_prime_after(static_cast<std::uint32_t>(n));
    FieldSpec spec(*params.q);

    // parent RS code: k' = k + (total groups - 1)(delta - 1)
    std::size_t total_groups = 0;
    for (const auto& part : params.parts) total_groups += part.n / (part.r + delta - 1);
    const std::size_t k_rs = k + (total_groups - 1) * (delta - 1);
    if (k_rs >= n) throw std::logic_error("parent RS dimension reached n");
    const std::size_t rs_rows = n - k_rs;
    if (rs_rows < delta - 1) throw std::logic_error("parent RS code has too few parity rows");
    Matrix h_rs = rs_parity_check(n, rs_rows, spec);

    // split the first delta - 1 rows into per-group blocks
    Matrix h(spec, total_groups * (delta - 1) + (rs_rows - (delta - 1)), n);
    std::size_t row = 0, col = 0;
    std::vector<std::vector<std::size_t>> groups;
    std::vector<LocalityPart> parts;
    for (const auto& part : params.parts) {
        const std::size_t width = part.r + delta - 1;
        LocalityPart lp{{}, part.r, delta};
        for (std::size_t g = 0; g < part.n / width; ++g) {
            std::vector<std::size_t> group(width);
            std::iota(group.begin(), group.end(), col);
            for (std::size_t t = 0; t + 1 < delta; ++t, ++row)
                for (std::size_t j : group) h.set(row, j, h_rs.at(t, j));
            col += width;
            groups.push_back(std::move(group));
        }
        lp.indices.resize(part.n);
        std::iota(lp.indices.begin(), lp.indices.end(), col - part.n);
        parts.push_back(std::move(lp));
    }
    for (std::size_t t = delta - 1; t < rs_rows; ++t, ++row)
        for (std::size_t j = 0; j < n; ++j) h.set(row, j, h_rs.at(t, j));

    LinearCode code = LinearCode::from_parity_check(std::move(h));
    if (code.dimension() != k)
        throw std::logic_error("constructed code has dimension " +
                               std::to_string(code.dimension()) + ", expected " +
                               std::to_string(k));

    const std::size_t achieved = min_distance(code);
    const std::size_t s = params.parts.size();
    BoundResult bound;
    if (s == 1) {
        // outside the multi-locality setting; the plain (r, delta) bound applies
        bound = bound_r_delta(static_cast<long long>(n), static_cast<long long>(k),
                              static_cast<long long>(params.parts[0].r),
                              static_cast<long long>(delta));
    } else {
        std::vector<PartR> pr(s);
        bool strictly_increasing = true;
        for (std::size_t i = 0; i < s; ++i) {
            pr[i] = {static_cast<long long>(params.parts[i].n),
                     static_cast<long long>(params.parts[i].r)};
            if (i > 0 && params.parts[i].r <= params.parts[i - 1].r) strictly_increasing = false;
        }
        if (delta == 2 && strictly_increasing) {
            bound = bound_ml(static_cast<long long>(n), static_cast<long long>(k), pr);
            if (!bound.applicable)
                bound = bound_equal_delta(static_cast<long long>(n), static_cast<long long>(k),
                                          pr, static_cast<long long>(delta));
        } else {
            bound = bound_equal_delta(static_cast<long long>(n), static_cast<long long>(k), pr,
                                      static_cast<long long>(delta));
        }
    }

    LocalityProfile profile(n, std::move(parts));
    const bool optimal =
        bound.applicable && static_cast<long long>(achieved) == bound.value;
    return ConstructionOutput{std::move(code), std::move(profile), std::move(groups),
                              std::move(h_rs), k_rs,       achieved,
                              bound,           optimal,    s == 1,
                              std::move(params)};
}

ConstructionOutput build_ml_lrc(const ConstructionParams& params) {
    if (params.delta != 2)
        throw std::invalid_argument("multi-locality build requires delta = 2");
    return build_multi_delta_lrc(params);
}

}  // namespace lrc
