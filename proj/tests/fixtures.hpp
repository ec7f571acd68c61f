// fixtures.hpp -- small codes shared by the test suites.

#pragma once

#include "lrc/code.hpp"
#include "lrc/sim.hpp"

#include <vector>

namespace fixtures {

inline lrc::Matrix vandermonde(lrc::FieldSpec f, std::size_t rows, std::size_t n) {
    lrc::Matrix m(f, rows, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = 0; t < rows; ++t)
            m.set(t, j, f.pow(static_cast<std::uint32_t>(j), t));
    return m;
}

// [4,2] over GF(2): two disjoint parity pairs
inline lrc::LinearCode pair_parity_code() {
    lrc::FieldSpec f2(2);
    return lrc::LinearCode::from_parity_check(
        lrc::Matrix::from_rows(f2, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
}

// [n, n-1] single parity over GF(q)
inline lrc::LinearCode single_parity_code(std::size_t n, std::uint32_t q) {
    lrc::FieldSpec f(q);
    return lrc::LinearCode::from_parity_check(
        lrc::Matrix::from_rows(f, n, {std::vector<std::uint32_t>(n, 1)}));
}

// [3,1] repetition over GF(2)
inline lrc::LinearCode repetition3() {
    lrc::FieldSpec f2(2);
    return lrc::LinearCode::from_parity_check(
        lrc::Matrix::from_rows(f2, 3, {{1, 1, 0}, {0, 1, 1}}));
}

// [n, k] Reed-Solomon code with Vandermonde parity check on points 0..n-1
inline lrc::LinearCode rs_code(std::size_t n, std::size_t k, std::uint32_t q) {
    lrc::FieldSpec f(q);
    return lrc::LinearCode::from_parity_check(vandermonde(f, n - k, n));
}

inline std::vector<std::vector<long long>> to_ll(const lrc::Matrix& m) {
    std::vector<std::vector<long long>> rows(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
    return rows;
}

// Random parity check with a guaranteed nontrivial kernel (k >= 1).
inline lrc::LinearCode random_code(std::uint32_t q, std::size_t n, std::size_t parity_rows,
                                   lrc::SplitMix64& rng) {
    lrc::FieldSpec f(q);
    while (true) {
        lrc::Matrix h(f, parity_rows, n);
        for (std::size_t r = 0; r < parity_rows; ++r)
            for (std::size_t c = 0; c < n; ++c)
                h.set(r, c, static_cast<std::uint32_t>(rng.below(q)));
        if (lrc::rank(h) < n) return lrc::LinearCode::from_parity_check(std::move(h));
    }
}

}  // namespace fixtures
