// combinations.hpp -- lexicographic k-subset enumeration.

#pragma once

#include <cstddef>
#include <vector>

namespace lrc::detail {

// Invokes fn(idx) for every w-subset of [0, n) in lexicographic order, where
// idx is a sorted std::vector<std::size_t>.  fn returns true to stop early;
// the function returns true iff it was stopped.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t w, Fn&& fn) {
    if (w > n) return false;
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
        if (fn(static_cast<const std::vector<std::size_t>&>(idx))) return true;
        if (w == 0) return false;
        // advance: find rightmost slot that can move
        std::size_t i = w;
        while (i > 0 && idx[i - 1] == n - w + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace lrc::detail
