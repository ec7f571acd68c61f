#include "lrc/code.hpp"

#include "lrc/detail/combinations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lrc {

LinearCode::LinearCode(Matrix h, Matrix g, std::size_t k)
    : h_(std::move(h)), g_(std::move(g)), k_(k) {}

LinearCode LinearCode::from_parity_check(Matrix h) {
    const std::size_t n = h.cols();
    const std::size_t r = rank(h);
    if (r == n) throw std::invalid_argument("parity check has full column rank: code is trivial");
    Matrix g = null_space(h);  // k x n, k = n - r
    return LinearCode(std::move(h), std::move(g), n - r);
}

std::vector<std::uint32_t> LinearCode::encode(std::span<const std::uint32_t> message) const {
    if (message.size() != k_) throw std::invalid_argument("message length must equal k");
    return vec_mat(message, g_);
}

std::vector<std::uint32_t> LinearCode::syndrome(std::span<const std::uint32_t> word) const {
    if (word.size() != length()) throw std::invalid_argument("word length must equal n");
    return mat_vec(h_, word);
}

std::size_t min_distance(const LinearCode& c) {
    const Matrix& h = c.parity_check();
    const std::size_t n = c.length();
    const std::size_t wmax = n - c.dimension() + 1;  // Singleton: some dependent set this small
    for (std::size_t w = 1; w <= wmax; ++w) {
        bool found = detail::for_each_combination(n, w, [&](const std::vector<std::size_t>& idx) {
            return columns_dependent(h, idx);
        });
        if (found) return w;
    }
    throw std::logic_error("min_distance: no dependent column set found");  // unreachable
}

LinearCode puncture_to(const LinearCode& c, std::span<const std::size_t> support) {
    if (support.empty()) throw std::invalid_argument("puncture support must be nonempty");
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i] >= c.length()) throw std::out_of_range("puncture support out of range");
        if (i > 0 && support[i] <= support[i - 1])
            throw std::invalid_argument("puncture support must be sorted and distinct");
    }
    Matrix gs = select_columns(c.generator(), support);
    RrefResult rr = rref(gs);
    const std::size_t ks = rr.pivots.size();
    if (ks == 0) throw std::invalid_argument("punctured code is the zero code");
    std::vector<std::vector<std::uint32_t>> basis;
    basis.reserve(ks);
    for (std::size_t i = 0; i < ks; ++i) basis.push_back(rr.reduced.row(i));
    Matrix gen = Matrix::from_rows(c.spec(), support.size(), basis);
    return LinearCode::from_parity_check(null_space(gen));
}

LocalityProfile::LocalityProfile(std::size_t n, std::vector<LocalityPart> parts)
    : n_(n), parts_(std::move(parts)), part_of_(n, SIZE_MAX) {
    if (parts_.empty()) throw std::invalid_argument("profile needs at least one part");
    std::size_t covered = 0;
    for (std::size_t p = 0; p < parts_.size(); ++p) {
        const LocalityPart& part = parts_[p];
        if (part.indices.empty()) throw std::invalid_argument("empty part in profile");
        if (part.r < 1) throw std::invalid_argument("part locality r must be >= 1");
        if (part.delta < 2) throw std::invalid_argument("part delta must be >= 2");
        if (p > 0) {
            if (part.r < parts_[p - 1].r)
                throw std::invalid_argument("part localities r must be non-decreasing");
            if (part.delta > parts_[p - 1].delta)
                throw std::invalid_argument("part deltas must be non-increasing");
        }
        for (std::size_t i = 0; i < part.indices.size(); ++i) {
            std::size_t c = part.indices[i];
            if (c >= n) throw std::invalid_argument("part index out of range");
            if (i > 0 && part.indices[i] <= part.indices[i - 1])
                throw std::invalid_argument("part indices must be sorted and distinct");
            if (part_of_[c] != SIZE_MAX) throw std::invalid_argument("parts must be disjoint");
            part_of_[c] = p;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("parts must cover all coordinates");
}

std::size_t LocalityProfile::part_of(std::size_t coordinate) const {
    if (coordinate >= n_) throw std::out_of_range("coordinate out of range");
    return part_of_[coordinate];
}

void ErasurePattern::validate(std::size_t n) const {
    std::vector<std::size_t> s(erased);
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= n) throw std::out_of_range("erased index out of range");
        if (i > 0 && s[i] == s[i - 1]) throw std::invalid_argument("duplicate erased index");
    }
}

namespace {

// Punctured min distance with a cache shared across coordinates of a part;
// 0 stands for "zero code" (never >= delta).
class GroupDistanceCache {
  public:
    explicit GroupDistanceCache(const LinearCode& c) : c_(c) {}

    std::size_t distance(const std::vector<std::size_t>& group) {
        auto it = cache_.find(group);
        if (it != cache_.end()) return it->second;
        std::size_t d = 0;
        if (rank(select_columns(c_.generator(), group)) > 0)
            d = min_distance(puncture_to(c_, group));
        cache_.emplace(group, d);
        return d;
    }

  private:
    const LinearCode& c_;
    std::map<std::vector<std::size_t>, std::size_t> cache_;
};

bool subset_of(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

LocalityCertificate verify_locality(const LinearCode& c, const LocalityProfile& p,
                                    const std::vector<std::vector<std::size_t>>& hint_groups) {
    if (p.length() != c.length())
        throw std::invalid_argument("profile does not partition the code coordinates");

    std::vector<std::vector<std::size_t>> hints;
    hints.reserve(hint_groups.size());
    for (const auto& g : hint_groups) {
        std::vector<std::size_t> s(g);
        std::sort(s.begin(), s.end());
        hints.push_back(std::move(s));
    }

    GroupDistanceCache cache(c);
    LocalityCertificate cert;
    cert.witness.resize(c.length());

    for (std::size_t pi = 0; pi < p.parts().size(); ++pi) {
        const LocalityPart& part = p.parts()[pi];
        const std::size_t max_size = part.r + part.delta - 1;
        auto admissible = [&](const std::vector<std::size_t>& s, std::size_t coord) {
            if (s.size() < part.delta || s.size() > max_size) return false;
            if (!std::binary_search(s.begin(), s.end(), coord)) return false;
            if (!subset_of(s, part.indices)) return false;
            return cache.distance(s) >= part.delta;
        };

        for (std::size_t coord : part.indices) {
            bool found = false;
            for (const auto& s : hints) {
                if (admissible(s, coord)) {
                    cert.witness[coord] = s;
                    found = true;
                    break;
                }
            }
            if (found) continue;

            // exhaustive fallback over subsets of T_i containing coord
            std::vector<std::size_t> pool;
            for (std::size_t j : part.indices)
                if (j != coord) pool.push_back(j);
            for (std::size_t sz = part.delta; sz <= max_size && !found; ++sz) {
                if (sz - 1 > pool.size()) break;
                detail::for_each_combination(
                    pool.size(), sz - 1, [&](const std::vector<std::size_t>& pick) {
                        std::vector<std::size_t> s;
                        s.reserve(sz);
                        for (std::size_t pos : pick) s.push_back(pool[pos]);
                        s.push_back(coord);
                        std::sort(s.begin(), s.end());
                        if (cache.distance(s) >= part.delta) {
                            cert.witness[coord] = s;
                            found = true;
                        }
                        return found;
                    });
            }
            if (!found) {
                cert.ok = false;
                cert.violating_coordinate = coord;
                cert.reason = "no witness group for coordinate " + std::to_string(coord) +
                              " with (r, delta) = (" + std::to_string(part.r) + ", " +
                              std::to_string(part.delta) + ")";
                return cert;
            }
        }
    }
    cert.ok = true;
    return cert;
}

namespace {

// Smallest subset R of the known coordinates of S \ {coord} whose generator
// columns span g_coord; returns the recovered value and |R|.
std::optional<std::pair<std::uint32_t, std::size_t>> repair_single(
    const LinearCode& c, const std::vector<std::uint32_t>& word,
    const std::vector<std::size_t>& group, std::size_t coord) {
    std::vector<std::size_t> pool;
    for (std::size_t j : group)
        if (j != coord) pool.push_back(j);
    std::vector<std::uint32_t> target = c.generator().column(coord);
    for (std::size_t t = 1; t <= pool.size(); ++t) {
        std::optional<std::pair<std::uint32_t, std::size_t>> hit;
        detail::for_each_combination(pool.size(), t, [&](const std::vector<std::size_t>& pick) {
            std::vector<std::size_t> r(t);
            for (std::size_t i = 0; i < t; ++i) r[i] = pool[pick[i]];
            Solution sol = solve(select_columns(c.generator(), r), target);
            if (sol.status == SolveStatus::inconsistent) return false;
            std::uint32_t value = 0;
            const FieldSpec& f = c.spec();
            for (std::size_t i = 0; i < t; ++i)
                value = f.add(value, f.mul(sol.x[i], word[r[i]]));
            hit = {value, t};
            return true;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

}  // namespace

RepairResult repair(const LinearCode& c, std::vector<std::uint32_t> word,
                    const LocalityProfile& p, const ErasurePattern& pattern,
                    const LocalityCertificate* cert) {
    const std::size_t n = c.length();
    if (word.size() != n) throw std::invalid_argument("word length must equal n");
    pattern.validate(n);
    if (p.length() != n) throw std::invalid_argument("profile length mismatch");

    LocalityCertificate local_cert;
    if (cert == nullptr) {
        local_cert = verify_locality(c, p);
        cert = &local_cert;
    }

    std::vector<bool> known(n, true);
    std::vector<std::size_t> erased(pattern.erased);
    std::sort(erased.begin(), erased.end());
    for (std::size_t e : erased) known[e] = false;

    RepairResult res;
    res.erasures.reserve(erased.size());
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t e : erased) {
        slot[e] = res.erasures.size();
        res.erasures.push_back({e, RepairPhase::unrecovered, 0});
    }
    const FieldSpec& f = c.spec();

    // Local phase, iterated to a fixpoint: repairing one group can complete
    // the survivors another overlapping group needs.
    static const std::vector<std::size_t> no_witness;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t e : erased) {
            if (known[e]) continue;
            const std::vector<std::size_t>& group =
                (cert->ok && e < cert->witness.size()) ? cert->witness[e] : no_witness;
            if (group.empty()) continue;
            const LocalityPart& part = p.parts()[p.part_of(e)];
            std::vector<std::size_t> missing;
            for (std::size_t j : group)
                if (!known[j]) missing.push_back(j);
            if (missing.empty() || missing.size() > part.delta - 1) continue;

            if (missing.size() == 1) {
                auto hit = repair_single(c, word, group, e);
                if (!hit) continue;
                word[e] = hit->first;
                known[e] = true;
                res.erasures[slot[e]] = {e, RepairPhase::local, hit->second};
                progress = true;
                continue;
            }

            // joint solve from the dual codewords supported inside the group
            Matrix dual = null_space(select_columns(c.generator(), group));
            if (dual.rows() == 0) continue;
            Matrix a(f, dual.rows(), missing.size());
            std::vector<std::uint32_t> b(dual.rows(), 0);
            for (std::size_t ri = 0; ri < dual.rows(); ++ri) {
                std::uint32_t acc = 0;
                for (std::size_t gi = 0; gi < group.size(); ++gi) {
                    std::size_t j = group[gi];
                    if (known[j]) {
                        acc = f.add(acc, f.mul(dual.at(ri, gi), word[j]));
                    } else {
                        std::size_t u = static_cast<std::size_t>(
                            std::lower_bound(missing.begin(), missing.end(), j) - missing.begin());
                        a.set(ri, u, dual.at(ri, gi));
                    }
                }
                b[ri] = f.neg(acc);
            }
            Solution sol = solve(a, b);
            if (sol.status == SolveStatus::inconsistent) {
                res.reason = "local system inconsistent: survivors are not a codeword restriction";
                return res;
            }
            if (sol.status != SolveStatus::unique) continue;

            // helpers: surviving group coordinates referenced by a useful row
            std::vector<bool> row_useful(dual.rows(), false);
            for (std::size_t ri = 0; ri < dual.rows(); ++ri)
                for (std::size_t u = 0; u < missing.size(); ++u)
                    if (a.at(ri, u) != 0) row_useful[ri] = true;
            std::size_t helpers = 0;
            for (std::size_t gi = 0; gi < group.size(); ++gi) {
                std::size_t j = group[gi];
                if (!known[j]) continue;
                for (std::size_t ri = 0; ri < dual.rows(); ++ri) {
                    if (row_useful[ri] && dual.at(ri, gi) != 0) {
                        ++helpers;
                        break;
                    }
                }
            }
            for (std::size_t u = 0; u < missing.size(); ++u) {
                word[missing[u]] = sol.x[u];
                known[missing[u]] = true;
                res.erasures[slot[missing[u]]] = {missing[u], RepairPhase::local, helpers};
            }
            progress = true;
        }
    }

    // Global phase for whatever is left.
    std::vector<std::size_t> left;
    for (std::size_t e : erased)
        if (!known[e]) left.push_back(e);
    if (!left.empty()) {
        res.used_global = true;
        const Matrix& h = c.parity_check();
        std::vector<std::uint32_t> zeroed(word);
        for (std::size_t e : left) zeroed[e] = 0;
        std::vector<std::uint32_t> syn = mat_vec(h, zeroed);
        for (auto& s : syn) s = f.neg(s);
        Solution sol = solve(select_columns(h, left), syn);
        if (sol.status == SolveStatus::inconsistent) {
            res.reason = "global system inconsistent: survivors are not a codeword restriction";
            return res;
        }
        if (sol.status == SolveStatus::underdetermined) {
            res.reason = "unrecoverable: " + std::to_string(left.size()) +
                         " erasures form a dependent column set";
            return res;
        }
        for (std::size_t i = 0; i < left.size(); ++i) {
            word[left[i]] = sol.x[i];
            known[left[i]] = true;
            res.erasures[slot[left[i]]] = {left[i], RepairPhase::global, n - left.size()};
        }
    }

    for (std::uint32_t s : c.syndrome(word)) {
        if (s != 0) {
            res.reason = "repaired word fails the parity checks";
            return res;
        }
    }
    res.ok = true;
    res.word = std::move(word);
    return res;
}

}  // namespace lrc
