// construct.hpp -- explicit optimal codes with multiple localities, built by
// splitting parity rows of a Reed-Solomon code.
//
// The RS parity check is taken in Vandermonde form on the evaluation points
// 0, 1, ..., n-1.  Its first delta - 1 rows are replaced by block-diagonal
// copies restricted to each local group of r_i + delta - 1 consecutive
// columns, which creates the local parities while keeping the result a
// subcode of the RS code; the remaining rows are kept as global parities.
// delta = 2 is the multi-locality case (each group carries one all-ones
// parity row).

#pragma once

#include "lrc/bounds.hpp"
#include "lrc/code.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lrc {

struct ConstructionPart {
    std::size_t n = 0;  // coordinates in this part
    std::size_t r = 0;  // locality
};

struct ConstructionParams {
    std::vector<ConstructionPart> parts;  // r non-decreasing, each >= 2
    std::size_t k = 0;
    std::size_t delta = 2;
    std::optional<std::uint32_t> q;  // default: smallest prime > n
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks every hypothesis individually and reports each violation by name.
ValidationReport validate(const ConstructionParams& params);

// rows x n Vandermonde matrix: entry (t, j) = j^t over GF(q); requires q > n
// so the evaluation points are distinct.
Matrix rs_parity_check(std::size_t n, std::size_t rows, const FieldSpec& spec);

struct ConstructionOutput {
    LinearCode code;
    LocalityProfile profile;
    std::vector<std::vector<std::size_t>> groups;  // local groups, consecutive blocks
    Matrix rs_parity;            // the unsplit RS parity check H'
    std::size_t rs_dimension;    // k' of the parent RS code
    std::size_t achieved_d;      // exact minimum distance
    BoundResult bound;           // the applicable distance bound
    bool optimal;                // achieved_d == bound.value
    bool single_part;            // s = 1 smoke case, outside the multi-locality setting
    ConstructionParams params;   // as built, with q filled in
};

// delta must be 2.
ConstructionOutput build_ml_lrc(const ConstructionParams& params);
// any delta >= 2; identical to build_ml_lrc when delta = 2.
ConstructionOutput build_multi_delta_lrc(const ConstructionParams& params);

}  // namespace lrc
