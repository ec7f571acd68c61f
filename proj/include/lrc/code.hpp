// code.hpp -- linear codes given by a parity-check matrix: dimension,
// exact minimum distance, puncturing, locality verification and erasure
// repair.
//
// Minimum distance is found by searching for the smallest dependent column
// set of H (w rank tests of C(n, w) subsets beat enumerating q^k codewords
// once q exceeds n).  Locality witnesses are searched per coordinate,
// construction-provided groups first, exhaustive subsets second.

#pragma once

#include "lrc/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lrc {

class LinearCode {
  public:
    // H must have n >= 1 columns and rank(H) < n; k = n - rank(H).
    static LinearCode from_parity_check(Matrix h);

    const FieldSpec& spec() const { return h_.spec(); }
    std::size_t length() const { return h_.cols(); }
    std::size_t dimension() const { return k_; }

    const Matrix& parity_check() const { return h_; }  // as given, rows may be redundant
    const Matrix& generator() const { return g_; }     // k x n null-space basis of H

    // message * G; message length must be k.
    std::vector<std::uint32_t> encode(std::span<const std::uint32_t> message) const;
    // H * word^T; zero iff word is a codeword.
    std::vector<std::uint32_t> syndrome(std::span<const std::uint32_t> word) const;

  private:
    LinearCode(Matrix h, Matrix g, std::size_t k);

    Matrix h_;
    Matrix g_;
    std::size_t k_;
};

// Exact minimum distance: the smallest w such that some w columns of H are
// dependent.  Always terminates at w <= n - k + 1.
std::size_t min_distance(const LinearCode& c);

// Restriction of the code to the (nonempty, sorted ascending, distinct)
// coordinate set `support`: codewords are {x|_support : x in C}.  Throws if
// the restricted code is the zero code.
LinearCode puncture_to(const LinearCode& c, std::span<const std::size_t> support);

struct LocalityPart {
    std::vector<std::size_t> indices;  // T_i, sorted ascending
    std::size_t r = 0;
    std::size_t delta = 2;
};

// Partition of [0, n) into parts with non-decreasing r and non-increasing
// delta >= 2 (validated at construction).
class LocalityProfile {
  public:
    LocalityProfile(std::size_t n, std::vector<LocalityPart> parts);

    std::size_t length() const { return n_; }
    const std::vector<LocalityPart>& parts() const { return parts_; }
    // part index owning a coordinate
    std::size_t part_of(std::size_t coordinate) const;

  private:
    std::size_t n_;
    std::vector<LocalityPart> parts_;
    std::vector<std::size_t> part_of_;
};

struct ErasurePattern {
    std::vector<std::size_t> erased;

    // indices must be distinct and < n
    void validate(std::size_t n) const;
};

// Witness groups per coordinate: for coordinate i of part p, witness[i] is a
// subset S of T_p containing i with delta_p <= |S| <= r_p + delta_p - 1 and
// d(C|_S) >= delta_p.
struct LocalityCertificate {
    bool ok = false;
    std::vector<std::vector<std::size_t>> witness;  // per coordinate; meaningful when ok
    std::size_t violating_coordinate = 0;           // meaningful when !ok
    std::string reason;
};

// Searches witness groups for every coordinate.  `hint_groups` (typically the
// construction's local groups) are tried first; exhaustive subset search is
// the fallback.
LocalityCertificate verify_locality(const LinearCode& c, const LocalityProfile& p,
                                    const std::vector<std::vector<std::size_t>>& hint_groups = {});

enum class RepairPhase { local, global, unrecovered };

struct ErasureRepair {
    std::size_t index = 0;
    RepairPhase phase = RepairPhase::unrecovered;
    std::size_t helpers_read = 0;  // surviving symbols read to restore this one
};

struct RepairResult {
    bool ok = false;
    std::vector<std::uint32_t> word;  // fully repaired codeword when ok
    std::vector<ErasureRepair> erasures;
    bool used_global = false;
    std::string reason;  // set when !ok
};

// Repairs the erased coordinates of `word` (entries at erased positions are
// ignored).  Local phase first: any witness group containing at most
// delta_i - 1 missing symbols is solved from the dual codewords supported
// inside it; a single missing symbol is restored from a smallest regenerating
// subset of its group (at most r_i reads).  Remaining erasures fall through
// to a global solve of H x^T = 0.  Failure is reported when the system is
// underdetermined, never silently wrong.
//
// `cert` may be omitted; verify_locality is then run internally.
RepairResult repair(const LinearCode& c, std::vector<std::uint32_t> word,
                    const LocalityProfile& p, const ErasurePattern& pattern,
                    const LocalityCertificate* cert = nullptr);

}  // namespace lrc
