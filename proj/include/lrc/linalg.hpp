// linalg.hpp -- dense exact linear algebra over GF(q).
//
// Gaussian elimination with first-nonzero pivoting; deterministic output.
// Everything works on immutable dense matrices at desk scale (n <= ~30),
// so there is no pivot strategy and no sparsity.

#pragma once

#include "lrc/field.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace lrc {

class Matrix {
  public:
    // Zero matrix of the given shape.  rows = 0 is allowed (e.g. the parity
    // check of the full space); cols must be >= 1.
    Matrix(FieldSpec spec, std::size_t rows, std::size_t cols);

    // Entries are validated to lie in [0, q).
    static Matrix from_rows(FieldSpec spec, std::size_t cols,
                            const std::vector<std::vector<std::uint32_t>>& rows);
    static Matrix identity(FieldSpec spec, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& spec() const { return spec_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t value);
    FieldElement elem(std::size_t r, std::size_t c) const { return {spec_, at(r, c)}; }

    std::vector<std::uint32_t> row(std::size_t r) const;
    std::vector<std::uint32_t> column(std::size_t c) const;

    bool operator==(const Matrix&) const = default;

  private:
    FieldSpec spec_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> v_;
};

struct RrefResult {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot columns, strictly increasing
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Rows of the result form a basis of { x : m x^T = 0 }; row count is
// cols - rank(m).  Basis vectors are emitted in ascending free-column order.
Matrix null_space(const Matrix& m);

enum class SolveStatus { unique, underdetermined, inconsistent };

struct Solution {
    SolveStatus status;
    std::vector<std::uint32_t> x;  // a particular solution; empty when inconsistent
};

// Solves m x^T = b^T, free variables set to zero.
Solution solve(const Matrix& m, std::span<const std::uint32_t> b);

// True iff the selected columns are linearly dependent.  Indices must be
// distinct and in range.
bool columns_dependent(const Matrix& m, std::span<const std::size_t> idx);

Matrix select_columns(const Matrix& m, std::span<const std::size_t> idx);
Matrix transpose(const Matrix& m);
Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix mat_mul(const Matrix& a, const Matrix& b);

// v * m for a row vector v of length m.rows().
std::vector<std::uint32_t> vec_mat(std::span<const std::uint32_t> v, const Matrix& m);
// m * x^T for a vector x of length m.cols().
std::vector<std::uint32_t> mat_vec(const Matrix& m, std::span<const std::uint32_t> x);

// Incremental row-echelon basis used by subset searches: vectors are
// inserted one at a time and reduced against the rows already present.
class IncrementalBasis {
  public:
    explicit IncrementalBasis(FieldSpec spec, std::size_t dim);

    // Returns true and absorbs v if it is independent of the current rows;
    // returns false (basis unchanged) if v lies in their span.
    bool try_insert(std::vector<std::uint32_t> v);

    // Reduces v without inserting; true iff v is in the span.
    bool in_span(std::vector<std::uint32_t> v) const;

    std::size_t size() const { return rows_.size(); }

  private:
    std::size_t reduce(std::vector<std::uint32_t>& v) const;  // returns leading index or dim

    FieldSpec spec_;
    std::size_t dim_;
    std::vector<std::vector<std::uint32_t>> rows_;  // each normalized, sorted by leading index
    std::vector<std::size_t> leads_;
};

}  // namespace lrc
