#include "lrc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

Matrix::Matrix(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), v_(rows * cols, 0) {
    if (cols == 0) throw std::invalid_argument("matrix must have at least one column");
}

Matrix Matrix::from_rows(FieldSpec spec, std::size_t cols,
                         const std::vector<std::vector<std::uint32_t>>& rows) {
    Matrix m(spec, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Matrix Matrix::identity(FieldSpec spec, std::size_t n) {
    Matrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, std::uint32_t value) {
    if (value >= spec_.q()) {
        throw std::invalid_argument("entry " + std::to_string(value) + " outside GF(" +
                                    std::to_string(spec_.q()) + ")");
    }
    v_[r * cols_ + c] = value;
}

std::vector<std::uint32_t> Matrix::row(std::size_t r) const {
    return {v_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            v_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<std::uint32_t> Matrix::column(std::size_t c) const {
    std::vector<std::uint32_t> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

namespace {

// In-place Gauss-Jordan on a row-major grid with `cols` logical columns of
// which the first `elim_cols` are eliminated (extra columns ride along, which
// is how solve() carries the right-hand side).
struct Grid {
    const FieldSpec* spec;
    std::size_t rows, cols;
    std::vector<std::uint32_t> v;

    std::uint32_t& at(std::size_t r, std::size_t c) { return v[r * cols + c]; }
    std::uint32_t get(std::size_t r, std::size_t c) const { return v[r * cols + c]; }

    void scale_row(std::size_t r, std::uint32_t f) {
        for (std::size_t c = 0; c < cols; ++c) at(r, c) = spec->mul(get(r, c), f);
    }
    // row[dst] -= f * row[src]
    void subtract_scaled(std::size_t dst, std::size_t src, std::uint32_t f) {
        if (f == 0) return;
        for (std::size_t c = 0; c < cols; ++c)
            at(dst, c) = spec->sub(get(dst, c), spec->mul(f, get(src, c)));
    }

    std::vector<std::size_t> eliminate(std::size_t elim_cols) {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < elim_cols && row < rows; ++col) {
            std::size_t p = row;
            while (p < rows && get(p, col) == 0) ++p;
            if (p == rows) continue;
            std::swap_ranges(v.begin() + static_cast<std::ptrdiff_t>(p * cols),
                             v.begin() + static_cast<std::ptrdiff_t>((p + 1) * cols),
                             v.begin() + static_cast<std::ptrdiff_t>(row * cols));
            scale_row(row, spec->inv(get(row, col)));
            for (std::size_t r = 0; r < rows; ++r) {
                if (r != row) subtract_scaled(r, row, get(r, col));
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }
};

Grid to_grid(const Matrix& m) {
    Grid g{&m.spec(), m.rows(), m.cols(), {}};
    g.v.resize(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) g.at(r, c) = m.at(r, c);
    return g;
}

}  // namespace

RrefResult rref(const Matrix& m) {
    Grid g = to_grid(m);
    std::vector<std::size_t> pivots = g.eliminate(m.cols());
    Matrix out(m.spec(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, g.get(r, c));
    return {out, pivots};
}

std::size_t rank(const Matrix& m) {
    Grid g = to_grid(m);
    return g.eliminate(m.cols()).size();
}

Matrix null_space(const Matrix& m) {
    RrefResult rr = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;

    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> x(n, 0);
        x[free] = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            x[rr.pivots[i]] = m.spec().neg(rr.reduced.at(i, free));
        basis.push_back(std::move(x));
    }
    return Matrix::from_rows(m.spec(), n, basis);
}

Solution solve(const Matrix& m, std::span<const std::uint32_t> b) {
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
    Grid g{&m.spec(), m.rows(), m.cols() + 1, {}};
    g.v.resize(g.rows * g.cols);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) g.at(r, c) = m.at(r, c);
        if (b[r] >= m.spec().q()) throw std::invalid_argument("right-hand side entry outside field");
        g.at(r, m.cols()) = b[r];
    }
    std::vector<std::size_t> pivots = g.eliminate(m.cols());
    // inconsistent iff some row is (0 ... 0 | nonzero)
    for (std::size_t r = pivots.size(); r < g.rows; ++r) {
        if (g.get(r, m.cols()) != 0) return {SolveStatus::inconsistent, {}};
    }
    std::vector<std::uint32_t> x(m.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = g.get(i, m.cols());
    return {pivots.size() == m.cols() ? SolveStatus::unique : SolveStatus::underdetermined,
            std::move(x)};
}

bool columns_dependent(const Matrix& m, std::span<const std::size_t> idx) {
    std::vector<std::size_t> seen(idx.begin(), idx.end());
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i] >= m.cols()) throw std::out_of_range("column index out of range");
        if (i > 0 && seen[i] == seen[i - 1])
            throw std::invalid_argument("duplicate column index in selection");
    }
    if (idx.empty()) return false;
    return rank(select_columns(m, idx)) < idx.size();
}

Matrix select_columns(const Matrix& m, std::span<const std::size_t> idx) {
    Matrix out(m.spec(), m.rows(), idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= m.cols()) throw std::out_of_range("column index out of range");
        for (std::size_t r = 0; r < m.rows(); ++r) out.set(r, j, m.at(r, idx[j]));
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.spec(), m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(c, r, m.at(r, c));
    return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
    if (!(top.spec() == bottom.spec()) || top.cols() != bottom.cols())
        throw std::invalid_argument("vstack shape or field mismatch");
    Matrix out(top.spec(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) out.set(r, c, top.at(r, c));
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) out.set(top.rows() + r, c, bottom.at(r, c));
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (!(a.spec() == b.spec())) throw FieldMismatchError("matrix product across fields");
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    const FieldSpec& f = a.spec();
    Matrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::uint32_t acc = 0;
            for (std::size_t t = 0; t < a.cols(); ++t)
                acc = f.add(acc, f.mul(a.at(i, t), b.at(t, j)));
            out.set(i, j, acc);
        }
    }
    return out;
}

std::vector<std::uint32_t> vec_mat(std::span<const std::uint32_t> v, const Matrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix shape mismatch");
    const FieldSpec& f = m.spec();
    std::vector<std::uint32_t> out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (v[r] == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[c] = f.add(out[c], f.mul(v[r], m.at(r, c)));
    }
    return out;
}

std::vector<std::uint32_t> mat_vec(const Matrix& m, std::span<const std::uint32_t> x) {
    if (x.size() != m.cols()) throw std::invalid_argument("matrix-vector shape mismatch");
    const FieldSpec& f = m.spec();
    std::vector<std::uint32_t> out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint32_t acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m.at(r, c), x[c]));
        out[r] = acc;
    }
    return out;
}

IncrementalBasis::IncrementalBasis(FieldSpec spec, std::size_t dim) : spec_(spec), dim_(dim) {}

std::size_t IncrementalBasis::reduce(std::vector<std::uint32_t>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint32_t f = v[leads_[i]];
        if (f == 0) continue;
        for (std::size_t c = leads_[i]; c < dim_; ++c)
            v[c] = spec_.sub(v[c], spec_.mul(f, rows_[i][c]));
    }
    for (std::size_t c = 0; c < dim_; ++c)
        if (v[c] != 0) return c;
    return dim_;
}

bool IncrementalBasis::try_insert(std::vector<std::uint32_t> v) {
    if (v.size() != dim_) throw std::invalid_argument("basis vector dimension mismatch");
    std::size_t lead = reduce(v);
    if (lead == dim_) return false;
    std::uint32_t norm = spec_.inv(v[lead]);
    for (std::size_t c = lead; c < dim_; ++c) v[c] = spec_.mul(v[c], norm);
    // keep rows ordered by leading index so reduce() stays a single pass
    std::size_t pos = 0;
    while (pos < leads_.size() && leads_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    leads_.insert(leads_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    return true;
}

bool IncrementalBasis::in_span(std::vector<std::uint32_t> v) const {
    if (v.size() != dim_) throw std::invalid_argument("basis vector dimension mismatch");
    return reduce(v) == dim_;
}

}  // namespace lrc
