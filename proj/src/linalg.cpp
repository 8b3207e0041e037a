#include "tanaka/linalg.hpp"

#include "tanaka/errors.hpp"

#include <utility>

namespace tanaka {

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v = zero_vector(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector operator*(const Scalar& c, const Vector& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

void axpy(Vector& a, const Scalar& c, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    if (is_zero(c)) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(b[i])) a[i] += c * b[i];
}

Vector normalized_leading_one(Vector v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (is_zero(v[i])) continue;
        const Scalar inv = 1 / v[i];
        for (std::size_t j = i; j < v.size(); ++j) v[j] *= inv;
        break;
    }
    return v;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw DimensionMismatch("column length differs from row count");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::from_entries(std::size_t rows, std::size_t cols, Vector entries) {
    if (entries.size() != rows * cols) throw DimensionMismatch("entry count differs from shape");
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(entries);
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const { return tanaka::is_zero(data_); }

bool Matrix::is_skew() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            if ((*this)(r, c) != -(*this)(c, r)) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    Matrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!is_zero(b(k, j))) p(i, j) += aik * b(k, j);
        }
    return p;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector r = zero_vector(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!is_zero(a(i, k)) && !is_zero(v[k])) r[i] += a(i, k) * v[k];
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape mismatch");
    return Matrix::from_entries(a.rows(), a.cols(), a.entries() + b.entries());
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference shape mismatch");
    return Matrix::from_entries(a.rows(), a.cols(), a.entries() - b.entries());
}

Matrix operator*(const Scalar& c, const Matrix& a) {
    return Matrix::from_entries(a.rows(), a.cols(), c * a.entries());
}

// ---------------------------------------------------------------- elimination

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
    std::size_t lead_row = 0;
    if (pivots) pivots->clear();
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != lead_row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
        const Scalar inv = 1 / m(lead_row, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || is_zero(m(r, c))) continue;
            const Scalar f = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(lead_row, j))) m(r, j) -= f * m(lead_row, j);
        }
        if (pivots) pivots->push_back(c);
        ++lead_row;
    }
    return m;
}

std::size_t rank(const Matrix& m) {
    RowEchelon e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.add(m.row_vector(r));
    return e.rank();
}

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        const Scalar inv = 1 / a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (is_zero(a(r, c))) continue;
            const Scalar f = a(r, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

// ---------------------------------------------------------------- RowEchelon

Vector RowEchelon::reduce(Vector v) const {
    if (v.size() != width_) throw DimensionMismatch("row width mismatch");
    for (const auto& [pivot, row] : rows_) {
        if (is_zero(v[pivot])) continue;
        const Scalar f = v[pivot];
        for (std::size_t j = pivot; j < width_; ++j)
            if (!is_zero(row[j])) v[j] -= f * row[j];
    }
    return v;
}

bool RowEchelon::add(Vector row) {
    row = reduce(std::move(row));
    std::size_t pivot = 0;
    while (pivot < width_ && is_zero(row[pivot])) ++pivot;
    if (pivot == width_) return false;
    const Scalar inv = 1 / row[pivot];
    for (std::size_t j = pivot; j < width_; ++j) row[j] *= inv;
    for (auto& [p, other] : rows_) {
        if (is_zero(other[pivot])) continue;
        const Scalar f = other[pivot];
        for (std::size_t j = pivot; j < width_; ++j)
            if (!is_zero(row[j])) other[j] -= f * row[j];
    }
    rows_.emplace(pivot, std::move(row));
    return true;
}

std::vector<Vector> RowEchelon::rows() const {
    std::vector<Vector> out;
    out.reserve(rows_.size());
    for (const auto& [p, r] : rows_) out.push_back(r);
    return out;
}

std::vector<std::size_t> RowEchelon::pivots() const {
    std::vector<std::size_t> out;
    for (const auto& [p, r] : rows_) out.push_back(p);
    return out;
}

std::vector<Vector> RowEchelon::kernel() const {
    // One vector per free column f: x_f = 1, x_p = -row_p[f]. Listing them with
    // descending f gives an echelon form; RREF-normalize through a fresh reducer.
    std::vector<Vector> raw;
    for (std::size_t f = width_; f-- > 0;) {
        if (rows_.count(f)) continue;
        Vector v = zero_vector(width_);
        v[f] = 1;
        for (const auto& [p, r] : rows_)
            if (!is_zero(r[f])) v[p] = -r[f];
        raw.push_back(std::move(v));
    }
    RowEchelon k(width_);
    for (auto& v : raw) k.add(std::move(v));
    return k.rows();
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    RowEchelon e(ambient_dim);
    for (const auto& v : vectors) e.add(v);
    Subspace s(ambient_dim);
    s.basis_ = e.rows();
    s.pivots_ = e.pivots();
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < ambient_dim; ++i) vs.push_back(unit_vector(ambient_dim, i));
    return span(ambient_dim, vs);
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes) {
    std::vector<Vector> vs;
    for (auto i : axes) vs.push_back(unit_vector(ambient_dim, i));
    return span(ambient_dim, vs);
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspace ambient dimensions differ");
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector does not match subspace ambient dimension");
    // In RREF the coordinate on basis vector i is the entry at its pivot.
    Vector coords(basis_.size());
    Vector rest = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        coords[i] = v[pivots_[i]];
        axpy(rest, -coords[i], basis_[i]);
    }
    if (!tanaka::is_zero(rest)) return std::nullopt;
    return coords;
}

Subspace kernel_basis(const Matrix& m) {
    RowEchelon e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.add(m.row_vector(r));
    return Subspace::span(m.cols(), e.kernel());
}

Subspace image(const Matrix& m) {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    return Subspace::span(m.rows(), cols);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace ambient dimensions differ");
    std::vector<Vector> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient_dim(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace ambient dimensions differ");
    const std::size_t n = a.ambient_dim();
    // Solve sum_i s_i a_i - sum_j t_j b_j = 0; each solution yields sum_i s_i a_i.
    std::vector<Vector> cols = a.basis();
    for (const auto& v : b.basis()) cols.push_back(Scalar(-1) * v);
    if (cols.empty()) return Subspace(n);
    const Subspace k = kernel_basis(Matrix::from_columns(cols, n));
    std::vector<Vector> meet;
    for (const auto& sol : k.basis()) {
        Vector w = zero_vector(n);
        for (std::size_t i = 0; i < a.dim(); ++i) axpy(w, sol[i], a.basis()[i]);
        meet.push_back(std::move(w));
    }
    return Subspace::span(n, meet);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (m.rows() != b.size()) throw DimensionMismatch("right-hand side length differs from row count");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    std::vector<std::size_t> pivots;
    const Matrix red = rref(std::move(aug), &pivots);
    Vector x = zero_vector(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols()) return std::nullopt;
        x[pivots[i]] = red(i, m.cols());
    }
    return x;
}

} // namespace tanaka
