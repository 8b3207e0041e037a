#pragma once

#include "tanaka/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace tanaka {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);
/// a += c * b
void axpy(Vector& a, const Scalar& c, const Vector& b);
/// Scales so that the first nonzero entry is 1. Zero vectors are returned unchanged.
Vector normalized_leading_one(Vector v);

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;
    Vector column(std::size_t c) const;
    /// Row-major flattening of all entries.
    const Vector& entries() const noexcept { return data_; }
    static Matrix from_entries(std::size_t rows, std::size_t cols, Vector entries);

    Matrix transpose() const;
    bool is_zero() const;
    bool is_skew() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& a);

/// Reduced row echelon form with leftmost pivots. `pivots`, when given,
/// receives the pivot column of each nonzero row.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Incrementally maintained reduced row echelon form. Rows are stored by
/// pivot column, each with a unit pivot and zeros in every other pivot column.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t width) : width_(width) {}

    /// Reduces `row` against the current rows; inserts it if a nonzero
    /// remainder is left. Returns true when the rank grew.
    bool add(Vector row);
    /// Remainder of `v` after reduction by the stored rows.
    Vector reduce(Vector v) const;

    std::size_t width() const noexcept { return width_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    /// Rows ordered by pivot column; this is the RREF.
    std::vector<Vector> rows() const;
    std::vector<std::size_t> pivots() const;
    /// Basis of the solutions of `rows * x = 0`, RREF-normalized.
    std::vector<Vector> kernel() const;

private:
    std::size_t width_;
    std::map<std::size_t, Vector> rows_;
};

/// Subspace of Q^n held by its unique RREF basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static Subspace full(std::size_t ambient_dim);
    static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    bool is_zero() const noexcept { return basis_.empty(); }
    const std::vector<Vector>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    std::optional<Vector> coordinates(const Vector& v) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

/// RREF basis of {v : M v = 0}.
Subspace kernel_basis(const Matrix& m);
/// Column space of M.
Subspace image(const Matrix& m);
Subspace sum(const Subspace& a, const Subspace& b);
/// Throws DimensionMismatch when ambient dimensions differ.
Subspace intersect(const Subspace& a, const Subspace& b);
/// Particular solution with free variables zero, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

} // namespace tanaka
