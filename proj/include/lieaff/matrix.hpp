#pragma once

#include "lieaff/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lieaff {

/// Column vector over the rationals.
using Vector = std::vector<Rational>;

Vector zeroVector(std::size_t n);
Vector unitVector(std::size_t n, std::size_t i);
bool isZero(std::span<const Rational> v);
/// y += s * x
void axpy(const Rational& s, std::span<const Rational> x, std::span<Rational> y);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix fromRows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix fromColumns(const std::vector<Vector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;

    Vector operator*(std::span<const Rational> x) const;
    Matrix operator*(const Matrix& other) const;
    Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Reduced row echelon form. `pivots[r]` is the pivot column of row r.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; the pivot of each column is the first nonzero
/// entry at or below the current row.
RowEchelon rowReduce(Matrix a);

std::size_t rank(const Matrix& a);

/// Basis of {v : A v = 0}, one vector per free column (free entry 1).
std::vector<Vector> kernelBasis(const Matrix& a);

struct LinearSolution {
    std::optional<Vector> particular; // empty iff infeasible
    std::vector<Vector> kernel;

    bool feasible() const { return particular.has_value(); }
};

/// Solves A x = b. The particular solution sets every free variable to 0.
LinearSolution solveLinear(const Matrix& a, std::span<const Rational> b);

Rational determinant(const Matrix& a);

/// Inverse of a square matrix; throws if singular.
Matrix inverse(const Matrix& a);

/// Row-reduced basis of the span of `vectors` (deterministic).
std::vector<Vector> spanBasis(const std::vector<Vector>& vectors, std::size_t n);

} // namespace lieaff
