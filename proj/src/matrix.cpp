#include "lieaff/matrix.hpp"

#include "lieaff/error.hpp"

#include <utility>

namespace lieaff {

Vector zeroVector(std::size_t n) { return Vector(n); }

Vector unitVector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool isZero(std::span<const Rational> v) {
    for (const auto& x : v)
        if (!x.isZero()) return false;
    return true;
}

void axpy(const Rational& s, std::span<const Rational> x, std::span<Rational> y) {
    if (x.size() != y.size()) throw Error("axpy: dimension mismatch");
    if (s.isZero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].isZero()) y[i] += s * x[i];
}

Vector operator+(const Vector& a, const Vector& b) {
    Vector r = a;
    axpy(1, b, r);
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    Vector r = a;
    axpy(-1, b, r);
    return r;
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector r(v.size());
    axpy(s, v, r);
    return r;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw Error("dot: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].isZero() && !b[i].isZero()) s += a[i] * b[i];
    return s;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::fromRows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error("fromRows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::fromColumns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw Error("fromColumns: ragged columns");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::operator*(std::span<const Rational> x) const {
    if (x.size() != cols_) throw Error("matrix-vector product: dimension mismatch");
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) y[r] = dot(row(r), x);
    return y;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw Error("matrix product: dimension mismatch");
    Matrix m(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (a.isZero()) continue;
            axpy(a, other.row(k), m.row(r));
        }
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RowEchelon rowReduce(Matrix a) {
    RowEchelon out;
    std::size_t pivotRow = 0;
    for (std::size_t c = 0; c < a.cols() && pivotRow < a.rows(); ++c) {
        std::size_t r = pivotRow;
        while (r < a.rows() && a(r, c).isZero()) ++r;
        if (r == a.rows()) continue;
        if (r != pivotRow)
            for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(r, k), a(pivotRow, k));
        const Rational inv = Rational(1) / a(pivotRow, c);
        for (std::size_t k = c; k < a.cols(); ++k) a(pivotRow, k) *= inv;
        for (std::size_t other = 0; other < a.rows(); ++other) {
            if (other == pivotRow || a(other, c).isZero()) continue;
            const Rational factor = -a(other, c);
            axpy(factor, a.row(pivotRow), a.row(other));
        }
        out.pivots.push_back(c);
        ++pivotRow;
    }
    out.reduced = std::move(a);
    return out;
}

std::size_t rank(const Matrix& a) { return rowReduce(a).pivots.size(); }

namespace {

std::vector<Vector> kernelFromEchelon(const RowEchelon& e, std::size_t cols) {
    std::vector<bool> isPivot(cols, false);
    for (auto p : e.pivots) isPivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (isPivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::vector<Vector> kernelBasis(const Matrix& a) { return kernelFromEchelon(rowReduce(a), a.cols()); }

LinearSolution solveLinear(const Matrix& a, std::span<const Rational> b) {
    if (a.rows() != b.size()) throw Error("solveLinear: matrix has " + std::to_string(a.rows()) +
                                          " rows but right-hand side has " + std::to_string(b.size()));
    Matrix augmented(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
        augmented(r, a.cols()) = b[r];
    }
    const RowEchelon e = rowReduce(std::move(augmented));
    LinearSolution out;
    std::vector<std::size_t> pivots = e.pivots;
    const bool inconsistent = !pivots.empty() && pivots.back() == a.cols();
    if (inconsistent) pivots.pop_back();
    RowEchelon coefficientPart{e.reduced, pivots};
    out.kernel = kernelFromEchelon(coefficientPart, a.cols());
    if (!inconsistent) {
        Vector x(a.cols());
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = e.reduced(r, a.cols());
        out.particular = std::move(x);
    }
    return out;
}

Rational determinant(const Matrix& input) {
    if (input.rows() != input.cols()) throw Error("determinant of non-square matrix");
    Matrix a = input;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && a(r, c).isZero()) ++r;
        if (r == n) return 0;
        if (r != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a(r, k), a(c, k));
            det = -det;
        }
        det *= a(c, c);
        const Rational inv = Rational(1) / a(c, c);
        for (std::size_t below = c + 1; below < n; ++below) {
            if (a(below, c).isZero()) continue;
            const Rational factor = -a(below, c) * inv;
            axpy(factor, a.row(c), a.row(below));
        }
    }
    return det;
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw Error("inverse of non-square matrix");
    const std::size_t n = a.rows();
    Matrix augmented(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
        augmented(r, n + r) = 1;
    }
    const RowEchelon e = rowReduce(std::move(augmented));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Error("inverse of singular matrix");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

std::vector<Vector> spanBasis(const std::vector<Vector>& vectors, std::size_t n) {
    if (vectors.empty()) return {};
    const RowEchelon e = rowReduce(Matrix::fromRows(vectors, n));
    std::vector<Vector> basis;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const auto row = e.reduced.row(r);
        basis.emplace_back(row.begin(), row.end());
    }
    return basis;
}

} // namespace lieaff
