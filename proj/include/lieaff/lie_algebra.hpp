#pragma once

#include "lieaff/matrix.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lieaff {

/// Index tuple of basis elements, 0-based. Files and CLI output shift to 1-based.
using IndexTuple = std::vector<std::size_t>;

struct VectorDefect {
    IndexTuple where;
    Vector value;
};

struct ScalarDefect {
    IndexTuple where;
    Rational value;
};

/// One summand c * e_k of a basis bracket.
struct Term {
    std::size_t k;
    Rational c;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Nonzero bracket [e_i, e_j] = sum_k c_{ij}^k e_k with i < j.
struct BracketSpec {
    std::size_t i;
    std::size_t j;
    std::vector<Term> terms;
};

/// Finite-dimensional algebra given by antisymmetric structure constants.
///
/// Only pairs i < j are stored; [e_j, e_i] = -[e_i, e_j] and [e_i, e_i] = 0
/// follow from the storage. The Jacobi identity is not assumed: call
/// `jacobiDefect` (or `requireLie`) before using an instance as a Lie algebra.
class LieAlgebra {
public:
    using Constants = std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>>;

    LieAlgebra() = default;
    LieAlgebra(std::string name, std::vector<std::string> basisNames, const std::vector<BracketSpec>& brackets);

    static LieAlgebra abelian(std::size_t dim, std::string name = {});
    static std::vector<std::string> defaultNames(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& basisNames() const { return basisNames_; }
    /// Sparse constants, keys (i, j) with i < j, zero coefficients removed.
    const Constants& constants() const { return constants_; }
    bool isAbelian() const { return constants_.empty(); }

    /// [e_i, e_j] as a dense column.
    const Vector& bracketBasis(std::size_t i, std::size_t j) const { return dense_[i * dim_ + j]; }
    Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const;

private:
    std::string name_;
    std::size_t dim_ = 0;
    std::vector<std::string> basisNames_;
    Constants constants_;
    std::vector<Vector> dense_;
};

/// Alternating k-linear form, coefficients keyed by strictly increasing index tuples.
class KForm {
public:
    KForm() = default;
    KForm(std::size_t degree, std::size_t dim);

    /// The dual basis vector e_i^*.
    static KForm dual(std::size_t dim, std::size_t i);
    static KForm fromVector(std::span<const Rational> coefficients);

    std::size_t degree() const { return degree_; }
    std::size_t dim() const { return dim_; }
    const std::map<IndexTuple, Rational>& coeffs() const { return coeffs_; }
    bool isZero() const { return coeffs_.empty(); }

    /// Sets the coefficient at an index tuple in any order; the alternating sign is applied.
    void set(IndexTuple idx, const Rational& c);
    void add(IndexTuple idx, const Rational& c);
    /// Value on basis vectors e_{idx[0]}, ..., e_{idx[k-1]} (any order, repeats give 0).
    Rational onBasis(std::span<const std::size_t> idx) const;
    /// Value on arbitrary arguments (alternating multilinear extension).
    Rational eval(const std::vector<Vector>& args) const;
    /// Shortcut for degree 1.
    Rational eval1(std::span<const Rational> x) const;
    /// Shortcut for degree 2.
    Rational eval2(std::span<const Rational> x, std::span<const Rational> y) const;
    /// Gram matrix theta(e_i, e_j) of a 2-form.
    Matrix matrix() const;
    /// Coefficient vector of a 1-form.
    Vector asVector() const;

    KForm scaled(const Rational& s) const;

    friend bool operator==(const KForm&, const KForm&) = default;

private:
    std::size_t degree_ = 0;
    std::size_t dim_ = 0;
    std::map<IndexTuple, Rational> coeffs_;
};

/// Sign of the permutation sorting `idx`; 0 if it has repeated entries. Sorts in place.
int sortWithSign(IndexTuple& idx);

struct Subspace {
    std::size_t ambient = 0;
    std::vector<Vector> basis;

    std::size_t dim() const { return basis.size(); }
};

/// Triples i < j < k whose cyclic Jacobi sum is nonzero.
std::vector<VectorDefect> jacobiDefect(const LieAlgebra& L);
/// Throws `Error` naming the first Jacobi violation.
void requireLie(const LieAlgebra& L);

std::vector<Subspace> lowerCentralSeries(const LieAlgebra& L);
std::vector<std::size_t> lowerCentralDims(const LieAlgebra& L);
bool isNilpotent(const LieAlgebra& L);
Subspace derivedAlgebra(const LieAlgebra& L);

Subspace center(const LieAlgebra& L);

/// (d omega)(x, y) = -omega([x, y]).
KForm ceDiffOne(const LieAlgebra& L, const KForm& omega);

/// Triples i < j < k with theta([e_i,e_j],e_k) + theta([e_j,e_k],e_i) + theta([e_k,e_i],e_j) != 0.
std::vector<ScalarDefect> cocycleDefect2(const LieAlgebra& L, const KForm& theta);

/// Quotient of L by a one-dimensional center with the induced 2-cocycle.
///
/// The central generator T is normalized so that omega(T) = 1. The complement
/// is chosen greedily from e_1, ..., e_n; each kept e_c is lifted to
/// e_c - omega(e_c) T, so lifts lie in ker omega and
/// [lift(x), lift(y)] = lift([x, y]) + theta(x, y) T.
struct CenterQuotient {
    LieAlgebra quotient;
    KForm theta;
    Vector centralGenerator;
    std::vector<std::size_t> complement;
    /// n x (n-1); column d is the lift of the d-th quotient basis vector.
    Matrix lift;
    /// (n-1) x n; x -> quotient coordinates of x mod T.
    Matrix projection;

    /// n x n change of basis [lift | T]; its columns form the basis in which L
    /// becomes the central extension of the quotient by theta.
    Matrix basisChange() const;
};

CenterQuotient quotientByCenter(const LieAlgebra& L, const KForm& omega);

} // namespace lieaff
