#pragma once

#include "lieaff/lie_algebra.hpp"

#include <cstdint>
#include <optional>

namespace lieaff {

/// Bilinear product on a vector space, stored as the full table of values on
/// basis pairs. No symmetry is assumed. For a fixed X the partial map
/// Y -> product(X, Y) is the left multiplication f(X).
class BilinearProduct {
public:
    BilinearProduct() = default;
    explicit BilinearProduct(std::size_t dim) : dim_(dim), table_(dim * dim, Vector(dim)) {}

    std::size_t dim() const { return dim_; }
    const Vector& at(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    Vector& at(std::size_t i, std::size_t j) { return table_[i * dim_ + j]; }

    Vector apply(std::span<const Rational> x, std::span<const Rational> y) const;
    /// Matrix of f(e_i): column j is product(e_i, e_j).
    Matrix leftMultiplication(std::size_t i) const;

    friend bool operator==(const BilinearProduct&, const BilinearProduct&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Vector> table_;
};

struct ContactReport {
    KForm form;
    Rational scalar; // (omega ^ (d omega)^p)(e_1, ..., e_{2p+1})
    bool isContact = false;
};

/// Largest dimension accepted by `wedgeEvalTop`.
inline constexpr std::size_t kMaxWedgeDim = 9;

/// (f_1 ^ ... ^ f_m)(e_1, ..., e_n) by enumerating complementary shuffles.
Rational wedgeEvalTop(const std::vector<KForm>& forms, std::size_t n);

ContactReport contactTest(const LieAlgebra& L, const KForm& omega);

struct ContactSearch {
    std::optional<ContactReport> found;
    std::uint64_t seed = 0;
    std::size_t attempts = 0;       // budget of random draws
    std::vector<ContactReport> tried; // every form tested, in order
    bool probabilistic = true;      // a miss is never a proof of nonexistence
};

inline constexpr std::uint64_t kDefaultSeed = 20061014;

/// Dual basis first, then `attempts` seeded random integer forms with entries
/// in [-3, 3] that do not vanish on the center.
ContactSearch searchContactForm(const LieAlgebra& L, std::size_t attempts, std::uint64_t seed = kDefaultSeed);

struct SymplecticStatus {
    bool nondegenerate = false;
    bool closed = false;

    bool symplectic() const { return nondegenerate && closed; }
};

SymplecticStatus symplecticCheck(const LieAlgebra& L, const KForm& theta);

struct AffineDefects {
    /// (i, j), i < j: product(e_i,e_j) - product(e_j,e_i) - [e_i,e_j].
    std::vector<VectorDefect> torsion;
    /// (i, j, k), i < j: C(e_i, e_j, e_k); C is antisymmetric in i, j.
    std::vector<VectorDefect> curvature;

    bool affine() const { return torsion.empty() && curvature.empty(); }
};

/// Brute-force check of both left-symmetric axioms over all basis tuples.
AffineDefects verifyAffine(const LieAlgebra& L, const BilinearProduct& nabla);

/// Canonical left-symmetric product of a symplectic Lie algebra:
/// theta(nabla(X, Y), Z) = -theta(Y, [X, Z]).
BilinearProduct affineFromSymplectic(const LieAlgebra& L, const KForm& theta);

/// Triples with theta(nabla(e_i,e_j), e_k) + theta(e_j, [e_i,e_k]) != 0.
std::vector<ScalarDefect> definingRelationDefects(const LieAlgebra& L, const KForm& theta,
                                                  const BilinearProduct& nabla);

/// Is theta = d(alpha) for some 1-form alpha? Returns a primitive if so.
std::optional<KForm> exactPrimitive(const LieAlgebra& L, const KForm& theta);

} // namespace lieaff
