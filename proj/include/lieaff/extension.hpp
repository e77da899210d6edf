#pragma once

#include "lieaff/structures.hpp"

#include <string>

namespace lieaff {

/// g~ = g + R with [(X,a),(Y,l)] = ([X,Y], theta(X,Y)). The central basis
/// vector of `extended` has index base.dim().
struct CentralExtension {
    LieAlgebra base;
    KForm theta;
    LieAlgebra extended;

    std::size_t centralIndex() const { return base.dim(); }
};

/// Throws if theta is not a cocycle. When theta is symplectic and the base
/// nilpotent, also asserts that the dual of the central vector is contact
/// and that the center is exactly the new direction.
CentralExtension centralExtend(const LieAlgebra& base, const KForm& theta);

/// Parameters of a candidate product on g~ built from a product on g:
///   nabla~((X,0),(Y,0)) = (nabla(X,Y), phi(X,Y))
///   nabla~((X,0),(0,1)) = nabla~((0,1),(X,0)) = (V_X, a_X)
///   nabla~((0,1),(0,1)) = (W0, rho)
/// Nothing is enforced here; admissibility is checked by the operations.
struct LiftData {
    Matrix phi;            // n x n, phi(e_i, e_j)
    std::vector<Vector> V; // V[i] = V_{e_i}
    Vector a;              // a[i] = a_{e_i}, the form alpha
    Vector W0;
    Rational rho;

    std::size_t dim() const { return phi.rows(); }

    static LiftData zero(std::size_t n);
    /// phi = theta / 2, everything else zero.
    static LiftData half(const KForm& theta);

    Vector vOf(std::span<const Rational> x) const;
    Rational aOf(std::span<const Rational> x) const;
    Rational phiOf(std::span<const Rational> x, std::span<const Rational> y) const;
    /// Throws unless every component has dimension n.
    void validate(std::size_t n) const;
};

BilinearProduct buildLift(const CentralExtension& E, const BilinearProduct& nabla, const LiftData& D);

/// Torsion defects of the lift on g~, pairs i < j.
std::vector<VectorDefect> torsionDefectLift(const CentralExtension& E, const BilinearProduct& nabla,
                                            const LiftData& D);

/// C(u,v,w) = nabla~(u, nabla~(v,w)) - nabla~(v, nabla~(u,w)) - nabla~([u,v], w).
Vector curvatureC(const LieAlgebra& extended, const BilinearProduct& lifted, std::span<const Rational> u,
                  std::span<const Rational> v, std::span<const Rational> w);

/// Nonzero C over the basis triples of g~ with i < j (C is antisymmetric in i, j).
std::vector<VectorDefect> curvatureDefect(const CentralExtension& E, const BilinearProduct& nabla,
                                          const LiftData& D);

struct Lemma2Entry {
    IndexTuple where;
    Vector direct;    // curvatureC on the corresponding basis vectors
    Vector expansion; // the expanded formula
};

struct Lemma2Mismatch {
    int item;
    IndexTuple where;
    Vector difference;
};

/// The three expansions of C on mixed arguments, each evaluated independently
/// of curvatureC and compared with it.
///   item 1: C((X,0),(Y,0),(Z,0)), triples i < j; valid when nabla is flat.
///   item 2: C((X,0),(0,1),(Y,0)), all pairs.
///   item 3: C((0,1),(Y,0),(0,1)), all j.
/// mixed holds C((X,0),(Y,0),(0,1)) for i < j. In any torsion-free product
/// mixed(X,Y) = item2(X,Y) - item2(Y,X), so vanishing item 2 forces mixed = 0.
struct Lemma2Report {
    std::vector<Lemma2Entry> item1, item2, item3;
    std::vector<Lemma2Entry> mixed;
    std::vector<Lemma2Mismatch> mismatches;
    std::vector<VectorDefect> bianchiMismatches;

    bool expansionsAgree() const { return mismatches.empty(); }
    bool item2Vanishes() const;
    bool mixedVanishes() const;
    /// If every item-2 value vanishes then every mixed value vanishes.
    bool propositionHolds() const { return !item2Vanishes() || mixedVanishes(); }
};

Lemma2Report lemma2Residuals(const CentralExtension& E, const BilinearProduct& nabla, const LiftData& D);

/// phi(e_j,e_k) V_i - phi(e_i,e_k) V_j - theta(e_i,e_j) V_k, triples i < j.
std::vector<VectorDefect> necessaryV(const CentralExtension& E, const LiftData& D);

struct StarStarResiduals {
    /// 1/2 theta(Y,Z) V_X - 1/2 theta(X,Z) V_Y - theta(X,Y) V_Z
    std::vector<VectorDefect> first;
    /// theta([X,Y],Z) + theta(Y,Z) a_X - theta(X,Z) a_Y - 2 theta(X,Y) a_Z
    std::vector<ScalarDefect> second;

    bool holds() const { return first.empty() && second.empty(); }
};

/// Both relations over all basis triples (i < j for the first, all for the second).
StarStarResiduals starStarCheck(const LieAlgebra& L, const KForm& theta, const std::vector<Vector>& V,
                                std::span<const Rational> a);

struct RepresentationCheck {
    bool isRepresentation = true;
    std::vector<ScalarDefect> witnesses; // pairs i < j with a([e_i,e_j]) != 0
};

RepresentationCheck isOneDimRep(const LieAlgebra& L, std::span<const Rational> a);

enum class TheoremCase { TrivialAlpha, NontrivialAlpha, NotApplicable };

std::string caseName(TheoremCase c);

struct ConditionResult {
    std::string name;
    bool pass = true;
    std::vector<VectorDefect> witnesses; // scalars are stored as 1-vectors
};

/// Outcome of the classification of a lift.
///
/// `isAffine` comes only from the brute-force oracle. The theorem conditions
/// are reported alongside; any disagreement lands in `findings`:
///   "theorem-gap"                  conditions hold, oracle not flat
///   "soundness-failure"            conditions and auxiliary hold, oracle not flat
///   "theorem-necessity-violation"  oracle flat, some condition fails
struct Verdict {
    bool isAffine = false;
    TheoremCase theoremCase = TheoremCase::NotApplicable;
    std::vector<ConditionResult> conditions;
    std::vector<ConditionResult> violated;
    /// a_{nabla(x,y)} = a_x a_y for all basis pairs.
    ConditionResult auxiliary;
    std::vector<VectorDefect> torsionDefects;
    std::vector<VectorDefect> curvatureDefects;
    std::vector<std::string> findings;

    bool theoremConditionsHold() const { return violated.empty(); }
    bool agrees() const { return isAffine == theoremConditionsHold(); }
};

/// Requires nabla to satisfy the defining relation for theta on the base.
Verdict theoremVerdict(const CentralExtension& E, const BilinearProduct& nabla, const LiftData& D);

struct LiftCandidate {
    Matrix phi;
    Verdict verdict;
};

/// Affine family phi = particular + span(directions); directions are
/// symmetric, particular - particular^T = theta.
struct LiftSpace {
    bool feasible = false;
    Vector alpha;
    Matrix particular;
    std::vector<Matrix> directions;
    /// Verdicts for particular and particular + each direction.
    std::vector<LiftCandidate> checked;
    std::size_t theoremGapCount = 0;

    std::size_t dimension() const { return directions.size(); }
};

/// phi(x,nabla(y,z)) - phi(y,nabla(x,z)) - phi([x,y],z) = 0 with V = a = W0 = rho = 0.
LiftSpace solveLiftTrivial(const LieAlgebra& L, const KForm& theta, const BilinearProduct& nabla);

/// phi(x,nabla(y,z)) - phi(y,nabla(x,z)) - phi([x,y],z) = -a_x phi(y,z) + a_y phi(x,z) + a_z theta(x,y)
/// over all triples; each point is then classified with V = W0 = 0, rho = 0.
LiftSpace solveLiftGivenAlpha(const LieAlgebra& L, const KForm& theta, const BilinearProduct& nabla,
                              std::span<const Rational> a);

} // namespace lieaff
