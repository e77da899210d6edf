#include "lieaff/extension.hpp"

#include "lieaff/error.hpp"

namespace lieaff {

namespace {

Vector join(std::span<const Rational> x, const Rational& tail) {
    Vector v(x.begin(), x.end());
    v.push_back(tail);
    return v;
}

Vector scalarWitness(const Rational& r) { return Vector{r}; }

void requireDefiningRelation(const LieAlgebra& L, const KForm& theta, const BilinearProduct& nabla) {
    if (nabla.dim() != L.dim()) throw Error("base product dimension does not match the base algebra");
    const auto defects = definingRelationDefects(L, theta, nabla);
    if (!defects.empty())
        throw Error("hypothesis violation: product does not satisfy theta(nabla(X,Y),Z) = -theta(Y,[X,Z]) (" +
                    std::to_string(defects.size()) + " failing triples)");
}

} // namespace

// ---------------------------------------------------------------------------

CentralExtension centralExtend(const LieAlgebra& base, const KForm& theta) {
    const std::size_t n = base.dim();
    if (theta.degree() != 2 || theta.dim() != n) throw Error("centralExtend expects a 2-form on the base");
    if (!cocycleDefect2(base, theta).empty()) throw Error("2-form is not a cocycle; the extension would violate Jacobi");

    auto names = base.basisNames();
    std::string centralName = "e" + std::to_string(n + 1);
    for (const auto& s : names)
        if (s == centralName) centralName = "z";
    names.push_back(centralName);

    std::vector<BracketSpec> brackets;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            BracketSpec spec{i, j, {}};
            const Vector& b = base.bracketBasis(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!b[k].isZero()) spec.terms.push_back({k, b[k]});
            const Rational c = theta.onBasis(IndexTuple{i, j});
            if (!c.isZero()) spec.terms.push_back({n, c});
            if (!spec.terms.empty()) brackets.push_back(std::move(spec));
        }
    CentralExtension E{base, theta, LieAlgebra(base.name().empty() ? "" : base.name() + "+R", names, brackets)};
    requireLie(E.extended);

    if (n % 2 == 0 && isNilpotent(base) && symplecticCheck(base, theta).symplectic()) {
        if (!contactTest(E.extended, KForm::dual(n + 1, n)).isContact)
            throw Error("centralExtend: dual of the central vector is not contact");
        const Subspace z = center(E.extended);
        if (z.dim() != 1 || z.basis[0] != unitVector(n + 1, n))
            throw Error("centralExtend: center is not the central direction");
    }
    return E;
}

// ---------------------------------------------------------------------------

LiftData LiftData::zero(std::size_t n) { return {Matrix(n, n), std::vector<Vector>(n, Vector(n)), Vector(n), Vector(n), 0}; }

LiftData LiftData::half(const KForm& theta) {
    LiftData d = zero(theta.dim());
    const Matrix g = theta.matrix();
    for (std::size_t i = 0; i < d.dim(); ++i)
        for (std::size_t j = 0; j < d.dim(); ++j) d.phi(i, j) = g(i, j) / 2;
    return d;
}

void LiftData::validate(std::size_t n) const {
    bool ok = phi.rows() == n && phi.cols() == n && V.size() == n && a.size() == n && W0.size() == n;
    for (const auto& v : V) ok = ok && v.size() == n;
    if (!ok) throw Error("lift data does not match base dimension " + std::to_string(n));
}

Vector LiftData::vOf(std::span<const Rational> x) const {
    Vector out(dim());
    for (std::size_t i = 0; i < x.size(); ++i) axpy(x[i], V[i], out);
    return out;
}

Rational LiftData::aOf(std::span<const Rational> x) const { return dot(a, x); }

Rational LiftData::phiOf(std::span<const Rational> x, std::span<const Rational> y) const {
    return dot(x, phi * y);
}

BilinearProduct buildLift(const CentralExtension& E, const BilinearProduct& nabla, const LiftData& D) {
    const std::size_t n = E.base.dim();
    if (nabla.dim() != n) throw Error("buildLift: base product dimension mismatch");
    D.validate(n);
    BilinearProduct lifted(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) lifted.at(i, j) = join(nabla.at(i, j), D.phi(i, j));
        lifted.at(i, n) = join(D.V[i], D.a[i]);
        lifted.at(n, i) = lifted.at(i, n);
    }
    lifted.at(n, n) = join(D.W0, D.rho);
    return lifted;
}

std::vector<VectorDefect> torsionDefectLift(const CentralExtension& E, const BilinearProduct& nabla,
                                            const LiftData& D) {
    const BilinearProduct lifted = buildLift(E, nabla, D);
    const std::size_t m = lifted.dim();
    std::vector<VectorDefect> out;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Vector t = lifted.at(i, j) - lifted.at(j, i) - E.extended.bracketBasis(i, j);
            if (!isZero(t)) out.push_back({{i, j}, std::move(t)});
        }
    return out;
}

Vector curvatureC(const LieAlgebra& extended, const BilinearProduct& lifted, std::span<const Rational> u,
                  std::span<const Rational> v, std::span<const Rational> w) {
    const std::size_t m = extended.dim();
    if (lifted.dim() != m || u.size() != m || v.size() != m || w.size() != m)
        throw Error("curvatureC: dimension mismatch");
    Vector c = lifted.apply(u, lifted.apply(v, w));
    axpy(-1, lifted.apply(v, lifted.apply(u, w)), c);
    axpy(-1, lifted.apply(extended.bracket(u, v), w), c);
    return c;
}

std::vector<VectorDefect> curvatureDefect(const CentralExtension& E, const BilinearProduct& nabla,
                                          const LiftData& D) {
    const BilinearProduct lifted = buildLift(E, nabla, D);
    const std::size_t m = lifted.dim();
    std::vector<VectorDefect> out;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                Vector c = curvatureC(E.extended, lifted, unitVector(m, i), unitVector(m, j), unitVector(m, k));
                if (!isZero(c)) out.push_back({{i, j, k}, std::move(c)});
            }
    return out;
}

// ---------------------------------------------------------------------------

bool Lemma2Report::item2Vanishes() const {
    for (const auto& e : item2)
        if (!isZero(e.direct)) return false;
    return true;
}

bool Lemma2Report::mixedVanishes() const {
    for (const auto& e : mixed)
        if (!isZero(e.direct)) return false;
    return true;
}

Lemma2Report lemma2Residuals(const CentralExtension& E, const BilinearProduct& nabla, const LiftData& D) {
    const std::size_t n = E.base.dim();
    const std::size_t m = n + 1;
    const BilinearProduct lifted = buildLift(E, nabla, D);
    const LieAlgebra& G = E.base;
    const Vector T = unitVector(m, n);
    auto baseE = [&](std::size_t i) { return unitVector(n, i); };
    auto extE = [&](std::size_t i) { return unitVector(m, i); };
    // nabla~((x,0),(0,1)) and nabla~((0,1),(0,1)) read straight from the data.
    auto withCentral = [&](std::span<const Rational> x) { return join(D.vOf(x), D.aOf(x)); };
    const Vector centralSquare = join(D.W0, D.rho);

    Lemma2Report rep;
    auto record = [&](int item, std::vector<Lemma2Entry>& table, IndexTuple where, Vector direct, Vector expansion) {
        Vector diff = expansion - direct;
        if (!isZero(diff)) rep.mismatches.push_back({item, where, diff});
        table.push_back({std::move(where), std::move(direct), std::move(expansion)});
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vector X = baseE(i), Y = baseE(j), Z = baseE(k);
                const Rational scalar = D.phiOf(X, nabla.apply(Y, Z)) - D.phiOf(Y, nabla.apply(X, Z)) -
                                        D.phiOf(G.bracketBasis(i, j), Z);
                Vector expansion = join(Vector(n), scalar);
                axpy(D.phi(j, k), withCentral(X), expansion);
                axpy(-D.phi(i, k), withCentral(Y), expansion);
                axpy(-E.theta.onBasis(IndexTuple{i, j}), withCentral(Z), expansion);
                record(1, rep.item1, {i, j, k}, curvatureC(E.extended, lifted, extE(i), extE(j), extE(k)),
                       std::move(expansion));
            }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector X = baseE(i), Y = baseE(j);
            const Vector VY = D.vOf(Y);
            const Rational aX = D.aOf(X), aY = D.aOf(Y);
            // nabla~((X,0),(V_Y,a_Y)) - nabla~((nabla(X,Y),0),(0,1)) - phi(X,Y) nabla~((0,1),(0,1))
            Vector expansion = join(nabla.apply(X, VY), D.phiOf(X, VY) + aY * aX);
            axpy(aY, join(D.vOf(X), 0), expansion);
            axpy(-1, withCentral(nabla.at(i, j)), expansion);
            axpy(-D.phi(i, j), centralSquare, expansion);
            record(2, rep.item2, {i, n, j}, curvatureC(E.extended, lifted, extE(i), T, extE(j)), std::move(expansion));
        }

    for (std::size_t j = 0; j < n; ++j) {
        const Vector Y = baseE(j);
        const Vector VY = D.vOf(Y);
        const Rational aY = D.aOf(Y);
        // nabla~((0,1),(V_Y,a_Y)) - nabla~((Y,0),(W0,rho))
        Vector expansion = withCentral(VY);
        axpy(aY, centralSquare, expansion);
        axpy(-1, join(nabla.apply(Y, D.W0), D.phiOf(Y, D.W0)), expansion);
        axpy(-D.rho, withCentral(Y), expansion);
        record(3, rep.item3, {n, j, n}, curvatureC(E.extended, lifted, T, extE(j), T), std::move(expansion));
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector direct = curvatureC(E.extended, lifted, extE(i), extE(j), T);
            const Vector& xty = rep.item2[i * n + j].direct;
            const Vector& ytx = rep.item2[j * n + i].direct;
            Vector bianchi = direct - (xty - ytx);
            if (!isZero(bianchi)) rep.bianchiMismatches.push_back({{i, j, n}, std::move(bianchi)});
            rep.mixed.push_back({{i, j, n}, direct, xty - ytx});
        }
    return rep;
}

std::vector<VectorDefect> necessaryV(const CentralExtension& E, const LiftData& D) {
    const std::size_t n = E.base.dim();
    D.validate(n);
    std::vector<VectorDefect> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector r(n);
                axpy(D.phi(j, k), D.V[i], r);
                axpy(-D.phi(i, k), D.V[j], r);
                axpy(-E.theta.onBasis(IndexTuple{i, j}), D.V[k], r);
                if (!isZero(r)) out.push_back({{i, j, k}, std::move(r)});
            }
    return out;
}

StarStarResiduals starStarCheck(const LieAlgebra& L, const KForm& theta, const std::vector<Vector>& V,
                                std::span<const Rational> a) {
    const std::size_t n = L.dim();
    if (theta.dim() != n || V.size() != n || a.size() != n) throw Error("starStarCheck: dimension mismatch");
    auto th = [&](std::size_t x, std::size_t y) { return theta.onBasis(IndexTuple{x, y}); };
    StarStarResiduals out;
    const Rational half(1, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector r(n);
                axpy(half * th(j, k), V[i], r);
                axpy(-half * th(i, k), V[j], r);
                axpy(-th(i, j), V[k], r);
                if (!isZero(r)) out.first.push_back({{i, j, k}, std::move(r)});

                const Rational s = theta.eval2(L.bracketBasis(i, j), unitVector(n, k)) + th(j, k) * a[i] -
                                   th(i, k) * a[j] - 2 * th(i, j) * a[k];
                if (!s.isZero()) out.second.push_back({{i, j, k}, s});
            }
    return out;
}

RepresentationCheck isOneDimRep(const LieAlgebra& L, std::span<const Rational> a) {
    if (a.size() != L.dim()) throw Error("isOneDimRep: dimension mismatch");
    RepresentationCheck out;
    for (const auto& [ij, terms] : L.constants()) {
        const Rational v = dot(a, L.bracketBasis(ij.first, ij.second));
        if (!v.isZero()) out.witnesses.push_back({{ij.first, ij.second}, v});
    }
    out.isRepresentation = out.witnesses.empty();
    return out;
}

std::string caseName(TheoremCase c) {
    switch (c) {
    case TheoremCase::TrivialAlpha: return "trivial-alpha";
    case TheoremCase::NontrivialAlpha: return "nontrivial-alpha";
    case TheoremCase::NotApplicable: return "not-applicable";
    }
    return "not-applicable";
}

// ---------------------------------------------------------------------------

namespace {

/// phi(x,nabla(y,z)) - phi(y,nabla(x,z)) - phi([x,y],z)
Rational vinbergCoboundary(const LieAlgebra& L, const BilinearProduct& nabla, const LiftData& D,
                           std::span<const Rational> x, std::span<const Rational> y, std::span<const Rational> z) {
    return D.phiOf(x, nabla.apply(y, z)) - D.phiOf(y, nabla.apply(x, z)) - D.phiOf(L.bracket(x, y), z);
}

ConditionResult centralPartsVanish(const std::string& name, const LiftData& D, bool includeV, bool includeA) {
    const std::size_t n = D.dim();
    ConditionResult c{name, true, {}};
    if (includeV)
        for (std::size_t i = 0; i < n; ++i)
            if (!isZero(D.V[i])) c.witnesses.push_back({{i, n}, D.V[i]});
    if (includeA)
        for (std::size_t i = 0; i < n; ++i)
            if (!D.a[i].isZero()) c.witnesses.push_back({{i, n}, scalarWitness(D.a[i])});
    if (!isZero(D.W0)) c.witnesses.push_back({{n, n}, D.W0});
    if (!D.rho.isZero()) c.witnesses.push_back({{n, n}, scalarWitness(D.rho)});
    c.pass = c.witnesses.empty();
    return c;
}

} // namespace

Verdict theoremVerdict(const CentralExtension& E, const BilinearProduct& nabla, const LiftData& D) {
    const LieAlgebra& L = E.base;
    const std::size_t n = L.dim();
    requireDefiningRelation(L, E.theta, nabla);
    D.validate(n);

    Verdict v;
    v.torsionDefects = torsionDefectLift(E, nabla, D);
    v.curvatureDefects = curvatureDefect(E, nabla, D);
    v.isAffine = v.torsionDefects.empty() && v.curvatureDefects.empty();

    v.auxiliary.name = "auxiliary-multiplicative";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational r = D.aOf(nabla.at(i, j)) - D.a[i] * D.a[j];
            if (!r.isZero()) v.auxiliary.witnesses.push_back({{i, j}, scalarWitness(r)});
        }
    v.auxiliary.pass = v.auxiliary.witnesses.empty();

    const bool trivial = isZero(D.a);
    const RepresentationCheck rep = isOneDimRep(L, D.a);
    if (trivial) {
        v.theoremCase = TheoremCase::TrivialAlpha;
        v.conditions.push_back(centralPartsVanish("central-products-vanish", D, true, true));
        ConditionResult cocycle{"vinberg-2-cocycle", true, {}};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Rational r =
                        vinbergCoboundary(L, nabla, D, unitVector(n, i), unitVector(n, j), unitVector(n, k));
                    if (!r.isZero()) cocycle.witnesses.push_back({{i, j, k}, scalarWitness(r)});
                }
        cocycle.pass = cocycle.witnesses.empty();
        v.conditions.push_back(std::move(cocycle));
    } else {
        ConditionResult repCond{"alpha-representation", rep.isRepresentation, {}};
        for (const auto& w : rep.witnesses) repCond.witnesses.push_back({w.where, scalarWitness(w.value)});
        v.conditions.push_back(std::move(repCond));
        if (!rep.isRepresentation) {
            v.theoremCase = TheoremCase::NotApplicable;
        } else {
            v.theoremCase = TheoremCase::NontrivialAlpha;
            v.conditions.push_back(centralPartsVanish("central-square-vanishes", D, false, false));
            // Outside Ker alpha the product with (0,1) is read as (0, a_X): V vanishes everywhere.
            ConditionResult vZero{"V-vanishes", true, {}};
            for (std::size_t i = 0; i < n; ++i)
                if (!isZero(D.V[i])) vZero.witnesses.push_back({{i, n}, D.V[i]});
            vZero.pass = vZero.witnesses.empty();
            v.conditions.push_back(std::move(vZero));

            Matrix alphaRow(1, n);
            for (std::size_t i = 0; i < n; ++i) alphaRow(0, i) = D.a[i];
            const std::vector<Vector> kernel = kernelBasis(alphaRow);

            ConditionResult kerCentral{"ker-alpha-central-products-vanish", true, {}};
            for (std::size_t b = 0; b < kernel.size(); ++b) {
                Vector value = join(D.vOf(kernel[b]), D.aOf(kernel[b]));
                if (!isZero(value)) kerCentral.witnesses.push_back({{b}, std::move(value)});
            }
            kerCentral.pass = kerCentral.witnesses.empty();
            v.conditions.push_back(std::move(kerCentral));

            // Witness tuples (b1, b2, k): kernel basis vectors b1 < b2 and base vector e_k.
            ConditionResult twisted{"twisted-vinberg-2-cocycle-on-ker-alpha", true, {}};
            for (std::size_t b1 = 0; b1 < kernel.size(); ++b1)
                for (std::size_t b2 = b1 + 1; b2 < kernel.size(); ++b2)
                    for (std::size_t k = 0; k < n; ++k) {
                        const Vector z = unitVector(n, k);
                        const Rational r = vinbergCoboundary(L, nabla, D, kernel[b1], kernel[b2], z) -
                                           D.a[k] * E.theta.eval2(kernel[b1], kernel[b2]);
                        if (!r.isZero()) twisted.witnesses.push_back({{b1, b2, k}, scalarWitness(r)});
                    }
            twisted.pass = twisted.witnesses.empty();
            v.conditions.push_back(std::move(twisted));
        }
    }
    for (const auto& c : v.conditions)
        if (!c.pass) v.violated.push_back(c);

    if (v.theoremConditionsHold() && !v.isAffine) {
        v.findings.push_back("theorem-gap");
        if (v.auxiliary.pass) v.findings.push_back("soundness-failure");
    }
    if (v.isAffine && !v.theoremConditionsHold()) v.findings.push_back("theorem-necessity-violation");
    return v;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t symIndex(std::size_t p, std::size_t q, std::size_t n) {
    if (p > q) std::swap(p, q);
    // Row-major upper triangle.
    return p * n - p * (p - 1) / 2 + (q - p);
}

LiftSpace solveLift(const LieAlgebra& L, const KForm& theta, const BilinearProduct& nabla,
                    std::span<const Rational> a) {
    const std::size_t n = L.dim();
    requireDefiningRelation(L, theta, nabla);
    if (a.size() != n) throw Error("alpha has " + std::to_string(a.size()) + " entries, expected " + std::to_string(n));
    const std::size_t unknowns = n * (n + 1) / 2;
    const Matrix gram = theta.matrix();

    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                // Coefficients on phi_{pq}:
                //   sum_m nabla(j,k)_m phi_{im} - sum_m nabla(i,k)_m phi_{jm} - sum_m [e_i,e_j]_m phi_{mk}
                //   + a_i phi_{jk} - a_j phi_{ik}   =   a_k theta_{ij}
                Matrix coef(n, n);
                for (std::size_t m = 0; m < n; ++m) {
                    coef(i, m) += nabla.at(j, k)[m];
                    coef(j, m) -= nabla.at(i, k)[m];
                    coef(m, k) -= L.bracketBasis(i, j)[m];
                }
                coef(j, k) += a[i];
                coef(i, k) -= a[j];
                Vector row(unknowns);
                Rational constant;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        if (coef(p, q).isZero()) continue;
                        row[symIndex(p, q, n)] += coef(p, q);
                        constant += coef(p, q) * gram(p, q) / 2;
                    }
                rows.push_back(std::move(row));
                rhs.push_back(a[k] * gram(i, j) - constant);
            }

    LiftSpace space;
    space.alpha.assign(a.begin(), a.end());
    auto symmetricFrom = [&](std::span<const Rational> s) {
        Matrix m(n, n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) m(p, q) = s[symIndex(p, q, n)];
        return m;
    };
    LinearSolution sol;
    if (rows.empty()) {
        sol.particular = Vector(unknowns);
        for (std::size_t u = 0; u < unknowns; ++u) sol.kernel.push_back(unitVector(unknowns, u));
    } else {
        sol = solveLinear(Matrix::fromRows(rows, unknowns), rhs);
    }
    if (!sol.feasible()) return space;
    space.feasible = true;
    space.particular = symmetricFrom(*sol.particular);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) space.particular(p, q) += gram(p, q) / 2;
    for (const auto& k : sol.kernel) space.directions.push_back(symmetricFrom(k));

    const CentralExtension E = centralExtend(L, theta);
    std::vector<Matrix> points{space.particular};
    for (const auto& d : space.directions) {
        Matrix p = space.particular;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) p(r, c) += d(r, c);
        points.push_back(std::move(p));
    }
    for (auto& phi : points) {
        LiftData D = LiftData::zero(n);
        D.phi = phi;
        D.a = space.alpha;
        Verdict verdict = theoremVerdict(E, nabla, D);
        if (verdict.theoremConditionsHold() && !verdict.isAffine) ++space.theoremGapCount;
        space.checked.push_back({std::move(phi), std::move(verdict)});
    }
    return space;
}

} // namespace

LiftSpace solveLiftTrivial(const LieAlgebra& L, const KForm& theta, const BilinearProduct& nabla) {
    LiftSpace space = solveLift(L, theta, nabla, Vector(L.dim()));
    for (const auto& c : space.checked)
        if (!c.verdict.isAffine) throw Error("solveLiftTrivial: solution failed the flatness oracle");
    return space;
}

LiftSpace solveLiftGivenAlpha(const LieAlgebra& L, const KForm& theta, const BilinearProduct& nabla,
                              std::span<const Rational> a) {
    if (a.size() != L.dim()) throw Error("alpha has wrong dimension");
    const RepresentationCheck rep = isOneDimRep(L, a);
    if (!rep.isRepresentation)
        throw Error("alpha is not a one-dimensional representation: alpha([e" +
                    std::to_string(rep.witnesses.front().where[0] + 1) + ",e" +
                    std::to_string(rep.witnesses.front().where[1] + 1) + "]) = " + rep.witnesses.front().value.str());
    return solveLift(L, theta, nabla, a);
}

} // namespace lieaff
