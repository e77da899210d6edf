#include "lieaff/catalog.hpp"
#include "lieaff/error.hpp"
#include "lieaff/extension.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace lieaff;

namespace {

struct Base {
    std::string name;
    LieAlgebra L;
    KForm theta;
    BilinearProduct nabla;
};

std::vector<Base> symplecticBases() {
    std::vector<Base> out;
    for (const char* name : {"r2", "r4", "n4"}) {
        const auto* e = findCatalogEntry(name);
        out.push_back({name, e->algebra, *e->symplectic, affineFromSymplectic(e->algebra, *e->symplectic)});
    }
    return out;
}

Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Vector T(std::size_t n) { return unitVector(n + 1, n); }

} // namespace

TEST_CASE("central extension of the abelian plane is h3") {
    const auto E = centralExtend(LieAlgebra::abelian(2, "r2"), standardSymplectic(2));
    CHECK(E.extended.dim() == 3);
    CHECK(E.centralIndex() == 2);
    CHECK(E.extended.basisNames().back() == "e3");
    CHECK(E.extended.constants() == findCatalogEntry("h3")->algebra.constants());
    CHECK(center(E.extended).dim() == 1);
}

TEST_CASE("central extension of n4 matches the catalog") {
    const auto* n4 = findCatalogEntry("n4");
    const auto E = centralExtend(n4->algebra, *n4->symplectic);
    CHECK(E.extended.constants() == findCatalogEntry("n4ext")->algebra.constants());
    CHECK(contactTest(E.extended, KForm::dual(5, 4)).isContact);
}

TEST_CASE("central extension rejects non-cocycles and renames clashes") {
    CHECK_THROWS_AS(centralExtend(findCatalogEntry("n4")->algebra, standardSymplectic(4)), Error);
    const LieAlgebra named("p", {"a", "e3"}, {});
    CHECK(centralExtend(named, standardSymplectic(2)).extended.basisNames().back() == "z");
}

TEST_CASE("buildLift places each part of the data") {
    const auto E = centralExtend(LieAlgebra::abelian(2), standardSymplectic(2));
    LiftData d = LiftData::half(standardSymplectic(2));
    CHECK(d.phi(0, 1) == Rational(1, 2));
    CHECK(d.phi(1, 0) == Rational(-1, 2));
    d.V[0] = vec({1, 2});
    d.a[1] = 3;
    d.W0 = vec({0, -1});
    d.rho = 5;
    const auto p = buildLift(E, BilinearProduct(2), d);
    CHECK(p.at(0, 1) == Vector{0, 0, Rational(1, 2)});
    CHECK(p.at(0, 2) == vec({1, 2, 0}));
    CHECK(p.at(2, 0) == vec({1, 2, 0}));
    CHECK(p.at(1, 2) == vec({0, 0, 3}));
    CHECK(p.at(2, 2) == vec({0, -1, 5}));
    LiftData wrong = LiftData::zero(3);
    CHECK_THROWS_AS(buildLift(E, BilinearProduct(2), wrong), Error);
}

TEST_CASE("half lift on h3 is flat") {
    const auto E = centralExtend(LieAlgebra::abelian(2), standardSymplectic(2));
    const auto D = LiftData::half(standardSymplectic(2));
    CHECK(torsionDefectLift(E, BilinearProduct(2), D).empty());
    CHECK(curvatureDefect(E, BilinearProduct(2), D).empty());
    CHECK(verifyAffine(E.extended, buildLift(E, BilinearProduct(2), D)).affine());
}

TEST_CASE("curvature with a nonzero central square") {
    // V = a = W0 = 0, rho = 1 on h3: C(e1,e2,T) = -theta(e1,e2) nabla~(T,T) = -T.
    const auto E = centralExtend(LieAlgebra::abelian(2), standardSymplectic(2));
    LiftData D = LiftData::half(standardSymplectic(2));
    D.rho = 1;
    const auto lifted = buildLift(E, BilinearProduct(2), D);
    CHECK(curvatureC(E.extended, lifted, unitVector(3, 0), unitVector(3, 1), T(2)) == vec({0, 0, -1}));
    // C(e1,T,e2) = -nabla~(T, nabla~(e1,e2)) = -1/2 T
    CHECK(curvatureC(E.extended, lifted, unitVector(3, 0), T(2), unitVector(3, 1)) ==
          Vector{0, 0, Rational(-1, 2)});

    const auto rep = lemma2Residuals(E, BilinearProduct(2), D);
    CHECK(rep.expansionsAgree());
    CHECK(rep.bianchiMismatches.empty());
    CHECK_FALSE(rep.item2Vanishes());
    CHECK_FALSE(rep.mixedVanishes());
    CHECK(rep.propositionHolds());
    REQUIRE(rep.mixed.size() == 1);
    CHECK(rep.mixed[0].where == IndexTuple{0, 1, 2});
    CHECK(rep.mixed[0].direct == vec({0, 0, -1}));
    CHECK_THROWS_AS(curvatureC(E.extended, lifted, unitVector(2, 0), T(2), T(2)), Error);
}

TEST_CASE("property: torsion of a lift vanishes exactly when phi - phi^T = theta") {
    std::mt19937_64 rng(41);
    for (const auto& b : symplecticBases()) {
        const auto E = centralExtend(b.L, b.theta);
        for (int t = 0; t < 25; ++t) {
            CHECK(torsionDefectLift(E, b.nabla, oracle::randomLiftData(b.theta, rng, true)).empty());
            const auto bad = torsionDefectLift(E, b.nabla, oracle::randomLiftData(b.theta, rng, false));
            REQUIRE_FALSE(bad.empty());
            for (const auto& d : bad) {
                CHECK(d.where[1] < b.L.dim());
                CHECK(isZero(std::span(d.value).first(b.L.dim())));
            }
        }
    }
}

TEST_CASE("property: curvature agrees with the index-sum oracle") {
    std::mt19937_64 rng(43);
    for (const auto& b : symplecticBases()) {
        const auto E = centralExtend(b.L, b.theta);
        const std::size_t m = b.L.dim() + 1;
        for (int t = 0; t < 5; ++t) {
            const auto D = oracle::randomLiftData(b.theta, rng);
            const auto lifted = buildLift(E, b.nabla, D);
            const auto defects = curvatureDefect(E, b.nabla, D);
            std::size_t expectedCount = 0;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j)
                    for (std::size_t k = 0; k < m; ++k) {
                        const Vector c = oracle::curvatureByIndices(E.extended, lifted, i, j, k);
                        CHECK(curvatureC(E.extended, lifted, unitVector(m, i), unitVector(m, j), unitVector(m, k)) == c);
                        if (!isZero(c)) ++expectedCount;
                    }
            CHECK(defects.size() == expectedCount);
        }
    }
}

TEST_CASE("property: mixed curvature expansions and the Bianchi relation") {
    std::mt19937_64 rng(47);
    for (const auto& b : symplecticBases()) {
        const auto E = centralExtend(b.L, b.theta);
        for (int t = 0; t < 25; ++t) {
            const auto rep = lemma2Residuals(E, b.nabla, oracle::randomLiftData(b.theta, rng));
            CHECK(rep.expansionsAgree());
            CHECK(rep.bianchiMismatches.empty());
            CHECK(rep.propositionHolds());
            const std::size_t n = b.L.dim();
            CHECK(rep.item1.size() == n * (n - 1) / 2 * n);
            CHECK(rep.item2.size() == n * n);
            CHECK(rep.item3.size() == n);
        }
    }
}

TEST_CASE("item 1 expansion needs a flat base product") {
    // On R^2 a torsion-free but curved base product makes item 1 differ from the direct value.
    const auto r2 = LieAlgebra::abelian(2);
    BilinearProduct p(2);
    p.at(0, 1) = vec({1, 0});
    p.at(1, 0) = vec({1, 0});
    const auto E = centralExtend(r2, standardSymplectic(2));
    const auto rep = lemma2Residuals(E, p, LiftData::half(standardSymplectic(2)));
    bool item1Mismatch = false;
    for (const auto& m : rep.mismatches) item1Mismatch = item1Mismatch || m.item == 1;
    CHECK(item1Mismatch);
    CHECK(rep.bianchiMismatches.empty());
}

TEST_CASE("necessary condition on V") {
    const auto E = centralExtend(LieAlgebra::abelian(2), standardSymplectic(2));
    LiftData D = LiftData::half(standardSymplectic(2));
    CHECK(necessaryV(E, D).empty());
    D.V[0] = vec({1, 0});
    // (i,j,k) = (1,2,1): phi(e2,e1) V_1 - phi(e1,e1) V_2 - theta(e1,e2) V_1 = -1/2 V_1 - V_1
    const auto r = necessaryV(E, D);
    REQUIRE_FALSE(r.empty());
    CHECK(r[0].where == IndexTuple{0, 1, 0});
    CHECK(r[0].value == Vector{Rational(-3, 2), 0});
}

TEST_CASE("the two relations for the half lift") {
    const auto& h = findCatalogEntry("n4");
    const std::size_t n = 4;
    const auto s = starStarCheck(h->algebra, *h->symplectic, std::vector<Vector>(n, Vector(n)), Vector(n));
    CHECK(s.first.empty());
    // theta([e1,e2],e2) = theta(e3,e2) = -1 and theta([e1,e3],e1) = theta(e4,e1) = -1.
    REQUIRE(s.second.size() == 2);
    CHECK(s.second[0].where == IndexTuple{0, 1, 1});
    CHECK(s.second[0].value == Rational(-1));
    CHECK(s.second[1].where == IndexTuple{0, 2, 0});
    CHECK(s.second[1].value == Rational(-1));

    const auto r4 = starStarCheck(LieAlgebra::abelian(4), standardSymplectic(4), std::vector<Vector>(4, Vector(4)),
                                  Vector(4));
    CHECK(r4.holds());
    CHECK_THROWS_AS(starStarCheck(LieAlgebra::abelian(4), standardSymplectic(4), {}, Vector(4)), Error);
}

TEST_CASE("property: the half lift is flat exactly when both relations hold") {
    for (const char* name : {"r2", "r4", "n4"}) {
        const auto* e = findCatalogEntry(name);
        const auto nabla = affineFromSymplectic(e->algebra, *e->symplectic);
        const auto E = centralExtend(e->algebra, *e->symplectic);
        const auto D = LiftData::half(*e->symplectic);
        const bool flat = curvatureDefect(E, nabla, D).empty();
        CHECK(flat == starStarCheck(e->algebra, *e->symplectic, D.V, D.a).holds());
    }
}

TEST_CASE("one-dimensional representations") {
    const auto& n4 = findCatalogEntry("n4")->algebra;
    CHECK(isOneDimRep(n4, vec({1, 1, 0, 0})).isRepresentation);
    const auto r = isOneDimRep(n4, vec({0, 0, 2, 0}));
    CHECK_FALSE(r.isRepresentation);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].where == IndexTuple{0, 1});
    CHECK(r.witnesses[0].value == Rational(2));
    CHECK_THROWS_AS(isOneDimRep(n4, vec({1})), Error);
}

TEST_CASE("verdict for the half lift on h3") {
    const auto E = centralExtend(LieAlgebra::abelian(2), standardSymplectic(2));
    const auto v = theoremVerdict(E, BilinearProduct(2), LiftData::half(standardSymplectic(2)));
    CHECK(v.isAffine);
    CHECK(v.theoremCase == TheoremCase::TrivialAlpha);
    CHECK(caseName(v.theoremCase) == "trivial-alpha");
    REQUIRE(v.conditions.size() == 2);
    CHECK(v.conditions[0].name == "central-products-vanish");
    CHECK(v.conditions[1].name == "vinberg-2-cocycle");
    CHECK(v.theoremConditionsHold());
    CHECK(v.agrees());
    CHECK(v.findings.empty());
}

TEST_CASE("verdict for the half lift on n4 fails in both views") {
    const auto* e = findCatalogEntry("n4");
    const auto nabla = affineFromSymplectic(e->algebra, *e->symplectic);
    const auto E = centralExtend(e->algebra, *e->symplectic);
    const auto v = theoremVerdict(E, nabla, LiftData::half(*e->symplectic));
    CHECK_FALSE(v.isAffine);
    CHECK_FALSE(v.theoremConditionsHold());
    REQUIRE(v.violated.size() == 1);
    CHECK(v.violated[0].name == "vinberg-2-cocycle");
    CHECK(v.agrees());
}

TEST_CASE("verdict classifies alpha") {
    const auto* e = findCatalogEntry("n4");
    const auto nabla = affineFromSymplectic(e->algebra, *e->symplectic);
    const auto E = centralExtend(e->algebra, *e->symplectic);
    LiftData D = LiftData::half(*e->symplectic);
    D.a = vec({0, 0, 1, 0});
    CHECK(theoremVerdict(E, nabla, D).theoremCase == TheoremCase::NotApplicable);
    D.a = vec({1, 0, 0, 0});
    const auto v = theoremVerdict(E, nabla, D);
    CHECK(v.theoremCase == TheoremCase::NontrivialAlpha);
    CHECK(v.conditions.size() == 5);
    CHECK(caseName(TheoremCase::NotApplicable) == "not-applicable");
    // nabla(e1,e1) = -e2 so a_{nabla(e1,e1)} = 0 while a_1 a_1 = 1.
    CHECK_FALSE(v.auxiliary.pass);

    BilinearProduct wrong(4);
    CHECK_THROWS_AS(theoremVerdict(E, wrong, D), Error);
}

TEST_CASE("trivial solver on n4") {
    const auto* e = findCatalogEntry("n4");
    const auto nabla = affineFromSymplectic(e->algebra, *e->symplectic);
    const auto s = solveLiftTrivial(e->algebra, *e->symplectic, nabla);
    REQUIRE(s.feasible);
    CHECK(s.dimension() == 3);
    CHECK(s.checked.size() == 4);
    CHECK(s.theoremGapCount == 0);
    const Matrix gram = e->symplectic->matrix();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(s.particular(i, j) - s.particular(j, i) == gram(i, j));
    for (const auto& d : s.directions) CHECK(d == d.transposed());
    for (const auto& c : s.checked) {
        CHECK(c.verdict.isAffine);
        CHECK(c.verdict.agrees());
    }
}

TEST_CASE("trivial solver on abelian bases") {
    const auto r2 = solveLiftTrivial(LieAlgebra::abelian(2), standardSymplectic(2), BilinearProduct(2));
    CHECK(r2.dimension() == 3);
    const auto r4 = solveLiftTrivial(LieAlgebra::abelian(4), standardSymplectic(4), BilinearProduct(4));
    CHECK(r4.dimension() == 10);
}

TEST_CASE("given-alpha solver on the plane finds a theorem gap") {
    // phi(e2, e_k) = a_k forces s12 = 3/2 and s22 = 0, leaving s11 free.
    const auto s = solveLiftGivenAlpha(LieAlgebra::abelian(2), standardSymplectic(2), BilinearProduct(2), vec({1, 0}));
    REQUIRE(s.feasible);
    CHECK(s.dimension() == 1);
    CHECK(s.particular(1, 0) == Rational(1));
    CHECK(s.particular(0, 1) == Rational(2));
    CHECK(s.particular(1, 1) == Rational(0));
    CHECK(s.theoremGapCount == 2);
    for (const auto& c : s.checked) {
        CHECK_FALSE(c.verdict.isAffine);
        CHECK_FALSE(c.verdict.auxiliary.pass);
    }
    CHECK_THROWS_AS(solveLiftGivenAlpha(findCatalogEntry("n4")->algebra, *findCatalogEntry("n4")->symplectic,
                                        affineFromSymplectic(findCatalogEntry("n4")->algebra,
                                                             *findCatalogEntry("n4")->symplectic),
                                        vec({0, 0, 1, 0})),
                    Error);
}
