#include "lieaff/structures.hpp"

#include "lieaff/error.hpp"

#include <random>

namespace lieaff {

Vector BilinearProduct::apply(std::span<const Rational> x, std::span<const Rational> y) const {
    if (x.size() != dim_ || y.size() != dim_) throw Error("bilinear product: dimension mismatch");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].isZero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].isZero()) continue;
            axpy(x[i] * y[j], at(i, j), out);
        }
    }
    return out;
}

Matrix BilinearProduct::leftMultiplication(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t r = 0; r < dim_; ++r) m(r, j) = at(i, j)[r];
    return m;
}

// ---------------------------------------------------------------------------

namespace {

// remaining: sorted basis indices not yet consumed by earlier forms.
Rational shuffleSum(const std::vector<KForm>& forms, std::size_t which, const IndexTuple& remaining) {
    if (which == forms.size()) return 1;
    const KForm& f = forms[which];
    Rational total;
    for (const auto& [idx, c] : f.coeffs()) {
        // Positions of idx inside remaining; sign of moving them to the front.
        std::size_t parity = 0;
        IndexTuple rest;
        rest.reserve(remaining.size() - idx.size());
        std::size_t t = 0;
        bool contained = true;
        for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
            if (t < idx.size() && remaining[pos] == idx[t]) {
                parity += pos - t;
                ++t;
            } else {
                if (t < idx.size() && remaining[pos] > idx[t]) {
                    contained = false;
                    break;
                }
                rest.push_back(remaining[pos]);
            }
        }
        if (!contained || t != idx.size()) continue;
        const Rational tail = shuffleSum(forms, which + 1, rest);
        if (tail.isZero()) continue;
        total += (parity % 2 ? -c : c) * tail;
    }
    return total;
}

} // namespace

Rational wedgeEvalTop(const std::vector<KForm>& forms, std::size_t n) {
    if (n > kMaxWedgeDim)
        throw Error("wedge evaluation supports dimension <= " + std::to_string(kMaxWedgeDim) + ", got " +
                    std::to_string(n));
    std::size_t total = 0;
    for (const auto& f : forms) {
        if (f.dim() != n) throw Error("wedge factor has dimension " + std::to_string(f.dim()) + ", expected " +
                                      std::to_string(n));
        total += f.degree();
    }
    if (total != n)
        throw Error("wedge degrees sum to " + std::to_string(total) + ", expected " + std::to_string(n));
    IndexTuple all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return shuffleSum(forms, 0, all);
}

ContactReport contactTest(const LieAlgebra& L, const KForm& omega) {
    const std::size_t n = L.dim();
    if (n % 2 == 0) throw Error("contact forms need odd dimension, got " + std::to_string(n));
    if (omega.degree() != 1 || omega.dim() != n) throw Error("contactTest expects a 1-form on the algebra");
    const KForm d = ceDiffOne(L, omega);
    std::vector<KForm> factors{omega};
    for (std::size_t p = 0; p < n / 2; ++p) factors.push_back(d);
    ContactReport report{omega, wedgeEvalTop(factors, n), false};
    report.isContact = !report.scalar.isZero();
    return report;
}

ContactSearch searchContactForm(const LieAlgebra& L, std::size_t attempts, std::uint64_t seed) {
    const std::size_t n = L.dim();
    if (n % 2 == 0) throw Error("contact forms need odd dimension, got " + std::to_string(n));
    ContactSearch search;
    search.seed = seed;
    search.attempts = attempts;
    for (std::size_t i = 0; i < n; ++i) {
        ContactReport r = contactTest(L, KForm::dual(n, i));
        const bool hit = r.isContact;
        search.tried.push_back(r);
        if (hit) {
            search.found = std::move(r);
            return search;
        }
    }
    const Subspace z = center(L);
    std::mt19937_64 rng(seed);
    const std::size_t drawCap = attempts * 64 + 64;
    std::size_t draws = 0;
    for (std::size_t a = 0; a < attempts && draws < drawCap;) {
        ++draws;
        Vector coeffs(n);
        for (auto& c : coeffs) c = static_cast<long>(rng() % 7) - 3;
        if (isZero(coeffs)) continue;
        const KForm omega = KForm::fromVector(coeffs);
        bool onCenter = z.dim() == 0;
        for (const auto& t : z.basis) onCenter = onCenter || !omega.eval1(t).isZero();
        if (!onCenter) continue;
        ++a;
        ContactReport r = contactTest(L, omega);
        const bool hit = r.isContact;
        search.tried.push_back(r);
        if (hit) {
            search.found = std::move(r);
            return search;
        }
    }
    return search;
}

SymplecticStatus symplecticCheck(const LieAlgebra& L, const KForm& theta) {
    const std::size_t n = L.dim();
    if (n % 2 != 0) throw Error("symplectic forms need even dimension, got " + std::to_string(n));
    if (theta.degree() != 2 || theta.dim() != n) throw Error("symplecticCheck expects a 2-form on the algebra");
    return {rank(theta.matrix()) == n, cocycleDefect2(L, theta).empty()};
}

AffineDefects verifyAffine(const LieAlgebra& L, const BilinearProduct& nabla) {
    const std::size_t n = L.dim();
    if (nabla.dim() != n) throw Error("verifyAffine: product dimension does not match the algebra");
    AffineDefects out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector t = nabla.at(i, j) - nabla.at(j, i) - L.bracketBasis(i, j);
            if (!isZero(t)) out.torsion.push_back({{i, j}, std::move(t)});
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector ei = unitVector(n, i), ej = unitVector(n, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vector c = nabla.apply(ei, nabla.at(j, k));
                axpy(-1, nabla.apply(ej, nabla.at(i, k)), c);
                axpy(-1, nabla.apply(L.bracketBasis(i, j), unitVector(n, k)), c);
                if (!isZero(c)) out.curvature.push_back({{i, j, k}, std::move(c)});
            }
        }
    return out;
}

BilinearProduct affineFromSymplectic(const LieAlgebra& L, const KForm& theta) {
    requireLie(L);
    const auto status = symplecticCheck(L, theta);
    if (!status.nondegenerate) throw Error("2-form is degenerate");
    if (!status.closed) throw Error("2-form is not a cocycle");
    const std::size_t n = L.dim();
    const Matrix gram = theta.matrix();
    // Row k of the system: sum_m v_m theta(e_m, e_k).
    const Matrix system = gram.transposed();
    BilinearProduct nabla(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector rhs(n);
            for (std::size_t k = 0; k < n; ++k) rhs[k] = -theta.eval2(unitVector(n, j), L.bracketBasis(i, k));
            const LinearSolution sol = solveLinear(system, rhs);
            if (!sol.feasible() || !sol.kernel.empty())
                throw Error("affineFromSymplectic: defining relation has no unique solution");
            nabla.at(i, j) = *sol.particular;
        }
    if (!verifyAffine(L, nabla).affine()) throw Error("affineFromSymplectic: result is not left-symmetric");
    return nabla;
}

std::vector<ScalarDefect> definingRelationDefects(const LieAlgebra& L, const KForm& theta,
                                                  const BilinearProduct& nabla) {
    const std::size_t n = L.dim();
    if (nabla.dim() != n || theta.dim() != n || theta.degree() != 2)
        throw Error("definingRelationDefects: dimension mismatch");
    std::vector<ScalarDefect> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vector ek = unitVector(n, k);
                const Rational r =
                    theta.eval2(nabla.at(i, j), ek) + theta.eval2(unitVector(n, j), L.bracketBasis(i, k));
                if (!r.isZero()) out.push_back({{i, j, k}, r});
            }
    return out;
}

std::optional<KForm> exactPrimitive(const LieAlgebra& L, const KForm& theta) {
    const std::size_t n = L.dim();
    if (theta.degree() != 2 || theta.dim() != n) throw Error("exactPrimitive expects a 2-form on the algebra");
    // theta(e_i, e_j) = -alpha([e_i, e_j]) for all i < j.
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            rows.push_back(-1 * L.bracketBasis(i, j));
            rhs.push_back(theta.onBasis(IndexTuple{i, j}));
        }
    if (rows.empty()) return theta.isZero() ? std::optional<KForm>(KForm(1, n)) : std::nullopt;
    const LinearSolution sol = solveLinear(Matrix::fromRows(rows, n), rhs);
    if (!sol.feasible()) return std::nullopt;
    return KForm::fromVector(*sol.particular);
}

} // namespace lieaff
