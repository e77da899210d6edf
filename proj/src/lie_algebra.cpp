#include "lieaff/lie_algebra.hpp"

#include "lieaff/error.hpp"

#include <algorithm>

namespace lieaff {

namespace {

std::string tupleText(const IndexTuple& t) {
    std::string s = "(";
    for (std::size_t a = 0; a < t.size(); ++a) s += (a ? "," : "") + std::to_string(t[a] + 1);
    return s + ")";
}

} // namespace

// ---------------------------------------------------------------------------
// LieAlgebra

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basisNames,
                       const std::vector<BracketSpec>& brackets)
    : name_(std::move(name)), dim_(basisNames.size()), basisNames_(std::move(basisNames)),
      dense_(dim_ * dim_, Vector(dim_)) {
    for (const auto& b : brackets) {
        if (b.i >= b.j) throw Error("bracket pair (" + std::to_string(b.i + 1) + "," + std::to_string(b.j + 1) +
                                    ") must satisfy i < j");
        if (b.j >= dim_) throw Error("bracket index out of range");
        if (constants_.contains({b.i, b.j}))
            throw Error("bracket pair (" + std::to_string(b.i + 1) + "," + std::to_string(b.j + 1) + ") given twice");
        Vector& v = dense_[b.i * dim_ + b.j];
        for (const auto& t : b.terms) {
            if (t.k >= dim_) throw Error("bracket target index out of range");
            v[t.k] += t.c;
        }
        std::vector<Term> terms;
        for (std::size_t k = 0; k < dim_; ++k)
            if (!v[k].isZero()) terms.push_back({k, v[k]});
        if (!terms.empty()) constants_.emplace(std::make_pair(b.i, b.j), std::move(terms));
        dense_[b.j * dim_ + b.i] = -1 * v;
    }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, std::string name) {
    return LieAlgebra(std::move(name), defaultNames(dim), {});
}

std::vector<std::string> LieAlgebra::defaultNames(std::size_t dim) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
    return names;
}

Vector LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
    if (x.size() != dim_ || y.size() != dim_) throw Error("bracket: dimension mismatch");
    Vector out(dim_);
    for (const auto& [ij, terms] : constants_) {
        const auto [i, j] = ij;
        // x_i y_j - x_j y_i
        Rational coef = x[i] * y[j] - x[j] * y[i];
        if (coef.isZero()) continue;
        for (const auto& t : terms) out[t.k] += coef * t.c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// KForm

int sortWithSign(IndexTuple& idx) {
    int sign = 1;
    for (std::size_t a = 1; a < idx.size(); ++a)
        for (std::size_t b = a; b > 0 && idx[b - 1] >= idx[b]; --b) {
            if (idx[b - 1] == idx[b]) return 0;
            std::swap(idx[b - 1], idx[b]);
            sign = -sign;
        }
    for (std::size_t a = 1; a < idx.size(); ++a)
        if (idx[a - 1] == idx[a]) return 0;
    return sign;
}

KForm::KForm(std::size_t degree, std::size_t dim) : degree_(degree), dim_(dim) {
    if (degree > dim) throw Error("form degree exceeds dimension");
}

KForm KForm::dual(std::size_t dim, std::size_t i) {
    KForm f(1, dim);
    f.set({i}, 1);
    return f;
}

KForm KForm::fromVector(std::span<const Rational> coefficients) {
    KForm f(1, coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i) f.set({i}, coefficients[i]);
    return f;
}

void KForm::set(IndexTuple idx, const Rational& c) {
    if (idx.size() != degree_) throw Error("form index tuple has wrong length");
    for (auto i : idx)
        if (i >= dim_) throw Error("form index out of range");
    const int sign = sortWithSign(idx);
    if (sign == 0) {
        if (!c.isZero()) throw Error("repeated index in alternating form coefficient");
        return;
    }
    if (c.isZero())
        coeffs_.erase(idx);
    else
        coeffs_[idx] = sign > 0 ? c : -c;
}

void KForm::add(IndexTuple idx, const Rational& c) {
    IndexTuple sorted = idx;
    const int sign = sortWithSign(sorted);
    if (sign == 0) return;
    set(sorted, onBasis(sorted) + (sign > 0 ? c : -c));
}

Rational KForm::onBasis(std::span<const std::size_t> idx) const {
    IndexTuple sorted(idx.begin(), idx.end());
    const int sign = sortWithSign(sorted);
    if (sign == 0) return 0;
    const auto it = coeffs_.find(sorted);
    if (it == coeffs_.end()) return 0;
    return sign > 0 ? it->second : -it->second;
}

Rational KForm::eval1(std::span<const Rational> x) const {
    if (degree_ != 1 || x.size() != dim_) throw Error("eval1: wrong degree or dimension");
    Rational s;
    for (const auto& [idx, c] : coeffs_) s += c * x[idx[0]];
    return s;
}

Rational KForm::eval2(std::span<const Rational> x, std::span<const Rational> y) const {
    if (degree_ != 2 || x.size() != dim_ || y.size() != dim_) throw Error("eval2: wrong degree or dimension");
    Rational s;
    for (const auto& [idx, c] : coeffs_) {
        const Rational minor = x[idx[0]] * y[idx[1]] - x[idx[1]] * y[idx[0]];
        if (!minor.isZero()) s += c * minor;
    }
    return s;
}

Rational KForm::eval(const std::vector<Vector>& args) const {
    if (args.size() != degree_) throw Error("form evaluated on wrong number of arguments");
    for (const auto& a : args)
        if (a.size() != dim_) throw Error("form argument has wrong dimension");
    if (degree_ == 0) return coeffs_.empty() ? Rational(0) : coeffs_.begin()->second;
    if (degree_ == 1) return eval1(args[0]);
    if (degree_ == 2) return eval2(args[0], args[1]);
    Rational s;
    for (const auto& [idx, c] : coeffs_) {
        Matrix minor(degree_, degree_);
        for (std::size_t a = 0; a < degree_; ++a)
            for (std::size_t b = 0; b < degree_; ++b) minor(a, b) = args[b][idx[a]];
        s += c * determinant(minor);
    }
    return s;
}

Matrix KForm::matrix() const {
    if (degree_ != 2) throw Error("matrix() requires a 2-form");
    Matrix m(dim_, dim_);
    for (const auto& [idx, c] : coeffs_) {
        m(idx[0], idx[1]) = c;
        m(idx[1], idx[0]) = -c;
    }
    return m;
}

Vector KForm::asVector() const {
    if (degree_ != 1) throw Error("asVector() requires a 1-form");
    Vector v(dim_);
    for (const auto& [idx, c] : coeffs_) v[idx[0]] = c;
    return v;
}

KForm KForm::scaled(const Rational& s) const {
    KForm f(degree_, dim_);
    for (const auto& [idx, c] : coeffs_) f.set(idx, s * c);
    return f;
}

// ---------------------------------------------------------------------------
// Structure

std::vector<VectorDefect> jacobiDefect(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    std::vector<VectorDefect> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector ek = unitVector(n, k), ei = unitVector(n, i), ej = unitVector(n, j);
                Vector s = L.bracket(L.bracketBasis(i, j), ek);
                axpy(1, L.bracket(L.bracketBasis(j, k), ei), s);
                axpy(1, L.bracket(L.bracketBasis(k, i), ej), s);
                if (!isZero(s)) out.push_back({{i, j, k}, std::move(s)});
            }
    return out;
}

void requireLie(const LieAlgebra& L) {
    const auto defects = jacobiDefect(L);
    if (!defects.empty())
        throw Error("'" + L.name() + "' violates the Jacobi identity at " + tupleText(defects.front().where) +
                    " (" + std::to_string(defects.size()) + " failing triples)");
}

std::vector<Subspace> lowerCentralSeries(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    std::vector<Subspace> series;
    Subspace current{n, {}};
    for (std::size_t i = 0; i < n; ++i) current.basis.push_back(unitVector(n, i));
    series.push_back(current);
    while (current.dim() > 0) {
        std::vector<Vector> spanning;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& v : current.basis) {
                Vector b = L.bracket(unitVector(n, i), v);
                if (!isZero(b)) spanning.push_back(std::move(b));
            }
        Subspace next{n, spanBasis(spanning, n)};
        if (next.dim() == current.dim()) break;
        series.push_back(next);
        current = std::move(next);
    }
    return series;
}

std::vector<std::size_t> lowerCentralDims(const LieAlgebra& L) {
    std::vector<std::size_t> dims;
    for (const auto& s : lowerCentralSeries(L)) dims.push_back(s.dim());
    return dims;
}

bool isNilpotent(const LieAlgebra& L) { return lowerCentralSeries(L).back().dim() == 0; }

Subspace derivedAlgebra(const LieAlgebra& L) {
    std::vector<Vector> spanning;
    for (const auto& [ij, terms] : L.constants()) spanning.push_back(L.bracketBasis(ij.first, ij.second));
    return {L.dim(), spanBasis(spanning, L.dim())};
}

Subspace center(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    // Row (j, k), column i: c_{ij}^k. x is central iff sum_i x_i c_{ij}^k = 0 for all j, k.
    Matrix stacked(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector& b = L.bracketBasis(i, j);
            for (std::size_t k = 0; k < n; ++k) stacked(j * n + k, i) = b[k];
        }
    return {n, kernelBasis(stacked)};
}

KForm ceDiffOne(const LieAlgebra& L, const KForm& omega) {
    if (omega.degree() != 1) throw Error("ceDiffOne expects a 1-form, got degree " + std::to_string(omega.degree()));
    if (omega.dim() != L.dim()) throw Error("ceDiffOne: form dimension does not match the algebra");
    KForm d(2, L.dim());
    for (const auto& [ij, terms] : L.constants()) d.set({ij.first, ij.second}, -omega.eval1(L.bracketBasis(ij.first, ij.second)));
    return d;
}

std::vector<ScalarDefect> cocycleDefect2(const LieAlgebra& L, const KForm& theta) {
    if (theta.degree() != 2 || theta.dim() != L.dim()) throw Error("cocycleDefect2 expects a 2-form on the algebra");
    const std::size_t n = L.dim();
    std::vector<ScalarDefect> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Rational s = theta.eval2(L.bracketBasis(i, j), unitVector(n, k)) +
                                   theta.eval2(L.bracketBasis(j, k), unitVector(n, i)) +
                                   theta.eval2(L.bracketBasis(k, i), unitVector(n, j));
                if (!s.isZero()) out.push_back({{i, j, k}, s});
            }
    return out;
}

Matrix CenterQuotient::basisChange() const {
    const std::size_t n = centralGenerator.size();
    Matrix b(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c + 1 < n; ++c) b(r, c) = lift(r, c);
        b(r, n - 1) = centralGenerator[r];
    }
    return b;
}

CenterQuotient quotientByCenter(const LieAlgebra& L, const KForm& omega) {
    if (omega.degree() != 1 || omega.dim() != L.dim()) throw Error("quotientByCenter expects a 1-form on the algebra");
    const std::size_t n = L.dim();
    const Subspace z = center(L);
    if (z.dim() != 1) throw Error("center has dimension " + std::to_string(z.dim()) + ", expected 1");
    const Rational onCenter = omega.eval1(z.basis[0]);
    if (onCenter.isZero()) throw Error("form vanishes on the center: not a candidate contact form");

    CenterQuotient q;
    q.centralGenerator = (Rational(1) / onCenter) * z.basis[0];

    std::vector<Vector> kept{q.centralGenerator};
    for (std::size_t c = 0; c < n && kept.size() < n; ++c) {
        kept.push_back(unitVector(n, c));
        if (rank(Matrix::fromRows(kept, n)) == kept.size())
            q.complement.push_back(c);
        else
            kept.pop_back();
    }
    const std::size_t m = n - 1;
    std::vector<Vector> lifts;
    for (auto c : q.complement) {
        Vector v = unitVector(n, c);
        axpy(-omega.eval1(v), q.centralGenerator, v);
        lifts.push_back(std::move(v));
    }
    q.lift = Matrix::fromColumns(lifts, n);
    const Matrix inv = inverse(q.basisChange());
    q.projection = Matrix(m, n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) q.projection(r, c) = inv(r, c);

    std::vector<std::string> names;
    for (auto c : q.complement) names.push_back(L.basisNames()[c]);
    std::vector<BracketSpec> brackets;
    q.theta = KForm(2, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            const Vector br = L.bracket(lifts[a], lifts[b]);
            const Vector image = q.projection * br;
            BracketSpec spec{a, b, {}};
            for (std::size_t d = 0; d < m; ++d)
                if (!image[d].isZero()) spec.terms.push_back({d, image[d]});
            if (!spec.terms.empty()) brackets.push_back(std::move(spec));
            const Rational th = omega.eval1(br);
            q.theta.set({a, b}, th);

            // [lift a, lift b] = lift([a, b]) + theta(a, b) T
            Vector rebuilt = q.lift * image;
            axpy(th, q.centralGenerator, rebuilt);
            if (rebuilt != br) throw Error("quotientByCenter: reconstruction identity failed");
        }
    q.quotient = LieAlgebra(L.name().empty() ? std::string() : L.name() + "/Z", std::move(names), brackets);
    if (!cocycleDefect2(q.quotient, q.theta).empty()) throw Error("quotientByCenter: induced form is not closed");
    return q;
}

} // namespace lieaff
