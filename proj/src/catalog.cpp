#include "lieaff/catalog.hpp"

#include "lieaff/error.hpp"

namespace lieaff {

namespace {

struct Bracket1 {
    std::size_t i, j, k; // 1-based, [e_i, e_j] = c e_k
    long c = 1;
};

LieAlgebra build(const std::string& name, std::size_t dim, std::initializer_list<Bracket1> brackets) {
    std::vector<BracketSpec> specs;
    for (const auto& b : brackets) {
        bool merged = false;
        for (auto& s : specs)
            if (s.i == b.i - 1 && s.j == b.j - 1) {
                s.terms.push_back({b.k - 1, b.c});
                merged = true;
            }
        if (!merged) specs.push_back({b.i - 1, b.j - 1, {{b.k - 1, b.c}}});
    }
    return LieAlgebra(name, LieAlgebra::defaultNames(dim), specs);
}

KForm twoForm(std::size_t dim, std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
    KForm f(2, dim);
    for (const auto& [i, j] : pairs) f.set({i - 1, j - 1}, 1);
    return f;
}

std::vector<CatalogEntry> makeCatalog() {
    std::vector<CatalogEntry> c;
    c.push_back({"r2", LieAlgebra::abelian(2, "r2"), std::nullopt, standardSymplectic(2), "abelian R^2; quotient of h3", false});
    c.push_back({"r3", LieAlgebra::abelian(3, "r3"), std::nullopt, std::nullopt, "abelian R^3; no contact form", false});
    c.push_back({"r4", LieAlgebra::abelian(4, "r4"), std::nullopt, standardSymplectic(4), "abelian R^4; quotient of h5", false});
    c.push_back({"h3", build("h3", 3, {{1, 2, 3}}), KForm::dual(3, 2), std::nullopt, "Heisenberg algebra, dim 3", false});
    c.push_back({"h5", build("h5", 5, {{1, 2, 5}, {3, 4, 5}}), KForm::dual(5, 4), std::nullopt,
                 "Heisenberg algebra, dim 5", false});
    c.push_back({"h7", build("h7", 7, {{1, 2, 7}, {3, 4, 7}, {5, 6, 7}}), KForm::dual(7, 6), std::nullopt,
                 "Heisenberg algebra, dim 7", false});
    c.push_back({"n4", build("n4", 4, {{1, 2, 3}, {1, 3, 4}}), std::nullopt, twoForm(4, {{1, 4}, {2, 3}}),
                 "filiform, dim 4; symplectic e1*^e4* + e2*^e3*", false});
    c.push_back({"n4ext", build("n4ext", 5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 3, 5}}), KForm::dual(5, 4),
                 std::nullopt, "central extension of n4 by e1*^e4* + e2*^e3*", false});
    c.push_back({"h3xr2", build("h3xr2", 5, {{1, 2, 3}}), std::nullopt, std::nullopt,
                 "h3 x R^2; center of dimension 3, no contact form", false});
    c.push_back({"nonjacobi3", build("nonjacobi3", 3, {{1, 2, 1}, {1, 3, 3}, {2, 3, 2}}), std::nullopt, std::nullopt,
                 "antisymmetric table violating Jacobi at (1,2,3)", true});
    return c;
}

} // namespace

KForm standardSymplectic(std::size_t dim) {
    if (dim % 2 != 0) throw Error("standard symplectic form needs even dimension");
    KForm f(2, dim);
    for (std::size_t i = 0; i + 1 < dim; i += 2) f.set({i, i + 1}, 1);
    return f;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = makeCatalog();
    return entries;
}

const CatalogEntry* findCatalogEntry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

} // namespace lieaff
