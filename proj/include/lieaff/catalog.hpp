#pragma once

#include "lieaff/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieaff {

struct CatalogEntry {
    std::string name;
    LieAlgebra algebra;
    std::optional<KForm> contact;
    std::optional<KForm> symplectic;
    std::string note;
    /// Deliberately malformed entry (fails Jacobi); excluded from soundness checks.
    bool negativeExample = false;
};

/// Built-in test corpus, in a fixed order.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* findCatalogEntry(const std::string& name);

/// theta(e_{2i-1}, e_{2i}) = 1 on a 2m-dimensional space.
KForm standardSymplectic(std::size_t dim);

} // namespace lieaff
