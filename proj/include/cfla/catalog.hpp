#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cfla/lie_algebra.hpp"

namespace cfla {

/// Builds one of the catalog algebras: "abelian-1" .. "abelian-4", "cross3"
/// ([e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2), "heisenberg3" ([e1,e2]=e3) and "sl2"
/// ([e,f]=h, [h,e]=2e, [h,f]=-2f; odd p only). The result carries the catalog name.
/// Throws std::invalid_argument for unknown names or an incompatible characteristic.
LieAlgebra make_catalog_algebra(std::string_view name, int p);

std::vector<std::string> catalog_names();

}  // namespace cfla
