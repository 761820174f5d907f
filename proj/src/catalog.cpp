#include "cfla/catalog.hpp"

#include <stdexcept>
#include <string>

namespace cfla {

namespace {

// Sets [e_i, e_j] = v e_k and [e_j, e_i] = -v e_k (1-based indices).
void set_bracket(StructureConstants& c, const FieldPrime& f, int i, int j, int k, int v) {
  c.set(i - 1, j - 1, k - 1, f.reduce(v));
  c.set(j - 1, i - 1, k - 1, f.neg(v));
}

}  // namespace

LieAlgebra make_catalog_algebra(std::string_view name, int p) {
  const FieldPrime field(p);
  const std::string label(name);
  if (name.starts_with("abelian-")) {
    const auto rest = name.substr(8);
    if (rest.size() == 1 && rest[0] >= '1' && rest[0] <= '4') {
      return LieAlgebra(label, field, StructureConstants(rest[0] - '0'));
    }
  } else if (name == "cross3") {
    StructureConstants c(3);
    set_bracket(c, field, 1, 2, 3, 1);
    set_bracket(c, field, 2, 3, 1, 1);
    set_bracket(c, field, 3, 1, 2, 1);
    return LieAlgebra(label, field, std::move(c));
  } else if (name == "heisenberg3") {
    StructureConstants c(3);
    set_bracket(c, field, 1, 2, 3, 1);
    return LieAlgebra(label, field, std::move(c));
  } else if (name == "sl2") {
    if (p == 2) throw std::invalid_argument("sl2 requires odd characteristic");
    // basis (e, f, h)
    StructureConstants c(3);
    set_bracket(c, field, 1, 2, 3, 1);
    set_bracket(c, field, 3, 1, 1, 2);
    set_bracket(c, field, 3, 2, 2, -2);
    return LieAlgebra(label, field, std::move(c));
  }
  throw std::invalid_argument("unknown catalog algebra '" + label + "'");
}

std::vector<std::string> catalog_names() {
  return {"abelian-1", "abelian-2", "abelian-3", "abelian-4", "cross3", "heisenberg3", "sl2"};
}

}  // namespace cfla
