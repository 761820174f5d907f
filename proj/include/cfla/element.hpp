#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cfla {

/// A carrier element: its coordinates in the standard basis, each a residue mod p.
struct Element {
  std::vector<int> coords;

  auto operator<=>(const Element&) const = default;
};

/// "(1,0,4)"
std::string to_string(const Element& e);

}  // namespace cfla
