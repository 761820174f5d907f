#include "cfla/lie_algebra.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace cfla {

std::string to_string(const Element& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e.coords[i]);
  }
  return out + ")";
}

StructureConstants StructureConstants::from_nested(const std::vector<std::vector<std::vector<int>>>& c) {
  const auto n = static_cast<int>(c.size());
  StructureConstants out(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(c[i].size()) != n) throw std::invalid_argument("structure constants are not n x n x n");
    for (int j = 0; j < n; ++j) {
      if (static_cast<int>(c[i][j].size()) != n) {
        throw std::invalid_argument("structure constants are not n x n x n");
      }
      for (int k = 0; k < n; ++k) out.set(i, j, k, c[i][j][k]);
    }
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> StructureConstants::nested() const {
  std::vector<std::vector<std::vector<int>>> out(dim_, std::vector<std::vector<int>>(dim_, std::vector<int>(dim_)));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) out[i][j][k] = at(i, j, k);
  return out;
}

namespace {

Witness axiom_witness(std::string axiom, std::vector<int> indices, std::string detail) {
  Witness w;
  w.condition = std::move(axiom);
  w.indices = std::move(indices);
  w.detail = std::move(detail);
  return w;
}

}  // namespace

CheckResult validate_algebra(const StructureConstants& c, int p, int dim) {
  const FieldPrime field(p);
  if (dim < kMinDim || dim > kMaxDim) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " is outside the supported range [1, 4]");
  }
  if (c.dim() != dim) {
    throw std::invalid_argument("structure-constant table has dimension " + std::to_string(c.dim()) +
                                ", expected " + std::to_string(dim));
  }
  const int n = dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const int v = c.at(i, j, k);
        if (v < 0 || v >= p) {
          return CheckResult::failure(axiom_witness("range", {i, j, k}, "entry " + std::to_string(v) +
                                                                            " outside [0, p-1]"));
        }
      }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (c.at(i, i, k) != 0) {
        return CheckResult::failure(axiom_witness("alternating", {i, k}, "[e_i, e_i] has a nonzero coefficient"));
      }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (field.add(c.at(i, j, k), c.at(j, i, k)) != 0) {
          return CheckResult::failure(axiom_witness("antisymmetry", {i, j, k}, "[e_i, e_j] != -[e_j, e_i]"));
        }
  // Jacobi: [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0, coefficient on e_m.
  auto nested = [&](int a, int b, int cc, int m) {
    std::int64_t s = 0;
    for (int l = 0; l < n; ++l) s += std::int64_t{c.at(b, cc, l)} * c.at(a, l, m);
    return s;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          const std::int64_t total = nested(i, j, k, m) + nested(j, k, i, m) + nested(k, i, j, m);
          if (field.reduce(total) != 0) {
            return CheckResult::failure(
                axiom_witness("jacobi", {i, j, k}, "cyclic sum has coefficient " +
                                                       std::to_string(field.reduce(total)) + " on e_" +
                                                       std::to_string(m + 1)));
          }
        }
  return CheckResult::pass();
}

LieAlgebra::LieAlgebra(std::string name, FieldPrime field, StructureConstants constants)
    : name_(std::move(name)), field_(field), constants_(std::move(constants)) {
  const auto check = validate_algebra(constants_, field_.p(), constants_.dim());
  if (!check.ok()) throw std::invalid_argument("algebra '" + name_ + "': " + describe(check));
}

std::size_t LieAlgebra::carrier_size() const {
  std::size_t size = 1;
  for (int i = 0; i < dim(); ++i) {
    if (size > std::numeric_limits<std::size_t>::max() / 64) return size;
    size *= static_cast<std::size_t>(p());
  }
  return size;
}

bool LieAlgebra::is_abelian() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k)
        if (constant(i, j, k) != 0) return false;
  return true;
}

void require_element(const LieAlgebra& L, const Element& e) {
  if (static_cast<int>(e.coords.size()) != L.dim()) {
    throw std::invalid_argument("element " + to_string(e) + " has the wrong dimension for '" + L.name() + "'");
  }
  for (int v : e.coords) {
    if (v < 0 || v >= L.p()) {
      throw std::invalid_argument("element " + to_string(e) + " has a coordinate outside [0, p-1]");
    }
  }
}

Element bracket(const LieAlgebra& L, const Element& x, const Element& y) {
  require_element(L, x);
  require_element(L, y);
  const int n = L.dim();
  std::vector<std::int64_t> acc(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y.coords[j] == 0) continue;
      const std::int64_t xy = std::int64_t{x.coords[i]} * y.coords[j];
      for (int k = 0; k < n; ++k) acc[k] += xy * L.constant(i, j, k);
    }
  }
  Element out;
  out.coords.reserve(acc.size());
  for (auto v : acc) out.coords.push_back(L.field().reduce(v));
  return out;
}

Element add(const LieAlgebra& L, const Element& x, const Element& y) {
  require_element(L, x);
  require_element(L, y);
  Element out = x;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = L.field().add(x.coords[i], y.coords[i]);
  return out;
}

Element scale(const LieAlgebra& L, int alpha, const Element& x) {
  require_element(L, x);
  Element out = x;
  for (auto& v : out.coords) v = L.field().mul(alpha, v);
  return out;
}

Element zero_element(const LieAlgebra& L) { return Element{std::vector<int>(static_cast<std::size_t>(L.dim()), 0)}; }

Element basis_element(const LieAlgebra& L, int i) {
  if (i < 0 || i >= L.dim()) throw std::out_of_range("basis index out of range");
  Element e = zero_element(L);
  e.coords[static_cast<std::size_t>(i)] = 1;
  return e;
}

}  // namespace cfla
