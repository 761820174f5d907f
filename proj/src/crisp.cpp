#include "cfla/crisp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cfla {

CrispSubset::CrispSubset(const Carrier& carrier, std::vector<std::uint32_t> indices)
    : p_(carrier.p()), dim_(carrier.dim()), members_(std::move(indices)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= carrier.size()) {
    throw std::invalid_argument("crisp subset member outside the carrier");
  }
}

CrispSubset CrispSubset::from_elements(const Carrier& carrier, const std::vector<Element>& elements) {
  std::vector<std::uint32_t> idx;
  idx.reserve(elements.size());
  for (const auto& e : elements) idx.push_back(static_cast<std::uint32_t>(carrier.index_of(e)));
  return CrispSubset(carrier, std::move(idx));
}

CrispSubset CrispSubset::whole(const Carrier& carrier) {
  std::vector<std::uint32_t> idx(carrier.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::uint32_t>(i);
  return CrispSubset(carrier, std::move(idx));
}

bool CrispSubset::contains(std::size_t idx) const {
  return std::binary_search(members_.begin(), members_.end(), static_cast<std::uint32_t>(idx));
}

std::vector<Element> CrispSubset::elements(const Carrier& carrier) const {
  std::vector<Element> out;
  out.reserve(members_.size());
  for (auto i : members_) out.push_back(carrier.element(i));
  return out;
}

std::vector<bool> CrispSubset::mask(const Carrier& carrier) const {
  std::vector<bool> m(carrier.size(), false);
  for (auto i : members_) m[i] = true;
  return m;
}

bool CrispSubset::subset_of(const CrispSubset& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

namespace {

void require_same_carrier(const LieAlgebra& L, const CrispSubset& S) {
  if (S.p() != L.p() || S.dim() != L.dim()) {
    throw std::invalid_argument("crisp subset does not live on the carrier of '" + L.name() + "'");
  }
}

// Members of S in witness-scan order.
std::vector<std::uint32_t> scan_members(const Carrier& C, const std::vector<bool>& in) {
  std::vector<std::uint32_t> out;
  for (auto idx : C.scan_order())
    if (in[idx]) out.push_back(idx);
  return out;
}

Witness closure_witness(const Carrier& C, std::string condition, std::vector<std::size_t> elems,
                        std::optional<std::int64_t> scalar = std::nullopt) {
  Witness w;
  w.condition = std::move(condition);
  for (auto e : elems) w.elements.push_back(C.element(e));
  w.scalar = scalar;
  w.detail = "result is not in the set";
  return w;
}

// Subspace part shared by the subalgebra and ideal checks.
std::optional<Witness> subspace_violation(const Carrier& C, const std::vector<bool>& in,
                                          const std::vector<std::uint32_t>& members) {
  const auto scalars = C.scalar_scan_order();
  for (auto x : members)
    for (int a : scalars) {
      const auto ax = C.scale(a, x);
      if (!in[ax]) return closure_witness(C, "scalar", {x, ax}, a);
    }
  for (auto x : members)
    for (auto y : members) {
      const auto s = C.add(x, y);
      if (!in[s]) return closure_witness(C, "sum", {x, y, s});
    }
  return std::nullopt;
}

}  // namespace

CheckResult is_crisp_subalgebra(const LieAlgebra& L, const CrispSubset& S) {
  require_same_carrier(L, S);
  const Carrier C(L);
  const auto in = S.mask(C);
  const auto members = scan_members(C, in);
  if (auto w = subspace_violation(C, in, members)) return CheckResult::failure(std::move(*w));
  std::vector<std::int32_t> row(members.size());
  for (auto x : members) {
    bracket_row(L, C, x, members, row);
    for (std::size_t t = 0; t < members.size(); ++t) {
      if (!in[static_cast<std::size_t>(row[t])]) {
        return CheckResult::failure(closure_witness(C, "bracket", {x, members[t], static_cast<std::size_t>(row[t])}));
      }
    }
  }
  return CheckResult::pass();
}

CheckResult is_crisp_ideal(const LieAlgebra& L, const CrispSubset& S) {
  require_same_carrier(L, S);
  const Carrier C(L);
  const auto in = S.mask(C);
  const auto members = scan_members(C, in);
  if (auto w = subspace_violation(C, in, members)) return CheckResult::failure(std::move(*w));
  const auto all = C.scan_order();
  std::vector<std::int32_t> row(all.size());
  for (auto x : members) {
    bracket_row(L, C, x, all, row);
    for (std::size_t t = 0; t < all.size(); ++t) {
      if (!in[static_cast<std::size_t>(row[t])]) {
        return CheckResult::failure(closure_witness(C, "bracket-ideal", {x, all[t], static_cast<std::size_t>(row[t])}));
      }
    }
  }
  return CheckResult::pass();
}

CrispSubset span_of(const Carrier& carrier, const std::vector<std::uint32_t>& generators) {
  std::vector<bool> in(carrier.size(), false);
  std::vector<std::uint32_t> members{0};
  in[0] = true;
  for (auto g : generators) {
    if (in[g]) continue;
    const std::vector<std::uint32_t> base = members;
    for (int a = 1; a < carrier.p(); ++a) {
      const auto ag = carrier.scale(a, g);
      for (auto s : base) {
        const auto v = static_cast<std::uint32_t>(carrier.add(s, ag));
        if (!in[v]) {
          in[v] = true;
          members.push_back(v);
        }
      }
    }
  }
  return CrispSubset(carrier, std::move(members));
}

std::vector<CrispSubset> all_subspaces(const Carrier& carrier) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<CrispSubset> frontier{span_of(carrier, {})};
  std::vector<CrispSubset> out;
  seen.insert(frontier.front().indices());
  while (!frontier.empty()) {
    std::vector<CrispSubset> next;
    for (const auto& S : frontier) {
      out.push_back(S);
      const auto in = S.mask(carrier);
      for (std::uint32_t v = 0; v < carrier.size(); ++v) {
        if (in[v]) continue;
        auto gens = S.indices();
        gens.push_back(v);
        auto T = span_of(carrier, gens);
        if (seen.insert(T.indices()).second) next.push_back(std::move(T));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const CrispSubset& a, const CrispSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
  });
  return out;
}

std::vector<CrispSubset> crisp_subalgebras(const LieAlgebra& L) {
  std::vector<CrispSubset> out;
  for (auto& S : all_subspaces(Carrier(L)))
    if (is_crisp_subalgebra(L, S).ok()) out.push_back(std::move(S));
  return out;
}

std::vector<CrispSubset> crisp_ideals(const LieAlgebra& L) {
  std::vector<CrispSubset> out;
  for (auto& S : all_subspaces(Carrier(L)))
    if (is_crisp_ideal(L, S).ok()) out.push_back(std::move(S));
  return out;
}

}  // namespace cfla
