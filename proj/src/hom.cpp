#include "cfla/hom.hpp"

#include <stdexcept>

#include "cfla/catalog.hpp"
#include "cfla/errors.hpp"

namespace cfla {

int rank_mod_p(std::vector<std::vector<int>> rows, const FieldPrime& field) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows.size(); ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && field.reduce(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    auto& prow = rows[static_cast<std::size_t>(rank)];
    const int inv = field.inv(prow[col]);
    for (auto& v : prow) v = field.mul(v, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      const int f = field.reduce(rows[r][col]);
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) rows[r][c] = field.sub(rows[r][c], field.mul(f, prow[c]));
    }
    ++rank;
  }
  return rank;
}

LieHom::LieHom(std::string name, LieAlgebra source, LieAlgebra target, std::vector<std::vector<int>> matrix)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!(source_.field() == target_.field())) {
    throw std::invalid_argument("hom '" + name_ + "': source and target fields differ");
  }
  if (static_cast<int>(matrix_.size()) != target_.dim()) {
    throw std::invalid_argument("hom '" + name_ + "': matrix needs " + std::to_string(target_.dim()) + " rows");
  }
  for (auto& row : matrix_) {
    if (static_cast<int>(row.size()) != source_.dim()) {
      throw std::invalid_argument("hom '" + name_ + "': matrix rows need " + std::to_string(source_.dim()) + " entries");
    }
    for (auto& v : row) v = source_.field().reduce(v);
  }
  rank_ = rank_mod_p(matrix_, source_.field());
}

Element LieHom::apply(const Element& x) const {
  require_element(source_, x);
  Element y{std::vector<int>(static_cast<std::size_t>(target_.dim()), 0)};
  for (int i = 0; i < target_.dim(); ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < source_.dim(); ++j) s += std::int64_t{entry(i, j)} * x.coords[static_cast<std::size_t>(j)];
    y.coords[static_cast<std::size_t>(i)] = target_.field().reduce(s);
  }
  return y;
}

std::vector<std::size_t> LieHom::index_map(const Carrier& source, const Carrier& target) const {
  std::vector<std::size_t> out(source.size());
  std::vector<int> coords(static_cast<std::size_t>(target_.dim()));
  const int p = target_.p();
  for (std::size_t x = 0; x < source.size(); ++x) {
    const auto d = source.digits(x);
    for (int i = 0; i < target_.dim(); ++i) {
      int s = 0;
      for (int j = 0; j < source_.dim(); ++j) s += entry(i, j) * d[static_cast<std::size_t>(j)];
      coords[static_cast<std::size_t>(i)] = s % p;
    }
    out[x] = target.index_of_digits(coords);
  }
  return out;
}

HomValidation validate_hom(const LieHom& phi) {
  HomValidation out;
  out.rank = phi.rank();
  out.surjective = phi.surjective();
  const auto& L = phi.source();
  const auto& T = phi.target();
  for (int i = 0; i < L.dim(); ++i)
    for (int j = 0; j < L.dim(); ++j) {
      const auto ei = basis_element(L, i);
      const auto ej = basis_element(L, j);
      const auto lhs = phi.apply(bracket(L, ei, ej));
      const auto rhs = bracket(T, phi.apply(ei), phi.apply(ej));
      if (lhs != rhs) {
        Witness w;
        w.condition = "bracket-preservation";
        w.indices = {i, j};
        w.elements = {lhs, rhs};
        w.detail = "phi([e_i, e_j]) != [phi(e_i), phi(e_j)]";
        out.result = CheckResult::failure(std::move(w));
        return out;
      }
    }
  return out;
}

namespace {

void require_valid(const LieHom& phi) {
  if (const auto v = validate_hom(phi); !v.result.ok()) {
    throw PreconditionError("'" + phi.name() + "' is not a Lie algebra homomorphism: " + describe(v.result));
  }
}

}  // namespace

ComplexFuzzySet preimage_cfs(const LieHom& phi, const ComplexFuzzySet& B) {
  require_valid(phi);
  const Carrier src(phi.source());
  const Carrier dst(phi.target());
  if (!B.lives_on(dst)) throw CarrierMismatch("preimage: set is not on the target of '" + phi.name() + "'");
  const auto map = phi.index_map(src, dst);
  std::vector<Membership> values;
  values.reserve(src.size());
  for (auto y : map) values.push_back(B[y]);
  return {src, std::move(values)};
}

ComplexFuzzySet image_cfs(const LieHom& phi, const ComplexFuzzySet& A) {
  require_valid(phi);
  const Carrier src(phi.source());
  const Carrier dst(phi.target());
  if (!A.lives_on(src)) throw CarrierMismatch("image: set is not on the source of '" + phi.name() + "'");
  const auto map = phi.index_map(src, dst);
  std::vector<Membership> values(dst.size(), Membership::zero());
  std::vector<bool> hit(dst.size(), false);
  for (std::size_t x = 0; x < src.size(); ++x) {
    const auto y = map[x];
    values[y] = hit[y] ? join(values[y], A[x]) : A[x];
    hit[y] = true;
  }
  return {dst, std::move(values)};
}

LieHom identity_hom(const LieAlgebra& L) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(L.dim()), std::vector<int>(static_cast<std::size_t>(L.dim()), 0));
  for (int i = 0; i < L.dim(); ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return LieHom("id-" + L.name(), L, L, std::move(m));
}

std::vector<LieHom> catalog_homs(int p) {
  const auto a1 = make_catalog_algebra("abelian-1", p);
  const auto a2 = make_catalog_algebra("abelian-2", p);
  const auto a3 = make_catalog_algebra("abelian-3", p);
  const auto cross = make_catalog_algebra("cross3", p);
  const auto heis = make_catalog_algebra("heisenberg3", p);
  std::vector<LieHom> out;
  out.push_back(identity_hom(cross));
  out.emplace_back("cycle-cross3", cross, cross, std::vector<std::vector<int>>{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  out.push_back(identity_hom(heis));
  out.push_back(identity_hom(a2));
  out.emplace_back("swap-abelian-2", a2, a2, std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  out.emplace_back("proj-heisenberg3-abelian-2", heis, a2, std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}});
  out.emplace_back("proj-heisenberg3-abelian-1", heis, a1, std::vector<std::vector<int>>{{1, 0, 0}});
  out.emplace_back("proj-abelian-3-abelian-2", a3, a2, std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}});
  out.emplace_back("proj-abelian-2-abelian-1", a2, a1, std::vector<std::vector<int>>{{1, 0}});
  out.emplace_back("embed-abelian-1-abelian-2", a1, a2, std::vector<std::vector<int>>{{1}, {0}});
  out.emplace_back("embed-abelian-2-heisenberg3", a2, heis, std::vector<std::vector<int>>{{1, 0}, {0, 0}, {0, 1}});
  if (p != 2) out.push_back(identity_hom(make_catalog_algebra("sl2", p)));
  return out;
}

}  // namespace cfla
