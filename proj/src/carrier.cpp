#include "cfla/carrier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cfla/errors.hpp"

namespace cfla {

Carrier::Carrier(int p, int dim, std::size_t budget) : p_(p), dim_(dim), size_(1) {
  if (p < 2 || dim < kMinDim || dim > kMaxDim) throw std::invalid_argument("invalid carrier shape");
  for (int i = 0; i < dim; ++i) {
    size_ *= static_cast<std::size_t>(p);
    if (size_ > budget) {
      throw BudgetExceeded("carrier of size " + std::to_string(p) + "^" + std::to_string(dim) +
                           " exceeds the enumeration budget " + std::to_string(budget));
    }
  }
  place_.assign(static_cast<std::size_t>(dim), 1);
  for (int k = dim - 2; k >= 0; --k) place_[k] = place_[k + 1] * static_cast<std::size_t>(p);

  const auto n = static_cast<std::size_t>(dim);
  digits_.resize(size_ * n);
  for (std::size_t idx = 0; idx < size_; ++idx) {
    std::size_t rest = idx;
    for (std::size_t k = 0; k < n; ++k) {
      digits_[idx * n + k] = static_cast<std::uint8_t>(rest / place_[k]);
      rest %= place_[k];
    }
  }

  // Scan order: lexicographic with residue rank (d + p - 1) mod p, i.e. 1 < 2 < ... < p-1 < 0.
  scan_.resize(size_);
  std::iota(scan_.begin(), scan_.end(), 0U);
  auto scan_key = [&](std::uint32_t idx) {
    std::size_t key = 0;
    for (std::size_t k = 0; k < n; ++k) {
      key = key * static_cast<std::size_t>(p) + static_cast<std::size_t>((digits_[idx * n + k] + p - 1) % p);
    }
    return key;
  };
  std::sort(scan_.begin(), scan_.end(), [&](std::uint32_t a, std::uint32_t b) { return scan_key(a) < scan_key(b); });
}

Element Carrier::element(std::size_t idx) const {
  if (idx >= size_) throw std::out_of_range("element index out of range");
  const auto d = digits(idx);
  return Element{std::vector<int>(d.begin(), d.end())};
}

std::size_t Carrier::index_of(const Element& e) const {
  if (static_cast<int>(e.coords.size()) != dim_) {
    throw std::invalid_argument("element " + to_string(e) + " has dimension " + std::to_string(e.coords.size()) +
                                ", expected " + std::to_string(dim_));
  }
  for (int v : e.coords) {
    if (v < 0 || v >= p_) throw std::invalid_argument("element " + to_string(e) + " has a coordinate outside [0, p-1]");
  }
  return index_of_digits(e.coords);
}

std::size_t Carrier::index_of_digits(std::span<const int> coords) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) idx += place_[k] * static_cast<std::size_t>(coords[k]);
  return idx;
}

std::size_t Carrier::add(std::size_t a, std::size_t b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  std::size_t idx = 0;
  for (std::size_t k = 0; k < da.size(); ++k) {
    int s = da[k] + db[k];
    if (s >= p_) s -= p_;
    idx += place_[k] * static_cast<std::size_t>(s);
  }
  return idx;
}

std::size_t Carrier::sub(std::size_t a, std::size_t b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  std::size_t idx = 0;
  for (std::size_t k = 0; k < da.size(); ++k) {
    int s = da[k] - db[k];
    if (s < 0) s += p_;
    idx += place_[k] * static_cast<std::size_t>(s);
  }
  return idx;
}

std::size_t Carrier::scale(int alpha, std::size_t a) const {
  alpha %= p_;
  if (alpha < 0) alpha += p_;
  const auto da = digits(a);
  std::size_t idx = 0;
  for (std::size_t k = 0; k < da.size(); ++k) idx += place_[k] * static_cast<std::size_t>((alpha * da[k]) % p_);
  return idx;
}

std::vector<int> Carrier::scalar_scan_order() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p_));
  for (int a = 1; a < p_; ++a) out.push_back(a);
  out.push_back(0);
  return out;
}

std::vector<Element> enumerate_carrier(const LieAlgebra& L, std::size_t budget) {
  const Carrier carrier(L, budget);
  std::vector<Element> out;
  out.reserve(carrier.size());
  for (std::size_t i = 0; i < carrier.size(); ++i) out.push_back(carrier.element(i));
  return out;
}

void bracket_row(const LieAlgebra& L, const Carrier& C, std::size_t x, std::span<const std::uint32_t> ys,
                 std::span<std::int32_t> out) {
  const int n = L.dim();
  const int p = L.p();
  // ad_x[j][k] = coefficient of e_k in [x, e_j]
  int ad[kMaxDim][kMaxDim] = {};
  const auto dx = C.digits(x);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      int s = 0;
      for (int i = 0; i < n; ++i) s += dx[i] * L.constant(i, j, k);
      ad[j][k] = s % p;
    }
  int coords[kMaxDim];
  for (std::size_t t = 0; t < ys.size(); ++t) {
    const auto dy = C.digits(ys[t]);
    for (int k = 0; k < n; ++k) {
      int s = 0;
      for (int j = 0; j < n; ++j) s += ad[j][k] * dy[j];
      coords[k] = s % p;
    }
    out[t] = static_cast<std::int32_t>(C.index_of_digits(std::span<const int>(coords, static_cast<std::size_t>(n))));
  }
}

std::size_t bracket_index(const LieAlgebra& L, const Carrier& C, std::size_t x, std::size_t y) {
  const std::uint32_t ys[1] = {static_cast<std::uint32_t>(y)};
  std::int32_t out[1];
  bracket_row(L, C, x, ys, out);
  return static_cast<std::size_t>(out[0]);
}

}  // namespace cfla
