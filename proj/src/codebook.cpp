#include "cfla/codebook.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfla {

namespace {

void normalize(std::vector<Rational>& axis) {
  std::sort(axis.begin(), axis.end());
  axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
  if (axis.size() > 0xFFFFU) throw std::length_error("too many distinct membership values to encode");
}

std::uint32_t rank_in(const std::vector<Rational>& axis, const Rational& v) {
  const auto it = std::lower_bound(axis.begin(), axis.end(), v);
  if (it == axis.end() || *it != v) throw std::out_of_range("value " + format_rational(v) + " is not in the codebook");
  return static_cast<std::uint32_t>(it - axis.begin());
}

}  // namespace

Codebook::Codebook(std::initializer_list<std::span<const Membership>> sources) {
  for (const auto& values : sources) {
    for (const auto& m : values) {
      r_axis_.push_back(m.r());
      w_axis_.push_back(m.w_over_pi());
    }
  }
  normalize(r_axis_);
  normalize(w_axis_);
}

Codebook Codebook::scalar(std::span<const Rational> values) {
  Codebook book;
  book.r_axis_.assign(values.begin(), values.end());
  normalize(book.r_axis_);
  book.w_axis_ = book.r_axis_;
  return book;
}

Code Codebook::encode(const Membership& m) const {
  return pack_code(rank_in(r_axis_, m.r()), rank_in(w_axis_, m.w_over_pi()));
}

Code Codebook::encode_scalar(const Rational& v) const {
  const auto rank = rank_in(r_axis_, v);
  return pack_code(rank, rank);
}

std::vector<Code> Codebook::encode_all(std::span<const Membership> values) const {
  std::vector<Code> out;
  out.reserve(values.size());
  for (const auto& m : values) out.push_back(encode(m));
  return out;
}

std::vector<Code> Codebook::encode_all_scalar(std::span<const Rational> values) const {
  std::vector<Code> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(encode_scalar(v));
  return out;
}

Membership Codebook::decode(Code c) const {
  return Membership(r_axis_.at(r_rank(c)), w_axis_.at(w_rank(c)));
}

}  // namespace cfla
