#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cfla/membership.hpp"

namespace cfla {

/// Packed order code for a membership value: amplitude rank in the high 16
/// bits, phase rank in the low 16 bits. Ranks come from a Codebook, so the
/// componentwise order on codes is exactly the componentwise order on values.
using Code = std::uint32_t;

inline constexpr Code pack_code(std::uint32_t r_rank, std::uint32_t w_rank) { return (r_rank << 16) | w_rank; }
inline constexpr std::uint32_t r_rank(Code c) { return c >> 16; }
inline constexpr std::uint32_t w_rank(Code c) { return c & 0xFFFFU; }

class Codebook {
 public:
  Codebook() = default;
  /// Ranks every amplitude and phase appearing in any of the given value lists.
  explicit Codebook(std::initializer_list<std::span<const Membership>> sources);
  /// A scalar codebook: one axis shared by both halves of the code.
  static Codebook scalar(std::span<const Rational> values);

  Code encode(const Membership& m) const;
  /// Both halves carry the same rank.
  Code encode_scalar(const Rational& v) const;
  std::vector<Code> encode_all(std::span<const Membership> values) const;
  std::vector<Code> encode_all_scalar(std::span<const Rational> values) const;
  Membership decode(Code c) const;
  Rational decode_scalar(Code c) const { return r_axis_.at(r_rank(c)); }

  std::size_t r_axis_size() const { return r_axis_.size(); }
  std::size_t w_axis_size() const { return w_axis_.size(); }

 private:
  std::vector<Rational> r_axis_;
  std::vector<Rational> w_axis_;
};

}  // namespace cfla
