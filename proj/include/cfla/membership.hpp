#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace cfla {

using Rational = boost::rational<std::int64_t>;

/// Parses "num/den" or a bare integer. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);
/// "3/5", "0", "2"
std::string format_rational(const Rational& q);

/// A point r·e^{iw} of the closed unit disc, held exactly.
///
/// The phase is stored as its coefficient over pi, so w = w_over_pi · pi with
/// 0 <= w_over_pi <= 2. The endpoints w = 0 and w = 2pi are distinct values:
/// the phase is an ordered interval, not an angle on a circle.
class Membership {
 public:
  Membership() = default;
  /// Throws std::out_of_range unless 0 <= r <= 1 and 0 <= w_over_pi <= 2.
  Membership(Rational r, Rational w_over_pi);

  static Membership zero() { return {}; }
  static Membership parse(std::string_view r, std::string_view w_over_pi);

  const Rational& r() const { return r_; }
  const Rational& w_over_pi() const { return w_; }

  friend bool operator==(const Membership& a, const Membership& b) {
    return a.r_ == b.r_ && a.w_ == b.w_;
  }

 private:
  Rational r_{0};
  Rational w_{0};
};

enum class Order { less, equal, greater, incomparable };

/// Componentwise order: m1 <= m2 iff r1 <= r2 and w1 <= w2.
Order cmp_membership(const Membership& a, const Membership& b);

inline bool leq(const Membership& a, const Membership& b) {
  return a.r() <= b.r() && a.w_over_pi() <= b.w_over_pi();
}
inline bool geq(const Membership& a, const Membership& b) { return leq(b, a); }
/// Strict in the partial order: a >= b and a != b.
inline bool gt(const Membership& a, const Membership& b) { return leq(b, a) && !(a == b); }

Membership meet(const Membership& a, const Membership& b);
Membership join(const Membership& a, const Membership& b);

/// "3/5·e^{i(1/2)π}" style rendering for human output.
std::string to_string(const Membership& m);
std::string_view to_string(Order o);

}  // namespace cfla
