#include "cfla/membership.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

#include "cfla/check_result.hpp"

namespace cfla {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Membership::Membership(Rational r, Rational w_over_pi) : r_(r), w_(w_over_pi) {
  if (r_ < 0 || r_ > 1) throw std::out_of_range("amplitude " + format_rational(r_) + " outside [0, 1]");
  if (w_ < 0 || w_ > 2) throw std::out_of_range("phase " + format_rational(w_) + "·pi outside [0, 2pi]");
}

Membership Membership::parse(std::string_view r, std::string_view w_over_pi) {
  return Membership(parse_rational(r), parse_rational(w_over_pi));
}

Order cmp_membership(const Membership& a, const Membership& b) {
  if (a == b) return Order::equal;
  if (leq(a, b)) return Order::less;
  if (leq(b, a)) return Order::greater;
  return Order::incomparable;
}

Membership meet(const Membership& a, const Membership& b) {
  return Membership(std::min(a.r(), b.r()), std::min(a.w_over_pi(), b.w_over_pi()));
}

Membership join(const Membership& a, const Membership& b) {
  return Membership(std::max(a.r(), b.r()), std::max(a.w_over_pi(), b.w_over_pi()));
}

std::string to_string(const Membership& m) {
  return format_rational(m.r()) + "·e^{i(" + format_rational(m.w_over_pi()) + ")π}";
}

std::string_view to_string(Order o) {
  switch (o) {
    case Order::less: return "LT";
    case Order::equal: return "EQ";
    case Order::greater: return "GT";
    case Order::incomparable: return "INCOMPARABLE";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ok: return "OK";
    case Verdict::fail: return "FAIL";
    case Verdict::not_homogeneous: return "NOT_HOMOGENEOUS";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  if (text == "OK") return Verdict::ok;
  if (text == "FAIL") return Verdict::fail;
  if (text == "NOT_HOMOGENEOUS") return Verdict::not_homogeneous;
  return std::nullopt;
}

std::string describe(const CheckResult& result) {
  std::string out(to_string(result.verdict));
  if (!result.witness) return out;
  const auto& w = *result.witness;
  out += " [" + w.condition + "]";
  for (std::size_t i = 0; i < w.elements.size(); ++i) out += " " + to_string(w.elements[i]);
  if (w.scalar) out += " alpha=" + std::to_string(*w.scalar);
  if (!w.indices.empty()) {
    out += " indices=";
    for (std::size_t i = 0; i < w.indices.size(); ++i) out += (i ? "," : "") + std::to_string(w.indices[i]);
  }
  for (const auto& v : w.values) out += " " + to_string(v);
  if (!w.detail.empty()) out += " (" + w.detail + ")";
  return out;
}

}  // namespace cfla
