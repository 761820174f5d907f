#pragma once

#include <cstdint>

namespace cfla {

bool is_prime(int n);

/// The prime field F_p. Arithmetic results are always reduced into [0, p).
class FieldPrime {
 public:
  static constexpr int kMaxPrime = 31;

  /// Throws std::invalid_argument unless p is prime and 2 <= p <= max_prime.
  explicit FieldPrime(int p, int max_prime = kMaxPrime);

  int p() const { return p_; }

  int reduce(std::int64_t v) const {
    auto r = static_cast<int>(v % p_);
    return r < 0 ? r + p_ : r;
  }
  int add(int a, int b) const { return reduce(std::int64_t{a} + b); }
  int sub(int a, int b) const { return reduce(std::int64_t{a} - b); }
  int mul(int a, int b) const { return reduce(std::int64_t{a} * b); }
  int neg(int a) const { return reduce(-std::int64_t{a}); }
  /// Multiplicative inverse; a must be nonzero mod p.
  int inv(int a) const;

  friend bool operator==(const FieldPrime&, const FieldPrime&) = default;

 private:
  int p_;
};

}  // namespace cfla
