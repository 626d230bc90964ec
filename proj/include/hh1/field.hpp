#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace hh1 {

using Elem = std::uint32_t;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime field GF(p), p odd. Elements are plain residues in [0, p).
class Field {
 public:
  Field() = default;
  explicit Field(std::uint32_t p) : p_(p) {
    if (p < 3 || !is_prime(p))
      throw FieldError("characteristic must be an odd prime >= 3, got " + std::to_string(p));
  }

  std::uint32_t p() const { return p_; }

  Elem reduce(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw FieldError("division by zero in GF(" + std::to_string(p_) + ")");
    return pow(a, p_ - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  // Not std::uniform_int_distribution: its output is implementation-defined,
  // and seeded runs must reproduce across standard libraries.
  Elem random(std::mt19937_64& rng) const { return static_cast<Elem>(rng() % p_); }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t p_ = 3;
};

inline void require_same_field(const Field& a, const Field& b) {
  if (a != b)
    throw FieldError("mixed characteristics: " + std::to_string(a.p()) + " vs " +
                     std::to_string(b.p()));
}

}  // namespace hh1
