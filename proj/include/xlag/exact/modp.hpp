#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "xlag/exact/rational.hpp"

namespace xlag {

// Element of the prime field F_p with p = 2^61 - 1.
class ModP {
 public:
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

  ModP() = default;
  explicit ModP(std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(kPrime);
    v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(kPrime) : r);
  }
  // Reduces p/q; throws std::domain_error when q vanishes mod p.
  explicit ModP(const Rational& q);

  static ModP raw(std::uint64_t v) {
    ModP m;
    m.v_ = v;
    return m;
  }
  static ModP random(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1, kPrime - 1);
    return raw(dist(rng));
  }

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  ModP operator+(ModP o) const {
    std::uint64_t s = v_ + o.v_;
    if (s >= kPrime) s -= kPrime;
    return raw(s);
  }
  ModP operator-(ModP o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + kPrime - o.v_); }
  ModP operator-() const { return raw(v_ == 0 ? 0 : kPrime - v_); }
  ModP operator*(ModP o) const {
    unsigned __int128 p = static_cast<unsigned __int128>(v_) * o.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kPrime) s -= kPrime;
    return raw(s);
  }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }

  ModP pow(std::uint64_t e) const {
    ModP base = *this, acc = raw(1);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }
  ModP inv() const {
    if (v_ == 0) throw std::domain_error("ModP: inverse of zero");
    return pow(kPrime - 2);
  }
  ModP operator/(ModP o) const { return *this * o.inv(); }
  ModP& operator/=(ModP o) { return *this = *this / o; }

  bool operator==(const ModP&) const = default;

 private:
  std::uint64_t v_ = 0;
};

}  // namespace xlag
