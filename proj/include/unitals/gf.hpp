#pragma once

// Table-driven arithmetic in GF(p^h), p^h <= 2^16.
//
// An element is addressed by its index: the coefficient vector of its
// polynomial representative read as a base-p number, constant term least
// significant. Index 0 is zero and index 1 is one. Multiplication goes through
// exp/log tables for a fixed primitive element; small fields additionally keep
// full addition and multiplication tables so the enumeration loops are pure
// lookups.

#include <cstdint>
#include <optional>
#include <vector>

namespace unitals {

using Elem = std::uint32_t;

enum class QuadChar : std::uint8_t { Zero, NonzeroSquare, NonSquare };

class Field {
 public:
  static constexpr unsigned kMaxOrder = 1u << 16;

  /// Builds GF(p^h). Without an explicit modulus the lexicographically first
  /// irreducible monic polynomial of degree h is used (lower coefficients read
  /// as a base-p counter, constant term least significant).
  /// Modulus coefficients are ascending and must include the leading 1.
  Field(unsigned p, unsigned h, std::optional<std::vector<unsigned>> modulus = std::nullopt);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return h_; }
  unsigned order() const noexcept { return m_; }
  bool odd() const noexcept { return p_ != 2; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
  Elem primitive() const noexcept { return primitive_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (!add_.empty()) return add_[a * m_ + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (!mul_.empty()) return mul_[a * m_ + b];
    if (a == 0 || b == 0) return 0;
    unsigned e = log_[a] + log_[b];
    if (e >= m_ - 1) e -= m_ - 1;
    return exp_[e];
  }
  Elem sqr(Elem a) const noexcept { return mul(a, a); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const noexcept;
  Elem two() const noexcept { return from_int(2); }

  unsigned log(Elem a) const;
  Elem exp(long long k) const noexcept;

  QuadChar quadratic_character(Elem a) const noexcept { return quad_[a]; }
  bool is_nonzero_square(Elem a) const noexcept { return quad_[a] == QuadChar::NonzeroSquare; }
  bool is_nonsquare(Elem a) const noexcept { return quad_[a] == QuadChar::NonSquare; }

  /// A root r with r*r == a, choosing the smaller index when there are two.
  std::optional<Elem> sqrt(Elem a) const noexcept {
    const Elem r = sqrt_[a];
    if (r == kNoRoot) return std::nullopt;
    return r;
  }

  /// Fixed points of x -> x^q for q*q == order(), sorted by index.
  std::vector<Elem> subfield_elements(unsigned small_order) const;

  /// e^(q+1) for a field of order q^2.
  Elem frobenius_norm(Elem e, unsigned q) const;

  /// Non-square of smallest index (odd characteristic).
  Elem first_nonsquare() const;

  std::vector<unsigned> coefficients(Elem a) const;

 private:
  static constexpr Elem kNoRoot = 0xffffffffu;

  Elem add_slow(Elem a, Elem b) const noexcept;
  Elem poly_mul(Elem a, Elem b) const;

  unsigned p_;
  unsigned h_;
  unsigned m_;
  std::vector<unsigned> modulus_;
  Elem primitive_ = 1;

  std::vector<std::uint16_t> exp_;  // length m-1
  std::vector<std::uint16_t> log_;  // log_[0] unused
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> sqrt_;
  std::vector<QuadChar> quad_;
  std::vector<Elem> add_;  // m*m, only for small fields
  std::vector<Elem> mul_;  // m*m, only for small fields
};

bool is_prime(unsigned v) noexcept;

/// Splits a prime power into (p, h); nullopt if v is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned v) noexcept;

/// Trial division against every monic polynomial of degree <= h/2.
bool is_irreducible(const std::vector<unsigned>& poly, unsigned p);

}  // namespace unitals
