#include "unitals/gf.hpp"

#include <algorithm>

#include "unitals/error.hpp"

namespace unitals {

namespace {

constexpr unsigned kTableLimit = 1024;

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over GF(p).
Poly poly_rem(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p * p - lead * b[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits(unsigned value, unsigned p, unsigned len) {
  Poly out(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

unsigned undigits(const Poly& d, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

bool is_prime(unsigned v) noexcept {
  if (v < 2) return false;
  for (unsigned d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned v) noexcept {
  if (v < 2) return std::nullopt;
  unsigned p = 2;
  while (v % p != 0) ++p;
  unsigned h = 0;
  while (v % p == 0) {
    v /= p;
    ++h;
  }
  if (v != 1) return std::nullopt;
  return std::make_pair(p, h);
}

bool is_irreducible(const std::vector<unsigned>& poly, unsigned p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned h = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= h / 2; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned low = 0; low < count; ++low) {
      Poly g = digits(low, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field::Field(unsigned p, unsigned h, std::optional<std::vector<unsigned>> modulus) : p_(p), h_(h) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (h == 0) throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
  unsigned long long m = 1;
  for (unsigned i = 0; i < h; ++i) {
    m *= p;
    if (m > kMaxOrder) throw Error(ErrorCode::FieldTooLarge, "field order exceeds 2^16");
  }
  m_ = static_cast<unsigned>(m);

  if (modulus) {
    if (modulus->size() != h + 1 || modulus->back() != 1) {
      throw Error(ErrorCode::DegreeMismatch, "modulus must be monic of degree " + std::to_string(h));
    }
    for (unsigned c : *modulus) {
      if (c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
    }
    if (!is_irreducible(*modulus, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible");
    modulus_ = *modulus;
  } else {
    for (unsigned low = 0; low < m_; ++low) {
      Poly g = digits(low, p, h);
      g.push_back(1);
      if (is_irreducible(g, p)) {
        modulus_ = g;
        break;
      }
    }
  }

  neg_.resize(m_);
  for (Elem a = 0; a < m_; ++a) {
    Poly d = digits(a, p_, h_);
    for (auto& c : d) c = (p_ - c) % p_;
    neg_[a] = undigits(d, p_);
  }

  // Smallest-index primitive element.
  const unsigned group = m_ - 1;
  for (Elem g = 1; g < m_; ++g) {
    Elem x = g;
    unsigned ord = 1;
    while (x != 1) {
      x = poly_mul(x, g);
      ++ord;
    }
    if (ord == group) {
      primitive_ = g;
      break;
    }
  }

  exp_.resize(group);
  log_.assign(m_, 0);
  Elem x = 1;
  for (unsigned k = 0; k < group; ++k) {
    exp_[k] = static_cast<std::uint16_t>(x);
    log_[x] = static_cast<std::uint16_t>(k);
    x = poly_mul(x, primitive_);
  }

  if (m_ <= kTableLimit) {
    add_.resize(static_cast<std::size_t>(m_) * m_);
    mul_.resize(static_cast<std::size_t>(m_) * m_);
    for (Elem a = 0; a < m_; ++a) {
      for (Elem b = 0; b < m_; ++b) {
        add_[a * m_ + b] = add_slow(a, b);
        if (a == 0 || b == 0) {
          mul_[a * m_ + b] = 0;
        } else {
          mul_[a * m_ + b] = exp_[(log_[a] + log_[b]) % group];
        }
      }
    }
  }

  inv_.assign(m_, 0);
  for (Elem a = 1; a < m_; ++a) inv_[a] = exp_[(group - log_[a]) % group];

  quad_.assign(m_, QuadChar::NonzeroSquare);
  quad_[0] = QuadChar::Zero;
  if (odd()) {
    for (Elem a = 1; a < m_; ++a) {
      quad_[a] = (log_[a] % 2 == 0) ? QuadChar::NonzeroSquare : QuadChar::NonSquare;
    }
  }

  sqrt_.assign(m_, kNoRoot);
  for (Elem r = 0; r < m_; ++r) {
    const Elem s = mul(r, r);
    if (sqrt_[s] == kNoRoot || r < sqrt_[s]) sqrt_[s] = r;
  }
}

Elem Field::add_slow(Elem a, Elem b) const noexcept {
  if (p_ == 2) return a ^ b;
  Elem out = 0;
  Elem scale = 1;
  while (a != 0 || b != 0) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::poly_mul(Elem a, Elem b) const {
  const Poly da = digits(a, p_, h_);
  const Poly db = digits(b, p_, h_);
  Poly prod(2 * h_, 0);
  for (unsigned i = 0; i < h_; ++i) {
    for (unsigned j = 0; j < h_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  Poly r = poly_rem(prod, modulus_, p_);
  r.resize(h_, 0);
  return undigits(r, p_);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return inv_[a];
}

Elem Field::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw Error(ErrorCode::DivisionByZero, "negative power of zero");
  }
  const long long group = m_ - 1;
  long long r = e % group;
  if (r < 0) r += group;
  return exp_[(static_cast<long long>(log_[a]) * r) % group];
}

Elem Field::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

unsigned Field::log(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "log of zero");
  return log_[a];
}

Elem Field::exp(long long k) const noexcept {
  const long long group = m_ - 1;
  long long r = k % group;
  if (r < 0) r += group;
  return exp_[r];
}

std::vector<Elem> Field::subfield_elements(unsigned small_order) const {
  if (static_cast<unsigned long long>(small_order) * small_order != m_) {
    throw Error(ErrorCode::NotASubfieldOrder,
                std::to_string(small_order) + "^2 != " + std::to_string(m_));
  }
  std::vector<Elem> out;
  for (Elem a = 0; a < m_; ++a) {
    if (pow(a, small_order) == a) out.push_back(a);
  }
  return out;
}

Elem Field::frobenius_norm(Elem e, unsigned q) const {
  if (static_cast<unsigned long long>(q) * q != m_) {
    throw Error(ErrorCode::NotASubfieldOrder, "field order is not q^2");
  }
  return pow(e, static_cast<long long>(q) + 1);
}

Elem Field::first_nonsquare() const {
  for (Elem a = 1; a < m_; ++a) {
    if (quad_[a] == QuadChar::NonSquare) return a;
  }
  throw Error(ErrorCode::EvenCharacteristicUnsupported, "no non-squares in even characteristic");
}

std::vector<unsigned> Field::coefficients(Elem a) const { return digits(a, p_, h_); }

}  // namespace unitals
