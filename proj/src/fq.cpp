#include "wb/fq.hpp"

#include <stdexcept>

namespace wb {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

// Polynomial arithmetic over F_p on coefficient vectors (low to high).
using Coeffs = std::vector<std::uint32_t>;

Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint32_t p) {
  auto deg = [](const Coeffs& c) {
    int d = static_cast<int>(c.size()) - 1;
    while (d >= 0 && c[d] == 0) --d;
    return d;
  };
  const int dm = deg(m);
  // inverse of the leading coefficient of m
  std::uint32_t lead_inv = 1;
  for (std::uint32_t x = 1; x < p; ++x)
    if (x * m[dm] % p == 1) lead_inv = x;
  for (int da = deg(a); da >= dm; da = deg(a)) {
    const std::uint32_t f = a[da] * lead_inv % p;
    for (int i = 0; i <= dm; ++i) {
      std::uint32_t& c = a[da - dm + i];
      c = (c + p * p - f * m[i] % p) % p;
    }
  }
  return a;
}

bool has_root(const Coeffs& m, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = 0, xp = 1;
    for (std::uint32_t c : m) {
      v = (v + c * xp) % p;
      xp = xp * x % p;
    }
    if (v == 0) return true;
  }
  return false;
}

// Trial division by all monic polynomials of degree in [1, deg(m)/2].
bool is_irreducible(const Coeffs& m, std::uint32_t p) {
  const int dm = static_cast<int>(m.size()) - 1;
  if (dm <= 1) return dm == 1;
  if (has_root(m, p)) return false;
  if (dm <= 3) return true;  // no root suffices up to degree 3
  for (int dd = 2; dd <= dm / 2; ++dd) {
    std::uint64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Coeffs div(dd + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < dd; ++i) {
        div[i] = c % p;
        c /= p;
      }
      div[dd] = 1;
      Coeffs r = poly_mod(m, div, p);
      bool zero = true;
      for (std::uint32_t x : r)
        if (x) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

Coeffs default_modulus(std::uint32_t p, std::uint32_t d) {
  if (d == 1) return {0, 1};  // x itself; unused
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Coeffs m(d + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < d; ++i) {
      m[i] = c % p;
      c /= p;
    }
    m[d] = 1;
    if (is_irreducible(m, p)) return m;
  }
  throw std::logic_error("no irreducible modulus found");
}

}  // namespace

GaloisField::GaloisField(std::uint32_t p, std::uint32_t d,
                         std::vector<std::uint32_t> modulus)
    : p_(p), d_(d) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (d == 0 || d > 8) throw std::invalid_argument("extension degree out of range");
  q_ = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (q_ > (1u << 20) / p) throw std::invalid_argument("field too large");
    q_ *= p;
  }
  if (modulus.empty()) {
    modulus_ = default_modulus(p, d);
  } else {
    if (modulus.size() != d + 1 || modulus[d] % p != 1)
      throw std::invalid_argument("modulus must be monic of degree d");
    for (auto& c : modulus) c %= p;
    if (!is_irreducible(modulus, p))
      throw std::invalid_argument("modulus is reducible");
    modulus_ = std::move(modulus);
  }
}

std::uint64_t GaloisField::pw(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<std::uint32_t> GaloisField::decode(Elem a) const {
  std::vector<std::uint32_t> cs(d_, 0);
  for (std::uint32_t i = 0; i < d_; ++i) {
    cs[i] = a % p_;
    a /= p_;
  }
  return cs;
}

GaloisField::Elem GaloisField::encode(const std::vector<std::uint32_t>& cs) const {
  Elem a = 0;
  for (std::uint32_t i = d_; i-- > 0;) a = a * p_ + cs[i] % p_;
  return a;
}

GaloisField::Elem GaloisField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  auto ca = decode(a), cb = decode(b);
  for (std::uint32_t i = 0; i < d_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return encode(ca);
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

GaloisField::Elem GaloisField::neg(Elem a) const {
  auto ca = decode(a);
  for (auto& c : ca) c = (p_ - c) % p_;
  return encode(ca);
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  if (d_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  auto ca = decode(a), cb = decode(b);
  Coeffs prod(2 * d_ - 1, 0);
  for (std::uint32_t i = 0; i < d_; ++i)
    for (std::uint32_t j = 0; j < d_; ++j)
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  prod = poly_mod(std::move(prod), modulus_, p_);
  prod.resize(d_, 0);
  return encode(prod);
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t n) const {
  Elem r = one(), base = a;
  while (n) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  return pow(a, q_ - 2);
}

std::string GaloisField::to_string(Elem a) const {
  if (d_ == 1) return std::to_string(a);
  auto cs = decode(a);
  std::string s;
  bool first = true;
  for (std::uint32_t i = 0; i < d_; ++i) {
    if (cs[i] == 0) continue;
    if (!first) s += "+";
    first = false;
    if (i == 0 || cs[i] != 1) s += std::to_string(cs[i]);
    if (i >= 1) {
      if (cs[i] != 1) s += "*";
      s += "w";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return first ? "0" : s;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t d,
                    std::vector<std::uint32_t> modulus) {
  return std::make_shared<GaloisField>(p, d, std::move(modulus));
}

}  // namespace wb
