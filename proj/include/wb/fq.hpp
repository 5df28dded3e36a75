#ifndef WB_FQ_HPP
#define WB_FQ_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace wb {

/// Finite field F_q, q = p^d, with p prime and small d.
///
/// Elements are encoded as integers in [0, q): the code of
/// c_0 + c_1 x + ... + c_{d-1} x^{d-1} (mod the modulus polynomial)
/// is c_0 + c_1 p + ... + c_{d-1} p^{d-1}.
class GaloisField {
 public:
  using Elem = std::uint32_t;

  /// Construct F_{p^d}. The modulus is the first monic irreducible of
  /// degree d over F_p in coefficient-lex order; pass `modulus` (low to
  /// high degree, length d+1, monic) to override.
  explicit GaloisField(std::uint32_t p, std::uint32_t d = 1,
                       std::vector<std::uint32_t> modulus = {});

  std::uint32_t p() const { return p_; }
  std::uint32_t d() const { return d_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t n) const;  // image of n under Z -> F_q

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws on 0
  Elem pow(Elem a, std::uint64_t n) const;

  /// Inverse Frobenius x -> x^{p^{d-1}}; total since F_q is perfect.
  Elem pth_root(Elem a) const { return pow(a, pw(p_, d_ - 1)); }
  Elem frobenius(Elem a) const { return pow(a, p_); }

  std::string to_string(Elem a) const;

  bool operator==(const GaloisField& o) const {
    return p_ == o.p_ && d_ == o.d_ && modulus_ == o.modulus_;
  }

 private:
  static std::uint64_t pw(std::uint64_t b, std::uint32_t e);
  std::vector<std::uint32_t> decode(Elem a) const;
  Elem encode(const std::vector<std::uint32_t>& cs) const;

  std::uint32_t p_, d_, q_;
  std::vector<std::uint32_t> modulus_;  // length d_+1, monic
};

using FieldPtr = std::shared_ptr<const GaloisField>;

FieldPtr make_field(std::uint32_t p, std::uint32_t d = 1,
                    std::vector<std::uint32_t> modulus = {});

}  // namespace wb

#endif
