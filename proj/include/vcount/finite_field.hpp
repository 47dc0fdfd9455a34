#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vcount/error.hpp"

namespace vcount {

/// Element of F_q, stored as a code in [0, q).  For a prime field the code is
/// the residue itself; for an extension field the base-p digits of the code
/// are the coefficients of the polynomial representative (degree < n).
struct Fq {
  std::uint32_t v = 0;
  friend constexpr bool operator==(Fq, Fq) = default;
};

inline constexpr Fq fq_zero{0};
inline constexpr Fq fq_one{1};

/// F_q for q = p^n with p an odd prime.  Immutable after construction; the
/// exp/log tables double as the multiplication implementation and as the
/// index map ind_alpha.
class FiniteField {
 public:
  /// Empty handle; every usable field comes from make().
  FiniteField() = default;

  /// Builds F_{p^n}.  For n > 1 a monic irreducible modulus of degree n is
  /// required; when absent, the canonical one (smallest coefficient code in
  /// the fixed base-p enumeration) is searched for.  Coefficients are given
  /// lowest degree first and reduced mod p.
  static FiniteField make(std::uint64_t p, unsigned degree,
                          std::optional<std::vector<std::int64_t>> modulus = std::nullopt);

  std::uint64_t p() const { return p_; }
  unsigned degree() const { return degree_; }
  std::uint64_t q() const { return q_; }

  /// Modulus coefficients c0..cn (monic); empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Fq alpha() const { return alpha_; }

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq pow(Fq a, std::uint64_t e) const;

  /// ind_alpha(a) as the canonical residue in [0, q-2]; throws on zero.
  std::uint64_t index_of(Fq a) const;
  /// alpha^k for any k (reduced mod q-1).
  Fq element_at(std::uint64_t k) const;

  Fq from_integer(std::int64_t value) const;
  /// Coefficient vector over F_p, length = degree.
  std::vector<std::uint32_t> coefficients(Fq a) const;

  std::uint64_t multiplicative_order(Fq a) const;
  bool is_generator(Fq a) const;
  std::vector<Fq> generators() const;

  /// Same field with a different designated primitive element (index tables
  /// rebuilt); throws bad_argument when g does not generate F_q^*.
  FiniteField with_primitive_element(Fq g) const;

  /// "5" for prime fields, "2+t^2"-style polynomial strings otherwise.
  std::string to_string(Fq a) const;
  Fq parse_element(std::string_view text) const;

 private:
  Fq mul_direct(Fq a, Fq b) const;  // construction-time path, no tables
  Fq pow_direct(Fq a, std::uint64_t e) const;
  Fq search_generator() const;
  void build_tables(Fq generator);

  std::uint64_t p_ = 0;
  unsigned degree_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Fq alpha_;
  std::vector<std::uint32_t> exp_table_;  // size q-1: exp_table_[k] = alpha^k
  std::vector<std::uint64_t> log_table_;  // size q; log_table_[0] unused
  std::vector<std::uint32_t> add_table_;  // q*q, only for small q
  std::vector<std::uint32_t> mul_table_;  // q*q, only for small q
};

/// First generator of F_q^* in the fixed code enumeration order.
Fq find_primitive_element(const FiniteField& field);

/// Lexical helpers for "a0+a1*t+a2*t^2"-style literals ('x' also accepted as
/// the indeterminate).  Coefficients signed, lowest degree first, trailing
/// zeros trimmed.
std::vector<std::int64_t> parse_poly_text(std::string_view text);
std::string render_poly_text(const std::vector<std::int64_t>& coeffs, char var);

}  // namespace vcount
