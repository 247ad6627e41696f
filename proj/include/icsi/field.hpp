#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "icsi/error.hpp"

namespace icsi {

/// Canonical integer representative of a field element. The base-p digits of
/// the integer are the polynomial coefficients, constant term first.
using elem_t = std::uint16_t;

inline constexpr std::uint32_t kMaxFieldOrder = 65536;

class Field;
using FieldRef = std::shared_ptr<const Field>;

/// The finite field F_q, q = p^m <= 65536.
///
/// Prime fields use plain modular arithmetic. Extension fields reduce modulo a
/// verified irreducible polynomial and multiply through log/antilog tables
/// built around the smallest primitive element.
class Field {
 public:
  /// Builds F_{p^m}. `modulus` lists the reduction polynomial coefficients,
  /// constant term first, degree m, monic. When absent for m > 1 the
  /// lexicographically least monic irreducible polynomial is used.
  static FieldRef make(std::uint32_t p, std::uint32_t m = 1,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  bool is_prime() const noexcept { return m_ == 1; }
  /// Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::string name() const;

  elem_t add(elem_t a, elem_t b) const noexcept {
    if (m_ == 1) {
      std::uint32_t s = std::uint32_t{a} + b;
      return static_cast<elem_t>(s >= p_ ? s - p_ : s);
    }
    if (p_ == 2) return static_cast<elem_t>(a ^ b);
    return digit_op(a, b, false);
  }
  elem_t sub(elem_t a, elem_t b) const noexcept {
    if (m_ == 1) return static_cast<elem_t>(a >= b ? a - b : a + p_ - b);
    if (p_ == 2) return static_cast<elem_t>(a ^ b);
    return digit_op(a, b, true);
  }
  elem_t neg(elem_t a) const noexcept { return sub(0, a); }
  elem_t mul(elem_t a, elem_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return static_cast<elem_t>((std::uint32_t{a} * b) % p_);
    return exp_[log_[a] + log_[b]];
  }
  /// Throws InvalidArgument on zero.
  elem_t inv(elem_t a) const;
  elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }
  elem_t pow(elem_t a, std::uint64_t e) const noexcept;

  /// The element whose powers enumerate F_q^* (for extension fields, the
  /// smallest canonical integer with multiplicative order q - 1).
  elem_t primitive_element() const noexcept { return primitive_; }

  bool contains(std::uint64_t value) const noexcept { return value < q_; }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  Field() = default;
  elem_t digit_op(elem_t a, elem_t b, bool subtract) const noexcept;

  std::uint32_t p_ = 2;
  std::uint32_t m_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  elem_t primitive_ = 1;
  std::vector<elem_t> exp_;           // extension fields: size 2(q-1)
  std::vector<std::uint32_t> log_;    // extension fields: size q
  std::vector<elem_t> inverse_;       // all fields: size q, inverse_[0] unused
};

/// True when both refer to the same field (identity or equal parameters).
inline bool same_field(const FieldRef& a, const FieldRef& b) noexcept {
  return a == b || (a && b && *a == *b);
}

/// True iff the monic polynomial with the given coefficients (constant term
/// first) is irreducible over F_p. Trial division by every monic polynomial of
/// degree 1..deg/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& coefficients);

/// Lexicographically least monic irreducible polynomial of degree m over F_p,
/// ordered by the canonical integer of its non-leading coefficients.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m);

bool is_prime(std::uint32_t value) noexcept;

/// A scalar bound to its field. Mixing scalars of different fields throws
/// FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldRef field, std::uint64_t value);

  elem_t value() const noexcept { return value_; }
  const FieldRef& field() const noexcept { return field_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.value_ == b.value_ && same_field(a.field_, b.field_);
  }

 private:
  FieldElement(FieldRef field, elem_t value, std::nullptr_t) : field_(std::move(field)), value_(value) {}
  void check(const FieldElement& o) const;

  FieldRef field_;
  elem_t value_;
};

}  // namespace icsi
