#include "icsi/field.hpp"

#include <sstream>

namespace icsi {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::ZeroCode: return "ZeroCode";
    case Errc::ZeroDual: return "ZeroDual";
    case Errc::TooLargeToEnumerate: return "TooLargeToEnumerate";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::MalformedInstance: return "MalformedInstance";
    case Errc::EmptyDemand: return "EmptyDemand";
    case Errc::ConfinementViolation: return "ConfinementViolation";
    case Errc::NotDecodable: return "NotDecodable";
    case Errc::InconsistentObservation: return "InconsistentObservation";
    case Errc::ListTooLarge: return "ListTooLarge";
    case Errc::RankDeficient: return "RankDeficient";
  }
  return "Unknown";
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients over F_p, constant term first

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1U) r = r * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(r);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor g.
Poly poly_mod(Poly a, const Poly& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  trim(a);
  while (a.size() > dg) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t j = 0; j <= dg; ++j) {
      const std::uint32_t sub = static_cast<std::uint32_t>((std::uint64_t{lead} * g[j]) % p);
      a[shift + j] = (a[shift + j] + p - sub) % p;
    }
    trim(a);
  }
  return a;
}

Poly to_digits(std::uint32_t value, std::uint32_t p, std::uint32_t m) {
  Poly d(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

std::uint32_t from_digits(const Poly& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

class PolyRing {
 public:
  PolyRing(std::uint32_t p, Poly modulus) : p_(p), modulus_(std::move(modulus)) {}

  std::uint32_t mulmod(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t m = static_cast<std::uint32_t>(modulus_.size() - 1);
    const Poly da = to_digits(a, p_, m);
    const Poly db = to_digits(b, p_, m);
    Poly prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      if (da[i] == 0) continue;
      for (std::uint32_t j = 0; j < m; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
    }
    Poly r = poly_mod(std::move(prod), modulus_, p_);
    r.resize(m, 0);
    return from_digits(r, p_);
  }

  std::uint32_t powmod(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e != 0) {
      if (e & 1U) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1U;
    }
    return r;
  }

 private:
  std::uint32_t p_;
  Poly modulus_;
};

std::vector<std::uint32_t> prime_factors(std::uint32_t v) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t f = 2; f * f <= v; ++f) {
    if (v % f == 0) {
      out.push_back(f);
      while (v % f == 0) v /= f;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

bool is_prime(std::uint32_t value) noexcept {
  if (value < 2) return false;
  for (std::uint32_t f = 2; f * f <= value; ++f)
    if (value % f == 0) return false;
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& coefficients) {
  Poly f = coefficients;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = to_digits(static_cast<std::uint32_t>(low), p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    Poly f = to_digits(static_cast<std::uint32_t>(low), p, m);
    f.push_back(1);
    if (is_irreducible(p, f)) return f;
  }
  // Irreducible polynomials exist for every degree.
  throw Error(Errc::ReduciblePolynomial, "no irreducible polynomial found");
}

FieldRef Field::make(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!icsi::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error(Errc::FieldTooLarge, "p^m exceeds 65536");
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->m_ = m;
  f->q_ = static_cast<std::uint32_t>(q);

  if (m == 1) {
    if (modulus) throw Error(Errc::InvalidArgument, "prime fields take no reduction polynomial");
    f->inverse_.assign(q, 0);
    for (std::uint32_t a = 1; a < q; ++a) f->inverse_[a] = static_cast<elem_t>(mod_pow(a, p - 2, p));
    // smallest primitive root
    const auto factors = prime_factors(p - 1);
    for (std::uint32_t g = 1; g < q; ++g) {
      bool primitive = true;
      for (std::uint32_t r : factors)
        if (mod_pow(g, (p - 1) / r, p) == 1) primitive = false;
      if (primitive) {
        f->primitive_ = static_cast<elem_t>(g);
        break;
      }
    }
    return f;
  }

  Poly mod = modulus ? *modulus : default_modulus(p, m);
  if (mod.size() != m + 1 || mod.back() != 1)
    throw Error(Errc::InvalidArgument, "reduction polynomial must be monic of degree " + std::to_string(m));
  for (auto c : mod)
    if (c >= p) throw Error(Errc::InvalidArgument, "polynomial coefficient out of range");
  if (!is_irreducible(p, mod)) throw Error(Errc::ReduciblePolynomial, "reduction polynomial is reducible");
  f->modulus_ = mod;

  const PolyRing ring(p, mod);
  const std::uint32_t order = f->q_ - 1;
  const auto factors = prime_factors(order);
  std::uint32_t gen = 0;
  for (std::uint32_t g = 2; g < f->q_; ++g) {
    bool primitive = true;
    for (std::uint32_t r : factors) {
      if (ring.powmod(g, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = g;
      break;
    }
  }
  f->primitive_ = static_cast<elem_t>(gen);
  f->exp_.assign(2 * std::size_t{order}, 0);
  f->log_.assign(f->q_, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    f->exp_[i] = static_cast<elem_t>(cur);
    f->exp_[i + order] = static_cast<elem_t>(cur);
    f->log_[cur] = i;
    cur = ring.mulmod(cur, gen);
  }
  f->inverse_.assign(f->q_, 0);
  for (std::uint32_t a = 1; a < f->q_; ++a) f->inverse_[a] = f->exp_[(order - f->log_[a]) % order];
  return f;
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  return os.str();
}

elem_t Field::inv(elem_t a) const {
  if (a == 0) throw Error(Errc::InvalidArgument, "zero has no inverse");
  return inverse_[a];
}

elem_t Field::pow(elem_t a, std::uint64_t e) const noexcept {
  elem_t r = 1;
  while (e != 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

elem_t Field::digit_op(elem_t a, elem_t b, bool subtract) const noexcept {
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  std::uint32_t x = a;
  std::uint32_t y = b;
  for (std::uint32_t i = 0; i < m_; ++i) {
    const std::uint32_t da = x % p_;
    const std::uint32_t db = y % p_;
    x /= p_;
    y /= p_;
    const std::uint32_t d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    out += d * place;
    place *= p_;
  }
  return static_cast<elem_t>(out);
}

FieldElement::FieldElement(FieldRef field, std::uint64_t value) : field_(std::move(field)) {
  if (!field_) throw Error(Errc::InvalidArgument, "null field");
  if (!field_->contains(value))
    throw Error(Errc::InvalidArgument, "value " + std::to_string(value) + " not in " + field_->name());
  value_ = static_cast<elem_t>(value);
}

void FieldElement::check(const FieldElement& o) const {
  if (!same_field(field_, o.field_)) throw Error(Errc::FieldMismatch, "operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  return {field_, field_->add(value_, o.value_), nullptr};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  return {field_, field_->sub(value_, o.value_), nullptr};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  return {field_, field_->mul(value_, o.value_), nullptr};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check(o);
  return {field_, field_->div(value_, o.value_), nullptr};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_), nullptr}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_), nullptr}; }

}  // namespace icsi
