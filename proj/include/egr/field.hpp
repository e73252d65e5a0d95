#pragma once

/// Exact arithmetic in GF(p^r).
///
/// Elements are encoded as radix-p integers of their coefficient vectors in
/// the polynomial basis 1, X, ..., X^(r-1): the code of c0 + c1 X + ... is
/// c0 + c1 p + c2 p^2 + ....  The modulus is the lexicographically smallest
/// monic irreducible polynomial of degree r, comparing coefficients from the
/// constant term upwards.  Codes therefore depend on that basis choice; two
/// fields created with the same (p, r) are identical.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "egr/error.hpp"

namespace egr {

class Field;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using Poly = std::vector<std::uint32_t>;

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  return static_cast<std::uint32_t>((t % p + p) % p);
}

/// Remainder of a modulo the nonzero polynomial m over GF(p).
inline Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  poly_trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inverse_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint32_t f = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.back()) * lead_inv) % p);
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = (static_cast<std::uint64_t>(f) * m[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    poly_trim(a);
  }
  return a;
}

/// Irreducibility by trial division with every monic polynomial of degree
/// 1..deg/2.  Fine for the degrees a 2^16 order cap allows.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly div(d + 1, 0);
    div[d] = 1;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::uint64_t x = c;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      if (poly_mod(f, div, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// A handle on one element of a Field.  The field must outlive the element.
class FieldElement {
 public:
  using Code = std::uint32_t;

  FieldElement(const Field& field, Code code);

  Code code() const noexcept { return code_; }
  const Field& field() const noexcept { return *field_; }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  const Field& same_field(const FieldElement& o) const;

  const Field* field_;
  Code code_;
};

class Field {
 public:
  using Code = std::uint32_t;
  static constexpr std::uint64_t default_order_cap = std::uint64_t{1} << 16;

  Field(std::uint32_t p, std::uint32_t r, std::uint64_t order_cap = default_order_cap)
      : p_(p), r_(r) {
    if (!detail::is_prime(p)) throw precondition_error("characteristic " + std::to_string(p) + " is not prime");
    if (r < 1) throw precondition_error("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
      q *= p;
      if (q > order_cap)
        throw precondition_error("field order " + std::to_string(p) + "^" + std::to_string(r) +
                                 " exceeds the order cap " + std::to_string(order_cap));
    }
    q_ = static_cast<std::uint32_t>(q);
    modulus_ = find_modulus();
    build_tables();
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return r_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Monic modulus, constant coefficient first; size degree()+1.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

  static constexpr Code zero() noexcept { return 0; }
  static constexpr Code one() noexcept { return 1; }

  Code add(Code a, Code b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    return digitwise(a, b);
  }
  Code neg(Code a) const noexcept { return neg_[a]; }
  Code sub(Code a, Code b) const noexcept { return add(a, neg_[b]); }

  Code mul(Code a, Code b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Code inv(Code a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  Code div(Code a, Code b) const { return mul(a, inv(b)); }

  Code pow(Code a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
  }

  /// The primitive element used as the base of the log tables.
  Code primitive() const noexcept { return exp_[1]; }
  /// Discrete log to base primitive(); a must be nonzero.
  std::uint32_t log(Code a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
  }
  Code exp(std::uint64_t e) const noexcept { return exp_[e % (q_ - 1)]; }

  /// Multiplicative order of a nonzero element.
  std::uint32_t multiplicative_order(Code a) const {
    const std::uint32_t l = log(a);
    return (q_ - 1) / std::gcd(q_ - 1, l == 0 ? q_ - 1 : l);
  }

  /// Image of an integer in the prime subfield.
  Code from_integer(std::int64_t v) const noexcept {
    const std::int64_t m = ((v % p_) + p_) % p_;
    return static_cast<Code>(m);
  }

  /// Every element of multiplicative order q-1, ascending by code.
  std::vector<Code> generators() const {
    std::vector<Code> out;
    for (Code a = 1; a < q_; ++a)
      if (multiplicative_order(a) == q_ - 1) out.push_back(a);
    return out;
  }

  /// Coefficients of the polynomial behind a code, constant term first.
  std::vector<std::uint32_t> coefficients(Code a) const {
    std::vector<std::uint32_t> c(r_);
    for (std::uint32_t i = 0; i < r_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }

  FieldElement element(Code code) const {
    if (code >= q_) throw precondition_error("code " + std::to_string(code) + " outside GF(" + std::to_string(q_) + ")");
    return FieldElement(*this, code);
  }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_ && a.r_ == b.r_; }

 private:
  Code digitwise(Code a, Code b) const noexcept {
    Code out = 0, scale = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }

  detail::Poly find_modulus() const {
    if (r_ == 1) return {0, 1};  // X
    // Enumerate (c0, ..., c_{r-1}) lexicographically with c0 most significant.
    detail::Poly f(r_ + 1, 0);
    f[r_] = 1;
    for (std::uint32_t t = 0; t < q_; ++t) {
      std::uint32_t x = t;
      for (std::uint32_t i = r_; i-- > 0;) {
        f[i] = x % p_;
        x /= p_;
      }
      if (detail::is_irreducible(f, p_)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  Code poly_mul_code(Code a, Code b) const {
    detail::Poly pa = coefficients(a), pb = coefficients(b);
    detail::Poly prod(2 * r_, 0);
    for (std::uint32_t i = 0; i < r_; ++i)
      for (std::uint32_t j = 0; j < r_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p_);
    const detail::Poly rem = detail::poly_mod(std::move(prod), modulus_, p_);
    Code out = 0, scale = 1;
    for (std::uint32_t c : rem) {
      out += c * scale;
      scale *= p_;
    }
    return out;
  }

  Code poly_pow_code(Code a, std::uint64_t e) const {
    Code result = 1;
    while (e > 0) {
      if (e & 1) result = poly_mul_code(result, a);
      a = poly_mul_code(a, a);
      e >>= 1;
    }
    return result;
  }

  void build_tables() {
    if (p_ != 2 && static_cast<std::uint64_t>(q_) * q_ <= (1u << 20)) {
      add_table_.resize(static_cast<std::size_t>(q_) * q_);
      for (Code a = 0; a < q_; ++a)
        for (Code b = 0; b < q_; ++b) add_table_[static_cast<std::size_t>(a) * q_ + b] = digitwise(a, b);
    }
    neg_.resize(q_);
    for (Code a = 0; a < q_; ++a) {
      Code out = 0, scale = 1, x = a;
      for (std::uint32_t i = 0; i < r_; ++i) {
        out += ((p_ - x % p_) % p_) * scale;
        x /= p_;
        scale *= p_;
      }
      neg_[a] = out;
    }

    log_.assign(q_, 0);
    exp_.assign(2 * static_cast<std::size_t>(q_), 0);
    if (q_ == 2) {
      exp_[0] = exp_[1] = exp_[2] = 1;
      return;
    }
    const auto factors = detail::prime_factors(q_ - 1);
    Code g = 0;
    for (Code cand = 2; cand < q_ && g == 0; ++cand) {
      bool primitive = true;
      for (auto f : factors)
        if (poly_pow_code(cand, (q_ - 1) / f) == 1) {
          primitive = false;
          break;
        }
      if (primitive) g = cand;
    }
    if (g == 0) throw std::logic_error("no primitive element found");
    Code x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = x;
      exp_[i + q_ - 1] = x;
      log_[x] = i;
      x = poly_mul_code(x, g);
    }
  }

  std::uint32_t p_, r_, q_ = 0;
  detail::Poly modulus_;
  std::vector<Code> add_table_;
  std::vector<Code> neg_;
  std::vector<std::uint32_t> log_;
  std::vector<Code> exp_;
};

inline FieldElement::FieldElement(const Field& field, Code code) : field_(&field), code_(code) {}

inline const Field& FieldElement::same_field(const FieldElement& o) const {
  if (!(*field_ == *o.field_)) throw precondition_error("operands belong to different fields");
  return *field_;
}

inline FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {same_field(o), field_->add(code_, o.code_)};
}
inline FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {same_field(o), field_->sub(code_, o.code_)};
}
inline FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {same_field(o), field_->mul(code_, o.code_)};
}
inline FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {same_field(o), field_->div(code_, o.code_)};
}
inline FieldElement FieldElement::operator-() const { return {*field_, field_->neg(code_)}; }
inline FieldElement FieldElement::pow(std::uint64_t e) const { return {*field_, field_->pow(code_, e)}; }
inline FieldElement FieldElement::inverse() const { return {*field_, field_->inv(code_)}; }

inline bool operator==(const FieldElement& a, const FieldElement& b) {
  return *a.field_ == *b.field_ && a.code_ == b.code_;
}

/// GF(q) sits inside GF(q^2) as the fixed
/// points of x -> x^q.  image[c] is the image of code c of the subfield.
struct SubfieldEmbedding {
  Field subfield;
  std::vector<Field::Code> image;
  std::vector<bool> in_image;  // indexed by code of the big field

  bool contains(Field::Code big_code) const { return in_image.at(big_code); }
};

/// Embeds GF(sqrt(Q)) into a field of order Q = p^(2s) as an injective
/// homomorphism: the subfield's X is sent to the smallest code beta that is a
/// root of the subfield modulus.
inline SubfieldEmbedding subfield_embedding(const Field& big) {
  if (big.degree() % 2 != 0)
    throw precondition_error("field order " + std::to_string(big.order()) + " is not the square of a prime power");
  Field small(big.characteristic(), big.degree() / 2);
  const auto mod = small.modulus();
  const std::uint32_t p = big.characteristic();

  // Evaluate the subfield modulus at candidate beta; coefficients are prime
  // subfield elements, whose codes coincide in both fields.
  auto eval = [&](Field::Code beta) {
    Field::Code acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) acc = big.add(big.mul(acc, beta), mod[i] % p);
    return acc;
  };
  Field::Code beta = 0;
  bool found = false;
  for (Field::Code c = 0; c < big.order() && !found; ++c)
    if (eval(c) == 0) {
      beta = c;
      found = true;
    }
  if (!found) throw std::logic_error("subfield modulus has no root in the extension");

  SubfieldEmbedding emb{std::move(small), {}, std::vector<bool>(big.order(), false)};
  emb.image.resize(emb.subfield.order());
  for (Field::Code c = 0; c < emb.subfield.order(); ++c) {
    const auto coeffs = emb.subfield.coefficients(c);
    Field::Code acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = big.add(big.mul(acc, beta), coeffs[i]);
    emb.image[c] = acc;
    emb.in_image[acc] = true;
  }
  return emb;
}

/// Decomposes n = p^r with p prime; throws when n is not a prime power.
inline std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t n) {
  if (n < 2) throw precondition_error(std::to_string(n) + " is not a prime power");
  const auto f = detail::prime_factors(n);
  if (f.size() != 1) throw precondition_error(std::to_string(n) + " is not a prime power");
  std::uint32_t r = 0;
  while (n > 1) {
    n /= f.front();
    ++r;
  }
  return {static_cast<std::uint32_t>(f.front()), r};
}

}  // namespace egr
