#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace terwb {

bool is_prime(std::uint64_t n) noexcept;

/// Ground field selector: GF(p) for a prime p, or the rationals.
class FieldSpec {
 public:
  enum class Kind { prime, rationals };

  /// Throws std::invalid_argument unless p is prime and below 2^31.
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec rationals() noexcept { return FieldSpec(Kind::rationals, 0); }

  /// Accepts "q", "Q", "p=<prime>" (and a bare prime, e.g. "2").
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  /// "p=2", "p=3", "q".
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// GF(p) with canonical representatives 0..p-1.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return p_ == 1 ? 0 : 1; }
  Element from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }

  Element add(Element a, Element b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const noexcept {
    return a >= b ? a - b : static_cast<Element>(std::uint64_t{a} + p_ - b);
  }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>((std::uint64_t{a} * b) % p_);
  }
  /// Throws std::domain_error on zero.
  Element inv(Element a) const;

  bool is_zero(Element a) const noexcept { return a == 0; }
  std::string to_string(Element a) const { return std::to_string(a); }

 private:
  std::uint32_t p_;
};

/// The rationals, backed by GMP (always canonical: reduced, positive denominator).
class RationalField {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const noexcept { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const { return Element(static_cast<long>(v)); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return Element(1) / a;
  }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  /// Always "num/den".
  std::string to_string(const Element& a) const {
    return a.get_num().get_str() + "/" + a.get_den().get_str();
  }
};

/// Calls fn with the concrete field object selected by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind() == FieldSpec::Kind::rationals) return fn(RationalField{});
  return fn(PrimeField{spec.characteristic()});
}

}  // namespace terwb
