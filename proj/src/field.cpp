#include "terwb/field.hpp"

#include <charconv>

namespace terwb {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not a supported prime");
  return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  std::string_view digits = text;
  if (digits.starts_with("p=")) digits.remove_prefix(2);
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw std::invalid_argument("cannot parse field '" + std::string(text) + "' (expected q or p=<prime>)");
  return prime(p);
}

std::string FieldSpec::name() const {
  return kind_ == Kind::rationals ? std::string("q") : "p=" + std::to_string(p_);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("GF(p) needs a prime p, got " + std::to_string(p));
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(p_) + ")");
  // a^(p-2)
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Element>(result);
}

}  // namespace terwb
