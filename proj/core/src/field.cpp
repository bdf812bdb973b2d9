#include "hilbtan/field.hpp"

namespace hilbtan {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (p % q == 0) return p == q;
  }
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    std::uint64_t x = powmod(a % p, d, p);
    if (a % p == 0 || x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, p);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ull << 62) || !is_prime(p)) {
    throw std::invalid_argument("modulus must be a prime below 2^62: " + std::to_string(p));
  }
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero");
  return powmod(a, p_ - 2, p_);
}

std::string PrimeField::to_string(Elem a) const {
  if (a > p_ / 2) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (1ull << 62) || !is_prime(p)) {
    throw std::invalid_argument("not a prime below 2^62: " + std::to_string(p));
  }
  return {Kind::Prime, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "rational" || text == "QQ" || text == "Q") return rational();
  std::string digits;
  if (text.rfind("prime:", 0) == 0) {
    digits = text.substr(6);
  } else if (!text.empty() && text[0] == 'F') {
    digits = text.substr(1);
  } else if (text == "prime") {
    return prime_field();
  } else {
    throw std::invalid_argument("unknown field '" + text + "' (expected rational or prime:<p>)");
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("bad prime in field spec '" + text + "'");
  }
  return prime_field(std::stoull(digits));
}

}  // namespace hilbtan
