#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace hilbtan {

/// Arithmetic in Z/p for a prime p < 2^62.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p = 32003);

  std::uint64_t modulus() const { return p_; }
  std::string name() const { return "F" + std::to_string(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  Elem from_mpz(const mpz_class& v) const {
    mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return static_cast<Elem>(r.get_ui());
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  /// Symmetric representative in (-p/2, p/2], for printing.
  std::string to_string(Elem a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

/// Exact rational arithmetic backed by GMP.
class RationalField {
 public:
  using Elem = mpq_class;

  std::string name() const { return "QQ"; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(std::int64_t v) const { return Elem(static_cast<long>(v)); }
  Elem from_mpz(const mpz_class& v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  std::string to_string(const Elem& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

bool is_prime(std::uint64_t p);

/// Which field a job runs over.
struct FieldSpec {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::uint64_t prime = 32003;

  static FieldSpec rational() { return {Kind::Rational, 0}; }
  static FieldSpec prime_field(std::uint64_t p = 32003);
  /// Accepts "rational", "QQ", "prime:<p>", "F<p>".
  static FieldSpec parse(const std::string& text);

  std::string name() const { return kind == Kind::Rational ? "QQ" : "F" + std::to_string(prime); }
};

/// Calls fn with a PrimeField or RationalField instance matching spec.
template <typename Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::Prime) return fn(PrimeField(spec.prime));
  return fn(RationalField{});
}

}  // namespace hilbtan
