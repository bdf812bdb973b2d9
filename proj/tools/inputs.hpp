#pragma once

// Ideal arguments on the command line: builtin names, inline generator lists,
// or @file with one generator list.
//
//   delta:n  J:n  I2:n  I1:n,s  m^k:n  8points  sharp  R:n
//   generic:q=(1,4,3),seed=5[,n=4]
//   "x1^2, x1*x2, x2^2, x3"   @gens.txt

#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "hilbtan/families.hpp"
#include "hilbtan/poly_io.hpp"

namespace hilbtan::cli {

struct InputContext {
  std::optional<int> nvars;   // --nvars; otherwise inferred
  std::uint64_t seed = 0;     // default seed for generic:
  int cutoff = 6;             // storage cutoff for non m-primary ideals
};

inline std::string read_source(const std::string& spec) {
  if (spec.empty() || spec[0] != '@') return spec;
  std::ifstream in(spec.substr(1));
  if (!in) throw Error(ErrorKind::OutOfRange, "cannot read " + spec.substr(1));
  std::ostringstream os;
  os << in.rdbuf();
  std::string s = os.str();
  // Allow one generator per line.
  std::string out;
  for (char c : s) out += (c == '\n' || c == ';') ? ',' : c;
  while (!out.empty() && (out.back() == ',' || std::isspace(static_cast<unsigned char>(out.back())))) out.pop_back();
  return out;
}

namespace detail {

inline int to_int(const std::string& s, const std::string& spec) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::SyntaxError, "bad number '" + s + "' in " + spec);
  }
}

struct GenericSpec {
  HilbertFunction q;
  std::optional<std::uint64_t> seed;
  std::optional<int> n;
};

inline GenericSpec parse_generic(const std::string& spec) {
  static const std::regex re(R"(generic:q=(\([0-9,\s]*\))((?:,\s*(?:seed|n)=[0-9]+)*))");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) throw Error(ErrorKind::SyntaxError, "expected generic:q=(..),seed=s[,n=N]: " + spec);
  GenericSpec g{parse_hilbert_function(m[1].str()), std::nullopt, std::nullopt};
  static const std::regex kv(R"((seed|n)=([0-9]+))");
  std::string rest = m[2].str();
  for (std::sregex_iterator it(rest.begin(), rest.end(), kv), end; it != end; ++it) {
    if ((*it)[1] == "seed") {
      g.seed = std::stoull((*it)[2].str());
    } else {
      g.n = to_int((*it)[2].str(), spec);
    }
  }
  return g;
}

}  // namespace detail

/// Number of variables the spec fixes on its own, if any.
inline std::optional<int> spec_nvars(const std::string& spec) {
  static const std::regex builtin(R"((delta|J|I2|R):([0-9]+))");
  static const std::regex i1(R"(I1:([0-9]+),([0-9]+))");
  static const std::regex power(R"(m\^([0-9]+):([0-9]+))");
  std::smatch m;
  if (std::regex_match(spec, m, builtin)) return detail::to_int(m[2].str(), spec);
  if (std::regex_match(spec, m, i1)) return detail::to_int(m[1].str(), spec);
  if (std::regex_match(spec, m, power)) return detail::to_int(m[2].str(), spec);
  if (spec == "8points" || spec == "sharp") return 4;
  if (spec.rfind("generic:", 0) == 0) {
    auto g = detail::parse_generic(spec);
    return g.n ? *g.n : static_cast<int>(g.q.at(1));
  }
  return std::nullopt;
}

/// Largest variable index in an inline or file generator list.
inline int max_variable(const std::string& text) {
  static const std::regex var(R"(x_?([0-9]+))");
  int best = 0;
  for (std::sregex_iterator it(text.begin(), text.end(), var), end; it != end; ++it) {
    best = std::max(best, std::stoi((*it)[1].str()));
  }
  return best;
}

/// Variables for a whole chain of specs: --nvars, else the first builtin, else
/// the largest variable index seen.
inline int chain_nvars(const std::vector<std::string>& specs, const InputContext& ctx) {
  if (ctx.nvars) return *ctx.nvars;
  int inferred = 0;
  for (const auto& s : specs) {
    if (auto n = spec_nvars(s)) return *n;
    inferred = std::max(inferred, max_variable(read_source(s)));
  }
  if (inferred == 0) throw Error(ErrorKind::OutOfRange, "cannot tell the number of variables; pass --nvars");
  return inferred;
}

template <typename F>
HomogeneousIdeal<F> resolve_ideal(const std::string& spec, const F& field, RingPtr ring, const InputContext& ctx,
                                  bool require_m_primary = true) {
  using Ideal = HomogeneousIdeal<F>;
  const int n = ring->nvars();
  auto check_n = [&](int want) {
    if (want != n) throw Error(ErrorKind::OutOfRange, spec + " lives in " + std::to_string(want) + " variables, not " + std::to_string(n));
  };
  static const std::regex named(R"((delta|J|I2|R):([0-9]+))");
  static const std::regex i1(R"(I1:([0-9]+),([0-9]+))");
  static const std::regex power(R"(m\^([0-9]+):([0-9]+))");
  std::smatch m;
  if (std::regex_match(spec, m, named)) {
    check_n(detail::to_int(m[2].str(), spec));
    if (m[1] == "delta") return family_delta(field, ring, ctx.cutoff);
    if (m[1] == "J") return family_J(field, ring, ctx.cutoff);
    if (m[1] == "R") return Ideal::unit(field, ring);
    return family_I2(field, ring);
  }
  if (std::regex_match(spec, m, i1)) {
    check_n(detail::to_int(m[1].str(), spec));
    return family_I1(field, ring, detail::to_int(m[2].str(), spec));
  }
  if (std::regex_match(spec, m, power)) {
    check_n(detail::to_int(m[2].str(), spec));
    return Ideal::power_of_max(field, ring, detail::to_int(m[1].str(), spec));
  }
  if (spec == "8points") {
    check_n(4);
    return family_8points(field, ring);
  }
  if (spec == "sharp") {
    check_n(4);
    return Ideal::from_generators(field, ring, sharpness_example_generators(*ring), 5, true);
  }
  if (spec.rfind("generic:", 0) == 0) {
    auto g = detail::parse_generic(spec);
    check_n(g.n ? *g.n : static_cast<int>(g.q.at(1)));
    return generic_ideal_with_hilbert_function(field, ring, g.q, g.seed.value_or(ctx.seed)).ideal;
  }
  auto forms = parse_polynomial_list(read_source(spec), *ring);
  int top = 0;
  for (const auto& f : forms) top = std::max(top, f.degree);
  if (require_m_primary) return Ideal::from_generators(field, ring, std::move(forms), top, true);
  return Ideal::from_generators(field, ring, std::move(forms), std::max(top, ctx.cutoff));
}

}  // namespace hilbtan::cli
