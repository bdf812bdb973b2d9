#include "hilbtan/families.hpp"

#include <sstream>

#include "hilbtan/poly_io.hpp"

namespace hilbtan {

namespace {

std::string var(int i) { return "x" + std::to_string(i); }

void require_vars(const RingCtx& ring, int n, const char* what) {
  if (ring.nvars() != n) {
    throw Error(ErrorKind::OutOfRange, std::string(what) + " lives in " + std::to_string(n) + " variables");
  }
}

std::vector<Form> parse_all(const RingCtx& ring, const std::vector<std::string>& texts) {
  std::vector<Form> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

}  // namespace

Form monomial_form(const RingCtx& ring, const Exponents& e) {
  int d = 0;
  for (auto x : e) d += x;
  return Form{d, {{static_cast<std::uint32_t>(ring.index_of(e)), mpz_class(1)}}};
}

std::vector<Form> delta_generators(const RingCtx& ring) {
  const int n = ring.nvars();
  if (n < 4) throw Error(ErrorKind::OutOfRange, "Delta_n needs n >= 4");
  auto lower = [n](int a) { return a == 1 ? n : a - 1; };
  std::vector<std::string> texts;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      texts.push_back(var(a) + "*" + var(lower(b)) + " - " + var(b) + "*" + var(lower(a)));
    }
  }
  return parse_all(ring, texts);
}

std::vector<Form> j_generators(const RingCtx& ring) {
  const int n = ring.nvars();
  if (n < 4) throw Error(ErrorKind::OutOfRange, "J_n needs n >= 4");
  std::vector<std::string> texts;
  for (int i = 1; i <= n - 2; ++i) texts.push_back(var(n) + "*(" + var(i) + " + " + var(n - 1) + ")");
  return parse_all(ring, texts);
}

std::vector<Form> i2_generators(const RingCtx& ring) {
  auto g = delta_generators(ring);
  auto j = j_generators(ring);
  g.insert(g.end(), j.begin(), j.end());
  return g;
}

std::vector<Form> i1_generators(const RingCtx& ring, int s) {
  const int n = ring.nvars();
  if (s < 0 || s > n) throw Error(ErrorKind::OutOfRange, "I1 needs 0 <= s <= n");
  std::vector<Form> out;
  for (int a = 1; a <= s; ++a) {
    for (int b = a; b <= s; ++b) {
      Exponents e(static_cast<std::size_t>(n), 0);
      ++e[static_cast<std::size_t>(a - 1)];
      ++e[static_cast<std::size_t>(b - 1)];
      out.push_back(monomial_form(ring, e));
    }
  }
  for (int c = s + 1; c <= n; ++c) {
    Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(c - 1)] = 1;
    out.push_back(monomial_form(ring, e));
  }
  return out;
}

std::vector<Form> eight_points_generators(const RingCtx& ring) {
  require_vars(ring, 4, "the eight-point ideal");
  return parse_all(ring, {"x1^2", "x1*x3", "x3^2", "x2^2", "x2*x4", "x4^2", "x1*x4 - x3*x2"});
}

std::vector<Form> twisted_cubic_cone_generators(const RingCtx& ring) {
  require_vars(ring, 4, "the twisted cubic cone");
  return parse_all(ring, {"x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"});
}

std::vector<Form> sharpness_example_generators(const RingCtx& ring) {
  require_vars(ring, 4, "the sharpness example");
  std::vector<Form> out;
  for (const auto& m : max_power_generators(ring, 2)) {
    Form f = parse_polynomial("x4*(" + to_string(m, ring) + ")", ring);
    out.push_back(f);
  }
  for (const char* q : {"x1*x3", "x2*x3", "x2^2"}) {
    for (int j = 1; j <= 4; ++j) out.push_back(parse_polynomial(std::string(q) + "*" + var(j), ring));
  }
  out.push_back(parse_polynomial("x1^4", ring));
  out.push_back(parse_polynomial("x3^5", ring));
  return out;
}

std::vector<Form> max_power_generators(const RingCtx& ring, int k) {
  std::vector<Form> out;
  for (std::uint32_t i = 0; i < ring.dim(k); ++i) out.push_back(Form{k, {{i, mpz_class(1)}}});
  return out;
}

std::string HilbertFunction::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  if (truncated) os << (values.empty() ? "" : ",") << "...";
  os << ")";
  return os.str();
}

HilbertFunction parse_hilbert_function(const std::string& text) {
  HilbertFunction h;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (cur.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::SyntaxError, "bad Hilbert function entry '" + cur + "'");
    }
    h.values.push_back(std::stoll(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == '(' || c == ')' || c == ' ') continue;
    if (c == ',' || c == '.' || c == ';') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  if (h.values.empty()) throw Error(ErrorKind::SyntaxError, "empty Hilbert function");
  return h;
}

}  // namespace hilbtan
