#include "hilbtan/poly_io.hpp"

#include <cctype>
#include <map>

namespace hilbtan {

namespace {

using Poly = std::map<Exponents, mpz_class>;

void add_into(Poly& acc, const Poly& p, int sign) {
  for (const auto& [e, c] : p) {
    auto& slot = acc[e];
    if (sign > 0) {
      slot += c;
    } else {
      slot -= c;
    }
    if (slot == 0) acc.erase(e);
  }
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint16_t>(e[k] + eb[k]);
      auto& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  }
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, int n) : text_(text), n_(n) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, msg + " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly constant(const mpz_class& c) const {
    Poly p;
    if (c != 0) p[Exponents(static_cast<std::size_t>(n_), 0)] = c;
    return p;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        add_into(acc, term(), +1);
      } else if (accept('-')) {
        add_into(acc, term(), -1);
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc = multiply(acc, unary());
    return acc;
  }

  Poly unary() {
    if (accept('-')) {
      Poly p;
      add_into(p, unary(), -1);
      return p;
    }
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!accept('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 4) fail("exponent too large");
    int k = std::stoi(text_.substr(start, pos_ - start));
    Poly out = constant(1);
    for (int i = 0; i < k; ++i) out = multiply(out, base);
    return out;
  }

  Poly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(mpz_class(text_.substr(start, pos_ - start)));
    }
    if (c == 'x') {
      std::size_t start = pos_;
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
      std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (digits == pos_) {
        pos_ = start;
        fail("expected variable index after 'x'");
      }
      if (pos_ - digits > 6) throw Error(ErrorKind::UnknownVariable, text_.substr(start, pos_ - start));
      int idx = std::stoi(text_.substr(digits, pos_ - digits));
      if (idx < 1 || idx > n_) {
        throw Error(ErrorKind::UnknownVariable,
                    text_.substr(start, pos_ - start) + " (ring has " + std::to_string(n_) + " variables)");
      }
      Exponents e(static_cast<std::size_t>(n_), 0);
      e[static_cast<std::size_t>(idx - 1)] = 1;
      return Poly{{e, mpz_class(1)}};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      throw Error(ErrorKind::UnknownVariable, text_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Form parse_polynomial(const std::string& text, const RingCtx& ring) {
  Poly p = Parser(text, ring.nvars()).parse();
  Form f;
  if (p.empty()) return f;
  std::vector<int> degrees;
  for (const auto& [e, c] : p) {
    int d = 0;
    for (auto x : e) d += x;
    if (std::find(degrees.begin(), degrees.end(), d) == degrees.end()) degrees.push_back(d);
  }
  if (degrees.size() > 1) {
    std::string found;
    std::sort(degrees.begin(), degrees.end());
    for (int d : degrees) found += (found.empty() ? "" : ",") + std::to_string(d);
    throw Error(ErrorKind::NotHomogeneous, "'" + text + "' mixes degrees {" + found + "}");
  }
  f.degree = degrees.front();
  for (const auto& [e, c] : p) f.terms.emplace_back(static_cast<std::uint32_t>(ring.index_of(e)), c);
  std::sort(f.terms.begin(), f.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return f;
}

std::vector<Form> parse_polynomial_list(const std::string& text, const RingCtx& ring) {
  std::vector<Form> out;
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    bool blank = std::all_of(cur.begin(), cur.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) out.push_back(parse_polynomial(cur, ring));
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

std::string to_string(const Form& f, const RingCtx& ring) {
  if (f.terms.empty()) return "0";
  auto terms = f.terms;
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (const auto& [idx, c] : terms) {
    if (c == 0) continue;
    std::string mono = ring.monomial_string(f.degree, idx);
    mpz_class a = abs(c);
    std::string body;
    if (mono == "1") {
      body = a.get_str();
    } else if (a == 1) {
      body = mono;
    } else {
      body = a.get_str() + "*" + mono;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + body;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace hilbtan
