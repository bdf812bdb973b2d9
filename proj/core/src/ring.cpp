#include "hilbtan/ring.hpp"

#include <stdexcept>

namespace hilbtan {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void enumerate(int var, int n, int remaining, Exponents& cur, std::vector<Exponents>& out) {
  if (var == n - 1) {
    cur[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e);
    enumerate(var + 1, n, remaining - e, cur, out);
  }
  cur[static_cast<std::size_t>(var)] = 0;
}

constexpr int kMaxDegree = 64;

}  // namespace

RingCtx::RingCtx(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("polynomial ring needs at least one variable");
}

std::size_t RingCtx::dim(int d) const {
  if (d < 0) return 0;
  return binomial(static_cast<std::uint64_t>(n_ + d - 1), static_cast<std::uint64_t>(n_ - 1));
}

const RingCtx::Table& RingCtx::table(int d) const {
  if (d < 0 || d >= kMaxDegree) throw std::out_of_range("degree out of supported range: " + std::to_string(d));
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = tables_.find(d);
  if (it != tables_.end() && !it->second->up.empty()) return *it->second;

  auto build = [&](int deg) {
    auto t = std::make_unique<Table>();
    Exponents cur(static_cast<std::size_t>(n_), 0);
    enumerate(0, n_, deg, cur, t->monomials);
    for (std::uint32_t i = 0; i < t->monomials.size(); ++i) t->index.emplace(t->monomials[i], i);
    return t;
  };
  if (it == tables_.end()) it = tables_.emplace(d, build(d)).first;
  if (d + 1 < kMaxDegree) {
    auto next = tables_.find(d + 1);
    if (next == tables_.end()) next = tables_.emplace(d + 1, build(d + 1)).first;
    Table& t = *it->second;
    t.up.resize(t.monomials.size());
    for (std::size_t i = 0; i < t.monomials.size(); ++i) {
      t.up[i].resize(static_cast<std::size_t>(n_));
      Exponents e = t.monomials[i];
      for (int j = 0; j < n_; ++j) {
        ++e[static_cast<std::size_t>(j)];
        t.up[i][static_cast<std::size_t>(j)] = next->second->index.at(e);
        --e[static_cast<std::size_t>(j)];
      }
    }
  }
  return *it->second;
}

const std::vector<Exponents>& RingCtx::basis(int d) const { return table(d).monomials; }

std::size_t RingCtx::index_of(const Exponents& e) const {
  int d = 0;
  for (auto x : e) d += x;
  const auto& t = table(d);
  auto it = t.index.find(e);
  if (it == t.index.end()) throw std::invalid_argument("exponent vector has wrong length");
  return it->second;
}

std::uint32_t RingCtx::times_var(int d, std::size_t idx, int var) const {
  return table(d).up[idx][static_cast<std::size_t>(var)];
}

std::uint32_t RingCtx::product(int a, std::size_t i, int b, std::size_t j) const {
  Exponents e = basis(a)[i];
  const auto& f = basis(b)[j];
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint16_t>(e[k] + f[k]);
  return static_cast<std::uint32_t>(index_of(e));
}

std::string RingCtx::monomial_string(int d, std::size_t idx) const {
  const auto& e = basis(d)[idx];
  std::string out;
  for (int j = 0; j < n_; ++j) {
    auto k = e[static_cast<std::size_t>(j)];
    if (k == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(j + 1);
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

}  // namespace hilbtan
