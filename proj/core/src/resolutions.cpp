#include "hilbtan/resolutions.hpp"

#include <sstream>

#include "json.hpp"

namespace hilbtan {

int BettiTable::projective_dimension() const {
  int pd = -1;
  for (const auto& [k, v] : entries) {
    if (v > 0) pd = std::max(pd, k.first);
  }
  return pd;
}

std::size_t BettiTable::total(int i) const {
  std::size_t t = 0;
  for (const auto& [k, v] : entries) {
    if (k.first == i) t += v;
  }
  return t;
}

std::string BettiTable::to_text() const {
  int pd = projective_dimension();
  if (pd < 0) return "0\n";
  int rlo = 1 << 20, rhi = -(1 << 20);
  for (const auto& [k, v] : entries) {
    rlo = std::min(rlo, k.second - k.first);
    rhi = std::max(rhi, k.second - k.first);
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> labels;
  labels.push_back("");
  cells.emplace_back();
  for (int i = 0; i <= pd; ++i) cells.back().push_back(std::to_string(i));
  labels.push_back("total:");
  cells.emplace_back();
  for (int i = 0; i <= pd; ++i) cells.back().push_back(std::to_string(total(i)));
  for (int r = rlo; r <= rhi; ++r) {
    labels.push_back(std::to_string(r) + ":");
    cells.emplace_back();
    for (int i = 0; i <= pd; ++i) {
      auto v = at(i, i + r);
      cells.back().push_back(v ? std::to_string(v) : ".");
    }
  }
  std::size_t lw = 0;
  for (const auto& l : labels) lw = std::max(lw, l.size());
  std::vector<std::size_t> cw(static_cast<std::size_t>(pd + 1), 1);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) cw[i] = std::max(cw[i], row[i].size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    os << std::string(lw - labels[r].size(), ' ') << labels[r];
    for (std::size_t i = 0; i < cells[r].size(); ++i) {
      os << ' ' << std::string(cw[i] - cells[r][i].size(), ' ') << cells[r][i];
    }
    os << '\n';
  }
  return os.str();
}

std::string BettiTable::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : entries) j[std::to_string(k.first) + "," + std::to_string(k.second)] = v;
  return j.dump();
}

bool BettiTable::euler_identity_holds(const HilbertFunction& h) const {
  if (h.truncated) return false;
  std::map<int, std::int64_t> lhs;
  lhs[0] = 1;
  for (const auto& [k, v] : entries) {
    lhs[k.second] += (k.first % 2 == 0 ? -1 : 1) * static_cast<std::int64_t>(v);
  }
  std::map<int, std::int64_t> rhs;
  for (std::size_t d = 0; d < h.values.size(); ++d) {
    for (int b = 0; b <= nvars; ++b) {
      auto c = static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(nvars), static_cast<std::uint64_t>(b)));
      rhs[static_cast<int>(d) + b] += (b % 2 ? -c : c) * h.values[d];
    }
  }
  auto strip = [](std::map<int, std::int64_t>& m) {
    for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  };
  strip(lhs);
  strip(rhs);
  return lhs == rhs;
}

}  // namespace hilbtan
