#include "hilbtan/tangent.hpp"

#include <sstream>

#include "json.hpp"

namespace hilbtan {

namespace {

nlohmann::ordered_json report_json(const TangentReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["field"] = r.field;
  j["colengths"] = r.colengths;
  auto hfs = nlohmann::ordered_json::array();
  for (const auto& h : r.hilbert_functions) hfs.push_back(h.values);
  j["hilbert_functions"] = hfs;
  j["window"] = {r.e_min, r.e_max};
  auto deg = nlohmann::ordered_json::object();
  for (const auto& [e, t] : r.degrees) deg[std::to_string(e)] = t;
  j["degrees"] = deg;
  j["t_neg"] = r.t_neg;
  j["t_nonneg"] = r.t_nonneg;
  j["t"] = r.total;
  j["theta_rank"] = r.theta_rank;
  j["tnt"] = to_string(r.verdict);
  return j;
}

}  // namespace

std::string to_string(TntVerdict v) {
  switch (v) {
    case TntVerdict::Certified:
      return "certified";
    case TntVerdict::FailedOverRational:
      return "failed";
    case TntVerdict::FailedOverPrimeFieldNeedsRationalConfirm:
      return "failed_needs_rational_confirm";
  }
  return "unknown";
}

std::string TangentReport::to_json() const { return report_json(*this).dump(); }

std::string TangentReport::to_text() const {
  std::ostringstream os;
  os << "nesting colengths:";
  for (auto c : colengths) os << ' ' << c;
  os << "\nhilbert functions:";
  for (const auto& h : hilbert_functions) os << ' ' << h.to_string();
  os << "\nfield: " << field << "\nwindow: [" << e_min << ", " << e_max << "]\n";
  for (const auto& [e, t] : degrees) os << "  t^{=" << e << "} = " << t << '\n';
  os << "t^{<0} = " << t_neg << ", t^{>=0} = " << t_nonneg << ", t = " << total << '\n';
  os << "theta rank: " << theta_rank << '\n';
  os << "TNT: " << to_string(verdict) << '\n';
  return os.str();
}

std::string SandwichReport::matched_convention() const {
  auto delta = static_cast<std::int64_t>(enlarged.t_neg) - static_cast<std::int64_t>(base.at(-1));
  if (delta == jump_statement) return "statement";
  if (delta == jump_example) return "example";
  if (delta == jump_statement + 1) return "statement+1";
  if (delta == jump_example + 1) return "example+1";
  return "none";
}

std::string SandwichReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["position"] = position;
  j["k"] = k;
  j["base"] = report_json(base);
  j["enlarged"] = report_json(enlarged);
  auto hom = nlohmann::ordered_json::object();
  for (const auto& [e, d] : hom_by_degree) hom[std::to_string(e)] = d;
  j["hom_by_degree"] = hom;
  j["hom_dim"] = hom_dim;
  j["lemma"] = {{"hypotheses_met", lemma_hypotheses}, {"discrepancy", lemma_discrepancy}};
  j["prop"] = {{"hypotheses_met", prop_hypotheses},
               {"jump", jump},
               {"jump_statement", jump_statement},
               {"jump_example", jump_example},
               {"nonneg_unchanged", nonneg_unchanged},
               {"projection_bound", projection_bound},
               {"matched_convention", matched_convention()}};
  return j.dump();
}

}  // namespace hilbtan
