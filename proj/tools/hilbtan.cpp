// hilbtan: tangent spaces, Betti tables and strata numbers for fat points.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hilbtan/module.hpp"
#include "hilbtan/resolutions.hpp"
#include "hilbtan/strata.hpp"
#include "hilbtan/tangent.hpp"
#include "inputs.hpp"
#include "json.hpp"
#include "suite/suite.hpp"

using namespace hilbtan;
using ojson = nlohmann::ordered_json;

namespace {

struct Common {
  std::string field;
  std::uint64_t seed = 0;
  bool json = false;
  int nvars = 0;
  int cutoff = 6;
  unsigned threads = 1;

  FieldSpec field_spec(const char* fallback) const { return FieldSpec::parse(field.empty() ? fallback : field); }
  cli::InputContext inputs() const {
    cli::InputContext c;
    if (nvars > 0) c.nvars = nvars;
    c.seed = seed;
    c.cutoff = cutoff;
    return c;
  }
};

unsigned env_threads() {
  if (const char* v = std::getenv("HILBTAN_THREADS")) {
    try {
      return static_cast<unsigned>(std::max(1, std::stoi(v)));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring HILBTAN_THREADS=" << v << "\n";
    }
  }
  return 1;
}

template <typename F>
Nesting<F> resolve_chain(const std::vector<std::string>& specs, const F& field, const Common& c) {
  auto ctx = c.inputs();
  auto ring = make_ring(cli::chain_nvars(specs, ctx));
  std::vector<HomogeneousIdeal<F>> ideals;
  for (const auto& s : specs) ideals.push_back(cli::resolve_ideal(s, field, ring, ctx));
  return Nesting<F>(std::move(ideals));
}

void add_common(CLI::App* cmd, Common& c, bool inputs = true) {
  cmd->add_option("--field", c.field, "rational | prime:<p>");
  cmd->add_flag("--json", c.json, "machine-readable output");
  if (inputs) {
    cmd->add_option("--seed", c.seed, "default seed for generic: inputs");
    cmd->add_option("-n,--nvars", c.nvars, "number of variables for inline generators");
    cmd->add_option("--cutoff", c.cutoff, "storage cutoff for ideals that are not m-primary");
  }
}

int cmd_tangent(const std::vector<std::string>& specs, const Common& c, bool verdict_only) {
  auto rep = with_field(c.field_spec("rational"), [&](const auto& F) {
    return tnt_check(resolve_chain(specs, F, c), {c.threads});
  });
  if (verdict_only && !c.json) {
    std::cout << to_string(rep.verdict) << " (t-1=" << rep.at(-1) << ", theta rank " << rep.theta_rank << ")\n";
  } else {
    std::cout << (c.json ? rep.to_json() + "\n" : rep.to_text());
  }
  return verdict_only && !rep.tnt ? 1 : 0;
}

int cmd_betti(const std::string& spec, const Common& c) {
  auto rep = with_field(c.field_spec("rational"), [&](const auto& F) {
    auto ctx = c.inputs();
    auto ring = make_ring(cli::chain_nvars({spec}, ctx));
    return minimal_resolution(cli::resolve_ideal(spec, F, ring, ctx));
  });
  if (c.json) {
    ojson j;
    j["schema"] = 1;
    j["betti"] = ojson::parse(rep.betti.to_json());
    j["euler_identity"] = rep.euler_identity;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << rep.betti.to_text();
    if (!rep.euler_identity) std::cout << "warning: Euler identity fails\n";
  }
  return rep.euler_identity ? 0 : 1;
}

int cmd_hilb(const std::string& spec, const Common& c) {
  auto [h, colength, primary] = with_field(c.field_spec("rational"), [&](const auto& F) {
    auto ctx = c.inputs();
    auto ring = make_ring(cli::chain_nvars({spec}, ctx));
    auto I = cli::resolve_ideal(spec, F, ring, ctx, false);
    bool mp = I.is_m_primary();
    return std::tuple{I.hilbert_function(), mp ? static_cast<std::int64_t>(I.colength()) : std::int64_t{-1}, mp};
  });
  if (c.json) {
    ojson j;
    j["schema"] = 1;
    j["hilbert_function"] = h.values;
    j["truncated"] = h.truncated;
    if (primary) j["colength"] = colength;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << h.to_string();
    if (primary) std::cout << "  colength " << colength;
    std::cout << "\n";
  }
  return 0;
}

int cmd_hom(const std::vector<std::string>& specs, std::optional<int> degree, const Common& c) {
  auto dims = with_field(c.field_spec("rational"), [&](const auto& F) {
    using Field = std::decay_t<decltype(F)>;
    auto ctx = c.inputs();
    auto ring = make_ring(cli::chain_nvars(specs, ctx));
    std::vector<HomogeneousIdeal<Field>> I;
    for (const auto& s : specs) I.push_back(cli::resolve_ideal(s, F, ring, ctx));
    auto M = subquotient_module(I[0], I[1]);
    auto N = subquotient_module(I[2], I[3]);
    std::map<int, std::size_t> out;
    auto [lo, hi] = hom_degree_window(M, N);
    if (degree) lo = hi = *degree;
    for (int e = lo; e <= hi; ++e) out[e] = graded_hom(M, N, e, false).dim;
    return out;
  });
  std::size_t total = 0;
  for (const auto& [e, d] : dims) total += d;
  if (c.json) {
    ojson j;
    j["schema"] = 1;
    auto deg = ojson::object();
    for (const auto& [e, d] : dims) deg[std::to_string(e)] = d;
    j["degrees"] = deg;
    j["total"] = total;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& [e, d] : dims) std::cout << "hom^" << e << " = " << d << "\n";
    std::cout << "total " << total << "\n";
  }
  return 0;
}

int cmd_sandwich(const std::vector<std::string>& specs, std::size_t position, int power, const Common& c) {
  auto rep = with_field(c.field_spec("rational"), [&](const auto& F) {
    return sandwich_identity_check(resolve_chain(specs, F, c), position, power, {c.threads});
  });
  if (c.json) {
    std::cout << rep.to_json() << "\n";
    return 0;
  }
  std::cout << "insert m^" << power << " at position " << position << "\n"
            << "base     t<0=" << rep.base.t_neg << " t-1=" << rep.base.at(-1) << " t>=0=" << rep.base.t_nonneg
            << " " << to_string(rep.base.verdict) << "\n"
            << "enlarged t<0=" << rep.enlarged.t_neg << " t-1=" << rep.enlarged.at(-1)
            << " t>=0=" << rep.enlarged.t_nonneg << "\n"
            << "hom dim " << rep.hom_dim << ", discrepancy " << rep.lemma_discrepancy
            << (rep.lemma_hypotheses ? "" : " (base lacks TNT)") << "\n"
            << "jump " << rep.jump << " (predicted " << rep.jump_statement << ", alternative " << rep.jump_example
            << ", match " << rep.matched_convention() << "), t>=0 " << (rep.nonneg_unchanged ? "unchanged" : "changed")
            << "\n";
  return 0;
}

int cmd_gap(int n, int s, const Common& c) {
  auto g = gap_report(n, s);
  if (c.json) {
    ojson j;
    j["schema"] = 1;
    j["n"] = g.n;
    j["s"] = g.s;
    j["dim_smoothable"] = g.dim_smoothable;
    j["dim_stratum_total"] = g.dim_stratum_total;
    j["gap"] = g.gap;
    j["verdict"] = to_string(g.verdict);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n=" << n << " s=" << s << ": smoothable " << g.dim_smoothable << " - stratum " << g.dim_stratum_total
              << " = " << g.gap << " (" << to_string(g.verdict) << ")\n";
  }
  return 0;
}

int cmd_census(int n_lo, int n_hi, const std::string& store, const std::string& csv, const Common& c) {
  CensusOptions opts;
  opts.n_lo = n_lo;
  opts.n_hi = n_hi;
  opts.field = c.field_spec("prime:32003");
  opts.seed = c.seed;
  opts.threads = c.threads;
  opts.store = store;
  if (!c.json) {
    opts.on_record = [](const CensusRecord& r) {
      std::cerr << "(" << r.n << "," << r.s << ") gap " << r.gap;
      if (r.has_family) std::cerr << " t-1 " << r.t_minus_one << " " << r.tnt;
      if (!r.error.empty()) std::cerr << " error: " << r.error;
      std::cerr << "\n";
    };
  }
  auto records = census(opts);
  auto table = census_csv(records);
  if (!csv.empty()) std::ofstream(csv) << table;
  if (c.json) {
    for (const auto& r : records) std::cout << r.to_json() << "\n";
  } else {
    std::cout << table;
  }
  bool errors = false;
  for (const auto& r : records) errors = errors || !r.error.empty();
  return errors ? 1 : 0;
}

int cmd_thmC(int multiplicity, const Common& c) {
  auto r = thmC_report(multiplicity);
  std::cout << (c.json ? r.to_json() + "\n" : r.to_text());
  return 0;
}

int cmd_verify(const std::string& filter, const Common& c) {
  suite::Options opts;
  if (!c.field.empty()) opts.field = FieldSpec::parse(c.field);
  opts.filter = filter;
  opts.threads = c.threads;
  auto results = suite::run(opts, [&](const suite::Result& r) {
    if (!c.json) std::cout << suite::format(r) << std::endl;
  });
  if (results.empty()) {
    std::cerr << "warning: no fixture matches '" << filter << "'\n";
    return 0;
  }
  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok();
  if (c.json) {
    ojson j;
    j["schema"] = 1;
    auto arr = ojson::array();
    for (const auto& r : results) {
      ojson e;
      e["id"] = r.id;
      e["name"] = r.name;
      e["status"] = r.outcome.skipped ? "skip" : (r.ok() ? "pass" : "fail");
      e["detail"] = r.outcome.detail;
      arr.push_back(e);
    }
    j["fixtures"] = arr;
    std::cout << j.dump() << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tangent spaces of nested Hilbert schemes of points"};
  app.require_subcommand(1);
  Common c;
  c.threads = env_threads();

  std::vector<std::string> chain;
  auto* tangent = app.add_subcommand("tangent", "graded tangent space of a nesting I1 > I2 > ...");
  tangent->add_option("ideals", chain, "ideals, largest first")->required();
  add_common(tangent, c);
  auto* tnt = app.add_subcommand("tnt", "trivial negative tangents check; exit 1 unless certified");
  tnt->add_option("ideals", chain, "ideals, largest first")->required();
  add_common(tnt, c);

  std::string one;
  auto* betti = app.add_subcommand("betti", "graded Betti numbers of an m-primary ideal");
  betti->add_option("ideal", one)->required();
  add_common(betti, c);
  auto* hilb = app.add_subcommand("hilb", "Hilbert function of R/I");
  hilb->add_option("ideal", one)->required();
  add_common(hilb, c);

  std::vector<std::string> four;
  std::optional<int> degree;
  auto* hom = app.add_subcommand("hom", "Hom(A/B, C/D) by degree");
  hom->add_option("ideals", four, "A B C D")->required()->expected(4);
  hom->add_option("--degree", degree, "single degree");
  add_common(hom, c);

  std::size_t position = 0;
  int power = 1;
  auto* sandwich = app.add_subcommand("sandwich", "insert m^k into a nesting and compare tangents");
  sandwich->add_option("ideals", chain, "ideals, largest first")->required();
  sandwich->add_option("--position,-j", position, "0 inserts first, r appends")->required();
  sandwich->add_option("--power,-k", power, "k in m^k")->required();
  add_common(sandwich, c);

  int gn = 0, gs = 0;
  auto* gapc = app.add_subcommand("gap", "smoothability gap for the ((1,s),(1,n,2)) nestings");
  gapc->add_option("n", gn)->required();
  gapc->add_option("s", gs)->required();
  add_common(gapc, c, false);

  int n_lo = 4, n_hi = 8;
  std::string store, csv;
  auto* censusc = app.add_subcommand("census", "gap and tangent data over an (n, s) grid");
  censusc->add_option("--n-lo", n_lo);
  censusc->add_option("--n-hi", n_hi);
  censusc->add_option("--store", store, "JSONL store; existing records are kept");
  censusc->add_option("--csv", csv, "write the gap^t table here");
  censusc->add_option("--seed", c.seed);
  add_common(censusc, c, false);

  int multiplicity = 5;
  auto* thmc = app.add_subcommand("thmC", "reducibility numbers for a surface point of given multiplicity");
  thmc->add_option("multiplicity", multiplicity)->required();
  add_common(thmc, c, false);

  std::string filter;
  auto* verify = app.add_subcommand("verify", "run the fixture suite");
  verify->add_option("filter", filter, "fixture name substring or id");
  add_common(verify, c, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tangent) return cmd_tangent(chain, c, false);
    if (*tnt) return cmd_tangent(chain, c, true);
    if (*betti) return cmd_betti(one, c);
    if (*hilb) return cmd_hilb(one, c);
    if (*hom) return cmd_hom(four, degree, c);
    if (*sandwich) return cmd_sandwich(chain, position, power, c);
    if (*gapc) return cmd_gap(gn, gs, c);
    if (*censusc) return cmd_census(n_lo, n_hi, store, csv, c);
    if (*thmc) return cmd_thmC(multiplicity, c);
    if (*verify) return cmd_verify(filter, c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
