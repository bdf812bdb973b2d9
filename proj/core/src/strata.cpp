#include "hilbtan/strata.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace hilbtan {

namespace {

using ojson = nlohmann::ordered_json;

std::int64_t binom(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::int64_t ring_dim(int n, int d) { return d < 0 ? 0 : binom(n + d - 1, d); }

std::int64_t nested_formula(int n, int s) { return compressed_1n2_dim(n) + static_cast<std::int64_t>(s) * (n - s); }

}  // namespace

std::int64_t smoothable_dim(const std::vector<std::int64_t>& colengths, int n) {
  if (colengths.empty() || n < 1) throw Error(ErrorKind::OutOfRange, "need n >= 1 and at least one colength");
  for (std::size_t i = 0; i < colengths.size(); ++i) {
    if (colengths[i] < 1 || (i > 0 && colengths[i] < colengths[i - 1])) {
      throw Error(ErrorKind::OutOfRange, "colengths must be positive and non-decreasing");
    }
  }
  return static_cast<std::int64_t>(n) * colengths.back();
}

TwoStepDim two_step_stratum_dim(const HilbertFunction& q, int n) {
  if (n < 1 || q.values.empty() || q.at(0) != 1) throw Error(ErrorKind::NotTwoStep, "q must start with 1");
  for (int d = 0; d < q.length(); ++d) {
    if (q.at(d) < 0 || q.at(d) > ring_dim(n, d)) {
      throw Error(ErrorKind::NotTwoStep, "q(" + std::to_string(d) + ") out of range");
    }
  }
  int k = 0;
  while (q.at(k) == ring_dim(n, k)) ++k;
  if (q.length() > k + 2) throw Error(ErrorKind::NotTwoStep, q.to_string() + " is not 2-step");
  auto h = [&](int d) { return ring_dim(n, d) - q.at(d); };
  TwoStepDim out;
  out.order = k;
  out.without_linear_syzygies = h(k + 1) - static_cast<std::int64_t>(n) * h(k) >= 0;
  if (!out.without_linear_syzygies) {
    if (q.at(k + 1) != 0) throw Error(ErrorKind::HasLinearSyzygies, q.to_string() + " has linear syzygies");
    out.warning = "linear syzygies present; value relies on q(k+1) = 0";
  }
  out.value = h(k) * q.at(k) + (h(k + 1) - static_cast<std::int64_t>(n - 1) * h(k)) * q.at(k + 1);
  return out;
}

std::int64_t compressed_1n2_dim(int n) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "need n >= 2");
  return 2 * (binom(n + 1, 2) - 2);
}

std::int64_t nested_stratum_dim_1s_1n2(int n, int s) {
  if (s < 1 || s > n) throw Error(ErrorKind::OutOfRange, "need 1 <= s <= n");
  return nested_formula(n, s);
}

std::string to_string(GapVerdict v) {
  switch (v) {
    case GapVerdict::NonSmoothableByDimension: return "non_smoothable_by_dimension";
    case GapVerdict::Boundary: return "boundary";
    case GapVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

GapReport gap_report(int n, int s) {
  if (n < 2 || s < 0 || s > n) throw Error(ErrorKind::OutOfRange, "need 0 <= s <= n");
  GapReport r;
  r.n = n;
  r.s = s;
  r.dim_smoothable = smoothable_dim({s + 1, n + 3}, n);
  r.dim_stratum_total = nested_formula(n, s) + n;
  r.gap = r.dim_smoothable - r.dim_stratum_total;
  r.verdict = r.gap < 0 ? GapVerdict::NonSmoothableByDimension
                        : (r.gap == 0 ? GapVerdict::Boundary : GapVerdict::Inconclusive);
  return r;
}

GapReport gap(int n, int s) {
  if (n < 4 || s < 2 || s > n - 2) throw Error(ErrorKind::OutOfRange, "need n >= 4 and 2 <= s <= n-2");
  return gap_report(n, s);
}

Lemma27Reduction lemma27_reduce(const HilbertFunction& h, int n) {
  const int h1 = static_cast<int>(h.at(1));
  if (h.at(0) != 1 || h1 > n) throw Error(ErrorKind::OutOfRange, "need h(0) = 1 and h(1) <= n");
  const std::int64_t d = h.size();
  Lemma27Reduction r;
  r.base_n = h1;
  r.offset = static_cast<std::int64_t>(h1) * (n - h1) + static_cast<std::int64_t>(n - h1) * (d - h1 - 1);
  return r;
}

std::string NonReducednessReport::to_json() const {
  ojson j;
  j["schema"] = 1;
  j["position"] = position;
  j["k"] = k;
  j["dim_v"] = dim_v;
  j["base_defect"] = base_defect;
  j["sandwich_defect"] = sandwich_defect;
  j["sandwich_total"] = sandwich_total;
  j["sandwich_nonneg"] = sandwich_nonneg;
  j["sandwich_theta_rank"] = sandwich_theta_rank;
  j["certified"] = certified;
  j["base"] = ojson::parse(base.to_json());
  j["sandwiched"] = ojson::parse(sandwiched.to_json());
  return j.dump();
}

ThmCReport thmC_report(int multiplicity) {
  if (multiplicity < 1) throw Error(ErrorKind::OutOfRange, "multiplicity must be positive");
  ThmCReport r;
  r.multiplicity = multiplicity;
  if (multiplicity < 5) return r;
  r.covered = true;
  r.q = HilbertFunction{{1, 3, 6, 8, 4}, false};
  r.length = r.q.size();
  r.stratum_dim = two_step_stratum_dim(r.q, 3).value;
  r.smoothable_dim = smoothable_dim({r.length}, 2);
  r.containment_power = r.q.length();
  if (multiplicity >= 8) {
    r.iarrobino = HilbertFunction{{1, 3, 6, 10, 15, 21, 17, 5}, false};
    r.iarrobino_length = r.iarrobino->size();
  }
  return r;
}

std::string ThmCReport::to_json() const {
  ojson j;
  j["schema"] = 1;
  j["multiplicity"] = multiplicity;
  j["covered"] = covered;
  if (covered) {
    j["q"] = q.values;
    j["d"] = length;
    j["stratum_dim"] = stratum_dim;
    j["smoothable_dim"] = smoothable_dim;
    j["contains_m_power"] = containment_power;
  }
  if (iarrobino) {
    j["iarrobino"] = iarrobino->values;
    j["iarrobino_d"] = iarrobino_length;
  }
  return j.dump();
}

std::string ThmCReport::to_text() const {
  std::ostringstream os;
  os << "multiplicity " << multiplicity << ": ";
  if (!covered) {
    os << "not covered\n";
    return os.str();
  }
  os << "q=" << q.to_string() << " d=" << length << " stratum " << stratum_dim << " smoothable " << smoothable_dim
     << "; every ideal with h of length " << containment_power << " contains m^" << containment_power << "\n";
  if (iarrobino) os << "  also " << iarrobino->to_string() << " d=" << iarrobino_length << "\n";
  return os.str();
}

std::string CensusRecord::key() const {
  return std::to_string(n) + "|" + std::to_string(s) + "|" + field + "|" + std::to_string(seed);
}

std::string CensusRecord::to_json() const {
  ojson j;
  j["n"] = n;
  j["s"] = s;
  j["field"] = field;
  j["seed"] = seed;
  j["gap"] = gap;
  j["verdict"] = verdict;
  j["has_family"] = has_family;
  if (has_family && error.empty()) {
    j["t_minus_one"] = t_minus_one;
    j["t_nonneg"] = t_nonneg;
    j["theta_rank"] = theta_rank;
    j["tnt"] = tnt;
    j["stratum_bound_ok"] = stratum_bound_ok;
  }
  if (!error.empty()) j["error"] = error;
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

CensusRecord CensusRecord::from_json(const std::string& line) {
  auto j = nlohmann::json::parse(line);
  CensusRecord r;
  r.n = j.at("n").get<int>();
  r.s = j.at("s").get<int>();
  r.field = j.at("field").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.gap = j.at("gap").get<std::int64_t>();
  r.verdict = j.value("verdict", "");
  r.has_family = j.value("has_family", false);
  r.t_minus_one = j.value("t_minus_one", std::int64_t{-1});
  r.t_nonneg = j.value("t_nonneg", std::int64_t{-1});
  r.theta_rank = j.value("theta_rank", std::int64_t{-1});
  r.tnt = j.value("tnt", "");
  r.stratum_bound_ok = j.value("stratum_bound_ok", true);
  r.error = j.value("error", "");
  r.elapsed_ms = j.value("elapsed_ms", 0.0);
  return r;
}

CensusRecord census_cell(int n, int s, const FieldSpec& field, std::uint64_t seed) {
  auto start = std::chrono::steady_clock::now();
  CensusRecord r;
  r.n = n;
  r.s = s;
  r.field = field.name();
  r.seed = seed;
  try {
    auto g = gap_report(n, s);
    r.gap = g.gap;
    r.verdict = to_string(g.verdict);
    r.has_family = n >= 4 && s >= 2 && s <= n - 2;
    if (r.has_family) {
      auto rep = with_field(field, [&](const auto& F) {
        auto ring = make_ring(n);
        using Field = std::decay_t<decltype(F)>;
        Nesting<Field> nest({family_I1(F, ring, s), family_I2(F, ring)});
        return tnt_check(nest);
      });
      r.t_minus_one = static_cast<std::int64_t>(rep.at(-1));
      r.t_nonneg = static_cast<std::int64_t>(rep.t_nonneg);
      r.theta_rank = static_cast<std::int64_t>(rep.theta_rank);
      r.tnt = to_string(rep.verdict);
      r.stratum_bound_ok = r.t_nonneg >= nested_formula(n, s);
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CensusRecord> census(const CensusOptions& opts) {
  if (opts.n_lo < 2 || opts.n_hi < opts.n_lo) throw Error(ErrorKind::OutOfRange, "bad n range");
  const std::string field = opts.field.name();

  std::map<std::string, CensusRecord> stored;
  bool needs_newline = false;
  if (!opts.store.empty() && std::filesystem::exists(opts.store)) {
    std::ifstream in(opts.store, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    needs_newline = !content.empty() && content.back() != '\n';
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      try {
        auto r = CensusRecord::from_json(line);
        stored.emplace(r.key(), r);
      } catch (const std::exception&) {
        // half-written line from an interrupted run: recompute it
      }
    }
  }

  struct Cell {
    int n, s;
    std::optional<CensusRecord> done;
  };
  std::vector<Cell> grid;
  for (int n = opts.n_lo; n <= opts.n_hi; ++n) {
    for (int s = 0; s <= n; ++s) {
      CensusRecord probe;
      probe.n = n;
      probe.s = s;
      probe.field = field;
      probe.seed = opts.seed;
      auto it = stored.find(probe.key());
      grid.push_back({n, s, it == stored.end() ? std::nullopt : std::optional<CensusRecord>(it->second)});
    }
  }
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!grid[i].done) pending.push_back(i);
  }

  std::ofstream out;
  if (!opts.store.empty() && !pending.empty()) {
    out.open(opts.store, std::ios::app | std::ios::binary);
    if (!out) throw Error(ErrorKind::OutOfRange, "cannot open census store " + opts.store);
    if (needs_newline) out << '\n';
  }

  std::vector<std::optional<CensusRecord>> results(pending.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < pending.size();) {
      const auto& c = grid[pending[i]];
      auto rec = census_cell(c.n, c.s, opts.field, opts.seed);
      {
        std::lock_guard lock(mu);
        results[i] = std::move(rec);
      }
      cv.notify_one();
    }
  };
  std::vector<std::thread> pool;
  unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(pending.size())));
  for (unsigned t = 0; t < threads && !pending.empty(); ++t) pool.emplace_back(worker);

  // Single writer: commit in grid order as the prefix completes.
  for (std::size_t i = 0; i < pending.size(); ++i) {
    CensusRecord rec;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return results[i].has_value(); });
      rec = *results[i];
    }
    if (out.is_open()) {
      out << rec.to_json() << '\n';
      out.flush();
    }
    if (opts.on_record) opts.on_record(rec);
    grid[pending[i]].done = std::move(rec);
  }
  for (auto& t : pool) t.join();

  std::vector<CensusRecord> all;
  for (auto& c : grid) all.push_back(std::move(*c.done));
  return all;
}

std::string census_csv(const std::vector<CensusRecord>& records) {
  int max_s = 0;
  std::map<int, std::map<int, const CensusRecord*>> rows;
  for (const auto& r : records) {
    rows[r.n][r.s] = &r;
    max_s = std::max(max_s, r.s);
  }
  std::ostringstream os;
  os << "n\\s";
  for (int s = 0; s <= max_s; ++s) os << ',' << s;
  os << '\n';
  for (const auto& [n, cells] : rows) {
    os << n;
    for (int s = 0; s <= max_s; ++s) {
      os << ',';
      auto it = cells.find(s);
      if (it == cells.end()) continue;
      const auto& r = *it->second;
      os << r.gap;
      if (r.has_family && r.error.empty()) os << '^' << r.t_minus_one;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace hilbtan
