#include "unitfrac/analysis.hpp"

#include <json.hpp>

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace unitfrac {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

std::optional<Clock::time_point> cell_deadline(double budget_seconds) {
  if (budget_seconds <= 0) return {};
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(budget_seconds));
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_pairs(
    const std::optional<PrimeSet>& s, const Natural& n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  if (s) {
    auto f = factor_over(*s, n);
    if (f) {
      for (std::size_t j = 0; j < s->size(); ++j) {
        if (f->exponents[j] > 0) out.emplace_back(s->primes()[j], f->exponents[j]);
      }
      return out;
    }
  }
  // No prime set (or not smooth): plain trial division.
  if (!n.fits_ulong_p()) {
    out.emplace_back(0, 1);  // rendered as "?"
    return out;
  }
  std::uint64_t rest = n.get_ui();
  for (std::uint64_t d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (rest > 1) out.emplace_back(rest, 1);
  return out;
}

std::string factor_string(
    const std::vector<std::pair<std::uint64_t, unsigned>>& pairs) {
  std::string out;
  for (const auto& [p, e] : pairs) {
    if (!out.empty()) out += '*';
    if (p == 0) {
      out += '?';
      continue;
    }
    out += std::to_string(p);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

json solution_to_json(const std::optional<PrimeSet>& s, const Solution& sol) {
  json j;
  j["rank"] = sol.rank();
  json denoms = json::array();
  json factors = json::array();
  for (const Natural& d : sol.denominators) {
    denoms.push_back(d.get_str());
    json fs = json::array();
    for (const auto& [p, e] : factor_pairs(s, d)) fs.push_back({p, e});
    factors.push_back(std::move(fs));
  }
  j["denominators"] = std::move(denoms);
  j["factorizations"] = std::move(factors);
  return j;
}

json set_to_json(const SolutionSet& set) {
  json j;
  if (set.prime_set) {
    j["prime_set"] = set.prime_set->primes();
  } else {
    j["prime_set"] = nullptr;
  }
  j["rank"] = set.rank;
  j["count"] = set.solutions.size();
  auto max = max_denominator(set);
  if (max) {
    j["max_denominator"] = max->get_str();
  } else {
    j["max_denominator"] = nullptr;
  }
  json sols = json::array();
  for (const Solution& sol : set.solutions) {
    sols.push_back(solution_to_json(set.prime_set, sol));
  }
  j["solutions"] = std::move(sols);
  return j;
}

SolutionSet set_from_json(const json& j) {
  SolutionSet out;
  if (!j.at("prime_set").is_null()) {
    out.prime_set = PrimeSet(j.at("prime_set").get<std::vector<std::uint64_t>>());
  }
  out.rank = j.at("rank").get<unsigned>();
  for (const json& sol : j.at("solutions")) {
    Solution s;
    for (const json& d : sol.at("denominators")) {
      s.denominators.emplace_back(d.get<std::string>(), 10);
    }
    out.solutions.push_back(std::move(s));
  }
  return out;
}

// --- cache -----------------------------------------------------------------

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<std::filesystem::path> cache_root() {
  const char* env = std::getenv("UNITFRAC_CACHE_DIR");
  if (env == nullptr || *env == '\0') return {};
  std::filesystem::path root(env);
  std::error_code ec;
  std::filesystem::create_directories(root, ec);
  if (ec) return {};
  return root;
}

std::filesystem::path cache_file(const std::filesystem::path& root,
                                 const std::string& key) {
  char name[32];
  std::snprintf(name, sizeof name, "uf-%016llx.json",
                static_cast<unsigned long long>(fnv1a(key)));
  return root / name;
}

std::optional<json> cache_read(const std::filesystem::path& root,
                               const std::string& key) {
  std::ifstream in(cache_file(root, key));
  if (!in) return {};
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return {};
  if (j.value("key", std::string()) != key) return {};
  return j;
}

// Single writer per key: write aside, then atomically rename into place.
void cache_write(const std::filesystem::path& root, const std::string& key,
                 json payload) {
  payload["key"] = key;
  std::filesystem::path dest = cache_file(root, key);
  std::filesystem::path tmp = dest;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << payload.dump();
  }
  std::error_code ec;
  std::filesystem::rename(tmp, dest, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

std::string cache_key(const char* algo, const PrimeSet& s, unsigned rank,
                      const EnumOptions& opts, bool keyed_on_filter) {
  std::string key = std::string("unitfrac|") + kLibraryVersion + '|' + algo +
                    "|s=" + s.to_string() + "|r=" + std::to_string(rank) +
                    "|cap=" + std::to_string(opts.exponent_cap);
  if (keyed_on_filter) {
    key += opts.require_all_primes ? "|all=1" : "|all=0";
  }
  return key;
}

}  // namespace

SolutionSet cached_enumerate(const PrimeSet& s, unsigned rank,
                             const EnumOptions& opts) {
  auto root = cache_root();
  if (!root) return enumerate_restricted(s, rank, opts);
  std::string key = cache_key("enumerate", s, rank, opts, true);
  if (auto hit = cache_read(*root, key)) {
    return set_from_json(hit->at("set"));
  }
  SolutionSet out = enumerate_restricted(s, rank, opts);
  json payload;
  payload["set"] = set_to_json(out);
  cache_write(*root, key, std::move(payload));
  return out;
}

SurveyResult cached_survey(const PrimeSet& s, unsigned rank,
                           const EnumOptions& opts) {
  auto root = cache_root();
  if (!root) return survey_restricted(s, rank, opts);
  std::string key = cache_key("survey", s, rank, opts, false);
  if (auto hit = cache_read(*root, key)) {
    const json& j = hit->at("survey");
    SurveyResult out;
    out.total = j.at("total").get<std::uint64_t>();
    out.proper = j.at("proper").get<std::uint64_t>();
    if (!j.at("max_denom").is_null()) {
      out.max_denom = Natural(j.at("max_denom").get<std::string>(), 10);
    }
    if (!j.at("max_denom_proper").is_null()) {
      out.max_denom_proper =
          Natural(j.at("max_denom_proper").get<std::string>(), 10);
    }
    return out;
  }
  SurveyResult out = survey_restricted(s, rank, opts);
  json j;
  j["total"] = out.total;
  j["proper"] = out.proper;
  j["max_denom"] = out.max_denom ? json(out.max_denom->get_str()) : json();
  j["max_denom_proper"] =
      out.max_denom_proper ? json(out.max_denom_proper->get_str()) : json();
  json payload;
  payload["survey"] = std::move(j);
  cache_write(*root, key, std::move(payload));
  return out;
}

std::string factorization_string(const std::optional<PrimeSet>& s,
                                 const Natural& n) {
  return factor_string(factor_pairs(s, n));
}

GreedyComparison cached_compare(const PrimeSet& s, unsigned rank,
                                const EnumOptions& opts) {
  return compare_greedy(greedy_run(s, rank), cached_survey(s, rank, opts));
}

// --- serialization ---------------------------------------------------------

std::string solution_set_to_json(const SolutionSet& set) {
  return set_to_json(set).dump();
}

std::string solution_set_to_csv(const SolutionSet& set) {
  std::string out = "rank";
  for (unsigned i = 1; i <= set.rank; ++i) out += ",x" + std::to_string(i);
  out += '\n';
  for (const Solution& sol : set.solutions) {
    out += std::to_string(sol.rank());
    for (const Natural& d : sol.denominators) out += ',' + d.get_str();
    out += '\n';
  }
  return out;
}

const char* to_string(TableKind kind) {
  switch (kind) {
    case TableKind::kOnePrimeCounts:
      return "one_prime_counts";
    case TableKind::kGreedyBounds:
      return "greedy_bounds";
    case TableKind::kGreedyFailures:
      return "greedy_failures";
    case TableKind::kLowestRanks:
      return "lowest_ranks";
    case TableKind::kMaxDenominators:
      return "max_denominators";
    case TableKind::kPairCounts:
      return "pair_counts";
    case TableKind::kThabitMaxDenoms:
      return "thabit_maxdenoms";
    case TableKind::kRuntimes:
      return "runtimes";
  }
  return "?";
}

std::optional<TableKind> table_kind_from_string(const std::string& name) {
  for (TableKind kind :
       {TableKind::kOnePrimeCounts, TableKind::kGreedyBounds,
        TableKind::kGreedyFailures, TableKind::kLowestRanks,
        TableKind::kMaxDenominators, TableKind::kPairCounts,
        TableKind::kThabitMaxDenoms, TableKind::kRuntimes}) {
    if (name == to_string(kind)) return kind;
  }
  return {};
}

namespace {

const char* to_string(TableCell::State s) {
  switch (s) {
    case TableCell::State::kValue:
      return "value";
    case TableCell::State::kEmpty:
      return "empty";
    case TableCell::State::kNotComputed:
      return "not_computed";
  }
  return "?";
}

std::string cell_text(const TableCell& c) {
  switch (c.state) {
    case TableCell::State::kValue:
      return c.note.empty() ? c.value : c.value + ' ' + c.note;
    case TableCell::State::kEmpty:
      return "EMPTY";
    case TableCell::State::kNotComputed:
      return "N/C";
  }
  return "";
}

}  // namespace

std::string table_to_json(const Table& t) {
  json j;
  j["kind"] = to_string(t.kind);
  j["title"] = t.title;
  j["columns"] = t.column_labels;
  json rows = json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    json row;
    if (i < t.row_labels.size()) row["label"] = t.row_labels[i];
    json cells = json::array();
    for (const TableCell& c : t.rows[i]) {
      json cell;
      cell["state"] = to_string(c.state);
      if (c.state == TableCell::State::kValue) {
        cell["value"] = c.value;
        if (!c.note.empty()) cell["note"] = c.note;
      }
      cells.push_back(std::move(cell));
    }
    row["cells"] = std::move(cells);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

std::string table_to_csv(const Table& t) {
  std::string out;
  bool labeled = !t.row_labels.empty();
  if (labeled) out += "row";
  for (std::size_t c = 0; c < t.column_labels.size(); ++c) {
    if (labeled || c > 0) out += ',';
    out += t.column_labels[c];
  }
  out += '\n';
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (labeled) out += t.row_labels[i];
    for (std::size_t c = 0; c < t.rows[i].size(); ++c) {
      if (labeled || c > 0) out += ',';
      out += cell_text(t.rows[i][c]);
    }
    out += '\n';
  }
  return out;
}

// --- reference data --------------------------------------------------------

const std::vector<std::pair<std::uint64_t, unsigned>>& reference_lowest_ranks() {
  static const std::vector<std::pair<std::uint64_t, unsigned>> table = {
      {3, 3},    {5, 4},    {7, 5},    {11, 6},   {13, 6},   {17, 6},
      {19, 7},   {23, 8},   {29, 8},   {31, 9},   {37, 8},   {41, 8},
      {43, 8},   {47, 10},  {53, 9},   {59, 10},  {61, 10},  {67, 9},
      {71, 10},  {73, 9},   {79, 11},  {83, 10},  {89, 10},  {97, 9},
      {101, 10}, {103, 11}, {107, 10}, {109, 11}, {113, 10}, {127, 13},
      {131, 10}, {137, 10}, {139, 11}, {149, 11}, {151, 11}, {157, 12},
      {163, 11}, {167, 12}, {173, 12}, {179, 12}, {181, 12}, {191, 14},
      {193, 10}, {197, 11}, {199, 12}, {211, 12}, {223, 13}, {227, 12},
      {229, 12}, {233, 12}, {239, 12}, {241, 12}, {251, 14}, {257, 10}};
  return table;
}

CrosscheckReport reference_crosscheck() {
  struct Sequence {
    std::uint64_t p;
    std::vector<std::uint64_t> counts;  // t = 1, 2, ...
  };
  static const std::vector<Sequence> published = {
      {3, {1, 1, 2, 4, 7, 13, 25, 48, 92, 176}},
      {5, {1, 1, 2, 4, 8, 16, 31, 61}},
      {7, {1, 1, 2, 4, 8, 16, 32}},
  };
  CrosscheckReport report;
  for (const Sequence& seq : published) {
    for (unsigned t = 1; t <= seq.counts.size(); ++t) {
      CrosscheckTerm term;
      term.p = seq.p;
      term.t = t;
      term.rank = static_cast<unsigned>((seq.p - 1) * t + 1);
      term.expected = seq.counts[t - 1];
      term.computed = count_one_prime(seq.p, term.rank);
      term.pass = term.computed == term.expected;
      report.all_pass = report.all_pass && term.pass;
      report.terms.push_back(term);
    }
  }
  return report;
}

FitResult fit_log_model(
    const std::vector<std::pair<std::uint64_t, double>>& points) {
  if (points.size() < 2) {
    throw std::invalid_argument("fit needs at least two points");
  }
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [p, rank] : points) {
    if (p < 2) throw std::invalid_argument("fit abscissae must be primes >= 2");
    long double x = std::log(static_cast<long double>(p));
    sx += x;
    sy += rank;
    sxx += x * x;
    sxy += x * rank;
  }
  const long double n = static_cast<long double>(points.size());
  const long double denom = n * sxx - sx * sx;
  if (denom <= 0) {
    throw std::invalid_argument("fit needs two distinct primes");
  }
  FitResult out;
  out.points = points.size();
  out.slope = static_cast<double>((n * sxy - sx * sy) / denom);
  out.intercept = static_cast<double>((sy - out.slope * sx) / n);
  long double rss = 0;
  for (const auto& [p, rank] : points) {
    long double e = rank - (out.slope * std::log(static_cast<long double>(p)) +
                            out.intercept);
    rss += e * e;
  }
  out.rss = static_cast<double>(rss);
  return out;
}

// --- tables ----------------------------------------------------------------

namespace {

TableCell value_cell(std::string value, std::string note = "") {
  return TableCell{TableCell::State::kValue, std::move(value), std::move(note)};
}

TableCell empty_cell(std::string note = "") {
  return TableCell{TableCell::State::kEmpty, "", std::move(note)};
}

TableCell nc_cell() {
  return TableCell{TableCell::State::kNotComputed, "", ""};
}

std::vector<std::uint64_t> odd_primes_through(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 3; q <= limit; q += 2) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

std::vector<std::uint64_t> row_primes(const TableSpec& spec,
                                      std::vector<std::uint64_t> fallback) {
  return spec.primes.empty() ? std::move(fallback) : spec.primes;
}

std::pair<unsigned, unsigned> rank_range(const TableSpec& spec, unsigned lo,
                                         unsigned hi) {
  if (spec.rank_lo == 0 && spec.rank_hi == 0) return {lo, hi};
  return {spec.rank_lo, spec.rank_hi};
}

EnumOptions cell_options(const TableSpec& spec) {
  EnumOptions opts;
  opts.parallel_width = spec.parallel_width;
  opts.deadline = cell_deadline(spec.budget_seconds);
  return opts;
}

void fill_one_prime_counts(const TableSpec& spec, Table& t) {
  t.title = "one-prime solution counts (rank (p-1)t + 1)";
  for (unsigned tt = spec.t_lo; tt <= spec.t_hi; ++tt) {
    t.column_labels.push_back("t=" + std::to_string(tt));
  }
  for (std::uint64_t p : row_primes(spec, {3, 5, 7, 11, 13, 17})) {
    t.row_labels.push_back(std::to_string(p));
    std::vector<TableCell> row;
    for (unsigned tt = spec.t_lo; tt <= spec.t_hi; ++tt) {
      std::uint64_t rank64 = (p - 1) * tt + 1;
      if (rank64 > std::numeric_limits<unsigned>::max()) {
        row.push_back(nc_cell());
        continue;
      }
      try {
        std::uint64_t count =
            count_one_prime(p, static_cast<unsigned>(rank64),
                            cell_deadline(spec.budget_seconds));
        row.push_back(value_cell(std::to_string(count)));
      } catch (const SearchTimeout&) {
        row.push_back(nc_cell());
      }
    }
    t.rows.push_back(std::move(row));
  }
}

void fill_greedy_bounds(const TableSpec& spec, Table& t) {
  t.title = "greedy bounds for {2,q}";
  auto [lo, hi] = rank_range(spec, 5, 8);
  for (unsigned r = lo; r <= hi; ++r) {
    t.column_labels.push_back("R=" + std::to_string(r));
  }
  for (std::uint64_t q : row_primes(spec, {3, 5, 7, 11, 13, 17, 19})) {
    t.row_labels.push_back(std::to_string(q));
    PrimeSet s({2, q});
    std::vector<TableCell> row;
    for (unsigned r = lo; r <= hi; ++r) {
      try {
        GreedyComparison cmp = cached_compare(s, r, cell_options(spec));
        if (cmp.verdict == GreedyVerdict::kNoSolutions) {
          row.push_back(empty_cell());
        } else {
          row.push_back(value_cell(cmp.greedy.bound.get_str(),
                                   to_string(cmp.verdict)));
        }
      } catch (const SearchTimeout&) {
        row.push_back(nc_cell());
      }
    }
    t.rows.push_back(std::move(row));
  }
}

void fill_greedy_failures(const TableSpec& spec, Table& t) {
  t.title = "greedy failures";
  t.column_labels = {"R", "q", "greedy bound", "true max"};
  auto [lo, hi] = rank_range(spec, 2, 10);
  std::vector<std::uint64_t> qs = row_primes(spec, odd_primes_through(107));
  for (unsigned r = lo; r <= hi; ++r) {
    for (std::uint64_t q : qs) {
      try {
        GreedyComparison cmp =
            cached_compare(PrimeSet({2, q}), r, cell_options(spec));
        if (cmp.verdict == GreedyVerdict::kFailure) {
          t.rows.push_back({value_cell(std::to_string(r)),
                            value_cell(std::to_string(q)),
                            value_cell(cmp.greedy.bound.get_str()),
                            value_cell(cmp.true_max->get_str())});
        }
      } catch (const SearchTimeout&) {
        t.rows.push_back({value_cell(std::to_string(r)),
                          value_cell(std::to_string(q)), nc_cell(), nc_cell()});
      }
    }
  }
}

void fill_lowest_ranks(const TableSpec& spec, Table& t) {
  t.title = "lowest rank using both primes of {2,p}";
  t.column_labels = {"lowest rank"};
  std::vector<std::uint64_t> defaults;
  for (const auto& [p, rank] : reference_lowest_ranks()) defaults.push_back(p);
  for (std::uint64_t p : row_primes(spec, std::move(defaults))) {
    t.row_labels.push_back(std::to_string(p));
    try {
      auto rank = lowest_rank(PrimeSet({2, p}), spec.max_rank,
                              cell_deadline(spec.budget_seconds));
      if (rank) {
        t.rows.push_back({value_cell(std::to_string(*rank))});
      } else {
        t.rows.push_back({empty_cell("> " + std::to_string(spec.max_rank))});
      }
    } catch (const SearchTimeout&) {
      t.rows.push_back({nc_cell()});
    }
  }
}

void fill_max_denominators(const TableSpec& spec, Table& t,
                           std::vector<std::uint64_t> default_rows,
                           unsigned default_lo, unsigned default_hi) {
  t.title = "largest denominator over {2,q} solutions";
  auto [lo, hi] = rank_range(spec, default_lo, default_hi);
  for (unsigned r = lo; r <= hi; ++r) {
    t.column_labels.push_back("R=" + std::to_string(r));
  }
  for (std::uint64_t q : row_primes(spec, std::move(default_rows))) {
    t.row_labels.push_back(std::to_string(q));
    PrimeSet s({2, q});
    std::vector<TableCell> row;
    for (unsigned r = lo; r <= hi; ++r) {
      try {
        SurveyResult survey = cached_survey(s, r, cell_options(spec));
        if (survey.proper == 0) {
          row.push_back(empty_cell());
        } else {
          row.push_back(value_cell(survey.max_denom->get_str(),
                                   factorization_string(s, *survey.max_denom)));
        }
      } catch (const SearchTimeout&) {
        row.push_back(nc_cell());
      }
    }
    t.rows.push_back(std::move(row));
  }
}

void fill_pair_counts(const TableSpec& spec, Table& t) {
  t.title = "number of {2,q} solutions";
  auto [lo, hi] = rank_range(spec, 2, 10);
  for (unsigned r = lo; r <= hi; ++r) {
    t.column_labels.push_back("R=" + std::to_string(r));
  }
  for (std::uint64_t q : row_primes(spec, {3, 5, 7, 11, 13, 17, 19})) {
    t.row_labels.push_back(std::to_string(q));
    PrimeSet s({2, q});
    std::vector<TableCell> row;
    for (unsigned r = lo; r <= hi; ++r) {
      try {
        SurveyResult survey = cached_survey(s, r, cell_options(spec));
        if (survey.proper == 0) {
          row.push_back(empty_cell());
        } else {
          row.push_back(value_cell(std::to_string(survey.total)));
        }
      } catch (const SearchTimeout&) {
        row.push_back(nc_cell());
      }
    }
    t.rows.push_back(std::move(row));
  }
}

void fill_runtimes(const TableSpec& spec, Table& t) {
  t.title = "enumeration wall-clock seconds (this machine)";
  auto [lo, hi] = rank_range(spec, 5, 10);
  for (unsigned r = lo; r <= hi; ++r) {
    t.column_labels.push_back("R=" + std::to_string(r));
  }
  for (std::uint64_t q : row_primes(spec, {3, 5, 7, 11, 13, 17, 19})) {
    t.row_labels.push_back(std::to_string(q));
    PrimeSet s({2, q});
    std::vector<TableCell> row;
    for (unsigned r = lo; r <= hi; ++r) {
      try {
        auto start = Clock::now();
        survey_restricted(s, r, cell_options(spec));
        std::chrono::duration<double> elapsed = Clock::now() - start;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", elapsed.count());
        row.push_back(value_cell(buf));
      } catch (const SearchTimeout&) {
        row.push_back(nc_cell());
      }
    }
    t.rows.push_back(std::move(row));
  }
}

}  // namespace

Table generate_table(const TableSpec& spec) {
  Table t;
  t.kind = spec.kind;
  switch (spec.kind) {
    case TableKind::kOnePrimeCounts:
      fill_one_prime_counts(spec, t);
      break;
    case TableKind::kGreedyBounds:
      fill_greedy_bounds(spec, t);
      break;
    case TableKind::kGreedyFailures:
      fill_greedy_failures(spec, t);
      break;
    case TableKind::kLowestRanks:
      fill_lowest_ranks(spec, t);
      break;
    case TableKind::kMaxDenominators:
      fill_max_denominators(spec, t, {3, 5, 7, 11, 13, 17, 19}, 5, 11);
      break;
    case TableKind::kPairCounts:
      fill_pair_counts(spec, t);
      break;
    case TableKind::kThabitMaxDenoms:
      if (spec.thabit_kind == 2) {
        fill_max_denominators(spec, t, {97, 193, 769}, 9, 18);
      } else {
        fill_max_denominators(spec, t, {23, 47, 191, 383}, 12, 19);
      }
      break;
    case TableKind::kRuntimes:
      fill_runtimes(spec, t);
      break;
  }
  return t;
}

}  // namespace unitfrac
