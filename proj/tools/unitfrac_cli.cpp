// Command-line front end over the shared-library C interface.  All
// computation happens behind unitfrac.h; this file only parses arguments
// and renders the returned JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitfrac/unitfrac.h"

namespace {

using nlohmann::json;

int exit_code(uf_status status) {
  switch (status) {
    case UF_OK:
      return 0;
    case UF_ERROR_INVALID_ARGUMENT:
      return 2;
    case UF_ERROR_INTRACTABLE:
      return 3;
    case UF_ERROR_VERIFICATION:
      return 4;
    default:
      return 1;
  }
}

int fail(uf_status status) {
  std::cerr << "error: " << uf_last_error() << '\n';
  return exit_code(status);
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return 2;
}

std::string take(char* s) {
  std::string out = s == nullptr ? std::string() : s;
  uf_string_free(s);
  return out;
}

struct PrimeSetHandle {
  uf_prime_set* ptr = nullptr;
  PrimeSetHandle() = default;
  PrimeSetHandle(const PrimeSetHandle&) = delete;
  PrimeSetHandle& operator=(const PrimeSetHandle&) = delete;
  ~PrimeSetHandle() { uf_prime_set_free(ptr); }
};

struct SolutionSetHandle {
  uf_solution_set* ptr = nullptr;
  SolutionSetHandle() = default;
  SolutionSetHandle(const SolutionSetHandle&) = delete;
  SolutionSetHandle& operator=(const SolutionSetHandle&) = delete;
  ~SolutionSetHandle() { uf_solution_set_free(ptr); }
};

uf_enum_options make_options(bool all_primes, unsigned cap, unsigned parallel,
                             double budget) {
  uf_enum_options out{};
  out.require_all_primes = all_primes ? 1 : 0;
  out.parallel_width = parallel;
  out.exponent_cap = cap;
  out.budget_seconds = budget;
  return out;
}

std::vector<const char*> to_cstrs(const std::vector<std::string>& strings) {
  std::vector<const char*> out;
  out.reserve(strings.size());
  for (const std::string& s : strings) out.push_back(s.c_str());
  return out;
}

std::string null_to_empty(const json& j) {
  return j.is_null() ? std::string() : j.get<std::string>();
}

int emit_solution_set(const SolutionSetHandle& set, const std::string& format) {
  char* rendered = nullptr;
  if (format == "json") {
    uf_status st = uf_solution_set_json(set.ptr, &rendered);
    if (st != UF_OK) return fail(st);
    std::cout << take(rendered) << '\n';
    return 0;
  }
  if (format == "csv") {
    uf_status st = uf_solution_set_csv(set.ptr, &rendered);
    if (st != UF_OK) return fail(st);
    std::cout << take(rendered);
    return 0;
  }
  size_t count = uf_solution_set_count(set.ptr);
  unsigned rank = uf_solution_set_rank(set.ptr);
  uf_status st = uf_solution_set_max_denominator(set.ptr, &rendered);
  if (st != UF_OK) return fail(st);
  std::string max = take(rendered);
  std::cout << count << (count == 1 ? " solution" : " solutions")
            << " of rank " << rank;
  if (!max.empty()) std::cout << ", largest denominator " << max;
  std::cout << '\n';
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = 0; j < rank; ++j) {
      char* d = nullptr;
      st = uf_solution_set_denominator(set.ptr, i, j, &d);
      if (st != UF_OK) return fail(st);
      std::cout << (j > 0 ? " " : "") << take(d);
    }
    std::cout << '\n';
  }
  return 0;
}

std::string table_cell_text(const json& cell) {
  std::string state = cell.at("state").get<std::string>();
  if (state == "empty") return "EMPTY";
  if (state == "not_computed") return "N/C";
  std::string out = cell.at("value").get<std::string>();
  if (cell.contains("note")) {
    out += " (" + cell.at("note").get<std::string>() + ')';
  }
  return out;
}

void print_table_text(const std::string& table_json) {
  json t = json::parse(table_json);
  std::cout << t.at("title").get<std::string>() << '\n';
  std::vector<std::string> columns;
  for (const json& c : t.at("columns")) columns.push_back(c.get<std::string>());
  bool labeled = false;
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> cells;
  for (const json& row : t.at("rows")) {
    if (row.contains("label")) {
      labeled = true;
      labels.push_back(row.at("label").get<std::string>());
    } else {
      labels.emplace_back();
    }
    std::vector<std::string> line;
    for (const json& cell : row.at("cells")) {
      line.push_back(table_cell_text(cell));
    }
    cells.push_back(std::move(line));
  }
  std::size_t label_width = 0;
  for (const std::string& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) widths[c] = columns[c].size();
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size() && c < widths.size(); ++c) {
      widths[c] = std::max(widths[c], line[c].size());
    }
  }
  auto pad = [](const std::string& s, std::size_t w) {
    std::cout << s << std::string(w - s.size(), ' ');
  };
  if (labeled) {
    pad("", label_width);
    std::cout << "  ";
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c > 0) std::cout << "  ";
    pad(columns[c], widths[c]);
  }
  std::cout << '\n';
  for (std::size_t r = 0; r < cells.size(); ++r) {
    if (labeled) {
      pad(labels[r], label_width);
      std::cout << "  ";
    }
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      if (c > 0) std::cout << "  ";
      pad(cells[r][c], c < widths.size() ? widths[c] : cells[r][c].size());
    }
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Egyptian fraction representations of 1 with smooth denominators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", uf_version());

  // enumerate
  auto* enumerate = app.add_subcommand(
      "enumerate", "List all rank-R solutions over a prime set");
  struct {
    std::vector<std::uint64_t> primes;
    unsigned rank = 0;
    bool all_primes = false;
    unsigned cap = 0;
    unsigned parallel = 0;
    double budget = 0;
    std::string format = "text";
  } en;
  enumerate->add_option("--primes", en.primes, "Allowed prime divisors")
      ->delimiter(',')
      ->required();
  enumerate->add_option("--rank", en.rank, "Number of unit fractions")
      ->required();
  enumerate->add_flag("--all-primes", en.all_primes,
                      "Keep only solutions using every prime");
  enumerate->add_option("--cap", en.cap, "Cap every candidate exponent");
  enumerate->add_option("--parallel", en.parallel, "Worker threads");
  enumerate->add_option("--budget", en.budget, "Wall-clock limit in seconds");
  enumerate->add_option("--format", en.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // count
  auto* count = app.add_subcommand(
      "count", "Count rank-R solutions without storing them");
  struct {
    std::vector<std::uint64_t> primes;
    unsigned rank = 0;
    std::uint64_t prime = 0;
    std::string t_range;
    unsigned cap = 0;
    unsigned parallel = 0;
    double budget = 0;
    std::string format = "text";
  } ct;
  count->add_option("--primes", ct.primes, "Allowed prime divisors")
      ->delimiter(',');
  count->add_option("--rank", ct.rank, "Number of unit fractions");
  count->add_option("--prime", ct.prime,
                    "Single prime p for a run over ranks (p-1)t + 1");
  count->add_option("--t-range", ct.t_range,
                    "Multiplier range A..B for --prime");
  count->add_option("--cap", ct.cap, "Cap every candidate exponent");
  count->add_option("--parallel", ct.parallel, "Worker threads");
  count->add_option("--budget", ct.budget, "Wall-clock limit in seconds");
  count->add_option("--format", ct.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // greedy
  auto* greedy = app.add_subcommand(
      "greedy", "Greedy bound on the largest denominator");
  struct {
    std::vector<std::uint64_t> primes;
    unsigned rank = 0;
    bool compare = false;
    unsigned parallel = 0;
    double budget = 0;
    std::string format = "text";
  } gr;
  greedy->add_option("--primes", gr.primes, "Allowed prime divisors")
      ->delimiter(',')
      ->required();
  greedy->add_option("--rank", gr.rank, "Number of unit fractions")->required();
  greedy->add_flag("--compare", gr.compare,
                   "Enumerate and classify the bound as TIGHT/SLACK/FAILURE");
  greedy->add_option("--parallel", gr.parallel, "Worker threads");
  greedy->add_option("--budget", gr.budget, "Wall-clock limit in seconds");
  greedy->add_option("--format", gr.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // maxdenom
  auto* maxdenom = app.add_subcommand(
      "maxdenom", "Largest denominator over all rank-R solutions");
  struct {
    std::vector<std::uint64_t> primes;
    unsigned rank = 0;
    unsigned cap = 0;
    unsigned parallel = 0;
    double budget = 0;
    std::string format = "text";
  } md;
  maxdenom->add_option("--primes", md.primes, "Allowed prime divisors")
      ->delimiter(',')
      ->required();
  maxdenom->add_option("--rank", md.rank, "Number of unit fractions")
      ->required();
  maxdenom->add_option("--cap", md.cap, "Cap every candidate exponent");
  maxdenom->add_option("--parallel", md.parallel, "Worker threads");
  maxdenom->add_option("--budget", md.budget, "Wall-clock limit in seconds");
  maxdenom->add_option("--format", md.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // lowest-rank
  auto* lowest = app.add_subcommand(
      "lowest-rank", "Least rank with a solution using every prime");
  struct {
    std::vector<std::uint64_t> primes;
    unsigned max_rank = 15;
    double budget = 0;
    std::string format = "text";
  } lr;
  lowest->add_option("--primes", lr.primes, "Allowed prime divisors")
      ->delimiter(',')
      ->required();
  lowest->add_option("--max-rank", lr.max_rank, "Search ceiling");
  lowest->add_option("--budget", lr.budget, "Wall-clock limit in seconds");
  lowest->add_option("--format", lr.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // all
  auto* all = app.add_subcommand(
      "all", "List every rank-R solution with no smoothness restriction");
  struct {
    unsigned rank = 0;
    bool force = false;
    std::string format = "text";
  } al;
  all->add_option("--rank", al.rank, "Number of unit fractions")->required();
  all->add_flag("--force", al.force,
                "Search ranks beyond the built-in tractability limit");
  all->add_option("--format", al.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze",
      "Feasibility, counts, maximum, and greedy verdict in one report");
  struct {
    std::vector<std::uint64_t> primes;
    unsigned rank = 0;
    unsigned parallel = 0;
    double budget = 0;
    std::string format = "text";
  } an;
  analyze->add_option("--primes", an.primes, "Allowed prime divisors")
      ->delimiter(',')
      ->required();
  analyze->add_option("--rank", an.rank, "Number of unit fractions")
      ->required();
  analyze->add_option("--parallel", an.parallel, "Worker threads");
  analyze->add_option("--budget", an.budget, "Wall-clock limit in seconds");
  analyze->add_option("--format", an.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // family
  auto* family = app.add_subcommand(
      "family", "Construct a member of a known solution family");
  struct {
    std::string kind;
    std::uint64_t p = 0;
    unsigned n = 0;
    unsigned q = 0;
    unsigned rank = 0;
    std::vector<std::string> params;
    std::vector<std::string> denominators;
    std::vector<std::uint64_t> primes;
    bool verify = false;
    std::string format = "text";
  } fa;
  family
      ->add_option("kind", fa.kind,
                   "canonical | double | fermat | mersenne | pow2gap")
      ->required()
      ->check(CLI::IsMember(
          {"canonical", "double", "fermat", "mersenne", "pow2gap"}));
  family
      ->add_option("params", fa.params,
                   "canonical/pow2gap: P RANK; fermat: N RANK; "
                   "mersenne: Q RANK; double: X1,X2,...")
      ->expected(0, 2);
  family->add_option("--p", fa.p, "Prime parameter");
  family->add_option("--n", fa.n, "Fermat index (F_n = 2^(2^n) + 1)");
  family->add_option("--q", fa.q, "Mersenne exponent (p = 2^q - 1)");
  family->add_option("--rank", fa.rank, "Number of unit fractions");
  family
      ->add_option("--denominators", fa.denominators,
                   "Tuple to double (kind double)")
      ->delimiter(',');
  family->add_option("--primes", fa.primes, "Prime set of the input tuple")
      ->delimiter(',');
  family->add_flag("--verify", fa.verify,
                   "Re-check the tuple with the independent verifier");
  family->add_option("--format", fa.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Check a tuple: sum, ordering, smoothness, coverage");
  struct {
    std::vector<std::string> denominators;
    std::vector<std::uint64_t> primes;
    bool all_primes = false;
    unsigned rank = 0;
    std::string format = "text";
  } ve;
  verify
      ->add_option("denominators", ve.denominators, "Tuple to check, X1,X2,...")
      ->delimiter(',')
      ->required();
  verify->add_option("--primes", ve.primes, "Required smoothness base")
      ->delimiter(',');
  verify->add_flag("--all-primes", ve.all_primes,
                   "Require every prime to divide some denominator");
  verify->add_option("--rank", ve.rank, "Expected rank (0 = don't check)");
  verify->add_option("--format", ve.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // table
  auto* table = app.add_subcommand("table", "Generate a survey table");
  struct {
    std::string kind;
    std::vector<std::uint64_t> primes;
    unsigned rank_lo = 0;
    unsigned rank_hi = 0;
    unsigned t_lo = 1;
    unsigned t_hi = 7;
    unsigned max_rank = 15;
    double budget = 300;
    unsigned parallel = 0;
    int thabit_kind = 1;
    std::string format = "text";
  } tb;
  table->add_option("kind", tb.kind, "Table kind")
      ->required()
      ->check(CLI::IsMember({"one_prime_counts", "greedy_bounds",
                             "greedy_failures", "lowest_ranks",
                             "max_denominators", "pair_counts",
                             "thabit_maxdenoms", "runtimes"}));
  table->add_option("--primes", tb.primes, "Row parameters")->delimiter(',');
  table->add_option("--rank-lo", tb.rank_lo, "First rank column");
  table->add_option("--rank-hi", tb.rank_hi, "Last rank column");
  table->add_option("--t-lo", tb.t_lo, "First multiplier column");
  table->add_option("--t-hi", tb.t_hi, "Last multiplier column");
  table->add_option("--max-rank", tb.max_rank, "lowest_ranks search ceiling");
  table->add_option("--budget", tb.budget,
                    "Wall-clock limit per cell in seconds (default 300)");
  table->add_option("--parallel", tb.parallel, "Worker threads per cell");
  table->add_option("--thabit-kind", tb.thabit_kind,
                    "1: primes 3*2^n - 1, 2: primes 3*2^n + 1");
  table->add_option("--format", tb.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // fit
  auto* fit = app.add_subcommand(
      "fit", "Least-squares fit rank ~ slope * ln p + intercept");
  struct {
    std::string input;
    std::string format = "text";
  } ft;
  fit->add_option("--input", ft.input,
                  "CSV file of p,rank points (default: built-in data)")
      ->check(CLI::ExistingFile);
  fit->add_option("--format", ft.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // crosscheck
  auto* crosscheck = app.add_subcommand(
      "crosscheck", "Recompute the reference one-prime counting sequences");
  struct {
    std::string format = "text";
  } cc;
  crosscheck->add_option("--format", cc.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*enumerate) {
    SolutionSetHandle set;
    PrimeSetHandle s;
    uf_status st = uf_prime_set_new(en.primes.data(), en.primes.size(), &s.ptr);
    if (st != UF_OK) return fail(st);
    if (en.primes.size() == 1 && en.cap == 0 && !en.all_primes) {
      st = uf_enumerate_one_prime(en.primes[0], en.rank, &set.ptr);
    } else {
      uf_enum_options opts =
          make_options(en.all_primes, en.cap, en.parallel, en.budget);
      st = uf_enumerate_restricted(s.ptr, en.rank, &opts, &set.ptr);
    }
    if (st != UF_OK) return fail(st);
    return emit_solution_set(set, en.format);
  }

  if (*count) {
    if (!ct.t_range.empty() || ct.prime != 0) {
      if (ct.prime == 0 || ct.t_range.empty()) {
        return usage_error("--prime and --t-range go together");
      }
      if (!ct.primes.empty() || ct.rank != 0) {
        return usage_error("--prime/--t-range excludes --primes/--rank");
      }
      auto sep = ct.t_range.find("..");
      unsigned t_lo = 0;
      unsigned t_hi = 0;
      try {
        if (sep == std::string::npos) throw std::invalid_argument(ct.t_range);
        t_lo = static_cast<unsigned>(
            std::stoul(ct.t_range.substr(0, sep)));
        t_hi = static_cast<unsigned>(std::stoul(ct.t_range.substr(sep + 2)));
      } catch (const std::exception&) {
        return usage_error("--t-range must look like A..B");
      }
      if (t_lo == 0 || t_hi < t_lo) {
        return usage_error("--t-range must satisfy 1 <= A <= B");
      }
      if (ct.format == "csv") std::cout << "p,t,rank,count\n";
      json rows = json::array();
      for (unsigned t = t_lo; t <= t_hi; ++t) {
        unsigned rank = static_cast<unsigned>(ct.prime - 1) * t + 1;
        uint64_t n = 0;
        uf_status st = uf_count_one_prime(ct.prime, rank, ct.budget, &n);
        if (st != UF_OK) return fail(st);
        if (ct.format == "json") {
          rows.push_back({{"p", ct.prime},
                          {"t", t},
                          {"rank", rank},
                          {"count", n}});
        } else if (ct.format == "csv") {
          std::cout << ct.prime << ',' << t << ',' << rank << ',' << n << '\n';
        } else {
          std::cout << "t=" << t << " rank=" << rank << " count=" << n << '\n';
        }
      }
      if (ct.format == "json") std::cout << rows.dump() << '\n';
      return 0;
    }
    if (ct.primes.empty() || ct.rank == 0) {
      return usage_error("count needs --primes and --rank, or --prime and "
                         "--t-range");
    }
    PrimeSetHandle s;
    uf_status st = uf_prime_set_new(ct.primes.data(), ct.primes.size(), &s.ptr);
    if (st != UF_OK) return fail(st);
    uint64_t total = 0;
    uint64_t proper = 0;
    if (ct.primes.size() == 1 && ct.cap == 0) {
      st = uf_count_one_prime(ct.primes[0], ct.rank, ct.budget, &total);
      proper = total;  // a one-prime solution always uses its only prime
    } else {
      uf_enum_options opts = make_options(false, ct.cap, ct.parallel, ct.budget);
      st = uf_count_restricted(s.ptr, ct.rank, &opts, &total, &proper);
    }
    if (st != UF_OK) return fail(st);
    if (ct.format == "json") {
      json j;
      j["total"] = total;
      j["proper"] = proper;
      std::cout << j.dump() << '\n';
    } else if (ct.format == "csv") {
      std::cout << "total,proper\n" << total << ',' << proper << '\n';
    } else {
      std::cout << "total=" << total << " proper=" << proper << '\n';
    }
    return 0;
  }

  if (*greedy) {
    PrimeSetHandle s;
    uf_status st = uf_prime_set_new(gr.primes.data(), gr.primes.size(), &s.ptr);
    if (st != UF_OK) return fail(st);
    uf_enum_options opts = make_options(false, 0, gr.parallel, gr.budget);
    char* out = nullptr;
    st = uf_greedy_json(s.ptr, gr.rank, gr.compare ? 1 : 0, &opts, &out);
    if (st != UF_OK) return fail(st);
    std::string payload = take(out);
    if (gr.format == "json") {
      std::cout << payload << '\n';
      return 0;
    }
    json j = json::parse(payload);
    if (gr.format == "csv") {
      if (gr.compare) {
        std::cout << "bound,exact_completion,verdict,true_max,total,proper\n"
                  << j.at("bound").get<std::string>() << ','
                  << (j.at("exact_completion").get<bool>() ? 1 : 0) << ','
                  << j.at("verdict").get<std::string>() << ','
                  << null_to_empty(j.at("true_max")) << ','
                  << j.at("total_count").get<std::uint64_t>() << ','
                  << j.at("proper_count").get<std::uint64_t>() << '\n';
      } else {
        std::cout << "bound,exact_completion\n"
                  << j.at("bound").get<std::string>() << ','
                  << (j.at("exact_completion").get<bool>() ? 1 : 0) << '\n';
      }
      return 0;
    }
    std::cout << "prefix:";
    for (const json& d : j.at("prefix")) {
      std::cout << ' ' << d.get<std::string>();
    }
    std::cout << '\n';
    std::cout << "sigma: " << j.at("sigma").get<std::string>() << '\n';
    std::cout << "gamma: " << j.at("gamma").get<std::string>() << '\n';
    std::cout << "bound: " << j.at("bound").get<std::string>()
              << (j.at("exact_completion").get<bool>() ? " (exact completion)"
                                                       : "")
              << '\n';
    if (gr.compare) {
      std::cout << "verdict: " << j.at("verdict").get<std::string>();
      if (!j.at("true_max").is_null()) {
        std::cout << " (true max " << j.at("true_max").get<std::string>()
                  << ", " << j.at("total_count").get<std::uint64_t>()
                  << " solutions, " << j.at("proper_count").get<std::uint64_t>()
                  << " proper)";
      }
      std::cout << '\n';
    }
    return 0;
  }

  if (*maxdenom) {
    PrimeSetHandle s;
    uf_status st = uf_prime_set_new(md.primes.data(), md.primes.size(), &s.ptr);
    if (st != UF_OK) return fail(st);
    uf_enum_options opts = make_options(false, md.cap, md.parallel, md.budget);
    char* out = nullptr;
    st = uf_survey_json(s.ptr, md.rank, &opts, &out);
    if (st != UF_OK) return fail(st);
    json j = json::parse(take(out));
    if (md.format == "json") {
      std::cout << j.dump() << '\n';
    } else if (md.format == "csv") {
      std::cout << "max_denominator,factorization,max_denominator_proper\n"
                << null_to_empty(j.at("max_denominator")) << ','
                << null_to_empty(j.at("max_denominator_factorization")) << ','
                << null_to_empty(j.at("max_denominator_proper")) << '\n';
    } else if (j.at("max_denominator").is_null()) {
      std::cout << "no solutions\n";
    } else {
      std::cout << j.at("max_denominator").get<std::string>() << " = "
                << j.at("max_denominator_factorization").get<std::string>()
                << '\n';
    }
    return 0;
  }

  if (*lowest) {
    PrimeSetHandle s;
    uf_status st = uf_prime_set_new(lr.primes.data(), lr.primes.size(), &s.ptr);
    if (st != UF_OK) return fail(st);
    unsigned rank = 0;
    int found = 0;
    st = uf_lowest_rank(s.ptr, lr.max_rank, lr.budget, &rank, &found);
    if (st != UF_OK) return fail(st);
    if (lr.format == "json") {
      json j;
      j["found"] = found != 0;
      if (found != 0) {
        j["lowest_rank"] = rank;
      } else {
        j["lowest_rank"] = nullptr;
        j["max_rank"] = lr.max_rank;
      }
      std::cout << j.dump() << '\n';
    } else if (lr.format == "csv") {
      std::cout << "found,lowest_rank\n" << (found != 0 ? 1 : 0) << ',';
      if (found != 0) std::cout << rank;
      std::cout << '\n';
    } else if (found != 0) {
      std::cout << rank << '\n';
    } else {
      std::cout << "none up to rank " << lr.max_rank << '\n';
    }
    return 0;
  }

  if (*all) {
    SolutionSetHandle set;
    uf_status st =
        uf_enumerate_unrestricted(al.rank, al.force ? 1 : 0, &set.ptr);
    if (st != UF_OK) return fail(st);
    return emit_solution_set(set, al.format);
  }

  if (*analyze) {
    PrimeSetHandle s;
    uf_status st = uf_prime_set_new(an.primes.data(), an.primes.size(), &s.ptr);
    if (st != UF_OK) return fail(st);
    uf_enum_options opts = make_options(false, 0, an.parallel, an.budget);
    char* out = nullptr;
    st = uf_analyze_json(s.ptr, an.rank, &opts, &out);
    if (st != UF_OK) return fail(st);
    json j = json::parse(take(out));
    if (an.format == "json") {
      std::cout << j.dump() << '\n';
      return 0;
    }
    if (an.format == "csv") {
      std::cout << "rank,gcd_condition,admissible,total,proper,"
                   "max_denominator,greedy_bound,verdict\n";
      std::cout << j.at("rank").get<unsigned>() << ','
                << (j.at("gcd_condition").get<bool>() ? 1 : 0) << ','
                << (j.at("admissible").get<bool>() ? 1 : 0) << ','
                << j.at("total").get<std::uint64_t>() << ','
                << j.at("proper").get<std::uint64_t>() << ','
                << null_to_empty(j.at("max_denominator")) << ',';
      if (!j.at("greedy").is_null()) {
        std::cout << j.at("greedy").at("bound").get<std::string>() << ','
                  << j.at("greedy").at("verdict").get<std::string>();
      } else {
        std::cout << ',';
      }
      std::cout << '\n';
      return 0;
    }
    std::cout << "prime set:";
    for (const json& p : j.at("prime_set")) {
      std::cout << ' ' << p.get<std::uint64_t>();
    }
    std::cout << "\nrank: " << j.at("rank").get<unsigned>() << '\n';
    std::cout << "gcd condition: "
              << (j.at("gcd_condition").get<bool>() ? "yes" : "no") << '\n';
    std::cout << "admissible: "
              << (j.at("admissible").get<bool>() ? "yes" : "no") << '\n';
    std::cout << "solutions: " << j.at("total").get<std::uint64_t>()
              << " total, " << j.at("proper").get<std::uint64_t>()
              << " using every prime\n";
    if (!j.at("max_denominator").is_null()) {
      std::cout << "largest denominator: "
                << j.at("max_denominator").get<std::string>() << " = "
                << j.at("max_denominator_factorization").get<std::string>()
                << '\n';
    }
    if (!j.at("greedy").is_null()) {
      const json& g = j.at("greedy");
      std::cout << "greedy bound: " << g.at("bound").get<std::string>() << " ("
                << g.at("verdict").get<std::string>() << ")\n";
    }
    return 0;
  }

  if (*family) {
    // Positional parameters map onto the per-kind options.
    if (!fa.params.empty()) {
      auto as_u64 = [](const std::string& text, std::uint64_t& out) {
        try {
          std::size_t used = 0;
          out = std::stoull(text, &used);
          return used == text.size();
        } catch (const std::exception&) {
          return false;
        }
      };
      if (fa.kind == "double") {
        if (fa.params.size() != 1) {
          return usage_error("kind double takes one comma-separated tuple");
        }
        fa.denominators.clear();
        std::stringstream items(fa.params[0]);
        std::string item;
        while (std::getline(items, item, ',')) fa.denominators.push_back(item);
      } else {
        if (fa.params.size() != 2) {
          return usage_error("kind " + fa.kind + " takes two parameters");
        }
        std::uint64_t first = 0;
        std::uint64_t rank = 0;
        if (!as_u64(fa.params[0], first) || !as_u64(fa.params[1], rank) ||
            rank == 0) {
          return usage_error("family parameters must be positive integers");
        }
        fa.rank = static_cast<unsigned>(rank);
        if (fa.kind == "fermat") {
          fa.n = static_cast<unsigned>(first);
        } else if (fa.kind == "mersenne") {
          fa.q = static_cast<unsigned>(first);
        } else {
          fa.p = first;
        }
      }
    }
    SolutionSetHandle set;
    uf_status st = UF_OK;
    if (fa.kind == "canonical") {
      if (fa.p == 0 || fa.rank == 0) {
        return usage_error("kind canonical needs --p and --rank");
      }
      st = uf_family_canonical(fa.p, fa.rank, &set.ptr);
    } else if (fa.kind == "fermat") {
      if (fa.rank == 0) return usage_error("kind fermat needs --n and --rank");
      st = uf_family_fermat(fa.n, fa.rank, &set.ptr);
    } else if (fa.kind == "mersenne") {
      if (fa.q == 0 || fa.rank == 0) {
        return usage_error("kind mersenne needs --q and --rank");
      }
      st = uf_family_mersenne(fa.q, fa.rank, &set.ptr);
    } else if (fa.kind == "pow2gap") {
      if (fa.p == 0 || fa.rank == 0) {
        return usage_error("kind pow2gap needs --p and --rank");
      }
      st = uf_family_pow2_gap(fa.p, fa.rank, &set.ptr);
    } else {  // double
      if (fa.denominators.empty()) {
        return usage_error("kind double needs --denominators");
      }
      PrimeSetHandle s;
      if (!fa.primes.empty()) {
        st = uf_prime_set_new(fa.primes.data(), fa.primes.size(), &s.ptr);
        if (st != UF_OK) return fail(st);
      }
      SolutionSetHandle input;
      std::vector<const char*> denoms = to_cstrs(fa.denominators);
      st = uf_solution_set_from_tuple(denoms.data(), denoms.size(), s.ptr,
                                      &input.ptr);
      if (st != UF_OK) return fail(st);
      st = uf_family_double_last(input.ptr, 0, &set.ptr);
    }
    if (st != UF_OK) return fail(st);
    if (fa.verify) {
      std::vector<std::uint64_t> base;
      if (fa.kind == "canonical") {
        base = {fa.p};
      } else if (fa.kind == "fermat") {
        base = {2, (std::uint64_t(1) << (1u << fa.n)) + 1};
      } else if (fa.kind == "mersenne") {
        base = {2, (std::uint64_t(1) << fa.q) - 1};
      } else if (fa.kind == "pow2gap") {
        base = {2, fa.p};
      } else {
        base = fa.primes;
        if (std::find(base.begin(), base.end(), 2) == base.end()) {
          base.push_back(2);
        }
      }
      PrimeSetHandle vs;
      if (!base.empty()) {
        st = uf_prime_set_new(base.data(), base.size(), &vs.ptr);
        if (st != UF_OK) return fail(st);
      }
      unsigned rank = uf_solution_set_rank(set.ptr);
      std::vector<std::string> denoms;
      for (unsigned j = 0; j < rank; ++j) {
        char* d = nullptr;
        st = uf_solution_set_denominator(set.ptr, 0, j, &d);
        if (st != UF_OK) return fail(st);
        denoms.push_back(take(d));
      }
      std::vector<const char*> cs = to_cstrs(denoms);
      int pass = 0;
      char* report = nullptr;
      st = uf_verify(cs.data(), cs.size(), vs.ptr, 0, rank, &pass, &report);
      if (st != UF_OK) return fail(st);
      uf_string_free(report);
      if (pass == 0) {
        std::cerr << "error: verification failed\n";
        return 4;
      }
      if (fa.format == "text") std::cout << "verification: PASS\n";
    }
    return emit_solution_set(set, fa.format);
  }

  if (*verify) {
    PrimeSetHandle s;
    uf_status st = UF_OK;
    if (!ve.primes.empty()) {
      st = uf_prime_set_new(ve.primes.data(), ve.primes.size(), &s.ptr);
      if (st != UF_OK) return fail(st);
    }
    std::vector<const char*> denoms = to_cstrs(ve.denominators);
    int pass = 0;
    char* out = nullptr;
    st = uf_verify(denoms.data(), denoms.size(), s.ptr, ve.all_primes ? 1 : 0,
                   ve.rank, &pass, &out);
    if (st != UF_OK) return fail(st);
    json j = json::parse(take(out));
    if (ve.format == "json") {
      std::cout << j.dump() << '\n';
    } else if (ve.format == "csv") {
      auto flag = [&j](const char* key) -> std::string {
        const json& v = j.at(key);
        if (v.is_null()) return "";
        return v.get<bool>() ? "1" : "0";
      };
      std::cout << "pass,sum_is_one,sorted,all_smooth,all_primes_used,"
                   "rank_matches\n"
                << flag("pass") << ',' << flag("sum_is_one") << ','
                << flag("sorted") << ',' << flag("all_smooth") << ','
                << flag("all_primes_used") << ',' << flag("rank_matches")
                << '\n';
    } else {
      auto describe = [&j](const char* key) -> std::string {
        const json& v = j.at(key);
        if (v.is_null()) return "not checked";
        return v.get<bool>() ? "yes" : "NO";
      };
      std::cout << "sum is 1: " << describe("sum_is_one") << '\n';
      std::cout << "weakly increasing: " << describe("sorted") << '\n';
      std::cout << "all smooth: " << describe("all_smooth") << '\n';
      std::cout << "all primes used: " << describe("all_primes_used") << '\n';
      std::cout << "rank matches: " << describe("rank_matches") << '\n';
      std::cout << (pass != 0 ? "PASS" : "FAIL") << '\n';
    }
    return pass != 0 ? 0 : 4;
  }

  if (*table) {
    json spec;
    spec["kind"] = tb.kind;
    if (!tb.primes.empty()) spec["primes"] = tb.primes;
    spec["rank_lo"] = tb.rank_lo;
    spec["rank_hi"] = tb.rank_hi;
    spec["t_lo"] = tb.t_lo;
    spec["t_hi"] = tb.t_hi;
    spec["max_rank"] = tb.max_rank;
    spec["budget_seconds"] = tb.budget;
    spec["parallel_width"] = tb.parallel;
    spec["thabit_kind"] = tb.thabit_kind;
    const char* wire_format = tb.format == "csv" ? "csv" : "json";
    char* out = nullptr;
    uf_status st =
        uf_generate_table(spec.dump().c_str(), wire_format, &out);
    if (st != UF_OK) return fail(st);
    std::string payload = take(out);
    if (tb.format == "text") {
      print_table_text(payload);
    } else if (tb.format == "json") {
      std::cout << payload << '\n';
    } else {
      std::cout << payload;
    }
    return 0;
  }

  if (*fit) {
    json j;
    if (ft.input.empty()) {
      char* out = nullptr;
      uf_status st = uf_fit_reference_json(&out);
      if (st != UF_OK) return fail(st);
      j = json::parse(take(out));
    } else {
      std::ifstream in(ft.input);
      if (!in) return usage_error("cannot open " + ft.input);
      std::vector<std::uint64_t> ps;
      std::vector<double> ranks;
      std::string line;
      bool header = true;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {  // header row is mandatory, so drop the first line
          header = false;
          continue;
        }
        auto sep = line.find(',');
        if (sep == std::string::npos) {
          return usage_error("rows must look like p,rank");
        }
        try {
          ps.push_back(std::stoull(line.substr(0, sep)));
          ranks.push_back(std::stod(line.substr(sep + 1)));
        } catch (const std::exception&) {
          return usage_error("rows must look like p,rank");
        }
      }
      double slope = 0;
      double intercept = 0;
      double rss = 0;
      uf_status st = uf_fit_log_model(ps.data(), ranks.data(), ps.size(),
                                      &slope, &intercept, &rss);
      if (st != UF_OK) return fail(st);
      j["slope"] = slope;
      j["intercept"] = intercept;
      j["rss"] = rss;
      j["points"] = ps.size();
    }
    if (ft.format == "json") {
      std::cout << j.dump() << '\n';
    } else if (ft.format == "csv") {
      std::size_t n = j.at("points").is_array() ? j.at("points").size()
                                                : j.at("points").get<std::size_t>();
      std::cout << "slope,intercept,rss,points\n"
                << j.at("slope").get<double>() << ','
                << j.at("intercept").get<double>() << ','
                << j.at("rss").get<double>() << ',' << n << '\n';
    } else {
      std::size_t n = j.at("points").is_array() ? j.at("points").size()
                                                : j.at("points").get<std::size_t>();
      std::cout << "rank ~ " << j.at("slope").get<double>() << " * ln p + "
                << j.at("intercept").get<double>() << "  (rss "
                << j.at("rss").get<double>() << " over " << n << " points)\n";
    }
    return 0;
  }

  if (*crosscheck) {
    char* out = nullptr;
    uf_status st = uf_reference_crosscheck_json(&out);
    if (st != UF_OK) return fail(st);
    json j = json::parse(take(out));
    bool all_pass = j.at("all_pass").get<bool>();
    if (cc.format == "json") {
      std::cout << j.dump() << '\n';
    } else if (cc.format == "csv") {
      std::cout << "p,t,rank,expected,computed,pass\n";
      for (const json& term : j.at("terms")) {
        std::cout << term.at("p").get<std::uint64_t>() << ','
                  << term.at("t").get<unsigned>() << ','
                  << term.at("rank").get<unsigned>() << ','
                  << term.at("expected").get<std::uint64_t>() << ','
                  << term.at("computed").get<std::uint64_t>() << ','
                  << (term.at("pass").get<bool>() ? 1 : 0) << '\n';
      }
    } else {
      for (const json& term : j.at("terms")) {
        std::cout << "p=" << term.at("p").get<std::uint64_t>()
                  << " t=" << term.at("t").get<unsigned>()
                  << " rank=" << term.at("rank").get<unsigned>()
                  << " expected=" << term.at("expected").get<std::uint64_t>()
                  << " computed=" << term.at("computed").get<std::uint64_t>()
                  << (term.at("pass").get<bool>() ? " PASS" : " FAIL") << '\n';
      }
      std::cout << (all_pass ? "all terms reproduced" : "MISMATCH") << '\n';
    }
    return all_pass ? 0 : 4;
  }

  return usage_error("no subcommand given");
}
