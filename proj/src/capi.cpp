#include "unitfrac/unitfrac.h"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unitfrac/analysis.hpp"
#include "unitfrac/enumerate.hpp"
#include "unitfrac/families.hpp"
#include "unitfrac/feasibility.hpp"
#include "unitfrac/greedy.hpp"
#include "unitfrac/numeric.hpp"

struct uf_prime_set {
  unitfrac::PrimeSet set;
};

struct uf_solution_set {
  unitfrac::SolutionSet set;
};

namespace {

using nlohmann::json;
using unitfrac::EnumOptions;
using unitfrac::Natural;
using unitfrac::PrimeSet;
using unitfrac::Solution;
using unitfrac::SolutionSet;

thread_local std::string g_last_error;

void set_error(const std::string& what) { g_last_error = what; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Maps the library's exception vocabulary onto status codes.  The body
// returns a status itself so checks can fail without an exception.
template <typename F>
uf_status guarded(F&& body) noexcept {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return UF_ERROR_INVALID_ARGUMENT;
  } catch (const json::exception& e) {
    set_error(e.what());
    return UF_ERROR_INVALID_ARGUMENT;
  } catch (const unitfrac::SearchTimeout& e) {
    set_error(e.what());
    return UF_ERROR_INTRACTABLE;
  } catch (const unitfrac::IntractableError& e) {
    set_error(e.what());
    return UF_ERROR_INTRACTABLE;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return UF_ERROR_NO_MEMORY;
  } catch (const std::exception& e) {
    set_error(e.what());
    return UF_ERROR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return UF_ERROR_INTERNAL;
  }
}

uf_status invalid(const char* what) {
  set_error(what);
  return UF_ERROR_INVALID_ARGUMENT;
}

EnumOptions to_options(const uf_enum_options* opts) {
  EnumOptions out;
  if (opts == nullptr) return out;
  out.require_all_primes = opts->require_all_primes != 0;
  out.parallel_width = opts->parallel_width;
  out.exponent_cap = opts->exponent_cap;
  if (opts->budget_seconds > 0) {
    out.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(opts->budget_seconds));
  }
  return out;
}

std::optional<std::chrono::steady_clock::time_point> to_deadline(
    double budget_seconds) {
  uf_enum_options opts{};
  opts.budget_seconds = budget_seconds;
  return to_options(&opts).deadline;
}

uf_solution_set* wrap(SolutionSet set) {
  return new uf_solution_set{std::move(set)};
}

json greedy_to_json(const unitfrac::GreedyResult& g) {
  json j;
  json prefix = json::array();
  for (const Natural& d : g.prefix) prefix.push_back(d.get_str());
  j["prefix"] = std::move(prefix);
  j["sigma"] = g.sigma.get_str();
  j["gamma"] = g.gamma.get_str();
  j["bound"] = g.bound.get_str();
  j["exact_completion"] = g.exact_completion;
  return j;
}

// The family constructors return bare tuples; the C layer packages each as
// a verified singleton set over its natural prime set.
uf_status package_family(Solution sol, std::vector<std::uint64_t> primes,
                         uf_solution_set** out) {
  PrimeSet s(std::move(primes));
  auto report = unitfrac::verify_solution(sol, s);
  if (!report.pass()) {
    set_error("family tuple failed verification");
    return UF_ERROR_VERIFICATION;
  }
  SolutionSet set;
  set.prime_set = std::move(s);
  set.rank = sol.rank();
  set.solutions.push_back(std::move(sol));
  *out = wrap(std::move(set));
  return UF_OK;
}

}  // namespace

extern "C" {

const char* uf_version(void) { return unitfrac::kLibraryVersion; }

const char* uf_last_error(void) { return g_last_error.c_str(); }

void uf_string_free(char* s) { std::free(s); }

int uf_is_prime(uint64_t n) { return unitfrac::is_prime(n) ? 1 : 0; }

uf_status uf_prime_set_new(const uint64_t* primes, size_t count,
                           uf_prime_set** out) {
  return guarded([&]() -> uf_status {
    if (primes == nullptr || out == nullptr) return invalid("null argument");
    std::vector<std::uint64_t> ps(primes, primes + count);
    *out = new uf_prime_set{PrimeSet(std::move(ps))};
    return UF_OK;
  });
}

void uf_prime_set_free(uf_prime_set* s) { delete s; }

size_t uf_prime_set_size(const uf_prime_set* s) {
  return s == nullptr ? 0 : s->set.size();
}

uint64_t uf_prime_set_get(const uf_prime_set* s, size_t index) {
  if (s == nullptr || index >= s->set.size()) return 0;
  return s->set.primes()[index];
}

int uf_gcd_condition(const uf_prime_set* s, unsigned rank) {
  if (s == nullptr || rank == 0) return 0;
  return (rank - 1) % unitfrac::gcd_condition(s->set) == 0 ? 1 : 0;
}

int uf_is_admissible(const uf_prime_set* s, unsigned rank) {
  if (s == nullptr) return 0;
  return unitfrac::is_admissible(s->set, rank) ? 1 : 0;
}

uf_status uf_one_prime_cap(uint64_t p, unsigned rank, unsigned* out) {
  return guarded([&]() -> uf_status {
    if (out == nullptr) return invalid("null argument");
    *out = unitfrac::one_prime_cap(p, rank);
    return UF_OK;
  });
}

uf_status uf_enumerate_restricted(const uf_prime_set* s, unsigned rank,
                                  const uf_enum_options* opts,
                                  uf_solution_set** out) {
  return guarded([&]() -> uf_status {
    if (s == nullptr || out == nullptr) return invalid("null argument");
    *out = wrap(unitfrac::cached_enumerate(s->set, rank, to_options(opts)));
    return UF_OK;
  });
}

uf_status uf_count_restricted(const uf_prime_set* s, unsigned rank,
                              const uf_enum_options* opts, uint64_t* total,
                              uint64_t* proper) {
  return guarded([&]() -> uf_status {
    if (s == nullptr || total == nullptr || proper == nullptr) {
      return invalid("null argument");
    }
    unitfrac::SurveyResult survey =
        unitfrac::cached_survey(s->set, rank, to_options(opts));
    *total = survey.total;
    *proper = survey.proper;
    return UF_OK;
  });
}

uf_status uf_survey_json(const uf_prime_set* s, unsigned rank,
                         const uf_enum_options* opts, char** out) {
  return guarded([&]() -> uf_status {
    if (s == nullptr || out == nullptr) return invalid("null argument");
    unitfrac::SurveyResult survey =
        unitfrac::cached_survey(s->set, rank, to_options(opts));
    json j;
    j["total"] = survey.total;
    j["proper"] = survey.proper;
    j["max_denominator"] =
        survey.max_denom ? json(survey.max_denom->get_str()) : json();
    j["max_denominator_factorization"] =
        survey.max_denom
            ? json(unitfrac::factorization_string(s->set, *survey.max_denom))
            : json();
    j["max_denominator_proper"] =
        survey.max_denom_proper ? json(survey.max_denom_proper->get_str())
                                : json();
    *out = dup_string(j.dump());
    return UF_OK;
  });
}

uf_status uf_enumerate_one_prime(uint64_t p, unsigned rank,
                                 uf_solution_set** out) {
  return guarded([&]() -> uf_status {
    if (out == nullptr) return invalid("null argument");
    *out = wrap(unitfrac::enumerate_one_prime(p, rank));
    return UF_OK;
  });
}

uf_status uf_count_one_prime(uint64_t p, unsigned rank, double budget_seconds,
                             uint64_t* out) {
  return guarded([&]() -> uf_status {
    if (out == nullptr) return invalid("null argument");
    *out = unitfrac::count_one_prime(p, rank, to_deadline(budget_seconds));
    return UF_OK;
  });
}

uf_status uf_enumerate_unrestricted(unsigned rank, int force,
                                    uf_solution_set** out) {
  return guarded([&]() -> uf_status {
    if (out == nullptr) return invalid("null argument");
    unitfrac::UnrestrictedOptions opts;
    opts.force = force != 0;
    *out = wrap(unitfrac::enumerate_unrestricted(rank, opts));
    return UF_OK;
  });
}

uf_status uf_lowest_rank(const uf_prime_set* s, unsigned max_rank,
                         double budget_seconds, unsigned* out_rank,
                         int* found) {
  return guarded([&]() -> uf_status {
    if (s == nullptr || out_rank == nullptr || found == nullptr) {
      return invalid("null argument");
    }
    auto rank =
        unitfrac::lowest_rank(s->set, max_rank, to_deadline(budget_seconds));
    *found = rank.has_value() ? 1 : 0;
    *out_rank = rank.value_or(0);
    return UF_OK;
  });
}

uf_status uf_analyze_json(const uf_prime_set* s, unsigned rank,
                          const uf_enum_options* opts, char** out) {
  return guarded([&]() -> uf_status {
    if (s == nullptr || out == nullptr) return invalid("null argument");
    json j;
    j["prime_set"] = s->set.primes();
    j["rank"] = rank;
    j["gcd_condition"] =
        rank >= 1 && (rank - 1) % unitfrac::gcd_condition(s->set) == 0;
    j["admissible"] = unitfrac::is_admissible(s->set, rank);
    if (rank >= 2) {
      unitfrac::GreedyComparison cmp =
          unitfrac::cached_compare(s->set, rank, to_options(opts));
      j["total"] = cmp.total_count;
      j["proper"] = cmp.proper_count;
      j["max_denominator"] =
          cmp.true_max ? json(cmp.true_max->get_str()) : json();
      j["max_denominator_factorization"] =
          cmp.true_max
              ? json(unitfrac::factorization_string(s->set, *cmp.true_max))
              : json();
      json greedy = greedy_to_json(cmp.greedy);
      greedy["verdict"] = unitfrac::to_string(cmp.verdict);
      j["greedy"] = std::move(greedy);
    } else {
      unitfrac::SurveyResult survey =
          unitfrac::cached_survey(s->set, rank, to_options(opts));
      j["total"] = survey.total;
      j["proper"] = survey.proper;
      j["max_denominator"] =
          survey.max_denom ? json(survey.max_denom->get_str()) : json();
      j["max_denominator_factorization"] =
          survey.max_denom
              ? json(unitfrac::factorization_string(s->set, *survey.max_denom))
              : json();
      j["greedy"] = nullptr;
    }
    *out = dup_string(j.dump());
    return UF_OK;
  });
}

uf_status uf_solution_set_from_tuple(const char* const* denominators,
                                     size_t count, const uf_prime_set* s,
                                     uf_solution_set** out) {
  return guarded([&]() -> uf_status {
    if (denominators == nullptr || out == nullptr) {
      return invalid("null argument");
    }
    Solution sol;
    for (size_t i = 0; i < count; ++i) {
      if (denominators[i] == nullptr) return invalid("null denominator");
      sol.denominators.emplace_back(denominators[i], 10);
    }
    std::optional<PrimeSet> prime_set;
    if (s != nullptr) prime_set = s->set;
    if (!unitfrac::verify_solution(sol, prime_set).pass()) {
      set_error("tuple failed verification");
      return UF_ERROR_VERIFICATION;
    }
    SolutionSet set;
    set.prime_set = std::move(prime_set);
    set.rank = sol.rank();
    set.solutions.push_back(std::move(sol));
    *out = wrap(std::move(set));
    return UF_OK;
  });
}

unsigned uf_solution_set_rank(const uf_solution_set* set) {
  return set == nullptr ? 0 : set->set.rank;
}

size_t uf_solution_set_count(const uf_solution_set* set) {
  return set == nullptr ? 0 : set->set.solutions.size();
}

uf_status uf_solution_set_denominator(const uf_solution_set* set, size_t i,
                                      size_t j, char** out) {
  return guarded([&]() -> uf_status {
    if (set == nullptr || out == nullptr) return invalid("null argument");
    if (i >= set->set.solutions.size()) return invalid("solution index out of range");
    const Solution& sol = set->set.solutions[i];
    if (j >= sol.denominators.size()) {
      return invalid("denominator index out of range");
    }
    *out = dup_string(sol.denominators[j].get_str());
    return UF_OK;
  });
}

uf_status uf_solution_set_max_denominator(const uf_solution_set* set,
                                          char** out) {
  return guarded([&]() -> uf_status {
    if (set == nullptr || out == nullptr) return invalid("null argument");
    auto max = unitfrac::max_denominator(set->set);
    *out = max ? dup_string(max->get_str()) : nullptr;
    return UF_OK;
  });
}

uf_status uf_solution_set_json(const uf_solution_set* set, char** out) {
  return guarded([&]() -> uf_status {
    if (set == nullptr || out == nullptr) return invalid("null argument");
    *out = dup_string(unitfrac::solution_set_to_json(set->set));
    return UF_OK;
  });
}

uf_status uf_solution_set_csv(const uf_solution_set* set, char** out) {
  return guarded([&]() -> uf_status {
    if (set == nullptr || out == nullptr) return invalid("null argument");
    *out = dup_string(unitfrac::solution_set_to_csv(set->set));
    return UF_OK;
  });
}

void uf_solution_set_free(uf_solution_set* set) { delete set; }

uf_status uf_greedy_json(const uf_prime_set* s, unsigned rank, int compare,
                         const uf_enum_options* opts, char** out) {
  return guarded([&]() -> uf_status {
    if (s == nullptr || out == nullptr) return invalid("null argument");
    json j;
    if (compare != 0) {
      unitfrac::GreedyComparison cmp =
          unitfrac::cached_compare(s->set, rank, to_options(opts));
      j = greedy_to_json(cmp.greedy);
      j["total_count"] = cmp.total_count;
      j["proper_count"] = cmp.proper_count;
      j["true_max"] = cmp.true_max ? json(cmp.true_max->get_str()) : json();
      j["verdict"] = unitfrac::to_string(cmp.verdict);
    } else {
      j = greedy_to_json(unitfrac::greedy_run(s->set, rank));
    }
    *out = dup_string(j.dump());
    return UF_OK;
  });
}

uf_status uf_family_canonical(uint64_t p, unsigned rank,
                              uf_solution_set** out) {
  return guarded([&]() -> uf_status {
    if (out == nullptr) return invalid("null argument");
    return package_family(unitfrac::canonical_one_prime(p, rank), {p}, out);
  });
}

uf_status uf_family_fermat(unsigned n, unsigned rank, uf_solution_set** out) {
  return guarded([&]() -> uf_status {
    if (out == nullptr) return invalid("null argument");
    Solution sol = unitfrac::fermat_family(n, rank);  // validates n <= 4
    std::uint64_t fermat = (std::uint64_t(1) << (1u << n)) + 1;
    return package_family(std::move(sol), {2, fermat}, out);
  });
}

uf_status uf_family_mersenne(unsigned q, unsigned rank,
                             uf_solution_set** out) {
  return guarded([&]() -> uf_status {
    if (out == nullptr) return invalid("null argument");
    if (q >= 64) return invalid("mersenne exponent out of range");
    std::uint64_t mersenne = (std::uint64_t(1) << q) - 1;
    return package_family(unitfrac::mersenne_family(q, rank), {2, mersenne},
                          out);
  });
}

uf_status uf_family_pow2_gap(uint64_t p, unsigned rank,
                             uf_solution_set** out) {
  return guarded([&]() -> uf_status {
    if (out == nullptr) return invalid("null argument");
    auto sol = unitfrac::pow2_gap_family(p, rank);
    if (!sol) {
      set_error("no offset yields a valid tuple for this prime and rank");
      return UF_ERROR_VERIFICATION;
    }
    return package_family(std::move(*sol), {2, p}, out);
  });
}

uf_status uf_family_double_last(const uf_solution_set* set, size_t index,
                                uf_solution_set** out) {
  return guarded([&]() -> uf_status {
    if (set == nullptr || out == nullptr) return invalid("null argument");
    if (index >= set->set.solutions.size()) {
      return invalid("solution index out of range");
    }
    Solution doubled = unitfrac::double_last(set->set.solutions[index]);
    SolutionSet result;
    if (set->set.prime_set) {
      // Doubling multiplies the tail by 2; keep the factor base closed.
      std::vector<std::uint64_t> ps = set->set.prime_set->primes();
      if (ps.empty() || ps.front() != 2) ps.insert(ps.begin(), 2);
      result.prime_set = PrimeSet(std::move(ps));
    }
    result.rank = doubled.rank();
    result.solutions.push_back(std::move(doubled));
    *out = wrap(std::move(result));
    return UF_OK;
  });
}

uf_status uf_verify(const char* const* denominators, size_t count,
                    const uf_prime_set* s, int require_all_primes,
                    unsigned rank, int* pass, char** report_json) {
  return guarded([&]() -> uf_status {
    if (denominators == nullptr || pass == nullptr ||
        report_json == nullptr) {
      return invalid("null argument");
    }
    Solution sol;
    for (size_t i = 0; i < count; ++i) {
      if (denominators[i] == nullptr) return invalid("null denominator");
      sol.denominators.emplace_back(denominators[i], 10);
    }
    std::optional<PrimeSet> prime_set;
    if (s != nullptr) prime_set = s->set;
    std::optional<unsigned> expected_rank;
    if (rank > 0) expected_rank = rank;
    auto report = unitfrac::verify_solution(sol, prime_set, expected_rank,
                                            require_all_primes != 0);
    json j;
    j["pass"] = report.pass();
    j["sum_is_one"] = report.sum_is_one;
    j["sorted"] = report.sorted;
    j["all_smooth"] = report.all_smooth ? json(*report.all_smooth) : json();
    j["all_primes_used"] =
        report.all_primes_used ? json(*report.all_primes_used) : json();
    j["rank_matches"] =
        report.rank_matches ? json(*report.rank_matches) : json();
    if (prime_set) {
      json factors = json::array();
      for (std::size_t i = 0; i < sol.denominators.size(); ++i) {
        const auto& f = report.factorizations[i];
        factors.push_back(
            f ? json(unitfrac::factorization_string(prime_set,
                                                    sol.denominators[i]))
              : json());
      }
      j["factorizations"] = std::move(factors);
    }
    *pass = report.pass() ? 1 : 0;
    *report_json = dup_string(j.dump());
    return UF_OK;
  });
}

uf_status uf_generate_table(const char* spec_json, const char* format,
                            char** out) {
  return guarded([&]() -> uf_status {
    if (spec_json == nullptr || format == nullptr || out == nullptr) {
      return invalid("null argument");
    }
    json j = json::parse(spec_json);
    auto kind = unitfrac::table_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) return invalid("unknown table kind");
    unitfrac::TableSpec spec;
    spec.kind = *kind;
    if (j.contains("primes")) {
      spec.primes = j.at("primes").get<std::vector<std::uint64_t>>();
    }
    spec.rank_lo = j.value("rank_lo", spec.rank_lo);
    spec.rank_hi = j.value("rank_hi", spec.rank_hi);
    spec.t_lo = j.value("t_lo", spec.t_lo);
    spec.t_hi = j.value("t_hi", spec.t_hi);
    spec.max_rank = j.value("max_rank", spec.max_rank);
    spec.budget_seconds = j.value("budget_seconds", spec.budget_seconds);
    spec.parallel_width = j.value("parallel_width", spec.parallel_width);
    spec.thabit_kind = j.value("thabit_kind", spec.thabit_kind);
    unitfrac::Table table = unitfrac::generate_table(spec);
    std::string rendered;
    if (std::strcmp(format, "json") == 0) {
      rendered = unitfrac::table_to_json(table);
    } else if (std::strcmp(format, "csv") == 0) {
      rendered = unitfrac::table_to_csv(table);
    } else {
      return invalid("format must be json or csv");
    }
    *out = dup_string(rendered);
    return UF_OK;
  });
}

uf_status uf_fit_log_model(const uint64_t* ps, const double* ranks,
                           size_t count, double* slope, double* intercept,
                           double* rss) {
  return guarded([&]() -> uf_status {
    if (ps == nullptr || ranks == nullptr || slope == nullptr ||
        intercept == nullptr || rss == nullptr) {
      return invalid("null argument");
    }
    std::vector<std::pair<std::uint64_t, double>> points;
    points.reserve(count);
    for (size_t i = 0; i < count; ++i) points.emplace_back(ps[i], ranks[i]);
    unitfrac::FitResult fit = unitfrac::fit_log_model(points);
    *slope = fit.slope;
    *intercept = fit.intercept;
    *rss = fit.rss;
    return UF_OK;
  });
}

uf_status uf_fit_reference_json(char** out) {
  return guarded([&]() -> uf_status {
    if (out == nullptr) return invalid("null argument");
    std::vector<std::pair<std::uint64_t, double>> points;
    json pts = json::array();
    for (const auto& [p, rank] : unitfrac::reference_lowest_ranks()) {
      points.emplace_back(p, static_cast<double>(rank));
      pts.push_back({{"p", p}, {"rank", rank}});
    }
    unitfrac::FitResult fit = unitfrac::fit_log_model(points);
    json j;
    j["slope"] = fit.slope;
    j["intercept"] = fit.intercept;
    j["rss"] = fit.rss;
    j["points"] = std::move(pts);
    *out = dup_string(j.dump());
    return UF_OK;
  });
}

uf_status uf_reference_crosscheck_json(char** out) {
  return guarded([&]() -> uf_status {
    if (out == nullptr) return invalid("null argument");
    unitfrac::CrosscheckReport report = unitfrac::reference_crosscheck();
    json terms = json::array();
    for (const unitfrac::CrosscheckTerm& term : report.terms) {
      terms.push_back({{"p", term.p},
                       {"t", term.t},
                       {"rank", term.rank},
                       {"expected", term.expected},
                       {"computed", term.computed},
                       {"pass", term.pass}});
    }
    json j;
    j["all_pass"] = report.all_pass;
    j["terms"] = std::move(terms);
    *out = dup_string(j.dump());
    return UF_OK;
  });
}

}  // extern "C"
