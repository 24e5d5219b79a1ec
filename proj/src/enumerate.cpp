#include "unitfrac/enumerate.hpp"

#include <atomic>
#include <cstdio>
#include <functional>
#include <mutex>
#include <thread>

#include "unitfrac/feasibility.hpp"

namespace unitfrac {

namespace {

using Clock = std::chrono::steady_clock;

// One worker's depth-first search over a fixed first denominator.  The sink
// sees every solution (with a flag for "uses all primes") and may stop the
// search by returning false.
class RestrictedDfs {
 public:
  using Sink = std::function<bool(const std::vector<Natural>&, bool)>;

  RestrictedDfs(const PrimeSet& s, unsigned rank, const EnumOptions& opts,
                Sink sink)
      : set_(s),
        rank_(rank),
        deadline_(opts.deadline),
        table_(s, opts.exponent_cap),
        sink_(std::move(sink)),
        used_(s.size(), 0) {
    chosen_.reserve(rank);
  }

  // Explores the subtree whose first denominator is `root`; returns false
  // when the sink stopped the search.
  bool run(const SmoothNumber& root) {
    apply(root);
    Rational residual = 1 - unit_fraction(root.value);
    bool cont = dfs(root.value, residual);
    undo(root);
    return cont;
  }

 private:
  void tick() {
    if ((++ticks_ & 4095) == 0 && deadline_ && Clock::now() > *deadline_) {
      throw SearchTimeout();
    }
  }

  void apply(const SmoothNumber& d) {
    chosen_.push_back(d.value);
    for (std::size_t j = 0; j < used_.size(); ++j) {
      if (d.exponents[j] > 0) ++used_[j];
    }
  }

  void undo(const SmoothNumber& d) {
    chosen_.pop_back();
    for (std::size_t j = 0; j < used_.size(); ++j) {
      if (d.exponents[j] > 0) --used_[j];
    }
  }

  bool complete(const Natural& last, const Rational& residual) {
    if (residual.get_num() != 1) return true;
    const Natural& d = residual.get_den();
    if (d < last || d < 2) return true;
    auto f = factor_over(set_, d);
    if (!f) return true;
    bool proper = true;
    for (std::size_t j = 0; j < used_.size(); ++j) {
      if (used_[j] == 0 && f->exponents[j] == 0) proper = false;
    }
    chosen_.push_back(d);
    bool cont = sink_(chosen_, proper);
    chosen_.pop_back();
    return cont;
  }

  bool dfs(const Natural& last, const Rational& residual) {
    tick();
    const unsigned s = static_cast<unsigned>(chosen_.size());
    if (s + 1 == rank_) return complete(last, residual);
    const Natural& m = residual.get_num();
    const Natural& n = residual.get_den();
    // Feasible next denominators: residual stays positive (d > n/m) and the
    // remaining R-s terms can still reach it (d <= (R-s) n/m).
    Natural lo = floor_div(n, m) + 1;
    if (lo < last) lo = last;
    Natural hi = floor_div(n * (rank_ - s), m);
    auto [first, end] = table_.range(lo, hi);
    for (std::size_t i = first; i != end; ++i) {
      const SmoothNumber& d = table_.at(i);
      apply(d);
      bool cont = dfs(d.value, residual - Rational(Natural(1), d.value));
      undo(d);
      if (!cont) return false;
    }
    return true;
  }

  const PrimeSet& set_;
  const unsigned rank_;
  const std::optional<Clock::time_point> deadline_;
  SmoothTable table_;
  Sink sink_;
  std::vector<Natural> chosen_;
  std::vector<unsigned> used_;
  std::uint64_t ticks_ = 0;
};

// Fans the search out over the first denominator (all smooth values in
// [2, rank]).  prepare(n) runs once with the root count so callers can size
// per-root result slots; every sink is built on the caller thread.  Tasks
// claim roots dynamically but deposit results by root index, so output order
// never depends on scheduling.
void run_over_roots(const PrimeSet& s, unsigned rank, const EnumOptions& opts,
                    const std::function<void(std::size_t)>& prepare,
                    const std::function<RestrictedDfs::Sink(std::size_t)>&
                        make_sink) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  std::vector<SmoothNumber> roots =
      smooth_stream(s, Natural(2), Natural(rank), opts.exponent_cap);
  prepare(roots.size());
  if (roots.empty()) return;
  std::vector<RestrictedDfs::Sink> sinks;
  sinks.reserve(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) sinks.push_back(make_sink(i));

  std::mutex progress_mutex;
  std::atomic<std::size_t> done{0};
  auto run_root = [&](std::size_t i) {
    RestrictedDfs dfs(s, rank, opts, sinks[i]);
    bool cont = dfs.run(roots[i]);
    if (opts.emit_progress) {
      std::lock_guard<std::mutex> lock(progress_mutex);
      std::fprintf(stderr, "progress: root %s done (%zu/%zu)\n",
                   roots[i].value.get_str().c_str(), done.fetch_add(1) + 1,
                   roots.size());
    }
    return cont;
  };

  if (opts.parallel_width <= 1) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (!run_root(i)) break;
    }
    return;
  }

  std::size_t workers = std::min<std::size_t>(opts.parallel_width, roots.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next.fetch_add(1); i < roots.size();
             i = next.fetch_add(1)) {
          run_root(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::optional<Natural> max_denominator(const SolutionSet& set) {
  std::optional<Natural> best;
  for (const Solution& sol : set.solutions) {
    if (!best || sol.denominators.back() > *best) best = sol.denominators.back();
  }
  return best;
}

SolutionSet enumerate_restricted(const PrimeSet& s, unsigned rank,
                                 const EnumOptions& opts) {
  SolutionSet out{s, rank, {}};
  std::vector<std::vector<Solution>> buckets;
  run_over_roots(
      s, rank, opts, [&](std::size_t n) { buckets.resize(n); },
      [&](std::size_t i) -> RestrictedDfs::Sink {
        return [&opts, &bucket = buckets[i]](const std::vector<Natural>& denoms,
                                             bool proper) {
          if (proper || !opts.require_all_primes) {
            bucket.push_back(Solution{denoms});
          }
          return true;
        };
      });
  for (auto& bucket : buckets) {
    for (auto& sol : bucket) out.solutions.push_back(std::move(sol));
  }
  return out;
}

SurveyResult survey_restricted(const PrimeSet& s, unsigned rank,
                               const EnumOptions& opts) {
  std::vector<SurveyResult> parts;
  run_over_roots(
      s, rank, opts, [&](std::size_t n) { parts.resize(n); },
      [&](std::size_t i) -> RestrictedDfs::Sink {
        return [&part = parts[i]](const std::vector<Natural>& denoms,
                                  bool proper) {
          ++part.total;
          if (proper) ++part.proper;
          const Natural& last = denoms.back();
          if (!part.max_denom || last > *part.max_denom) part.max_denom = last;
          if (proper &&
              (!part.max_denom_proper || last > *part.max_denom_proper)) {
            part.max_denom_proper = last;
          }
          return true;
        };
      });
  SurveyResult out;
  for (const SurveyResult& p : parts) {
    out.total += p.total;
    out.proper += p.proper;
    if (p.max_denom && (!out.max_denom || *p.max_denom > *out.max_denom)) {
      out.max_denom = p.max_denom;
    }
    if (p.max_denom_proper &&
        (!out.max_denom_proper || *p.max_denom_proper > *out.max_denom_proper)) {
      out.max_denom_proper = p.max_denom_proper;
    }
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> count_restricted(
    const PrimeSet& s, unsigned rank, const EnumOptions& opts) {
  SurveyResult r = survey_restricted(s, rank, opts);
  return {r.total, r.proper};
}

namespace {

struct OnePrimeCtx {
  std::optional<Clock::time_point> deadline;
  std::uint64_t ticks = 0;
};

// Multiplicities c_e of the denominators p^e, e = 1..E, must satisfy
// sum c_e p^{E-e} = p^E and sum c_e = rank.  Descending multiplicity of the
// smallest power emits solutions in lexicographic order.
void one_prime_dfs(OnePrimeCtx& ctx, unsigned E, unsigned level,
                   const std::vector<Natural>& weight, const Natural& residual,
                   unsigned slots, std::vector<unsigned>& mult,
                   const std::function<void(const std::vector<unsigned>&)>& emit) {
  if ((++ctx.ticks & 4095) == 0 && ctx.deadline &&
      Clock::now() > *ctx.deadline) {
    throw SearchTimeout();
  }
  if (level == E) {
    if (residual == slots) {
      mult[E - 1] = slots;
      emit(mult);
    }
    return;
  }
  const Natural& w = weight[level - 1];
  const Natural& w_next = weight[level];
  Natural c_hi = floor_div(residual, w);
  unsigned c_max = c_hi > slots ? slots : static_cast<unsigned>(c_hi.get_ui());
  for (unsigned c = c_max + 1; c-- > 0;) {
    Natural rest = residual - c * w;
    unsigned open = slots - c;
    if (rest < open) continue;           // every remaining slot adds >= 1
    if (rest > open * w_next) break;     // monotone in decreasing c
    mult[level - 1] = c;
    one_prime_dfs(ctx, E, level + 1, weight, rest, open, mult, emit);
  }
  mult[level - 1] = 0;
}

void for_each_one_prime(std::uint64_t p, unsigned rank,
                        std::optional<Clock::time_point> deadline,
                        const std::function<void(const std::vector<unsigned>&)>&
                            emit) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if ((rank - 1) % (p - 1) != 0) return;  // empty, not an error
  unsigned E = one_prime_cap(p, rank);
  if (E == 0) return;  // rank 1 would need denominator 1
  std::vector<Natural> weight(E);
  for (unsigned e = 1; e <= E; ++e) weight[e - 1] = pow_ui(p, E - e);
  std::vector<unsigned> mult(E, 0);
  OnePrimeCtx ctx{deadline};
  one_prime_dfs(ctx, E, 1, weight, pow_ui(p, E), rank, mult, emit);
}

}  // namespace

SolutionSet enumerate_one_prime(std::uint64_t p, unsigned rank) {
  SolutionSet out{PrimeSet({p}), rank, {}};
  for_each_one_prime(p, rank, {}, [&](const std::vector<unsigned>& mult) {
    Solution sol;
    sol.denominators.reserve(rank);
    for (unsigned e = 1; e <= mult.size(); ++e) {
      Natural power = pow_ui(p, e);
      for (unsigned c = 0; c < mult[e - 1]; ++c) sol.denominators.push_back(power);
    }
    out.solutions.push_back(std::move(sol));
  });
  return out;
}

std::uint64_t count_one_prime(
    std::uint64_t p, unsigned rank,
    std::optional<std::chrono::steady_clock::time_point> deadline) {
  std::uint64_t count = 0;
  for_each_one_prime(p, rank, deadline,
                     [&](const std::vector<unsigned>&) { ++count; });
  return count;
}

namespace {

void unrestricted_dfs(unsigned rank, const std::vector<Natural>& u,
                      std::vector<Natural>& chosen, const Rational& residual,
                      std::vector<Solution>& out) {
  const unsigned j = static_cast<unsigned>(chosen.size()) + 1;
  const Natural& m = residual.get_num();
  const Natural& n = residual.get_den();
  if (j == rank) {
    // Residual must be a unit fraction no smaller than 1/last.
    if (m == 1 && (chosen.empty() || n >= chosen.back())) {
      chosen.push_back(n);
      out.push_back(Solution{chosen});
      chosen.pop_back();
    }
    return;
  }
  // j <= X_j is strict below rank: X_j = j would already force the sum to 1.
  Natural lo = floor_div(n, m) + 1;
  if (lo < j + 1) lo = j + 1;
  if (!chosen.empty() && lo < chosen.back()) lo = chosen.back();
  unsigned remaining = rank - j + 1;
  Natural hi = u[j - 1] * remaining;
  Natural avg = floor_div(n * remaining, m);
  if (avg < hi) hi = avg;
  for (Natural d = lo; d <= hi; d += 1) {
    chosen.push_back(d);
    unrestricted_dfs(rank, u, chosen, residual - Rational(Natural(1), d), out);
    chosen.pop_back();
  }
}

}  // namespace

SolutionSet enumerate_unrestricted(unsigned rank,
                                   const UnrestrictedOptions& opts) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (rank > kUnrestrictedRankLimit && !opts.force) {
    throw IntractableError("unrestricted enumeration at rank " +
                           std::to_string(rank) + " exceeds the rank-" +
                           std::to_string(kUnrestrictedRankLimit) +
                           " limit; pass force to override");
  }
  SolutionSet out{std::nullopt, rank, {}};
  if (rank == 1) {
    out.solutions.push_back(Solution{{Natural(1)}});
    return out;
  }
  std::vector<Natural> u = u_sequence(rank);
  std::vector<Natural> chosen;
  chosen.reserve(rank);
  unrestricted_dfs(rank, u, chosen, Rational(1), out.solutions);
  return out;
}

std::optional<unsigned> lowest_rank(
    const PrimeSet& s, unsigned max_rank,
    std::optional<std::chrono::steady_clock::time_point> deadline) {
  for (unsigned rank = 1; rank <= max_rank; ++rank) {
    if (!is_admissible(s, rank)) continue;
    EnumOptions opts;
    opts.deadline = deadline;
    bool found = false;
    run_over_roots(
        s, rank, opts, [](std::size_t) {},
        [&](std::size_t) -> RestrictedDfs::Sink {
          return [&found](const std::vector<Natural>&, bool proper) {
            if (proper) found = true;
            return !found;
          };
        });
    if (found) return rank;
  }
  return std::nullopt;
}

}  // namespace unitfrac
