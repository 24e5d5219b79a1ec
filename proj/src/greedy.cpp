#include "unitfrac/greedy.hpp"

#include <stdexcept>
#include <utility>

namespace unitfrac {

const char* to_string(GreedyVerdict v) {
  switch (v) {
    case GreedyVerdict::kTight:
      return "TIGHT";
    case GreedyVerdict::kSlack:
      return "SLACK";
    case GreedyVerdict::kFailure:
      return "FAILURE";
    case GreedyVerdict::kNoSolutions:
      return "NO_SOLUTIONS";
  }
  return "?";
}

GreedyResult greedy_run(const PrimeSet& s, unsigned rank) {
  if (rank < 2) throw std::invalid_argument("greedy needs rank >= 2");
  GreedyResult out;
  out.sigma = 0;
  SmoothStream stream(s);
  while (out.prefix.size() < rank - 1) {
    SmoothNumber d = stream.next();
    Rational with = out.sigma + Rational(Natural(1), d.value);
    if (with < 1) {
      out.sigma = std::move(with);
      out.prefix.push_back(std::move(d.value));
    }
  }
  Rational rest = 1 - out.sigma;
  out.gamma = make_rational(rest.get_den(), rest.get_num());
  out.bound = next_smooth_geq(s, out.gamma).value;
  out.exact_completion = out.sigma + Rational(Natural(1), out.bound) == 1;
  return out;
}

GreedyComparison compare_greedy(GreedyResult greedy,
                                const SurveyResult& survey) {
  GreedyComparison out;
  out.greedy = std::move(greedy);
  out.total_count = survey.total;
  out.proper_count = survey.proper;
  out.true_max = survey.max_denom;
  if (survey.proper == 0) {
    out.verdict = GreedyVerdict::kNoSolutions;
  } else if (*out.true_max == out.greedy.bound) {
    out.verdict = GreedyVerdict::kTight;
  } else if (*out.true_max < out.greedy.bound) {
    out.verdict = GreedyVerdict::kSlack;
  } else {
    out.verdict = GreedyVerdict::kFailure;
  }
  return out;
}

GreedyComparison greedy_vs_actual(const PrimeSet& s, unsigned rank,
                                  const EnumOptions& opts) {
  return compare_greedy(greedy_run(s, rank), survey_restricted(s, rank, opts));
}

}  // namespace unitfrac
