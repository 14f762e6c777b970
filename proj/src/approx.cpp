#include "seqpat/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "seqpat/errors.hpp"

namespace seqpat {

namespace {

constexpr std::size_t kLogSpaceThreshold = 32;

std::vector<Symbol> require_concrete(const Pattern& p) {
  if (!p.is_concrete()) {
    throw InvalidPatternError("approximate matching requires a wildcard-free pattern");
  }
  return p.concrete_symbols();
}

void check_alphabet(const SymbolSequence& s, const CompatibilityMatrix& m) {
  if (s.alphabet_size() != m.size()) {
    throw ShapeError("sequence and compatibility matrix use different alphabets");
  }
}

bool approx_order(const ApproxResult& a, const ApproxResult& b) {
  if (a.aggregate != b.aggregate) return a.aggregate > b.aggregate;
  return a.pattern.slots() < b.pattern.slots();
}

}  // namespace

void ApproxConfig::validate() const {
  if (!(min_match > 0.0) || min_match > 1.0) {
    throw ConfigError("min_match must lie in (0, 1]");
  }
  if (max_len < 1) throw ConfigError("max_len must be at least 1");
}

double window_match(const Pattern& p, std::span<const Symbol> w, const CompatibilityMatrix& m) {
  const auto truth = require_concrete(p);
  if (truth.size() != w.size()) {
    throw ShapeError("window length must equal the pattern length");
  }
  double value = 1.0;
  for (std::size_t j = 0; j < truth.size(); ++j) value *= m.at(truth[j], w[j]);
  return value;
}

MatchResult match_value(const Pattern& p, const SymbolSequence& s, const CompatibilityMatrix& m) {
  const auto truth = require_concrete(p);
  check_alphabet(s, m);
  const std::size_t lp = truth.size();
  const std::size_t ls = s.length();
  if (lp > ls) return {};

  const bool log_space = lp > kLogSpaceThreshold;
  const double none = log_space ? -std::numeric_limits<double>::infinity() : 0.0;
  const double unit = log_space ? 0.0 : 1.0;
  const auto factor = [&](std::size_t j, std::size_t i) {
    const double c = m.at(truth[j], s[i]);
    return log_space ? std::log(c) : c;
  };
  const auto combine = [&](double a, double b) { return log_space ? a + b : a * b; };

  // dp[j][i]: best score aligning the first j slots within the first i
  // symbols. Rows are kept whole for the backtrack.
  std::vector<std::vector<double>> dp(lp + 1, std::vector<double>(ls + 1, none));
  for (std::size_t i = 0; i <= ls; ++i) dp[0][i] = unit;
  for (std::size_t j = 1; j <= lp; ++j) {
    for (std::size_t i = j; i <= ls; ++i) {
      const double take = combine(dp[j - 1][i - 1], factor(j - 1, i - 1));
      const double skip = i > j ? dp[j][i - 1] : none;
      dp[j][i] = std::max(take, skip);
    }
  }

  MatchResult out;
  out.witness.resize(lp);
  std::size_t i = ls;
  for (std::size_t j = lp; j > 0; --j) {
    // Prefer consuming the symbol whenever it reproduces the cell value;
    // at i == j there is no room left to skip.
    while (i > j && dp[j][i] != combine(dp[j - 1][i - 1], factor(j - 1, i - 1))) --i;
    out.witness[j - 1] = i - 1;
    --i;
  }
  const double best = dp[lp][ls];
  out.value = log_space ? std::exp(best) : best;
  return out;
}

std::vector<ApproxResult> mine_approximate(std::span<const SymbolSequence> db,
                                           const CompatibilityMatrix& m,
                                           const ApproxConfig& cfg) {
  cfg.validate();
  if (db.empty()) throw EmptySequenceError("approximate mining needs at least one sequence");
  for (const auto& s : db) check_alphabet(s, m);

  const auto aggregate = [&](const Pattern& p) {
    double sum = 0.0;
    for (const auto& s : db) sum += match_value(p, s, m).value;
    return sum / static_cast<double>(db.size());
  };

  std::vector<ApproxResult> out;
  std::vector<std::vector<Symbol>> frontier;  // kept patterns of the current length
  for (std::uint32_t id = 0; id < m.size(); ++id) {
    Pattern p = Pattern::concrete({Symbol{id}});
    const double value = aggregate(p);
    if (value >= cfg.min_match) {
      frontier.push_back({Symbol{id}});
      out.push_back({std::move(p), value});
    }
  }

  for (std::size_t len = 2; len <= cfg.max_len && !frontier.empty(); ++len) {
    std::set<std::vector<Symbol>> kept(frontier.begin(), frontier.end());
    std::vector<std::vector<Symbol>> next;
    for (const auto& base : frontier) {
      for (std::uint32_t id = 0; id < m.size(); ++id) {
        std::vector<Symbol> cand = base;
        cand.push_back(Symbol{id});
        // Every deletion of one symbol must already be kept, else the
        // candidate cannot reach the threshold.
        bool viable = true;
        for (std::size_t drop = 0; drop + 1 < cand.size() && viable; ++drop) {
          std::vector<Symbol> sub;
          sub.reserve(cand.size() - 1);
          for (std::size_t j = 0; j < cand.size(); ++j) {
            if (j != drop) sub.push_back(cand[j]);
          }
          viable = kept.count(sub) > 0;
        }
        if (!viable) continue;
        Pattern p = Pattern::concrete(cand);
        const double value = aggregate(p);
        if (value >= cfg.min_match) {
          next.push_back(std::move(cand));
          out.push_back({std::move(p), value});
        }
      }
    }
    frontier = std::move(next);
  }

  std::sort(out.begin(), out.end(), approx_order);
  return out;
}

MatchReport match_and_support_report(const Pattern& p, std::span<const SymbolSequence> db,
                                     const CompatibilityMatrix& m) {
  require_concrete(p);
  if (db.empty()) throw EmptySequenceError("report needs at least one sequence");
  MatchReport report;
  double sum = 0.0;
  for (const auto& s : db) {
    check_alphabet(s, m);
    const double value = match_value(p, s, m).value;
    report.per_sequence.push_back(value);
    sum += value;
    if (p.period() <= s.length() && !find_matches(p, s).empty()) ++report.exact_support;
  }
  report.aggregate = sum / static_cast<double>(db.size());
  return report;
}

}  // namespace seqpat
