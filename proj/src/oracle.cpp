#include "seqpat/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "seqpat/errors.hpp"

namespace seqpat {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kMaxOracleLength = 40;
constexpr std::size_t kMaxOracleAlphabet = 4;
constexpr std::size_t kMaxOraclePeriod = 4;
constexpr std::size_t kMaxOracleMatchLength = 8;

// Walks every slot tuple of period 1..max_period over the given slot
// choices, invoking fn on each tuple with at least one concrete slot.
template <typename Fn>
void walk_patterns(std::size_t max_period, const std::vector<Pattern::Slot>& choices,
                   std::vector<Pattern::Slot>& slots, std::size_t arity, Fn&& fn) {
  if (!slots.empty() && arity >= 1) fn(slots);
  if (slots.size() >= max_period) return;
  for (const auto& choice : choices) {
    slots.push_back(choice);
    walk_patterns(max_period, choices, slots, arity + (choice ? 1 : 0), fn);
    slots.pop_back();
  }
}

// Exhaustive best chain: every sub-run of min_rep or more matches spaced
// exactly one period apart is a candidate segment; chains are scored over
// all predecessor choices respecting disjointness and the gap cap. Ties
// prefer the earliest chain start, then the fewest segments, matching the
// production scorer.
std::optional<ValidSubsequence> exhaustive_best_chain(const std::vector<std::size_t>& pos,
                                                      std::size_t period,
                                                      const PeriodicConfig& cfg) {
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    std::size_t reps = 1;
    std::size_t at = pos[i];
    while (true) {
      if (reps >= cfg.min_rep) segs.push_back({pos[i], reps});
      if (std::binary_search(pos.begin(), pos.end(), at + period)) {
        at += period;
        ++reps;
      } else {
        break;
      }
    }
  }
  if (segs.empty()) return std::nullopt;
  std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.reps < b.reps;
  });

  struct chain {
    std::size_t total = 0;
    std::size_t first_start = 0;
    std::size_t seg_count = 0;
  };
  const auto better = [](const chain& a, const chain& b) {
    if (a.total != b.total) return a.total > b.total;
    if (a.first_start != b.first_start) return a.first_start < b.first_start;
    return a.seg_count < b.seg_count;
  };

  const std::size_t count = segs.size();
  std::vector<chain> best_at(count);
  std::vector<std::size_t> prev(count, kNone);
  std::size_t best = 0;
  for (std::size_t k = 0; k < count; ++k) {
    best_at[k] = {segs[k].reps, segs[k].start, 1};
    // Predecessors start strictly earlier, so the sort order has already
    // finalized them.
    for (std::size_t k2 = 0; k2 < k; ++k2) {
      const std::size_t end2 = segs[k2].start + segs[k2].reps * period;
      if (end2 > segs[k].start || segs[k].start - end2 > cfg.max_dist) continue;
      const chain candidate{best_at[k2].total + segs[k].reps, best_at[k2].first_start,
                            best_at[k2].seg_count + 1};
      if (better(candidate, best_at[k])) {
        best_at[k] = candidate;
        prev[k] = k2;
      }
    }
    if (better(best_at[k], best_at[best])) best = k;
  }

  ValidSubsequence out;
  out.total_reps = best_at[best].total;
  for (std::size_t k = best; k != kNone; k = prev[k]) out.segments.push_back(segs[k]);
  std::reverse(out.segments.begin(), out.segments.end());
  return out;
}

void guard_mining_size(const SymbolSequence& s, std::size_t max_period) {
  if (s.length() > kMaxOracleLength || s.alphabet_size() > kMaxOracleAlphabet ||
      max_period > kMaxOraclePeriod) {
    throw OracleTooLargeError("oracle limits: length 40, alphabet 4, period 4");
  }
}

}  // namespace

std::vector<PeriodicResult> oracle_periodic(const SymbolSequence& s, const PeriodicConfig& cfg) {
  cfg.validate();
  guard_mining_size(s, cfg.l_max);

  std::vector<Pattern::Slot> choices{std::nullopt};
  for (std::uint32_t id = 0; id < s.alphabet_size(); ++id) choices.emplace_back(Symbol{id});

  std::vector<PeriodicResult> out;
  std::vector<Pattern::Slot> slots;
  const std::size_t max_period = std::min(cfg.l_max, s.length());
  walk_patterns(max_period, choices, slots, 0, [&](const std::vector<Pattern::Slot>& tuple) {
    Pattern p{tuple};
    const auto matches = find_matches(p, s);
    auto chain = exhaustive_best_chain(matches, p.period(), cfg);
    if (chain) out.push_back({std::move(p), std::move(*chain)});
  });
  std::sort(out.begin(), out.end(), [](const PeriodicResult& a, const PeriodicResult& b) {
    if (a.pattern.period() != b.pattern.period()) return a.pattern.period() < b.pattern.period();
    if (a.pattern.arity() != b.pattern.arity()) return a.pattern.arity() < b.pattern.arity();
    return a.pattern.slots() < b.pattern.slots();
  });
  return out;
}

std::vector<ScoredPattern> oracle_info_gain(const SymbolSequence& s, std::size_t max_len) {
  if (max_len < 1) throw ConfigError("max_len must be at least 1");
  guard_mining_size(s, max_len);
  if (s.length() == 0) throw EmptySequenceError("cannot score an empty sequence");

  std::vector<Pattern::Slot> choices{std::nullopt};
  for (std::uint32_t id = 0; id < s.alphabet_size(); ++id) {
    if (s.count(Symbol{id}) > 0) choices.emplace_back(Symbol{id});
  }

  std::vector<ScoredPattern> out;
  std::vector<Pattern::Slot> slots;
  walk_patterns(max_len, choices, slots, 0, [&](const std::vector<Pattern::Slot>& tuple) {
    Pattern p{tuple};
    const double info = info_pattern(s, p);
    std::size_t sup = 0;
    if (p.period() <= s.length()) {
      std::size_t cursor = 0;
      for (std::size_t t = 0; t + p.period() <= s.length(); ++t) {
        if (t >= cursor && matches_at(p, s, t)) {
          ++sup;
          cursor = t + p.period();
        }
      }
    }
    out.push_back({std::move(p), sup, info, info * static_cast<double>(sup)});
  });
  std::sort(out.begin(), out.end(), [](const ScoredPattern& a, const ScoredPattern& b) {
    if (a.gain != b.gain) return a.gain > b.gain;
    return a.pattern.slots() < b.pattern.slots();
  });
  return out;
}

std::vector<double> oracle_match_values(const Pattern& p, const SymbolSequence& s,
                                        const CompatibilityMatrix& m) {
  if (!p.is_concrete()) {
    throw InvalidPatternError("approximate matching requires a wildcard-free pattern");
  }
  if (s.alphabet_size() != m.size()) {
    throw ShapeError("sequence and compatibility matrix use different alphabets");
  }
  if (s.length() > kMaxOracleMatchLength) {
    throw OracleTooLargeError("match oracle limit: sequence length 8");
  }
  const auto truth = p.concrete_symbols();
  const std::size_t lp = truth.size();
  const std::size_t ls = s.length();
  std::vector<double> values;
  if (lp > ls) return values;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ls); ++mask) {
    if (std::popcount(mask) != static_cast<int>(lp)) continue;
    double product = 1.0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < ls; ++i) {
      if (mask & (std::uint64_t{1} << i)) product *= m.at(truth[j++], s[i]);
    }
    values.push_back(product);
  }
  return values;
}

double oracle_match(const Pattern& p, const SymbolSequence& s, const CompatibilityMatrix& m) {
  const auto values = oracle_match_values(p, s, m);
  double best = 0.0;
  for (const double v : values) best = std::max(best, v);
  return best;
}

}  // namespace seqpat
