#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "seqpat/pattern.hpp"

namespace seqpat {

struct PeriodicConfig {
  std::size_t min_rep = 1;   // minimum repetitions per segment
  std::size_t max_dist = 0;  // maximum gap (in positions) between segments
  std::size_t l_max = 1;     // maximum period length

  void validate() const;
};

// A run of back-to-back matches of one pattern, each exactly one period
// apart. Covers positions [start, start + reps * period).
struct Segment {
  std::size_t start = 0;
  std::size_t reps = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Disjoint segments in ascending order, each with at least min_rep
// repetitions, with every inter-segment gap in [0, max_dist].
struct ValidSubsequence {
  std::vector<Segment> segments;
  std::size_t total_reps = 0;
};

struct PeriodicResult {
  Pattern pattern;
  ValidSubsequence best;
};

// Phase 1 of the mining procedure: for each symbol, the periods l in
// [1, l_max] for which at least min_rep consecutive-occurrence distances
// equal l. A coarse periodicity screen over the raw symbol stream.
std::map<Symbol, std::set<std::size_t>> phase1_candidates(const SymbolSequence& s,
                                                          const PeriodicConfig& cfg);

// The valid subsequence with the most repetitions buildable from the given
// ascending match positions at the given period. Segments are runs of
// matches spaced exactly `period` apart; a run may be trimmed at either end
// so that two runs whose spans would otherwise overlap can both contribute.
// Ties break on earliest start, then fewest segments. Absent when no
// segment reaches min_rep.
std::optional<ValidSubsequence> best_valid_subsequence(std::span<const std::size_t> match_positions,
                                                       std::size_t period,
                                                       const PeriodicConfig& cfg);

// Phase 2: validates every rotation of the single-symbol pattern for each
// candidate (symbol, period) pair; returns those with a valid subsequence.
std::vector<PeriodicResult> phase2_single_patterns(
    const SymbolSequence& s, const PeriodicConfig& cfg,
    const std::map<Symbol, std::set<std::size_t>>& cands);

// Phase 3: grows arity-(i-1) patterns of one shared period into arity-i
// candidates by pairwise join, prunes candidates with an invalid
// generalization, and validates the survivors.
std::vector<PeriodicResult> phase3_extend(const SymbolSequence& s, const PeriodicConfig& cfg,
                                          std::span<const Pattern> valid_prev);

// Full mining pass: every pattern with period <= l_max that admits a valid
// subsequence, each paired with its maximal-total_reps subsequence.
// Ordered by period, then arity, then slot order.
std::vector<PeriodicResult> mine_periodic(const SymbolSequence& s, const PeriodicConfig& cfg);

}  // namespace seqpat
