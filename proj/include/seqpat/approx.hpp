#pragma once

#include <span>
#include <vector>

#include "seqpat/compat_matrix.hpp"
#include "seqpat/pattern.hpp"

namespace seqpat {

struct ApproxConfig {
  double min_match = 1.0;  // in (0, 1]
  std::size_t max_len = 1;

  void validate() const;
};

// Outcome of matching one pattern against one sequence: the best
// probability over all order-preserving selections of pattern-length
// positions, plus one selection attaining it. The witness is empty only
// when the pattern is longer than the sequence.
struct MatchResult {
  double value = 0.0;
  std::vector<std::size_t> witness;  // ascending positions in s, one per slot
};

// Probability of observing window w where the truth is p: the product of
// matrix entries (p[j], w[j]). p must be wildcard-free and the lengths
// must agree.
double window_match(const Pattern& p, std::span<const Symbol> w, const CompatibilityMatrix& m);

// Maximum of window_match over every length-|p| subsequence of s (order
// preserving, gaps allowed), by dynamic programming over (position, slot).
// Products switch to log space for patterns longer than 32 slots. A
// pattern longer than the sequence scores 0.
MatchResult match_value(const Pattern& p, const SymbolSequence& s, const CompatibilityMatrix& m);

struct ApproxResult {
  Pattern pattern;
  double aggregate = 0.0;  // mean match over the database
};

// All wildcard-free patterns of length 1..max_len whose mean match over db
// reaches min_match, grown level-wise with subpattern pruning (a pattern
// never matches better than any pattern obtained by deleting one of its
// symbols). Ordered by aggregate descending, then slot order.
std::vector<ApproxResult> mine_approximate(std::span<const SymbolSequence> db,
                                           const CompatibilityMatrix& m,
                                           const ApproxConfig& cfg);

// Side-by-side view of soft matching and plain containment for one pattern.
struct MatchReport {
  std::vector<double> per_sequence;
  double aggregate = 0.0;
  std::size_t exact_support = 0;  // sequences containing p as a contiguous window
};

MatchReport match_and_support_report(const Pattern& p, std::span<const SymbolSequence> db,
                                     const CompatibilityMatrix& m);

}  // namespace seqpat
