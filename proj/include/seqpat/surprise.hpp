#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "seqpat/pattern.hpp"

namespace seqpat {

struct SurpriseConfig {
  double min_gain = 0.0;               // threshold mode: keep gain >= min_gain
  std::optional<std::size_t> top_k;    // when set, return the k best instead
  std::size_t max_len = 1;             // cap on pattern period

  void validate() const;
};

struct ScoredPattern {
  Pattern pattern;
  std::size_t support = 0;
  double info = 0.0;
  double gain = 0.0;  // always info * support as computed
};

// Fraction of positions holding sym; 0 for symbols that never occur.
double symbol_prob(const SymbolSequence& s, Symbol sym);

// Self-information of sym with the logarithm taken base alphabet-size.
// A certain symbol (prob 1) carries none. Throws InfiniteInfoError for a
// symbol that never occurs.
double info_symbol(const SymbolSequence& s, Symbol sym);

// Sum of info_symbol over the concrete slots; wildcards contribute nothing.
double info_pattern(const SymbolSequence& s, const Pattern& p);

// Number of non-overlapping matches, chosen greedily left to right. For
// fixed-width windows the greedy choice attains the maximum.
std::size_t support(const SymbolSequence& s, const Pattern& p);

double info_gain(const SymbolSequence& s, const Pattern& p);

// Every pattern of period <= cfg.max_len (wildcard slots allowed, at least
// one concrete) whose gain reaches cfg.min_gain, ordered by gain descending
// then slot order. With cfg.top_k set, returns the k best under the same
// ordering instead. Patterns holding symbols absent from s are skipped.
std::vector<ScoredPattern> mine_surprising(const SymbolSequence& s, const SurpriseConfig& cfg);

// The k highest-gain patterns of period <= max_len (fewer when fewer
// patterns exist), same ordering and tie-breaks as mine_surprising.
std::vector<ScoredPattern> top_k_surprising(const SymbolSequence& s, std::size_t k,
                                            std::size_t max_len);

}  // namespace seqpat
