#pragma once

#include <vector>

#include "seqpat/approx.hpp"
#include "seqpat/periodic.hpp"
#include "seqpat/surprise.hpp"

namespace seqpat {

// Brute-force reference implementations. Each enumerates its search space
// outright, so inputs are guarded by size: OracleTooLargeError when a call
// would be intractable. They ship in the library so results on small data
// can be verified against first principles.

// Every pattern of period <= cfg.l_max admitting a valid subsequence, with
// the subsequence found by enumerating all segment chains. Guard:
// length <= 40, alphabet <= 4, l_max <= 4.
std::vector<PeriodicResult> oracle_periodic(const SymbolSequence& s, const PeriodicConfig& cfg);

// Every pattern of period <= max_len over symbols occurring in s, with its
// exact score; no filtering. Same guard with max_len <= 4.
std::vector<ScoredPattern> oracle_info_gain(const SymbolSequence& s, std::size_t max_len);

// Window products of p against every order-preserving selection of
// |p| positions of s, in ascending bitmask order of the selection.
// Guard: length <= 8. Empty when p is longer than s.
std::vector<double> oracle_match_values(const Pattern& p, const SymbolSequence& s,
                                        const CompatibilityMatrix& m);

// Maximum of oracle_match_values, 0 when the pattern is longer than s.
double oracle_match(const Pattern& p, const SymbolSequence& s, const CompatibilityMatrix& m);

}  // namespace seqpat
