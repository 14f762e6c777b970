#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqpat/alphabet.hpp"

namespace seqpat {

// An interned, immutable run of symbols over a fixed-size alphabet.
// Per-symbol occurrence counts are precomputed so probability queries
// are O(1) and the object stays safe to share across threads.
class SymbolSequence {
public:
  SymbolSequence(std::vector<Symbol> symbols, std::size_t alphabet_size);

  std::size_t length() const { return symbols_.size(); }
  std::size_t alphabet_size() const { return alphabet_size_; }
  Symbol operator[](std::size_t pos) const { return symbols_[pos]; }
  std::span<const Symbol> symbols() const { return symbols_; }

  // Number of occurrences of s in the sequence.
  std::size_t count(Symbol s) const;
  const std::vector<std::size_t>& counts() const { return counts_; }

private:
  std::vector<Symbol> symbols_;
  std::size_t alphabet_size_;
  std::vector<std::size_t> counts_;
};

struct ParsedSequence {
  Alphabet alphabet;
  SymbolSequence sequence;
};

// Ingests whitespace-separated tokens; '#' starts a comment that runs to
// end of line. The alphabet is built in first-appearance order.
// Throws EmptySequenceError when no token survives comment stripping.
ParsedSequence parse_sequence(std::string_view text);

// Same tokenization, but against a fixed alphabet. Tokens outside the
// alphabet raise UnknownSymbolError.
SymbolSequence parse_sequence(std::string_view text, const Alphabet& alphabet);

// Renders the sequence as single-space-separated tokens; round-trips with
// parse_sequence on whitespace-normalized input.
std::string render_sequence(const SymbolSequence& s, const Alphabet& alphabet);

}  // namespace seqpat
