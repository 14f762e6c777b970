#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqpat/sequence.hpp"

namespace seqpat {

// A fixed-length tuple of slots; each slot is a concrete symbol or a
// wildcard (nullopt) that matches anything. At least one slot must be
// concrete. Serves as periodic template and as surprise/approx pattern.
class Pattern {
public:
  using Slot = std::optional<Symbol>;

  explicit Pattern(std::vector<Slot> slots);

  // Builds a wildcard-free pattern from a plain symbol string.
  static Pattern concrete(std::vector<Symbol> symbols);
  // Single concrete symbol at `offset` within a window of `period` slots.
  static Pattern single(Symbol sym, std::size_t period, std::size_t offset);

  std::size_t period() const { return slots_.size(); }
  std::size_t arity() const { return arity_; }
  bool is_concrete() const { return arity_ == slots_.size(); }
  const Slot& slot(std::size_t j) const { return slots_[j]; }
  const std::vector<Slot>& slots() const { return slots_; }

  // Concrete symbols in slot order (useful for wildcard-free patterns).
  std::vector<Symbol> concrete_symbols() const;

  friend bool operator==(const Pattern& a, const Pattern& b) { return a.slots_ == b.slots_; }
  // Lexicographic on slots; wildcards order before concrete symbols and a
  // proper prefix orders before its extensions.
  friend auto operator<=>(const Pattern& a, const Pattern& b) { return a.slots_ <=> b.slots_; }

private:
  std::vector<Slot> slots_;
  std::size_t arity_;
};

// True iff the window of s starting at pos satisfies every concrete slot.
// Throws RangeError when the window does not fit inside the sequence.
bool matches_at(const Pattern& p, const SymbolSequence& s, std::size_t pos);

// All window start positions where p matches, in ascending order.
// Matches may overlap; the list is empty when no window fits.
std::vector<std::size_t> find_matches(const Pattern& p, const SymbolSequence& s);

// Every pattern obtained by replacing one or more concrete slots of p with
// wildcards, excluding the all-wildcard pattern. 2^arity - 2 patterns,
// returned in ascending slot order.
std::vector<Pattern> generalizations(const Pattern& p);

// Space-separated slot tokens; wildcards render as "*".
std::string render_pattern(const Pattern& p, const Alphabet& alphabet);

// Parses a comma-separated slot list ("I1,*,I3"). "*" denotes a wildcard.
Pattern parse_pattern(std::string_view text, const Alphabet& alphabet);

}  // namespace seqpat
