#include "seqpat/pattern.hpp"

#include <algorithm>

#include "seqpat/errors.hpp"

namespace seqpat {

Pattern::Pattern(std::vector<Slot> slots) : slots_(std::move(slots)) {
  arity_ = static_cast<std::size_t>(
      std::count_if(slots_.begin(), slots_.end(), [](const Slot& s) { return s.has_value(); }));
  if (slots_.empty()) {
    throw InvalidPatternError("pattern must have at least one slot");
  }
  if (arity_ == 0) {
    throw InvalidPatternError("pattern must contain at least one concrete symbol");
  }
}

Pattern Pattern::concrete(std::vector<Symbol> symbols) {
  std::vector<Slot> slots(symbols.begin(), symbols.end());
  return Pattern(std::move(slots));
}

Pattern Pattern::single(Symbol sym, std::size_t period, std::size_t offset) {
  if (offset >= period) {
    throw InvalidPatternError("slot offset must be smaller than the period");
  }
  std::vector<Slot> slots(period, std::nullopt);
  slots[offset] = sym;
  return Pattern(std::move(slots));
}

std::vector<Symbol> Pattern::concrete_symbols() const {
  std::vector<Symbol> out;
  out.reserve(arity_);
  for (const Slot& s : slots_) {
    if (s) out.push_back(*s);
  }
  return out;
}

bool matches_at(const Pattern& p, const SymbolSequence& s, std::size_t pos) {
  if (pos > s.length() || p.period() > s.length() - pos) {
    throw RangeError("window [" + std::to_string(pos) + ", " +
                     std::to_string(pos + p.period()) + ") exceeds sequence length " +
                     std::to_string(s.length()));
  }
  for (std::size_t j = 0; j < p.period(); ++j) {
    const Pattern::Slot& slot = p.slot(j);
    if (slot && s[pos + j] != *slot) return false;
  }
  return true;
}

std::vector<std::size_t> find_matches(const Pattern& p, const SymbolSequence& s) {
  std::vector<std::size_t> out;
  if (p.period() > s.length()) return out;
  const std::size_t last = s.length() - p.period();
  for (std::size_t pos = 0; pos <= last; ++pos) {
    if (matches_at(p, s, pos)) out.push_back(pos);
  }
  return out;
}

std::vector<Pattern> generalizations(const Pattern& p) {
  std::vector<std::size_t> concrete;
  for (std::size_t j = 0; j < p.period(); ++j) {
    if (p.slot(j)) concrete.push_back(j);
  }
  const std::size_t a = concrete.size();
  std::vector<Pattern> out;
  if (a <= 1) return out;  // only generalization would be all-wildcard
  // Subsets of concrete slots to keep; skip the full set (p itself) and
  // the empty set (all-wildcard).
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << a); ++mask) {
    std::vector<Pattern::Slot> slots(p.period(), std::nullopt);
    for (std::size_t b = 0; b < a; ++b) {
      if (mask & (std::size_t{1} << b)) slots[concrete[b]] = p.slot(concrete[b]);
    }
    out.emplace_back(std::move(slots));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string render_pattern(const Pattern& p, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t j = 0; j < p.period(); ++j) {
    if (j > 0) out.push_back(' ');
    if (p.slot(j)) {
      out += alphabet.name(*p.slot(j));
    } else {
      out.push_back('*');
    }
  }
  return out;
}

Pattern parse_pattern(std::string_view text, const Alphabet& alphabet) {
  std::vector<Pattern::Slot> slots;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    // Trim surrounding spaces.
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) {
      throw InvalidPatternError("empty slot in pattern '" + std::string(text) + "'");
    }
    if (tok == "*") {
      slots.emplace_back(std::nullopt);
    } else {
      slots.emplace_back(alphabet.require(tok));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return Pattern(std::move(slots));
}

}  // namespace seqpat
