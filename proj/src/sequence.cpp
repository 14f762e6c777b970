#include "seqpat/sequence.hpp"

#include <cctype>

#include "seqpat/errors.hpp"

namespace seqpat {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Splits text into tokens, dropping '#'-to-end-of-line comments.
std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
    } else if (is_space(c)) {
      ++i;
    } else {
      std::size_t start = i;
      while (i < n && !is_space(text[i]) && text[i] != '#') ++i;
      tokens.push_back(text.substr(start, i - start));
    }
  }
  return tokens;
}

}  // namespace

SymbolSequence::SymbolSequence(std::vector<Symbol> symbols, std::size_t alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size), counts_(alphabet_size, 0) {
  if (alphabet_size == 0) {
    throw ConfigError("sequence alphabet size must be at least 1");
  }
  for (Symbol s : symbols_) {
    if (s.id >= alphabet_size_) {
      throw RangeError("symbol id " + std::to_string(s.id) +
                       " outside alphabet of size " + std::to_string(alphabet_size_));
    }
    ++counts_[s.id];
  }
}

std::size_t SymbolSequence::count(Symbol s) const {
  if (s.id >= alphabet_size_) {
    throw RangeError("symbol id " + std::to_string(s.id) +
                     " outside alphabet of size " + std::to_string(alphabet_size_));
  }
  return counts_[s.id];
}

ParsedSequence parse_sequence(std::string_view text) {
  auto tokens = tokenize(text);
  if (tokens.empty()) {
    throw EmptySequenceError("input contains no symbols");
  }
  std::vector<std::string> names;
  std::unordered_map<std::string_view, std::uint32_t> seen;
  std::vector<Symbol> symbols;
  symbols.reserve(tokens.size());
  for (std::string_view tok : tokens) {
    auto it = seen.find(tok);
    if (it == seen.end()) {
      auto id = static_cast<std::uint32_t>(names.size());
      seen.emplace(tok, id);
      names.emplace_back(tok);
      symbols.push_back(Symbol{id});
    } else {
      symbols.push_back(Symbol{it->second});
    }
  }
  Alphabet alphabet = Alphabet::from_names(std::move(names));
  std::size_t n = alphabet.size();
  return ParsedSequence{std::move(alphabet), SymbolSequence(std::move(symbols), n)};
}

SymbolSequence parse_sequence(std::string_view text, const Alphabet& alphabet) {
  auto tokens = tokenize(text);
  if (tokens.empty()) {
    throw EmptySequenceError("input contains no symbols");
  }
  std::vector<Symbol> symbols;
  symbols.reserve(tokens.size());
  for (std::string_view tok : tokens) {
    symbols.push_back(alphabet.require(tok));
  }
  return SymbolSequence(std::move(symbols), alphabet.size());
}

std::string render_sequence(const SymbolSequence& s, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (i > 0) out.push_back(' ');
    out += alphabet.name(s[i]);
  }
  return out;
}

}  // namespace seqpat
