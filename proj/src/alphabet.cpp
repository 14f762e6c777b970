#include "seqpat/alphabet.hpp"

#include "seqpat/errors.hpp"

namespace seqpat {

Alphabet Alphabet::from_names(std::vector<std::string> names) {
  if (names.empty()) {
    throw ConfigError("alphabet must contain at least one symbol name");
  }
  Alphabet a;
  a.names_ = std::move(names);
  a.index_.reserve(a.names_.size());
  for (std::uint32_t i = 0; i < a.names_.size(); ++i) {
    if (a.names_[i].empty()) {
      throw ConfigError("symbol names must be non-empty");
    }
    auto [it, inserted] = a.index_.emplace(a.names_[i], i);
    if (!inserted) {
      throw ConfigError("duplicate symbol name in alphabet: '" + a.names_[i] + "'");
    }
  }
  return a;
}

const std::string& Alphabet::name(Symbol s) const {
  if (s.id >= names_.size()) {
    throw RangeError("symbol id " + std::to_string(s.id) + " outside alphabet of size " +
                     std::to_string(names_.size()));
  }
  return names_[s.id];
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return Symbol{it->second};
}

Symbol Alphabet::require(std::string_view name) const {
  auto s = find(name);
  if (!s) {
    throw UnknownSymbolError("unknown symbol '" + std::string(name) + "'");
  }
  return *s;
}

}  // namespace seqpat
