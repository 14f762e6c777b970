#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace seqpat {

// A symbol is a dense index into its alphabet. All mining code works on
// these ids; names only matter at ingestion and rendering time.
struct Symbol {
  std::uint32_t id = 0;

  friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

// Immutable set of distinct symbol names in first-appearance order.
class Alphabet {
public:
  // Validates that names are distinct and non-empty as a set.
  static Alphabet from_names(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Symbol s) const;
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Symbol> find(std::string_view name) const;
  // Like find(), but throws UnknownSymbolError when the name is absent.
  Symbol require(std::string_view name) const;

private:
  Alphabet() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace seqpat
