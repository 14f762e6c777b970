#pragma once

#include <string_view>
#include <vector>

#include "seqpat/alphabet.hpp"

namespace seqpat {

// Row-stochastic noise model: entry (t, o) is the probability of observing
// symbol o where the true symbol is t. Rows and columns follow alphabet
// order.
class CompatibilityMatrix {
public:
  // Validates shape (size*size entries), entry range [0,1], and that each
  // row sums to 1 within 1e-9.
  CompatibilityMatrix(Alphabet alphabet, std::vector<double> entries);

  // Noise-free channel: observation always equals the true symbol.
  static CompatibilityMatrix identity(Alphabet alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return alphabet_.size(); }

  double at(Symbol true_sym, Symbol observed) const;

private:
  Alphabet alphabet_;
  std::vector<double> entries_;  // row-major, true symbol selects the row
};

// CSV layout: header "true\observed,<name>,..." giving the column order,
// then one row per true symbol: "<name>,<p>,...". Lines starting with '#'
// are comments. Rows and columns may come in any order; the result is
// normalized to alphabet order. Every alphabet symbol must appear exactly
// once as a column and once as a row.
CompatibilityMatrix load_matrix(std::string_view text, const Alphabet& alphabet);

// Same format, but the alphabet is taken from the header columns in the
// order written.
struct LoadedMatrix {
  Alphabet alphabet;
  CompatibilityMatrix matrix;
};
LoadedMatrix load_matrix(std::string_view text);

// Renders back to the CSV layout in alphabet order.
std::string render_matrix(const CompatibilityMatrix& m);

}  // namespace seqpat
