#include "seqpat/compat_matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "seqpat/errors.hpp"

namespace seqpat {

namespace {

constexpr double kRowSumTolerance = 1e-9;

std::string_view trim(std::string_view v) {
  while (!v.empty() && (v.front() == ' ' || v.front() == '\t' || v.front() == '\r')) {
    v.remove_prefix(1);
  }
  while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r')) {
    v.remove_suffix(1);
  }
  return v;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      cells.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return cells;
}

// Data lines of the CSV: comments and blank lines removed, cells split.
std::vector<std::vector<std::string_view>> data_rows(std::string_view text) {
  std::vector<std::vector<std::string_view>> rows;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      const std::string_view line = trim(text.substr(start, i - start));
      start = i + 1;
      if (line.empty() || line.front() == '#') continue;
      rows.push_back(split_cells(line));
    }
  }
  return rows;
}

double parse_prob(std::string_view cell) {
  const std::string text(cell);
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || text.empty()) {
    throw ShapeError("matrix entry is not a number: '" + text + "'");
  }
  return value;
}

}  // namespace

CompatibilityMatrix::CompatibilityMatrix(Alphabet alphabet, std::vector<double> entries)
    : alphabet_(std::move(alphabet)), entries_(std::move(entries)) {
  const std::size_t n = alphabet_.size();
  if (entries_.size() != n * n) {
    throw ShapeError("compatibility matrix must hold one entry per symbol pair");
  }
  for (std::size_t r = 0; r < n; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      const double v = entries_[r * n + c];
      if (v < 0.0 || v > 1.0) {
        throw StochasticityError("matrix entry outside [0,1] in row for '" +
                                 alphabet_.name(Symbol{static_cast<std::uint32_t>(r)}) + "'");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      throw StochasticityError("row for '" +
                               alphabet_.name(Symbol{static_cast<std::uint32_t>(r)}) +
                               "' sums to " + std::to_string(sum) + ", expected 1");
    }
  }
}

CompatibilityMatrix CompatibilityMatrix::identity(Alphabet alphabet) {
  const std::size_t n = alphabet.size();
  std::vector<double> entries(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = 1.0;
  return CompatibilityMatrix(std::move(alphabet), std::move(entries));
}

double CompatibilityMatrix::at(Symbol true_sym, Symbol observed) const {
  const std::size_t n = alphabet_.size();
  if (true_sym.id >= n || observed.id >= n) {
    throw RangeError("symbol id outside the matrix alphabet");
  }
  return entries_[static_cast<std::size_t>(true_sym.id) * n + observed.id];
}

CompatibilityMatrix load_matrix(std::string_view text, const Alphabet& alphabet) {
  const auto rows = data_rows(text);
  if (rows.empty()) throw ShapeError("matrix file has no data lines");

  const auto& header = rows.front();
  if (header.empty() || header.front() != "true\\observed") {
    throw ShapeError("matrix header must start with 'true\\observed'");
  }
  const std::size_t n = alphabet.size();
  if (header.size() != n + 1) {
    throw ShapeError("matrix header must name every alphabet symbol exactly once");
  }
  // Column positions in alphabet order.
  std::vector<std::size_t> col_of(n, n);
  for (std::size_t c = 0; c + 1 < header.size(); ++c) {
    const Symbol sym = alphabet.require(header[c + 1]);
    if (col_of[sym.id] != n) {
      throw ShapeError("duplicate column '" + std::string(header[c + 1]) + "'");
    }
    col_of[sym.id] = c;
  }

  if (rows.size() != n + 1) {
    throw ShapeError("matrix must hold one row per alphabet symbol");
  }
  std::vector<double> entries(n * n, -1.0);
  std::vector<bool> seen(n, false);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    if (cells.size() != n + 1) {
      throw ShapeError("matrix row must hold a name and one entry per column");
    }
    const Symbol true_sym = alphabet.require(cells.front());
    if (seen[true_sym.id]) {
      throw ShapeError("duplicate row '" + std::string(cells.front()) + "'");
    }
    seen[true_sym.id] = true;
    for (std::uint32_t obs = 0; obs < n; ++obs) {
      entries[static_cast<std::size_t>(true_sym.id) * n + obs] =
          parse_prob(cells[1 + col_of[obs]]);
    }
  }
  return CompatibilityMatrix(alphabet, std::move(entries));
}

LoadedMatrix load_matrix(std::string_view text) {
  const auto rows = data_rows(text);
  if (rows.empty()) throw ShapeError("matrix file has no data lines");
  const auto& header = rows.front();
  if (header.empty() || header.front() != "true\\observed") {
    throw ShapeError("matrix header must start with 'true\\observed'");
  }
  std::vector<std::string> names;
  for (std::size_t c = 1; c < header.size(); ++c) names.emplace_back(header[c]);
  Alphabet alphabet = [&] {
    try {
      return Alphabet::from_names(std::move(names));
    } catch (const ConfigError& e) {
      throw ShapeError(std::string("bad matrix header: ") + e.what());
    }
  }();
  CompatibilityMatrix matrix = load_matrix(text, alphabet);
  return {std::move(alphabet), std::move(matrix)};
}

std::string render_matrix(const CompatibilityMatrix& m) {
  std::ostringstream out;
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  const Alphabet& a = m.alphabet();
  out << "true\\observed";
  for (const auto& name : a.names()) out << ',' << name;
  out << '\n';
  for (std::uint32_t r = 0; r < a.size(); ++r) {
    out << a.name(Symbol{r});
    for (std::uint32_t c = 0; c < a.size(); ++c) {
      out << ',' << m.at(Symbol{r}, Symbol{c});
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace seqpat
