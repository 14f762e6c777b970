#pragma once

#include <cstdint>
#include <vector>

#include "seqpat/pattern.hpp"

namespace seqpat {

// One planted occurrence train: the pattern is stamped `reps` times back to
// back starting at `start`, one period apart. Wildcard slots keep the
// random background. Each stamped concrete slot is independently corrupted
// with probability noise_rate into a uniformly chosen other symbol.
struct Plant {
  Pattern pattern;
  std::size_t start = 0;
  std::size_t reps = 1;
  double noise_rate = 0.0;
};

struct GeneratorSpec {
  std::size_t alphabet_size = 1;
  std::size_t length = 1;
  std::uint64_t seed = 0;
  std::vector<Plant> plants;

  // ConfigError on bad sizes, rates, or plants that do not fit;
  // PlantOverlapError when two planted regions intersect.
  void validate() const;
};

// Names I1..In, the naming scheme used for generated data.
Alphabet default_alphabet(std::size_t n);

// Uniform random background plus the plants, byte-deterministic for a
// fixed spec: the engine is mt19937_64 and values are mapped to ranges
// with multiply-shift, so no platform-dependent distribution code runs.
SymbolSequence generate_synthetic(const GeneratorSpec& spec);

}  // namespace seqpat
