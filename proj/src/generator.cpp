#include "seqpat/generator.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "seqpat/errors.hpp"

namespace seqpat {

void GeneratorSpec::validate() const {
  if (alphabet_size < 1) throw ConfigError("alphabet_size must be at least 1");
  if (length < 1) throw ConfigError("length must be at least 1");
  std::vector<std::pair<std::size_t, std::size_t>> regions;
  for (const Plant& plant : plants) {
    if (plant.reps < 1) throw ConfigError("plant reps must be at least 1");
    if (plant.noise_rate < 0.0 || plant.noise_rate > 1.0) {
      throw ConfigError("plant noise_rate must lie in [0,1]");
    }
    if (plant.noise_rate > 0.0 && alphabet_size < 2) {
      throw ConfigError("noise needs at least two symbols to corrupt into");
    }
    for (std::size_t j = 0; j < plant.pattern.period(); ++j) {
      if (plant.pattern.slot(j) && plant.pattern.slot(j)->id >= alphabet_size) {
        throw ConfigError("plant symbol outside the alphabet");
      }
    }
    const std::size_t span = plant.reps * plant.pattern.period();
    if (plant.start > length || span > length - plant.start) {
      throw ConfigError("plant does not fit inside the sequence");
    }
    regions.emplace_back(plant.start, plant.start + span);
  }
  std::sort(regions.begin(), regions.end());
  for (std::size_t i = 1; i < regions.size(); ++i) {
    if (regions[i].first < regions[i - 1].second) {
      throw PlantOverlapError("planted regions starting at " +
                              std::to_string(regions[i - 1].first) + " and " +
                              std::to_string(regions[i].first) + " overlap");
    }
  }
}

Alphabet default_alphabet(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("I" + std::to_string(i));
  return Alphabet::from_names(std::move(names));
}

SymbolSequence generate_synthetic(const GeneratorSpec& spec) {
  spec.validate();
  std::mt19937_64 engine(spec.seed);
  // Multiply-shift range mapping; the standard distributions are not
  // byte-stable across implementations.
  const auto draw_index = [&engine](std::uint64_t n) -> std::uint64_t {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine()) * n) >> 64);
  };
  const auto draw_unit = [&engine]() -> double {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
  };

  std::vector<Symbol> symbols(spec.length);
  for (auto& sym : symbols) {
    sym = Symbol{static_cast<std::uint32_t>(draw_index(spec.alphabet_size))};
  }
  for (const Plant& plant : spec.plants) {
    const std::size_t period = plant.pattern.period();
    for (std::size_t k = 0; k < plant.reps; ++k) {
      for (std::size_t j = 0; j < period; ++j) {
        const auto& slot = plant.pattern.slot(j);
        if (!slot) continue;
        const std::size_t pos = plant.start + k * period + j;
        if (draw_unit() < plant.noise_rate) {
          const std::uint64_t r = draw_index(spec.alphabet_size - 1);
          const std::uint32_t id =
              static_cast<std::uint32_t>(r >= slot->id ? r + 1 : r);
          symbols[pos] = Symbol{id};
        } else {
          symbols[pos] = *slot;
        }
      }
    }
  }
  return SymbolSequence(std::move(symbols), spec.alphabet_size);
}

}  // namespace seqpat
