#pragma once

#include <stdexcept>
#include <string>

namespace seqpat {

// Base class for every error thrown by this library.
class SeqpatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Sequence ingestion found no tokens.
class EmptySequenceError : public SeqpatError {
public:
  using SeqpatError::SeqpatError;
};

// A position lies outside the addressable window range.
class RangeError : public SeqpatError {
public:
  using SeqpatError::SeqpatError;
};

// A symbol name is not part of the bound alphabet.
class UnknownSymbolError : public SeqpatError {
public:
  using SeqpatError::SeqpatError;
};

// A pattern violates its structural invariants (e.g. no concrete slot).
class InvalidPatternError : public SeqpatError {
public:
  using SeqpatError::SeqpatError;
};

// A run configuration violates a documented parameter constraint.
class ConfigError : public SeqpatError {
public:
  using SeqpatError::SeqpatError;
};

// Information content requested for a symbol with zero probability.
class InfiniteInfoError : public SeqpatError {
public:
  using SeqpatError::SeqpatError;
};

// A compatibility matrix row does not sum to one (or an entry is out of [0,1]).
class StochasticityError : public SeqpatError {
public:
  using SeqpatError::SeqpatError;
};

// A matrix (or window) has the wrong dimensions.
class ShapeError : public SeqpatError {
public:
  using SeqpatError::SeqpatError;
};

// Two planted regions of a synthetic sequence overlap.
class PlantOverlapError : public SeqpatError {
public:
  using SeqpatError::SeqpatError;
};

// A brute-force oracle was asked to run beyond its guarded problem size.
class OracleTooLargeError : public SeqpatError {
public:
  using SeqpatError::SeqpatError;
};

// A file could not be opened or read.
class IoError : public SeqpatError {
public:
  using SeqpatError::SeqpatError;
};

}  // namespace seqpat
