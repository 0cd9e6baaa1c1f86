#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tpb {

// Invalid argument: index out of range, point outside [0,1], bad dimensions.
class DomainError : public std::invalid_argument {
public:
   using std::invalid_argument::invalid_argument;
};

// Exact elimination found a zero pivot column.
class SingularMatrixError : public std::runtime_error {
public:
   SingularMatrixError(const std::string& what, std::size_t step)
      : std::runtime_error(what), step_(step)
   {
   }

   // Elimination step (0-based column) at which rank deficiency appeared.
   std::size_t step() const noexcept { return step_; }

private:
   std::size_t step_;
};

// The input left the real-positive-spectrum regime the spectral routines assume.
class SpectralAssumptionError : public std::runtime_error {
public:
   using std::runtime_error::runtime_error;
};

// Randomized weight search ran out of draws.
class SearchExhaustedError : public std::runtime_error {
public:
   SearchExhaustedError(const std::string& what, int degree, std::uint64_t seed)
      : std::runtime_error(what), degree_(degree), seed_(seed)
   {
   }

   int degree() const noexcept { return degree_; }
   std::uint64_t seed() const noexcept { return seed_; }

private:
   int degree_;
   std::uint64_t seed_;
};

// Exact algorithm guard (e.g. brute-force minor enumeration) refused the input size.
class SizeLimitError : public std::length_error {
public:
   using std::length_error::length_error;
};

}  // namespace tpb
