#pragma once

// Polynomial bases of P_n([0,1]) and their rational (weighted) variants.

#include "tpb/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tpb {

enum class BasisFamily { bernstein, said_ball, dp, monomial };

// How the two middle DP functions are built for odd degree n.
//   corrected: c_{(n-1)/2}(x) = x(1-x)^{(n+1)/2} + 1/2 [1 - x^{(n+1)/2} - (1-x)^{(n+1)/2}]
//   literal:   same, but with exponent (n+1)/2 + 1 inside the bracket. Not a partition of unity.
enum class DpVariant { corrected, literal };

std::string_view family_name(BasisFamily family);
std::optional<BasisFamily> parse_family(std::string_view name);
std::string_view dp_variant_name(DpVariant variant);

struct BasisSpec {
   BasisFamily family = BasisFamily::bernstein;
   int degree = 1;
   // When present: r_i = w_i u_i / sum_j w_j u_j. All entries must be > 0.
   std::optional<std::vector<Rational>> weights;
   DpVariant dp_variant = DpVariant::corrected;

   int size() const { return degree + 1; }
   // Partition of unity holds for this spec.
   bool normalized() const;
};

// Throws DomainError unless degree >= 1 and any weights are n+1 positive values.
void validate(const BasisSpec& spec);

// Strictly increasing nodes in [0,1].
class NodeSequence {
public:
   explicit NodeSequence(std::vector<Rational> nodes);

   std::span<const Rational> nodes() const { return nodes_; }
   std::size_t size() const { return nodes_.size(); }
   const Rational& operator[](std::size_t i) const { return nodes_[i]; }

private:
   std::vector<Rational> nodes_;
};

Integer binomial(long n, long k);

// Value of the i-th (unweighted) basis polynomial u_i^n(x).
Rational eval_polynomial_basis(BasisFamily family, int degree, int i, const Rational& x,
                               DpVariant dp_variant = DpVariant::corrected);

Rational eval_basis_function(const BasisSpec& spec, int i, const Rational& x);
std::vector<Rational> eval_basis_row(const BasisSpec& spec, const Rational& x);

// t_i = i/(n+2), i = 1..n+1.
NodeSequence standard_nodes(int degree);

struct WeightConversionResult {
   std::vector<Rational> bernstein;  // w
   std::vector<Rational> said_ball;  // w-bar
   std::vector<Rational> monomial;   // w-tilde
   std::vector<Rational> dp;         // w-hat
   bool all_positive = false;
};

// Coordinates of p(x) = sum_j w_j b_j^n(x) in the Said-Ball, monomial and DP bases.
WeightConversionResult convert_bernstein_weights(int degree, std::span<const Rational> weights);

// Bernstein coordinates of p(x) = sum_j a_j x^j.
std::vector<Rational> monomial_to_bernstein(int degree, std::span<const Rational> coefficients);

// Exact monomial coefficients of sum_j w_j b_j^n(x).
std::vector<Rational> bernstein_to_monomial(int degree, std::span<const Rational> weights);

// SplitMix64. Fixed constants so every implementation reproduces the same stream.
class SplitMix64 {
public:
   explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

   std::uint64_t next();
   // Uniform integer in [lo, hi], rejection sampled on the smallest covering power of two.
   std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
   std::uint64_t state_;
};

inline constexpr std::uint64_t default_max_iter = 1'000'000'000;

struct WeightSearchResult {
   WeightConversionResult weights;
   std::uint64_t draws = 0;  // weight vectors drawn, including the successful one
};

// Draws w uniformly from [lo,hi]^{n+1} until every converted weight vector is positive.
// Throws SearchExhaustedError after max_iter unsuccessful draws.
WeightSearchResult search_positive_weights(int degree, std::int64_t lo, std::int64_t hi,
                                           std::uint64_t seed,
                                           std::uint64_t max_iter = default_max_iter);

}  // namespace tpb
