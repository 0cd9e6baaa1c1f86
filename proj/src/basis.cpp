#include "tpb/basis.hpp"

#include "tpb/errors.hpp"
#include "tpb/matrix.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace tpb {

std::string_view family_name(BasisFamily family)
{
   switch (family) {
   case BasisFamily::bernstein: return "bernstein";
   case BasisFamily::said_ball: return "said-ball";
   case BasisFamily::dp: return "dp";
   case BasisFamily::monomial: return "monomial";
   }
   return "?";
}

std::optional<BasisFamily> parse_family(std::string_view name)
{
   for (auto f : {BasisFamily::bernstein, BasisFamily::said_ball, BasisFamily::dp,
                  BasisFamily::monomial}) {
      if (name == family_name(f)) return f;
   }
   if (name == "saidball" || name == "said_ball") return BasisFamily::said_ball;
   return std::nullopt;
}

std::string_view dp_variant_name(DpVariant variant)
{
   return variant == DpVariant::corrected ? "corrected" : "literal";
}

bool BasisSpec::normalized() const
{
   if (weights) return true;
   switch (family) {
   case BasisFamily::bernstein:
   case BasisFamily::said_ball: return true;
   case BasisFamily::dp: return dp_variant == DpVariant::corrected;
   case BasisFamily::monomial: return false;
   }
   return false;
}

void validate(const BasisSpec& spec)
{
   if (spec.degree < 1) throw DomainError("basis degree must be >= 1");
   if (spec.weights) {
      if (spec.weights->size() != static_cast<std::size_t>(spec.size())) {
         throw DomainError("weight vector must have degree+1 entries");
      }
      for (const auto& w : *spec.weights) {
         if (w <= 0) throw DomainError("weights must be strictly positive");
      }
   }
}

NodeSequence::NodeSequence(std::vector<Rational> nodes) : nodes_(std::move(nodes))
{
   for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i] < 0 || nodes_[i] > 1) throw DomainError("node outside [0,1]");
      if (i > 0 && !(nodes_[i - 1] < nodes_[i])) throw DomainError("nodes must be strictly increasing");
   }
}

Integer binomial(long n, long k)
{
   if (n < 0 || k < 0 || k > n) throw DomainError("binomial requires 0 <= k <= n");
   k = std::min(k, n - k);
   Integer result = 1;
   for (long i = 1; i <= k; ++i) {
      result *= n - k + i;
      result /= i;  // exact: result is C(n-k+i, i) here
   }
   return result;
}

namespace {

Rational said_ball(int n, int i, const Rational& x)
{
   const int half = n / 2;
   if (i <= (n - 1) / 2) {
      return Rational(binomial(half + i, i)) * pow(x, i) * pow(1 - x, half + 1);
   }
   if (n % 2 == 0 && i == n / 2) {
      return Rational(binomial(n, n / 2)) * pow(x, n / 2) * pow(1 - x, n / 2);
   }
   return said_ball(n, n - i, 1 - x);
}

Rational dp(int n, int i, const Rational& x, DpVariant variant)
{
   if (i == 0) return pow(1 - x, n);
   if (i == n) return pow(x, n);
   if (n % 2 == 0 && i == n / 2) {
      return 1 - pow(x, n / 2 + 1) - pow(1 - x, n / 2 + 1);
   }
   if (n % 2 == 1 && i == (n - 1) / 2) {
      const unsigned inner = (n + 1) / 2 + (variant == DpVariant::literal ? 1 : 0);
      return x * pow(1 - x, (n + 1) / 2) + Rational(1, 2) * (1 - pow(x, inner) - pow(1 - x, inner));
   }
   if (n % 2 == 1 && i == (n + 1) / 2) return dp(n, (n - 1) / 2, 1 - x, variant);
   if (i <= n / 2 - 1) return x * pow(1 - x, n - i);
   // (n+1)/2 + 1 <= i <= n-1
   return pow(x, i) * (1 - x);
}

void check_point(int degree, int i, const Rational& x)
{
   if (i < 0 || i > degree) throw DomainError("basis index " + std::to_string(i) + " out of range");
   if (x < 0 || x > 1) throw DomainError("evaluation point " + to_string(x) + " outside [0,1]");
}

}  // namespace

Rational eval_polynomial_basis(BasisFamily family, int degree, int i, const Rational& x,
                               DpVariant dp_variant)
{
   if (degree < 1) throw DomainError("basis degree must be >= 1");
   check_point(degree, i, x);
   switch (family) {
   case BasisFamily::bernstein:
      return Rational(binomial(degree, i)) * pow(x, i) * pow(1 - x, degree - i);
   case BasisFamily::said_ball: return said_ball(degree, i, x);
   case BasisFamily::dp: return dp(degree, i, x, dp_variant);
   case BasisFamily::monomial: return pow(x, i);
   }
   throw DomainError("unknown basis family");
}

std::vector<Rational> eval_basis_row(const BasisSpec& spec, const Rational& x)
{
   validate(spec);
   check_point(spec.degree, 0, x);
   std::vector<Rational> row(spec.size());
   for (int i = 0; i <= spec.degree; ++i) {
      row[i] = eval_polynomial_basis(spec.family, spec.degree, i, x, spec.dp_variant);
   }
   if (spec.weights) {
      Rational total = 0;
      for (int i = 0; i <= spec.degree; ++i) {
         row[i] *= (*spec.weights)[i];
         total += row[i];
      }
      if (total == 0) throw DomainError("weighted basis has zero denominator at " + to_string(x));
      for (auto& v : row) v /= total;
   }
   return row;
}

Rational eval_basis_function(const BasisSpec& spec, int i, const Rational& x)
{
   validate(spec);
   check_point(spec.degree, i, x);
   if (!spec.weights) return eval_polynomial_basis(spec.family, spec.degree, i, x, spec.dp_variant);
   return eval_basis_row(spec, x)[i];
}

NodeSequence standard_nodes(int degree)
{
   if (degree < 1) throw DomainError("standard_nodes requires n >= 1");
   std::vector<Rational> nodes;
   nodes.reserve(degree + 1);
   for (int i = 1; i <= degree + 1; ++i) nodes.emplace_back(i, degree + 2);
   for (auto& t : nodes) t.canonicalize();
   return NodeSequence(std::move(nodes));
}

WeightConversionResult convert_bernstein_weights(int degree, std::span<const Rational> weights)
{
   BasisSpec source{BasisFamily::bernstein, degree, std::vector<Rational>(weights.begin(), weights.end())};
   validate(source);
   source.weights.reset();

   const NodeSequence nodes = standard_nodes(degree);
   std::vector<Rational> values(nodes.size());
   for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (int j = 0; j <= degree; ++j) {
         values[i] += weights[j] * eval_polynomial_basis(BasisFamily::bernstein, degree, j, nodes[i]);
      }
   }

   auto coordinates = [&](BasisFamily family) {
      return solve(collocation_matrix(BasisSpec{family, degree}, nodes), values);
   };

   WeightConversionResult result;
   result.bernstein.assign(weights.begin(), weights.end());
   result.said_ball = coordinates(BasisFamily::said_ball);
   result.monomial = coordinates(BasisFamily::monomial);
   result.dp = coordinates(BasisFamily::dp);

   auto positive = [](const std::vector<Rational>& v) {
      return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q > 0; });
   };
   result.all_positive = positive(result.bernstein) && positive(result.said_ball) &&
                         positive(result.monomial) && positive(result.dp);
   return result;
}

std::vector<Rational> bernstein_to_monomial(int degree, std::span<const Rational> weights)
{
   // b_j^n(x) = sum_k (-1)^{k-j} C(n,j) C(n-j,k-j) x^k
   std::vector<Rational> coefficients(degree + 1);
   for (int j = 0; j <= degree; ++j) {
      for (int k = j; k <= degree; ++k) {
         Rational term = weights[j] * Rational(binomial(degree, j) * binomial(degree - j, k - j));
         if ((k - j) % 2 == 0) {
            coefficients[k] += term;
         } else {
            coefficients[k] -= term;
         }
      }
   }
   return coefficients;
}

std::vector<Rational> monomial_to_bernstein(int degree, std::span<const Rational> coefficients)
{
   // x^j = sum_{i>=j} C(i,j)/C(n,j) b_i^n(x)
   std::vector<Rational> weights(degree + 1);
   for (int j = 0; j <= degree; ++j) {
      for (int i = j; i <= degree; ++i) {
         weights[i] += coefficients[j] * Rational(binomial(i, j), binomial(degree, j));
      }
   }
   for (auto& w : weights) w.canonicalize();
   return weights;
}

std::uint64_t SplitMix64::next()
{
   state_ += 0x9E3779B97F4A7C15ULL;
   std::uint64_t z = state_;
   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
   z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
   return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi)
{
   if (lo > hi) throw DomainError("uniform requires lo <= hi");
   const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
   const std::uint64_t mask = span == 0 ? 0 : (~std::uint64_t{0} >> std::countl_zero(span));
   for (;;) {
      const std::uint64_t v = next() & mask;
      if (v <= span) return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + v);
   }
}

namespace {

// Sign screen on the monomial coefficients using 128-bit integers. Exact, and a necessary
// condition for all_positive, so it never changes which draw the search returns.
class MonomialScreen {
public:
   MonomialScreen(int degree, std::int64_t lo, std::int64_t hi)
      : degree_(degree),
        enabled_(degree <= 30 && lo >= -(std::int64_t{1} << 40) && hi <= (std::int64_t{1} << 40))
   {
      if (!enabled_) return;
      table_.resize((degree + 1) * (degree + 1));
      for (int k = 0; k <= degree; ++k) {
         for (int j = 0; j <= k; ++j) {
            Integer c = binomial(degree, j) * binomial(degree - j, k - j);
            __int128 v = static_cast<__int128>(c.get_si());
            table_[k * (degree + 1) + j] = (k - j) % 2 == 0 ? v : -v;
         }
      }
   }

   bool may_pass(std::span<const std::int64_t> w) const
   {
      if (!enabled_) return true;
      for (int k = 0; k <= degree_; ++k) {
         __int128 acc = 0;
         for (int j = 0; j <= k; ++j) acc += table_[k * (degree_ + 1) + j] * w[j];
         if (acc <= 0) return false;
      }
      return true;
   }

private:
   int degree_;
   bool enabled_;
   std::vector<__int128> table_;
};

}  // namespace

WeightSearchResult search_positive_weights(int degree, std::int64_t lo, std::int64_t hi,
                                           std::uint64_t seed, std::uint64_t max_iter)
{
   if (degree < 1) throw DomainError("search requires degree >= 1");
   if (lo < 1 || lo > hi) throw DomainError("search requires 1 <= lo <= hi");
   if (max_iter < 1) throw DomainError("search requires max_iter >= 1");

   SplitMix64 rng(seed);
   const MonomialScreen screen(degree, lo, hi);
   std::vector<std::int64_t> draw(degree + 1);
   std::vector<Rational> weights(degree + 1);

   for (std::uint64_t iter = 1; iter <= max_iter; ++iter) {
      for (auto& w : draw) w = rng.uniform(lo, hi);
      if (!screen.may_pass(draw)) continue;
      for (int j = 0; j <= degree; ++j) weights[j] = Rational(Integer(static_cast<long>(draw[j])));
      WeightConversionResult result = convert_bernstein_weights(degree, weights);
      if (result.all_positive) return {std::move(result), iter};
   }
   throw SearchExhaustedError("no all-positive weight system for degree " + std::to_string(degree) +
                                 " after " + std::to_string(max_iter) + " draws (seed " +
                                 std::to_string(seed) + ")",
                              degree, seed);
}

}  // namespace tpb
