#pragma once

// Certified real eigenvalue and singular value enclosures for small exact matrices.
//
// Roots are isolated with Sturm sequences on the squarefree part of the characteristic
// polynomial and refined by exact bisection. Enclosures always have rational endpoints
// that are not roots, so membership is a matter of exact sign evaluation.

#include "tpb/matrix.hpp"
#include "tpb/polynomial.hpp"
#include "tpb/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tpb {

// Closed rational interval [low, high].
struct RationalInterval {
   Rational low;
   Rational high;

   Rational width() const { return high - low; }
   bool contains(const Rational& x) const { return low <= x && x <= high; }
   friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

// Product of two intervals whose endpoints are all nonnegative.
RationalInterval positive_product(const RationalInterval& a, const RationalInterval& b);

// Exactly one root of `polynomial` lies in the open interval (low, high); neither endpoint is a root.
struct RootEnclosure {
   Rational low;
   Rational high;
   ExactPolynomial polynomial;  // squarefree

   RationalInterval interval() const { return {low, high}; }
   Rational width() const { return high - low; }
};

class SturmSequence {
public:
   explicit SturmSequence(const ExactPolynomial& squarefree);

   // Sign variations at x; x must not be a root of the first polynomial.
   std::size_t variations(const Rational& x) const;
   // Distinct roots in (a, b] for a < b.
   std::size_t count(const Rational& a, const Rational& b) const;

   const ExactPolynomial& base() const { return chain_.front(); }

private:
   std::vector<ExactPolynomial> chain_;
};

inline constexpr std::size_t max_char_poly_dim = 12;

// det(xI - A) by the Faddeev-LeVerrier recurrence. Throws SizeLimitError above max_char_poly_dim.
ExactPolynomial char_poly(const RationalMatrix& a);

// 1 + max |a_k / a_n|; every root satisfies |x| < bound.
Rational cauchy_bound(const ExactPolynomial& p);

// Disjoint enclosures of the distinct real roots, sorted ascending. Throws DomainError on zero input.
std::vector<RootEnclosure> isolate_real_roots(const ExactPolynomial& p);

// Real roots counted with multiplicity.
std::size_t real_root_count(const ExactPolynomial& p);

// Bisects until width <= tol.
RootEnclosure refine_root(const RootEnclosure& e, const Rational& tol);

// 10^-30.
Rational default_tolerance();

struct EigenEnclosure {
   RootEnclosure root;
   bool all_real_positive = false;
};

// Smallest eigenvalue. Throws SpectralAssumptionError if some eigenvalue is non-real.
EigenEnclosure min_eigenvalue(const RationalMatrix& a, const Rational& tol);

// Smallest eigenvalue of A^T A, i.e. sigma_min^2. Throws SpectralAssumptionError
// when the enclosure cannot be separated from 0.
RootEnclosure min_singular_value(const RationalMatrix& a, const Rational& tol);

struct SpectralReport {
   RationalInterval lambda_min;
   RationalInterval sigma_min_squared;
   bool all_eigs_real_positive = false;
};

SpectralReport spectral_report(const RationalMatrix& a, const Rational& tol);

// Minimal eigenvalue / singular value of A (x) B from its factors' reports.
SpectralReport kron_min_spectral(const SpectralReport& a, const SpectralReport& b);

struct FloatSpectrum {
   double lambda_min;
   double sigma_min;
};

// binary64 eigensolve and SVD of A. nullopt when the solver does not converge or the
// smallest eigenvalue has a non-negligible imaginary part.
std::optional<FloatSpectrum> float_crosscheck(const RationalMatrix& a);

// Outward-rounded square root: returned interval contains sqrt(x) for every x in `squared`.
// Endpoints are multiples of 10^-frac_digits.
RationalInterval sqrt_interval(const RationalInterval& squared, unsigned frac_digits);

}  // namespace tpb
