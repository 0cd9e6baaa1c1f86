#pragma once

#include "tpb/rational.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace tpb {

// Univariate polynomial over Q, coefficients in ascending degree order.
// Trailing zero coefficients are stripped, so the zero polynomial has no coefficients.
class ExactPolynomial {
public:
   ExactPolynomial() = default;
   explicit ExactPolynomial(std::vector<Rational> coefficients);
   ExactPolynomial(std::initializer_list<Rational> coefficients);

   // x^k
   static ExactPolynomial monomial(unsigned k, const Rational& scale = 1);

   bool is_zero() const { return coeffs_.empty(); }
   // -1 for the zero polynomial.
   int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
   const std::vector<Rational>& coefficients() const { return coeffs_; }
   const Rational& leading() const { return coeffs_.back(); }
   Rational coefficient(int k) const;

   Rational operator()(const Rational& x) const;
   int sign_at(const Rational& x) const;

   ExactPolynomial derivative() const;
   ExactPolynomial monic() const;

   friend ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b);
   friend ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b);
   friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
   friend ExactPolynomial operator-(const ExactPolynomial& a);
   friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

private:
   void trim();

   std::vector<Rational> coeffs_;
};

// Quotient and remainder of a / b. Throws DomainError when b is zero.
std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& a, const ExactPolynomial& b);

// Monic gcd; gcd(0, 0) = 0.
ExactPolynomial gcd(const ExactPolynomial& a, const ExactPolynomial& b);

// p / gcd(p, p'), monic.
ExactPolynomial squarefree_part(const ExactPolynomial& p);

// Yun's algorithm: p = c * prod_i factors[i]^(i+1), each factor monic squarefree and pairwise coprime.
std::vector<ExactPolynomial> squarefree_factorization(const ExactPolynomial& p);

}  // namespace tpb
