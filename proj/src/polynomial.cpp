#include "tpb/polynomial.hpp"

#include "tpb/errors.hpp"

#include <algorithm>

namespace tpb {

ExactPolynomial::ExactPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
   trim();
}

ExactPolynomial::ExactPolynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients)
{
   trim();
}

ExactPolynomial ExactPolynomial::monomial(unsigned k, const Rational& scale)
{
   std::vector<Rational> c(k + 1);
   c[k] = scale;
   return ExactPolynomial(std::move(c));
}

void ExactPolynomial::trim()
{
   while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational ExactPolynomial::coefficient(int k) const
{
   if (k < 0 || k > degree()) return 0;
   return coeffs_[k];
}

Rational ExactPolynomial::operator()(const Rational& x) const
{
   Rational acc = 0;
   for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
   }
   return acc;
}

int ExactPolynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

ExactPolynomial ExactPolynomial::derivative() const
{
   if (coeffs_.size() <= 1) return {};
   std::vector<Rational> d(coeffs_.size() - 1);
   for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
   return ExactPolynomial(std::move(d));
}

ExactPolynomial ExactPolynomial::monic() const
{
   if (is_zero()) return {};
   std::vector<Rational> c = coeffs_;
   const Rational lead = leading();
   for (auto& v : c) v /= lead;
   return ExactPolynomial(std::move(c));
}

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b)
{
   std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
   for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
   for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
   return ExactPolynomial(std::move(c));
}

ExactPolynomial operator-(const ExactPolynomial& a) { return ExactPolynomial{} - a; }

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b)
{
   std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
   for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
   for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
   return ExactPolynomial(std::move(c));
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b)
{
   if (a.is_zero() || b.is_zero()) return {};
   std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
   Rational term;
   for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
         term = a.coeffs_[i] * b.coeffs_[j];
         c[i + j] += term;
      }
   }
   return ExactPolynomial(std::move(c));
}

std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& a, const ExactPolynomial& b)
{
   if (b.is_zero()) throw DomainError("polynomial division by zero");
   if (a.degree() < b.degree()) return {ExactPolynomial{}, a};

   std::vector<Rational> rem = a.coefficients();
   std::vector<Rational> quot(a.degree() - b.degree() + 1);
   const auto& div = b.coefficients();
   const int db = b.degree();
   Rational term;
   for (int k = a.degree(); k >= db; --k) {
      if (rem[k] == 0) continue;
      const Rational f = rem[k] / b.leading();
      quot[k - db] = f;
      for (int j = 0; j <= db; ++j) {
         term = f * div[j];
         rem[k - db + j] -= term;
      }
   }
   rem.resize(db);
   return {ExactPolynomial(std::move(quot)), ExactPolynomial(std::move(rem))};
}

ExactPolynomial gcd(const ExactPolynomial& a, const ExactPolynomial& b)
{
   ExactPolynomial x = a;
   ExactPolynomial y = b;
   while (!y.is_zero()) {
      ExactPolynomial r = divmod(x, y).second;
      x = std::move(y);
      y = r.monic();
   }
   return x.monic();
}

ExactPolynomial squarefree_part(const ExactPolynomial& p)
{
   if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
   if (p.degree() == 0) return ExactPolynomial{1};
   return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<ExactPolynomial> squarefree_factorization(const ExactPolynomial& p)
{
   if (p.is_zero()) throw DomainError("squarefree factorization of the zero polynomial");
   std::vector<ExactPolynomial> factors;
   if (p.degree() == 0) return factors;

   const ExactPolynomial dp = p.derivative();
   ExactPolynomial a = gcd(p, dp);
   ExactPolynomial b = divmod(p, a).first;
   ExactPolynomial c = divmod(dp, a).first;
   ExactPolynomial d = c - b.derivative();
   while (b.degree() > 0) {
      ExactPolynomial f = gcd(b, d);
      factors.push_back(f);
      b = divmod(b, f).first;
      c = divmod(d, f).first;
      d = c - b.derivative();
   }
   // Drop trailing unit factors; keep interior ones so index i still means multiplicity i+1.
   while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
   return factors;
}

}  // namespace tpb
