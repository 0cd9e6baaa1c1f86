#include "tpb/spectral.hpp"

#include "tpb/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace tpb {

RationalInterval positive_product(const RationalInterval& a, const RationalInterval& b)
{
   if (a.low < 0 || b.low < 0) throw DomainError("positive_product needs nonnegative endpoints");
   return {a.low * b.low, a.high * b.high};
}

SturmSequence::SturmSequence(const ExactPolynomial& squarefree)
{
   if (squarefree.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
   chain_.push_back(squarefree);
   if (squarefree.degree() == 0) return;
   chain_.push_back(squarefree.derivative());
   while (chain_.back().degree() > 0) {
      ExactPolynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      // Positive rescaling keeps the sign pattern and tames coefficient growth.
      const Rational scale = 1 / abs(r.leading());
      chain_.push_back(-(r * ExactPolynomial{scale}));
   }
}

std::size_t SturmSequence::variations(const Rational& x) const
{
   std::size_t changes = 0;
   int previous = 0;
   for (const auto& p : chain_) {
      const int s = p.sign_at(x);
      if (s == 0) continue;
      if (previous != 0 && s != previous) ++changes;
      previous = s;
   }
   return changes;
}

std::size_t SturmSequence::count(const Rational& a, const Rational& b) const
{
   return variations(a) - variations(b);
}

ExactPolynomial char_poly(const RationalMatrix& a)
{
   if (!a.square()) throw DomainError("char_poly requires a square matrix");
   const std::size_t n = a.rows();
   if (n > max_char_poly_dim) {
      throw SizeLimitError("char_poly refused: dimension " + std::to_string(n) + " exceeds " +
                           std::to_string(max_char_poly_dim));
   }
   // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
   std::vector<Rational> c(n + 1);
   c[n] = 1;
   RationalMatrix m(n, n);
   for (std::size_t k = 1; k <= n; ++k) {
      RationalMatrix next = a * m;
      for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
      m = std::move(next);
      RationalMatrix am = a * m;
      Rational trace = 0;
      for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
      c[n - k] = -trace / static_cast<long>(k);
   }
   return ExactPolynomial(std::move(c));
}

Rational cauchy_bound(const ExactPolynomial& p)
{
   if (p.is_zero()) throw DomainError("root bound of the zero polynomial");
   Rational best = 0;
   const Rational lead = abs(p.leading());
   for (int k = 0; k < p.degree(); ++k) {
      Rational r = abs(p.coefficient(k)) / lead;
      if (r > best) best = r;
   }
   return best + 1;
}

namespace {

// A point strictly inside (a, b) that is not a root of p.
Rational split_point(const ExactPolynomial& p, const Rational& a, const Rational& b)
{
   for (long den = 2;; ++den) {
      for (long num = den / 2; num >= 1; --num) {
         Rational t = a + (b - a) * Rational(num, den);
         if (p.sign_at(t) != 0) return t;
         Rational u = b - (b - a) * Rational(num, den);
         if (p.sign_at(u) != 0) return u;
      }
   }
}

void isolate(const SturmSequence& sturm, const Rational& a, const Rational& b, std::size_t roots,
             std::vector<RootEnclosure>& out)
{
   if (roots == 0) return;
   if (roots == 1) {
      out.push_back({a, b, sturm.base()});
      return;
   }
   const Rational mid = split_point(sturm.base(), a, b);
   const std::size_t left = sturm.count(a, mid);
   isolate(sturm, a, mid, left, out);
   isolate(sturm, mid, b, roots - left, out);
}

}  // namespace

std::vector<RootEnclosure> isolate_real_roots(const ExactPolynomial& p)
{
   if (p.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
   const ExactPolynomial q = squarefree_part(p);
   std::vector<RootEnclosure> out;
   if (q.degree() < 1) return out;
   const SturmSequence sturm(q);
   const Rational bound = cauchy_bound(q);
   const Rational low = -bound;
   isolate(sturm, low, bound, sturm.count(low, bound), out);
   return out;
}

std::size_t real_root_count(const ExactPolynomial& p)
{
   if (p.is_zero()) throw DomainError("cannot count roots of the zero polynomial");
   std::size_t total = 0;
   const auto factors = squarefree_factorization(p);
   for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].degree() < 1) continue;
      const SturmSequence sturm(factors[i]);
      const Rational bound = cauchy_bound(factors[i]);
      total += (i + 1) * sturm.count(-bound, bound);
   }
   return total;
}

RootEnclosure refine_root(const RootEnclosure& e, const Rational& tol)
{
   if (tol <= 0) throw DomainError("refinement tolerance must be positive");
   RootEnclosure r = e;
   const int low_sign = r.polynomial.sign_at(r.low);
   while (r.high - r.low > tol) {
      Rational mid = (r.low + r.high) / 2;
      const int s = r.polynomial.sign_at(mid);
      if (s == 0) {
         // Exact rational root: centre a tolerance-wide window on it.
         Rational half = std::min(Rational(tol / 2), Rational((r.high - r.low) / 4));
         r.low = mid - half;
         r.high = mid + half;
         return r;
      }
      if (s == low_sign) {
         r.low = std::move(mid);
      } else {
         r.high = std::move(mid);
      }
   }
   return r;
}

Rational default_tolerance() { return Rational(Integer(1), pow10(30)); }

namespace {

// Tightens until the enclosure lies strictly right of zero. The caller guarantees a positive root.
RootEnclosure separate_from_zero(RootEnclosure e)
{
   Rational tol = e.width();
   while (e.low <= 0) {
      tol /= Rational(Integer(1) << 32);
      e = refine_root(e, tol);
   }
   return e;
}

void check_spectral_input(const RationalMatrix& a)
{
   if (!a.square()) throw DomainError("spectral routines require a square matrix");
   if (a.rows() == 0) throw DomainError("spectral routines require a nonempty matrix");
}

}  // namespace

EigenEnclosure min_eigenvalue(const RationalMatrix& a, const Rational& tol)
{
   check_spectral_input(a);
   const ExactPolynomial p = char_poly(a);
   const std::size_t real = real_root_count(p);
   if (real < a.rows()) {
      throw SpectralAssumptionError("matrix has " + std::to_string(a.rows() - real) +
                                    " non-real eigenvalue(s)");
   }
   const auto roots = isolate_real_roots(p);
   EigenEnclosure result{refine_root(roots.front(), tol), false};
   const SturmSequence sturm(result.root.polynomial);
   if (p(Rational(0)) != 0) {
      result.all_real_positive = sturm.count(Rational(0), cauchy_bound(result.root.polynomial)) == roots.size();
   }
   if (result.all_real_positive) result.root = separate_from_zero(std::move(result.root));
   return result;
}

RootEnclosure min_singular_value(const RationalMatrix& a, const Rational& tol)
{
   check_spectral_input(a);
   const RationalMatrix gram = a.transpose() * a;
   const ExactPolynomial p = char_poly(gram);
   if (p(Rational(0)) == 0) {
      throw SpectralAssumptionError("smallest singular value is zero: matrix is singular");
   }
   const auto roots = isolate_real_roots(p);
   if (roots.empty()) throw SpectralAssumptionError("Gram matrix has no real eigenvalues");
   return separate_from_zero(refine_root(roots.front(), tol));
}

SpectralReport spectral_report(const RationalMatrix& a, const Rational& tol)
{
   const EigenEnclosure lambda = min_eigenvalue(a, tol);
   const RootEnclosure sigma = min_singular_value(a, tol);
   return {lambda.root.interval(), sigma.interval(), lambda.all_real_positive};
}

SpectralReport kron_min_spectral(const SpectralReport& a, const SpectralReport& b)
{
   if (!a.all_eigs_real_positive || !b.all_eigs_real_positive) {
      throw SpectralAssumptionError("Kronecker spectral product needs real positive factor spectra");
   }
   return {positive_product(a.lambda_min, b.lambda_min),
           positive_product(a.sigma_min_squared, b.sigma_min_squared), true};
}

std::optional<FloatSpectrum> float_crosscheck(const RationalMatrix& a)
{
   check_spectral_input(a);
   if (a.rows() > 64) throw SizeLimitError("float_crosscheck is limited to 64x64");
   const auto n = static_cast<Eigen::Index>(a.rows());
   Eigen::MatrixXd m(n, n);
   for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(i, j).get_d();
   }

   Eigen::EigenSolver<Eigen::MatrixXd> eig(m, false);
   if (eig.info() != Eigen::Success) return std::nullopt;
   double lambda = std::numeric_limits<double>::infinity();
   const auto& values = eig.eigenvalues();
   for (Eigen::Index i = 0; i < values.size(); ++i) lambda = std::min(lambda, values[i].real());

   Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
   const auto& sv = svd.singularValues();
   if (sv.size() == 0 || !std::isfinite(sv.minCoeff())) return std::nullopt;
   return FloatSpectrum{lambda, sv.minCoeff()};
}

namespace {

Integer floor_sqrt(const Integer& n)
{
   Integer r;
   mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
   return r;
}

Integer floor_of(const Rational& q)
{
   Integer r;
   mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
   return r;
}

Integer ceil_of(const Rational& q)
{
   Integer r;
   mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
   return r;
}

}  // namespace

RationalInterval sqrt_interval(const RationalInterval& squared, unsigned frac_digits)
{
   if (squared.low < 0) throw DomainError("sqrt_interval needs a nonnegative interval");
   const Integer scale = pow10(frac_digits);
   const Rational scale_sq(scale * scale);

   const Integer lo = floor_sqrt(floor_of(squared.low * scale_sq));
   const Integer hi_sq = ceil_of(squared.high * scale_sq);
   Integer hi = floor_sqrt(hi_sq);
   if (hi * hi < hi_sq) hi += 1;
   Rational low(lo, scale);
   Rational high(hi, scale);
   low.canonicalize();
   high.canonicalize();
   return {low, high};
}

}  // namespace tpb
