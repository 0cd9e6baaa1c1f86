#include "tpb/matrix.hpp"

#include "tpb/errors.hpp"

#include <string>
#include <utility>

namespace tpb {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
   : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
   : rows_(rows), cols_(cols), entries_(std::move(entries))
{
   if (entries_.size() != rows_ * cols_) throw DomainError("entry count does not match shape");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
   : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
   entries_.reserve(rows_ * cols_);
   for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix initializer");
      entries_.insert(entries_.end(), r.begin(), r.end());
   }
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
   RationalMatrix m(n, n);
   for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
   return m;
}

RationalMatrix RationalMatrix::transpose() const
{
   RationalMatrix t(cols_, rows_);
   for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
   }
   return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
   if (a.cols() != b.rows()) throw DomainError("matrix product shape mismatch");
   RationalMatrix c(a.rows(), b.cols());
   Rational term;
   for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
         if (a(i, k) == 0) continue;
         for (std::size_t j = 0; j < b.cols(); ++j) {
            term = a(i, k) * b(k, j);
            c(i, j) += term;
         }
      }
   }
   return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b)
{
   if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix difference shape mismatch");
   RationalMatrix c(a.rows(), a.cols());
   for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
   }
   return c;
}

RationalMatrix collocation_matrix(const BasisSpec& spec, const NodeSequence& nodes)
{
   validate(spec);
   RationalMatrix m(nodes.size(), spec.size());
   for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto row = eval_basis_row(spec, nodes[i]);
      for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = row[j];
   }
   return m;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b)
{
   RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
   for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
         const Rational& s = a(i, j);
         for (std::size_t p = 0; p < b.rows(); ++p) {
            for (std::size_t q = 0; q < b.cols(); ++q) {
               k(i * b.rows() + p, j * b.cols() + q) = s * b(p, q);
            }
         }
      }
   }
   return k;
}

Rational inf_norm(const RationalMatrix& a)
{
   Rational best = 0;
   for (std::size_t i = 0; i < a.rows(); ++i) {
      Rational sum = 0;
      for (const auto& v : a.row(i)) sum += abs(v);
      if (sum > best) best = sum;
   }
   return best;
}

namespace {

void require_square(const RationalMatrix& a, const char* what)
{
   if (!a.square()) throw DomainError(std::string(what) + " requires a square matrix");
}

// Reduces [A | rhs] in place to [I | A^{-1} rhs].
void gauss_jordan(RationalMatrix& a, RationalMatrix& rhs)
{
   const std::size_t n = a.rows();
   Rational factor;
   for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && a(pivot, col) == 0) ++pivot;
      if (pivot == n) {
         throw SingularMatrixError("matrix is singular: no pivot in column " + std::to_string(col), col);
      }
      if (pivot != col) {
         for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
         for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(pivot, j), rhs(col, j));
      }
      const Rational inv_pivot = 1 / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(col, j) *= inv_pivot;
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(col, j) *= inv_pivot;

      for (std::size_t i = 0; i < n; ++i) {
         if (i == col || a(i, col) == 0) continue;
         const Rational f = a(i, col);
         for (std::size_t j = col; j < n; ++j) {
            factor = f * a(col, j);
            a(i, j) -= factor;
         }
         for (std::size_t j = 0; j < rhs.cols(); ++j) {
            if (rhs(col, j) == 0) continue;
            factor = f * rhs(col, j);
            rhs(i, j) -= factor;
         }
      }
   }
}

}  // namespace

RationalMatrix inverse(const RationalMatrix& a)
{
   require_square(a, "inverse");
   RationalMatrix work = a;
   RationalMatrix inv = RationalMatrix::identity(a.rows());
   gauss_jordan(work, inv);
   return inv;
}

std::vector<Rational> solve(const RationalMatrix& a, std::span<const Rational> b)
{
   require_square(a, "solve");
   if (b.size() != a.rows()) throw DomainError("right-hand side length mismatch");
   RationalMatrix work = a;
   RationalMatrix rhs(b.size(), 1, std::vector<Rational>(b.begin(), b.end()));
   gauss_jordan(work, rhs);
   return {rhs.entries().begin(), rhs.entries().end()};
}

Rational determinant(const RationalMatrix& a)
{
   require_square(a, "determinant");
   const std::size_t n = a.rows();
   RationalMatrix m = a;
   Rational det = 1;
   Rational factor;
   for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && m(pivot, col) == 0) ++pivot;
      if (pivot == n) return 0;
      if (pivot != col) {
         for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
         det = -det;
      }
      det *= m(col, col);
      for (std::size_t i = col + 1; i < n; ++i) {
         if (m(i, col) == 0) continue;
         const Rational f = m(i, col) / m(col, col);
         for (std::size_t j = col; j < n; ++j) {
            factor = f * m(col, j);
            m(i, j) -= factor;
         }
      }
   }
   return det;
}

Rational cond_inf(const RationalMatrix& a) { return inf_norm(a) * inf_norm(inverse(a)); }

RationalMatrix abs_matrix(const RationalMatrix& a)
{
   RationalMatrix m(a.rows(), a.cols());
   for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = abs(a(i, j));
   }
   return m;
}

std::optional<DominanceViolation> find_dominance_violation(const RationalMatrix& a,
                                                           const RationalMatrix& c)
{
   if (a.rows() != c.rows() || a.cols() != c.cols()) throw DomainError("dominance shape mismatch");
   for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
         if (abs(c(i, j)) > a(i, j)) return DominanceViolation{i, j, a(i, j), c(i, j)};
      }
   }
   return std::nullopt;
}

bool dominates(const RationalMatrix& a, const RationalMatrix& c)
{
   return !find_dominance_violation(a, c).has_value();
}

Rational minor(const RationalMatrix& a, std::span<const std::size_t> rows,
               std::span<const std::size_t> cols)
{
   if (rows.size() != cols.size()) throw DomainError("minor needs equally many rows and columns");
   RationalMatrix sub(rows.size(), cols.size());
   for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = a(rows[i], cols[j]);
   }
   return determinant(sub);
}

namespace {

// Advances idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n)
{
   const std::size_t k = idx.size();
   for (std::size_t pos = k; pos-- > 0;) {
      if (idx[pos] < n - k + pos) {
         ++idx[pos];
         for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
         return true;
      }
   }
   return false;
}

}  // namespace

TotalPositivityCertificate is_totally_positive(const RationalMatrix& a, std::size_t max_dim)
{
   if (a.rows() > max_dim || a.cols() > max_dim) {
      throw SizeLimitError("exhaustive minor check refused: " + std::to_string(a.rows()) + "x" +
                           std::to_string(a.cols()) + " exceeds max_dim " + std::to_string(max_dim));
   }
   TotalPositivityCertificate cert;
   const std::size_t order_max = std::min(a.rows(), a.cols());
   for (std::size_t k = 1; k <= order_max; ++k) {
      std::vector<std::size_t> rows(k);
      for (std::size_t i = 0; i < k; ++i) rows[i] = i;
      do {
         std::vector<std::size_t> cols(k);
         for (std::size_t i = 0; i < k; ++i) cols[i] = i;
         do {
            ++cert.minors_checked;
            Rational value = minor(a, rows, cols);
            if (value < 0) {
               cert.is_tp = false;
               cert.witness_rows = rows;
               cert.witness_cols = cols;
               cert.witness_minor = std::move(value);
               return cert;
            }
         } while (next_subset(cols, a.cols()));
      } while (next_subset(rows, a.rows()));
   }
   return cert;
}

}  // namespace tpb
