#pragma once

// Dense exact rational linear algebra.

#include "tpb/basis.hpp"
#include "tpb/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace tpb {

class RationalMatrix {
public:
   RationalMatrix() = default;
   RationalMatrix(std::size_t rows, std::size_t cols);
   RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
   // Row-major nested initializer, e.g. {{1, 2}, {3, 4}}.
   RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

   static RationalMatrix identity(std::size_t n);

   std::size_t rows() const { return rows_; }
   std::size_t cols() const { return cols_; }
   bool square() const { return rows_ == cols_; }

   Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
   const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

   std::span<const Rational> row(std::size_t i) const
   {
      return {entries_.data() + i * cols_, cols_};
   }
   std::span<const Rational> entries() const { return entries_; }

   RationalMatrix transpose() const;

   friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
   std::size_t rows_ = 0;
   std::size_t cols_ = 0;
   std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);

// Entry (i,j) = u_j(nodes[i]).
RationalMatrix collocation_matrix(const BasisSpec& spec, const NodeSequence& nodes);

// Block matrix (a_ij * B).
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

Rational inf_norm(const RationalMatrix& a);

// Exact Gauss-Jordan with first-nonzero pivoting. Throws SingularMatrixError.
RationalMatrix inverse(const RationalMatrix& a);

// Solves A x = b exactly for square nonsingular A.
std::vector<Rational> solve(const RationalMatrix& a, std::span<const Rational> b);

Rational determinant(const RationalMatrix& a);

Rational cond_inf(const RationalMatrix& a);

RationalMatrix abs_matrix(const RationalMatrix& a);

// First entry where |c_ij| > a_ij.
struct DominanceViolation {
   std::size_t row;
   std::size_t col;
   Rational bound;  // a_ij
   Rational value;  // c_ij
};

std::optional<DominanceViolation> find_dominance_violation(const RationalMatrix& a,
                                                           const RationalMatrix& c);

// |c_ij| <= a_ij for every entry. Throws DomainError on shape mismatch.
bool dominates(const RationalMatrix& a, const RationalMatrix& c);

struct TotalPositivityCertificate {
   bool is_tp = true;
   // Set only when is_tp is false: index sets and value of a negative minor.
   std::vector<std::size_t> witness_rows;
   std::vector<std::size_t> witness_cols;
   Rational witness_minor;
   std::size_t minors_checked = 0;
};

// Determinant of the submatrix selected by rows x cols.
Rational minor(const RationalMatrix& a, std::span<const std::size_t> rows,
               std::span<const std::size_t> cols);

inline constexpr std::size_t default_tp_max_dim = 8;

// Checks every minor of every order. Throws SizeLimitError above max_dim.
TotalPositivityCertificate is_totally_positive(const RationalMatrix& a,
                                               std::size_t max_dim = default_tp_max_dim);

}  // namespace tpb
