#include "tpb/errors.hpp"
#include "tpb/matrix.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace tpb;

namespace {

RationalMatrix bernstein3()
{
   return collocation_matrix({BasisFamily::bernstein, 3}, standard_nodes(3));
}

// Row sums computed entry by entry, no norm code involved.
Rational max_abs_row_sum(const RationalMatrix& a)
{
   Rational best = -1;
   for (std::size_t i = 0; i < a.rows(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) < 0 ? Rational(-a(i, j)) : a(i, j);
      if (s > best) best = s;
   }
   return best;
}

}  // namespace

TEST_CASE("collocation matrices")
{
   const RationalMatrix b1 = collocation_matrix({BasisFamily::bernstein, 1}, standard_nodes(1));
   CHECK(b1 == RationalMatrix{{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}});

   const RationalMatrix vandermonde =
      collocation_matrix({BasisFamily::monomial, 2}, NodeSequence({Rational(0), Rational(1, 2), Rational(1)}));
   CHECK(vandermonde == RationalMatrix{{1, 0, 0}, {1, Rational(1, 2), Rational(1, 4)}, {1, 1, 1}});

   // rectangular: more nodes than functions
   const RationalMatrix tall = collocation_matrix({BasisFamily::bernstein, 1},
                                                  NodeSequence({Rational(0), Rational(1, 2), Rational(1)}));
   CHECK(tall.rows() == 3);
   CHECK(tall.cols() == 2);

   const RationalMatrix m = bernstein3();
   const Rational kappa = cond_inf(kronecker(m, m));
   CHECK(kappa == Rational(42025, 81));
}

TEST_CASE("row sums of normalized collocation matrices are exactly one")
{
   for (int n = 1; n <= 6; ++n) {
      for (auto f : {BasisFamily::bernstein, BasisFamily::said_ball, BasisFamily::dp}) {
         const RationalMatrix m = collocation_matrix({f, n}, standard_nodes(n));
         for (std::size_t i = 0; i < m.rows(); ++i) {
            Rational s = 0;
            for (const auto& v : m.row(i)) s += v;
            CHECK(s == 1);
         }
         CHECK(inf_norm(m) == 1);
      }
   }
}

TEST_CASE("kronecker product")
{
   CHECK(kronecker(RationalMatrix::identity(2), RationalMatrix::identity(2)) == RationalMatrix::identity(4));

   const RationalMatrix a{{1, 2}, {3, 4}};
   const RationalMatrix b{{0, 1}, {1, 0}};
   const RationalMatrix k = kronecker(a, b);
   CHECK(k == RationalMatrix{{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}});

   // The Kronecker square of a collocation matrix is the tensor-product collocation matrix.
   const auto nodes = standard_nodes(3);
   const RationalMatrix m = bernstein3();
   const RationalMatrix km = kronecker(m, m);
   for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
         for (std::size_t p = 0; p < 4; ++p) {
            for (std::size_t q = 0; q < 4; ++q) {
               const Rational value = eval_basis_function({BasisFamily::bernstein, 3}, static_cast<int>(p), nodes[i]) *
                                      eval_basis_function({BasisFamily::bernstein, 3}, static_cast<int>(q), nodes[j]);
               CHECK(km(i * 4 + j, p * 4 + q) == value);
            }
         }
      }
   }

   const RationalMatrix rect = kronecker(RationalMatrix{{1, 2, 3}}, RationalMatrix{{1}, {2}});
   CHECK(rect.rows() == 2);
   CHECK(rect.cols() == 3);
}

TEST_CASE("inf norm")
{
   CHECK(inf_norm(RationalMatrix{{1, -2}, {3, 4}}) == 7);
   const RationalMatrix a{{1, -2}, {3, 4}};
   const RationalMatrix b{{0, 1}, {1, 0}};
   CHECK(inf_norm(kronecker(a, a)) == 49);
   // [[1,2],[3,4]] (x) [[1,-2],[3,4]] as in the multiplicativity example
   CHECK(inf_norm(kronecker(RationalMatrix{{1, 2}, {3, 4}}, RationalMatrix{{1, -2}, {3, 4}})) == 49);
   CHECK(inf_norm(kronecker(a, b)) == 7);
   CHECK(inf_norm(kronecker(RationalMatrix{{1, -1}, {0, 2}}, a)) == 14);
}

TEST_CASE("inverse")
{
   const RationalMatrix a{{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}};
   CHECK(inverse(a) == RationalMatrix{{2, -1}, {-1, 2}});
   CHECK(inverse(RationalMatrix::identity(5)) == RationalMatrix::identity(5));

   const RationalMatrix minv = inverse(bernstein3());
   CHECK(minv == RationalMatrix{{4, -6, 4, -1},
                                {Rational(-29, 9), Rational(59, 6), Rational(-23, 3), Rational(37, 18)},
                                {Rational(37, 18), Rational(-23, 3), Rational(59, 6), Rational(-29, 9)},
                                {-1, 4, -6, 4}});

   // needs a row swap
   CHECK(inverse(RationalMatrix{{0, 1}, {1, 0}}) == RationalMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("singular matrices report the elimination step")
{
   const RationalMatrix s{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
   try {
      inverse(s);
      FAIL("expected SingularMatrixError");
   } catch (const SingularMatrixError& e) {
      CHECK(e.step() == 2);
   }
   CHECK_THROWS_AS(cond_inf(RationalMatrix{{0, 0}, {0, 1}}), SingularMatrixError);
   CHECK_THROWS_AS(inverse(RationalMatrix{{1, 2, 3}}), DomainError);
   CHECK(determinant(s) == 0);
}

TEST_CASE("condition number")
{
   CHECK(cond_inf(RationalMatrix::identity(3)) == 1);
   CHECK(cond_inf(RationalMatrix{{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}}) == 3);
   CHECK(cond_inf(bernstein3()) == Rational(205, 9));
   CHECK(cond_inf(collocation_matrix({BasisFamily::said_ball, 4}, standard_nodes(4))) *
            cond_inf(collocation_matrix({BasisFamily::said_ball, 4}, standard_nodes(4))) ==
         6561);
}

TEST_CASE("abs and dominance")
{
   CHECK(abs_matrix(RationalMatrix{{-1, 2}, {3, -4}}) == RationalMatrix{{1, 2}, {3, 4}});
   const RationalMatrix nonneg{{1, Rational(1, 2)}, {0, 3}};
   CHECK(abs_matrix(nonneg) == nonneg);

   CHECK(dominates(RationalMatrix{{2, 2}, {2, 2}}, RationalMatrix{{1, -2}, {0, 2}}));
   CHECK_FALSE(dominates(RationalMatrix::identity(2), RationalMatrix{{2, 0}, {0, 0}}));
   const auto v = find_dominance_violation(RationalMatrix::identity(2), RationalMatrix{{1, 0}, {0, -3}});
   REQUIRE(v.has_value());
   CHECK(v->row == 1);
   CHECK(v->col == 1);
   CHECK(v->value == -3);
   CHECK_THROWS_AS(dominates(RationalMatrix::identity(2), RationalMatrix::identity(3)), DomainError);
}

TEST_CASE("total positivity")
{
   const auto good = is_totally_positive(RationalMatrix{{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}});
   CHECK(good.is_tp);
   CHECK(good.minors_checked == 5);

   const RationalMatrix bad{{1, 2}, {3, 4}};
   const auto cert = is_totally_positive(bad);
   CHECK_FALSE(cert.is_tp);
   CHECK(cert.witness_minor == -2);
   CHECK(cert.witness_rows == std::vector<std::size_t>{0, 1});
   CHECK(cert.witness_cols == std::vector<std::size_t>{0, 1});
   CHECK(minor(bad, cert.witness_rows, cert.witness_cols) < 0);

   const auto negative_entry = is_totally_positive(RationalMatrix{{1, -1}, {0, 1}});
   CHECK_FALSE(negative_entry.is_tp);
   CHECK(negative_entry.witness_minor == -1);

   CHECK_THROWS_AS(is_totally_positive(RationalMatrix::identity(9)), SizeLimitError);
   CHECK(is_totally_positive(RationalMatrix::identity(9), 9).is_tp);
}

TEST_CASE("grid collocation matrices are totally positive")
{
   testing::RationalGen gen(5);
   for (int n = 3; n <= 5; ++n) {
      const auto nodes = standard_nodes(n);
      std::vector<Rational> w(n + 1);
      for (auto& v : w) v = Rational(gen.integer(1, 1000));
      for (auto f : {BasisFamily::bernstein, BasisFamily::said_ball, BasisFamily::dp, BasisFamily::monomial}) {
         CAPTURE(n);
         CAPTURE(family_name(f));
         CHECK(is_totally_positive(collocation_matrix({f, n}, nodes)).is_tp);
         CHECK(is_totally_positive(collocation_matrix({f, n, w}, nodes)).is_tp);
      }
   }
}

TEST_CASE("property: Kronecker identities on random rational pairs")
{
   testing::RationalGen gen(314159);
   for (int trial = 0; trial < 60; ++trial) {
      const std::size_t ra = gen.integer(1, 5), ca = gen.integer(1, 5);
      const std::size_t rb = gen.integer(1, 5), cb = gen.integer(1, 5);
      const RationalMatrix a = gen.matrix(ra, ca, true);
      const RationalMatrix b = gen.matrix(rb, cb, true);
      const RationalMatrix k = kronecker(a, b);
      CHECK(inf_norm(k) == inf_norm(a) * inf_norm(b));
      CHECK(inf_norm(k) == max_abs_row_sum(k));
      CHECK(abs_matrix(k) == kronecker(abs_matrix(a), abs_matrix(b)));
   }
   for (int trial = 0; trial < 50; ++trial) {
      const std::size_t na = gen.integer(1, 4), nb = gen.integer(1, 4);
      const RationalMatrix a = gen.nonsingular(na);
      const RationalMatrix b = gen.nonsingular(nb);
      const RationalMatrix k = kronecker(a, b);
      const RationalMatrix kinv = inverse(k);
      CHECK(kinv == kronecker(inverse(a), inverse(b)));
      CHECK(k * kinv == RationalMatrix::identity(na * nb));
      CHECK(a * inverse(a) == RationalMatrix::identity(na));
      CHECK(cond_inf(k) == cond_inf(a) * cond_inf(b));
   }
}

TEST_CASE("property: dominance is reflexive on nonnegative matrices")
{
   testing::RationalGen gen(8);
   for (int trial = 0; trial < 20; ++trial) {
      const RationalMatrix a = abs_matrix(gen.matrix(3, 4));
      const RationalMatrix c = gen.matrix(3, 4);
      CHECK(dominates(a, a));
      if (dominates(abs_matrix(c), a) && dominates(a, c)) CHECK(abs_matrix(c) == a);
   }
}
