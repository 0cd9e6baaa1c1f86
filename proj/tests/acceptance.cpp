// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "tpb/basis.hpp"
#include "tpb/errors.hpp"
#include "tpb/experiments.hpp"
#include "tpb/matrix.hpp"
#include "tpb/spectral.hpp"

#include "test_support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

using namespace tpb;

namespace {

struct Result {
   bool pass = true;
   std::string detail;
   std::vector<std::string> failures;

   void check(bool ok, const std::string& what)
   {
      if (!ok) {
         pass = false;
         if (failures.size() < 10) failures.push_back(what);
      }
   }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
   return std::chrono::duration<double>(Clock::now() - start).count();
}

const TableRow* find_row(const std::vector<TableRow>& rows, int degree, const std::string& label)
{
   for (const auto& r : rows) {
      if (r.degree == degree && r.family_label == label) return &r;
   }
   return nullptr;
}

const char* const plain_labels[] = {"M", "B1", "B2"};

Result table_1()
{
   Result r;
   const auto start = Clock::now();
   const PlainTables t = run_table_1_2(ExperimentConfig{});
   int matched = 0;
   for (const auto& g : golden_tables()) {
      for (int f = 0; f < 3; ++f) {
         const TableRow* row = find_row(t.rows, g.degree, plain_labels[f]);
         const std::string where = "n=" + std::to_string(g.degree) + " " + plain_labels[f];
         if (!row || !row->lambda_min || !row->sigma_min) {
            r.check(false, where + " missing");
            continue;
         }
         const bool lam = row->lambda_min->decimal == g.lambda_min[f];
         const bool sig = row->sigma_min->decimal == g.sigma_min[f];
         r.check(lam, where + " lambda " + row->lambda_min->decimal + " != " + g.lambda_min[f]);
         r.check(sig, where + " sigma " + row->sigma_min->decimal + " != " + g.sigma_min[f]);
         matched += lam + sig;
      }
   }
   const double elapsed = seconds_since(start);
   r.check(matched == 18, "matched " + std::to_string(matched) + "/18");
   r.check(elapsed < 60, "runtime over 60 s");
   std::ostringstream d;
   d << matched << "/18 values, dp_variant=" << dp_variant_name(t.dp_variant) << ", " << elapsed << " s";
   r.detail = d.str();
   return r;
}

Result table_2()
{
   Result r;
   const auto start = Clock::now();
   ExperimentConfig config;
   int matched = 0;
   DpVariant variant = DpVariant::corrected;
   // Exact kappa only; no spectral work, so the timing reflects the conditioning path alone.
   const PlainTables t = run_table_1_2(config);
   variant = t.dp_variant;
   for (const auto& g : golden_tables()) {
      for (int f = 0; f < 3; ++f) {
         BasisSpec spec{f == 0 ? BasisFamily::bernstein : f == 1 ? BasisFamily::said_ball : BasisFamily::dp, g.degree};
         spec.dp_variant = variant;
         const TableRow row = compute_row(spec, plain_labels[f], config, false);
         const TableRow* reported = find_row(t.rows, g.degree, plain_labels[f]);
         const bool ok = row.kappa_decimal == g.kappa_inf[f] && reported && reported->kappa_inf == row.kappa_inf;
         r.check(ok, "n=" + std::to_string(g.degree) + " " + plain_labels[f] + " " + row.kappa_decimal +
                        " != " + g.kappa_inf[f]);
         matched += ok;
      }
   }
   const double elapsed = seconds_since(start);
   r.check(matched == 9, "matched " + std::to_string(matched) + "/9");
   r.check(elapsed < 30, "runtime over 30 s");
   std::ostringstream d;
   d << matched << "/9 values from exact rationals, dp_variant=" << dp_variant_name(variant) << ", " << elapsed
     << " s";
   r.detail = d.str();
   return r;
}

Result tables_3_4()
{
   Result r;
   double slowest = 0;
   int grids = 0;
   for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto start = Clock::now();
      ExperimentConfig config;
      config.seed = seed;
      const auto degrees = run_table_3_4(config);
      for (const auto& d : degrees) {
         const std::string where = "seed " + std::to_string(seed) + " n=" + std::to_string(d.degree);
         r.check(d.search.weights.all_positive, where + " weights not all positive");
         const TableRow* mt = find_row(d.rows, d.degree, "M_T");
         if (!mt) {
            r.check(false, where + " missing M_T");
            continue;
         }
         for (const char* label : {"B1_T", "B2_T", "B3_T"}) {
            const TableRow* other = find_row(d.rows, d.degree, label);
            r.check(other && mt->kappa_inf <= other->kappa_inf, where + " kappa M_T > " + label);
         }
         for (const char* label : {"B1_T", "B3_T"}) {
            const TableRow* other = find_row(d.rows, d.degree, label);
            if (!other || !other->lambda_min || !mt->lambda_min) {
               r.check(false, where + " missing spectral values for " + label);
               continue;
            }
            r.check(certified_ge(mt->lambda_min->enclosure, other->lambda_min->enclosure) == Outcome::holds,
                    where + " lambda M_T < " + label);
            r.check(certified_ge(mt->sigma_min->enclosure, other->sigma_min->enclosure) == Outcome::holds,
                    where + " sigma M_T < " + label);
         }
         ++grids;
      }
      const double elapsed = seconds_since(start);
      slowest = std::max(slowest, elapsed);
      r.check(elapsed < 300, "seed " + std::to_string(seed) + " over 5 min");
   }
   std::ostringstream d;
   d << grids << " grids over seeds 1..5, slowest seed " << slowest << " s";
   r.detail = d.str();
   return r;
}

Result dominance()
{
   Result r;
   VerifyOptions options;
   options.parts = {TheoremPart::dominance};
   options.plain = true;
   options.rational = true;
   const auto verdicts = verify_theorem_1(ExperimentConfig{}, options);
   int checks = 0;
   for (const auto& v : verdicts) {
      const bool counted = v.ntp_label == "B1" || v.ntp_label == "B2" || v.ntp_label == "B1_T" || v.ntp_label == "B2_T";
      if (!counted) continue;
      ++checks;
      r.check(v.holds(), "n=" + std::to_string(v.degree) + " " + v.ntp_label + ": " + v.witness);
   }
   r.check(checks == 12, "ran " + std::to_string(checks) + " checks");
   r.detail = std::to_string(checks) + " exact dominance checks";
   return r;
}

Result identities()
{
   Result r;
   testing::RationalGen gen(20240601);
   int pairs = 0;
   for (; pairs < 60; ++pairs) {
      const std::size_t na = gen.integer(1, 4), nb = gen.integer(1, 4);
      const RationalMatrix a = gen.nonsingular(na);
      const RationalMatrix b = gen.nonsingular(nb);
      const RationalMatrix k = kronecker(a, b);
      const std::string where = "pair " + std::to_string(pairs);
      r.check(inverse(k) == kronecker(inverse(a), inverse(b)), where + " inverse identity");
      r.check(inf_norm(k) == inf_norm(a) * inf_norm(b), where + " norm identity");
      r.check(cond_inf(k) == cond_inf(a) * cond_inf(b), where + " cond identity");
   }
   r.detail = std::to_string(pairs) + " random pairs";
   return r;
}

Result basis_suite()
{
   Result r;
   testing::RationalGen gen(99);
   int evaluations = 0;
   for (int n = 1; n <= 8; ++n) {
      std::vector<Rational> w(n + 1);
      for (auto& v : w) v = Rational(gen.integer(1, 1000));
      for (auto family : {BasisFamily::bernstein, BasisFamily::said_ball, BasisFamily::dp}) {
         const BasisSpec plain{family, n};
         const BasisSpec weighted{family, n, w};
         for (int k = 0; k < 100; ++k) {
            const Rational x = gen.unit();
            for (const BasisSpec* spec : {&plain, &weighted}) {
               const auto row = eval_basis_row(*spec, x);
               Rational total = 0;
               for (const auto& v : row) {
                  total += v;
                  r.check(v >= 0, "negative value");
               }
               r.check(total == 1, "partition of unity n=" + std::to_string(n) + " " +
                                      std::string(family_name(family)));
               ++evaluations;
            }
            if (family != BasisFamily::bernstein) {
               for (int i = 0; i <= n; ++i) {
                  r.check(eval_polynomial_basis(family, n, i, x) == eval_polynomial_basis(family, n, n - i, 1 - x),
                          "symmetry n=" + std::to_string(n) + " " + std::string(family_name(family)));
               }
            }
         }
      }
   }

   int tp = 0;
   for (int n = 3; n <= 5; ++n) {
      const auto nodes = standard_nodes(n);
      for (auto family : {BasisFamily::bernstein, BasisFamily::said_ball, BasisFamily::dp}) {
         const auto cert = is_totally_positive(collocation_matrix({family, n}, nodes));
         r.check(cert.is_tp, "plain n=" + std::to_string(n) + " " + std::string(family_name(family)) + " not TP");
         ++tp;
      }
      const WeightSearchResult search = rational_weights(ExperimentConfig{}, n);
      const auto& conv = search.weights;
      const BasisSpec rational_specs[] = {{BasisFamily::bernstein, n, conv.bernstein},
                                          {BasisFamily::said_ball, n, conv.said_ball},
                                          {BasisFamily::dp, n, conv.dp},
                                          {BasisFamily::monomial, n, conv.monomial}};
      for (const auto& spec : rational_specs) {
         const auto cert = is_totally_positive(collocation_matrix(spec, nodes));
         r.check(cert.is_tp, "rational n=" + std::to_string(n) + " " + std::string(family_name(spec.family)) +
                                " not TP");
         ++tp;
      }
   }
   r.detail = std::to_string(evaluations) + " exact rows, " + std::to_string(tp) + " collocation matrices TP";
   return r;
}

bool widened_contains(const RationalInterval& enclosure, double value)
{
   const Rational v(value);
   const Rational slack(1, 1'000'000);
   return enclosure.low * (1 - slack) <= v && v <= enclosure.high * (1 + slack);
}

Result spectral_soundness()
{
   Result r;
   std::vector<TableRow> rows;
   ExperimentConfig config;
   for (int n : config.degrees) {
      for (auto family : {BasisFamily::bernstein, BasisFamily::said_ball, BasisFamily::dp}) {
         for (auto variant : {DpVariant::corrected, DpVariant::literal}) {
            if (variant == DpVariant::literal && family != BasisFamily::dp) continue;
            BasisSpec spec{family, n};
            spec.dp_variant = variant;
            rows.push_back(compute_row(spec, std::string(family_name(family)), config));
         }
      }
   }
   config.full = true;
   for (const auto& d : run_table_3_4(config)) rows.insert(rows.end(), d.rows.begin(), d.rows.end());

   int compared = 0;
   for (const auto& row : rows) {
      const RationalMatrix x = collocation_matrix(row.spec, standard_nodes(row.degree));
      const auto f = float_crosscheck(kronecker(x, x));
      const std::string where = "n=" + std::to_string(row.degree) + " " + row.family_label;
      if (!f || !row.lambda_min || !row.sigma_min) {
         r.check(false, where + " no cross-check");
         continue;
      }
      r.check(widened_contains(row.lambda_min->enclosure, f->lambda_min), where + " lambda");
      r.check(widened_contains(row.sigma_min->enclosure, f->sigma_min), where + " sigma");
      ++compared;
   }
   r.detail = std::to_string(compared) + " Kronecker squares up to 36x36, 2 values each";
   return r;
}

std::string slurp(const std::filesystem::path& p)
{
   std::ifstream in(p, std::ios::binary);
   return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Result determinism()
{
   Result r;
   const auto dir = std::filesystem::temp_directory_path() / "tpb_acceptance";
   std::filesystem::create_directories(dir);
   int compared = 0;
   for (const char* format : {"md", "csv", "json"}) {
      std::string contents[2];
      for (int run = 0; run < 2; ++run) {
         const auto path = dir / ("report_" + std::string(format) + "_" + std::to_string(run));
         // Separate processes, so nothing cached in memory can mask a difference.
         const std::string cmd = std::string("\"") + TPB_EXECUTABLE + "\" tables --seed 42 --format " + format +
                                 " --out \"" + path.string() + "\"";
         const int status = std::system(cmd.c_str());
         r.check(status == 0, std::string(format) + " run " + std::to_string(run) + " exited with " +
                                 std::to_string(status));
         contents[run] = slurp(path);
      }
      r.check(!contents[0].empty(), std::string(format) + " report empty");
      r.check(contents[0].find("Weights") != std::string::npos || std::string(format) != "md",
              "md report has no weights section");
      r.check(contents[0] == contents[1], std::string(format) + " reports differ");
      ++compared;
   }
   std::filesystem::remove_all(dir);
   r.detail = std::to_string(compared) + " report formats byte-identical across two processes, tables 1-4";
   return r;
}

}  // namespace

int main()
{
   struct Criterion {
      int id;
      const char* name;
      std::function<Result()> run;
   };
   const std::vector<Criterion> criteria{
      {1, "Table 1 reproduction", table_1},
      {2, "Table 2 reproduction", table_2},
      {3, "Tables 3-4 ordering properties", tables_3_4},
      {4, "exact dominance", dominance},
      {5, "Kronecker identity suite", identities},
      {6, "basis suite and total positivity", basis_suite},
      {7, "spectral soundness", spectral_soundness},
      {8, "determinism", determinism},
   };

   int failed = 0;
   for (const auto& c : criteria) {
      Result r;
      try {
         r = c.run();
      } catch (const std::exception& e) {
         r.pass = false;
         r.detail = std::string("exception: ") + e.what();
      }
      std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << r.detail << ")\n";
      for (const auto& f : r.failures) std::cout << "    " << f << "\n";
      std::cout.flush();
      failed += !r.pass;
   }
   return failed == 0 ? 0 : 1;
}
