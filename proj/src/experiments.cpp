#include "tpb/experiments.hpp"

#include "tpb/decimal.hpp"
#include "tpb/errors.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace tpb {

void validate(const ExperimentConfig& config)
{
   if (config.degrees.empty()) throw DomainError("experiment grid needs at least one degree");
   for (int n : config.degrees) {
      if (n < 1) throw DomainError("experiment degrees must be >= 1");
   }
   if (config.weight_lo < 1 || config.weight_lo > config.weight_hi) {
      throw DomainError("weight range must satisfy 1 <= lo <= hi");
   }
   if (config.max_iter < 1) throw DomainError("max_iter must be >= 1");
   if (config.tol <= 0) throw DomainError("tolerance must be positive");
   if (config.sig_digits_table1 < 1 || config.sig_digits_table2 < 1) {
      throw DomainError("significant digits must be >= 1");
   }
}

namespace {

const Rational& tightening_factor()
{
   static const Rational f(Integer(1), pow10(10));
   return f;
}

constexpr int max_tightenings = 3;

std::string plain_label(BasisFamily family)
{
   switch (family) {
   case BasisFamily::bernstein: return "M";
   case BasisFamily::said_ball: return "B1";
   case BasisFamily::dp: return "B2";
   case BasisFamily::monomial: return "B3";
   }
   return "?";
}

std::string rational_label(BasisFamily family) { return plain_label(family) + "_T"; }

// Renders the Kronecker-square spectral values, tightening the factor enclosures when a
// value sits too close to a rounding boundary.
void fill_spectral(TableRow& row, const RationalMatrix& x, const ExperimentConfig& config)
{
   const int sig = config.sig_digits_table1;
   Rational tol = config.tol;
   for (int attempt = 0;; ++attempt) {
      const SpectralReport factor = spectral_report(x, tol);
      const SpectralReport kron = kron_min_spectral(factor, factor);

      const long e = decimal_exponent(kron.sigma_min_squared.high);
      const unsigned frac = static_cast<unsigned>(sig + 15 + std::max(0L, -e / 2 + 1));
      const RationalInterval sigma = sqrt_interval(kron.sigma_min_squared, frac);

      auto lambda_text = render_interval(kron.lambda_min, sig);
      auto sigma_text = render_interval(sigma, sig);
      if ((lambda_text && sigma_text) || attempt == max_tightenings) {
         auto midpoint = [sig](const RationalInterval& i) {
            return render_scientific((i.low + i.high) / 2, sig);
         };
         row.lambda_min = SpectralCell{kron.lambda_min, lambda_text.value_or(midpoint(kron.lambda_min))};
         row.sigma_min = SpectralCell{sigma, sigma_text.value_or(midpoint(sigma))};
         return;
      }
      tol *= tightening_factor();
   }
}

}  // namespace

TableRow compute_row(const BasisSpec& spec, std::string label, const ExperimentConfig& config,
                     bool with_spectral)
{
   TableRow row;
   row.degree = spec.degree;
   row.family_label = std::move(label);
   row.spec = spec;

   const RationalMatrix x = collocation_matrix(spec, standard_nodes(spec.degree));
   const Rational kappa = cond_inf(x);
   row.kappa_inf = kappa * kappa;
   row.kappa_decimal = render_scientific(row.kappa_inf, config.sig_digits_table2);
   if (with_spectral) fill_spectral(row, x, config);
   return row;
}

const std::vector<GoldenRow>& golden_tables()
{
   static const std::vector<GoldenRow> rows{
      {3, {"2.30e-03", "8.28e-04", "3.23e-04"}, {"2.19e-03", "8.28e-04", "3.20e-04"},
       {"5.1883e+02", "1.7361e+03", "7.1797e+03"}},
      {4, {"3.43e-04", "2.17e-04", "1.92e-05"}, {"3.23e-04", "1.97e-04", "1.11e-05"},
       {"3.9690e+03", "6.5610e+03", "1.6080e+05"}},
      {5, {"5.10e-05", "1.04e-05", "3.54e-07"}, {"4.78e-05", "1.03e-05", "2.77e-07"},
       {"2.5264e+04", "1.3949e+05", "6.0028e+06"}},
   };
   return rows;
}

namespace {

int golden_column(BasisFamily family)
{
   switch (family) {
   case BasisFamily::bernstein: return 0;
   case BasisFamily::said_ball: return 1;
   case BasisFamily::dp: return 2;
   default: return -1;
   }
}

// Appends one message per value that differs from the reference strings.
bool check_golden(const TableRow& row, std::vector<std::string>& mismatches)
{
   const int col = golden_column(row.spec.family);
   if (col < 0) return false;
   const auto& golden = golden_tables();
   auto it = std::find_if(golden.begin(), golden.end(),
                          [&](const GoldenRow& g) { return g.degree == row.degree; });
   if (it == golden.end()) return false;

   auto compare = [&](const char* metric, const std::string& got, const char* want) {
      if (got != want) {
         mismatches.push_back("n=" + std::to_string(row.degree) + " " + row.family_label + " " +
                              metric + ": got " + got + ", expected " + want);
      }
   };
   compare("kappa_inf", row.kappa_decimal, it->kappa_inf[col]);
   if (row.lambda_min) compare("lambda_min", row.lambda_min->decimal, it->lambda_min[col]);
   if (row.sigma_min) compare("sigma_min", row.sigma_min->decimal, it->sigma_min[col]);
   return true;
}

}  // namespace

PlainTables run_table_1_2(const ExperimentConfig& config)
{
   validate(config);
   const bool golden_precision = config.sig_digits_table1 == 3 && config.sig_digits_table2 == 5;
   const DpVariant first = config.dp_mode == DpMode::literal ? DpVariant::literal : DpVariant::corrected;

   PlainTables tables;
   tables.dp_variant = first;
   for (int n : config.degrees) {
      for (BasisFamily family : config.families) {
         BasisSpec spec{family, n};
         spec.dp_variant = first;
         tables.rows.push_back(compute_row(spec, plain_label(family), config));
      }
   }
   if (!golden_precision) return tables;

   auto collect = [&](const std::vector<TableRow>& rows, bool dp_only) {
      std::vector<std::string> out;
      for (const auto& row : rows) {
         if (dp_only && row.spec.family != BasisFamily::dp) continue;
         if (check_golden(row, out)) tables.golden_checked = true;
      }
      return out;
   };

   tables.mismatches = collect(tables.rows, false);
   const bool dp_mismatch = !collect(tables.rows, true).empty();
   if (config.dp_mode == DpMode::auto_detect && dp_mismatch) {
      std::vector<TableRow> alternative = tables.rows;
      for (auto& row : alternative) {
         if (row.spec.family != BasisFamily::dp) continue;
         BasisSpec spec = row.spec;
         spec.dp_variant = DpVariant::literal;
         row = compute_row(spec, row.family_label, config);
      }
      if (collect(alternative, true).empty()) {
         tables.rows = std::move(alternative);
         tables.dp_variant = DpVariant::literal;
         tables.mismatches = collect(tables.rows, false);
      }
   }
   return tables;
}

WeightSearchResult rational_weights(const ExperimentConfig& config, int degree)
{
   using Key = std::tuple<int, std::uint64_t, std::int64_t, std::int64_t, std::uint64_t>;
   static std::mutex mutex;
   static std::map<Key, WeightSearchResult> cache;

   const Key key{degree, config.seed, config.weight_lo, config.weight_hi, config.max_iter};
   {
      std::lock_guard lock(mutex);
      if (auto it = cache.find(key); it != cache.end()) return it->second;
   }
   WeightSearchResult result =
      search_positive_weights(degree, config.weight_lo, config.weight_hi, config.seed, config.max_iter);
   std::lock_guard lock(mutex);
   cache.emplace(key, result);
   return result;
}

namespace {

struct RationalSpecs {
   BasisSpec bernstein, said_ball, dp, monomial;
};

RationalSpecs rational_specs(int n, const WeightConversionResult& w)
{
   return {
      BasisSpec{BasisFamily::bernstein, n, w.bernstein},
      BasisSpec{BasisFamily::said_ball, n, w.said_ball},
      BasisSpec{BasisFamily::dp, n, w.dp},
      BasisSpec{BasisFamily::monomial, n, w.monomial},
   };
}

}  // namespace

std::vector<RationalDegree> run_table_3_4(const ExperimentConfig& config)
{
   validate(config);
   std::vector<RationalDegree> out;
   for (int n : config.degrees) {
      RationalDegree entry;
      entry.degree = n;
      entry.search = rational_weights(config, n);
      const RationalSpecs specs = rational_specs(n, entry.search.weights);
      entry.rows.push_back(compute_row(specs.bernstein, rational_label(BasisFamily::bernstein), config));
      entry.rows.push_back(compute_row(specs.said_ball, rational_label(BasisFamily::said_ball), config));
      entry.rows.push_back(compute_row(specs.dp, rational_label(BasisFamily::dp), config, config.full));
      entry.rows.push_back(compute_row(specs.monomial, rational_label(BasisFamily::monomial), config));
      out.push_back(std::move(entry));
   }
   return out;
}

std::string_view part_name(TheoremPart part)
{
   switch (part) {
   case TheoremPart::dominance: return "dominance";
   case TheoremPart::spectral_ordering: return "spectral_ordering";
   case TheoremPart::conditioning_ordering: return "conditioning_ordering";
   }
   return "?";
}

std::string_view outcome_name(Outcome outcome)
{
   switch (outcome) {
   case Outcome::holds: return "holds";
   case Outcome::fails: return "fails";
   case Outcome::indeterminate: return "indeterminate";
   }
   return "?";
}

Outcome certified_ge(const RationalInterval& lhs, const RationalInterval& rhs)
{
   if (lhs.low >= rhs.high) return Outcome::holds;
   if (lhs.high < rhs.low) return Outcome::fails;
   return Outcome::indeterminate;
}

namespace {

std::string show(const Rational& q) { return render_scientific(q, 6); }

std::string show(const RationalInterval& i) { return "[" + show(i.low) + ", " + show(i.high) + "]"; }

Outcome combine(Outcome a, Outcome b)
{
   if (a == Outcome::fails || b == Outcome::fails) return Outcome::fails;
   if (a == Outcome::indeterminate || b == Outcome::indeterminate) return Outcome::indeterminate;
   return Outcome::holds;
}

}  // namespace

std::vector<TheoremVerdict> verify_pair(const RationalMatrix& ntp, const RationalMatrix& bbasis,
                                        TheoremVerdict tag, std::span<const TheoremPart> parts,
                                        const Rational& tol)
{
   if (!ntp.square() || ntp.rows() != bbasis.rows() || ntp.cols() != bbasis.cols()) {
      throw DomainError("verify_pair needs square matrices of equal size");
   }
   const bool need_inverse = std::any_of(parts.begin(), parts.end(), [](TheoremPart p) {
      return p == TheoremPart::dominance || p == TheoremPart::conditioning_ordering;
   });
   const RationalMatrix kron_a = kronecker(ntp, ntp);
   const RationalMatrix kron_m = kronecker(bbasis, bbasis);
   RationalMatrix inv_a, inv_m;
   if (need_inverse) {
      inv_a = inverse(kron_a);
      inv_m = inverse(kron_m);
   }

   std::vector<TheoremVerdict> out;
   for (TheoremPart part : parts) {
      TheoremVerdict v = tag;
      v.part = part;
      switch (part) {
      case TheoremPart::dominance: {
         const auto violation = find_dominance_violation(abs_matrix(inv_a), inv_m);
         v.outcome = violation ? Outcome::fails : Outcome::holds;
         if (violation) {
            v.witness = "entry (" + std::to_string(violation->row) + "," + std::to_string(violation->col) +
                        "): |" + to_string(violation->value) + "| > " + to_string(violation->bound);
         }
         break;
      }
      case TheoremPart::conditioning_ordering: {
         const Rational kappa_m = inf_norm(kron_m) * inf_norm(inv_m);
         const Rational kappa_a = inf_norm(kron_a) * inf_norm(inv_a);
         v.outcome = kappa_m <= kappa_a ? Outcome::holds : Outcome::fails;
         v.witness = "kappa(M)=" + show(kappa_m) + " kappa(A)=" + show(kappa_a);
         break;
      }
      case TheoremPart::spectral_ordering: {
         if (ntp == bbasis) {
            v.outcome = Outcome::holds;
            v.witness = "identical matrices";
            break;
         }
         Rational t = tol;
         for (int attempt = 0;; ++attempt) {
            const SpectralReport ra = spectral_report(ntp, t);
            const SpectralReport rm = spectral_report(bbasis, t);
            const SpectralReport ka = kron_min_spectral(ra, ra);
            const SpectralReport km = kron_min_spectral(rm, rm);
            v.outcome = combine(certified_ge(km.lambda_min, ka.lambda_min),
                                certified_ge(km.sigma_min_squared, ka.sigma_min_squared));
            v.witness = "lambda(M)=" + show(km.lambda_min) + " lambda(A)=" + show(ka.lambda_min) +
                        " sigma^2(M)=" + show(km.sigma_min_squared) +
                        " sigma^2(A)=" + show(ka.sigma_min_squared);
            if (v.outcome != Outcome::indeterminate || attempt == max_tightenings) break;
            t *= tightening_factor();
         }
         break;
      }
      }
      out.push_back(std::move(v));
   }
   return out;
}

std::vector<TheoremVerdict> verify_theorem_1(const ExperimentConfig& config, const VerifyOptions& options)
{
   validate(config);
   const DpVariant variant = config.dp_mode == DpMode::literal ? DpVariant::literal : DpVariant::corrected;
   std::vector<TheoremVerdict> out;

   for (int n : config.degrees) {
      const NodeSequence nodes = standard_nodes(n);
      if (options.plain) {
         const RationalMatrix m = collocation_matrix(BasisSpec{BasisFamily::bernstein, n}, nodes);
         for (BasisFamily family : config.families) {
            BasisSpec spec{family, n};
            spec.dp_variant = variant;
            TheoremVerdict tag;
            tag.ntp_label = plain_label(family);
            tag.bbasis_label = "M";
            tag.degree = n;
            auto verdicts = verify_pair(collocation_matrix(spec, nodes), m, tag, options.parts, config.tol);
            out.insert(out.end(), verdicts.begin(), verdicts.end());
         }
      }
      if (options.rational) {
         const RationalSpecs specs = rational_specs(n, rational_weights(config, n).weights);
         const RationalMatrix m = collocation_matrix(specs.bernstein, nodes);
         for (const BasisSpec* spec : {&specs.said_ball, &specs.dp, &specs.monomial}) {
            TheoremVerdict tag;
            tag.ntp_label = rational_label(spec->family);
            tag.bbasis_label = "M_T";
            tag.degree = n;
            tag.rational = true;
            auto verdicts = verify_pair(collocation_matrix(*spec, nodes), m, tag, options.parts, config.tol);
            out.insert(out.end(), verdicts.begin(), verdicts.end());
         }
      }
   }
   return out;
}

}  // namespace tpb
