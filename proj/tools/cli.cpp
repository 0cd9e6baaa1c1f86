#include "cli.hpp"

#include "tpb/basis.hpp"
#include "tpb/decimal.hpp"
#include "tpb/errors.hpp"
#include "tpb/experiments.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace tpb {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_exhausted = 3;

struct CommonOptions {
   std::vector<int> degrees{3, 4, 5};
   std::optional<std::uint64_t> seed;
   std::string format = "md";
   std::string out_path;
   std::uint64_t max_iter = default_max_iter;
   std::int64_t weight_lo = 1;
   std::int64_t weight_hi = 1000;
   std::string dp_variant = "auto";
   std::string tol;
   bool full = false;
};

void add_common(CLI::App* cmd, CommonOptions& o)
{
   cmd->add_option("--degrees", o.degrees, "Degrees n of the grid")->delimiter(',');
   cmd->add_option("--seed", o.seed, "Weight search seed (default: $TPB_SEED, else 42)");
   cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"md", "csv", "json"}));
   cmd->add_option("--out", o.out_path, "Write the report to this file instead of stdout");
   cmd->add_option("--max-iter", o.max_iter, "Weight vectors drawn before giving up");
   cmd->add_option("--weight-lo", o.weight_lo, "Smallest random Bernstein weight");
   cmd->add_option("--weight-hi", o.weight_hi, "Largest random Bernstein weight");
   cmd->add_option("--dp-variant", o.dp_variant, "Odd-degree DP middle functions")
      ->check(CLI::IsMember({"auto", "corrected", "literal"}));
   cmd->add_option("--tol", o.tol, "Enclosure width, e.g. 1/10^30 written as 1e-30");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag)
{
   if (flag) return *flag;
   if (const char* env = std::getenv("TPB_SEED"); env && *env) {
      try {
         std::size_t used = 0;
         const std::uint64_t v = std::stoull(env, &used, 10);
         if (used == std::string(env).size()) return v;
      } catch (const std::exception&) {
      }
      throw DomainError(std::string("TPB_SEED is not an unsigned integer: '") + env + "'");
   }
   return 42;
}

ExperimentConfig make_config(const CommonOptions& o)
{
   ExperimentConfig c;
   c.degrees = o.degrees;
   c.seed = resolve_seed(o.seed);
   c.max_iter = o.max_iter;
   c.weight_lo = o.weight_lo;
   c.weight_hi = o.weight_hi;
   if (!o.tol.empty()) c.tol = parse_rational(o.tol);
   c.output_format = o.format == "csv" ? OutputFormat::csv
                   : o.format == "json" ? OutputFormat::json
                                        : OutputFormat::md;
   c.dp_mode = o.dp_variant == "corrected" ? DpMode::corrected
             : o.dp_variant == "literal"   ? DpMode::literal
                                           : DpMode::auto_detect;
   c.full = o.full;
   validate(c);
   return c;
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
   if (path.empty()) {
      out << text;
      return;
   }
   std::ofstream file(path, std::ios::binary);
   if (!file) throw DomainError("cannot open output file '" + path + "'");
   file << text;
}

int run_tables(const CommonOptions& o, const std::vector<int>& which, std::ostream& out, std::ostream& err)
{
   Report report;
   report.config = make_config(o);
   report.tables = which;
   std::sort(report.tables.begin(), report.tables.end());
   report.tables.erase(std::unique(report.tables.begin(), report.tables.end()), report.tables.end());
   for (int t : report.tables) {
      if (t < 1 || t > 4) throw DomainError("--which accepts table numbers 1..4");
   }
   auto wants = [&](int t) { return std::find(report.tables.begin(), report.tables.end(), t) != report.tables.end(); };

   if (wants(1) || wants(2)) report.plain = run_table_1_2(report.config);
   if (wants(3) || wants(4)) report.rational = run_table_3_4(report.config);
   emit(render_report(report, report.config.output_format), o.out_path, out);

   if (report.plain && !report.plain->golden_match()) {
      for (const auto& m : report.plain->mismatches) err << "reference mismatch: " << m << "\n";
      return exit_failed;
   }
   return exit_ok;
}

int run_verify(const CommonOptions& o, const std::string& part, const std::string& variant, std::ostream& out,
               std::ostream& err)
{
   Report report;
   report.config = make_config(o);
   VerifyOptions options;
   if (part == "i") {
      options.parts = {TheoremPart::dominance};
   } else if (part == "ii") {
      options.parts = {TheoremPart::spectral_ordering};
   } else if (part == "iii") {
      options.parts = {TheoremPart::conditioning_ordering};
   }
   options.plain = variant != "rational";
   options.rational = variant != "plain";
   report.verdicts = verify_theorem_1(report.config, options);
   emit(render_report(report, report.config.output_format), o.out_path, out);

   int status = exit_ok;
   for (const auto& v : report.verdicts) {
      if (!v.holds()) {
         err << part_name(v.part) << " n=" << v.degree << " " << v.ntp_label << " vs " << v.bbasis_label << ": "
             << outcome_name(v.outcome) << " " << v.witness << "\n";
         status = exit_failed;
      }
   }
   return status;
}

int run_eval(const std::string& family_text, int degree, const std::string& x_text, const std::string& weights_text,
             const std::string& dp_variant, std::ostream& out)
{
   const auto family = parse_family(family_text);
   if (!family) throw DomainError("unknown basis family '" + family_text + "'");
   BasisSpec spec{*family, degree};
   spec.dp_variant = dp_variant == "literal" ? DpVariant::literal : DpVariant::corrected;
   if (!weights_text.empty()) {
      std::vector<Rational> w;
      std::size_t start = 0;
      while (start <= weights_text.size()) {
         const std::size_t comma = weights_text.find(',', start);
         w.push_back(parse_rational(weights_text.substr(start, comma - start)));
         if (comma == std::string::npos) break;
         start = comma + 1;
      }
      spec.weights = std::move(w);
   }
   const Rational x = parse_rational(x_text);
   const auto row = eval_basis_row(spec, x);
   Rational total = 0;
   for (std::size_t i = 0; i < row.size(); ++i) {
      out << i << " " << to_string(row[i]) << " " << render_scientific(row[i], 10) << "\n";
      total += row[i];
   }
   out << "sum " << to_string(total) << "\n";
   return exit_ok;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
   CLI::App app{"Exact conditioning and spectra of tensor-product polynomial bases"};
   app.require_subcommand(1);

   CommonOptions tables_opts;
   std::vector<int> which{1, 2, 3, 4};
   auto* tables = app.add_subcommand("tables", "Compute tables 1-4");
   add_common(tables, tables_opts);
   tables->add_option("--which", which, "Tables to produce")->delimiter(',');
   tables->add_flag("--full", tables_opts.full, "Also report B2_T spectral values in table 3");

   CommonOptions verify_opts;
   std::string part = "all";
   std::string variant = "plain";
   auto* verify = app.add_subcommand("verify", "Check dominance, spectral and conditioning optimality");
   add_common(verify, verify_opts);
   verify->add_option("--part", part, "Which property")->check(CLI::IsMember({"i", "ii", "iii", "all"}));
   verify->add_option("--variant", variant, "Plain bases, rational bases, or both")
      ->check(CLI::IsMember({"plain", "rational", "both"}));

   std::string family, x_text, weights_text, eval_dp = "corrected";
   int degree = 0;
   auto* eval = app.add_subcommand("eval", "Evaluate one basis row at a rational point");
   eval->add_option("--family", family, "bernstein, said-ball, dp or monomial")->required();
   eval->add_option("--degree", degree, "Degree n")->required();
   eval->add_option("--x", x_text, "Point in [0,1], e.g. 1/3")->required();
   eval->add_option("--weights", weights_text, "Comma-separated positive weights");
   eval->add_option("--dp-variant", eval_dp, "Odd-degree DP middle functions")
      ->check(CLI::IsMember({"corrected", "literal"}));

   try {
      app.parse(argc, argv);
   } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
   }

   try {
      if (*tables) return run_tables(tables_opts, which, out, err);
      if (*verify) return run_verify(verify_opts, part, variant, out, err);
      return run_eval(family, degree, x_text, weights_text, eval_dp, out);
   } catch (const SearchExhaustedError& e) {
      err << "error: " << e.what() << "\n";
      return exit_exhausted;
   } catch (const DomainError& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
   } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return exit_failed;
   }
}

}  // namespace tpb
