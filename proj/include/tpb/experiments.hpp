#pragma once

// Experiment grid: conditioning and spectral tables for Kronecker squares of collocation
// matrices at t_i = i/(n+2), and exact/certified checks of the tensor-product
// optimality of the normalized B-basis.

#include "tpb/basis.hpp"
#include "tpb/matrix.hpp"
#include "tpb/rational.hpp"
#include "tpb/spectral.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tpb {

enum class OutputFormat { md, csv, json };

// auto_detect tries the corrected DP formula first and falls back to the literal
// one if the embedded reference values for the DP column do not match.
enum class DpMode { auto_detect, corrected, literal };

struct ExperimentConfig {
   std::vector<int> degrees{3, 4, 5};
   std::vector<BasisFamily> families{BasisFamily::bernstein, BasisFamily::said_ball, BasisFamily::dp};
   std::uint64_t seed = 42;
   std::int64_t weight_lo = 1;
   std::int64_t weight_hi = 1000;
   std::uint64_t max_iter = default_max_iter;
   Rational tol = default_tolerance();
   int sig_digits_table1 = 3;
   int sig_digits_table2 = 5;
   OutputFormat output_format = OutputFormat::md;
   DpMode dp_mode = DpMode::auto_detect;
   bool full = false;  // also report B2_T spectral values in table 3
};

// Throws DomainError for an empty/invalid grid.
void validate(const ExperimentConfig& config);

struct SpectralCell {
   RationalInterval enclosure;  // of the value itself (sigma, not sigma^2)
   std::string decimal;
};

struct TableRow {
   int degree = 0;
   std::string family_label;  // M, B1, B2 / M_T, B1_T, B2_T, B3_T
   BasisSpec spec;
   Rational kappa_inf;  // of X (x) X
   std::string kappa_decimal;
   std::optional<SpectralCell> lambda_min;
   std::optional<SpectralCell> sigma_min;
};

// Conditioning and (when with_spectral) minimal eigen/singular values of X (x) X,
// X the collocation matrix of `spec` at standard_nodes.
TableRow compute_row(const BasisSpec& spec, std::string label, const ExperimentConfig& config,
                     bool with_spectral = true);

struct PlainTables {
   std::vector<TableRow> rows;  // grid order: degree, then family
   DpVariant dp_variant = DpVariant::corrected;
   bool golden_checked = false;  // some degree had reference values
   std::vector<std::string> mismatches;
   bool golden_match() const { return mismatches.empty(); }
};

PlainTables run_table_1_2(const ExperimentConfig& config);

struct RationalDegree {
   int degree = 0;
   WeightSearchResult search;
   std::vector<TableRow> rows;  // M_T, B1_T, B2_T, B3_T
};

// Throws SearchExhaustedError when the weight search for some degree fails.
std::vector<RationalDegree> run_table_3_4(const ExperimentConfig& config);

// Cached per-degree weight search for the configured seed.
WeightSearchResult rational_weights(const ExperimentConfig& config, int degree);

// Reference strings for the plain grid, n = 3, 4, 5 in order M, B1, B2.
struct GoldenRow {
   int degree;
   const char* lambda_min[3];
   const char* sigma_min[3];
   const char* kappa_inf[3];
};
const std::vector<GoldenRow>& golden_tables();

enum class TheoremPart { dominance, spectral_ordering, conditioning_ordering };
enum class Outcome { holds, fails, indeterminate };

std::string_view part_name(TheoremPart part);
std::string_view outcome_name(Outcome outcome);

struct TheoremVerdict {
   TheoremPart part = TheoremPart::dominance;
   std::string ntp_label;     // A: the competing NTP basis
   std::string bbasis_label;  // M: the normalized B-basis
   int degree = 0;
   bool rational = false;
   Outcome outcome = Outcome::indeterminate;
   std::string witness;  // violating entry/values, or the compared values

   bool holds() const { return outcome == Outcome::holds; }
};

struct VerifyOptions {
   std::vector<TheoremPart> parts{TheoremPart::dominance, TheoremPart::spectral_ordering,
                                  TheoremPart::conditioning_ordering};
   bool plain = true;
   bool rational = false;
};

std::vector<TheoremVerdict> verify_theorem_1(const ExperimentConfig& config,
                                             const VerifyOptions& options = {});

// Checks one (A, M) pair of collocation matrices. Square matrices of equal size.
std::vector<TheoremVerdict> verify_pair(const RationalMatrix& ntp, const RationalMatrix& bbasis,
                                        TheoremVerdict tag, std::span<const TheoremPart> parts,
                                        const Rational& tol);

// Certified comparison of two positive enclosures: holds when lhs >= rhs is decided.
Outcome certified_ge(const RationalInterval& lhs, const RationalInterval& rhs);

struct Report {
   ExperimentConfig config;
   std::vector<int> tables;  // subset of {1,2,3,4}
   std::optional<PlainTables> plain;
   std::vector<RationalDegree> rational;
   std::vector<TheoremVerdict> verdicts;
};

std::string render_report(const Report& report, OutputFormat format);

struct CsvRecord {
   std::string section;
   std::string degree;
   std::string family;
   std::string metric;
   std::string decimal;
   std::string exact;
   std::string low;
   std::string high;
   friend bool operator==(const CsvRecord&, const CsvRecord&) = default;
};

std::vector<CsvRecord> parse_csv(const std::string& text);
std::string render_csv(const std::vector<CsvRecord>& records);

}  // namespace tpb
