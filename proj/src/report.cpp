#include "tpb/experiments.hpp"

#include "tpb/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace tpb {

namespace {

using nlohmann::ordered_json;

bool wants(const Report& report, int table)
{
   return std::find(report.tables.begin(), report.tables.end(), table) != report.tables.end();
}

const TableRow* find_row(const std::vector<TableRow>& rows, int degree, const std::string& label)
{
   for (const auto& row : rows) {
      if (row.degree == degree && row.family_label == label) return &row;
   }
   return nullptr;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
   std::string out;
   for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += sep;
      out += parts[i];
   }
   return out;
}

std::string join_rationals(const std::vector<Rational>& v, const std::string& sep)
{
   std::vector<std::string> parts;
   for (const auto& q : v) parts.push_back(to_string(q));
   return join(parts, sep);
}

std::vector<std::string> labels_in_order(const std::vector<TableRow>& rows)
{
   std::vector<std::string> labels;
   for (const auto& row : rows) {
      if (std::find(labels.begin(), labels.end(), row.family_label) == labels.end()) {
         labels.push_back(row.family_label);
      }
   }
   return labels;
}

std::string dp_note(const PlainTables& plain)
{
   std::string note = std::string(dp_variant_name(plain.dp_variant));
   if (!plain.golden_checked) return note + " (no reference values for these degrees)";
   return note + (plain.golden_match() ? " (matches reference values)" : " (reference mismatch)");
}

// ---- markdown ---------------------------------------------------------------

void md_spectral_table(std::ostringstream& os, const std::vector<TableRow>& rows,
                       const std::vector<int>& degrees, const std::vector<std::string>& labels)
{
   os << "| n |";
   for (const auto& l : labels) os << " " << l << " lambda_min | " << l << " sigma_min |";
   os << "\n|---|";
   for (std::size_t i = 0; i < labels.size(); ++i) os << "---|---|";
   os << "\n";
   for (int n : degrees) {
      os << "| " << n << " |";
      for (const auto& l : labels) {
         const TableRow* row = find_row(rows, n, l);
         const bool has = row && row->lambda_min && row->sigma_min;
         os << " " << (has ? row->lambda_min->decimal : "-") << " | "
            << (has ? row->sigma_min->decimal : "-") << " |";
      }
      os << "\n";
   }
}

void md_kappa_table(std::ostringstream& os, const std::vector<TableRow>& rows,
                    const std::vector<int>& degrees, const std::vector<std::string>& labels)
{
   os << "| n |";
   for (const auto& l : labels) os << " " << l << " |";
   os << "\n|---|";
   for (std::size_t i = 0; i < labels.size(); ++i) os << "---|";
   os << "\n";
   for (int n : degrees) {
      os << "| " << n << " |";
      for (const auto& l : labels) {
         const TableRow* row = find_row(rows, n, l);
         os << " " << (row ? row->kappa_decimal : "-") << " |";
      }
      os << "\n";
   }
}

std::string render_md(const Report& report)
{
   std::ostringstream os;
   const auto& cfg = report.config;
   os << "# Tensor-product collocation conditioning\n\n";
   os << "- degrees: ";
   for (std::size_t i = 0; i < cfg.degrees.size(); ++i) os << (i ? "," : "") << cfg.degrees[i];
   os << "\n- seed: " << cfg.seed << "\n";
   if (report.plain) os << "- dp_variant: " << dp_note(*report.plain) << "\n";
   os << "\n";

   if (report.plain) {
      const auto labels = labels_in_order(report.plain->rows);
      if (wants(report, 1)) {
         os << "## Table 1: minimal eigenvalue and singular value of X (x) X\n\n";
         md_spectral_table(os, report.plain->rows, cfg.degrees, labels);
         os << "\n";
      }
      if (wants(report, 2)) {
         os << "## Table 2: infinity condition number of X (x) X\n\n";
         md_kappa_table(os, report.plain->rows, cfg.degrees, labels);
         os << "\n";
      }
      for (const auto& m : report.plain->mismatches) os << "- mismatch: " << m << "\n";
      if (!report.plain->mismatches.empty()) os << "\n";
   }

   if (!report.rational.empty()) {
      std::vector<TableRow> rows;
      for (const auto& d : report.rational) rows.insert(rows.end(), d.rows.begin(), d.rows.end());
      if (wants(report, 3)) {
         std::vector<std::string> labels{"M_T", "B1_T"};
         if (cfg.full) labels.push_back("B2_T");
         labels.push_back("B3_T");
         os << "## Table 3: minimal eigenvalue and singular value, rational bases\n\n";
         md_spectral_table(os, rows, cfg.degrees, labels);
         os << "\n";
      }
      if (wants(report, 4)) {
         os << "## Table 4: infinity condition number, rational bases\n\n";
         md_kappa_table(os, rows, cfg.degrees, {"M_T", "B1_T", "B2_T", "B3_T"});
         os << "\n";
      }
      os << "## Weights\n\n";
      for (const auto& d : report.rational) {
         const auto& w = d.search.weights;
         os << "- n=" << d.degree << " (draws " << d.search.draws << ")\n";
         os << "  - bernstein: " << join_rationals(w.bernstein, ", ") << "\n";
         os << "  - said-ball: " << join_rationals(w.said_ball, ", ") << "\n";
         os << "  - dp: " << join_rationals(w.dp, ", ") << "\n";
         os << "  - monomial: " << join_rationals(w.monomial, ", ") << "\n";
      }
      os << "\n";
   }

   if (!report.verdicts.empty()) {
      os << "## Verdicts\n\n| part | n | variant | pair | outcome | detail |\n|---|---|---|---|---|---|\n";
      for (const auto& v : report.verdicts) {
         os << "| " << part_name(v.part) << " | " << v.degree << " | " << (v.rational ? "rational" : "plain")
            << " | " << v.ntp_label << " vs " << v.bbasis_label << " | " << outcome_name(v.outcome) << " | "
            << v.witness << " |\n";
      }
   }
   return os.str();
}

// ---- csv ---------------------------------------------------------------------

std::vector<CsvRecord> csv_records(const Report& report)
{
   std::vector<CsvRecord> out;
   if (report.plain) out.push_back({"meta", "", "dp_variant", "", std::string(dp_variant_name(report.plain->dp_variant)), "", "", ""});
   out.push_back({"meta", "", "seed", "", std::to_string(report.config.seed), "", "", ""});

   auto emit_rows = [&](const std::string& section, const std::vector<TableRow>& rows, bool spectral,
                        bool kappa) {
      for (const auto& row : rows) {
         const std::string n = std::to_string(row.degree);
         if (spectral && row.lambda_min) {
            out.push_back({section, n, row.family_label, "lambda_min", row.lambda_min->decimal, "",
                           to_string(row.lambda_min->enclosure.low), to_string(row.lambda_min->enclosure.high)});
         }
         if (spectral && row.sigma_min) {
            out.push_back({section, n, row.family_label, "sigma_min", row.sigma_min->decimal, "",
                           to_string(row.sigma_min->enclosure.low), to_string(row.sigma_min->enclosure.high)});
         }
         if (kappa) {
            out.push_back({section, n, row.family_label, "kappa_inf", row.kappa_decimal, to_string(row.kappa_inf), "", ""});
         }
      }
   };

   if (report.plain) emit_rows("plain", report.plain->rows, wants(report, 1), wants(report, 2));
   for (const auto& d : report.rational) {
      std::vector<TableRow> rows = d.rows;
      if (!report.config.full) {
         for (auto& r : rows) {
            if (r.family_label == "B2_T") {
               r.lambda_min.reset();
               r.sigma_min.reset();
            }
         }
      }
      emit_rows("rational", rows, wants(report, 3), wants(report, 4));
      const std::string n = std::to_string(d.degree);
      const auto& w = d.search.weights;
      out.push_back({"weights", n, "bernstein", "w", std::to_string(d.search.draws), join_rationals(w.bernstein, ";"), "", ""});
      out.push_back({"weights", n, "said-ball", "w", "", join_rationals(w.said_ball, ";"), "", ""});
      out.push_back({"weights", n, "dp", "w", "", join_rationals(w.dp, ";"), "", ""});
      out.push_back({"weights", n, "monomial", "w", "", join_rationals(w.monomial, ";"), "", ""});
   }
   for (const auto& v : report.verdicts) {
      out.push_back({v.rational ? "verdict_rational" : "verdict_plain", std::to_string(v.degree),
                     v.ntp_label + " vs " + v.bbasis_label, std::string(part_name(v.part)),
                     std::string(outcome_name(v.outcome)), "", "", ""});
   }
   return out;
}

// ---- json --------------------------------------------------------------------

ordered_json exact_json(const Rational& q)
{
   return {{"num", q.get_num().get_str(10)}, {"den", q.get_den().get_str(10)}};
}

ordered_json exact_list(const std::vector<Rational>& v)
{
   ordered_json a = ordered_json::array();
   for (const auto& q : v) a.push_back(exact_json(q));
   return a;
}

ordered_json cell_json(const SpectralCell& c)
{
   return {{"decimal", c.decimal}, {"low", exact_json(c.enclosure.low)}, {"high", exact_json(c.enclosure.high)}};
}

ordered_json row_json(const std::string& table, const TableRow& row, bool spectral)
{
   ordered_json j;
   j["table"] = table;
   j["degree"] = row.degree;
   j["family"] = row.family_label;
   j["basis"] = std::string(family_name(row.spec.family));
   j["kappa_inf"] = {{"exact", exact_json(row.kappa_inf)}, {"decimal", row.kappa_decimal}};
   if (spectral && row.lambda_min) j["lambda_min"] = cell_json(*row.lambda_min);
   if (spectral && row.sigma_min) j["sigma_min"] = cell_json(*row.sigma_min);
   return j;
}

std::string render_json(const Report& report)
{
   const auto& cfg = report.config;
   ordered_json doc;
   ordered_json config;
   config["degrees"] = cfg.degrees;
   config["families"] = ordered_json::array();
   for (auto f : cfg.families) config["families"].push_back(std::string(family_name(f)));
   config["seed"] = cfg.seed;
   config["weight_lo"] = cfg.weight_lo;
   config["weight_hi"] = cfg.weight_hi;
   config["max_iter"] = cfg.max_iter;
   config["tol"] = exact_json(cfg.tol);
   config["sig_digits_table1"] = cfg.sig_digits_table1;
   config["sig_digits_table2"] = cfg.sig_digits_table2;
   config["tables"] = report.tables;
   doc["config"] = config;

   if (!report.rational.empty()) {
      ordered_json weights = ordered_json::array();
      for (const auto& d : report.rational) {
         const auto& w = d.search.weights;
         weights.push_back({{"degree", d.degree},
                            {"draws", d.search.draws},
                            {"bernstein", exact_list(w.bernstein)},
                            {"said_ball", exact_list(w.said_ball)},
                            {"dp", exact_list(w.dp)},
                            {"monomial", exact_list(w.monomial)}});
      }
      doc["weights"] = weights;
   }

   ordered_json rows = ordered_json::array();
   if (report.plain) {
      for (const auto& row : report.plain->rows) rows.push_back(row_json("plain", row, true));
   }
   for (const auto& d : report.rational) {
      for (const auto& row : d.rows) {
         rows.push_back(row_json("rational", row, cfg.full || row.family_label != "B2_T"));
      }
   }
   doc["rows"] = rows;

   ordered_json verdicts = ordered_json::array();
   for (const auto& v : report.verdicts) {
      verdicts.push_back({{"part", std::string(part_name(v.part))},
                          {"degree", v.degree},
                          {"variant", v.rational ? "rational" : "plain"},
                          {"ntp", v.ntp_label},
                          {"b_basis", v.bbasis_label},
                          {"outcome", std::string(outcome_name(v.outcome))},
                          {"holds", v.holds()},
                          {"witness", v.witness}});
   }
   doc["verdicts"] = verdicts;

   if (report.plain) {
      doc["dp_variant"] = std::string(dp_variant_name(report.plain->dp_variant));
      doc["golden_mismatches"] = report.plain->mismatches;
   } else {
      doc["dp_variant"] = nullptr;
   }
   return doc.dump(2) + "\n";
}

}  // namespace

std::string render_csv(const std::vector<CsvRecord>& records)
{
   std::string out = "section,degree,family,metric,decimal,exact,low,high\n";
   for (const auto& r : records) {
      out += r.section + "," + r.degree + "," + r.family + "," + r.metric + "," + r.decimal + "," + r.exact +
             "," + r.low + "," + r.high + "\n";
   }
   return out;
}

std::vector<CsvRecord> parse_csv(const std::string& text)
{
   std::vector<CsvRecord> out;
   std::istringstream in(text);
   std::string line;
   bool header = true;
   while (std::getline(in, line)) {
      if (header) {
         header = false;
         continue;
      }
      if (line.empty()) continue;
      std::vector<std::string> fields;
      std::string field;
      std::istringstream ls(line);
      while (std::getline(ls, field, ',')) fields.push_back(field);
      if (!line.empty() && line.back() == ',') fields.emplace_back();
      if (fields.size() != 8) throw DomainError("csv record does not have 8 fields: " + line);
      out.push_back({fields[0], fields[1], fields[2], fields[3], fields[4], fields[5], fields[6], fields[7]});
   }
   return out;
}

std::string render_report(const Report& report, OutputFormat format)
{
   switch (format) {
   case OutputFormat::md: return render_md(report);
   case OutputFormat::csv: return render_csv(csv_records(report));
   case OutputFormat::json: return render_json(report);
   }
   return {};
}

}  // namespace tpb
