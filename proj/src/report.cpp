#include "ske/analysis/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ske {
namespace {

using OrderedJson = nlohmann::ordered_json;

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (const char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string witness_repr(const UnitaryParamsd& u) {
  return "U(" + format_number(u.theta()) + ", " + format_number(u.alpha()) + ", " +
         format_number(u.beta()) + ")";
}

OrderedJson strategy_set_json(const SkeStrategySet<double>& set) {
  OrderedJson j;
  if (const auto* s = std::get_if<Singleton<double>>(&set)) {
    j["type"] = "singleton";
    j["p"] = s->p;
  } else if (std::holds_alternative<Endpoints>(set)) {
    j["type"] = "endpoints";
  } else {
    j["type"] = "full-interval";
  }
  j["repr"] = strategy_set_repr(set);
  return j;
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) row += ',';
    row += csv_quote(fields[i]);
  }
  return row;
}

std::vector<std::string> table_fields(const ComparisonReport& r) {
  return {r.spec.label,
          format_number(r.game.a00()),
          format_number(r.game.a01()),
          format_number(r.game.a10()),
          format_number(r.game.a11()),
          strategy_set_repr(r.classical.strategies),
          format_number(r.classical.payoff),
          format_number(r.quantum.payoff),
          format_number(r.gap),
          to_string(r.classification)};
}

const std::vector<std::string>& table_header() {
  static const std::vector<std::string> header{
      "label",          "a00",           "a01",
      "a10",            "a11",           "classical_p_repr",
      "classical_payoff", "quantum_payoff", "gap",
      "classification"};
  return header;
}

}  // namespace

std::optional<ReportFormat> parse_format(std::string_view name) {
  if (name == "human") return ReportFormat::Human;
  if (name == "json-lines") return ReportFormat::JsonLines;
  if (name == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

std::string format_number(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

std::string strategy_set_repr(const SkeStrategySet<double>& set) {
  if (const auto* s = std::get_if<Singleton<double>>(&set)) return format_number(s->p);
  if (std::holds_alternative<Endpoints>(set)) return "{0,1}";
  return "[0,1]";
}

std::string csv_header() { return join_csv(table_header()); }

std::string csv_row(const ComparisonReport& report) { return join_csv(table_fields(report)); }

std::string json_record(const ComparisonReport& report) {
  OrderedJson j;
  j["label"] = report.spec.label;
  j["game"] = {{"a00", report.game.a00()},
               {"a01", report.game.a01()},
               {"a10", report.game.a10()},
               {"a11", report.game.a11()}};
  j["classical"] = {{"strategy_set", strategy_set_json(report.classical.strategies)},
                    {"payoff", report.classical.payoff},
                    {"branch", to_string(report.classical.branch)},
                    {"normalized_p", report.classical.normalized_p}};
  j["quantum"] = {{"payoff", report.quantum.payoff},
                  {"witness",
                   {{"theta", report.quantum.witness.theta()},
                    {"alpha", report.quantum.witness.alpha()},
                    {"beta", report.quantum.witness.beta()}}},
                  {"branch", to_string(report.quantum.branch)}};
  j["gap"] = report.gap;
  j["classification"] = to_string(report.classification);

  OrderedJson nash = OrderedJson::array();
  for (const NashPoint& point : report.nash_baseline) {
    nash.push_back({{"p", point.profile.row.p()},
                    {"q", point.profile.col.p()},
                    {"row_payoff", point.row_payoff},
                    {"col_payoff", point.col_payoff}});
  }
  j["nash"] = {{"degeneracy", to_string(report.nash_degeneracy)}, {"equilibria", nash}};
  return j.dump();
}

std::string json_error_record(const BatchEntry& entry) {
  OrderedJson j;
  j["line"] = entry.line_number;
  j["error"] = entry.error;
  j["kind"] = entry.malformed ? "malformed" : "asymmetric";
  return j.dump();
}

std::string human_detail(const ComparisonReport& report) {
  std::ostringstream out;
  out << "game            : [" << format_number(report.game.a00()) << ", "
      << format_number(report.game.a01()) << ", " << format_number(report.game.a10()) << ", "
      << format_number(report.game.a11()) << "]";
  if (!report.spec.label.empty()) out << "  (" << report.spec.label << ")";
  out << '\n';
  out << "classical SKE   : p = " << strategy_set_repr(report.classical.strategies)
      << "   payoff = " << format_number(report.classical.payoff)
      << "   branch = " << to_string(report.classical.branch) << '\n';
  out << "quantum SKE     : payoff = " << format_number(report.quantum.payoff)
      << "   witness = " << witness_repr(report.quantum.witness)
      << "   branch = " << to_string(report.quantum.branch) << '\n';
  out << "gap             : " << format_number(report.gap) << '\n';
  out << "classification  : " << to_string(report.classification) << '\n';
  out << "nash baseline   : ";
  if (report.nash_baseline.empty()) {
    out << "none found";
  } else {
    for (std::size_t i = 0; i < report.nash_baseline.size(); ++i) {
      const NashPoint& point = report.nash_baseline[i];
      if (i > 0) out << "; ";
      out << "((" << format_number(point.profile.row.p()) << ", "
          << format_number(1.0 - point.profile.row.p()) << "), ("
          << format_number(point.profile.col.p()) << ", "
          << format_number(1.0 - point.profile.col.p()) << ")) -> ("
          << format_number(point.row_payoff) << ", " << format_number(point.col_payoff) << ")";
    }
  }
  if (report.nash_degeneracy != NashDegeneracy::None)
    out << "  [" << to_string(report.nash_degeneracy) << "]";
  out << '\n';
  return out.str();
}

std::string human_table(const std::vector<const ComparisonReport*>& reports) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back(table_header());
  for (const ComparisonReport* report : reports) rows.push_back(table_fields(*report));

  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());

  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << row[c];
      if (c + 1 < row.size()) out << std::string(widths[c] - row[c].size(), ' ');
    }
    out << '\n';
  }
  return out.str();
}

std::string render(const SampleReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::JsonLines: {
      OrderedJson j;
      j["seed"] = report.seed;
      j["n"] = report.n;
      j["distribution"] = {{"kind", "uniform"}, {"low", report.low}, {"high", report.high}};
      j["advantaged"] = report.advantaged;
      j["advantage_fraction"] = report.advantage_fraction;
      j["mean_gap"] = report.mean_gap;
      j["ci95_halfwidth"] = report.ci95_halfwidth;
      return j.dump() + "\n";
    }
    case ReportFormat::Csv: {
      std::string out =
          "seed,n,low,high,advantaged,advantage_fraction,mean_gap,ci95_halfwidth\n";
      out += std::to_string(report.seed) + "," + std::to_string(report.n) + "," +
             format_number(report.low) + "," + format_number(report.high) + "," +
             std::to_string(report.advantaged) + "," + format_number(report.advantage_fraction) +
             "," + format_number(report.mean_gap) + "," + format_number(report.ci95_halfwidth) +
             "\n";
      return out;
    }
    case ReportFormat::Human: break;
  }
  std::ostringstream out;
  out << "samples            : " << report.n << "  (seed " << report.seed << ", payoffs uniform ["
      << format_number(report.low) << ", " << format_number(report.high) << "))\n";
  out << "advantaged games   : " << report.advantaged << '\n';
  out << "advantage fraction : " << format_number(report.advantage_fraction) << " +/- "
      << format_number(report.ci95_halfwidth) << "  (95% CI)\n";
  out << "mean gap           : " << format_number(report.mean_gap)
      << "  (over advantaged games)\n";
  return out.str();
}

std::string render(const VerifySummary& summary, ReportFormat format) {
  switch (format) {
    case ReportFormat::JsonLines: {
      OrderedJson j;
      j["n_games"] = summary.n_games;
      j["seed"] = summary.seed;
      j["tol"] = summary.tol;
      j["distribution"] = {{"kind", "uniform"}, {"low", summary.low}, {"high", summary.high}};
      j["max_classical_deviation"] = summary.max_classical_deviation;
      j["max_quantum_deviation"] = summary.max_quantum_deviation;
      j["failures"] = summary.failures;
      j["passed"] = summary.passed();
      return j.dump() + "\n";
    }
    case ReportFormat::Csv: {
      std::string out =
          "n_games,seed,tol,low,high,max_classical_deviation,max_quantum_deviation,failures,"
          "passed\n";
      out += std::to_string(summary.n_games) + "," + std::to_string(summary.seed) + "," +
             format_number(summary.tol) + "," + format_number(summary.low) + "," +
             format_number(summary.high) + "," + format_number(summary.max_classical_deviation) +
             "," + format_number(summary.max_quantum_deviation) + "," +
             std::to_string(summary.failures) + "," + (summary.passed() ? "true" : "false") + "\n";
      return out;
    }
    case ReportFormat::Human: break;
  }
  std::ostringstream out;
  out << "games checked           : " << summary.n_games << "  (seed " << summary.seed
      << ", payoffs uniform [" << format_number(summary.low) << ", " << format_number(summary.high)
      << "))\n";
  out << "max classical deviation : " << format_number(summary.max_classical_deviation) << '\n';
  out << "max quantum deviation   : " << format_number(summary.max_quantum_deviation) << '\n';
  out << "failures beyond tol     : " << summary.failures << "  (tol "
      << format_number(summary.tol) << ")\n";
  out << "result                  : " << (summary.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace ske
