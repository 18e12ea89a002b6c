#include "qhh/commands.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "qhh/cochain.hpp"
#include "qhh/resolution.hpp"
#include "qhh/yoneda.hpp"

namespace qhh {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

ordered_json common_header(const char* command, const RunConfig& cfg) {
  ordered_json j;
  j["command"] = command;
  j["s"] = cfg.s;
  j["characteristic"] = cfg.characteristic;
  return j;
}

/* Shared rendering for the pass/fail commands: the report lines, then a
 * final PASS or FAIL verdict. */
CommandResult render_report(const char* command, const RunConfig& cfg,
                            std::optional<std::uint32_t> max_degree,
                            const CheckReport& report) {
  CommandResult res;
  res.exit_code = report.passed ? 0 : 1;
  switch (cfg.format) {
    case OutputFormat::text: {
      std::ostringstream os;
      os << command << ": s=" << cfg.s << " characteristic=" << cfg.characteristic;
      if (max_degree) os << " max_degree=" << *max_degree;
      os << "\n";
      for (const auto& line : report.lines) os << line << "\n";
      os << (report.passed ? "PASS" : "FAIL") << "\n";
      res.output = os.str();
      break;
    }
    case OutputFormat::json: {
      ordered_json j = common_header(command, cfg);
      if (max_degree) j["max_degree"] = *max_degree;
      j["passed"] = report.passed;
      j["detail"] = report.lines;
      res.output = dump(j);
      break;
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "status,detail\n";
      for (const auto& line : report.lines) {
        std::string status = "NOTE";
        std::string detail = line;
        if (line.rfind("FAIL: ", 0) == 0) {
          status = "FAIL";
          detail = line.substr(6);
        } else if (line.rfind("WARN: ", 0) == 0) {
          status = "WARN";
          detail = line.substr(6);
        }
        os << status << "," << csv_escape(detail) << "\n";
      }
      os << (report.passed ? "PASS" : "FAIL") << ",\n";
      res.output = os.str();
      break;
    }
  }
  return res;
}

}  // namespace

std::uint32_t effective_max_degree(const RunConfig& cfg) {
  return cfg.max_degree.value_or(3 * cfg.s + 2);
}

CommandResult run_dims(const RunConfig& cfg) {
  Workspace ws{cfg.s, FieldSpec{cfg.characteristic}};
  const std::uint32_t N = effective_max_degree(cfg);
  const DimensionTable table = dimension_table(ws, N);
  const bool has_formula = table.s >= 3;

  CommandResult res;
  res.exit_code = (has_formula && !table.all_agree) ? 1 : 0;
  switch (cfg.format) {
    case OutputFormat::text: {
      std::ostringstream os;
      os << "dims: s=" << table.s << " characteristic=" << table.characteristic
         << " max_degree=" << table.max_degree << "\n";
      os << std::setw(4) << "n" << std::setw(9) << "dim_hom" << std::setw(9)
         << "dim_ker" << std::setw(8) << "dim_im" << std::setw(13) << "hh_computed"
         << std::setw(12) << "hh_formula" << std::setw(7) << "agree" << "\n";
      for (const auto& row : table.rows) {
        os << std::setw(4) << row.n << std::setw(9) << row.dim_hom << std::setw(9)
           << row.dim_ker << std::setw(8) << row.dim_im << std::setw(13)
           << row.dim_hh_computed;
        if (row.dim_hh_formula)
          os << std::setw(12) << *row.dim_hh_formula << std::setw(7)
             << (row.agree ? "yes" : "NO");
        else
          os << std::setw(12) << "-" << std::setw(7) << "-";
        os << "\n";
      }
      if (!has_formula)
        os << "closed form not stated for s < 3; computed values only\n";
      else if (table.all_agree)
        os << "computed dimensions agree with the closed form at every degree\n";
      else
        os << "MISMATCH against the closed form (see rows marked NO)\n";
      res.output = os.str();
      break;
    }
    case OutputFormat::json: {
      ordered_json j = common_header("dims", cfg);
      j["max_degree"] = table.max_degree;
      j["rows"] = ordered_json::array();
      for (const auto& row : table.rows) {
        ordered_json r;
        r["n"] = row.n;
        r["dim_hom"] = row.dim_hom;
        r["dim_ker"] = row.dim_ker;
        r["dim_im"] = row.dim_im;
        r["dim_hh_computed"] = row.dim_hh_computed;
        if (row.dim_hh_formula) {
          r["dim_hh_formula"] = *row.dim_hh_formula;
          r["agree"] = row.agree;
        } else {
          r["dim_hh_formula"] = nullptr;
          r["agree"] = nullptr;
        }
        j["rows"].push_back(std::move(r));
      }
      j["all_agree"] = has_formula ? ordered_json(table.all_agree) : ordered_json(nullptr);
      res.output = dump(j);
      break;
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "n,dim_hom,dim_ker,dim_im,dim_hh_computed,dim_hh_formula,agree\n";
      for (const auto& row : table.rows) {
        os << row.n << "," << row.dim_hom << "," << row.dim_ker << "," << row.dim_im
           << "," << row.dim_hh_computed << ",";
        if (row.dim_hh_formula)
          os << *row.dim_hh_formula << "," << (row.agree ? "true" : "false");
        else
          os << ",";
        os << "\n";
      }
      res.output = os.str();
      break;
    }
  }
  return res;
}

CommandResult run_verify_resolution(const RunConfig& cfg) {
  const Algebra a{cfg.s, FieldSpec{cfg.characteristic}};
  const std::uint32_t N = effective_max_degree(cfg);
  CheckReport report = verify_complex(a, N);
  report.absorb(verify_exact_and_minimal(a, N));
  return render_report("verify-resolution", cfg, N, report);
}

CommandResult run_verify_bases(const RunConfig& cfg) {
  Workspace ws{cfg.s, FieldSpec{cfg.characteristic}};
  const std::uint32_t N = effective_max_degree(cfg);
  CheckReport report;
  for (std::uint32_t n = 0; n <= N; ++n)
    report.absorb(verify_stated_bases(ws, n));
  return render_report("verify-bases", cfg, N, report);
}

CommandResult run_yoneda(const RunConfig& cfg) {
  Workspace ws{cfg.s, FieldSpec{cfg.characteristic}};
  const Algebra& a = ws.algebra();
  const std::uint32_t D = ring_generator_degree(a);
  const auto table = generator_product_table(ws);
  bool all_match = true;
  for (const auto& e : table) all_match = all_match && e.matches;

  CommandResult res;
  res.exit_code = all_match ? 0 : 1;
  switch (cfg.format) {
    case OutputFormat::text: {
      std::ostringstream os;
      os << "yoneda: s=" << cfg.s << " characteristic=" << cfg.characteristic << "\n";
      os << regime_description(a) << "\n";
      for (const auto& e : table)
        os << "z_" << e.k << " * z_" << e.l << " = column sum " << e.sum
           << " in degree " << 2 * D << (e.matches ? "" : "  MISMATCH") << "\n";
      os << (all_match ? "all products match the expected column sums\n"
                       : "some products do not match\n");
      res.output = os.str();
      break;
    }
    case OutputFormat::json: {
      ordered_json j = common_header("yoneda", cfg);
      j["generator_degree"] = D;
      j["regime"] = regime_description(a);
      j["products"] = ordered_json::array();
      for (const auto& e : table) {
        ordered_json r;
        r["k"] = e.k;
        r["l"] = e.l;
        r["sum"] = e.sum;
        r["matches"] = e.matches;
        j["products"].push_back(std::move(r));
      }
      j["all_match"] = all_match;
      res.output = dump(j);
      break;
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "k,l,sum,matches\n";
      for (const auto& e : table)
        os << e.k << "," << e.l << "," << e.sum << ","
           << (e.matches ? "true" : "false") << "\n";
      res.output = os.str();
      break;
    }
  }
  return res;
}

CommandResult run_ring_check(const RunConfig& cfg) {
  Workspace ws{cfg.s, FieldSpec{cfg.characteristic}};
  CheckReport report = verify_presentation(ws);
  report.absorb(verify_lifting_equivalence(ws));
  const std::uint32_t samples[] = {1, 2};
  report.absorb(verify_nilpotence_samples(ws, samples));
  return render_report("ring-check", cfg, std::nullopt, report);
}

}  // namespace qhh
