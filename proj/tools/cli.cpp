#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "logmmp/divisors.hpp"
#include "logmmp/hilbert.hpp"
#include "logmmp/report.hpp"
#include "logmmp/walls.hpp"

namespace logmmp::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Left-aligned columns separated by two spaces.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

std::string curve_text(const VitalCurve& c) {
  const auto& p = c.parts();
  return "{" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]) + "," +
         std::to_string(p[3]) + "}";
}

Json curve_json(const VitalCurve& c) { return Json::parse(vital_curve_to_json(c)); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

/// "L_alpha:p/q", "B<k>", or a comma list of the g coefficients of B_2..B_{g+1}.
BoundaryDivisorClass parse_divisor(int genus, const std::string& spec) {
  if (spec.rfind("L_alpha:", 0) == 0) return make_l_alpha(genus, Rat::parse(spec.substr(8)));
  if (spec.size() > 1 && spec[0] == 'B' && spec.find(',') == std::string::npos) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(spec.substr(1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad divisor '" + spec + "'");
    }
    if (used != spec.size() - 1) throw std::invalid_argument("bad divisor '" + spec + "'");
    return BoundaryDivisorClass::unit(genus, k);
  }
  std::vector<Rat> coeffs;
  for (const auto& part : split(spec, ',')) coeffs.push_back(Rat::parse(part));
  return BoundaryDivisorClass(genus, std::move(coeffs));
}

std::array<int, 4> parse_curve(const std::string& spec) {
  const auto parts = split(spec, ',');
  if (parts.size() != 4) throw std::invalid_argument("--curve needs four comma-separated parts, got '" + spec + "'");
  std::array<int, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    const Rat v = Rat::parse(parts[i]);
    if (!v.is_integer()) throw std::invalid_argument("curve parts must be integers");
    out[i] = static_cast<int>(v.to_int64());
  }
  return out;
}

void emit_walls(std::ostream& out, int genus, const std::string& format) {
  const WallTable table = build_wall_table(genus);
  if (format == "json") {
    out << wall_table_to_json(table) << '\n';
  } else if (format == "csv") {
    out << wall_table_to_csv(table);
  } else {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"j", "alpha"};
    for (int k = 2; k <= genus + 1; ++k) header.push_back("B_" + std::to_string(k));
    rows.push_back(header);
    for (const auto& row : table.rows) {
      std::vector<std::string> line{std::to_string(row.j), row.alpha.str()};
      for (const auto& c : row.pullback.coeffs()) line.push_back(c.str());
      rows.push_back(std::move(line));
    }
    print_table(out, rows);
  }
}

void emit_intersect(std::ostream& out, const BoundaryDivisorClass& divisor, const VitalCurve& curve,
                    const std::string& format) {
  const Rat value = intersect(divisor, curve);
  if (format == "json") {
    Json j;
    j["genus"] = divisor.genus();
    j["curve"] = curve_json(curve);
    j["divisor"] = Json::parse(divisor_to_json(divisor));
    j["pairing"] = value.str();
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << "genus,a,b,c,d,pairing\n" << divisor.genus();
    for (int p : curve.parts()) out << ',' << p;
    out << ',' << value << '\n';
  } else {
    out << value << '\n';
  }
}

void emit_mu(std::ostream& out, const MuReport& r, const std::string& format) {
  if (format == "json") {
    out << mu_report_to_json(r) << '\n';
    return;
  }
  const std::string count = r.oracle ? std::to_string(r.oracle->count) : "";
  const std::string weight = r.oracle ? std::to_string(r.oracle->weight_sum) : "";
  if (format == "csv") {
    out << "family,b,g,m,alpha,in_stability_window,mu,classification,oracle_count,oracle_weight_sum\n"
        << to_string(r.family) << ',' << r.b << ',' << r.genus << ',' << r.m << ',' << r.alpha << ','
        << (r.in_stability_window ? "true" : "false") << ',' << r.mu << ',' << to_string(r.classification) << ','
        << count << ',' << weight << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows{
      {"family", to_string(r.family)},
      {"b", std::to_string(r.b)},
      {"g", std::to_string(r.genus)},
      {"m", r.m.str()},
      {"alpha", r.alpha.str() + (r.in_stability_window ? "" : "  (outside 8/17 < alpha < 7/10)")},
      {"mu", r.mu.str()},
      {"classification", to_string(r.classification)},
  };
  if (r.oracle) {
    const Rat closed = r.family == Family::tail ? tail_weight_closed_form(r.b, r.m) : bridge_weight_closed_form(r.b, r.m);
    rows.push_back({"oracle count", count + "  (closed form " + standard_count_closed_form(r.family, r.b, r.m).str() + ")"});
    rows.push_back({"oracle weight_sum", weight + "  (closed form " + closed.str() + ")"});
  }
  print_table(out, rows);
}

void emit_nef_scan(std::ostream& out, int genus, const Rat& alpha, int level, const std::string& format) {
  const BoundaryDivisorClass divisor = pullback_class(genus, alpha, level);
  const NefScanReport report = nef_scan(divisor);
  if (format == "json") {
    Json j;
    j["genus"] = genus;
    j["alpha"] = alpha.str();
    j["level"] = level;
    j["divisor"] = Json::parse(divisor_to_json(divisor));
    j["minimum"] = report.minimum.str();
    Json negative = Json::array();
    for (const auto& c : report.negative) {
      Json entry;
      entry["curve"] = curve_json(c);
      entry["pairing"] = intersect(divisor, c).str();
      negative.push_back(std::move(entry));
    }
    j["negative"] = std::move(negative);
    Json zero = Json::array();
    for (const auto& c : report.zero) zero.push_back(curve_json(c));
    j["zero"] = std::move(zero);
    out << j.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    out << "a,b,c,d,pairing\n";
    for (const auto& c : enumerate_vital_curves(genus)) {
      for (int p : c.parts()) out << p << ',';
      out << intersect(divisor, c) << '\n';
    }
    return;
  }
  std::vector<std::vector<std::string>> rows{{"minimum", report.minimum.str()}};
  std::string negative;
  for (const auto& c : report.negative) {
    negative += (negative.empty() ? "" : " ") + curve_text(c) + ":" + intersect(divisor, c).str();
  }
  std::string zero;
  for (const auto& c : report.zero) zero += (zero.empty() ? "" : " ") + curve_text(c);
  rows.push_back({"negative", negative.empty() ? "(none)" : negative});
  rows.push_back({"zero", zero.empty() ? "(none)" : zero});
  print_table(out, rows);
}

int emit_verify(std::ostream& out, const VerifyOptions& options, const std::string& format) {
  const VerifyReport report = run_verification(options);
  if (format == "json") {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      Json j;
      j["name"] = c.name;
      j["passed"] = c.passed;
      j["cases"] = c.cases;
      j["failure"] = c.failure;
      checks.push_back(std::move(j));
    }
    Json j;
    j["passed"] = report.passed();
    j["checks"] = std::move(checks);
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << "name,passed,cases\n";
    for (const auto& c : report.checks) out << c.name << ',' << (c.passed ? "true" : "false") << ',' << c.cases << '\n';
  } else {
    for (const auto& c : report.checks) {
      if (c.passed) {
        out << "PASS  " << c.name << " (" << c.cases << " cases)\n";
      } else {
        out << "FAIL  " << c.name << ": " << c.failure << '\n';
      }
    }
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  return report.passed() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const VerifyOptions& verify_options) {
  CLI::App app{"Exact wall, intersection and Hilbert-Mumford computations for the log MMP of hyperelliptic curves",
               "logmmp"};
  app.require_subcommand(1);

  std::string format = "table";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  };

  int genus = 0;
  auto* walls = app.add_subcommand("walls", "Critical values alpha_j and pullback classes L^[j] at each wall");
  walls->add_option("--genus", genus, "Genus g >= 2")->required();
  add_format(walls);

  std::string divisor_spec;
  std::string curve_spec;
  auto* inter = app.add_subcommand("intersect", "Pair a boundary divisor class with a vital curve");
  inter->add_option("--genus", genus, "Genus g >= 2")->required();
  inter->add_option("--divisor", divisor_spec, "L_alpha:p/q, B<k>, or coefficients of B_2..B_{g+1}")->required();
  inter->add_option("--curve", curve_spec, "Four parts a,b,c,d summing to 2g+2")->required();
  add_format(inter);

  std::string family_name;
  int b = 0;
  std::string m_text;
  std::string alpha_text;
  bool with_oracle = false;
  auto* mu_cmd = app.add_subcommand("mu", "Hilbert-Mumford index of a cuspidal tail or nodal bridge");
  mu_cmd->add_option("--family", family_name, "tail or bridge")->required()->check(CLI::IsMember({"tail", "bridge"}));
  mu_cmd->add_option("--b", b, "Genus of the tail or bridge, b >= 2")->required();
  mu_cmd->add_option("--genus", genus, "Total genus g")->required();
  auto* m_opt = mu_cmd->add_option("--m", m_text, "Hilbert point degree m (p/q)");
  auto* alpha_opt = mu_cmd->add_option("--alpha", alpha_text, "alpha (p/q); m is derived from it");
  m_opt->excludes(alpha_opt);
  mu_cmd->add_flag("--oracle", with_oracle, "Also run the brute-force standard-monomial count (integer m only)");
  add_format(mu_cmd);

  std::string scan_alpha;
  int level = 2;
  auto* scan = app.add_subcommand("nef-scan", "Pair L^[j] at alpha with every vital curve");
  scan->add_option("--genus", genus, "Genus g >= 2")->required();
  scan->add_option("--alpha", scan_alpha, "alpha (p/q)")->required();
  scan->add_option("--level", level, "Discrepancy level j, 2 <= j <= g+1 (default 2: L_alpha itself)");
  add_format(scan);

  bool deep = false;
  auto* verify = app.add_subcommand("verify", "Run the full identity and oracle battery");
  verify->add_flag("--deep", deep, "Widen the checked ranges");
  add_format(verify);

  std::vector<std::string> argv_storage{"logmmp"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (walls->parsed()) {
      emit_walls(out, genus, format);
    } else if (inter->parsed()) {
      const VitalCurve curve(genus, parse_curve(curve_spec));
      emit_intersect(out, parse_divisor(genus, divisor_spec), curve, format);
    } else if (mu_cmd->parsed()) {
      if (m_text.empty() == alpha_text.empty()) throw std::invalid_argument("give exactly one of --m or --alpha");
      const Rat m = m_text.empty() ? m_of_alpha(Rat::parse(alpha_text)) : Rat::parse(m_text);
      emit_mu(out, make_mu_report(parse_family(family_name), genus, b, m, with_oracle), format);
    } else if (scan->parsed()) {
      emit_nef_scan(out, genus, Rat::parse(scan_alpha), level, format);
    } else if (verify->parsed()) {
      VerifyOptions options = verify_options;
      options.deep = options.deep || deep;
      return emit_verify(out, options, format);
    }
  } catch (const std::logic_error& e) {
    // invalid_argument, domain_error and out_of_range all derive from logic_error
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace logmmp::cli
