#include "logmmp/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace logmmp {

namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad field '") + key + "': " + e.what());
  }
}

Json divisor_json(const BoundaryDivisorClass& divisor) {
  Json coeffs = Json::object();
  for (int k = divisor.min_index(); k <= divisor.max_index(); ++k) coeffs[std::to_string(k)] = divisor.coeff(k).str();
  Json out;
  out["genus"] = divisor.genus();
  out["coeffs"] = std::move(coeffs);
  return out;
}

BoundaryDivisorClass divisor_from(const Json& j) {
  const int genus = field<int>(j, "genus");
  const Json coeffs = field<Json>(j, "coeffs");
  if (!coeffs.is_object()) throw std::invalid_argument("'coeffs' must be an object");
  BoundaryDivisorClass out(genus);
  if (coeffs.size() != static_cast<std::size_t>(genus)) {
    throw std::invalid_argument("'coeffs' must have one entry per index 2.." + std::to_string(genus + 1));
  }
  for (int k = 2; k <= genus + 1; ++k) out.set_coeff(k, Rat::parse(field<std::string>(coeffs, std::to_string(k).c_str())));
  return out;
}

}  // namespace

std::string divisor_to_json(const BoundaryDivisorClass& divisor, int indent) { return divisor_json(divisor).dump(indent); }

BoundaryDivisorClass divisor_from_json(std::string_view text) { return divisor_from(parse(text)); }

std::string vital_curve_to_json(const VitalCurve& curve) {
  const auto& p = curve.parts();
  return Json::array({p[0], p[1], p[2], p[3]}).dump();
}

std::string wall_table_to_json(const WallTable& table, int indent) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r;
    r["j"] = row.j;
    r["alpha"] = row.alpha.str();
    r["class"] = divisor_json(row.pullback);
    rows.push_back(std::move(r));
  }
  Json out;
  out["genus"] = table.genus;
  out["rows"] = std::move(rows);
  return out.dump(indent);
}

WallTable wall_table_from_json(std::string_view text) {
  const Json j = parse(text);
  WallTable table{field<int>(j, "genus"), {}};
  for (const auto& r : field<Json>(j, "rows")) {
    table.rows.push_back(
        WallRow{field<int>(r, "j"), Rat::parse(field<std::string>(r, "alpha")), divisor_from(field<Json>(r, "class"))});
  }
  return table;
}

std::string wall_table_to_csv(const WallTable& table) {
  std::ostringstream os;
  os << "j,alpha,k,coefficient\n";
  for (const auto& row : table.rows) {
    for (int k = row.pullback.min_index(); k <= row.pullback.max_index(); ++k) {
      os << row.j << ',' << row.alpha << ',' << k << ',' << row.pullback.coeff(k) << '\n';
    }
  }
  return os.str();
}

MuReport make_mu_report(Family family, int genus, int b, const Rat& m, bool with_oracle) {
  const Rat value = mu(family, genus, b, m);
  std::optional<OracleResult> oracle;
  if (with_oracle) {
    if (!m.is_integer()) throw std::invalid_argument("the standard-monomial oracle needs an integer m, got " + m.str());
    const TestCurve curve = make_chart(family, b);
    oracle = standard_monomial_weights(curve.chart, curve.one_ps(genus), static_cast<int>(m.to_int64()));
  }
  const Rat alpha = alpha_of_m(m);
  return MuReport{family, b, genus, m, value, classify(value).classification, oracle, alpha, in_stability_window(alpha)};
}

std::string mu_report_to_json(const MuReport& report, int indent) {
  Json out;
  out["family"] = to_string(report.family);
  out["b"] = report.b;
  out["g"] = report.genus;
  out["m"] = report.m.str();
  out["mu"] = report.mu.str();
  out["classification"] = to_string(report.classification);
  if (report.oracle) {
    Json o;
    o["count"] = report.oracle->count;
    o["weight_sum"] = report.oracle->weight_sum;
    out["oracle"] = std::move(o);
  } else {
    out["oracle"] = nullptr;
  }
  out["alpha"] = report.alpha.str();
  out["in_stability_window"] = report.in_stability_window;
  return out.dump(indent);
}

MuReport mu_report_from_json(std::string_view text) {
  const Json j = parse(text);
  MuReport r{parse_family(field<std::string>(j, "family")),
             field<int>(j, "b"),
             field<int>(j, "g"),
             Rat::parse(field<std::string>(j, "m")),
             Rat::parse(field<std::string>(j, "mu")),
             Stability::stable,
             std::nullopt,
             Rat::parse(field<std::string>(j, "alpha")),
             field<bool>(j, "in_stability_window")};
  const auto cls = field<std::string>(j, "classification");
  if (cls == "stable") {
    r.classification = Stability::stable;
  } else if (cls == "strictly_semistable") {
    r.classification = Stability::strictly_semistable;
  } else if (cls == "unstable") {
    r.classification = Stability::unstable;
  } else {
    throw std::invalid_argument("unknown classification '" + cls + "'");
  }
  const Json oracle = field<Json>(j, "oracle");
  if (!oracle.is_null()) r.oracle = OracleResult{field<std::int64_t>(oracle, "count"), field<std::int64_t>(oracle, "weight_sum")};
  return r;
}

}  // namespace logmmp
