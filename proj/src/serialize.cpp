#include "degen/serialize.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "degen/characters.hpp"

namespace degen {

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "latex") return OutputFormat::latex;
  throw std::invalid_argument("unknown output format: " + std::string(name));
}

Json to_json(const Cyclotomic& value) {
  if (value.order() <= 2) return value.coefficients()[0].str();
  Json coeffs = Json::array();
  for (const auto& c : value.coefficients()) coeffs.push_back(c.str());
  return Json{{"order", value.order()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_string()) return Cyclotomic(Rational::parse(j.get<std::string>()));
  if (j.is_number_integer()) return Cyclotomic(Rational::parse(j.dump()));
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("malformed exact value: " + j.dump());
  const auto order = j["order"].get<unsigned>();
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw std::invalid_argument("coefficient must be a fraction string");
    coeffs.push_back(Rational::parse(c.get<std::string>()));
  }
  return Cyclotomic::from_coefficients(order, std::move(coeffs));
}

Json to_json(const IdentityParams& p) {
  Json j;
  j["d"] = p.d;
  j["chi"] = p.chi;
  j["exponents"] = character(p.d, p.chi).exponents();
  j["lambda"] = p.lambda.str();
  j["w1"] = p.w1;
  j["w2"] = p.w2;
  j["x"] = p.x.str();
  j["L"] = p.L;
  if (p.id == IdentityId::eq18) j["n"] = p.n;
  if (p.id == IdentityId::padic_limit) {
    j["p"] = p.p;
    j["N"] = p.N;
    Json f = Json::array();
    for (const auto& c : p.f) f.push_back(c.get_str());
    j["f"] = std::move(f);
  }
  if (p.fault_degree) j["fault_degree"] = *p.fault_degree;
  return j;
}

Json to_json(const IdentityReport& r, bool with_timing) {
  Json j;
  j["identity"] = std::string(to_string(r.params.id));
  j["params"] = to_json(r.params);
  j["holds"] = r.holds;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["n"] = row.n;
    jr["lhs"] = to_json(row.lhs);
    jr["rhs"] = to_json(row.rhs);
    jr["equal"] = row.equal;
    if (row.aux) jr["aux"] = to_json(*row.aux);
    if (row.valuation) jr["valuation"] = row.valuation->str();
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  if (with_timing) j["elapsed_ns"] = r.elapsed.count();
  return j;
}

Json to_json(const std::vector<IdentityReport>& reports, bool with_timing) {
  std::size_t failed = 0;
  Json list = Json::array();
  for (const auto& r : reports) {
    if (!r.holds) ++failed;
    list.push_back(to_json(r, with_timing));
  }
  return Json{{"summary", {{"total", reports.size()}, {"failed", failed}, {"holds", failed == 0}}},
              {"reports", std::move(list)}};
}

std::string cell_text(const Json& cell) {
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_object() && cell.contains("order") && cell.contains("coeffs")) {
    std::string s = "[";
    bool first = true;
    for (const auto& c : cell["coeffs"]) {
      if (!first) s += ",";
      s += c.get<std::string>();
      first = false;
    }
    return s + "]@zeta_" + std::to_string(cell["order"].get<unsigned>());
  }
  if (cell.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < cell.size(); ++i) s += (i ? " " : "") + cell_text(cell[i]);
    return s;
  }
  return cell.dump();
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string latex_fraction(const std::string& frac) {
  const auto slash = frac.find('/');
  if (slash == std::string::npos) return frac;
  std::string num = frac.substr(0, slash);
  std::string sign;
  if (!num.empty() && num[0] == '-') {
    sign = "-";
    num.erase(0, 1);
  }
  return sign + "\\frac{" + num + "}{" + frac.substr(slash + 1) + "}";
}

std::string latex_cell(const Json& cell) {
  if (cell.is_object() && cell.contains("order") && cell.contains("coeffs")) {
    const auto m = cell["order"].get<unsigned>();
    std::string s;
    for (std::size_t i = 0; i < cell["coeffs"].size(); ++i) {
      const auto c = cell["coeffs"][i].get<std::string>();
      if (c == "0") continue;
      if (!s.empty()) s += c[0] == '-' ? " " : " + ";
      if (i == 0) s += latex_fraction(c);
      else {
        if (c == "-1") s += "-";
        else if (c != "1") s += latex_fraction(c);
        s += "\\zeta_{" + std::to_string(m) + "}";
        if (i > 1) s += "^{" + std::to_string(i) + "}";
      }
    }
    return "$" + (s.empty() ? std::string("0") : s) + "$";
  }
  if (cell.is_string()) {
    const auto s = cell.get<std::string>();
    if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-')) return "$" + latex_fraction(s) + "$";
    return s;
  }
  if (cell.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < cell.size(); ++i) s += (i ? ", " : "") + latex_cell(cell[i]);
    return s;
  }
  return cell_text(cell);
}

}  // namespace

std::string render(const Table& table, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::json: {
      Json j = table.meta;
      Json rows = Json::array();
      for (const auto& row : table.rows) {
        Json jr;
        for (std::size_t i = 0; i < table.columns.size(); ++i) jr[table.columns[i]] = row[i];
        rows.push_back(std::move(jr));
      }
      j["rows"] = std::move(rows);
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << csv_escape(table.columns[i]);
      os << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(row[i]));
        os << '\n';
      }
      break;
    }
    case OutputFormat::latex: {
      os << "% " << table.title << '\n';
      os << "\\begin{tabular}{" << std::string(table.columns.size(), 'r') << "}\n\\hline\n";
      for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? " & " : "") << table.columns[i];
      os << " \\\\\n\\hline\n";
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " & " : "") << latex_cell(row[i]);
        os << " \\\\\n";
      }
      os << "\\hline\n\\end{tabular}\n";
      break;
    }
  }
  return os.str();
}

}  // namespace degen
