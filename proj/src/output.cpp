#include "weave3/output.hpp"

#include <sstream>

#include "weave3/errors.hpp"
#include "weave3/weaving.hpp"

namespace weave3 {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw Error("unknown format '" + name + "'");
}

nlohmann::json record_to_json(const OutputRecord& r) {
  return nlohmann::json{{"kind", r.kind},
                        {"variable", r.variable},
                        {"offset", r.offset},
                        {"coefficients", r.coefficients},
                        {"extras", r.extras}};
}

OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord r;
  r.kind = j.at("kind").get<std::string>();
  r.variable = j.at("variable").get<std::string>();
  r.offset = j.at("offset").get<long>();
  r.coefficients = j.at("coefficients").get<std::vector<std::string>>();
  r.extras = j.at("extras");
  return r;
}

std::vector<std::string> row_to_strings(const CoeffRow& row) {
  std::vector<std::string> out;
  out.reserve(row.size());
  for (const BigInt& v : row) out.push_back(v.str());
  return out;
}

CoeffRow row_from_strings(const std::vector<std::string>& strings) {
  CoeffRow out;
  out.reserve(strings.size());
  for (const std::string& s : strings) out.emplace_back(s);
  return out;
}

OutputRecord record_for_poly(const std::string& kind, const LaurentPoly& poly,
                             const std::string& variable) {
  OutputRecord r;
  r.kind = kind;
  r.variable = variable;
  r.offset = poly.offset();
  r.coefficients = row_to_strings(poly.coeffs());
  return r;
}

std::vector<CoeffRow> alexander_table(long max_n) {
  std::vector<CoeffRow> rows;
  for (long n = 1; n <= max_n; ++n) rows.push_back(alexander_weaving_recurrence(n));
  return rows;
}

std::vector<CoeffRow> whitney_table(long max_n) {
  std::vector<CoeffRow> rows;
  for (long n = 0; n <= max_n; ++n) rows.push_back(whitney_c_chebyshev_row(n));
  return rows;
}

std::vector<CoeffRow> jones_table(long max_n) {
  std::vector<CoeffRow> rows;
  for (long n = 1; n <= max_n; ++n) rows.push_back(jones_weaving_coeffs(n));
  return rows;
}

namespace {

std::vector<CoeffRow> table_rows(const std::string& family, long max_n, long* first_n) {
  if (family == "alexander") {
    *first_n = 1;
    return alexander_table(max_n);
  }
  if (family == "whitney") {
    *first_n = 0;
    return whitney_table(max_n);
  }
  if (family == "jones") {
    *first_n = 1;
    return jones_table(max_n);
  }
  throw Error("unknown table family '" + family + "'");
}

}  // namespace

std::string render_table_csv(const std::string& family, long max_n) {
  long first_n = 0;
  const std::vector<CoeffRow> rows = table_rows(family, max_n, &first_n);
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << first_n + static_cast<long>(i);
    for (const BigInt& v : rows[i]) os << "," << v.str();
    os << "\n";
  }
  return os.str();
}

OutputRecord record_for_table(const std::string& family, long max_n) {
  long first_n = 0;
  const std::vector<CoeffRow> rows = table_rows(family, max_n, &first_n);
  OutputRecord r;
  r.kind = "table";
  r.variable = "s";
  r.offset = 0;
  nlohmann::json jrows = nlohmann::json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    jrows.push_back({{"n", first_n + static_cast<long>(i)},
                     {"coefficients", row_to_strings(rows[i])}});
  }
  r.extras["family"] = family;
  r.extras["rows"] = jrows;
  return r;
}

std::string render_record(const OutputRecord& r, Format fmt) {
  if (fmt == Format::json) {
    return record_to_json(r).dump() + "\n";
  }
  if (fmt == Format::csv) {
    if (r.kind == "table") {
      std::ostringstream os;
      for (const auto& row : r.extras.at("rows")) {
        os << row.at("n").get<long>();
        for (const auto& c : row.at("coefficients")) os << "," << c.get<std::string>();
        os << "\n";
      }
      return os.str();
    }
    if (r.kind == "zeros") {
      std::ostringstream os;
      os << "k,branch,re,im,is_real\n";
      for (const auto& z : r.extras.at("zeros")) {
        os << z.at("k").get<long>() << "," << z.at("branch").get<int>() << ","
           << z.at("re").get<double>() << "," << z.at("im").get<double>() << ","
           << (z.at("is_real").get<bool>() ? 1 : 0) << "\n";
      }
      return os.str();
    }
    if (r.kind == "verify") {
      std::ostringstream os;
      os << "suite,passed,cases,seconds\n";
      for (const auto& s : r.extras.at("suites")) {
        os << s.at("suite").get<std::string>() << "," << (s.at("passed").get<bool>() ? 1 : 0)
           << "," << s.at("cases").get<long>() << "," << s.at("seconds").get<double>() << "\n";
      }
      return os.str();
    }
    std::ostringstream os;
    os << r.offset;
    for (const std::string& c : r.coefficients) os << "," << c;
    os << "\n";
    return os.str();
  }
  // text
  std::ostringstream os;
  if (r.kind == "table") {
    for (const auto& row : r.extras.at("rows")) {
      os << "n=" << row.at("n").get<long>() << ":";
      for (const auto& c : row.at("coefficients")) os << " " << c.get<std::string>();
      os << "\n";
    }
    return os.str();
  }
  if (r.kind == "determinant") {
    os << "determinant = " << r.coefficients.at(0) << "\n";
    return os.str();
  }
  if (r.kind == "zeros") {
    for (const auto& z : r.extras.at("zeros")) {
      os << "k=" << z.at("k").get<long>() << " branch=" << z.at("branch").get<int>() << " z = ("
         << z.at("re").get<double>() << ", " << z.at("im").get<double>() << ")"
         << (z.at("is_real").get<bool>() ? " real" : " |z|=1") << "\n";
    }
    os << "hoste: " << (r.extras.at("hoste").get<bool>() ? "true" : "false") << "\n";
    os << "cross_validated: " << (r.extras.at("cross_validated").get<bool>() ? "true" : "false")
       << "\n";
    return os.str();
  }
  if (r.kind == "verify") {
    for (const auto& s : r.extras.at("suites")) {
      os << "suite " << s.at("suite").get<std::string>() << ": "
         << (s.at("passed").get<bool>() ? "PASS" : "FAIL") << " (" << s.at("cases").get<long>()
         << " cases, " << s.at("seconds").get<double>() << "s)";
      const std::string detail = s.at("detail").get<std::string>();
      if (!detail.empty()) os << " — " << detail;
      os << "\n";
    }
    for (const auto& note : r.extras.at("notes")) {
      os << "note: " << note.get<std::string>() << "\n";
    }
    os << (r.extras.at("passed").get<bool>() ? "verify: all suites passed"
                                             : "verify: FAILURES present")
       << "\n";
    return os.str();
  }
  // polynomial-valued kinds
  const CoeffRow row = row_from_strings(r.coefficients);
  const LaurentPoly poly = LaurentPoly::from_coeffs(row, r.offset);
  os << r.kind << " (" << r.variable << "): " << poly.str(r.variable) << "\n";
  os << "offset " << r.offset << ", coefficients:";
  for (const std::string& c : r.coefficients) os << " " << c;
  os << "\n";
  return os.str();
}

}  // namespace weave3
