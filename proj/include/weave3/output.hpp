#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "weave3/cheb_lucas.hpp"
#include "weave3/laurent.hpp"

namespace weave3 {

enum class Format { text, json, csv };

Format parse_format(const std::string& name);  // throws Error on unknown name

/// Machine-readable result of one command.  Big integers are serialized as
/// decimal strings so consumers never truncate them to 64 bits.
struct OutputRecord {
  std::string kind;      // alexander | jones | determinant | zeros | table | verify
  std::string variable;  // t | s | x
  long offset = 0;
  std::vector<std::string> coefficients;
  nlohmann::json extras = nlohmann::json::object();

  bool operator==(const OutputRecord&) const = default;
};

nlohmann::json record_to_json(const OutputRecord& r);
OutputRecord record_from_json(const nlohmann::json& j);

/// Renders a record in the requested format; all three carry the same
/// numeric content.
std::string render_record(const OutputRecord& r, Format fmt);

OutputRecord record_for_poly(const std::string& kind, const LaurentPoly& poly,
                             const std::string& variable);

std::vector<std::string> row_to_strings(const CoeffRow& row);
CoeffRow row_from_strings(const std::vector<std::string>& strings);

/// Table families for the `table` subcommand.  Alexander and Jones rows run
/// n = 1..max_n; Whitney rows include n = 0.
std::vector<CoeffRow> alexander_table(long max_n);
std::vector<CoeffRow> whitney_table(long max_n);
std::vector<CoeffRow> jones_table(long max_n);

/// CSV body of a table: one line per row, a leading n column followed by
/// the coefficients from lowest to highest exponent.
std::string render_table_csv(const std::string& family, long max_n);

OutputRecord record_for_table(const std::string& family, long max_n);

}  // namespace weave3
