#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zetakit/numeric.hpp"

namespace zetakit {

// Thrown for malformed user input; the CLI maps it to a usage error.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Shortest decimal that parses back to the same double.
std::string format_double(double v);

// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" and "a,b".
Complex parse_complex(std::string_view text);
double parse_double(std::string_view text);

// RFC 4180: quote when the field holds a comma, quote, CR or LF.
std::string csv_field(std::string_view field);
std::string csv_row(const std::vector<std::string>& fields);

nlohmann::json complex_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

}  // namespace zetakit
