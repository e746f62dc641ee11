#ifndef TRIHELIX_TEXT_HPP
#define TRIHELIX_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace trihelix::text {

std::string to_upper(std::string_view s);
std::string trim(std::string_view s);

// Uppercase s and split on every non-alphanumeric character, dropping empties.
std::vector<std::string> tokenize_alnum(std::string_view s);

std::vector<std::string> split(std::string_view s, char delim);

// One CSV line -> fields. Double quotes may wrap a field; "" inside a quoted
// field is a literal quote. Fields are not trimmed beyond quote removal.
std::vector<std::string> csv_fields(std::string_view line);

// Fixed-point formatting; avoids "-0.0" style output.
std::string format_fixed(double v, int decimals);

// Strict numeric parsing (whole string must consume); throws trihelix::Error.
double parse_double(std::string_view s, std::string_view what);
long long parse_int(std::string_view s, std::string_view what);

} // namespace trihelix::text

#endif
