#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace bellcheck::cli {

/// Rounds to 9 significant digits; -0 becomes 0.
double round_significant(double v);

/// %.9g text of round_significant(v).
std::string format_number(double v);

/// Rounds every floating-point leaf to 9 significant digits and dumps
/// with sorted keys and a trailing newline.
std::string to_json_text(nlohmann::json doc);

std::string sha256_hex(std::string_view data);

/// Runs one command line (program name excluded). Data goes to `out` or to
/// the --out file; the run manifest goes to `<file>.manifest.json`, or to
/// `err` when writing to `out`. Returns 0 on success, 2 for usage and
/// validation errors, 3 for internal errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bellcheck::cli
