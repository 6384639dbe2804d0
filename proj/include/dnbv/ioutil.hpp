#pragma once

#include <string>
#include <vector>

namespace dnbv {

// All numeric output uses 9 significant digits.
std::string fmt9(double v);

std::vector<std::string> split_whitespace(const std::string& line);
std::string trim(const std::string& s);

// Parse helpers that report the offending text in the error message.
// `where` names the file/key/line for diagnostics.
double parse_double(const std::string& token, const std::string& where);
long parse_long(const std::string& token, const std::string& where);

// Reads a whole text file into lines. Throws RuntimeError when unreadable.
std::vector<std::string> read_lines(const std::string& path);

// Opens `path` for writing, throws RuntimeError on failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace dnbv
