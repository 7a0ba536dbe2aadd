#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pae::util {

std::string trim(std::string_view s);
std::string collapse_whitespace(std::string_view s);
std::string to_lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Upper-cases the first ASCII letter of every word and lower-cases the rest.
// Words break on whitespace, '-', '/' and '(' but not on apostrophes, so
// "women's v-neck" -> "Women's V-Neck".
std::string title_case(std::string_view s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pae::util
