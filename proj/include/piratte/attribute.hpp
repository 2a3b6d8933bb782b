#pragma once

#include <string>
#include <string_view>

namespace piratte {

// Canonical attribute form: leading/trailing ASCII whitespace stripped,
// letters lowercased; result must match [a-z][a-z0-9_]*.
// Throws InvalidAttribute otherwise (including the empty string).
std::string normalize_attribute(std::string_view raw);

bool is_normalized_attribute(std::string_view name);

}  // namespace piratte
