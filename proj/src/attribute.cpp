#include "piratte/attribute.hpp"

#include <cctype>

#include "piratte/errors.hpp"

namespace piratte {

bool is_normalized_attribute(std::string_view name) {
  if (name.empty()) return false;
  if (!(name[0] >= 'a' && name[0] <= 'z')) return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::string normalize_attribute(std::string_view raw) {
  std::size_t begin = 0, end = raw.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(raw[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(raw[end - 1]))) --end;
  if (begin == end) throw InvalidAttribute("empty attribute name");
  std::string out;
  out.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    char c = raw[i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
  }
  if (!is_normalized_attribute(out))
    throw InvalidAttribute("attribute must match [a-z][a-z0-9_]*: '" + out + "'");
  return out;
}

}  // namespace piratte
