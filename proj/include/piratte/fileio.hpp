#pragma once

#include <string>

#include "piratte/bytes.hpp"

namespace piratte {

// Whole-file read/write; throw std::runtime_error with the path on failure.
Bytes read_file(const std::string& path);
void write_file(const std::string& path, const Bytes& data);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace piratte
