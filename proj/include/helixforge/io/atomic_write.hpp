#pragma once

#include <filesystem>
#include <string>

namespace helixforge::io {

/// Writes content next to path under a temporary name, then renames it into place.
/// Readers never observe a partially written file.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// %.17g formatting, enough to round-trip any double.
std::string format17(double x);

}  // namespace helixforge::io
