#pragma once

#include <filesystem>
#include <string_view>

namespace gsqg::io {

/// Writes bytes to a sibling temporary file and renames it over path.
/// Throws IoError on failure; the target is never left half-written.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace gsqg::io
