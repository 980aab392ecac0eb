#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace gsqg::harness {

/// Numeric table written atomically with a header line.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    [[nodiscard]] std::string to_text() const;
    void write(const std::filesystem::path& path) const;
};

}  // namespace gsqg::harness
