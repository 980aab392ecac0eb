#include "gsqg/harness/csv.hpp"

#include <sstream>

#include "gsqg/io/atomic_file.hpp"
#include "gsqg/multipliers/symbol.hpp"

namespace gsqg::harness {

std::string CsvTable::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << multipliers::format_real(row[i]);
        out << '\n';
    }
    return out.str();
}

void CsvTable::write(const std::filesystem::path& path) const {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    io::write_file_atomic(path, to_text());
}

}  // namespace gsqg::harness
