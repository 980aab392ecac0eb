#include "gsqg/spectral/snapshot.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "gsqg/error.hpp"
#include "gsqg/io/atomic_file.hpp"

namespace gsqg::spectral {

namespace {

constexpr char kMagic[4] = {'G', 'S', 'Q', 'G'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put_le(std::string& out, T value) {
    unsigned char bytes[sizeof(T)];
    std::memcpy(bytes, &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
    out.append(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <class T>
T get_le(const std::string& in, std::size_t& pos) {
    if (pos + sizeof(T) > in.size()) throw Error(Errc::IoError, "snapshot is truncated");
    unsigned char bytes[sizeof(T)];
    std::memcpy(bytes, in.data() + pos, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
    pos += sizeof(T);
    T value;
    std::memcpy(&value, bytes, sizeof(T));
    return value;
}

}  // namespace

void write_snapshot(const std::filesystem::path& path, const PhysicalField& field) {
    if (field.values.size() != field.grid.size()) throw Error(Errc::ShapeMismatch, "sample count does not match N*N");
    std::string bytes(kMagic, 4);
    bytes.reserve(4 + 8 + 8 + 8 * field.values.size());
    put_le<std::uint32_t>(bytes, kVersion);
    put_le<std::uint32_t>(bytes, static_cast<std::uint32_t>(field.grid.n));
    put_le<double>(bytes, field.grid.box);
    for (double v : field.values) put_le<double>(bytes, v);
    io::write_file_atomic(path, bytes);
}

PhysicalField read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoError, "cannot open snapshot " + path.string());
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw Error(Errc::IoError, "bad snapshot magic in " + path.string());
    }
    std::size_t pos = 4;
    const auto version = get_le<std::uint32_t>(bytes, pos);
    if (version != kVersion) throw Error(Errc::IoError, "unsupported snapshot version " + std::to_string(version));
    const auto n = get_le<std::uint32_t>(bytes, pos);
    const double box = get_le<double>(bytes, pos);
    GridSpec grid;
    grid.n = static_cast<int>(n);
    grid.box = box;
    try {
        grid.validate();
    } catch (const Error& e) {
        throw Error(Errc::IoError, std::string("invalid snapshot header: ") + e.what());
    }
    if (bytes.size() != pos + 8 * grid.size()) throw Error(Errc::IoError, "snapshot size does not match header");
    PhysicalField out(grid);
    for (auto& v : out.values) v = get_le<double>(bytes, pos);
    return out;
}

}  // namespace gsqg::spectral
