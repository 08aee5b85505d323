#include "blab/field_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "blab/spectral.hpp"

namespace blab {

static_assert(std::endian::native == std::endian::little, "snapshot format is little-endian");

namespace {

constexpr char kMagic[4] = {'B', 'L', 'A', 'B'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ofstream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
T get(std::ifstream& is) {
    T v;
    is.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}

}  // namespace

void write_field(const std::filesystem::path& path, const Field& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_field: cannot open " + path.string());
    os.write(kMagic, 4);
    put<std::uint32_t>(os, kVersion);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid().dim()));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid().points_per_axis()));
    put<double>(os, f.grid().period());
    put<double>(os, f.time_tag());
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.components()));
    auto v = f.values();
    os.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size_bytes()));
    if (!os) throw std::runtime_error("write_field: short write to " + path.string());
}

Field read_field(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_field: cannot open " + path.string());
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("read_field: bad magic in " + path.string());
    const auto version = get<std::uint32_t>(is);
    if (version != kVersion) throw std::runtime_error("read_field: unsupported version");
    const auto d = get<std::uint32_t>(is);
    const auto n = get<std::uint32_t>(is);
    const auto L = get<double>(is);
    const auto time = get<double>(is);
    const auto components = get<std::uint32_t>(is);
    Grid grid(static_cast<int>(d), L, static_cast<int>(n));
    Field f(grid, static_cast<int>(components), time);
    auto v = f.values();
    is.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(v.size_bytes()));
    if (!is) throw std::runtime_error("read_field: truncated file " + path.string());
    f.require_finite("read_field");
    if (static_cast<int>(components) == grid.dim() && grid.dim() > 1)
        f.set_is_gradient(verify_gradient(f, 1e-6));
    else if (static_cast<int>(components) == grid.dim() && grid.dim() == 1)
        f.set_is_gradient(true);
    return f;
}

}  // namespace blab
