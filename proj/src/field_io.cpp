#include "frit/field_io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

namespace frit {

namespace {

constexpr char kMagic[4] = {'F', 'R', 'I', 'T'};
constexpr std::uint32_t kVersion = 1;
constexpr std::size_t kHeaderSize = 32;

void put_u32(unsigned char* p, std::uint32_t v) {
    p[0] = static_cast<unsigned char>(v);
    p[1] = static_cast<unsigned char>(v >> 8);
    p[2] = static_cast<unsigned char>(v >> 16);
    p[3] = static_cast<unsigned char>(v >> 24);
}

std::uint32_t get_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_f64(unsigned char* p, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    for (int i = 0; i < 8; ++i) p[i] = static_cast<unsigned char>(bits >> (8 * i));
}

double get_f64(const unsigned char* p) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    double v;
    std::memcpy(&v, &bits, sizeof v);
    return v;
}

}  // namespace

void write_field_binary(const std::string& path, const GridField& f) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw config_error("cannot open for writing: " + path);

    unsigned char header[kHeaderSize] = {};
    std::memcpy(header, kMagic, 4);
    put_u32(header + 4, kVersion);
    put_u32(header + 8, static_cast<std::uint32_t>(f.box.n));
    put_u32(header + 12, static_cast<std::uint32_t>(f.box.N));
    put_f64(header + 16, f.box.L);
    out.write(reinterpret_cast<const char*>(header), kHeaderSize);

    const std::int64_t total = f.values.size();
    std::vector<unsigned char> buf(static_cast<std::size_t>(total) * 8);
    for (std::int64_t i = 0; i < total; ++i) put_f64(buf.data() + 8 * i, f.values[i]);
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!out) throw config_error("write failed: " + path);
}

GridField read_field_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open for reading: " + path);

    unsigned char header[kHeaderSize];
    in.read(reinterpret_cast<char*>(header), kHeaderSize);
    if (!in || std::memcmp(header, kMagic, 4) != 0)
        throw config_error("not a grid field file (bad magic): " + path);
    if (get_u32(header + 4) != kVersion)
        throw config_error("unsupported grid field format version in " + path);

    const int n = static_cast<int>(get_u32(header + 8));
    const int N = static_cast<int>(get_u32(header + 12));
    const double L = get_f64(header + 16);
    BoxDomain box(n, N, L);  // validates geometry

    GridField f(box);
    const std::int64_t total = box.size();
    std::vector<unsigned char> buf(static_cast<std::size_t>(total) * 8);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (in.gcount() != static_cast<std::streamsize>(buf.size()))
        throw config_error("truncated grid field file: " + path);
    for (std::int64_t i = 0; i < total; ++i) f.values[i] = get_f64(buf.data() + 8 * i);
    return f;
}

std::string format_real(Real v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_field_csv(const std::string& path, const GridField& f) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw config_error("cannot open for writing: " + path);

    const BoxDomain& box = f.box;
    for (int a = 0; a < box.n; ++a) out << "i" << (a + 1) << ",";
    for (int a = 0; a < box.n; ++a) out << "x" << (a + 1) << ",";
    out << "value\n";

    const std::int64_t total = box.size();
    for (std::int64_t id = 0; id < total; ++id) {
        const auto idx = box.unflatten(id);
        for (int a = 0; a < box.n; ++a) out << idx[a] << ",";
        for (int a = 0; a < box.n; ++a) out << format_real(box.coord(idx[a])) << ",";
        out << format_real(f.values[id]) << "\n";
    }
    if (!out) throw config_error("write failed: " + path);
}

}  // namespace frit
