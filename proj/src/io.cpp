#include "bwtcst/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>

namespace bwtcst::io {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const noexcept { std::fclose(f); }
};
using File = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void fail(const std::string& what, const std::string& path) {
    throw std::runtime_error(what + " '" + path + "': " + std::strerror(errno));
}

} // namespace

std::vector<std::uint8_t> read_file(const std::string& path) {
    File f(std::fopen(path.c_str(), "rb"));
    if (!f) fail("cannot open", path);
    std::vector<std::uint8_t> out;
    if (std::fseek(f.get(), 0, SEEK_END) == 0) {
        const long size = std::ftell(f.get());
        if (size > 0) out.reserve(static_cast<std::size_t>(size));
        std::rewind(f.get());
    }
    std::uint8_t buf[1 << 16];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f.get())) > 0) out.insert(out.end(), buf, buf + got);
    if (std::ferror(f.get())) fail("cannot read", path);
    return out;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    File f(std::fopen(path.c_str(), "wb"));
    if (!f) fail("cannot create", path);
    if (!bytes.empty() && std::fwrite(bytes.data(), 1, bytes.size(), f.get()) != bytes.size())
        fail("cannot write", path);
    if (std::fflush(f.get()) != 0) fail("cannot write", path);
}

std::vector<std::uint8_t> encode_bits(const BitVec& bits) {
    const pos_t n = bits.size();
    std::vector<std::uint8_t> out(8 + (n + 7) / 8, 0);
    for (int k = 0; k < 8; ++k) out[k] = static_cast<std::uint8_t>(n >> (8 * k));
    for (pos_t i = 0; i < n; ++i)
        if (bits.get(i + 1)) out[8 + i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    return out;
}

BitVec decode_bits(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 8) throw std::runtime_error("bit file shorter than its 8-byte header");
    pos_t n = 0;
    for (int k = 0; k < 8; ++k) n |= pos_t{bytes[k]} << (8 * k);
    if ((bytes.size() - 8) != (n + 7) / 8)
        throw std::runtime_error("bit file payload of " + std::to_string(bytes.size() - 8) +
                                 " bytes does not match length " + std::to_string(n));
    BitVec bits(n);
    for (pos_t i = 0; i < n; ++i)
        if (bytes[8 + i / 8] & (0x80u >> (i % 8))) bits.set(i + 1);
    return bits;
}

std::string bits_to_lines(const BitVec& bits) {
    std::string out;
    out.reserve(2 * bits.size());
    for (pos_t i = 1; i <= bits.size(); ++i) {
        out += bits.get(i) ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::vector<std::string> split_lines(std::span<const std::uint8_t> bytes) {
    std::vector<std::string> out;
    std::string cur;
    for (auto b : bytes) {
        if (b == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += static_cast<char>(b);
        }
    }
    if (!cur.empty()) {
        if (cur.back() == '\r') cur.pop_back();
        out.push_back(std::move(cur));
    }
    return out;
}

} // namespace bwtcst::io
