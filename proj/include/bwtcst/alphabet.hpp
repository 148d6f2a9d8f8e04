#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "bwtcst/types.hpp"

namespace bwtcst {

inline constexpr std::uint8_t default_terminator = '#';

/// Dense remapping of input bytes to codes [0, sigma). The terminator, when
/// present, gets code 0; the remaining bytes keep their byte order.
class Alphabet {
public:
    Alphabet() = default;

    /// Alphabet of the bytes occurring in `text`.
    static Alphabet of(std::span<const std::uint8_t> text,
                       std::uint8_t terminator = default_terminator);
    /// Alphabet of the bytes occurring in either text (shared code space for
    /// two-collection queries).
    static Alphabet of_union(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                             std::uint8_t terminator = default_terminator);
    /// Alphabet over an explicit byte set; the terminator is always included.
    static Alphabet from_bytes(std::span<const std::uint8_t> bytes,
                               std::uint8_t terminator = default_terminator);

    unsigned size() const noexcept { return static_cast<unsigned>(bytes_.size()); }
    bool has_terminator() const noexcept { return has_terminator_; }
    std::uint8_t terminator_byte() const noexcept { return terminator_; }

    bool contains(std::uint8_t byte) const noexcept { return codes_[byte] >= 0; }
    /// Code of a byte; requires contains(byte).
    symbol_t code(std::uint8_t byte) const noexcept { return static_cast<symbol_t>(codes_[byte]); }
    std::uint8_t byte(symbol_t code) const noexcept { return bytes_[code]; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    static Alphabet from_presence(const std::array<bool, 256>& present, std::uint8_t terminator);

    std::array<std::int16_t, 256> codes_{};
    std::vector<std::uint8_t> bytes_;
    std::uint8_t terminator_ = default_terminator;
    bool has_terminator_ = false;
};

} // namespace bwtcst
