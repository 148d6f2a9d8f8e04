#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bwtcst/bitvec.hpp"

namespace bwtcst::io {

/// Whole-file reads and writes; throw std::runtime_error naming the path.
std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

/// Bit-vector file: 8-byte little-endian bit count, then the bits packed
/// most-significant-bit first.
std::vector<std::uint8_t> encode_bits(const BitVec& bits);
/// Throws std::runtime_error on a truncated or oversized payload.
BitVec decode_bits(std::span<const std::uint8_t> bytes);

/// One '0' or '1' per line.
std::string bits_to_lines(const BitVec& bits);

/// Splits a collection file into lines (a trailing '\r' is dropped, as is
/// an empty last line).
std::vector<std::string> split_lines(std::span<const std::uint8_t> bytes);

} // namespace bwtcst::io
