#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bwtcst/alphabet.hpp"

namespace bwtcst {

/// Suffix array of s by induced sorting. s[n-1] must be 0 and 0 must occur
/// nowhere else; all values lie in [0, alphabet). Result is 0-based.
std::vector<std::int32_t> suffix_array(std::span<const std::int32_t> s, std::int32_t alphabet);

/// BWT of a collection of terminated strings (a single text is a collection
/// of one). Equal suffixes order by string index, the terminator sorts
/// first. Throws std::invalid_argument unless each string ends with the
/// only terminator it contains.
std::vector<std::uint8_t> build_bwt(const std::vector<std::string>& strings,
                                    std::uint8_t terminator = default_terminator);

} // namespace bwtcst
