#include "bwtcst/alphabet.hpp"

namespace bwtcst {

Alphabet Alphabet::from_presence(const std::array<bool, 256>& present, std::uint8_t terminator) {
    Alphabet a;
    a.terminator_ = terminator;
    a.codes_.fill(-1);
    if (present[terminator]) {
        a.has_terminator_ = true;
        a.codes_[terminator] = 0;
        a.bytes_.push_back(terminator);
    }
    for (unsigned b = 0; b < 256; ++b) {
        if (!present[b] || b == terminator) continue;
        a.codes_[b] = static_cast<std::int16_t>(a.bytes_.size());
        a.bytes_.push_back(static_cast<std::uint8_t>(b));
    }
    return a;
}

Alphabet Alphabet::of(std::span<const std::uint8_t> text, std::uint8_t terminator) {
    std::array<bool, 256> present{};
    for (auto c : text) present[c] = true;
    return from_presence(present, terminator);
}

Alphabet Alphabet::of_union(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                            std::uint8_t terminator) {
    std::array<bool, 256> present{};
    for (auto c : a) present[c] = true;
    for (auto c : b) present[c] = true;
    return from_presence(present, terminator);
}

Alphabet Alphabet::from_bytes(std::span<const std::uint8_t> bytes, std::uint8_t terminator) {
    std::array<bool, 256> present{};
    for (auto c : bytes) present[c] = true;
    present[terminator] = true;
    return from_presence(present, terminator);
}

} // namespace bwtcst
