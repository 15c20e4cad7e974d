#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bct/alphabet.hpp"

namespace bct {

/// An encoded symbol sequence together with its alphabet.
class Sequence {
public:
    Sequence(Alphabet alphabet, std::vector<Symbol> codes);

    const Alphabet& alphabet() const { return alphabet_; }
    std::span<const Symbol> codes() const { return codes_; }
    std::size_t size() const { return codes_.size(); }
    Symbol operator[](std::size_t i) const { return codes_[i]; }

    /// Character rendering (one alphabet letter per symbol).
    std::string to_string() const;

private:
    Alphabet alphabet_;
    std::vector<Symbol> codes_;
};

enum class SequenceFormat {
    Chars,   ///< one character per symbol; whitespace ignored
    CsvInt,  ///< comma/newline separated decimal codes
};

/// Decodes sequence text. Errors report the byte offset of the offending
/// character (chars mode) or the bad token (csv-int mode).
Sequence parse_sequence(std::string_view text, const Alphabet& alphabet,
                        SequenceFormat format = SequenceFormat::Chars);

Sequence load_sequence(const std::filesystem::path& path, const Alphabet& alphabet,
                       SequenceFormat format = SequenceFormat::Chars);

/// Writes chars format; round-trips with load_sequence.
void write_sequence(const Sequence& seq, const std::filesystem::path& path);

}  // namespace bct
