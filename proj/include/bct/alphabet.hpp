#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bct {

/// Internal symbol code, 0..m-1 in alphabet declaration order.
using Symbol = std::uint8_t;

/// Ordered set of distinct single characters. Codes are assigned by
/// position, so "01" maps '0'->0, '1'->1 and "acgt" maps 'a'->0 .. 't'->3.
class Alphabet {
public:
    /// Builds an alphabet from its character list. Throws ValidationError
    /// on duplicates or fewer than two symbols.
    static Alphabet parse(std::string_view spec);

    int size() const { return static_cast<int>(letters_.size()); }
    const std::string& letters() const { return letters_; }
    char letter(Symbol code) const { return letters_[code]; }

    std::optional<Symbol> code(char c) const {
        int v = code_of_[static_cast<unsigned char>(c)];
        if (v < 0) return std::nullopt;
        return static_cast<Symbol>(v);
    }

    bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }

private:
    explicit Alphabet(std::string letters);

    std::string letters_;
    std::array<std::int16_t, 256> code_of_{};
};

}  // namespace bct
