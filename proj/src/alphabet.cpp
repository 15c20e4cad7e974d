#include "bct/alphabet.hpp"

#include "bct/errors.hpp"

namespace bct {

Alphabet Alphabet::parse(std::string_view spec) {
    if (spec.size() < 2)
        throw ValidationError("alphabet needs at least 2 symbols, got \"" + std::string(spec) +
                              "\"");
    if (spec.size() > 255) throw ValidationError("alphabet larger than 255 symbols");
    return Alphabet(std::string(spec));
}

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
    code_of_.fill(-1);
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        auto uc = static_cast<unsigned char>(letters_[i]);
        if (code_of_[uc] >= 0)
            throw ValidationError(std::string("duplicate alphabet symbol '") + letters_[i] + "'");
        code_of_[uc] = static_cast<std::int16_t>(i);
    }
}

}  // namespace bct
