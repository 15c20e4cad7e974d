#include "bct/sequence.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "bct/errors.hpp"

namespace bct {

Sequence::Sequence(Alphabet alphabet, std::vector<Symbol> codes)
    : alphabet_(std::move(alphabet)), codes_(std::move(codes)) {
    const int m = alphabet_.size();
    for (std::size_t i = 0; i < codes_.size(); ++i)
        if (static_cast<int>(codes_[i]) >= m)
            throw ValidationError("symbol code " + std::to_string(int(codes_[i])) +
                                  " out of range at position " + std::to_string(i));
}

std::string Sequence::to_string() const {
    std::string out;
    out.reserve(codes_.size());
    for (Symbol c : codes_) out.push_back(alphabet_.letter(c));
    return out;
}

namespace {

Sequence parse_chars(std::string_view text, const Alphabet& alphabet) {
    std::vector<Symbol> codes;
    codes.reserve(text.size());
    for (std::size_t off = 0; off < text.size(); ++off) {
        char c = text[off];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        auto code = alphabet.code(c);
        if (!code)
            throw ValidationError(std::string("unknown symbol '") + c + "' at byte offset " +
                                  std::to_string(off));
        codes.push_back(*code);
    }
    return Sequence(alphabet, std::move(codes));
}

Sequence parse_csv_int(std::string_view text, const Alphabet& alphabet) {
    std::vector<Symbol> codes;
    std::string token;
    auto flush = [&](std::size_t off) {
        if (token.empty()) return;
        int value;
        try {
            std::size_t used = 0;
            value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ValidationError("bad integer token \"" + token + "\" near byte offset " +
                                  std::to_string(off));
        }
        if (value < 0 || value >= alphabet.size())
            throw ValidationError("integer " + std::to_string(value) +
                                  " out of alphabet range near byte offset " +
                                  std::to_string(off));
        codes.push_back(static_cast<Symbol>(value));
        token.clear();
    };
    for (std::size_t off = 0; off < text.size(); ++off) {
        char c = text[off];
        if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
            flush(off);
        else
            token.push_back(c);
    }
    flush(text.size());
    return Sequence(alphabet, std::move(codes));
}

}  // namespace

Sequence parse_sequence(std::string_view text, const Alphabet& alphabet, SequenceFormat format) {
    return format == SequenceFormat::Chars ? parse_chars(text, alphabet)
                                           : parse_csv_int(text, alphabet);
}

Sequence load_sequence(const std::filesystem::path& path, const Alphabet& alphabet,
                       SequenceFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open sequence file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sequence(buf.str(), alphabet, format);
}

void write_sequence(const Sequence& seq, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << seq.to_string();
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace bct
