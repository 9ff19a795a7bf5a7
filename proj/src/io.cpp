#include "mcs/io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace mcs {

namespace {

std::string_view trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

bool is_comment_or_blank(std::string_view line) {
    std::string_view t = trim(line);
    return t.empty() || t.front() == '#';
}

} // namespace

RawStrings parse_raw_strings(std::istream& in, Alphabet base) {
    RawStrings out;
    out.alphabet = std::move(base);

    std::string line;
    bool mode_seen = false;
    while (std::getline(in, line)) {
        if (is_comment_or_blank(line))
            continue;
        std::string_view t = trim(line);
        if (!mode_seen) {
            if (t == "mode tokens")
                out.mode = TokenMode::tokens;
            else if (t == "mode chars")
                out.mode = TokenMode::chars;
            else
                throw ParseError("strings file must start with 'mode tokens' or 'mode chars'");
            mode_seen = true;
            continue;
        }
        out.strings.push_back(parse_seq(t, out.alphabet, out.mode));
    }
    if (!mode_seen)
        throw ParseError("strings file is missing the mode line");
    return out;
}

ParsedStrings parse_strings_file(std::istream& in) {
    RawStrings raw = parse_raw_strings(in);
    if (raw.strings.empty())
        throw ParseError("strings file holds no strings");
    return ParsedStrings{raw.mode, InstanceSet(std::move(raw.alphabet), std::move(raw.strings))};
}

void write_strings_file(std::ostream& out, const InstanceSet& inst, TokenMode mode) {
    out << (mode == TokenMode::tokens ? "mode tokens\n" : "mode chars\n");
    for (const Seq& s : inst.strings())
        out << format_seq(s, inst.alphabet(), mode) << '\n';
}

std::string format_seq(const Seq& s, const Alphabet& alphabet, TokenMode mode) {
    std::string out;
    for (std::size_t i = 0; i < s.ids.size(); ++i) {
        if (mode == TokenMode::tokens && i > 0)
            out += ' ';
        out += alphabet.token(s.ids[i]);
    }
    return out;
}

Seq parse_seq(std::string_view text, Alphabet& alphabet, TokenMode mode) {
    Seq s;
    std::string_view t = trim(text);
    if (mode == TokenMode::tokens) {
        std::istringstream iss{std::string(t)};
        std::string tok;
        while (iss >> tok)
            s.ids.push_back(alphabet.intern(tok));
    } else {
        for (char c : t) {
            if (std::isspace(static_cast<unsigned char>(c)))
                throw ParseError("char-mode string contains whitespace");
            s.ids.push_back(alphabet.intern(std::string_view(&c, 1)));
        }
    }
    return s;
}

} // namespace mcs
