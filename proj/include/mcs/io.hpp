#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mcs/core.hpp"

namespace mcs {

// How a line maps to symbols: whitespace-separated tokens, or one symbol per
// character.
enum class TokenMode { tokens, chars };

// Strings-file content before instance validation; may hold zero strings.
struct RawStrings {
    TokenMode mode = TokenMode::chars;
    Alphabet alphabet;
    std::vector<Seq> strings;
};

struct ParsedStrings {
    TokenMode mode = TokenMode::chars;
    InstanceSet inst;
};

// Strings file format:
//   line 1 (after comments): "mode tokens" or "mode chars"
//   every further nonempty line: one string
//   lines starting with '#' are comments
// Symbols are interned into `base`, extending it; ids of existing tokens are
// preserved.
RawStrings parse_raw_strings(std::istream& in, Alphabet base = {});

// Same, but requires at least one string and packages an InstanceSet.
ParsedStrings parse_strings_file(std::istream& in);

void write_strings_file(std::ostream& out, const InstanceSet& inst, TokenMode mode);

// One string in the given mode: tokens joined by single spaces, or characters
// concatenated.
std::string format_seq(const Seq& s, const Alphabet& alphabet, TokenMode mode);

// Inverse of format_seq; interns unseen tokens.
Seq parse_seq(std::string_view text, Alphabet& alphabet, TokenMode mode);

} // namespace mcs
