#include <doctest.h>

#include <sstream>

#include "mcs/io.hpp"
#include "support/naive.hpp"

using namespace mcs;

TEST_CASE("strings file parses modes, comments, and blank lines") {
    std::istringstream in("# leading comment\n\nmode chars\nab\n# mid comment\nba\n");
    ParsedStrings ps = parse_strings_file(in);
    CHECK(ps.mode == TokenMode::chars);
    CHECK(ps.inst.k() == 2);
    CHECK(ps.inst.alphabet().tokens() == std::vector<std::string>{"a", "b"});
    CHECK(ps.inst.strings()[1] == naive::chars_seq(ps.inst.alphabet(), "ba"));
}

TEST_CASE("token mode splits on whitespace and interns multi-character tokens") {
    std::istringstream in("mode tokens\nx1 !x1   x2\n!x2\n");
    ParsedStrings ps = parse_strings_file(in);
    CHECK(ps.mode == TokenMode::tokens);
    CHECK(ps.inst.alphabet().tokens() == std::vector<std::string>{"x1", "!x1", "x2", "!x2"});
    CHECK(ps.inst.strings()[0].ids == std::vector<SymbolId>{0, 1, 2});
    CHECK(ps.inst.strings()[1].ids == std::vector<SymbolId>{3});
}

TEST_CASE("strings file rejects malformed input") {
    {
        std::istringstream in("ab\nba\n");
        CHECK_THROWS_AS(parse_strings_file(in), ParseError);
    }
    {
        std::istringstream in("mode sideways\nab\n");
        CHECK_THROWS_AS(parse_strings_file(in), ParseError);
    }
    {
        std::istringstream in("");
        CHECK_THROWS_AS(parse_strings_file(in), ParseError);
    }
    {
        std::istringstream in("mode chars\n# only comments\n");
        CHECK_THROWS_AS(parse_strings_file(in), ParseError);
    }
}

TEST_CASE("raw parsing may hold zero strings and extends a base alphabet") {
    Alphabet base({"b", "z"});
    std::istringstream in("mode chars\nab\n");
    RawStrings raw = parse_raw_strings(in, base);
    // ids of preexisting tokens survive; new ones append
    CHECK(raw.alphabet.tokens() == std::vector<std::string>{"b", "z", "a"});
    CHECK(raw.strings[0].ids == std::vector<SymbolId>{2, 0});

    std::istringstream empty("mode tokens\n");
    RawStrings none = parse_raw_strings(empty);
    CHECK(none.strings.empty());
}

TEST_CASE("formatting and parsing of one string invert each other") {
    Alphabet a({"x1", "!x1", "x2"});
    Seq s({0, 1, 2, 0});
    std::string text = format_seq(s, a, TokenMode::tokens);
    CHECK(text == "x1 !x1 x2 x1");
    Alphabet b = a;
    CHECK(parse_seq(text, b, TokenMode::tokens) == s);

    Alphabet bin({"0", "1"});
    Seq t({0, 1, 1, 0});
    CHECK(format_seq(t, bin, TokenMode::chars) == "0110");
    Alphabet bin2 = bin;
    CHECK(parse_seq("0110", bin2, TokenMode::chars) == t);
    CHECK(format_seq(Seq{}, bin, TokenMode::chars) == "");
}

TEST_CASE("char mode rejects embedded whitespace in one string") {
    Alphabet a;
    CHECK_THROWS_AS(parse_seq("a b", a, TokenMode::chars), ParseError);
}

TEST_CASE("writing a strings file round-trips the instance") {
    InstanceSet inst = naive::chars_instance({"ab", "ba", "aab"});
    std::ostringstream out;
    write_strings_file(out, inst, TokenMode::chars);
    CHECK(out.str() == "mode chars\nab\nba\naab\n");

    std::istringstream back(out.str());
    ParsedStrings ps = parse_strings_file(back);
    CHECK(ps.inst == inst);

    std::ostringstream out2;
    write_strings_file(out2, inst, TokenMode::tokens);
    CHECK(out2.str() == "mode tokens\na b\nb a\na a b\n");
}
