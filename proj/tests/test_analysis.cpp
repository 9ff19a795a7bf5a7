#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mcs/analysis.hpp"
#include "mcs/oracle.hpp"
#include "support/naive.hpp"

using namespace mcs;

namespace {

const std::vector<std::string> kFigStrings = {"0101010101", "0010010101", "00101001001",
                                              "01010010010"};

} // namespace

TEST_CASE("counting on handpicked instances") {
    CHECK(count_mcs(naive::chars_instance(kFigStrings)) == 6);
    CHECK(count_mcs(naive::chars_instance({"abc", "abc"})) == 1);
    CHECK(count_mcs(naive::chars_instance({"abc", "acb"})) == 2);
    CHECK(count_mcs(naive::chars_instance({"a"})) == 1);
    CHECK(count_mcs(naive::chars_instance({"", "ab"})) == 1); // just the empty sequence
}

TEST_CASE("counting agrees with materialized enumeration") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        InstanceSet inst = naive::random_instance(rng, 2, 4, 4, 9);
        CHECK(count_mcs(inst) == naive::collect_sorted(inst).size());
    }
}

TEST_CASE("threshold outcomes on handpicked instances") {
    InstanceSet fig = naive::chars_instance(kFigStrings);
    {
        AssessOutcome r = assess_mcs(fig, 5);
        CHECK(r.verdict);
        CHECK(r.solutions_seen == 6);
        CHECK(!r.exhausted);
    }
    {
        AssessOutcome r = assess_mcs(fig, 6);
        CHECK(!r.verdict);
        CHECK(r.solutions_seen == 6);
        CHECK(r.exhausted);
    }
    {
        // only the empty sequence is common here, and it exceeds zero
        InstanceSet ab = naive::chars_instance({"a", "b"});
        AssessOutcome r = assess_mcs(ab, 0);
        CHECK(r.verdict);
        CHECK(r.solutions_seen == 1);
        CHECK(!r.exhausted);
    }
}

TEST_CASE("threshold verdicts agree with the count near the boundary") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        InstanceSet inst = naive::random_instance(rng, 2, 4, 4, 9);
        std::uint64_t c = count_mcs(inst);
        std::vector<std::uint64_t> zs = {0, c, c + 1};
        if (c > 0)
            zs.push_back(c - 1);
        for (std::uint64_t z : zs) {
            AssessOutcome r = assess_mcs(inst, z);
            CHECK(r.verdict == (c > z));
            CHECK(r.exhausted == (c <= z));
            CHECK(r.solutions_seen == std::min<std::uint64_t>(c, z + 1));
        }
    }
}

TEST_CASE("finding a solution outside a known set") {
    InstanceSet fig = naive::chars_instance(kFigStrings);
    McsSet all = enumerate_bruteforce(fig);
    REQUIRE(all.members.size() == 6);

    CHECK(!another_mcs(fig, all.members).has_value());

    auto found = another_mcs(fig, {});
    REQUIRE(found.has_value());
    CHECK(is_mcs(*found, fig));

    // withholding one member recovers exactly it
    for (std::size_t hold = 0; hold < all.members.size(); ++hold) {
        std::vector<Seq> known;
        for (std::size_t i = 0; i < all.members.size(); ++i)
            if (i != hold)
                known.push_back(all.members[i]);
        auto got = another_mcs(fig, known);
        REQUIRE(got.has_value());
        CHECK(*got == all.members[hold]);
    }
}

TEST_CASE("known members are validated and duplicates tolerated") {
    InstanceSet fig = naive::chars_instance(kFigStrings);

    std::vector<Seq> bad = {naive::chars_seq(fig.alphabet(), "01")};
    CHECK_THROWS_AS(another_mcs(fig, bad), NotAnMcsError);

    McsSet all = enumerate_bruteforce(fig);
    std::vector<Seq> doubled = all.members;
    doubled.insert(doubled.end(), all.members.begin(), all.members.end());
    CHECK(!another_mcs(fig, doubled).has_value());

    std::vector<Seq> twice_one = {all.members[0], all.members[0]};
    auto got = another_mcs(fig, twice_one);
    REQUIRE(got.has_value());
    CHECK(is_mcs(*got, fig));
    CHECK(*got != all.members[0]);
}

TEST_CASE("random known subsets recover exactly the complement") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        InstanceSet inst = naive::random_instance(rng, 2, 3, 3, 8);
        McsSet all = enumerate_bruteforce(inst);
        std::vector<Seq> known;
        std::set<Seq> withheld;
        for (const Seq& s : all.members) {
            if (naive::draw(rng, 0, 1) == 0)
                known.push_back(s);
            else
                withheld.insert(s);
        }
        auto got = another_mcs(inst, known);
        if (withheld.empty()) {
            CHECK(!got.has_value());
        } else {
            REQUIRE(got.has_value());
            CHECK(withheld.count(*got) == 1);
        }
    }
}
