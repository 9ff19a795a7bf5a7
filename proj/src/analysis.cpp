#include "mcs/analysis.hpp"

#include <cassert>
#include <unordered_set>

#include "mcs/io.hpp"

namespace mcs {

std::uint64_t count_mcs(const InstanceSet& inst, std::size_t tuple_cap) {
    return enumerate_mcs(
        inst, [](const Seq&) { return true; }, tuple_cap);
}

AssessOutcome assess_mcs(const InstanceSet& inst, std::uint64_t z, std::size_t tuple_cap) {
    AssessOutcome out;
    std::uint64_t callbacks = 0;
    enumerate_mcs(
        inst,
        [&](const Seq&) {
            ++callbacks;
            ++out.solutions_seen;
            return out.solutions_seen < z + 1;
        },
        tuple_cap);
    assert(callbacks <= z + 1);
    out.verdict = out.solutions_seen == z + 1;
    out.exhausted = out.solutions_seen <= z;
    return out;
}

std::optional<Seq> another_mcs(const InstanceSet& inst, const std::vector<Seq>& known,
                               std::size_t tuple_cap) {
    std::unordered_set<Seq, SeqHash> known_set;
    for (const Seq& z : known) {
        if (!is_mcs(z, inst))
            throw NotAnMcsError("known member is not a maximal common subsequence: " +
                                format_seq(z, inst.alphabet(), TokenMode::tokens));
        known_set.insert(z);
    }

    std::optional<Seq> found;
    std::uint64_t emissions = 0;
    enumerate_mcs(
        inst,
        [&](const Seq& s) {
            ++emissions;
            if (known_set.count(s) == 0) {
                found = s;
                return false;
            }
            return true;
        },
        tuple_cap);
    // Emissions are pairwise distinct, so a witness surfaces among the first
    // |known|+1 of them whenever one exists.
    assert(emissions <= known_set.size() + 1);
    (void)emissions;
    return found;
}

} // namespace mcs
