#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcs/core.hpp"
#include "mcs/enumerator.hpp"

namespace mcs {

// Result of asking "are there more than z maximal common subsequences?".
struct AssessOutcome {
    bool verdict = false;           // true iff the count exceeds z
    std::uint64_t solutions_seen = 0;
    bool exhausted = false;         // enumeration finished before z+1 emissions
};

// Full enumeration without materializing solutions.
std::uint64_t count_mcs(const InstanceSet& inst, std::size_t tuple_cap = kDefaultTupleCap);

// Streams the enumeration and stops at the (z+1)-th emission; never triggers
// more than z+1 visitor callbacks internally.
AssessOutcome assess_mcs(const InstanceSet& inst, std::uint64_t z,
                         std::size_t tuple_cap = kDefaultTupleCap);

// Finds a maximal common subsequence outside `known`, or nullopt if `known`
// is the complete set. Every member of `known` must itself be a maximal
// common subsequence of the instance (throws NotAnMcsError otherwise). Streams
// the enumeration, skipping known members; since emissions are distinct, a
// decision is reached within |known|+1 emissions.
std::optional<Seq> another_mcs(const InstanceSet& inst, const std::vector<Seq>& known,
                               std::size_t tuple_cap = kDefaultTupleCap);

} // namespace mcs
