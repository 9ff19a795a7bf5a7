#pragma once

#include <cstdint>
#include <vector>

#include "mcs/core.hpp"

namespace mcs {

// Default cap on the number of subsequence masks the oracle will walk.
inline constexpr std::uint64_t kDefaultMaskCap = std::uint64_t{1} << 22;

// Every maximal common subsequence of an instance, sorted lexicographically by
// symbol id, duplicate-free.
struct McsSet {
    std::vector<Seq> members;

    std::size_t cardinality() const { return members.size(); }
    bool contains(const Seq& s) const;
    bool operator==(const McsSet&) const = default;
};

// Exhaustive reference enumeration: prunes symbols missing from some string,
// walks all 2^l subsequence masks of the shortest pruned string (every common
// subsequence is one of them), deduplicates, and keeps the maximal ones.
// Throws BudgetExceededError when 2^l would exceed mask_cap.
McsSet enumerate_bruteforce(const InstanceSet& inst, std::uint64_t mask_cap = kDefaultMaskCap);

} // namespace mcs
