#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mcs/core.hpp"

namespace mcs {

// Default cap on unshiftable index entries.
inline constexpr std::size_t kDefaultTupleCap = 10'000'000;

// One 1-based position per string; |S_i|+1 acts as the end sentinel.
struct PositionTuple {
    std::vector<std::int32_t> pos;

    auto operator<=>(const PositionTuple&) const = default;
};

struct PositionTupleHash {
    std::size_t operator()(const PositionTuple& t) const;
};

// A tuple of positions, one per string, all holding the same symbol.
struct Unshiftable {
    PositionTuple tuple;
    SymbolId symbol = -1;
};

// Prefix of a solution under construction together with the endpoints of its
// greedy leftmost embedding into each string (0 for the empty prefix).
struct PrefixState {
    Seq prefix;
    PositionTuple bounds;
};

// All unshiftable tuples of an instance.
//
// A tuple u is unshiftable iff there is a witness tuple v, itself unshiftable
// or the end sentinel, such that u_i is the rightmost occurrence of u's symbol
// in S_i strictly before v_i, for every i. The set is the closure of the end
// sentinel under that rule, computed with a worklist; each tuple expands once.
class UnshiftableIndex {
public:
    std::span<const Unshiftable> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const PositionTuple& sentinel() const { return sentinel_; }
    const OccurrenceTables& occurrences() const { return occ_; }

    // Witness recorded when the entry was first reached; absent for tuples
    // that are not entries. Witness chains always end at the sentinel.
    std::optional<PositionTuple> witness_of(const PositionTuple& t) const;

    friend UnshiftableIndex find_unshiftables(const InstanceSet&, std::size_t);

private:
    UnshiftableIndex(const InstanceSet& inst);

    std::vector<Unshiftable> entries_;           // sorted by (symbol, tuple)
    std::vector<PositionTuple> witnesses_;       // parallel to entries_
    std::unordered_map<PositionTuple, std::size_t, PositionTupleHash> by_tuple_;
    PositionTuple sentinel_;
    OccurrenceTables occ_;
};

// Builds the unshiftable index. Requires k >= 2. Pruning the instance first is
// unnecessary: a symbol missing from some string never forms a tuple.
// Throws CapacityExceededError when the index would exceed tuple_cap entries.
UnshiftableIndex find_unshiftables(const InstanceSet& inst,
                                   std::size_t tuple_cap = kDefaultTupleCap);

// The extension candidates of a prefix state: entries lying strictly beyond
// the prefix bounds in every coordinate, minus those strictly dominated by
// another such entry in every coordinate. Sorted by (symbol, tuple).
std::vector<Unshiftable> compute_ext(const PrefixState& state, const UnshiftableIndex& idx);

// True iff `prefix` is a maximal common subsequence of the instance truncated
// strictly before the tuple: S_1[1, u_1-1], ..., S_k[1, u_k-1]. The prefix is
// required to be a common subsequence of those truncations.
bool prefix_maximality_guard(const Seq& prefix, const PositionTuple& u, const InstanceSet& inst);

// Visitor for enumeration; return false to stop early.
using McsVisitor = std::function<bool(const Seq&)>;

// Enumerates every maximal common subsequence exactly once, in lexicographic
// symbol-id order, calling visit on each. Returns the number of emissions.
// Children of a prefix are explored per distinct candidate symbol; a symbol is
// followed iff the prefix is maximal within the truncation at one of its
// candidate tuples. The visitor must not re-enter the enumerator on the same
// instance data.
std::uint64_t enumerate_mcs(const InstanceSet& inst, const McsVisitor& visit,
                            std::size_t tuple_cap = kDefaultTupleCap);

// Same, over a pre-built index (shareable across calls; never mutated).
std::uint64_t enumerate_mcs(const InstanceSet& inst, const UnshiftableIndex& idx,
                            const McsVisitor& visit);

} // namespace mcs
