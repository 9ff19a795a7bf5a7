#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mcs/errors.hpp"

namespace mcs {

using SymbolId = std::int32_t;

// Ordered set of distinct symbol tokens; ids are dense, 0-based, in insertion order.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> tokens);

    // Returns the id of an existing token, or appends it and returns the new id.
    SymbolId intern(std::string_view token);
    std::optional<SymbolId> find(std::string_view token) const;
    const std::string& token(SymbolId id) const;
    std::size_t size() const { return tokens_; }
    const std::vector<std::string>& tokens() const { return token_list_; }

    bool operator==(const Alphabet& other) const { return token_list_ == other.token_list_; }

private:
    std::size_t tokens_ = 0;
    std::vector<std::string> token_list_;
    std::unordered_map<std::string, SymbolId> lookup_;
};

// A string over an Alphabet, stored as symbol ids.
struct Seq {
    std::vector<SymbolId> ids;

    Seq() = default;
    explicit Seq(std::vector<SymbolId> v) : ids(std::move(v)) {}

    std::size_t length() const { return ids.size(); }
    bool empty() const { return ids.empty(); }
    std::span<const SymbolId> span() const { return {ids.data(), ids.size()}; }

    auto operator<=>(const Seq&) const = default;
};

struct SeqHash {
    std::size_t operator()(const Seq& s) const;
};

using IdSpan = std::span<const SymbolId>;

// Ordered, non-empty collection of strings sharing one alphabet.
class InstanceSet {
public:
    InstanceSet(Alphabet alphabet, std::vector<Seq> strings);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Seq>& strings() const { return strings_; }
    std::size_t k() const { return strings_.size(); }
    std::size_t max_len() const { return max_len_; }
    std::size_t min_len() const { return min_len_; }
    std::size_t total_size() const { return total_; }

    // Spans over every string, each optionally cut to a prefix length.
    std::vector<IdSpan> spans() const;

    bool operator==(const InstanceSet& other) const {
        return alphabet_ == other.alphabet_ && strings_ == other.strings_;
    }

private:
    Alphabet alphabet_;
    std::vector<Seq> strings_;
    std::size_t max_len_ = 0;
    std::size_t min_len_ = 0;
    std::size_t total_ = 0;
};

// 1-based, strictly increasing positions witnessing one string inside another.
struct Arrangement {
    std::vector<std::int32_t> positions;
};

// Per-string, per-symbol sorted occurrence positions (1-based) with
// predecessor/successor queries. 0 means "no such occurrence".
class OccurrenceTables {
public:
    OccurrenceTables(const std::vector<IdSpan>& strings, std::size_t alphabet_size);
    explicit OccurrenceTables(const InstanceSet& inst);

    std::int32_t rightmost_before(std::size_t string_idx, SymbolId c, std::int32_t pos) const;
    std::int32_t leftmost_after(std::size_t string_idx, SymbolId c, std::int32_t pos) const;
    const std::vector<std::int32_t>& positions(std::size_t string_idx, SymbolId c) const;

private:
    std::vector<std::vector<std::vector<std::int32_t>>> occ_;
};

// Greedy left-to-right embedding of x into s. The returned arrangement is
// position-wise minimal among all arrangements of x in s.
std::optional<Arrangement> is_subsequence(IdSpan x, IdSpan s);
std::optional<Arrangement> is_subsequence(const Seq& x, const Seq& s);

bool is_common_subsequence(IdSpan x, const std::vector<IdSpan>& strings);
bool is_common_subsequence(const Seq& x, const InstanceSet& inst);

// True iff x is a common subsequence of all strings and no single-symbol
// insertion into x yields another common subsequence. Checking single
// insertions suffices: any proper common supersequence of x contains one.
bool is_mcs(IdSpan x, const std::vector<IdSpan>& strings, std::size_t alphabet_size);
bool is_mcs(const Seq& x, const InstanceSet& inst);

// Drops every symbol that does not occur in all k strings. Such symbols can
// never appear in a common subsequence, so the MCS set is unchanged.
InstanceSet prune_alphabet(const InstanceSet& inst);

} // namespace mcs
