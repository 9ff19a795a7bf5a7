#include "mcs/core.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace mcs {

Alphabet::Alphabet(std::vector<std::string> tokens) {
    for (auto& t : tokens) {
        if (lookup_.count(t) != 0)
            throw ContractError("duplicate token in alphabet: " + t);
        lookup_.emplace(t, static_cast<SymbolId>(tokens_));
        token_list_.push_back(std::move(t));
        ++tokens_;
    }
}

SymbolId Alphabet::intern(std::string_view token) {
    auto it = lookup_.find(std::string(token));
    if (it != lookup_.end())
        return it->second;
    SymbolId id = static_cast<SymbolId>(tokens_);
    token_list_.emplace_back(token);
    lookup_.emplace(token_list_.back(), id);
    ++tokens_;
    return id;
}

std::optional<SymbolId> Alphabet::find(std::string_view token) const {
    auto it = lookup_.find(std::string(token));
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

const std::string& Alphabet::token(SymbolId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= tokens_)
        throw ContractError("symbol id out of range");
    return token_list_[static_cast<std::size_t>(id)];
}

std::size_t SeqHash::operator()(const Seq& s) const {
    std::size_t h = 1469598103934665603ull;
    for (SymbolId id : s.ids) {
        h ^= static_cast<std::size_t>(id) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

InstanceSet::InstanceSet(Alphabet alphabet, std::vector<Seq> strings)
    : alphabet_(std::move(alphabet)), strings_(std::move(strings)) {
    if (strings_.empty())
        throw ContractError("instance needs at least one string");
    min_len_ = std::numeric_limits<std::size_t>::max();
    for (const Seq& s : strings_) {
        for (SymbolId id : s.ids)
            if (id < 0 || static_cast<std::size_t>(id) >= alphabet_.size())
                throw ContractError("string contains symbol id outside the alphabet");
        max_len_ = std::max(max_len_, s.length());
        min_len_ = std::min(min_len_, s.length());
        total_ += s.length();
    }
}

std::vector<IdSpan> InstanceSet::spans() const {
    std::vector<IdSpan> out;
    out.reserve(strings_.size());
    for (const Seq& s : strings_)
        out.push_back(s.span());
    return out;
}

OccurrenceTables::OccurrenceTables(const std::vector<IdSpan>& strings, std::size_t alphabet_size) {
    occ_.resize(strings.size());
    for (std::size_t i = 0; i < strings.size(); ++i) {
        occ_[i].assign(alphabet_size, {});
        for (std::size_t p = 0; p < strings[i].size(); ++p) {
            SymbolId c = strings[i][p];
            assert(c >= 0 && static_cast<std::size_t>(c) < alphabet_size);
            occ_[i][static_cast<std::size_t>(c)].push_back(static_cast<std::int32_t>(p + 1));
        }
    }
}

OccurrenceTables::OccurrenceTables(const InstanceSet& inst)
    : OccurrenceTables(inst.spans(), inst.alphabet().size()) {}

std::int32_t OccurrenceTables::rightmost_before(std::size_t string_idx, SymbolId c,
                                                std::int32_t pos) const {
    const auto& v = occ_[string_idx][static_cast<std::size_t>(c)];
    auto it = std::lower_bound(v.begin(), v.end(), pos);
    if (it == v.begin())
        return 0;
    return *std::prev(it);
}

std::int32_t OccurrenceTables::leftmost_after(std::size_t string_idx, SymbolId c,
                                              std::int32_t pos) const {
    const auto& v = occ_[string_idx][static_cast<std::size_t>(c)];
    auto it = std::upper_bound(v.begin(), v.end(), pos);
    if (it == v.end())
        return 0;
    return *it;
}

const std::vector<std::int32_t>& OccurrenceTables::positions(std::size_t string_idx,
                                                             SymbolId c) const {
    return occ_[string_idx][static_cast<std::size_t>(c)];
}

std::optional<Arrangement> is_subsequence(IdSpan x, IdSpan s) {
    Arrangement a;
    a.positions.reserve(x.size());
    std::size_t j = 0;
    for (std::size_t p = 0; p < s.size() && j < x.size(); ++p) {
        if (s[p] == x[j]) {
            a.positions.push_back(static_cast<std::int32_t>(p + 1));
            ++j;
        }
    }
    if (j < x.size())
        return std::nullopt;
    return a;
}

std::optional<Arrangement> is_subsequence(const Seq& x, const Seq& s) {
    return is_subsequence(x.span(), s.span());
}

bool is_common_subsequence(IdSpan x, const std::vector<IdSpan>& strings) {
    for (const IdSpan& s : strings)
        if (!is_subsequence(x, s))
            return false;
    return true;
}

bool is_common_subsequence(const Seq& x, const InstanceSet& inst) {
    return is_common_subsequence(x.span(), inst.spans());
}

namespace {

// Endpoint of the greedy leftmost embedding of each prefix of x in s.
// left[p] is the position matching x[p-1]; left[0] = 0. Empty result if x is
// not a subsequence of s.
std::vector<std::int32_t> prefix_endpoints(IdSpan x, IdSpan s) {
    std::vector<std::int32_t> left(x.size() + 1, 0);
    std::size_t p = 0;
    for (std::size_t q = 0; q < s.size() && p < x.size(); ++q) {
        if (s[q] == x[p]) {
            ++p;
            left[p] = static_cast<std::int32_t>(q + 1);
        }
    }
    if (p < x.size())
        return {};
    return left;
}

// Start point of the greedy rightmost embedding of each suffix of x in s.
// right[p] is the position matching x[p-1]; right[|x|+1] = |s|+1.
std::vector<std::int32_t> suffix_startpoints(IdSpan x, IdSpan s) {
    std::vector<std::int32_t> right(x.size() + 2, 0);
    right[x.size() + 1] = static_cast<std::int32_t>(s.size() + 1);
    std::size_t matched = 0;
    for (std::size_t q = s.size(); q > 0 && matched < x.size(); --q) {
        std::size_t p = x.size() - matched;
        if (s[q - 1] == x[p - 1]) {
            right[p] = static_cast<std::int32_t>(q);
            ++matched;
        }
    }
    return right;
}

} // namespace

bool is_mcs(IdSpan x, const std::vector<IdSpan>& strings, std::size_t alphabet_size) {
    const std::size_t k = strings.size();
    const std::size_t m = x.size();

    std::vector<std::vector<std::int32_t>> left(k), right(k);
    for (std::size_t i = 0; i < k; ++i) {
        left[i] = prefix_endpoints(x, strings[i]);
        if (left[i].empty())
            return false; // not even a common subsequence
        right[i] = suffix_startpoints(x, strings[i]);
    }

    OccurrenceTables occ(strings, alphabet_size);

    // x is maximal iff no gap p and symbol c admit an occurrence of c strictly
    // between the greedy prefix endpoint and the greedy suffix start point in
    // every string. Extremal embeddings make this test exact.
    for (std::size_t p = 0; p <= m; ++p) {
        for (SymbolId c = 0; static_cast<std::size_t>(c) < alphabet_size; ++c) {
            bool fits_everywhere = true;
            for (std::size_t i = 0; i < k; ++i) {
                std::int32_t q = occ.leftmost_after(i, c, left[i][p]);
                if (q == 0 || q >= right[i][p + 1]) {
                    fits_everywhere = false;
                    break;
                }
            }
            if (fits_everywhere)
                return false;
        }
    }
    return true;
}

bool is_mcs(const Seq& x, const InstanceSet& inst) {
    for (SymbolId id : x.ids)
        if (id < 0 || static_cast<std::size_t>(id) >= inst.alphabet().size())
            throw ContractError("candidate contains symbol id outside the instance alphabet");
    return is_mcs(x.span(), inst.spans(), inst.alphabet().size());
}

InstanceSet prune_alphabet(const InstanceSet& inst) {
    const std::size_t sigma = inst.alphabet().size();
    std::vector<bool> everywhere(sigma, true);
    for (const Seq& s : inst.strings()) {
        std::vector<bool> present(sigma, false);
        for (SymbolId id : s.ids)
            present[static_cast<std::size_t>(id)] = true;
        for (std::size_t c = 0; c < sigma; ++c)
            everywhere[c] = everywhere[c] && present[c];
    }

    std::vector<std::string> kept_tokens;
    std::vector<SymbolId> remap(sigma, -1);
    for (std::size_t c = 0; c < sigma; ++c) {
        if (everywhere[c]) {
            remap[c] = static_cast<SymbolId>(kept_tokens.size());
            kept_tokens.push_back(inst.alphabet().token(static_cast<SymbolId>(c)));
        }
    }

    std::vector<Seq> pruned;
    pruned.reserve(inst.k());
    for (const Seq& s : inst.strings()) {
        Seq t;
        for (SymbolId id : s.ids)
            if (remap[static_cast<std::size_t>(id)] >= 0)
                t.ids.push_back(remap[static_cast<std::size_t>(id)]);
        pruned.push_back(std::move(t));
    }
    return InstanceSet(Alphabet(std::move(kept_tokens)), std::move(pruned));
}

} // namespace mcs
