#pragma once

// Definition-level reference implementations used only by tests. Each one
// recomputes its answer from the bare definition, independently of the
// library's data structures, so library results can be checked against them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mcs/core.hpp"
#include "mcs/enumerator.hpp"

namespace naive {

// Plain quadratic subsequence test.
inline bool sub(const std::vector<mcs::SymbolId>& x, const std::vector<mcs::SymbolId>& s) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < s.size() && j < x.size(); ++i)
        if (s[i] == x[j])
            ++j;
    return j == x.size();
}

inline bool common_sub(const std::vector<mcs::SymbolId>& x, const mcs::InstanceSet& inst) {
    for (const mcs::Seq& s : inst.strings())
        if (!sub(x, s.ids))
            return false;
    return true;
}

// Every distinct common subsequence, by walking all masks of the shortest
// string (each common subsequence is a subsequence of it).
inline std::set<std::vector<mcs::SymbolId>> all_common_subsequences(const mcs::InstanceSet& inst) {
    std::size_t shortest = 0;
    for (std::size_t i = 1; i < inst.k(); ++i)
        if (inst.strings()[i].length() < inst.strings()[shortest].length())
            shortest = i;
    const std::vector<mcs::SymbolId>& base = inst.strings()[shortest].ids;
    const std::size_t l = base.size();

    std::set<std::vector<mcs::SymbolId>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
        std::vector<mcs::SymbolId> cand;
        for (std::size_t p = 0; p < l; ++p)
            if (mask & (std::uint64_t{1} << p))
                cand.push_back(base[p]);
        if (common_sub(cand, inst))
            out.insert(std::move(cand));
    }
    return out;
}

// Maximal = not a proper subsequence of another common subsequence.
inline std::vector<mcs::Seq> mcs_set(const mcs::InstanceSet& inst) {
    std::set<std::vector<mcs::SymbolId>> cs = all_common_subsequences(inst);
    std::vector<mcs::Seq> out;
    for (const auto& x : cs) {
        bool maximal = true;
        for (const auto& y : cs) {
            if (x != y && sub(x, y)) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            out.push_back(mcs::Seq(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// True iff some proper common supersequence of x exists among the
// subsequences of the first string. Exact complement of maximality for
// common subsequences x.
inline bool has_proper_cs_supersequence(const std::vector<mcs::SymbolId>& x,
                                        const mcs::InstanceSet& inst) {
    for (const auto& y : all_common_subsequences(inst))
        if (y != x && sub(x, y))
            return true;
    return false;
}

// Unshiftable tuples recomputed as a fixed point with repeated full passes;
// rightmost occurrences are found by backward linear scans.
struct Tuple {
    std::vector<std::int32_t> pos;
    mcs::SymbolId symbol;
    auto operator<=>(const Tuple&) const = default;
};

inline std::set<Tuple> unshiftables(const mcs::InstanceSet& inst) {
    const std::size_t k = inst.k();
    const std::size_t sigma = inst.alphabet().size();

    auto rightmost_before = [&](std::size_t i, mcs::SymbolId c,
                                std::int32_t bound) -> std::int32_t {
        const auto& ids = inst.strings()[i].ids;
        for (std::int32_t p = bound - 1; p >= 1; --p)
            if (ids[static_cast<std::size_t>(p - 1)] == c)
                return p;
        return 0;
    };

    std::vector<std::int32_t> sentinel;
    for (const mcs::Seq& s : inst.strings())
        sentinel.push_back(static_cast<std::int32_t>(s.length() + 1));

    std::set<Tuple> out;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<std::int32_t>> witnesses{sentinel};
        for (const Tuple& t : out)
            witnesses.push_back(t.pos);
        for (const auto& v : witnesses) {
            for (mcs::SymbolId c = 0; static_cast<std::size_t>(c) < sigma; ++c) {
                Tuple u;
                u.symbol = c;
                bool complete = true;
                for (std::size_t i = 0; i < k && complete; ++i) {
                    std::int32_t r = rightmost_before(i, c, v[i]);
                    if (r == 0)
                        complete = false;
                    else
                        u.pos.push_back(r);
                }
                if (complete && out.insert(u).second)
                    changed = true;
            }
        }
    }
    return out;
}

// Direct quantifier form of the extension set.
inline std::set<Tuple> ext(const std::set<Tuple>& entries, const std::vector<std::int32_t>& lo) {
    auto inside = [&](const Tuple& u) {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (u.pos[i] <= lo[i])
                return false;
        return true;
    };
    std::set<Tuple> out;
    for (const Tuple& u : entries) {
        if (!inside(u))
            continue;
        bool dominated = false;
        for (const Tuple& v : entries) {
            if (!inside(v))
                continue;
            bool strictly_below = true;
            for (std::size_t i = 0; i < lo.size(); ++i)
                if (v.pos[i] >= u.pos[i])
                    strictly_below = false;
            if (strictly_below) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            out.insert(u);
    }
    return out;
}

// --- small instance builders -------------------------------------------

inline mcs::InstanceSet chars_instance(const std::vector<std::string>& strings) {
    mcs::Alphabet a;
    std::vector<mcs::Seq> seqs;
    for (const std::string& s : strings) {
        mcs::Seq q;
        for (char c : s)
            q.ids.push_back(a.intern(std::string_view(&c, 1)));
        seqs.push_back(std::move(q));
    }
    return mcs::InstanceSet(std::move(a), std::move(seqs));
}

inline mcs::Seq chars_seq(const mcs::Alphabet& a, const std::string& s) {
    mcs::Seq q;
    for (char c : s) {
        auto id = a.find(std::string_view(&c, 1));
        if (!id)
            throw std::runtime_error("token not in alphabet: " + std::string(1, c));
        q.ids.push_back(*id);
    }
    return q;
}

inline std::int32_t draw(std::mt19937_64& rng, std::int32_t lo, std::int32_t hi) {
    return lo + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Random instance over single-character tokens a, b, c, ...
inline mcs::InstanceSet random_instance(std::mt19937_64& rng, std::int32_t k_lo, std::int32_t k_hi,
                                        std::int32_t sigma_hi, std::int32_t len_hi) {
    std::int32_t k = draw(rng, k_lo, k_hi);
    std::int32_t sigma = draw(rng, 1, sigma_hi);
    std::vector<std::string> strings;
    for (std::int32_t i = 0; i < k; ++i) {
        // Short and empty strings stay reachable, most draws are longer.
        std::int32_t len = rng() % 20 == 0 ? 0 : draw(rng, 1, len_hi);
        std::string s;
        for (std::int32_t j = 0; j < len; ++j)
            s.push_back(static_cast<char>('a' + draw(rng, 0, sigma - 1)));
        strings.push_back(std::move(s));
    }
    return chars_instance(strings);
}

inline std::vector<mcs::Seq> collect_sorted(const mcs::InstanceSet& inst,
                                            std::size_t tuple_cap = mcs::kDefaultTupleCap) {
    std::vector<mcs::Seq> out;
    mcs::enumerate_mcs(
        inst,
        [&](const mcs::Seq& s) {
            out.push_back(s);
            return true;
        },
        tuple_cap);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace naive
