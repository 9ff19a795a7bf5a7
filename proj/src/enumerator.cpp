#include "mcs/enumerator.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

namespace mcs {

std::size_t PositionTupleHash::operator()(const PositionTuple& t) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int32_t p : t.pos) {
        h ^= static_cast<std::size_t>(p) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

UnshiftableIndex::UnshiftableIndex(const InstanceSet& inst) : occ_(inst) {
    sentinel_.pos.reserve(inst.k());
    for (const Seq& s : inst.strings())
        sentinel_.pos.push_back(static_cast<std::int32_t>(s.length() + 1));
}

std::optional<PositionTuple> UnshiftableIndex::witness_of(const PositionTuple& t) const {
    auto it = by_tuple_.find(t);
    if (it == by_tuple_.end())
        return std::nullopt;
    return witnesses_[it->second];
}

UnshiftableIndex find_unshiftables(const InstanceSet& inst, std::size_t tuple_cap) {
    if (inst.k() < 2)
        throw ContractError("unshiftable index needs at least two strings");

    UnshiftableIndex idx(inst);
    const std::size_t k = inst.k();
    const std::size_t sigma = inst.alphabet().size();

    std::vector<PositionTuple> worklist{idx.sentinel_};
    while (!worklist.empty()) {
        PositionTuple v = std::move(worklist.back());
        worklist.pop_back();
        for (SymbolId c = 0; static_cast<std::size_t>(c) < sigma; ++c) {
            PositionTuple u;
            u.pos.resize(k);
            bool complete = true;
            for (std::size_t i = 0; i < k; ++i) {
                std::int32_t r = idx.occ_.rightmost_before(i, c, v.pos[i]);
                if (r == 0) {
                    complete = false;
                    break;
                }
                u.pos[i] = r;
            }
            if (!complete)
                continue;
            auto [it, inserted] = idx.by_tuple_.emplace(u, idx.entries_.size());
            if (!inserted)
                continue;
            if (idx.entries_.size() >= tuple_cap)
                throw CapacityExceededError("unshiftable index exceeds tuple cap " +
                                            std::to_string(tuple_cap));
            idx.entries_.push_back(Unshiftable{u, c});
            idx.witnesses_.push_back(v);
            worklist.push_back(std::move(u));
        }
    }

    // |entries| never exceeds the product of the string lengths.
#ifndef NDEBUG
    std::size_t bound = 1;
    bool bound_overflow = false;
    for (const Seq& s : inst.strings()) {
        if (s.length() == 0) {
            bound = 0;
            bound_overflow = false;
            break;
        }
        if (bound > std::numeric_limits<std::size_t>::max() / s.length()) {
            bound_overflow = true;
            break;
        }
        bound *= s.length();
    }
    assert(bound_overflow || idx.entries_.size() <= bound);
#endif

    // Canonical order: by symbol, then by tuple. Enumeration and Ext sets
    // inherit determinism from it.
    std::vector<std::size_t> order(idx.entries_.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Unshiftable& ua = idx.entries_[a];
        const Unshiftable& ub = idx.entries_[b];
        if (ua.symbol != ub.symbol)
            return ua.symbol < ub.symbol;
        return ua.tuple < ub.tuple;
    });
    std::vector<Unshiftable> entries_sorted;
    std::vector<PositionTuple> witnesses_sorted;
    entries_sorted.reserve(order.size());
    witnesses_sorted.reserve(order.size());
    for (std::size_t i : order) {
        entries_sorted.push_back(std::move(idx.entries_[i]));
        witnesses_sorted.push_back(std::move(idx.witnesses_[i]));
    }
    idx.entries_ = std::move(entries_sorted);
    idx.witnesses_ = std::move(witnesses_sorted);
    for (std::size_t i = 0; i < idx.entries_.size(); ++i)
        idx.by_tuple_[idx.entries_[i].tuple] = i;

    return idx;
}

namespace {

// u strictly beyond lo in every coordinate.
bool beyond(const PositionTuple& u, const PositionTuple& lo) {
    for (std::size_t i = 0; i < u.pos.size(); ++i)
        if (u.pos[i] <= lo.pos[i])
            return false;
    return true;
}

// v strictly below u in every coordinate.
bool dominates(const PositionTuple& v, const PositionTuple& u) {
    for (std::size_t i = 0; i < u.pos.size(); ++i)
        if (v.pos[i] >= u.pos[i])
            return false;
    return true;
}

std::vector<Unshiftable> ext_of(const PositionTuple& bounds, const UnshiftableIndex& idx) {
    std::vector<const Unshiftable*> window;
    for (const Unshiftable& u : idx.entries())
        if (beyond(u.tuple, bounds))
            window.push_back(&u);

    // A dominated tuple is always dominated by some minimal tuple, and any
    // dominator has strictly smaller coordinate sum; so scanning in sum order
    // against the minima found so far decides every tuple.
    std::vector<std::size_t> order(window.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::vector<std::int64_t> sums(window.size(), 0);
    for (std::size_t i = 0; i < window.size(); ++i)
        for (std::int32_t p : window[i]->tuple.pos)
            sums[i] += p;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sums[a] < sums[b]; });

    std::vector<const Unshiftable*> minima;
    for (std::size_t i : order) {
        bool dominated = false;
        for (const Unshiftable* m : minima) {
            if (dominates(m->tuple, window[i]->tuple)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            minima.push_back(window[i]);
    }

    std::vector<Unshiftable> out;
    out.reserve(minima.size());
    for (const Unshiftable* m : minima)
        out.push_back(*m);
    std::sort(out.begin(), out.end(), [](const Unshiftable& a, const Unshiftable& b) {
        if (a.symbol != b.symbol)
            return a.symbol < b.symbol;
        return a.tuple < b.tuple;
    });
    return out;
}

} // namespace

std::vector<Unshiftable> compute_ext(const PrefixState& state, const UnshiftableIndex& idx) {
    return ext_of(state.bounds, idx);
}

bool prefix_maximality_guard(const Seq& prefix, const PositionTuple& u, const InstanceSet& inst) {
    if (u.pos.size() != inst.k())
        throw ContractError("tuple arity does not match the instance");
    std::vector<IdSpan> truncated;
    truncated.reserve(inst.k());
    for (std::size_t i = 0; i < inst.k(); ++i) {
        std::size_t cut = static_cast<std::size_t>(u.pos[i]) - 1;
        truncated.push_back(inst.strings()[i].span().subspan(0, cut));
    }
    return is_mcs(prefix.span(), truncated, inst.alphabet().size());
}

namespace {

class BinaryPartitionRun {
public:
    BinaryPartitionRun(const InstanceSet& inst, const UnshiftableIndex& idx,
                       const McsVisitor& visit)
        : inst_(inst), idx_(idx), visit_(visit) {
        state_.bounds.pos.assign(inst.k(), 0);
    }

    std::uint64_t run() {
        descend();
        return emitted_;
    }

private:
    void descend() {
        if (stop_)
            return;
        std::vector<Unshiftable> ext = ext_of(state_.bounds, idx_);
        if (ext.empty()) {
            ++emitted_;
            if (!visit_(state_.prefix))
                stop_ = true;
            return;
        }
        for (std::size_t b = 0; b < ext.size() && !stop_;) {
            SymbolId c = ext[b].symbol;
            std::size_t e = b;
            bool pass = false;
            for (; e < ext.size() && ext[e].symbol == c; ++e)
                if (!pass && prefix_maximality_guard(state_.prefix, ext[e].tuple, inst_))
                    pass = true;
            if (pass)
                branch(c);
            b = e;
        }
    }

    void branch(SymbolId c) {
        PositionTuple saved = state_.bounds;
        for (std::size_t i = 0; i < inst_.k(); ++i) {
            std::int32_t nxt = idx_.occurrences().leftmost_after(i, c, state_.bounds.pos[i]);
            assert(nxt != 0);
            state_.bounds.pos[i] = nxt;
        }
        state_.prefix.ids.push_back(c);
        descend();
        state_.prefix.ids.pop_back();
        state_.bounds = std::move(saved);
    }

    const InstanceSet& inst_;
    const UnshiftableIndex& idx_;
    const McsVisitor& visit_;
    PrefixState state_;
    std::uint64_t emitted_ = 0;
    bool stop_ = false;
};

} // namespace

std::uint64_t enumerate_mcs(const InstanceSet& inst, const UnshiftableIndex& idx,
                            const McsVisitor& visit) {
    if (inst.k() == 1) {
        visit(inst.strings()[0]);
        return 1;
    }
    return BinaryPartitionRun(inst, idx, visit).run();
}

std::uint64_t enumerate_mcs(const InstanceSet& inst, const McsVisitor& visit,
                            std::size_t tuple_cap) {
    if (inst.k() == 1) {
        // The lone string is its own unique maximal common subsequence.
        visit(inst.strings()[0]);
        return 1;
    }
    UnshiftableIndex idx = find_unshiftables(inst, tuple_cap);
    return enumerate_mcs(inst, idx, visit);
}

} // namespace mcs
