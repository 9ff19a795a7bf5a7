#include "mcs/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace mcs {

bool McsSet::contains(const Seq& s) const {
    return std::binary_search(members.begin(), members.end(), s);
}

McsSet enumerate_bruteforce(const InstanceSet& inst, std::uint64_t mask_cap) {
    InstanceSet pruned = prune_alphabet(inst);

    // Pruning renames symbol ids; results are mapped back to the caller's
    // alphabet at the end.
    std::vector<SymbolId> back(pruned.alphabet().size());
    for (std::size_t c = 0; c < pruned.alphabet().size(); ++c)
        back[c] = *inst.alphabet().find(pruned.alphabet().token(static_cast<SymbolId>(c)));

    std::size_t shortest = 0;
    for (std::size_t i = 1; i < pruned.k(); ++i)
        if (pruned.strings()[i].length() < pruned.strings()[shortest].length())
            shortest = i;
    const Seq& base = pruned.strings()[shortest];
    const std::size_t l = base.length();

    if (l >= 64 || (std::uint64_t{1} << l) > mask_cap)
        throw BudgetExceededError("mask budget exceeded: 2^" + std::to_string(l) +
                                  " masks over cap " + std::to_string(mask_cap));

    const std::vector<IdSpan> spans = pruned.spans();
    const std::size_t sigma = pruned.alphabet().size();

    std::unordered_set<Seq, SeqHash> seen;
    McsSet out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
        Seq cand;
        for (std::size_t p = 0; p < l; ++p)
            if (mask & (std::uint64_t{1} << p))
                cand.ids.push_back(base.ids[p]);
        if (!seen.insert(cand).second)
            continue;
        if (is_mcs(cand.span(), spans, sigma)) {
            for (SymbolId& id : cand.ids)
                id = back[static_cast<std::size_t>(id)];
            out.members.push_back(std::move(cand));
        }
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

} // namespace mcs
