#include "mcs/reductions.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>

#include "mcs/analysis.hpp"
#include "mcs/io.hpp"

namespace mcs {

// --------------------------------------------------------------------------
// CNF side
// --------------------------------------------------------------------------

Cnf3 Cnf3::make(std::int32_t var_count, std::vector<Clause> clauses) {
    if (var_count < 0)
        throw InvalidFormulaError("negative variable count");
    for (Clause& c : clauses) {
        std::sort(c.lits.begin(), c.lits.end(),
                  [](const Literal& a, const Literal& b) { return a.var < b.var; });
        for (const Literal& l : c.lits)
            if (l.var < 1 || l.var > var_count)
                throw InvalidFormulaError("literal variable out of range: " +
                                          std::to_string(l.var));
        if (c.lits[0].var == c.lits[1].var || c.lits[1].var == c.lits[2].var)
            throw InvalidFormulaError(
                "clause must use three distinct variables (repeated or complementary literals)");
    }
    Cnf3 phi;
    phi.var_count_ = var_count;
    phi.clauses_ = std::move(clauses);
    return phi;
}

bool has_universal_literal(const Cnf3& phi) {
    if (phi.clauses().empty())
        return true; // every literal is in all zero clauses
    for (const Literal& probe : phi.clauses().front().lits) {
        bool everywhere = true;
        for (const Clause& c : phi.clauses()) {
            bool in_clause = false;
            for (const Literal& l : c.lits)
                in_clause = in_clause || l == probe;
            if (!in_clause) {
                everywhere = false;
                break;
            }
        }
        if (everywhere)
            return true;
    }
    return false;
}

bool evaluate(const Cnf3& phi, const std::vector<bool>& assignment) {
    if (assignment.size() != static_cast<std::size_t>(phi.var_count()))
        throw ContractError("assignment arity does not match the formula");
    for (const Clause& c : phi.clauses()) {
        bool sat = false;
        for (const Literal& l : c.lits)
            sat = sat || assignment[static_cast<std::size_t>(l.var - 1)] == l.positive;
        if (!sat)
            return false;
    }
    return true;
}

Alphabet sat_alphabet(std::int32_t var_count) {
    std::vector<std::string> tokens;
    tokens.reserve(static_cast<std::size_t>(var_count) * 2);
    for (std::int32_t v = 1; v <= var_count; ++v) {
        tokens.push_back("x" + std::to_string(v));
        tokens.push_back("!x" + std::to_string(v));
    }
    return Alphabet(std::move(tokens));
}

SymbolId positive_id(std::int32_t var) { return 2 * (var - 1); }
SymbolId negative_id(std::int32_t var) { return 2 * (var - 1) + 1; }

namespace {

// R = xv !xv ... x1 !x1
std::vector<SymbolId> descending_run(std::int32_t var_count) {
    std::vector<SymbolId> r;
    r.reserve(static_cast<std::size_t>(var_count) * 2);
    for (std::int32_t v = var_count; v >= 1; --v) {
        r.push_back(positive_id(v));
        r.push_back(negative_id(v));
    }
    return r;
}

SymbolId literal_id(const Literal& l) {
    return l.positive ? positive_id(l.var) : negative_id(l.var);
}

} // namespace

Seq clause_string(const Clause& clause, std::int32_t var_count) {
    const std::vector<SymbolId> run = descending_run(var_count);
    const std::int32_t a = clause.lits[0].var;
    const std::int32_t b = clause.lits[1].var;
    const std::int32_t g = clause.lits[2].var;

    Seq s;
    auto append_runs = [&](std::int32_t count) {
        for (std::int32_t i = 0; i < count; ++i)
            s.ids.insert(s.ids.end(), run.begin(), run.end());
    };
    append_runs(a - 1);
    s.ids.push_back(literal_id(clause.lits[0]));
    append_runs(b - a);
    s.ids.push_back(literal_id(clause.lits[1]));
    append_runs(g - b);
    s.ids.push_back(literal_id(clause.lits[2]));
    append_runs(var_count - g);
    return s;
}

SatMcsInstance build_sat_instance(const Cnf3& phi) {
    if (has_universal_literal(phi))
        throw InvalidFormulaError(
            "some literal occurs in every clause (always the case with fewer than two clauses)");

    const std::int32_t v = phi.var_count();
    Seq s0;
    for (std::int32_t j = 1; j <= v; ++j) {
        s0.ids.push_back(positive_id(j));
        s0.ids.push_back(negative_id(j));
    }

    std::vector<Seq> strings{s0};
    for (const Clause& c : phi.clauses())
        strings.push_back(clause_string(c, v));

    std::vector<Seq> known;
    known.reserve(static_cast<std::size_t>(v));
    for (std::int32_t j = 1; j <= v; ++j) {
        Seq z;
        for (std::int32_t i = 1; i <= v; ++i) {
            if (i == j)
                continue;
            z.ids.push_back(positive_id(i));
            z.ids.push_back(negative_id(i));
        }
        known.push_back(std::move(z));
    }

    return SatMcsInstance{InstanceSet(sat_alphabet(v), std::move(strings)), std::move(known)};
}

std::vector<bool> decode_assignment(const Seq& witness, const Cnf3& phi) {
    SatMcsInstance sat = build_sat_instance(phi);

    for (const Seq& z : sat.known_mcs)
        if (witness == z)
            throw NotAWitnessError("witness is one of the built-in maximal strings");
    if (!is_common_subsequence(witness, sat.strings))
        throw NotAWitnessError("witness is not a common subsequence of the instance");

    std::unordered_set<SymbolId> present(witness.ids.begin(), witness.ids.end());
    const std::int32_t v = phi.var_count();
    std::vector<bool> assignment(static_cast<std::size_t>(v), false);
    for (std::int32_t j = 1; j <= v; ++j) {
        bool pos = present.count(positive_id(j)) != 0;
        bool neg = present.count(negative_id(j)) != 0;
        if (!pos && !neg)
            throw NotAWitnessError("witness misses both literals of variable " +
                                   std::to_string(j));
        assignment[static_cast<std::size_t>(j - 1)] = pos; // positive literal wins ties
    }
    return assignment;
}

std::optional<std::vector<bool>> sat_bruteforce(const Cnf3& phi, std::int32_t cap_vars) {
    const std::int32_t v = phi.var_count();
    if (v > cap_vars)
        throw BudgetExceededError("assignment budget exceeded: 2^" + std::to_string(v) +
                                  " assignments over cap 2^" + std::to_string(cap_vars));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v); ++mask) {
        std::vector<bool> assignment(static_cast<std::size_t>(v));
        for (std::int32_t j = 0; j < v; ++j)
            assignment[static_cast<std::size_t>(j)] = (mask >> j) & 1;
        if (evaluate(phi, assignment))
            return assignment;
    }
    return std::nullopt;
}

SatReductionReport verify_sat_reduction(const Cnf3& phi, std::size_t tuple_cap,
                                        std::int32_t sat_cap_vars) {
    SatReductionReport r;
    SatMcsInstance sat = build_sat_instance(phi);

    r.known_all_maximal = true;
    for (std::size_t j = 0; j < sat.known_mcs.size(); ++j) {
        if (!is_mcs(sat.known_mcs[j], sat.strings)) {
            r.known_all_maximal = false;
            r.failures.push_back("built-in string " + std::to_string(j + 1) +
                                 " is not maximal: " +
                                 format_seq(sat.known_mcs[j], sat.strings.alphabet(),
                                            TokenMode::tokens));
        }
    }

    r.sat_present = sat_bruteforce(phi, sat_cap_vars).has_value();

    std::optional<Seq> witness;
    if (r.known_all_maximal) {
        witness = another_mcs(sat.strings, sat.known_mcs, tuple_cap);
        r.witness_present = witness.has_value();
        if (r.sat_present != r.witness_present)
            r.failures.push_back(std::string("satisfiability disagrees with witness existence: ") +
                                 (r.sat_present ? "satisfiable" : "unsatisfiable") + " vs witness " +
                                 (r.witness_present ? "found" : "absent"));
        if (witness) {
            std::vector<bool> assignment = decode_assignment(*witness, phi);
            r.decoded_satisfies = evaluate(phi, assignment);
            if (!r.decoded_satisfies)
                r.failures.push_back("decoded assignment does not satisfy the formula; witness: " +
                                     format_seq(*witness, sat.strings.alphabet(),
                                                TokenMode::tokens));
        } else {
            r.decoded_satisfies = true; // nothing to decode
        }
    }

    r.pass = r.known_all_maximal && r.sat_present == r.witness_present && r.decoded_satisfies;
    return r;
}

Cnf3 parse_dimacs(std::istream& in) {
    std::string line;
    bool header_seen = false;
    std::int32_t var_count = 0;
    std::int64_t clause_count = 0;
    std::vector<std::int64_t> numbers;

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue; // blank
        if (first[0] == 'c' || first[0] == '%')
            continue;
        if (!header_seen) {
            if (first != "p")
                throw ParseError("expected DIMACS header 'p cnf V M'");
            std::string kind;
            if (!(ls >> kind >> var_count >> clause_count) || kind != "cnf" || var_count < 0 ||
                clause_count < 0)
                throw ParseError("malformed DIMACS header");
            std::string extra;
            if (ls >> extra)
                throw ParseError("trailing tokens after DIMACS header");
            header_seen = true;
            continue;
        }
        std::istringstream body(line); // ls consumed the first token during classification
        std::int64_t x;
        while (body >> x)
            numbers.push_back(x);
        if (!body.eof())
            throw ParseError("non-numeric token in DIMACS clause data");
    }
    if (!header_seen)
        throw ParseError("missing DIMACS header");

    std::vector<Clause> clauses;
    std::vector<Literal> current;
    for (std::int64_t x : numbers) {
        if (x == 0) {
            if (current.size() != 3)
                throw InvalidFormulaError("clause must have exactly three literals, got " +
                                          std::to_string(current.size()));
            clauses.push_back(Clause{{current[0], current[1], current[2]}});
            current.clear();
            continue;
        }
        std::int64_t v = x < 0 ? -x : x;
        if (v > var_count)
            throw ParseError("literal " + std::to_string(x) + " outside declared variable range");
        current.push_back(Literal{static_cast<std::int32_t>(v), x > 0});
    }
    if (!current.empty())
        throw ParseError("unterminated final clause (missing 0)");
    if (static_cast<std::int64_t>(clauses.size()) != clause_count)
        throw ParseError("clause count mismatch: header declares " + std::to_string(clause_count) +
                         ", file holds " + std::to_string(clauses.size()));
    return Cnf3::make(var_count, std::move(clauses));
}

// --------------------------------------------------------------------------
// Hypergraph side
// --------------------------------------------------------------------------

Hypergraph Hypergraph::make(std::int32_t vertex_count,
                            std::vector<std::vector<std::int32_t>> edges) {
    if (vertex_count < 0)
        throw ContractError("negative vertex count");
    std::set<std::vector<std::int32_t>> distinct;
    for (auto& e : edges) {
        if (e.empty())
            throw ContractError("empty hyperedge");
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > vertex_count)
                throw ContractError("edge vertex out of range: " + std::to_string(e[i]));
            if (i > 0 && e[i] == e[i - 1])
                throw ContractError("repeated vertex in an edge: " + std::to_string(e[i]));
        }
        if (!distinct.insert(e).second)
            throw ContractError("duplicate hyperedge");
    }
    Hypergraph h;
    h.n_ = vertex_count;
    h.edges_ = std::move(edges);
    return h;
}

std::optional<std::int32_t> Hypergraph::universal_vertex() const {
    if (edges_.empty())
        return n_ >= 1 ? std::optional<std::int32_t>(1) : std::nullopt;
    for (std::int32_t v : edges_.front()) {
        bool everywhere = true;
        for (const auto& e : edges_)
            if (!std::binary_search(e.begin(), e.end(), v)) {
                everywhere = false;
                break;
            }
        if (everywhere)
            return v;
    }
    return std::nullopt;
}

Alphabet binary_alphabet() { return Alphabet({"0", "1"}); }

namespace {

std::vector<bool> member_mask(const std::vector<std::int32_t>& members, std::int32_t n,
                              const char* what) {
    std::vector<bool> mask(static_cast<std::size_t>(n) + 1, false);
    for (std::int32_t v : members) {
        if (v < 1 || v > n)
            throw ContractError(std::string(what) + " vertex out of range: " + std::to_string(v));
        if (mask[static_cast<std::size_t>(v)])
            throw ContractError(std::string(what) + " lists vertex twice: " + std::to_string(v));
        mask[static_cast<std::size_t>(v)] = true;
    }
    return mask;
}

} // namespace

Seq psi(const std::vector<std::int32_t>& members, std::int32_t vertex_count) {
    std::vector<bool> mask = member_mask(members, vertex_count, "member set");
    Seq s;
    for (std::int32_t i = 1; i <= vertex_count; ++i) {
        s.ids.push_back(0);
        if (mask[static_cast<std::size_t>(i)])
            s.ids.push_back(1);
    }
    return s;
}

std::optional<std::vector<std::int32_t>> psi_inverse(const Seq& x) {
    std::vector<std::int32_t> members;
    std::int32_t block = 0;
    std::size_t i = 0;
    while (i < x.ids.size()) {
        if (x.ids[i] != 0)
            return std::nullopt; // block must open with 0
        ++block;
        ++i;
        if (i < x.ids.size() && x.ids[i] == 1) {
            members.push_back(block);
            ++i;
        }
    }
    return members;
}

Seq forbidden_pattern(const std::vector<std::int32_t>& edge, std::int32_t vertex_count) {
    if (edge.empty())
        throw ContractError("empty edge has no pattern");
    return psi(edge, vertex_count);
}

BinaryMcsInstance build_hypergraph_instance(const Hypergraph& h) {
    const std::int32_t n = h.vertex_count();
    if (n < 2)
        throw TooFewVerticesError("need at least two vertices, got " + std::to_string(n));
    if (auto v = h.universal_vertex())
        throw UniversalVertexError(
            "vertex " + std::to_string(*v) +
            " lies in every hyperedge (with no edges every vertex does)");

    std::vector<Seq> strings;
    Seq s0;
    for (std::int32_t i = 0; i < n; ++i) {
        s0.ids.push_back(0);
        s0.ids.push_back(1);
    }
    strings.push_back(std::move(s0));

    for (const auto& e : h.edges()) {
        // Block j shrinks to a lone 0 exactly when j = u_k + k - 1 for the
        // k-th edge member u_k.
        const std::int32_t blocks = n + static_cast<std::int32_t>(e.size()) - 1;
        std::vector<bool> shrunk(static_cast<std::size_t>(blocks) + 1, false);
        for (std::size_t k = 0; k < e.size(); ++k)
            shrunk[static_cast<std::size_t>(e[k]) + k] = true; // u_k + (k+1) - 1
        Seq s;
        for (std::int32_t j = 1; j <= blocks; ++j) {
            s.ids.push_back(0);
            if (!shrunk[static_cast<std::size_t>(j)])
                s.ids.push_back(1);
        }
        strings.push_back(std::move(s));
    }

    return BinaryMcsInstance{InstanceSet(binary_alphabet(), std::move(strings)), n};
}

std::vector<std::vector<std::int32_t>> enumerate_mis_bruteforce(const Hypergraph& h,
                                                                std::int32_t cap_vertices) {
    const std::int32_t n = h.vertex_count();
    if (n > cap_vertices)
        throw BudgetExceededError("vertex budget exceeded: 2^" + std::to_string(n) +
                                  " subsets over cap 2^" + std::to_string(cap_vertices));

    std::vector<std::uint32_t> edge_masks;
    for (const auto& e : h.edges()) {
        std::uint32_t m = 0;
        for (std::int32_t v : e)
            m |= std::uint32_t{1} << (v - 1);
        edge_masks.push_back(m);
    }
    auto independent = [&](std::uint32_t set) {
        for (std::uint32_t em : edge_masks)
            if ((set & em) == em)
                return false;
        return true;
    };

    std::vector<std::vector<std::int32_t>> out;
    for (std::uint32_t set = 0; set < (std::uint32_t{1} << n); ++set) {
        if (!independent(set))
            continue;
        bool maximal = true;
        for (std::int32_t w = 0; w < n && maximal; ++w)
            if (!(set & (std::uint32_t{1} << w)) && independent(set | (std::uint32_t{1} << w)))
                maximal = false;
        if (!maximal)
            continue;
        std::vector<std::int32_t> members;
        for (std::int32_t v = 1; v <= n; ++v)
            if (set & (std::uint32_t{1} << (v - 1)))
                members.push_back(v);
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

BijectionReport verify_bijection(const Hypergraph& h, std::uint64_t mask_cap,
                                 std::size_t tuple_cap, std::int32_t mis_cap_vertices) {
    BijectionReport r;
    BinaryMcsInstance bi = build_hypergraph_instance(h);
    const std::int32_t n = bi.vertex_count;

    std::vector<std::vector<std::int32_t>> mis = enumerate_mis_bruteforce(h, mis_cap_vertices);
    r.mis_count = mis.size();

    std::vector<Seq> enumerated;
    enumerate_mcs(
        bi.strings,
        [&](const Seq& s) {
            enumerated.push_back(s);
            return true;
        },
        tuple_cap);
    r.mcs_count = enumerated.size();

    std::set<Seq> mcs_set(enumerated.begin(), enumerated.end());
    if (mcs_set.size() != enumerated.size())
        r.failures.push_back("enumeration emitted a duplicate");

    try {
        McsSet oracle = enumerate_bruteforce(bi.strings, mask_cap);
        r.oracle_checked = true;
        std::vector<Seq> sorted(mcs_set.begin(), mcs_set.end());
        r.oracle_agrees = oracle.members == sorted;
        if (!r.oracle_agrees)
            r.failures.push_back("exhaustive enumeration disagrees with the streamed one");
    } catch (const BudgetExceededError&) {
        r.oracle_checked = false;
        r.oracle_agrees = false;
    }

    Seq base;
    for (std::int32_t i = 0; i + 1 < n; ++i) {
        base.ids.push_back(0);
        base.ids.push_back(1);
    }
    r.base_found = mcs_set.count(base) != 0;
    if (!r.base_found)
        r.failures.push_back("alternating base string is not among the maximal ones");

    std::set<Seq> expected;
    for (const auto& u : mis)
        expected.insert(psi(u, n));

    r.psi_image_exact = true;
    for (const Seq& s : mcs_set) {
        if (s == base)
            continue;
        if (expected.count(s) == 0) {
            r.psi_image_exact = false;
            r.failures.push_back("unexpected maximal string: " +
                                 format_seq(s, bi.strings.alphabet(), TokenMode::chars));
        }
    }
    for (const Seq& s : expected) {
        if (mcs_set.count(s) == 0) {
            r.psi_image_exact = false;
            r.failures.push_back("missing encoding of a maximal independent set: " +
                                 format_seq(s, bi.strings.alphabet(), TokenMode::chars));
        }
    }

    r.all_11_free = true;
    for (const Seq& s : mcs_set) {
        for (std::size_t i = 0; i + 1 < s.ids.size(); ++i) {
            if (s.ids[i] == 1 && s.ids[i + 1] == 1) {
                r.all_11_free = false;
                r.failures.push_back("maximal string holds adjacent 1s: " +
                                     format_seq(s, bi.strings.alphabet(), TokenMode::chars));
                break;
            }
        }
    }

    r.pass = r.base_found && r.psi_image_exact && r.all_11_free &&
             (!r.oracle_checked || r.oracle_agrees) && mcs_set.size() == enumerated.size();
    return r;
}

Hypergraph parse_hypergraph(std::istream& in) {
    std::string line;
    bool header_seen = false;
    std::int32_t n = 0;
    std::int64_t m = 0;
    std::vector<std::vector<std::int32_t>> edges;
    std::set<std::vector<std::int32_t>> distinct;

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue;
        if (first[0] == '#')
            continue;
        if (!header_seen) {
            if (first != "p")
                throw ParseError("expected hypergraph header 'p hg N M'");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "hg" || n < 0 || m < 0)
                throw ParseError("malformed hypergraph header");
            std::string extra;
            if (ls >> extra)
                throw ParseError("trailing tokens after hypergraph header");
            header_seen = true;
            continue;
        }
        if (static_cast<std::int64_t>(edges.size()) == m)
            throw ParseError("more edge lines than the header declares");
        std::vector<std::int32_t> e;
        std::istringstream es(line);
        std::int64_t v;
        while (es >> v) {
            if (v < 1 || v > n)
                throw ParseError("edge vertex out of range: " + std::to_string(v));
            e.push_back(static_cast<std::int32_t>(v));
        }
        if (!es.eof())
            throw ParseError("non-numeric token in edge line");
        std::sort(e.begin(), e.end());
        for (std::size_t i = 1; i < e.size(); ++i)
            if (e[i] == e[i - 1])
                throw ParseError("repeated vertex in an edge: " + std::to_string(e[i]));
        if (!distinct.insert(e).second)
            throw ParseError("duplicate hyperedge");
        edges.push_back(std::move(e));
    }
    if (!header_seen)
        throw ParseError("missing hypergraph header");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw ParseError("edge count mismatch: header declares " + std::to_string(m) +
                         ", file holds " + std::to_string(edges.size()));
    return Hypergraph::make(n, std::move(edges));
}

// --------------------------------------------------------------------------
// Seeded generators
// --------------------------------------------------------------------------

namespace {

std::int32_t draw(std::mt19937_64& rng, std::int32_t lo, std::int32_t hi) {
    return lo + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

} // namespace

Cnf3 random_cnf3(std::mt19937_64& rng, std::int32_t min_v, std::int32_t max_v, std::int32_t min_m,
                 std::int32_t max_m) {
    if (min_v < 3)
        throw ContractError("formulas need at least three variables per clause");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::int32_t v = draw(rng, min_v, max_v);
        std::int32_t m = draw(rng, min_m, max_m);
        std::vector<Clause> clauses;
        for (std::int32_t i = 0; i < m; ++i) {
            std::int32_t a = draw(rng, 1, v);
            std::int32_t b = a, g = a;
            while (b == a)
                b = draw(rng, 1, v);
            while (g == a || g == b)
                g = draw(rng, 1, v);
            Clause c{{Literal{a, rng() % 2 == 0}, Literal{b, rng() % 2 == 0},
                      Literal{g, rng() % 2 == 0}}};
            clauses.push_back(c);
        }
        Cnf3 phi = Cnf3::make(v, std::move(clauses));
        if (!has_universal_literal(phi))
            return phi;
    }
    throw Error("failed to sample a formula without a universal literal");
}

Hypergraph random_hypergraph(std::mt19937_64& rng, std::int32_t min_n, std::int32_t max_n,
                             std::int32_t max_edges) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::int32_t n = draw(rng, min_n, max_n);
        std::int64_t possible = (std::int64_t{1} << n) - 1;
        std::int32_t m = draw(rng, 1, max_edges);
        if (m > possible)
            m = static_cast<std::int32_t>(possible);

        std::set<std::vector<std::int32_t>> used;
        bool ok = true;
        for (std::int32_t i = 0; i < m && ok; ++i) {
            bool placed = false;
            for (int tries = 0; tries < 200 && !placed; ++tries) {
                std::int32_t size = draw(rng, 1, n);
                std::vector<std::int32_t> e;
                while (static_cast<std::int32_t>(e.size()) < size) {
                    std::int32_t v = draw(rng, 1, n);
                    if (std::find(e.begin(), e.end(), v) == e.end())
                        e.push_back(v);
                }
                std::sort(e.begin(), e.end());
                if (used.insert(e).second)
                    placed = true;
            }
            ok = placed;
        }
        if (!ok)
            continue;
        Hypergraph h =
            Hypergraph::make(n, std::vector<std::vector<std::int32_t>>(used.begin(), used.end()));
        if (n >= 2 && !h.universal_vertex())
            return h;
    }
    throw Error("failed to sample a hypergraph without a universal vertex");
}

} // namespace mcs
