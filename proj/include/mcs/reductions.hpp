#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mcs/core.hpp"
#include "mcs/enumerator.hpp"
#include "mcs/oracle.hpp"

namespace mcs {

// ---------------------------------------------------------------------------
// CNF side: formulas whose satisfiability maps to "is there a maximal common
// subsequence besides the listed ones".
// ---------------------------------------------------------------------------

struct Literal {
    std::int32_t var = 0; // 1-based
    bool positive = true;

    auto operator<=>(const Literal&) const = default;
};

// Three literals over three distinct variables, sorted by variable.
struct Clause {
    std::array<Literal, 3> lits;
};

// 3-CNF over variables 1..v. Construction validates each clause: exactly
// three distinct variables (which rules out complementary pairs) within
// range. Formulas with zero clauses are allowed here; constructions that
// need more reject them.
class Cnf3 {
public:
    static Cnf3 make(std::int32_t var_count, std::vector<Clause> clauses);

    std::int32_t var_count() const { return var_count_; }
    const std::vector<Clause>& clauses() const { return clauses_; }

private:
    Cnf3() = default;
    std::int32_t var_count_ = 0;
    std::vector<Clause> clauses_;
};

// True when some literal occurs in every clause. Vacuously true for zero
// clauses, and always true for one clause.
bool has_universal_literal(const Cnf3& phi);

bool evaluate(const Cnf3& phi, const std::vector<bool>& assignment);

// Tokens x1, !x1, ..., xv, !xv; the id of xj is 2(j-1), of !xj is 2(j-1)+1.
Alphabet sat_alphabet(std::int32_t var_count);
SymbolId positive_id(std::int32_t var);
SymbolId negative_id(std::int32_t var);

// The clause gadget: with sorted variables a < b < g and R the descending
// two-literal run of every variable, the string is
//   R^(a-1) l1 R^(b-a) l2 R^(g-b) l3 R^(v-g).
Seq clause_string(const Clause& clause, std::int32_t var_count);

struct SatMcsInstance {
    InstanceSet strings;        // S0 = x1 !x1 ... xv !xv, then one gadget per clause
    std::vector<Seq> known_mcs; // Z_j = S0 with the xj !xj block removed, j = 1..v
};

// Builds the instance family whose extra maximal common subsequences encode
// satisfying assignments. Requires the full Cnf3 validity package: on top of
// the per-clause rules, no variable may occur in every clause (with zero or
// one clause every clause variable does, so those are rejected too).
SatMcsInstance build_sat_instance(const Cnf3& phi);

// Reads a witness string over sat_alphabet(v) into an assignment: variable j
// is true iff the witness holds xj (the positive literal wins when both
// appear). Validates that the witness is a common subsequence, is none of the
// Z_j, and holds at least one literal of every variable; the result then
// satisfies phi. Throws NotAWitnessError on validation failure.
std::vector<bool> decode_assignment(const Seq& witness, const Cnf3& phi);

// Exhaustive satisfiability check, first satisfying assignment in mask order.
// Throws BudgetExceededError when var_count exceeds cap_vars.
std::optional<std::vector<bool>> sat_bruteforce(const Cnf3& phi, std::int32_t cap_vars = 20);

struct SatReductionReport {
    bool pass = false;
    bool known_all_maximal = false;
    bool sat_present = false;     // brute-force satisfiability
    bool witness_present = false; // extra MCS found beyond the known list
    bool decoded_satisfies = false;
    std::vector<std::string> failures;
};

// End-to-end check of one formula: every Z_j is maximal, brute-force
// satisfiability agrees with witness existence, and a found witness decodes
// to a satisfying assignment.
SatReductionReport verify_sat_reduction(const Cnf3& phi,
                                        std::size_t tuple_cap = kDefaultTupleCap,
                                        std::int32_t sat_cap_vars = 20);

// DIMACS subset: 'c' comment lines, one "p cnf V M" header, then M clauses of
// three nonzero literals each, 0-terminated, possibly spanning lines.
Cnf3 parse_dimacs(std::istream& in);

// ---------------------------------------------------------------------------
// Hypergraph side: binary instances whose maximal common subsequences map to
// maximal independent sets.
// ---------------------------------------------------------------------------

class Hypergraph {
public:
    // Edges must be nonempty, within 1..vertex_count, duplicate-free within
    // and across edges. Vertices get sorted; edge order is preserved.
    static Hypergraph make(std::int32_t vertex_count,
                           std::vector<std::vector<std::int32_t>> edges);

    std::int32_t vertex_count() const { return n_; }
    const std::vector<std::vector<std::int32_t>>& edges() const { return edges_; }

    // Vertex present in every edge; vacuously existent when there are no
    // edges.
    std::optional<std::int32_t> universal_vertex() const;

private:
    Hypergraph() = default;
    std::int32_t n_ = 0;
    std::vector<std::vector<std::int32_t>> edges_;
};

// Alphabet with tokens "0", "1" and matching ids 0, 1.
Alphabet binary_alphabet();

// Vertex-set encoding: block i is "01" when i is a member, "0" otherwise.
Seq psi(const std::vector<std::int32_t>& members, std::int32_t vertex_count);

// Inverse block decomposition; absent unless the string splits uniquely into
// "0" and "01" blocks (no adjacent 1s, no leading 1).
std::optional<std::vector<std::int32_t>> psi_inverse(const Seq& x);

// The encoding of an edge, which by construction never embeds into that
// edge's string.
Seq forbidden_pattern(const std::vector<std::int32_t>& edge, std::int32_t vertex_count);

struct BinaryMcsInstance {
    InstanceSet strings; // S0 = (01)^n, then one string per edge
    std::int32_t vertex_count = 0;
};

// Builds the binary instance family. For edge {u_1 < ... < u_h} the string is
// blocks T_1..T_(n+h-1) with T_j = "0" when j = u_k + k - 1 for some k, "01"
// otherwise. Throws TooFewVerticesError (n < 2) or UniversalVertexError.
BinaryMcsInstance build_hypergraph_instance(const Hypergraph& h);

// All maximal independent sets, as sorted vertex lists in lexicographic
// order. Throws BudgetExceededError when vertex_count exceeds cap_vertices.
std::vector<std::vector<std::int32_t>> enumerate_mis_bruteforce(const Hypergraph& h,
                                                                std::int32_t cap_vertices = 20);

struct BijectionReport {
    bool pass = false;
    std::size_t mcs_count = 0;
    std::size_t mis_count = 0;
    bool base_found = false;      // (01)^(n-1) among the maximal ones
    bool psi_image_exact = false; // remaining members = encodings of the MIS family
    bool all_11_free = false;     // no member has two adjacent 1s
    bool oracle_checked = false;  // exhaustive cross-check ran within budget
    bool oracle_agrees = false;
    std::vector<std::string> failures;
};

// Checks the solution-set correspondence on one hypergraph: enumerates the
// maximal common subsequences of the built instance, cross-checks against the
// exhaustive oracle when the mask budget allows, and matches them against the
// maximal independent sets.
BijectionReport verify_bijection(const Hypergraph& h, std::uint64_t mask_cap = kDefaultMaskCap,
                                 std::size_t tuple_cap = kDefaultTupleCap,
                                 std::int32_t mis_cap_vertices = 20);

// Format: '#' comment lines, one "p hg N M" header, then M lines of vertex
// ids, one edge per line.
Hypergraph parse_hypergraph(std::istream& in);

// ---------------------------------------------------------------------------
// Seeded instance generators. Identical generator state yields an identical
// instance on every platform (plain modulo mapping over mt19937_64 draws).
// ---------------------------------------------------------------------------

// Random formula accepted by build_sat_instance: resamples until no variable
// is universal.
Cnf3 random_cnf3(std::mt19937_64& rng, std::int32_t min_v = 4, std::int32_t max_v = 8,
                 std::int32_t min_m = 2, std::int32_t max_m = 10);

// Random hypergraph accepted by build_hypergraph_instance.
Hypergraph random_hypergraph(std::mt19937_64& rng, std::int32_t min_n = 2, std::int32_t max_n = 8,
                             std::int32_t max_edges = 10);

} // namespace mcs
