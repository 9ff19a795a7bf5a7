#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mcs/analysis.hpp"
#include "mcs/core.hpp"
#include "mcs/enumerator.hpp"
#include "mcs/io.hpp"
#include "mcs/oracle.hpp"
#include "mcs/reductions.hpp"

namespace {

int log_level() {
    const char* e = std::getenv("MCS_LOG");
    if (e == nullptr)
        return 0;
    std::string s(e);
    if (s == "debug")
        return 2;
    if (s == "info")
        return 1;
    return 0;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw mcs::ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

mcs::ParsedStrings load_instance(const std::string& path) {
    std::istringstream in(slurp(path));
    return mcs::parse_strings_file(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw mcs::ParseError("cannot open file for writing: " + path);
    out << content;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~Timer() {
        if (log_level() >= 1) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            std::cerr << "elapsed: " << ms << " ms\n";
        }
    }
};

int cmd_enumerate(const std::string& file, std::size_t tuple_cap) {
    Timer t;
    mcs::ParsedStrings ps = load_instance(file);
    std::uint64_t count = 0;
    if (ps.inst.k() >= 2) {
        mcs::UnshiftableIndex idx = mcs::find_unshiftables(ps.inst, tuple_cap);
        if (log_level() >= 2)
            std::cerr << "index: " << idx.size() << " tuples\n";
        count = mcs::enumerate_mcs(ps.inst, idx, [&](const mcs::Seq& s) {
            std::cout << mcs::format_seq(s, ps.inst.alphabet(), ps.mode) << '\n';
            return true;
        });
    } else {
        count = mcs::enumerate_mcs(ps.inst, [&](const mcs::Seq& s) {
            std::cout << mcs::format_seq(s, ps.inst.alphabet(), ps.mode) << '\n';
            return true;
        });
    }
    std::cerr << "count: " << count << '\n';
    return 0;
}

int cmd_enumerate_bruteforce(const std::string& file, std::uint64_t mask_cap) {
    Timer t;
    mcs::ParsedStrings ps = load_instance(file);
    mcs::McsSet set = mcs::enumerate_bruteforce(ps.inst, mask_cap);
    for (const mcs::Seq& s : set.members)
        std::cout << mcs::format_seq(s, ps.inst.alphabet(), ps.mode) << '\n';
    std::cerr << "count: " << set.cardinality() << '\n';
    return 0;
}

int cmd_count(const std::string& file, std::size_t tuple_cap) {
    Timer t;
    mcs::ParsedStrings ps = load_instance(file);
    std::cout << mcs::count_mcs(ps.inst, tuple_cap) << '\n';
    return 0;
}

int cmd_assess(const std::string& file, std::uint64_t z, std::size_t tuple_cap) {
    Timer t;
    mcs::ParsedStrings ps = load_instance(file);
    mcs::AssessOutcome out = mcs::assess_mcs(ps.inst, z, tuple_cap);
    std::cout << (out.verdict ? "MORE" : "AT_MOST") << '\n';
    if (log_level() >= 2)
        std::cerr << "solutions seen: " << out.solutions_seen
                  << (out.exhausted ? " (exhausted)" : "") << '\n';
    return 0;
}

int cmd_another(const std::string& file, const std::string& known_file, std::size_t tuple_cap) {
    Timer t;
    mcs::ParsedStrings ps = load_instance(file);

    mcs::Alphabet alphabet = ps.inst.alphabet();
    std::istringstream zin(slurp(known_file));
    mcs::RawStrings known = mcs::parse_raw_strings(zin, std::move(alphabet));
    // Rebuild over the possibly extended alphabet so known members are
    // comparable; ids of existing tokens are unchanged.
    mcs::InstanceSet inst(known.alphabet, ps.inst.strings());

    std::optional<mcs::Seq> witness = mcs::another_mcs(inst, known.strings, tuple_cap);
    if (witness) {
        std::cout << mcs::format_seq(*witness, inst.alphabet(), ps.mode) << '\n';
        return 0;
    }
    std::cout << "NONE\n";
    return 1;
}

int cmd_check_maximal(const std::string& file, const std::string& candidate) {
    Timer t;
    mcs::ParsedStrings ps = load_instance(file);
    mcs::Alphabet alphabet = ps.inst.alphabet();
    mcs::Seq cand = mcs::parse_seq(candidate, alphabet, ps.mode);
    mcs::InstanceSet inst(alphabet, ps.inst.strings());
    if (mcs::is_mcs(cand, inst)) {
        std::cout << "MAXIMAL\n";
        return 0;
    }
    std::cout << "NOT_MAXIMAL\n";
    return 1;
}

int cmd_gen_sat(const std::string& cnf_file, const std::string& out_path,
                std::string z_out_path) {
    Timer t;
    std::istringstream in(slurp(cnf_file));
    mcs::Cnf3 phi = mcs::parse_dimacs(in);
    mcs::SatMcsInstance sat = mcs::build_sat_instance(phi);

    std::ostringstream strings;
    mcs::write_strings_file(strings, sat.strings, mcs::TokenMode::tokens);
    if (out_path.empty()) {
        std::cout << strings.str();
    } else {
        write_file(out_path, strings.str());
        if (z_out_path.empty())
            z_out_path = out_path + ".z";
    }
    if (!z_out_path.empty()) {
        std::ostringstream zs;
        mcs::write_strings_file(
            zs, mcs::InstanceSet(sat.strings.alphabet(), sat.known_mcs), mcs::TokenMode::tokens);
        write_file(z_out_path, zs.str());
    }
    return 0;
}

int cmd_gen_hypergraph(const std::string& hg_file, const std::string& out_path) {
    Timer t;
    std::istringstream in(slurp(hg_file));
    mcs::Hypergraph h = mcs::parse_hypergraph(in);
    mcs::BinaryMcsInstance bi = mcs::build_hypergraph_instance(h);

    std::ostringstream strings;
    mcs::write_strings_file(strings, bi.strings, mcs::TokenMode::chars);
    if (out_path.empty())
        std::cout << strings.str();
    else
        write_file(out_path, strings.str());
    return 0;
}

int cmd_verify(const std::string& file, std::uint64_t mask_cap, std::size_t tuple_cap) {
    Timer t;
    std::string content = slurp(file);

    // Pick the format off the header line.
    std::string kind;
    {
        std::istringstream in(content);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::string first;
            if (!(ls >> first))
                continue;
            if (first[0] == '#' || first[0] == 'c' || first[0] == '%')
                continue;
            if (first == "p")
                ls >> kind;
            break;
        }
    }

    if (kind == "cnf") {
        std::istringstream in(content);
        mcs::Cnf3 phi = mcs::parse_dimacs(in);
        mcs::SatReductionReport r = mcs::verify_sat_reduction(phi, tuple_cap);
        std::cout << "known-maximal: " << (r.known_all_maximal ? "ok" : "FAIL") << '\n';
        std::cout << "satisfiable: " << (r.sat_present ? "yes" : "no") << '\n';
        std::cout << "witness: " << (r.witness_present ? "found" : "absent") << '\n';
        std::cout << "decode: "
                  << (r.witness_present ? (r.decoded_satisfies ? "ok" : "FAIL") : "n/a") << '\n';
        for (const std::string& f : r.failures)
            std::cout << "failure: " << f << '\n';
        std::cout << "verdict: " << (r.pass ? "pass" : "fail") << '\n';
        return r.pass ? 0 : 1;
    }
    if (kind == "hg") {
        std::istringstream in(content);
        mcs::Hypergraph h = mcs::parse_hypergraph(in);
        mcs::BijectionReport r = mcs::verify_bijection(h, mask_cap, tuple_cap);
        std::cout << "solutions: " << r.mcs_count << '\n';
        std::cout << "independent-sets: " << r.mis_count << '\n';
        std::cout << "base: " << (r.base_found ? "ok" : "FAIL") << '\n';
        std::cout << "mapping: " << (r.psi_image_exact ? "ok" : "FAIL") << '\n';
        std::cout << "no-adjacent-ones: " << (r.all_11_free ? "ok" : "FAIL") << '\n';
        std::cout << "cross-check: "
                  << (r.oracle_checked ? (r.oracle_agrees ? "ok" : "FAIL") : "skipped") << '\n';
        for (const std::string& f : r.failures)
            std::cout << "failure: " << f << '\n';
        std::cout << "verdict: " << (r.pass ? "pass" : "fail") << '\n';
        return r.pass ? 0 : 1;
    }
    throw mcs::ParseError("unrecognized input: expected a 'p cnf' or 'p hg' header");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximal common subsequence toolkit"};
    app.require_subcommand(1);

    std::string file, known_file, candidate, out_path, z_out_path;
    std::uint64_t z = 0;
    std::uint64_t mask_cap = mcs::kDefaultMaskCap;
    std::size_t tuple_cap = mcs::kDefaultTupleCap;

    auto* enumerate = app.add_subcommand("enumerate", "Stream every maximal common subsequence");
    enumerate->add_option("file", file, "strings file")->required();
    enumerate->add_option("--tuple-cap", tuple_cap, "index entry cap");

    auto* brute = app.add_subcommand("enumerate-bruteforce",
                                     "Exhaustive reference enumeration over subsequence masks");
    brute->add_option("file", file, "strings file")->required();
    brute->add_option("--mask-cap", mask_cap, "subsequence mask cap");

    auto* count = app.add_subcommand("count", "Count maximal common subsequences");
    count->add_option("file", file, "strings file")->required();
    count->add_option("--tuple-cap", tuple_cap, "index entry cap");

    auto* assess = app.add_subcommand("assess", "Decide whether more than z solutions exist");
    assess->add_option("file", file, "strings file")->required();
    assess->add_option("--z", z, "threshold")->required();
    assess->add_option("--tuple-cap", tuple_cap, "index entry cap");

    auto* another =
        app.add_subcommand("another", "Find a maximal common subsequence outside a known list");
    another->add_option("file", file, "strings file")->required();
    another->add_option("--known", known_file, "strings file of known solutions")->required();
    another->add_option("--tuple-cap", tuple_cap, "index entry cap");

    auto* checkmax = app.add_subcommand("check-maximal", "Test one candidate for maximality");
    checkmax->add_option("file", file, "strings file")->required();
    checkmax->add_option("--candidate", candidate, "candidate in the file's mode")->required();

    auto* gensat = app.add_subcommand("gen-sat", "Build the strings of a 3-CNF formula");
    gensat->add_option("cnf", file, "DIMACS file")->required();
    gensat->add_option("-o,--out", out_path, "strings file to write (stdout when absent)");
    gensat->add_option("--z-out", z_out_path,
                       "known-solutions file to write (defaults to OUT.z when -o is given)");

    auto* genhg = app.add_subcommand("gen-hypergraph", "Build the strings of a hypergraph");
    genhg->add_option("hypergraph", file, "hypergraph file")->required();
    genhg->add_option("-o,--out", out_path, "strings file to write (stdout when absent)");

    auto* verify = app.add_subcommand("verify", "Check a formula or hypergraph end to end");
    verify->add_option("file", file, "DIMACS or hypergraph file")->required();
    verify->add_option("--mask-cap", mask_cap, "subsequence mask cap");
    verify->add_option("--tuple-cap", tuple_cap, "index entry cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enumerate->parsed())
            return cmd_enumerate(file, tuple_cap);
        if (brute->parsed())
            return cmd_enumerate_bruteforce(file, mask_cap);
        if (count->parsed())
            return cmd_count(file, tuple_cap);
        if (assess->parsed())
            return cmd_assess(file, z, tuple_cap);
        if (another->parsed())
            return cmd_another(file, known_file, tuple_cap);
        if (checkmax->parsed())
            return cmd_check_maximal(file, candidate);
        if (gensat->parsed())
            return cmd_gen_sat(file, out_path, z_out_path);
        if (genhg->parsed())
            return cmd_gen_hypergraph(file, out_path);
        if (verify->parsed())
            return cmd_verify(file, mask_cap, tuple_cap);
    } catch (const mcs::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const mcs::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const mcs::CapacityExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const mcs::NotAnMcsError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const mcs::AssumptionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
    return 0;
}
