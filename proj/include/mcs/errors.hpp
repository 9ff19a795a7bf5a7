#pragma once

#include <stdexcept>
#include <string>

namespace mcs {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violation by the caller (mismatched alphabets, empty instance, ...).
struct ContractError : Error {
    using Error::Error;
};

// Malformed input file (strings file, CNF, hypergraph).
struct ParseError : Error {
    using Error::Error;
};

// An exhaustive search would exceed its configured budget (mask or assignment count).
struct BudgetExceededError : Error {
    using Error::Error;
};

// The unshiftable index grew past its configured tuple cap.
struct CapacityExceededError : Error {
    using Error::Error;
};

// Base for inputs that violate an assumption a construction depends on.
struct AssumptionError : Error {
    using Error::Error;
};

// CNF formula outside the supported fragment (repeated variable in a clause,
// complementary pair in a clause, or a literal present in every clause).
struct InvalidFormulaError : AssumptionError {
    using AssumptionError::AssumptionError;
};

// Hypergraph has a vertex contained in every hyperedge.
struct UniversalVertexError : AssumptionError {
    using AssumptionError::AssumptionError;
};

// Hypergraph has fewer than two vertices.
struct TooFewVerticesError : AssumptionError {
    using AssumptionError::AssumptionError;
};

// String offered as a known maximal common subsequence failed validation.
struct NotAnMcsError : Error {
    using Error::Error;
};

// String offered for assignment decoding is not a usable witness.
struct NotAWitnessError : Error {
    using Error::Error;
};

} // namespace mcs
