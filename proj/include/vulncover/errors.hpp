#pragma once

#include <stdexcept>
#include <string>

namespace vulncover {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-contract input: empty labels, bad parameters,
// dimension mismatches, unparseable scan reports.
class InputError : public Error {
public:
    using Error::Error;
};

// A vertex id that does not exist in the queried graph.
class LookupError : public Error {
public:
    using Error::Error;
};

// A solver refused or failed: enumeration cap exceeded, no usable result.
class SolverError : public Error {
public:
    using Error::Error;
};

// An exact solve ran past its time budget.
class SolverTimeout : public SolverError {
public:
    using SolverError::SolverError;
};

// A produced cover failed the kill-chain elimination check. Indicates a
// bug somewhere in the pipeline, so it aborts benchmark runs.
class VerificationError : public Error {
public:
    using Error::Error;
};

}  // namespace vulncover
