#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permlab {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Comparison between surds living in different quadratic fields.
class UnsupportedField : public Error {
public:
    using Error::Error;
};

class NonInjective : public Error {
public:
    using Error::Error;
};

class InvalidPair : public Error {
public:
    using Error::Error;
};

// Two suffixes agreed on the whole lookahead window, so the order is unknown.
class UnresolvedComparison : public Error {
public:
    UnresolvedComparison(std::uint64_t i, std::uint64_t j, std::uint64_t lookahead)
        : Error("unresolved comparison: suffixes at " + std::to_string(i) + " and " +
                std::to_string(j) + " agree on " + std::to_string(lookahead) + " symbols"),
          i(i), j(j), lookahead(lookahead) {}

    std::uint64_t i;
    std::uint64_t j;
    std::uint64_t lookahead;
};

class ConstructionError : public Error {
public:
    using Error::Error;
};

class RationalDependence : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class MalformedAutomaton : public Error {
public:
    using Error::Error;
};

// Malformed textual input: specs, numbers, patterns, automaton files.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace permlab
