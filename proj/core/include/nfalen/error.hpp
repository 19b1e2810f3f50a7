#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nfalen {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructor argument violates an Nfa, Graph or OvInstance invariant.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// trim() found no final state reachable from the start state.
class EmptyLanguage : public Error {
public:
    using Error::Error;
};

class NotUnary : public Error {
public:
    using Error::Error;
};

class NotAcyclic : public Error {
public:
    using Error::Error;
};

class SymbolNotInAlphabet : public Error {
public:
    SymbolNotInAlphabet(char symbol, std::size_t position)
        : Error("symbol '" + std::string(1, symbol) + "' at position " + std::to_string(position)
                + " is not in the alphabet"),
          symbol_(symbol), position_(position) {}

    char symbol() const noexcept { return symbol_; }
    std::size_t position() const noexcept { return position_; }

private:
    char symbol_;
    std::size_t position_;
};

/// Malformed text input. line() is 1-based; 0 means "end of input".
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace nfalen
