#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lambdak {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed polynomial text. `position` is the 0-based byte offset of the
// offending character.
class PolySyntaxError : public Error {
public:
    PolySyntaxError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A substitution met a variable that is neither bound nor declared fixed.
class UnboundVariableError : public Error {
public:
    UnboundVariableError(char family, int index)
        : Error(std::string("unbound variable ") + family + std::to_string(index)),
          family_(family), index_(index) {}

    char family() const noexcept { return family_; }
    int index() const noexcept { return index_; }

private:
    char family_;
    int index_;
};

// Input claimed symmetric is not; carries the witnessing adjacent
// transposition x_i <-> x_{i+1}.
class NotSymmetricError : public Error {
public:
    NotSymmetricError(char family, int swap_index)
        : Error(std::string("not symmetric: swapping ") + family +
                std::to_string(swap_index) + " and " + family +
                std::to_string(swap_index + 1) + " changes the polynomial"),
          family_(family), swap_index_(swap_index) {}

    char family() const noexcept { return family_; }
    int swap_index() const noexcept { return swap_index_; }

private:
    char family_;
    int swap_index_;
};

// Two rings passed to a coproduct share a generator family.
class AlphabetClashError : public Error {
public:
    explicit AlphabetClashError(char family)
        : Error(std::string("generator family '") + family +
                "' occurs in both rings"),
          family_(family) {}

    char family() const noexcept { return family_; }

private:
    char family_;
};

// An exact division required by a construction does not come out integral.
// `witness` is a printable rendering of the element that failed to divide.
class NonIntegralDivisionError : public Error {
public:
    NonIntegralDivisionError(const std::string& witness, const std::string& divisor)
        : Error("non-integral division: (" + witness + ") / " + divisor),
          witness_(witness), divisor_(divisor) {}

    const std::string& witness() const noexcept { return witness_; }
    const std::string& divisor() const noexcept { return divisor_; }

private:
    std::string witness_;
    std::string divisor_;
};

// A gcd was requested over the set {l^n - l^n} = {0}.
class DegenerateSetError : public Error {
public:
    DegenerateSetError() : Error("gcd over a set containing only zero") {}
};

}  // namespace lambdak
