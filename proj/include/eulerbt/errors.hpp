#pragma once

#include <stdexcept>
#include <string>

namespace eulerbt {

// Evaluation requested without an assignment for a variable the polynomial uses.
struct MissingVariable : std::invalid_argument {
    explicit MissingVariable(const std::string& msg) : std::invalid_argument(msg) {}
};

// A Series needs at least one coefficient (the constant term).
struct EmptyCoefficients : std::invalid_argument {
    explicit EmptyCoefficients(const std::string& msg) : std::invalid_argument(msg) {}
};

// A series operation asked for more coefficients than its input carries.
struct InsufficientOrder : std::invalid_argument {
    explicit InsufficientOrder(const std::string& msg) : std::invalid_argument(msg) {}
};

// Integer q below n violates the q >= n hypothesis of the Ljunggren identities.
struct QBelowN : std::invalid_argument {
    explicit QBelowN(const std::string& msg) : std::invalid_argument(msg) {}
};

// A difference table of depth m needs at least m+1 input terms.
struct InsufficientTerms : std::invalid_argument {
    explicit InsufficientTerms(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace eulerbt
