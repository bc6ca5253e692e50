#pragma once

#include <stdexcept>
#include <string>

namespace seqwht {

// Length is not a power of two, or two operands disagree in size.
class SizingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Gate or circuit refers to qubits that do not exist / repeats a qubit.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Signal cannot be normalized (all zeros).
class NormalizationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Brute-force oracle asked to materialize more than 2^bound entries.
class CostGuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Transform applied to coefficients carrying the wrong ordering tag.
class OrderError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Invalid filter specification (cutoffs outside range, overlapping bands).
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace seqwht
