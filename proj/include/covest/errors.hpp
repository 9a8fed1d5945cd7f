#pragma once

#include <stdexcept>
#include <string>

namespace covest {

/// Logical index outside the addressed matrix or window.
class IndexError : public std::out_of_range {
public:
    explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

/// Window dimensions that do not fit the input matrix.
class InvalidWindow : public std::invalid_argument {
public:
    explicit InvalidWindow(const std::string& what) : std::invalid_argument(what) {}
};

/// Element pair whose distance is not a unique combination for the window.
class NotACombination : public std::invalid_argument {
public:
    explicit NotACombination(const std::string& what) : std::invalid_argument(what) {}
};

/// Bad call parameter (thread count, empty task list, mismatched batch...).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// A size or count that does not fit its representation.
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// Malformed matrix or trace file.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace covest
