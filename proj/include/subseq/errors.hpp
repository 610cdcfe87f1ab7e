#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subseq {

/// Invalid construction parameter (k out of range, too few strings, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A product construction or enumeration would exceed its configured budget.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(what), required_(required), budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// Rejected automaton document.
class ParseError : public std::runtime_error {
public:
    enum class Kind { syntax, version, structure, validation };

    ParseError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

}  // namespace subseq
