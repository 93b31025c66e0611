#pragma once

#include <stdexcept>
#include <string>

namespace covex {

// Input rejected by a validation rule. Maps to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Oracle refused to run because the group is larger than the budget. Exit code 4.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, unsigned long long order, unsigned long long budget)
        : std::runtime_error(what), order_(order), budget_(budget) {}
    unsigned long long order() const { return order_; }
    unsigned long long budget() const { return budget_; }

private:
    unsigned long long order_;
    unsigned long long budget_;
};

}  // namespace covex
