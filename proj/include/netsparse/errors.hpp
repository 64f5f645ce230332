#ifndef NETSPARSE_ERRORS_HPP
#define NETSPARSE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace netsparse {

// Malformed files, out-of-range parameters, invalid vertex ids.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated precondition between components (caller bug, not user input).
class contract_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The instance cannot satisfy the requested property even with every
// candidate edge present. Carries the offending community indices.
class infeasible_error : public std::runtime_error {
public:
    infeasible_error(const std::string& msg, std::vector<std::size_t> communities)
        : std::runtime_error(msg), communities_(std::move(communities)) {}

    const std::vector<std::size_t>& communities() const { return communities_; }

private:
    std::vector<std::size_t> communities_;
};

// Exact solver refused: instance exceeds the enumeration budget.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace netsparse

#endif
