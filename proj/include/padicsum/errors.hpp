#pragma once

#include <stdexcept>
#include <string>

namespace padicsum {

// Requested evaluation at x = 1/4, where the closed forms divide by (4x-1).
class SingularPoint : public std::domain_error {
public:
    explicit SingularPoint(const std::string& what)
        : std::domain_error(what) {}
};

// Polynomial division left a nonzero remainder where exactness was required.
// Reaching this from the table recurrences means the algebra is broken.
class NonExactDivision : public std::runtime_error {
public:
    explicit NonExactDivision(const std::string& what)
        : std::runtime_error(what) {}
};

class DivisionByZeroPolynomial : public std::domain_error {
public:
    explicit DivisionByZeroPolynomial(const std::string& what)
        : std::domain_error(what) {}
};

} // namespace padicsum
