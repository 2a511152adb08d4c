#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mouldlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Division by zero, evaluation at a pole, a denominator that vanishes
// identically after substitution.
class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, std::vector<std::string> expected, const std::string &found);

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string> &expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

} // namespace mouldlab
