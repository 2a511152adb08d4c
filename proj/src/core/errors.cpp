#include "mouldlab/errors.hpp"

namespace mouldlab {

namespace {

std::string parse_message(std::size_t position, const std::vector<std::string> &expected, const std::string &found)
{
    std::string msg = "parse error at position " + std::to_string(position) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0)
            msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
    }
    msg += ", found " + (found.empty() ? std::string("end of input") : "'" + found + "'");
    return msg;
}

} // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, const std::string &found)
    : Error(parse_message(position, expected, found)), position_(position), expected_(std::move(expected))
{
}

} // namespace mouldlab
