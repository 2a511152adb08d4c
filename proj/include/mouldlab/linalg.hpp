#pragma once

#include <optional>
#include <vector>

#include "mouldlab/polynomial.hpp"

namespace mouldlab {

using Matrix = std::vector<std::vector<Rational>>;

// Solves the square system A x = b exactly (rows scaled to integers, then
// fraction-free Bareiss elimination). nullopt if A is singular.
std::optional<std::vector<Rational>> solve_exact(const Matrix &a, const std::vector<Rational> &b);

// Rank over Q.
int rank_exact(const Matrix &a);

} // namespace mouldlab
