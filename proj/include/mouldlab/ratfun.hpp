#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mouldlab/polynomial.hpp"

namespace mouldlab {

struct Factor {
    Polynomial base; // monic, non-constant
    unsigned exponent;
};

// Reduced rational function over Q.
//
// The denominator is kept factored: a sorted list of distinct monic linear
// forms with multiplicities, plus at most one monic "residual" factor of
// degree >= 2 that did not split into the linear forms tried. The numerator
// is coprime to every stored factor, and all scalar content lives in the
// numerator. When no residual is present this representation is canonical;
// otherwise equality falls back to cross-multiplication.
class RatFun {
public:
    RatFun() = default;
    RatFun(const Rational &c) : num_(c) {}
    RatFun(long c) : num_(Rational(c)) {}
    RatFun(const Polynomial &p) : num_(p) {}

    static RatFun variable(Var v) { return RatFun(Polynomial::variable(v)); }
    // num / den; throws DomainError when den is zero.
    static RatFun fraction(const Polynomial &num, const Polynomial &den);
    // num / prod_k base_k^exp_k, bases arbitrary non-zero polynomials.
    static RatFun from_factors(const Polynomial &num, const std::vector<std::pair<Polynomial, unsigned>> &den);

    const Polynomial &numerator() const { return num_; }
    // All denominator factors (linear ones and the residual) in print order.
    std::vector<Factor> denominator_factors() const;
    Polynomial denominator() const;
    bool has_residual() const { return !resid_.is_constant(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return lin_.empty() && !has_residual(); }
    bool is_constant() const { return is_polynomial() && num_.is_constant(); }
    Rational constant_value() const;

    std::vector<Var> variables() const;
    bool contains(Var v) const;
    int highest_u_index() const;

    RatFun operator-() const;
    RatFun operator+(const RatFun &o) const;
    RatFun operator-(const RatFun &o) const;
    RatFun operator*(const RatFun &o) const;
    RatFun operator/(const RatFun &o) const;
    RatFun &operator+=(const RatFun &o) { return *this = *this + o; }
    RatFun &operator-=(const RatFun &o) { return *this = *this - o; }
    RatFun &operator*=(const RatFun &o) { return *this = *this * o; }
    RatFun &operator/=(const RatFun &o) { return *this = *this / o; }
    RatFun scaled(const Rational &c) const;
    RatFun inverse() const;
    RatFun pow(int e) const;

    // Simultaneous substitution; throws DomainError if the denominator
    // vanishes identically.
    RatFun substitute(const Substitution &s) const;
    // Throws DomainError at a pole, InvalidArgument on a missing variable.
    Rational evaluate(const Assignment &a) const;

    // Coefficient of v^-1 in the Laurent expansion at v = 0.
    RatFun residue_at_zero(Var v) const;

    // Weight d with f(l u) = l^d f(u), counting only u-variables; nullopt if
    // f is not homogeneous (or is zero).
    std::optional<int> homogeneity_weight() const;
    // Denominator is a product of powers of u_{i..j}, 1 <= i <= j <= n.
    bool has_nice_poles(int n) const;
    // H_n * f is a polynomial, H_n = prod_{i<=j} u_{i..j}.
    bool clears_Hn(int n) const;

    bool operator==(const RatFun &o) const;

    std::string to_string() const;

private:
    void normalize();
    void check_u_range(int n) const;

    Polynomial num_;
    std::vector<Factor> lin_;  // sorted by base, descending
    Polynomial resid_{1};      // monic; 1 when absent
};

// Balanced pairwise sum, which keeps intermediate denominators small.
RatFun sum(std::vector<RatFun> terms);

} // namespace mouldlab
