#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mouldlab/monomial.hpp"

namespace mouldlab {

using Rational = mpq_class;

struct Term {
    Monomial mono;
    Rational coef;
};

class Polynomial;

// Simultaneous substitution; variables absent from the map are left unchanged.
using Substitution = std::vector<std::pair<Var, Polynomial>>;
using Assignment = std::map<Var, Rational>;

// Sparse multivariate polynomial over Q.
//
// Terms are kept sorted in decreasing graded-lex order with no zero
// coefficients, so two polynomials are equal iff their term vectors are.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational &c);
    Polynomial(long c) : Polynomial(Rational(c)) {}

    static Polynomial variable(Var v);
    static Polynomial monomial(const Monomial &m, const Rational &c);
    // Sorts, merges equal monomials and drops zero coefficients.
    static Polynomial from_terms(std::vector<Term> terms);
    // u_lo + ... + u_hi
    static Polynomial interval(int lo, int hi);

    const std::vector<Term> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    Rational constant_value() const; // precondition: is_constant()
    Rational constant_term() const;
    const Term &leading() const { return terms_.front(); }
    unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
    unsigned degree_in(Var v) const;
    bool contains(Var v) const { return degree_in(v) > 0; }
    std::vector<Var> variables() const;
    int highest_u_index() const; // 0 if no u-variable occurs

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial &o) const;
    Polynomial operator-(const Polynomial &o) const;
    Polynomial operator*(const Polynomial &o) const;
    Polynomial &operator+=(const Polynomial &o) { return *this = *this + o; }
    Polynomial &operator-=(const Polynomial &o) { return *this = *this - o; }
    Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }
    Polynomial scaled(const Rational &c) const;
    Polynomial times_monomial(const Monomial &m) const;
    Polynomial pow(unsigned e) const;

    // Leading coefficient made 1.
    Polynomial monic() const;
    // Largest monomial dividing every term.
    Monomial monomial_content() const;
    Polynomial divided_by_monomial(const Monomial &m) const;

    // Coefficients c_k (polynomials free of v) with *this = sum_k c_k v^k.
    std::vector<Polynomial> coefficients_in(Var v) const;
    static Polynomial from_coefficients(Var v, const std::vector<Polynomial> &coefs);
    Polynomial derivative(Var v) const;

    Polynomial substitute(const Substitution &s) const;
    Rational evaluate(const Assignment &a) const;
    Polynomial partial_evaluate(Var v, const Rational &value) const;

    bool operator==(const Polynomial &o) const;
    // Total order used to sort denominator factors deterministically.
    std::strong_ordering compare(const Polynomial &o) const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

// Exact quotient when o divides p, nullopt otherwise. Throws on o == 0.
std::optional<Polynomial> divide_exact(const Polynomial &p, const Polynomial &o);

// Fast one-sided test: returns false only when `linear` certainly does not
// divide p (checked by evaluation modulo a large prime on the hyperplane
// linear = 0). `linear` must have total degree 1.
bool may_divide_linear(const Polynomial &p, const Polynomial &linear);

// Monic gcd over Q (zero only if both inputs are zero).
Polynomial gcd(const Polynomial &a, const Polynomial &b);

} // namespace mouldlab
