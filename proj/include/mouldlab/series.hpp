#pragma once

#include <string>
#include <vector>

#include "mouldlab/polynomial.hpp"

namespace mouldlab {

// Truncated power series c_0 + c_1 x + ... + c_N x^N over Q.
class PowerSeries {
public:
    explicit PowerSeries(unsigned order = 0) : c_(order + 1) {}
    PowerSeries(unsigned order, std::vector<Rational> coefs);
    static PowerSeries x(unsigned order);
    static PowerSeries constant(unsigned order, const Rational &c);

    unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
    const std::vector<Rational> &coefficients() const { return c_; }
    const Rational &operator[](unsigned k) const { return c_.at(k); }
    Rational &operator[](unsigned k) { return c_.at(k); }
    // Same series cut (or zero-padded) to a new order.
    PowerSeries truncated(unsigned order) const;

    PowerSeries operator+(const PowerSeries &o) const;
    PowerSeries operator-(const PowerSeries &o) const;
    PowerSeries operator-() const;
    PowerSeries operator*(const PowerSeries &o) const;
    PowerSeries scaled(const Rational &c) const;
    PowerSeries pow(unsigned e) const;

    // 1/f, requires f(0) != 0.
    PowerSeries inverse() const;
    // f(g(x)), requires g(0) = 0.
    PowerSeries compose(const PowerSeries &g) const;
    PowerSeries derivative() const; // order drops by one, padded back with 0
    PowerSeries integral() const;   // zero constant term, top term dropped
    // log f, requires f(0) = 1.
    PowerSeries log() const;
    // f^a for rational a, requires f(0) = 1.
    PowerSeries binomial_power(const Rational &a) const;

    bool operator==(const PowerSeries &o) const { return c_ == o.c_; }
    std::string to_string() const;

private:
    std::vector<Rational> c_;
};

} // namespace mouldlab
