#pragma once

#include <string>
#include <vector>

#include "mouldlab/ratfun.hpp"
#include "mouldlab/series.hpp"

namespace mouldlab {

// Element of Mould(n): a rational function in u1..un (and possibly t).
class MouldComponent {
public:
    MouldComponent(int arity, RatFun value);

    int arity() const { return arity_; }
    const RatFun &value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    MouldComponent operator+(const MouldComponent &o) const;
    MouldComponent operator-(const MouldComponent &o) const;
    MouldComponent operator-() const;
    MouldComponent scaled(const Rational &c) const;
    bool operator==(const MouldComponent &o) const { return arity_ == o.arity_ && value_ == o.value_; }

    std::string to_string() const { return value_.to_string(); }

private:
    int arity_;
    RatFun value_;
};

// A mould truncated at degree N; missing components are zero.
class Mould {
public:
    explicit Mould(int truncation);
    int truncation() const { return static_cast<int>(comps_.size()); }
    // Component of the given degree (zero if never set).
    MouldComponent component(int degree) const;
    void set(const MouldComponent &c);

private:
    std::vector<RatFun> comps_;
};

// u_k -> u_{k+offset} for every u-variable.
RatFun shift(const RatFun &f, int offset);

MouldComponent unit();
// 1/(u1 u_{1..2}), 1/(u_{1..2} u2) and their sum 1/(u1 u2).
MouldComponent dend_left();
MouldComponent dend_right();
MouldComponent assoc_product();
MouldComponent compose_at(const MouldComponent &f, const MouldComponent &g, int i);
MouldComponent push(const MouldComponent &f);

bool is_alternal(const MouldComponent &f, int max_arity = 8);
bool is_vegetal(const MouldComponent &f, int max_arity = 6);

// Products given by their explicit formulas.
MouldComponent succ(const MouldComponent &f, const MouldComponent &g);
MouldComponent prec(const MouldComponent &f, const MouldComponent &g);
MouldComponent mu(const MouldComponent &f, const MouldComponent &g);
MouldComponent limu(const MouldComponent &f, const MouldComponent &g);
MouldComponent prelie_arrow(const MouldComponent &f, const MouldComponent &g);
MouldComponent prelie_circ(const MouldComponent &f, const MouldComponent &g);
MouldComponent over(const MouldComponent &f, const MouldComponent &g);
MouldComponent under(const MouldComponent &f, const MouldComponent &g);
MouldComponent arit(const MouldComponent &f, const MouldComponent &g);
MouldComponent ari(const MouldComponent &f, const MouldComponent &g);

// The same products built from partial compositions with the generators
// 1/(u1 u12), 1/(u12 u2) and 1/(u1 u2); used to cross-check the formulas.
MouldComponent succ_operadic(const MouldComponent &f, const MouldComponent &g);
MouldComponent prec_operadic(const MouldComponent &f, const MouldComponent &g);
MouldComponent mu_operadic(const MouldComponent &f, const MouldComponent &g);
MouldComponent over_operadic(const MouldComponent &f, const MouldComponent &g);
MouldComponent under_operadic(const MouldComponent &f, const MouldComponent &g);

// Sum over insertion slots of the residue at 0; arity >= 2.
MouldComponent derivation(const MouldComponent &f);
// Arity-one case: Res_{u1=0} f, free of u-variables.
RatFun derivation_constant(const MouldComponent &f);

// f(1, ..., 1); with t present the result may depend on t.
RatFun value_at_ones(const MouldComponent &f);
// Coefficients f_n(1..1) for n = 1..order; checks weight -n and nice poles.
PowerSeries forgetful(const Mould &m, unsigned order);

} // namespace mouldlab
