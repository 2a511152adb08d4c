#include "mouldlab/operad.hpp"

#include <algorithm>

#include "mouldlab/errors.hpp"

namespace mouldlab {

namespace {

Polynomial u(int k)
{
    return Polynomial::variable(Var::u(k));
}

RatFun iv(int lo, int hi)
{
    return RatFun(Polynomial::interval(lo, hi));
}

void require_same_arity(const MouldComponent &a, const MouldComponent &b)
{
    if (a.arity() != b.arity())
        throw InvalidArgument("arity mismatch: " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
}

Rational factorial(int n)
{
    Rational r = 1;
    for (int k = 2; k <= n; ++k)
        r *= k;
    return r;
}

} // namespace

MouldComponent::MouldComponent(int arity, RatFun value) : arity_(arity), value_(std::move(value))
{
    if (arity < 1)
        throw InvalidArgument("arity must be positive");
    if (value_.highest_u_index() > arity)
        throw InvalidArgument("component of arity " + std::to_string(arity) + " mentions u" +
                              std::to_string(value_.highest_u_index()));
}

MouldComponent MouldComponent::operator+(const MouldComponent &o) const
{
    require_same_arity(*this, o);
    return MouldComponent(arity_, value_ + o.value_);
}

MouldComponent MouldComponent::operator-(const MouldComponent &o) const
{
    require_same_arity(*this, o);
    return MouldComponent(arity_, value_ - o.value_);
}

MouldComponent MouldComponent::operator-() const
{
    return MouldComponent(arity_, -value_);
}

MouldComponent MouldComponent::scaled(const Rational &c) const
{
    return MouldComponent(arity_, value_.scaled(c));
}

Mould::Mould(int truncation)
{
    if (truncation < 1)
        throw InvalidArgument("mould truncation must be positive");
    comps_.resize(static_cast<std::size_t>(truncation));
}

MouldComponent Mould::component(int degree) const
{
    if (degree < 1 || degree > truncation())
        throw InvalidArgument("degree outside the truncation range");
    return MouldComponent(degree, comps_[static_cast<std::size_t>(degree - 1)]);
}

void Mould::set(const MouldComponent &c)
{
    if (c.arity() > truncation())
        throw InvalidArgument("degree outside the truncation range");
    comps_[static_cast<std::size_t>(c.arity() - 1)] = c.value();
}

RatFun shift(const RatFun &f, int offset)
{
    if (offset == 0)
        return f;
    Substitution s;
    int h = f.highest_u_index();
    for (int k = 1; k <= h; ++k)
        s.emplace_back(Var::u(k), u(k + offset));
    return f.substitute(s);
}

MouldComponent unit()
{
    return MouldComponent(1, RatFun(1) / RatFun(u(1)));
}

MouldComponent dend_left()
{
    return MouldComponent(2, RatFun::from_factors(Polynomial(1), {{u(1), 1}, {Polynomial::interval(1, 2), 1}}));
}

MouldComponent dend_right()
{
    return MouldComponent(2, RatFun::from_factors(Polynomial(1), {{Polynomial::interval(1, 2), 1}, {u(2), 1}}));
}

MouldComponent assoc_product()
{
    return MouldComponent(2, RatFun::from_factors(Polynomial(1), {{u(1), 1}, {u(2), 1}}));
}

MouldComponent compose_at(const MouldComponent &f, const MouldComponent &g, int i)
{
    int m = f.arity(), n = g.arity();
    if (i < 1 || i > m)
        throw InvalidArgument("composition index " + std::to_string(i) + " outside 1.." + std::to_string(m));
    Substitution sf;
    for (int k = i; k <= m; ++k)
        sf.emplace_back(Var::u(k), k == i ? Polynomial::interval(i, i + n - 1) : u(k + n - 1));
    RatFun fv = f.value().substitute(sf);
    RatFun gv = shift(g.value(), i - 1);
    return MouldComponent(m + n - 1, iv(i, i + n - 1) * fv * gv);
}

MouldComponent push(const MouldComponent &f)
{
    int n = f.arity();
    Substitution s;
    s.emplace_back(Var::u(1), -Polynomial::interval(1, n));
    for (int k = 2; k <= n; ++k)
        s.emplace_back(Var::u(k), u(k - 1));
    return MouldComponent(n, f.value().substitute(s));
}

bool is_alternal(const MouldComponent &f, int max_arity)
{
    int n = f.arity();
    if (n > max_arity)
        throw InvalidArgument("alternality check capped at arity " + std::to_string(max_arity));
    for (int i = 1; i < n; ++i) {
        // Each shuffle of (1..i) with (i+1..n) is a choice of the positions
        // taken by the first word.
        std::vector<bool> first(static_cast<std::size_t>(n), false);
        std::fill(first.begin(), first.begin() + i, true);
        std::vector<RatFun> terms;
        do {
            Substitution s;
            int a = 1, b = i + 1;
            for (int pos = 1; pos <= n; ++pos)
                s.emplace_back(Var::u(pos), u(first[pos - 1] ? a++ : b++));
            terms.push_back(f.value().substitute(s));
        } while (std::prev_permutation(first.begin(), first.end()));
        if (!sum(std::move(terms)).is_zero())
            return false;
    }
    return true;
}

bool is_vegetal(const MouldComponent &f, int max_arity)
{
    int n = f.arity();
    if (n > max_arity)
        throw InvalidArgument("vegetality check capped at arity " + std::to_string(max_arity));
    if (f.is_zero())
        return true;
    auto w = f.value().homogeneity_weight();
    // For homogeneous f the scaling variable factors out of both sides, so
    // it can be set to 1.
    Polynomial scale = w ? Polynomial(1) : Polynomial::variable(Var::aux());
    // Full symmetrization built up one variable at a time:
    // Sym_k = (1 + (1 k) + ... + (k-1 k)) Sym_{k-1}, reducing between stages.
    Substitution scaling;
    for (int k = 1; k <= n; ++k)
        scaling.emplace_back(Var::u(k), scale * u(k));
    RatFun acc = f.value().substitute(scaling);
    for (int k = 2; k <= n; ++k) {
        std::vector<RatFun> terms{acc};
        for (int i = 1; i < k; ++i)
            terms.push_back(acc.substitute({{Var::u(i), u(k)}, {Var::u(k), u(i)}}));
        acc = sum(std::move(terms));
    }
    RatFun lhs = acc;
    Polynomial prod(1);
    for (int k = 1; k <= n; ++k)
        prod = prod * u(k);
    lhs = lhs * RatFun(prod);

    Substitution diag;
    for (int k = 1; k <= n; ++k)
        diag.emplace_back(Var::u(k), scale);
    RatFun rhs = f.value().substitute(diag).scaled(factorial(n));
    return lhs == rhs;
}

MouldComponent succ(const MouldComponent &f, const MouldComponent &g)
{
    int m = f.arity(), n = g.arity();
    RatFun v = f.value() * shift(g.value(), m) * iv(m + 1, m + n) / iv(1, m + n);
    return MouldComponent(m + n, v);
}

MouldComponent prec(const MouldComponent &f, const MouldComponent &g)
{
    int m = f.arity(), n = g.arity();
    RatFun v = f.value() * shift(g.value(), m) * iv(1, m) / iv(1, m + n);
    return MouldComponent(m + n, v);
}

MouldComponent mu(const MouldComponent &f, const MouldComponent &g)
{
    return MouldComponent(f.arity() + g.arity(), f.value() * shift(g.value(), f.arity()));
}

MouldComponent limu(const MouldComponent &f, const MouldComponent &g)
{
    return mu(f, g) - mu(g, f);
}

MouldComponent prelie_arrow(const MouldComponent &f, const MouldComponent &g)
{
    return succ(g, f) - prec(f, g);
}

MouldComponent prelie_circ(const MouldComponent &f, const MouldComponent &g)
{
    std::vector<RatFun> terms;
    for (int i = 1; i <= f.arity(); ++i)
        terms.push_back(compose_at(f, g, i).value());
    return MouldComponent(f.arity() + g.arity() - 1, sum(std::move(terms)));
}

MouldComponent over(const MouldComponent &f, const MouldComponent &g)
{
    int m = f.arity(), n = g.arity();
    Substitution s;
    for (int k = 1; k <= n; ++k)
        s.emplace_back(Var::u(k), k == 1 ? Polynomial::interval(1, m + 1) : u(k + m));
    return MouldComponent(m + n, f.value() * g.value().substitute(s));
}

MouldComponent under(const MouldComponent &f, const MouldComponent &g)
{
    int m = f.arity(), n = g.arity();
    RatFun fv = f.value().substitute({{Var::u(m), Polynomial::interval(m, m + n)}});
    return MouldComponent(m + n, fv * shift(g.value(), m));
}

MouldComponent arit(const MouldComponent &f, const MouldComponent &g)
{
    return prelie_circ(f, over(g, unit())) - prelie_circ(f, under(unit(), g));
}

MouldComponent ari(const MouldComponent &f, const MouldComponent &g)
{
    return arit(f, g) - arit(g, f) + limu(f, g);
}

MouldComponent succ_operadic(const MouldComponent &f, const MouldComponent &g)
{
    return compose_at(compose_at(dend_left(), g, 2), f, 1);
}

MouldComponent prec_operadic(const MouldComponent &f, const MouldComponent &g)
{
    return compose_at(compose_at(dend_right(), g, 2), f, 1);
}

MouldComponent mu_operadic(const MouldComponent &f, const MouldComponent &g)
{
    return compose_at(compose_at(assoc_product(), g, 2), f, 1);
}

MouldComponent over_operadic(const MouldComponent &f, const MouldComponent &g)
{
    return compose_at(compose_at(g, dend_left(), 1), f, 1);
}

MouldComponent under_operadic(const MouldComponent &f, const MouldComponent &g)
{
    int m = f.arity();
    return compose_at(compose_at(f, dend_right(), m), g, m + 1);
}

MouldComponent derivation(const MouldComponent &f)
{
    int m = f.arity();
    if (m < 2)
        throw InvalidArgument("derivation of an arity-one component is a constant; use derivation_constant");
    // The inserted variable is u_m, which the other slots never reach.
    std::vector<RatFun> terms;
    for (int j = 1; j <= m; ++j) {
        Substitution s;
        for (int k = j; k <= m; ++k)
            s.emplace_back(Var::u(k), k == j ? u(m) : u(k - 1));
        terms.push_back(f.value().substitute(s).residue_at_zero(Var::u(m)));
    }
    return MouldComponent(m - 1, sum(std::move(terms)));
}

RatFun derivation_constant(const MouldComponent &f)
{
    if (f.arity() != 1)
        throw InvalidArgument("derivation_constant expects arity one");
    return f.value().residue_at_zero(Var::u(1));
}

RatFun value_at_ones(const MouldComponent &f)
{
    Substitution s;
    for (int k = 1; k <= f.arity(); ++k)
        s.emplace_back(Var::u(k), Polynomial(1));
    return f.value().substitute(s);
}

PowerSeries forgetful(const Mould &m, unsigned order)
{
    PowerSeries r(order);
    for (unsigned n = 1; n <= order && static_cast<int>(n) <= m.truncation(); ++n) {
        MouldComponent c = m.component(static_cast<int>(n));
        if (c.is_zero())
            continue;
        auto w = c.value().homogeneity_weight();
        if (!w || *w != -static_cast<int>(n))
            throw DomainError("component of degree " + std::to_string(n) + " is not homogeneous of weight -" +
                              std::to_string(n));
        if (!c.value().has_nice_poles(static_cast<int>(n)))
            throw DomainError("component of degree " + std::to_string(n) + " does not have nice poles");
        RatFun v = value_at_ones(c);
        if (!v.is_constant())
            throw InvalidArgument("component of degree " + std::to_string(n) +
                                  " depends on t; fix t to a rational value first");
        r[n] = v.constant_value();
    }
    return r;
}

} // namespace mouldlab
