#include "mouldlab/gallery.hpp"

#include <map>

#include "mouldlab/errors.hpp"
#include "mouldlab/trees.hpp"

namespace mouldlab {

namespace {

Polynomial u(int k)
{
    return Polynomial::variable(Var::u(k));
}

Polynomial t_value(const TParam &t)
{
    return t ? Polynomial(*t) : Polynomial::variable(Var::t());
}

void require_degree(int n)
{
    if (n < 1)
        throw InvalidArgument("gallery moulds start at degree 1");
}

// numerator / (u1...un u_{1..n})
MouldComponent over_standard_denominator(int n, const Polynomial &numerator)
{
    std::vector<std::pair<Polynomial, unsigned>> den;
    for (int k = 1; k <= n; ++k)
        den.emplace_back(u(k), 1);
    den.emplace_back(Polynomial::interval(1, n), 1);
    return MouldComponent(n, RatFun::from_factors(numerator, den));
}

Rational binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

} // namespace

MouldComponent as_mould(int n)
{
    require_degree(n);
    std::vector<std::pair<Polynomial, unsigned>> den;
    for (int k = 1; k <= n; ++k)
        den.emplace_back(u(k), 1);
    return MouldComponent(n, RatFun::from_factors(Polynomial(1), den));
}

MouldComponent pq_sum(int p, int q)
{
    if (p < 1 || q < 0)
        throw InvalidArgument("pq_sum needs p >= 1 and q >= 0");
    return over_standard_denominator(p + q, u(p));
}

MouldComponent pq_tree_sum(int p, int q)
{
    if (p < 1 || q < 0)
        throw InvalidArgument("pq_tree_sum needs p >= 1 and q >= 0");
    std::vector<RatFun> terms;
    for (const auto &t : enumerate_binary_trees(p + q))
        if (t.left().degree() == p - 1)
            terms.push_back(psi_tree(t).value());
    return MouldComponent(p + q, sum(std::move(terms)));
}

MouldComponent ty_mould(int n, const TParam &t)
{
    require_degree(n);
    Polynomial tv = t_value(t), num, power(1);
    for (int i = 1; i <= n; ++i) {
        num += power * u(i);
        power = power * tv;
    }
    return over_standard_denominator(n, num);
}

MouldComponent weighted_mould(int n)
{
    require_degree(n);
    Polynomial num;
    for (int i = 1; i <= n; ++i)
        num += u(i).scaled(i);
    return over_standard_denominator(n, num);
}

MouldComponent cm_mould(int n)
{
    require_degree(n);
    MouldComponent cm = unit();
    for (int k = 2; k <= n; ++k)
        cm = prelie_arrow(cm, unit());
    return cm;
}

MouldComponent cm_closed_form(int n, bool printed_binomial)
{
    require_degree(n);
    Polynomial num;
    for (int k = 1; k <= n; ++k) {
        Rational c = printed_binomial ? binomial(n, k) : binomial(n - 1, k - 1);
        if ((n + k) % 2)
            c = -c;
        num += u(k).scaled(c);
    }
    return over_standard_denominator(n, num);
}

MouldComponent po_mould(int n, const TParam &t)
{
    require_degree(n);
    Polynomial tv = t_value(t), num(1);
    std::vector<std::pair<Polynomial, unsigned>> den{{u(1), 1}};
    for (int i = 2; i <= n; ++i) {
        num = num * (Polynomial::interval(1, i - 1) + tv * u(i));
        den.emplace_back(u(i), 1);
        den.emplace_back(Polynomial::interval(1, i), 1);
    }
    return MouldComponent(n, RatFun::from_factors(num, den));
}

MouldComponent po_recursion(int n, const TParam &t)
{
    require_degree(n);
    MouldComponent po = unit();
    RatFun tv(t_value(t));
    for (int k = 2; k <= n; ++k) {
        MouldComponent a = succ(po, unit());
        po = MouldComponent(k, a.value() * tv) + prec(po, unit());
    }
    return po;
}

Mould truncated_mould(int order, const std::function<MouldComponent(int)> &component)
{
    Mould m(order);
    for (int n = 1; n <= order; ++n)
        m.set(component(n));
    return m;
}

} // namespace mouldlab
