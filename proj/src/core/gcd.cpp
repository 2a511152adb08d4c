#include <optional>

#include "mouldlab/errors.hpp"
#include "mouldlab/polynomial.hpp"

// Multivariate gcd over Q by recursive primitive pseudo-remainder sequences.
// Only used for denominators that do not split into linear forms, so the
// simple algorithm is fast enough.

namespace mouldlab {

namespace {

std::optional<Var> first_variable(const Polynomial &a, const Polynomial &b)
{
    int best = Var::kSlots;
    for (const auto *p : {&a, &b})
        for (const auto &t : p->terms()) {
            int s = t.mono.highest_slot();
            if (s >= 0 && s < best)
                best = s;
        }
    if (best == Var::kSlots)
        return std::nullopt;
    return Var::from_slot(best);
}

Polynomial exact(const Polynomial &p, const Polynomial &d)
{
    auto q = divide_exact(p, d);
    if (!q)
        throw Error("internal error: inexact division in gcd");
    return *q;
}

Polynomial content_in(const Polynomial &p, Var v)
{
    Polynomial c;
    for (const auto &coef : p.coefficients_in(v)) {
        if (coef.is_zero())
            continue;
        c = gcd(c, coef);
        if (c.is_constant())
            break;
    }
    return c;
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial &b, Var v)
{
    unsigned db = b.degree_in(v);
    auto bc = b.coefficients_in(v);
    const Polynomial &lb = bc.back();
    while (!a.is_zero()) {
        unsigned da = a.degree_in(v);
        if (da < db)
            break;
        Polynomial la = a.coefficients_in(v).back();
        a = a * lb - (la * b).times_monomial(Monomial::of(v, da - db));
    }
    return a;
}

} // namespace

Polynomial gcd(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.is_constant() || b.is_constant())
        return Polynomial(1);
    if (a == b)
        return a.monic();

    Monomial ma = a.monomial_content(), mb = b.monomial_content();
    Monomial mg = Monomial::gcd(ma, mb);
    Polynomial pa = a.divided_by_monomial(ma), pb = b.divided_by_monomial(mb);

    auto v = first_variable(pa, pb);
    Polynomial g;
    if (!v) {
        g = Polynomial(1);
    } else if (!pa.contains(*v)) {
        g = gcd(pa, content_in(pb, *v));
    } else if (!pb.contains(*v)) {
        g = gcd(content_in(pa, *v), pb);
    } else {
        Polynomial ca = content_in(pa, *v), cb = content_in(pb, *v);
        Polynomial c = gcd(ca, cb);
        Polynomial r0 = exact(pa, ca).monic(), r1 = exact(pb, cb).monic();
        if (r0.degree_in(*v) < r1.degree_in(*v))
            std::swap(r0, r1);
        while (!r1.is_zero() && r1.degree_in(*v) > 0) {
            Polynomial r = pseudo_remainder(r0, r1, *v);
            r0 = std::move(r1);
            if (r.is_zero()) {
                r1 = Polynomial{};
                break;
            }
            r1 = exact(r, content_in(r, *v)).monic();
        }
        // r1 nonzero of degree 0 in v means the primitive parts are coprime.
        Polynomial prim = r1.is_zero() ? r0 : Polynomial(1);
        g = prim * c;
    }
    return g.times_monomial(mg).monic();
}

} // namespace mouldlab
