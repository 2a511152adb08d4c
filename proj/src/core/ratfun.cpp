#include "mouldlab/ratfun.hpp"

#include <algorithm>

#include "mouldlab/errors.hpp"

namespace mouldlab {

namespace {

bool base_greater(const Factor &a, const Factor &b)
{
    return a.base.compare(b.base) > 0;
}

void add_factor(std::vector<Factor> &list, const Polynomial &base, unsigned e)
{
    if (e == 0)
        return;
    auto it = std::lower_bound(list.begin(), list.end(), Factor{base, 0}, base_greater);
    if (it != list.end() && it->base == base)
        it->exponent += e;
    else
        list.insert(it, Factor{base, e});
}

bool same_factors(const std::vector<Factor> &a, const std::vector<Factor> &b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].exponent != b[i].exponent || !(a[i].base == b[i].base))
            return false;
    return true;
}

struct Split {
    Rational scalar{1};
    std::vector<Factor> lin;
    Polynomial resid{1};
};

// Peels off monomial content, then linear factors among u_{i..j} and the
// extra candidates. What is left (degree >= 2) becomes the residual.
Split split(const Polynomial &p, const std::vector<Factor> &extra)
{
    Split s;
    s.scalar = p.leading().coef;
    Polynomial q = p.monic();
    Monomial m = q.monomial_content();
    m.for_each([&](Var v, unsigned e) { add_factor(s.lin, Polynomial::variable(v), e); });
    q = q.divided_by_monomial(m);
    if (q.is_constant())
        return s;
    if (q.total_degree() == 1) {
        add_factor(s.lin, q, 1);
        return s;
    }

    auto try_divisor = [&](const Polynomial &l) {
        while (q.total_degree() >= 2 && may_divide_linear(q, l)) {
            auto d = divide_exact(q, l);
            if (!d)
                break;
            q = std::move(*d);
            add_factor(s.lin, l, 1);
        }
    };
    for (const auto &f : extra)
        try_divisor(f.base);
    int h = q.highest_u_index();
    for (int i = 1; i <= h && q.total_degree() >= 2; ++i)
        for (int j = i; j <= h && q.total_degree() >= 2; ++j)
            try_divisor(Polynomial::interval(i, j));

    if (q.total_degree() == 1)
        add_factor(s.lin, q, 1);
    else
        s.resid = q;
    return s;
}

std::optional<int> poly_weight(const Polynomial &p)
{
    if (p.is_zero())
        return std::nullopt;
    unsigned d = p.leading().mono.u_degree();
    for (const auto &t : p.terms())
        if (t.mono.u_degree() != d)
            return std::nullopt;
    return static_cast<int>(d);
}

// Interval form u_lo + ... + u_hi; returns (lo, hi) or nullopt.
std::optional<std::pair<int, int>> as_interval(const Polynomial &p)
{
    int lo = 0, prev = 0;
    for (const auto &t : p.terms()) {
        if (t.coef != 1 || t.mono.degree() != 1)
            return std::nullopt;
        int s = t.mono.highest_slot();
        Var v = Var::from_slot(s);
        if (!v.is_u())
            return std::nullopt;
        int k = v.u_index();
        if (lo == 0)
            lo = k;
        else if (k != prev + 1)
            return std::nullopt;
        prev = k;
    }
    if (lo == 0)
        return std::nullopt;
    return std::make_pair(lo, prev);
}

using Series = std::vector<RatFun>;

Series series_mul(const Series &a, const Series &b, std::size_t len)
{
    Series r(len);
    for (std::size_t i = 0; i < len && i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j < len && j < b.size(); ++j)
            if (!b[j].is_zero())
                r[i + j] += a[i] * b[j];
    }
    return r;
}

// 1/q as a series in v truncated to len coefficients; q(0) != 0.
Series series_inverse(const Polynomial &q, Var v, std::size_t len)
{
    auto coefs = q.coefficients_in(v);
    RatFun inv0 = RatFun(coefs[0]).inverse();
    Series c(len);
    c[0] = inv0;
    for (std::size_t j = 1; j < len; ++j) {
        RatFun acc;
        for (std::size_t i = 1; i <= j && i < coefs.size(); ++i)
            if (!coefs[i].is_zero())
                acc += RatFun(coefs[i]) * c[j - i];
        c[j] = -(acc * inv0);
    }
    return c;
}

} // namespace

RatFun RatFun::fraction(const Polynomial &num, const Polynomial &den)
{
    return from_factors(num, {{den, 1}});
}

RatFun RatFun::from_factors(const Polynomial &num, const std::vector<std::pair<Polynomial, unsigned>> &den)
{
    RatFun r;
    Rational scalar = 1;
    for (const auto &[p, e] : den) {
        if (p.is_zero())
            throw DomainError("denominator vanishes identically");
        if (e == 0 || p.is_constant()) {
            if (e > 0) {
                Rational c = p.constant_value();
                for (unsigned k = 0; k < e; ++k)
                    scalar *= c;
            }
            continue;
        }
        Split s = split(p, r.lin_);
        for (unsigned k = 0; k < e; ++k)
            scalar *= s.scalar;
        for (const auto &f : s.lin)
            add_factor(r.lin_, f.base, f.exponent * e);
        if (!s.resid.is_constant())
            r.resid_ = r.resid_ * s.resid.pow(e);
    }
    r.num_ = num.scaled(1 / scalar);
    r.normalize();
    return r;
}

void RatFun::normalize()
{
    if (num_.is_zero()) {
        lin_.clear();
        resid_ = Polynomial(1);
        return;
    }
    for (auto &f : lin_) {
        while (f.exponent > 0 && may_divide_linear(num_, f.base)) {
            auto q = divide_exact(num_, f.base);
            if (!q)
                break;
            num_ = std::move(*q);
            --f.exponent;
        }
    }
    std::erase_if(lin_, [](const Factor &f) { return f.exponent == 0; });

    if (has_residual()) {
        Polynomial g = gcd(num_, resid_);
        if (!g.is_constant()) {
            num_ = *divide_exact(num_, g);
            Polynomial rest = *divide_exact(resid_, g);
            resid_ = Polynomial(1);
            if (!rest.is_constant()) {
                Split s = split(rest, lin_);
                num_ = num_.scaled(1 / s.scalar);
                for (const auto &f : s.lin)
                    add_factor(lin_, f.base, f.exponent);
                resid_ = s.resid;
                if (!s.lin.empty())
                    normalize();
            } else {
                num_ = num_.scaled(1 / rest.constant_value());
            }
        }
    }
}

std::vector<Factor> RatFun::denominator_factors() const
{
    std::vector<Factor> r = lin_;
    if (has_residual())
        add_factor(r, resid_, 1);
    return r;
}

Polynomial RatFun::denominator() const
{
    Polynomial d = resid_;
    for (const auto &f : lin_)
        d = d * f.base.pow(f.exponent);
    return d;
}

Rational RatFun::constant_value() const
{
    if (!is_constant())
        throw InvalidArgument("not a constant: " + to_string());
    return num_.constant_value();
}

std::vector<Var> RatFun::variables() const
{
    std::vector<Var> vars = num_.variables();
    auto add = [&](const Polynomial &p) {
        for (Var v : p.variables())
            if (std::find(vars.begin(), vars.end(), v) == vars.end())
                vars.push_back(v);
    };
    for (const auto &f : lin_)
        add(f.base);
    add(resid_);
    std::sort(vars.begin(), vars.end());
    return vars;
}

bool RatFun::contains(Var v) const
{
    auto vars = variables();
    return std::find(vars.begin(), vars.end(), v) != vars.end();
}

int RatFun::highest_u_index() const
{
    int h = std::max(num_.highest_u_index(), resid_.highest_u_index());
    for (const auto &f : lin_)
        h = std::max(h, f.base.highest_u_index());
    return h;
}

RatFun RatFun::operator-() const
{
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::scaled(const Rational &c) const
{
    if (sgn(c) == 0)
        return {};
    RatFun r = *this;
    r.num_ = r.num_.scaled(c);
    return r;
}

RatFun RatFun::operator+(const RatFun &o) const
{
    if (is_zero())
        return o;
    if (o.is_zero())
        return *this;
    RatFun r;
    if (same_factors(lin_, o.lin_) && resid_ == o.resid_) {
        r = *this;
        r.num_ = num_ + o.num_;
        r.normalize();
        return r;
    }

    // Common denominator: lcm of the linear parts, product over gcd of the
    // residuals.
    std::vector<Polynomial> cof_a, cof_b;
    std::size_t i = 0, j = 0;
    while (i < lin_.size() || j < o.lin_.size()) {
        int c;
        if (i == lin_.size())
            c = -1;
        else if (j == o.lin_.size())
            c = 1;
        else {
            auto cc = lin_[i].base.compare(o.lin_[j].base);
            c = cc > 0 ? 1 : (cc < 0 ? -1 : 0);
        }
        if (c > 0) {
            r.lin_.push_back(lin_[i]);
            for (unsigned k = 0; k < lin_[i].exponent; ++k)
                cof_b.push_back(lin_[i].base);
            ++i;
        } else if (c < 0) {
            r.lin_.push_back(o.lin_[j]);
            for (unsigned k = 0; k < o.lin_[j].exponent; ++k)
                cof_a.push_back(o.lin_[j].base);
            ++j;
        } else {
            unsigned ea = lin_[i].exponent, eb = o.lin_[j].exponent;
            r.lin_.push_back(Factor{lin_[i].base, std::max(ea, eb)});
            for (unsigned k = ea; k < eb; ++k)
                cof_a.push_back(lin_[i].base);
            for (unsigned k = eb; k < ea; ++k)
                cof_b.push_back(lin_[i].base);
            ++i;
            ++j;
        }
    }
    if (resid_ == o.resid_) {
        r.resid_ = resid_;
    } else {
        Polynomial g = gcd(resid_, o.resid_);
        Polynomial ra = *divide_exact(resid_, g), rb = *divide_exact(o.resid_, g);
        r.resid_ = resid_ * rb;
        if (!rb.is_constant())
            cof_a.push_back(rb);
        if (!ra.is_constant())
            cof_b.push_back(ra);
    }
    Polynomial a = num_, b = o.num_;
    for (const auto &p : cof_a)
        a = a * p;
    for (const auto &p : cof_b)
        b = b * p;
    r.num_ = a + b;
    r.normalize();
    return r;
}

RatFun RatFun::operator-(const RatFun &o) const
{
    return *this + (-o);
}

RatFun RatFun::operator*(const RatFun &o) const
{
    if (is_zero() || o.is_zero())
        return {};
    RatFun r;
    r.lin_ = lin_;
    for (const auto &f : o.lin_)
        add_factor(r.lin_, f.base, f.exponent);
    r.resid_ = resid_ * o.resid_;
    r.num_ = num_ * o.num_;
    r.normalize();
    return r;
}

RatFun RatFun::inverse() const
{
    if (is_zero())
        throw DomainError("division by zero");
    std::vector<std::pair<Polynomial, unsigned>> den{{num_, 1}};
    Polynomial num = resid_;
    for (const auto &f : lin_)
        num = num * f.base.pow(f.exponent);
    return from_factors(num, den);
}

RatFun RatFun::operator/(const RatFun &o) const
{
    if (o.is_zero())
        throw DomainError("division by zero");
    return *this * o.inverse();
}

RatFun RatFun::pow(int e) const
{
    if (e < 0)
        return inverse().pow(-e);
    RatFun result(1);
    RatFun base = *this;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

RatFun RatFun::substitute(const Substitution &s) const
{
    std::vector<std::pair<Polynomial, unsigned>> den;
    for (const auto &f : lin_)
        den.emplace_back(f.base.substitute(s), f.exponent);
    if (has_residual())
        den.emplace_back(resid_.substitute(s), 1);
    for (const auto &d : den)
        if (d.first.is_zero())
            throw DomainError("denominator vanishes identically after substitution");
    return from_factors(num_.substitute(s), den);
}

Rational RatFun::evaluate(const Assignment &a) const
{
    Rational den = resid_.evaluate(a);
    for (const auto &f : lin_) {
        Rational v = f.base.evaluate(a);
        for (unsigned k = 0; k < f.exponent; ++k)
            den *= v;
    }
    if (sgn(den) == 0)
        throw DomainError("pole: denominator vanishes at the evaluation point");
    return num_.evaluate(a) / den;
}

RatFun RatFun::residue_at_zero(Var v) const
{
    if (is_zero())
        return {};
    Polynomial pv = Polynomial::variable(v);
    unsigned m = 0;
    RatFun rest;
    rest.num_ = num_;
    rest.resid_ = resid_;
    for (const auto &f : lin_) {
        if (f.base == pv)
            m = f.exponent;
        else
            rest.lin_.push_back(f);
    }
    if (m == 0)
        return {};
    if (m == 1)
        return rest.substitute({{v, Polynomial()}});

    // Coefficient of v^(m-1) in the Taylor expansion of rest at v = 0.
    std::size_t len = m;
    Series acc(len);
    auto nc = num_.coefficients_in(v);
    for (std::size_t k = 0; k < len && k < nc.size(); ++k)
        acc[k] = RatFun(nc[k]);
    auto apply = [&](const Polynomial &q, unsigned e) {
        Series inv = series_inverse(q, v, len);
        for (unsigned k = 0; k < e; ++k)
            acc = series_mul(acc, inv, len);
    };
    for (const auto &f : rest.lin_)
        apply(f.base, f.exponent);
    if (has_residual())
        apply(resid_, 1);
    return acc[len - 1];
}

std::optional<int> RatFun::homogeneity_weight() const
{
    auto w = poly_weight(num_);
    if (!w)
        return std::nullopt;
    int d = *w;
    for (const auto &f : denominator_factors()) {
        auto fw = poly_weight(f.base);
        if (!fw)
            return std::nullopt;
        d -= *fw * static_cast<int>(f.exponent);
    }
    return d;
}

void RatFun::check_u_range(int n) const
{
    for (Var v : variables()) {
        if (v == Var::t())
            continue;
        if (!v.is_u() || v.u_index() > n)
            throw InvalidArgument("variable " + v.name() + " outside u1..u" + std::to_string(n));
    }
}

bool RatFun::has_nice_poles(int n) const
{
    check_u_range(n);
    if (has_residual())
        return false;
    for (const auto &f : lin_)
        if (!as_interval(f.base))
            return false;
    return true;
}

bool RatFun::clears_Hn(int n) const
{
    if (!has_nice_poles(n))
        return false;
    for (const auto &f : lin_)
        if (f.exponent > 1)
            return false;
    return true;
}

bool RatFun::operator==(const RatFun &o) const
{
    if (same_factors(lin_, o.lin_) && resid_ == o.resid_)
        return num_ == o.num_;
    if (!has_residual() && !o.has_residual())
        return false;
    return num_ * o.denominator() == o.num_ * denominator();
}

std::string RatFun::to_string() const
{
    auto factors = denominator_factors();
    if (factors.empty())
        return num_.to_string();

    std::string num, scalar_den;
    if (num_.size() == 1) {
        // Single-term numerator: move the coefficient's denominator down.
        const Term &t = num_.leading();
        Rational n = t.coef.get_num();
        Rational d = t.coef.get_den();
        num = Polynomial::monomial(t.mono, n).to_string();
        if (d != 1)
            scalar_den = d.get_str();
    } else {
        num = "(" + num_.to_string() + ")";
    }

    std::vector<std::string> parts;
    if (!scalar_den.empty())
        parts.push_back(scalar_den);
    for (const auto &f : factors) {
        std::string b = f.base.to_string();
        if (f.base.size() > 1)
            b = "(" + b + ")";
        if (f.exponent > 1)
            b += "^" + std::to_string(f.exponent);
        parts.push_back(b);
    }
    std::string den = parts[0];
    if (parts.size() > 1) {
        den = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i)
                den += "*";
            den += parts[i];
        }
        den += ")";
    }
    return num + "/" + den;
}

RatFun sum(std::vector<RatFun> terms)
{
    if (terms.empty())
        return {};
    while (terms.size() > 1) {
        std::vector<RatFun> next;
        next.reserve((terms.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < terms.size(); i += 2)
            next.push_back(terms[i] + terms[i + 1]);
        if (terms.size() % 2)
            next.push_back(std::move(terms.back()));
        terms = std::move(next);
    }
    return terms[0];
}

} // namespace mouldlab
