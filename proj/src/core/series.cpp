#include "mouldlab/series.hpp"

#include <algorithm>

#include "mouldlab/errors.hpp"

namespace mouldlab {

namespace {

void same_order(const PowerSeries &a, const PowerSeries &b)
{
    if (a.order() != b.order())
        throw InvalidArgument("series truncation orders differ");
}

} // namespace

PowerSeries::PowerSeries(unsigned order, std::vector<Rational> coefs) : c_(std::move(coefs))
{
    c_.resize(order + 1);
}

PowerSeries PowerSeries::x(unsigned order)
{
    PowerSeries s(order);
    if (order >= 1)
        s.c_[1] = 1;
    return s;
}

PowerSeries PowerSeries::constant(unsigned order, const Rational &c)
{
    PowerSeries s(order);
    s.c_[0] = c;
    return s;
}

PowerSeries PowerSeries::truncated(unsigned order) const
{
    return PowerSeries(order, c_);
}

PowerSeries PowerSeries::operator+(const PowerSeries &o) const
{
    same_order(*this, o);
    PowerSeries r = *this;
    for (std::size_t k = 0; k < c_.size(); ++k)
        r.c_[k] += o.c_[k];
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries &o) const
{
    return *this + (-o);
}

PowerSeries PowerSeries::operator-() const
{
    return scaled(-1);
}

PowerSeries PowerSeries::operator*(const PowerSeries &o) const
{
    same_order(*this, o);
    PowerSeries r(order());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0)
            continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

PowerSeries PowerSeries::scaled(const Rational &c) const
{
    PowerSeries r = *this;
    for (auto &v : r.c_)
        v *= c;
    return r;
}

PowerSeries PowerSeries::pow(unsigned e) const
{
    PowerSeries r = constant(order(), 1);
    for (unsigned k = 0; k < e; ++k)
        r = r * *this;
    return r;
}

PowerSeries PowerSeries::inverse() const
{
    if (sgn(c_[0]) == 0)
        throw DomainError("series inverse needs a non-zero constant term");
    PowerSeries r(order());
    Rational inv0 = 1 / c_[0];
    r.c_[0] = inv0;
    for (std::size_t k = 1; k < c_.size(); ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i)
            acc += c_[i] * r.c_[k - i];
        r.c_[k] = -acc * inv0;
    }
    return r;
}

PowerSeries PowerSeries::compose(const PowerSeries &g) const
{
    same_order(*this, g);
    if (sgn(g.c_[0]) != 0)
        throw DomainError("series composition needs g(0) = 0");
    // Horner scheme from the top coefficient.
    PowerSeries r(order());
    for (std::size_t k = c_.size(); k-- > 0;) {
        r = r * g;
        r.c_[0] += c_[k];
    }
    return r;
}

PowerSeries PowerSeries::derivative() const
{
    PowerSeries r(order());
    for (std::size_t k = 1; k < c_.size(); ++k)
        r.c_[k - 1] = c_[k] * static_cast<unsigned long>(k);
    return r;
}

PowerSeries PowerSeries::integral() const
{
    PowerSeries r(order());
    for (std::size_t k = 0; k + 1 < c_.size(); ++k)
        r.c_[k + 1] = c_[k] / static_cast<unsigned long>(k + 1);
    return r;
}

PowerSeries PowerSeries::log() const
{
    if (c_[0] != 1)
        throw DomainError("series logarithm needs constant term 1");
    return (derivative() * inverse()).integral();
}

PowerSeries PowerSeries::binomial_power(const Rational &a) const
{
    if (c_[0] != 1)
        throw DomainError("binomial power needs constant term 1");
    // k p_k = sum_{j=1..k} ((a+1) j - k) f_j p_{k-j}
    PowerSeries p(order());
    p.c_[0] = 1;
    for (std::size_t k = 1; k < c_.size(); ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (sgn(c_[j]) == 0)
                continue;
            Rational w = (a + 1) * static_cast<unsigned long>(j) - static_cast<unsigned long>(k);
            acc += w * c_[j] * p.c_[k - j];
        }
        p.c_[k] = acc / static_cast<unsigned long>(k);
    }
    return p;
}

std::string PowerSeries::to_string() const
{
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0)
            continue;
        Rational a = abs(c_[k]);
        if (s.empty())
            s += sgn(c_[k]) < 0 ? "-" : "";
        else
            s += sgn(c_[k]) < 0 ? " - " : " + ";
        std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        if (mono.empty())
            s += a.get_str();
        else if (a == 1)
            s += mono;
        else
            s += a.get_str() + "*" + mono;
    }
    if (s.empty())
        s = "0";
    return s + " + O(x^" + std::to_string(c_.size()) + ")";
}

} // namespace mouldlab
