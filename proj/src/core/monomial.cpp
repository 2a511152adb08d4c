#include "mouldlab/monomial.hpp"

#include "mouldlab/errors.hpp"

namespace mouldlab {

Var Var::u(int index)
{
    if (index < 1 || index > kMaxU)
        throw InvalidArgument("variable index out of range: u" + std::to_string(index));
    return Var(index - 1);
}

void Var::throw_bad_slot(int slot)
{
    throw InvalidArgument("invalid variable slot " + std::to_string(slot));
}

std::string Var::name() const
{
    if (is_u())
        return "u" + std::to_string(u_index());
    if (*this == t())
        return "t";
    if (*this == x())
        return "x";
    return "_w";
}

Monomial Monomial::of(Var v, unsigned exponent)
{
    if (exponent > 255)
        throw DomainError("exponent overflow");
    Monomial m;
    m.e_[v.slot()] = static_cast<std::uint8_t>(exponent);
    m.degree_ = static_cast<std::uint16_t>(exponent);
    return m;
}

unsigned Monomial::u_degree() const
{
    unsigned d = degree_;
    for (int s = Var::kMaxU; s < Var::kSlots; ++s)
        d -= e_[s];
    return d;
}

int Monomial::highest_slot() const
{
    if (degree_ == 0)
        return -1;
    for (int s = 0; s < Var::kSlots; ++s)
        if (e_[s] != 0)
            return s;
    return -1;
}

Monomial Monomial::operator*(const Monomial &o) const
{
    Monomial r;
    unsigned overflow = 0;
    for (int s = 0; s < Var::kSlots; ++s) {
        unsigned v = unsigned(e_[s]) + unsigned(o.e_[s]);
        overflow |= v;
        r.e_[s] = static_cast<std::uint8_t>(v);
    }
    if (overflow > 255)
        throw DomainError("exponent overflow");
    r.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
    return r;
}

bool Monomial::divides(const Monomial &o) const
{
    if (degree_ > o.degree_)
        return false;
    bool ok = true;
    for (int s = 0; s < Var::kSlots; ++s)
        ok &= e_[s] <= o.e_[s];
    return ok;
}

Monomial Monomial::operator/(const Monomial &o) const
{
    Monomial r;
    for (int s = 0; s < Var::kSlots; ++s)
        r.e_[s] = static_cast<std::uint8_t>(e_[s] - o.e_[s]);
    r.degree_ = static_cast<std::uint16_t>(degree_ - o.degree_);
    return r;
}

Monomial Monomial::gcd(const Monomial &a, const Monomial &b)
{
    Monomial r;
    unsigned d = 0;
    for (int s = 0; s < Var::kSlots; ++s) {
        r.e_[s] = std::min(a.e_[s], b.e_[s]);
        d += r.e_[s];
    }
    r.degree_ = static_cast<std::uint16_t>(d);
    return r;
}

Monomial Monomial::without(Var v) const
{
    Monomial r = *this;
    r.degree_ = static_cast<std::uint16_t>(r.degree_ - r.e_[v.slot()]);
    r.e_[v.slot()] = 0;
    return r;
}

Monomial Monomial::with_exponent(Var v, unsigned exponent) const
{
    if (exponent > 255)
        throw DomainError("exponent overflow");
    Monomial r = without(v);
    r.e_[v.slot()] = static_cast<std::uint8_t>(exponent);
    r.degree_ = static_cast<std::uint16_t>(r.degree_ + exponent);
    return r;
}

std::size_t Monomial::hash() const
{
    // FNV-1a over the exponent bytes.
    std::uint64_t h = 1469598103934665603ull;
    for (auto b : e_) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::string Monomial::to_string() const
{
    std::string s;
    for_each([&](Var v, unsigned e) {
        if (!s.empty())
            s += '*';
        s += v.name();
        if (e != 1)
            s += '^' + std::to_string(e);
    });
    return s.empty() ? "1" : s;
}

} // namespace mouldlab
