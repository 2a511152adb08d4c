#include "mouldlab/polynomial.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "mouldlab/errors.hpp"

namespace mouldlab {

namespace {

void sort_and_merge(std::vector<Term> &terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.mono > b.mono; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Rational c = terms[i].coef;
        while (j < terms.size() && terms[j].mono == terms[i].mono) {
            c += terms[j].coef;
            ++j;
        }
        if (sgn(c) != 0) {
            if (out != i)
                terms[out].mono = terms[i].mono;
            terms[out].coef = std::move(c);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

// Merge of two sorted term lists, b scaled by `sign` (+1 or -1).
std::vector<Term> merge_add(const std::vector<Term> &a, const std::vector<Term> &b, int sign)
{
    std::vector<Term> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto c = a[i].mono <=> b[j].mono;
        if (c > 0) {
            r.push_back(a[i++]);
        } else if (c < 0) {
            r.push_back(b[j++]);
            if (sign < 0)
                r.back().coef = -r.back().coef;
        } else {
            Rational s = sign > 0 ? Rational(a[i].coef + b[j].coef) : Rational(a[i].coef - b[j].coef);
            if (sgn(s) != 0)
                r.push_back(Term{a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i)
        r.push_back(a[i]);
    for (; j < b.size(); ++j) {
        r.push_back(b[j]);
        if (sign < 0)
            r.back().coef = -r.back().coef;
    }
    return r;
}

constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b)
{
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t r = lo + hi;
    return r >= kPrime ? r - kPrime : r;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

// Coefficient reduced modulo kPrime; nullopt if the denominator vanishes.
std::optional<std::uint64_t> reduce_mod(const Rational &c)
{
    std::uint64_t num = mpz_fdiv_ui(c.get_num_mpz_t(), kPrime);
    if (mpz_cmp_ui(c.get_den_mpz_t(), 1) == 0)
        return num;
    std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), kPrime);
    if (den == 0)
        return std::nullopt;
    return mulmod(num, powmod(den, kPrime - 2));
}

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

Polynomial::Polynomial(const Rational &c)
{
    if (sgn(c) != 0)
        terms_.push_back(Term{Monomial{}, c});
}

Polynomial Polynomial::variable(Var v)
{
    return monomial(Monomial::of(v), Rational(1));
}

Polynomial Polynomial::monomial(const Monomial &m, const Rational &c)
{
    Polynomial p;
    if (sgn(c) != 0)
        p.terms_.push_back(Term{m, c});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms)
{
    sort_and_merge(terms);
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::interval(int lo, int hi)
{
    if (lo < 1 || lo > hi)
        throw InvalidArgument("invalid interval [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
    Polynomial p;
    for (int k = lo; k <= hi; ++k)
        p.terms_.push_back(Term{Monomial::of(Var::u(k)), Rational(1)});
    return p;
}

Rational Polynomial::constant_value() const
{
    if (terms_.empty())
        return 0;
    if (!is_constant())
        throw InvalidArgument("polynomial is not constant: " + to_string());
    return terms_[0].coef;
}

Rational Polynomial::constant_term() const
{
    if (!terms_.empty() && terms_.back().mono.is_one())
        return terms_.back().coef;
    return 0;
}

unsigned Polynomial::degree_in(Var v) const
{
    unsigned d = 0;
    for (const auto &t : terms_)
        d = std::max(d, t.mono.exponent(v));
    return d;
}

std::vector<Var> Polynomial::variables() const
{
    std::array<bool, Var::kSlots> seen{};
    for (const auto &t : terms_)
        t.mono.for_each([&](Var v, unsigned) { seen[v.slot()] = true; });
    std::vector<Var> r;
    for (int s = 0; s < Var::kSlots; ++s)
        if (seen[s])
            r.push_back(Var::from_slot(s));
    return r;
}

int Polynomial::highest_u_index() const
{
    int hi = 0;
    for (const auto &t : terms_)
        t.mono.for_each([&](Var v, unsigned) {
            if (v.is_u())
                hi = std::max(hi, v.u_index());
        });
    return hi;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto &t : r.terms_)
        t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial &o) const
{
    Polynomial r;
    r.terms_ = merge_add(terms_, o.terms_, +1);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial &o) const
{
    Polynomial r;
    r.terms_ = merge_add(terms_, o.terms_, -1);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial &o) const
{
    if (is_zero() || o.is_zero())
        return {};
    const Polynomial &big = size() >= o.size() ? *this : o;
    const Polynomial &small = size() >= o.size() ? o : *this;
    if (small.size() <= 8) {
        // Multiplying by a monomial preserves the order, so each partial
        // product is already sorted and can be merged directly.
        std::vector<Term> acc;
        for (const auto &s : small.terms_) {
            std::vector<Term> part;
            part.reserve(big.size());
            for (const auto &b : big.terms_)
                part.push_back(Term{b.mono * s.mono, b.coef * s.coef});
            acc = acc.empty() ? std::move(part) : merge_add(acc, part, +1);
        }
        Polynomial r;
        r.terms_ = std::move(acc);
        return r;
    }
    std::vector<Term> all;
    all.reserve(size() * o.size());
    for (const auto &a : terms_)
        for (const auto &b : o.terms_)
            all.push_back(Term{a.mono * b.mono, a.coef * b.coef});
    return from_terms(std::move(all));
}

Polynomial Polynomial::scaled(const Rational &c) const
{
    if (sgn(c) == 0)
        return {};
    Polynomial r = *this;
    for (auto &t : r.terms_)
        t.coef *= c;
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial &m) const
{
    Polynomial r = *this;
    for (auto &t : r.terms_)
        t.mono = t.mono * m;
    return r;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result(1);
    Polynomial base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return {};
    Rational inv = 1 / terms_.front().coef;
    return scaled(inv);
}

Monomial Polynomial::monomial_content() const
{
    if (terms_.empty())
        return {};
    Monomial g = terms_.front().mono;
    for (const auto &t : terms_) {
        if (g.is_one())
            break;
        g = Monomial::gcd(g, t.mono);
    }
    return g;
}

Polynomial Polynomial::divided_by_monomial(const Monomial &m) const
{
    Polynomial r = *this;
    for (auto &t : r.terms_) {
        if (!m.divides(t.mono))
            throw InvalidArgument("monomial does not divide polynomial");
        t.mono = t.mono / m;
    }
    return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(Var v) const
{
    std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
    for (const auto &t : terms_)
        buckets[t.mono.exponent(v)].push_back(Term{t.mono.without(v), t.coef});
    std::vector<Polynomial> r;
    r.reserve(buckets.size());
    for (auto &b : buckets)
        r.push_back(from_terms(std::move(b)));
    return r;
}

Polynomial Polynomial::from_coefficients(Var v, const std::vector<Polynomial> &coefs)
{
    std::vector<Term> all;
    for (std::size_t k = 0; k < coefs.size(); ++k) {
        Monomial m = Monomial::of(v, static_cast<unsigned>(k));
        for (const auto &t : coefs[k].terms_) {
            if (t.mono.exponent(v) != 0)
                throw InvalidArgument("coefficient depends on the main variable");
            all.push_back(Term{t.mono * m, t.coef});
        }
    }
    return from_terms(std::move(all));
}

Polynomial Polynomial::derivative(Var v) const
{
    std::vector<Term> r;
    for (const auto &t : terms_) {
        unsigned e = t.mono.exponent(v);
        if (e == 0)
            continue;
        r.push_back(Term{t.mono.with_exponent(v, e - 1), t.coef * e});
    }
    return from_terms(std::move(r));
}

Polynomial Polynomial::substitute(const Substitution &s) const
{
    std::array<const Polynomial *, Var::kSlots> image{};
    bool monomial_images = true;
    for (const auto &[v, p] : s) {
        image[v.slot()] = &p;
        if (p.size() > 1)
            monomial_images = false;
    }

    std::vector<Term> out;
    out.reserve(terms_.size());
    if (monomial_images) {
        for (const auto &t : terms_) {
            Monomial m;
            Rational c = t.coef;
            bool zero = false;
            t.mono.for_each([&](Var v, unsigned e) {
                const Polynomial *img = image[v.slot()];
                if (!img) {
                    m = m * Monomial::of(v, e);
                    return;
                }
                if (img->is_zero()) {
                    zero = true;
                    return;
                }
                const Term &it = img->terms_[0];
                for (unsigned k = 0; k < e; ++k) {
                    m = m * it.mono;
                    c *= it.coef;
                }
            });
            if (!zero)
                out.push_back(Term{m, c});
        }
        return from_terms(std::move(out));
    }

    // Cached powers of each image.
    std::array<std::vector<Polynomial>, Var::kSlots> powers;
    auto power_of = [&](Var v, unsigned e) -> const Polynomial & {
        auto &cache = powers[v.slot()];
        if (cache.empty())
            cache.push_back(Polynomial(1));
        while (cache.size() <= e)
            cache.push_back(cache.back() * *image[v.slot()]);
        return cache[e];
    };

    for (const auto &t : terms_) {
        Polynomial acc = monomial(Monomial{}, t.coef);
        Monomial kept;
        t.mono.for_each([&](Var v, unsigned e) {
            if (!image[v.slot()])
                kept = kept * Monomial::of(v, e);
            else
                acc = acc * power_of(v, e);
        });
        for (auto &pt : acc.terms_)
            out.push_back(Term{pt.mono * kept, std::move(pt.coef)});
    }
    return from_terms(std::move(out));
}

Rational Polynomial::evaluate(const Assignment &a) const
{
    std::array<const Rational *, Var::kSlots> value{};
    for (const auto &[v, r] : a)
        value[v.slot()] = &r;
    Rational sum = 0;
    for (const auto &t : terms_) {
        Rational c = t.coef;
        t.mono.for_each([&](Var v, unsigned e) {
            const Rational *x = value[v.slot()];
            if (!x)
                throw InvalidArgument("no value assigned to " + v.name());
            for (unsigned k = 0; k < e; ++k)
                c *= *x;
        });
        sum += c;
    }
    return sum;
}

Polynomial Polynomial::partial_evaluate(Var v, const Rational &value) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &t : terms_) {
        unsigned e = t.mono.exponent(v);
        Rational c = t.coef;
        for (unsigned k = 0; k < e; ++k)
            c *= value;
        if (sgn(c) != 0)
            out.push_back(Term{t.mono.without(v), c});
    }
    return from_terms(std::move(out));
}

bool Polynomial::operator==(const Polynomial &o) const
{
    if (terms_.size() != o.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef)
            return false;
    return true;
}

std::strong_ordering Polynomial::compare(const Polynomial &o) const
{
    std::size_t n = std::min(terms_.size(), o.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = terms_[i].mono <=> o.terms_[i].mono;
        if (c != 0)
            return c;
        int cc = cmp(terms_[i].coef, o.terms_[i].coef);
        if (cc != 0)
            return cc <=> 0;
    }
    return terms_.size() <=> o.terms_.size();
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto &t : terms_) {
        Rational a = abs(t.coef);
        if (sgn(t.coef) < 0)
            s += '-';
        else if (!first)
            s += '+';
        first = false;
        if (t.mono.is_one()) {
            s += a.get_str();
        } else if (a == 1) {
            s += t.mono.to_string();
        } else {
            s += a.get_str();
            s += '*';
            s += t.mono.to_string();
        }
    }
    return s;
}

std::optional<Polynomial> divide_exact(const Polynomial &p, const Polynomial &o)
{
    if (o.is_zero())
        throw DomainError("division by the zero polynomial");
    if (p.is_zero())
        return Polynomial{};
    if (o.is_constant())
        return p.scaled(1 / o.constant_value());
    if (p.total_degree() < o.total_degree())
        return std::nullopt;

    const Term &lead = o.leading();
    if (o.size() == 1) {
        std::vector<Term> q;
        q.reserve(p.size());
        for (const auto &t : p.terms()) {
            if (!lead.mono.divides(t.mono))
                return std::nullopt;
            q.push_back(Term{t.mono / lead.mono, t.coef / lead.coef});
        }
        return Polynomial::from_terms(std::move(q));
    }

    std::map<Monomial, Rational, std::greater<>> rem;
    for (const auto &t : p.terms())
        rem.emplace(t.mono, t.coef);
    std::vector<Term> quotient;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lead.mono.divides(it->first))
            return std::nullopt;
        Monomial qm = it->first / lead.mono;
        Rational qc = it->second / lead.coef;
        rem.erase(it);
        for (std::size_t k = 1; k < o.size(); ++k) {
            const Term &ot = o.terms()[k];
            Monomial m = ot.mono * qm;
            Rational c = ot.coef * qc;
            auto [pos, inserted] = rem.try_emplace(m, -c);
            if (!inserted) {
                pos->second -= c;
                if (sgn(pos->second) == 0)
                    rem.erase(pos);
            }
        }
        quotient.push_back(Term{qm, qc});
    }
    return Polynomial::from_terms(std::move(quotient));
}

bool may_divide_linear(const Polynomial &p, const Polynomial &linear)
{
    if (p.is_zero())
        return true;
    if (linear.total_degree() != 1)
        throw InvalidArgument("may_divide_linear expects a linear polynomial");

    static const std::uint64_t salt = 0x5eed1234abcdull;
    std::array<std::uint64_t, Var::kSlots> point{};
    for (int s = 0; s < Var::kSlots; ++s)
        point[s] = splitmix(salt + static_cast<std::uint64_t>(s)) % kPrime;

    // Solve linear = 0 for its leading variable.
    const Term &lead = linear.leading();
    int lead_slot = lead.mono.highest_slot();
    std::uint64_t rest = 0;
    for (std::size_t k = 1; k < linear.size(); ++k) {
        const Term &t = linear.terms()[k];
        auto c = reduce_mod(t.coef);
        if (!c)
            return true;
        std::uint64_t v = *c;
        int slot = t.mono.highest_slot();
        if (slot >= 0)
            v = mulmod(v, point[slot]);
        rest = (rest + v) % kPrime;
    }
    auto lc = reduce_mod(lead.coef);
    if (!lc || *lc == 0)
        return true;
    point[lead_slot] = mulmod((kPrime - rest) % kPrime, powmod(*lc, kPrime - 2));

    std::uint64_t sum = 0;
    for (const auto &t : p.terms()) {
        auto c = reduce_mod(t.coef);
        if (!c)
            return true;
        std::uint64_t v = *c;
        t.mono.for_each([&](Var var, unsigned e) {
            for (unsigned k = 0; k < e; ++k)
                v = mulmod(v, point[var.slot()]);
        });
        sum += v;
        if (sum >= kPrime)
            sum -= kPrime;
    }
    return sum == 0;
}

} // namespace mouldlab
