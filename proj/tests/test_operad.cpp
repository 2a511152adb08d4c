#include <doctest.h>

#include <random>

#include "mouldlab/errors.hpp"
#include "mouldlab/gallery.hpp"
#include "mouldlab/operad.hpp"
#include "mouldlab/parse.hpp"
#include "mouldlab/trees.hpp"

using namespace mouldlab;

namespace {

MouldComponent C(int arity, const char *s)
{
    return MouldComponent(arity, parse_expression(s));
}

// Random rational combination of tree images: homogeneous, nice poles, vegetal.
MouldComponent random_psi(int n, std::mt19937_64 &rng)
{
    auto trees = enumerate_binary_trees(n);
    RatFun v;
    for (const auto &t : trees) {
        int c = std::uniform_int_distribution<int>(-2, 2)(rng);
        if (c)
            v += psi_tree(t).value().scaled(c);
    }
    if (v.is_zero())
        v = psi_tree(trees.front()).value();
    return MouldComponent(n, v);
}

// Oracle for compose_at: the displayed formula applied by hand through parsing.
RatFun compose_by_text(int m, const std::string &f, int n, const std::string &g, int i)
{
    auto rename = [](std::string s, auto map) {
        std::string out;
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] == 'u') {
                std::size_t e = k + 1;
                while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e])))
                    ++e;
                out += "(" + map(std::stoi(s.substr(k + 1, e - k - 1))) + ")";
                k = e - 1;
            } else {
                out += s[k];
            }
        }
        return out;
    };
    auto block = [&](int lo, int hi) {
        std::string s;
        for (int k = lo; k <= hi; ++k)
            s += (k > lo ? "+u" : "u") + std::to_string(k);
        return s;
    };
    std::string fs = rename(f, [&](int k) {
        if (k < i)
            return "u" + std::to_string(k);
        if (k == i)
            return block(i, i + n - 1);
        return "u" + std::to_string(k + n - 1);
    });
    std::string gs = rename(g, [&](int k) { return "u" + std::to_string(k + i - 1); });
    (void)m;
    return parse_expression("(" + block(i, i + n - 1) + ")*(" + fs + ")*(" + gs + ")");
}

} // namespace

TEST_CASE("unit and partial compositions")
{
    CHECK(unit().value() == parse_expression("1/u1"));
    CHECK(compose_at(unit(), unit(), 1) == unit());
    CHECK(compose_at(dend_left(), dend_left(), 2) == C(3, "1/(u1*u2*(u1+u2+u3))"));
    CHECK(compose_at(dend_right(), dend_left(), 1) == compose_at(dend_left(), dend_right(), 2));
    CHECK_THROWS_AS(compose_at(dend_left(), unit(), 3), InvalidArgument);
    CHECK_THROWS_AS(compose_at(dend_left(), unit(), 0), InvalidArgument);
    CHECK_THROWS_AS(C(1, "1/u2"), InvalidArgument);
}

TEST_CASE("compose_at matches the composition formula applied to text")
{
    const std::vector<std::pair<int, std::string>> fs = {
        {1, "1/u1"}, {2, "1/(u1*(u1+u2))"}, {2, "(u1-u2)/(u1*u2*(u1+u2))"}, {3, "u2/(u1*u3*(u1+u2+u3))"},
        {3, "1/((u1+u2)*u3)"}};
    for (const auto &[m, f] : fs)
        for (const auto &[n, g] : fs)
            for (int i = 1; i <= m; ++i)
                CHECK(compose_at(C(m, f.c_str()), C(n, g.c_str()), i).value() == compose_by_text(m, f, n, g, i));
}

TEST_CASE("push")
{
    CHECK(push(unit()) == -unit());
    CHECK(push(dend_left()) == dend_right());
    CHECK(push(dend_right()) == C(2, "-1/(u1*u2)"));
    CHECK(push(dend_right()) == -(dend_left() + dend_right()));
    CHECK(push(C(3, "u1*t/(u2*u3)^2")).value() == parse_expression("-(u1+u2+u3)*t/(u1*u2)^2"));
}

TEST_CASE("alternality and vegetality predicates")
{
    CHECK(is_alternal(unit()));
    CHECK(!is_alternal(C(2, "1/(u1*u2)")));
    CHECK(is_alternal(C(2, "(u2-u1)/(u1*u2*(u1+u2))")));
    CHECK(is_vegetal(unit()));
    CHECK(is_vegetal(dend_left()));
    CHECK(!is_vegetal(C(2, "u1/(u2*(u1+u2)^2)")));
    CHECK(!is_vegetal(C(2, "1/(u1*u1)")));
}

TEST_CASE("explicit products and their generator definitions")
{
    CHECK(succ(unit(), unit()) == dend_left());
    CHECK(prec(unit(), unit()) == dend_right());
    CHECK(mu(unit(), unit()) == assoc_product());
    CHECK(prelie_arrow(unit(), unit()) == C(2, "(u2-u1)/(u1*u2*(u1+u2))"));
    CHECK(prelie_circ(unit(), unit()) == unit());
    CHECK(prelie_circ(dend_left(), unit()) == dend_left().scaled(2));
    CHECK(over(unit(), unit()) == dend_left());
    CHECK(under(unit(), unit()) == dend_right());
    CHECK(arit(unit(), unit()) == C(2, "(u2-u1)/(u1*u2*(u1+u2))"));
    std::mt19937_64 rng(17);
    for (int s = 0; s < 12; ++s) {
        MouldComponent f = random_psi(1 + s % 3, rng), g = random_psi(1 + (s / 3) % 3, rng);
        CHECK(succ(f, g) == succ_operadic(f, g));
        CHECK(prec(f, g) == prec_operadic(f, g));
        CHECK(mu(f, g) == mu_operadic(f, g));
        CHECK(over(f, g) == over_operadic(f, g));
        CHECK(under(f, g) == under_operadic(f, g));
        CHECK(succ(f, g) + prec(f, g) == mu(f, g));
        CHECK(limu(f, f).is_zero());
        CHECK(ari(f, f).is_zero());
        CHECK(limu(f, g) == mu(f, g) - mu(g, f));
        // The pre-Lie commutator x<-y - y<-x is LIMU with the arguments swapped.
        CHECK(limu(f, g) == prelie_arrow(g, f) - prelie_arrow(f, g));
    }
}

TEST_CASE("algebraic identities on random triples")
{
    std::mt19937_64 rng(23);
    for (int s = 0; s < 8; ++s) {
        MouldComponent f = random_psi(1 + s % 2, rng), g = random_psi(1 + (s / 2) % 2, rng), h = random_psi(1, rng);
        CHECK(prec(prec(f, g), h) == prec(f, mu(g, h)));
        CHECK(prec(succ(f, g), h) == succ(f, prec(g, h)));
        CHECK(succ(mu(f, g), h) == succ(f, succ(g, h)));
        CHECK(mu(mu(f, g), h) == mu(f, mu(g, h)));
        CHECK(over(over(f, g), h) == over(f, over(g, h)));
        CHECK(under(under(f, g), h) == under(f, under(g, h)));
        auto arrow_assoc = [](const MouldComponent &a, const MouldComponent &b, const MouldComponent &c) {
            return prelie_arrow(prelie_arrow(a, b), c) - prelie_arrow(a, prelie_arrow(b, c));
        };
        CHECK(arrow_assoc(f, g, h) == arrow_assoc(f, h, g));
        auto circ_assoc = [](const MouldComponent &a, const MouldComponent &b, const MouldComponent &c) {
            return prelie_circ(prelie_circ(a, b), c) - prelie_circ(a, prelie_circ(b, c));
        };
        CHECK(circ_assoc(f, g, h) == circ_assoc(f, h, g));
    }
}

TEST_CASE("ARI is a Lie bracket on alternal moulds")
{
    std::vector<MouldComponent> alt = {cm_mould(1), cm_mould(2), cm_mould(3).scaled(2), cm_mould(2).scaled(-3)};
    for (const auto &f : alt)
        for (const auto &g : alt) {
            CHECK(ari(f, g) == -ari(g, f));
            for (const auto &h : alt) {
                if (f.arity() + g.arity() + h.arity() > 5)
                    continue;
                MouldComponent jacobi = ari(ari(f, g), h) + ari(ari(g, h), f) + ari(ari(h, f), g);
                CHECK(jacobi.is_zero());
            }
        }
}

TEST_CASE("weight additivity and pole closure")
{
    std::mt19937_64 rng(29);
    for (int s = 0; s < 10; ++s) {
        int m = 1 + s % 3, n = 1 + (s / 3) % 3;
        MouldComponent f = random_psi(m, rng), g = random_psi(n, rng);
        for (int i = 1; i <= m; ++i) {
            MouldComponent h = compose_at(f, g, i);
            CHECK(h.value().homogeneity_weight() == -(m + n) + 1);
            CHECK(h.value().has_nice_poles(m + n - 1));
            CHECK(h.value().clears_Hn(m + n - 1));
        }
        CHECK(push(f).value().homogeneity_weight() == -m);
        CHECK(push(f).value().has_nice_poles(m));
    }
}

TEST_CASE("derivation")
{
    CHECK(derivation(dend_left()) == unit());
    CHECK(derivation(dend_right()) == unit());
    CHECK(derivation(cm_mould(2)).is_zero());
    CHECK(derivation_constant(unit()) == RatFun(1));
    CHECK(derivation_constant(C(1, "3/u1")) == RatFun(3));
    CHECK_THROWS_AS(derivation(unit()), InvalidArgument);
    // Oracle: residues taken one insertion slot at a time, through parsing.
    MouldComponent f = C(3, "1/((u1+u2+u3)*u1*u3)");
    // Inserting t at slot 1 leaves 1/((u1+u2) u2), slot 2 gives 0, slot 3 leaves 1/((u1+u2) u1).
    CHECK(derivation(f).value() == parse_expression("1/((u1+u2)*u2) + 1/((u1+u2)*u1)"));
    CHECK(derivation(f).value() == parse_expression("1/(u1*u2)"));
    std::mt19937_64 rng(31);
    for (int s = 0; s < 6; ++s) {
        MouldComponent a = random_psi(2 + s % 2, rng), b = random_psi(2, rng);
        CHECK(derivation(succ(a, b)) == succ(derivation(a), b) + succ(a, derivation(b)));
        CHECK(derivation(prelie_circ(a, b)) == prelie_circ(derivation(a), b) + prelie_circ(a, derivation(b)));
    }
}

TEST_CASE("forgetful map")
{
    CHECK(forgetful(truncated_mould(5, as_mould), 5).to_string() == "x + x^2 + x^3 + x^4 + x^5 + O(x^6)");
    CHECK(forgetful(truncated_mould(6, cm_mould), 6) == PowerSeries::x(6));
    Mould bad(2);
    bad.set(C(2, "1/(u1*u2*u2)"));
    CHECK_THROWS_AS(forgetful(bad, 2), DomainError);
    Mould not_nice(2);
    not_nice.set(C(2, "1/(u1*(u1-u2))"));
    CHECK_THROWS_AS(forgetful(not_nice, 2), DomainError);
    CHECK(value_at_ones(po_mould(3)) == parse_expression("(1+t)*(2+t)/6"));
}

TEST_CASE("truncated moulds")
{
    Mould m(3);
    m.set(unit());
    CHECK(m.component(2).is_zero());
    CHECK(m.component(1) == unit());
    CHECK_THROWS_AS(m.set(C(4, "1/(u1*u2*u3*u4)")), InvalidArgument);
}
