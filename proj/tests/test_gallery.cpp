#include <doctest.h>

#include "mouldlab/gallery.hpp"
#include "mouldlab/parse.hpp"
#include "mouldlab/trees.hpp"
#include "oracles.hpp"

using namespace mouldlab;

namespace {

MouldComponent C(int arity, const char *s)
{
    return MouldComponent(arity, parse_expression(s));
}

// Trees whose root sits at gap p, summed directly.
MouldComponent root_gap_sum(int p, int q)
{
    MouldComponent s(p + q, RatFun());
    for (const auto &t : enumerate_binary_trees(p + q))
        if (t.left().degree() == p - 1)
            s = s + psi_tree(t);
    return s;
}

} // namespace

TEST_CASE("associative mould")
{
    CHECK(as_mould(1) == unit());
    CHECK(as_mould(2) == dend_left() + dend_right());
    for (int n = 1; n <= 6; ++n) {
        MouldComponent s(n, RatFun());
        for (const auto &t : enumerate_binary_trees(n))
            s = s + psi_tree(t);
        CHECK(as_mould(n) == s);
    }
    PowerSeries f = forgetful(truncated_mould(5, as_mould), 5);
    for (unsigned k = 1; k <= 5; ++k)
        CHECK(f[k] == 1);
    CHECK(f[0] == 0);
}

TEST_CASE("sums over trees with a fixed root gap")
{
    CHECK(pq_sum(1, 1) == dend_right());
    CHECK(pq_sum(1, 1) == C(2, "u1/(u1*u2*(u1+u2))"));
    for (int n = 1; n <= 5; ++n) {
        MouldComponent total(n, RatFun());
        for (int p = 1; p <= n; ++p) {
            CHECK(pq_sum(p, n - p) == root_gap_sum(p, n - p));
            CHECK(pq_tree_sum(p, n - p) == pq_sum(p, n - p));
            total = total + pq_sum(p, n - p);
        }
        CHECK(total == as_mould(n));
    }
    CHECK_THROWS(pq_sum(0, 2));
    CHECK_THROWS(pq_sum(2, -1));
}

TEST_CASE("Tamari-weighted family TY")
{
    for (int n = 1; n <= 5; ++n)
        CHECK(ty_mould(n, Rational(1)) == as_mould(n));
    CHECK(ty_mould(2).value() == parse_expression("(u1+t*u2)/(u1*u2*(u1+u2))"));
    for (int n = 1; n <= 4; ++n) {
        CHECK(try_expand_in_tree_basis(ty_mould(n, Rational(2))).has_value());
        CHECK(try_expand_in_tree_basis(ty_mould(n, Rational(-1, 3))).has_value());
    }
    const Rational t = 2;
    PowerSeries f = forgetful(truncated_mould(6, [&](int n) { return ty_mould(n, t); }), 6);
    for (unsigned n = 1; n <= 6; ++n) {
        Rational tn = 1;
        for (unsigned k = 0; k < n; ++k)
            tn *= t;
        CHECK(f[n] == (1 - tn) / ((1 - t) * n));
    }
    CHECK(f[2] == Rational(3, 2));
    CHECK(f[3] == Rational(7, 3));
}

TEST_CASE("weighted mould")
{
    CHECK(weighted_mould(1) == unit());
    PowerSeries f = forgetful(truncated_mould(7, weighted_mould), 7);
    for (unsigned n = 1; n <= 7; ++n)
        CHECK(f[n] == Rational(n + 1) / 2);
    for (int n = 1; n <= 4; ++n)
        CHECK(try_expand_in_tree_basis(weighted_mould(n)).has_value());
}

TEST_CASE("pre-Lie mould CM")
{
    CHECK(cm_mould(1) == unit());
    CHECK(cm_mould(2) == C(2, "(u2-u1)/(u1*u2*(u1+u2))"));
    CHECK(cm_mould(3) == C(3, "(u1-2*u2+u3)/(u1*u2*u3*(u1+u2+u3))"));
    for (int n = 2; n <= 7; ++n)
        CHECK(cm_mould(n) == prelie_arrow(cm_mould(n - 1), unit()));
    // Closed form with alternating binomial coefficients C(n-1, k-1).
    for (int n = 1; n <= 8; ++n) {
        std::string num, den;
        for (int k = 1; k <= n; ++k) {
            mpz_class c = oracle::binomial(n - 1, k - 1);
            if ((n + k) % 2)
                c = -c;
            num += "+(" + c.get_str() + ")*u" + std::to_string(k);
            den += "u" + std::to_string(k) + "*";
        }
        std::string all;
        for (int k = 1; k <= n; ++k)
            all += (k > 1 ? "+u" : "u") + std::to_string(k);
        MouldComponent expected(n, parse_expression("(" + num + ")/(" + den + "(" + all + "))"));
        CHECK(cm_mould(n) == expected);
        CHECK(cm_closed_form(n) == expected);
    }
    CHECK_FALSE(cm_closed_form(2, true) == cm_mould(2));
    for (int n = 1; n <= 6; ++n)
        CHECK(is_alternal(cm_mould(n)));
    PowerSeries f = forgetful(truncated_mould(6, cm_mould), 6);
    CHECK(f == PowerSeries::x(6));
}

TEST_CASE("PO family")
{
    CHECK(po_mould(1) == unit());
    CHECK(po_mould(2).value() == parse_expression("(u1+t*u2)/(u1*u2*(u1+u2))"));
    for (int n = 1; n <= 6; ++n)
        CHECK(po_mould(n) == po_recursion(n));
    const Rational t = 3;
    PowerSeries f = forgetful(truncated_mould(7, [&](int n) { return po_mould(n, t); }), 7);
    Rational rising = 1;
    for (unsigned n = 1; n <= 7; ++n) {
        if (n > 1)
            rising *= (t + (n - 1)) / Rational(n);
        CHECK(f[n] == rising);
    }
    CHECK(f[3] == Rational(10, 3));
    for (int n = 1; n <= 4; ++n)
        CHECK(try_expand_in_tree_basis(po_mould(n, Rational(5, 2))).has_value());
}

TEST_CASE("structural predicates of the gallery")
{
    for (int n = 1; n <= 5; ++n) {
        std::vector<MouldComponent> ms = {as_mould(n), ty_mould(n), weighted_mould(n), cm_mould(n), po_mould(n)};
        for (int p = 1; p <= n; ++p)
            ms.push_back(pq_sum(p, n - p));
        for (const auto &m : ms) {
            CHECK(m.value().homogeneity_weight() == -n);
            CHECK(m.value().has_nice_poles(n));
        }
        CHECK(is_vegetal(as_mould(n)));
        CHECK(is_vegetal(ty_mould(n, Rational(1))));
    }
}
