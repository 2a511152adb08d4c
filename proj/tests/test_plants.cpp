#include <doctest.h>

#include <random>
#include <set>

#include "mouldlab/errors.hpp"
#include "mouldlab/parse.hpp"
#include "mouldlab/plants.hpp"

using namespace mouldlab;

namespace {

Plant plant_left_example()
{
    return Plant(7, {{0, 7}, {1, 2}, {1, 3}, {3, 7}, {4, 5}, {5, 6}, {5, 7}});
}

Plant plant_right_example()
{
    return Plant(7, {{0, 1}, {0, 6}, {1, 4}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}, {{0, 4}});
}

// Linear form of a chord: the base is u_{1..n}, anything else is u_{a+1..b}.
Rational chord_value(const Diagonal &d, const std::vector<Rational> &u)
{
    Rational s = 0;
    for (int k = d.a + 1; k <= d.b; ++k)
        s += u[k - 1];
    return s;
}

Rational plant_value(const Plant &p, const std::vector<Rational> &u)
{
    Rational r = 1;
    for (const auto &d : p.numerators())
        r *= chord_value(d, u);
    for (const auto &d : p.denominators())
        r /= chord_value(d, u);
    return r;
}

std::vector<Rational> sample(int n, std::mt19937_64 &rng)
{
    std::vector<Rational> u;
    for (int k = 0; k < n; ++k) {
        Rational x(static_cast<long>(rng() % 89 + 1), static_cast<long>(rng() % 7 + 1));
        x.canonicalize();
        u.push_back(x);
    }
    return u;
}

Assignment as_assignment(const std::vector<Rational> &u)
{
    Assignment a;
    for (std::size_t k = 0; k < u.size(); ++k)
        a[Var::u(static_cast<int>(k) + 1)] = u[k];
    return a;
}

// Coefficients of P from x - P + x P^2 + 2 x P + P^2 + P^3 = 0 by fixed-point iteration.
std::vector<Rational> p_from_cubic(unsigned order)
{
    auto mul = [&](const std::vector<Rational> &a, const std::vector<Rational> &b) {
        std::vector<Rational> c(order + 1, Rational(0));
        for (unsigned i = 0; i <= order; ++i)
            for (unsigned j = 0; i + j <= order; ++j)
                c[i + j] += a[i] * b[j];
        return c;
    };
    std::vector<Rational> x(order + 1, Rational(0)), p(order + 1, Rational(0));
    x[1] = 1;
    for (unsigned it = 0; it <= order; ++it) {
        auto p2 = mul(p, p);
        auto p3 = mul(p2, p);
        auto xp2 = mul(x, p2);
        auto xp = mul(x, p);
        std::vector<Rational> next(order + 1, Rational(0));
        for (unsigned k = 0; k <= order; ++k)
            next[k] = x[k] + xp2[k] + 2 * xp[k] + p2[k] + p3[k];
        p = next;
    }
    return p;
}

} // namespace

TEST_CASE("validity and kinds")
{
    CHECK(is_valid_plant(Plant(2, {{0, 1}, {0, 2}})));
    CHECK(plant_kind(Plant(2, {{0, 1}, {1, 2}})) == PlantKind::III);
    CHECK(is_valid_plant(Plant(2, {{0, 1}, {1, 2}})));
    CHECK_FALSE(is_valid_plant(Plant(3, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
    CHECK_FALSE(plant_defect(Plant(3, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})).empty());
    CHECK(is_valid_plant(Plant(3, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {{0, 2}})));
    CHECK_FALSE(is_valid_plant(Plant(2, {{0, 1}, {1, 2}, {0, 2}})));      // triangular face
    CHECK_FALSE(is_valid_plant(Plant(3, {{0, 1}, {0, 3}})));              // misses vertices
    CHECK_FALSE(is_valid_plant(Plant(3, {{0, 1}, {1, 2}, {0, 3}}, {{2, 3}}))); // numerator side
    CHECK_FALSE(is_valid_plant(Plant(3, {{0, 2}, {1, 3}, {0, 1}, {2, 3}}))); // crossing
    CHECK(is_valid_plant(plant_left_example()));
    CHECK(is_valid_plant(plant_right_example()));
    CHECK(plant_kind(plant_left_example()) == PlantKind::II);
    CHECK(plant_kind(plant_right_example()) == PlantKind::III);
    CHECK(plant_kind(Plant(3, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {{0, 2}})) == PlantKind::I);
    CHECK_THROWS_AS(Plant(2, {{1, 3}}), InvalidArgument);
}

TEST_CASE("crossing predicate")
{
    CHECK(crosses({0, 2}, {1, 3}));
    CHECK_FALSE(crosses({0, 2}, {2, 3}));
    CHECK_FALSE(crosses({0, 3}, {1, 2}));
    CHECK_FALSE(crosses({0, 1}, {0, 1}));
}

TEST_CASE("counts and series")
{
    const std::vector<std::size_t> all = {1, 3, 14, 80}, based = {1, 2, 9, 51};
    for (int n = 1; n <= 4; ++n) {
        auto ps = enumerate_plants(n);
        auto bs = enumerate_plants(n, true);
        CHECK(ps.size() == all[n - 1]);
        CHECK(bs.size() == based[n - 1]);
        CHECK(ps == enumerate_plants_brute_force(n));
        CHECK(bs == enumerate_plants_brute_force(n, true));
        for (const auto &p : ps) {
            CHECK(is_valid_plant(p));
            CHECK(Plant::parse_json(p.to_json()) == p);
        }
    }
    auto series = plant_counts_series(10);
    auto oracle_p = p_from_cubic(10);
    for (unsigned k = 0; k <= 10; ++k)
        CHECK(series.all[k] == oracle_p[k]);
    for (unsigned k = 1; k <= 4; ++k) {
        CHECK(series.all[k] == static_cast<long>(all[k - 1]));
        CHECK(series.based[k] == static_cast<long>(based[k - 1]));
    }
    CHECK(enumerate_plants(5).size() == series.all[5]);
    CHECK(enumerate_plants(5, true).size() == series.based[5]);
    PowerSeries one = PowerSeries::constant(10, 1), q = series.based;
    CHECK(series.all == q * (one - q).inverse());
}

TEST_CASE("psi on plants")
{
    CHECK(psi_plant(plant_left_example()).value() ==
          parse_expression("1/((u1+u2+u3+u4+u5+u6+u7)*u2*(u2+u3)*(u4+u5+u6+u7)*u5*u6*(u6+u7))"));
    CHECK(psi_plant(plant_right_example()).value() ==
          parse_expression("(u1+u2+u3+u4)/((u1+u2+u3+u4+u5+u6)*u1*(u2+u3+u4)*(u3+u4)*u4*u5*u6*u7)"));
    CHECK(psi_plant(left_plant()) == dend_left());
    CHECK(psi_plant(right_plant()) == dend_right());
    CHECK(psi_plant(assoc_plant()) == assoc_product());
    CHECK(psi_plant(unit_plant()) == unit());
    std::mt19937_64 rng(53);
    std::set<std::string> images;
    for (int n = 1; n <= 4; ++n)
        for (const auto &p : enumerate_plants(n)) {
            auto u = sample(n, rng);
            CHECK(psi_plant(p).value().evaluate(as_assignment(u)) == plant_value(p, u));
            images.insert(psi_plant(p).to_string());
        }
    CHECK(images.size() == 1 + 3 + 14 + 80);
}

TEST_CASE("grafting agrees with partial composition")
{
    CHECK(psi_plant(graft(left_plant(), left_plant(), 2)).value() == parse_expression("1/(u1*u2*(u1+u2+u3))"));
    CHECK(graft(left_plant(), right_plant(), 2) == graft(right_plant(), left_plant(), 1));
    CHECK(graft(assoc_plant(), assoc_plant(), 1) == graft(assoc_plant(), assoc_plant(), 2));
    CHECK(graft(left_plant(), assoc_plant(), 1) == graft(left_plant(), left_plant(), 2));
    CHECK(graft(right_plant(), assoc_plant(), 2) == graft(right_plant(), right_plant(), 1));
    // Neither plant has the shared chord (side 2 of the left plant, base of
    // the other): it comes back as a numerator.
    Plant g = graft(left_plant(), assoc_plant(), 2);
    CHECK(g.numerators().size() == 1);
    CHECK(psi_plant(g).value() == parse_expression("(u2+u3)/(u1*u2*u3*(u1+u2+u3))"));
    CHECK(graft(assoc_plant(), assoc_plant(), 1).numerators().empty());
    CHECK_THROWS_AS(graft(left_plant(), left_plant(), 3), InvalidArgument);
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; m + n - 1 <= 4; ++n)
            for (const auto &f : enumerate_plants(m))
                for (const auto &h : enumerate_plants(n))
                    for (int i = 1; i <= m; ++i) {
                        Plant r = graft(f, h, i);
                        CHECK(is_valid_plant(r));
                        CHECK(psi_plant(r) == compose_at(psi_plant(f), psi_plant(h), i));
                        if (f.is_based() && h.is_based() && f.is_tree() && h.is_tree())
                            CHECK((r.is_based() && r.is_tree()));
                    }
}

TEST_CASE("peeling points and border leaves")
{
    CHECK(peeling_points(plant_right_example()) == std::vector<int>{3, 5});
    CHECK(border_leaves(plant_left_example()) == std::vector<int>{2, 4, 6});
    CHECK_THROWS_AS(peeling_points(unit_plant()), InvalidArgument);
    for (int n = 2; n <= 5; ++n)
        for (const auto &p : enumerate_plants(n)) {
            CHECK_FALSE(peeling_points(p).empty());
            if (p.is_based() && p.is_tree())
                CHECK_FALSE(border_leaves(p).empty());
        }
}

TEST_CASE("decomposition")
{
    // 1/(u1 u2 u123) has peeling points 1 and 2; the leftmost one peels the
    // product generator, the border leaf peels a left generator.
    Plant p = graft(left_plant(), left_plant(), 2);
    CHECK(peeling_points(p) == std::vector<int>{1, 2});
    Decomposition d = decompose(p);
    CHECK(d.rest == left_plant());
    CHECK(d.delta == Generator::Assoc);
    CHECK(d.index == 1);
    Decomposition b = decompose_at(p, 2);
    CHECK(b.rest == left_plant());
    CHECK(b.delta == Generator::Left);
    CHECK(b.index == 2);
    CHECK_THROWS_AS(decompose_at(p, 3), InvalidArgument);
    Decomposition t = decompose(right_plant());
    CHECK(t.rest == unit_plant());
    CHECK(t.delta == Generator::Right);
    CHECK(t.index == 1);
    for (int n = 2; n <= 5; ++n)
        for (const auto &p : enumerate_plants(n))
            for (int v : peeling_points(p)) {
                Decomposition e = decompose_at(p, v);
                CHECK(graft(e.rest, generator_plant(e.delta), e.index) == p);
                if (p.is_based() && p.is_tree() && v == border_leaves(p).front())
                    CHECK(e.delta != Generator::Assoc);
            }
}

TEST_CASE("push acts by rotation")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto &p : enumerate_plants(n)) {
            RotatedPlant r = rotate_plant(p);
            CHECK(is_valid_plant(r.plant));
            CHECK(push(psi_plant(p)) == psi_plant(r.plant).scaled(r.sign));
        }
}

TEST_CASE("expansions of trees and the interval conjecture")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto &e : tamari_interval_conjecture_check(n)) {
            CHECK(e.multiplicity_free);
            CHECK(e.is_interval);
            CHECK(e.tree.is_tree());
        }
    auto entries = tamari_interval_conjecture_check(2);
    bool found = false;
    for (const auto &e : entries)
        if (e.tree == assoc_plant()) {
            found = true;
            CHECK(e.expansion.terms.size() == 2);
        }
    CHECK(found);
    for (int n = 1; n <= 6; ++n)
        CHECK(hille_identity_check(n));
}
