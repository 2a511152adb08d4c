#include "mouldlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mouldlab/errors.hpp"
#include "mouldlab/gallery.hpp"
#include "mouldlab/linalg.hpp"
#include "mouldlab/parse.hpp"
#include "mouldlab/plants.hpp"
#include "mouldlab/trees.hpp"

namespace mouldlab {

namespace {

using Rng = std::mt19937_64;
using Op = std::function<MouldComponent(const MouldComponent &, const MouldComponent &)>;

int cap(const VerifyOptions &opts, int fallback)
{
    return opts.max_degree ? *opts.max_degree : fallback;
}

int uniform(Rng &rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

class Recorder {
public:
    explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

    // Runs body; an exception counts as a failure and its message becomes the detail.
    void check(const std::string &name, const std::function<bool(std::string &)> &body)
    {
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception &e) {
            detail = std::string("exception: ") + e.what();
        }
        report_.checks.push_back({name, ok, detail});
    }

    SuiteReport finish(double seconds)
    {
        report_.seconds = seconds;
        return std::move(report_);
    }

private:
    SuiteReport report_;
};

// Counts failures of a family of identities and summarizes them.
struct Tally {
    int total = 0, failed = 0;
    std::string first_failure;

    void add(bool ok, const std::string &what)
    {
        ++total;
        if (!ok && failed++ == 0)
            first_failure = what;
    }
    bool ok(std::string &detail) const
    {
        detail = std::to_string(total) + " cases";
        if (failed)
            detail += ", " + std::to_string(failed) + " failed; first: " + first_failure;
        return failed == 0 && total > 0;
    }
};

class TreeCache {
public:
    const std::vector<BinaryTree> &trees(int n)
    {
        auto it = trees_.find(n);
        if (it == trees_.end())
            it = trees_.emplace(n, enumerate_binary_trees(n)).first;
        return it->second;
    }
    const RatFun &psi(const BinaryTree &t)
    {
        auto it = psi_.find(t);
        if (it == psi_.end())
            it = psi_.emplace(t, psi_tree(t).value()).first;
        return it->second;
    }

private:
    std::map<int, std::vector<BinaryTree>> trees_;
    std::map<BinaryTree, RatFun> psi_;
};

// A random combination of one to three psi(T) with small non-zero coefficients.
MouldComponent random_psi(int n, Rng &rng, TreeCache &cache)
{
    const auto &ts = cache.trees(n);
    int k = std::min<int>(uniform(rng, 1, 3), static_cast<int>(ts.size()));
    std::set<int> picked;
    while (static_cast<int>(picked.size()) < k)
        picked.insert(uniform(rng, 0, static_cast<int>(ts.size()) - 1));
    std::vector<RatFun> terms;
    for (int idx : picked) {
        int c = 0;
        while (c == 0)
            c = uniform(rng, -3, 3);
        terms.push_back(cache.psi(ts[idx]).scaled(c));
    }
    return MouldComponent(n, sum(std::move(terms)));
}

// Values of psi(T) for each tree at random positive integer points.
Matrix psi_evaluation_matrix(const std::vector<BinaryTree> &trees, int n, Rng &rng, TreeCache &cache)
{
    Matrix m;
    for (std::size_t row = 0; row < trees.size(); ++row) {
        Assignment point;
        for (int k = 1; k <= n; ++k)
            point[Var::u(k)] = uniform(rng, 1, 40);
        std::vector<Rational> r;
        for (const auto &t : trees)
            r.push_back(cache.psi(t).evaluate(point));
        m.push_back(std::move(r));
    }
    return m;
}

// --- operad -------------------------------------------------------------

SuiteReport suite_operad(const VerifyOptions &opts)
{
    Recorder rec("operad");
    Rng rng(opts.seed);
    TreeCache cache;
    int top = std::max(1, std::min(cap(opts, 3), 4));
    Tally sequential, nested, units, products;
    const std::vector<std::pair<std::string, std::pair<Op, Op>>> pairs = {
        {"succ", {succ, succ_operadic}},   {"prec", {prec, prec_operadic}},
        {"mu", {mu, mu_operadic}},         {"over", {over, over_operadic}},
        {"under", {under, under_operadic}},
    };
    for (int s = 0; s < 60; ++s) {
        int m = uniform(rng, 1, top), n = uniform(rng, 1, top), p = uniform(rng, 1, top);
        MouldComponent f = random_psi(m, rng, cache), g = random_psi(n, rng, cache), h = random_psi(p, rng, cache);
        std::string tag = "sample " + std::to_string(s);
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                sequential.add(compose_at(compose_at(f, g, i), h, j + n - 1) ==
                                   compose_at(compose_at(f, h, j), g, i),
                               tag);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j)
                nested.add(compose_at(f, compose_at(g, h, j), i) == compose_at(compose_at(f, g, i), h, i + j - 1),
                           tag);
        units.add(compose_at(unit(), f, 1) == f, tag);
        for (int i = 1; i <= m; ++i)
            units.add(compose_at(f, unit(), i) == f, tag);
        for (const auto &[name, ops] : pairs)
            products.add(ops.first(f, g) == ops.second(f, g), tag + " " + name);
    }
    rec.check("sequential associativity", [&](std::string &d) { return sequential.ok(d); });
    rec.check("nested associativity", [&](std::string &d) { return nested.ok(d); });
    rec.check("unit laws", [&](std::string &d) { return units.ok(d); });
    rec.check("products match their operadic definitions", [&](std::string &d) { return products.ok(d); });
    return rec.finish(0);
}

SuiteReport suite_anticyclic(const VerifyOptions &opts)
{
    Recorder rec("anticyclic");
    Rng rng(opts.seed + 1);
    TreeCache cache;
    int top = std::max(1, std::min(cap(opts, 3), 4));
    rec.check("tau(1) = -1", [&](std::string &) { return push(unit()) == -unit(); });
    Tally shift_rule, first_slot;
    for (int s = 0; s < 60; ++s) {
        int m = uniform(rng, 1, top), n = uniform(rng, 1, top);
        MouldComponent f = random_psi(m, rng, cache), g = random_psi(n, rng, cache);
        std::string tag = "sample " + std::to_string(s);
        for (int i = 2; i <= m; ++i)
            shift_rule.add(push(compose_at(f, g, i)) == compose_at(push(f), g, i - 1), tag);
        first_slot.add(push(compose_at(f, g, 1)) == -compose_at(push(g), push(f), n), tag);
    }
    rec.check("tau(f o_i g) = tau(f) o_{i-1} g", [&](std::string &d) { return shift_rule.ok(d); });
    rec.check("tau(f o_1 g) = -tau(g) o_n tau(f)", [&](std::string &d) { return first_slot.ok(d); });
    Tally order;
    int tau_top = cap(opts, 5);
    for (int n = 1; n <= tau_top; ++n) {
        std::vector<MouldComponent> inputs;
        for (const auto &t : cache.trees(n))
            inputs.push_back(MouldComponent(n, cache.psi(t)));
        for (int s = 0; s < 10; ++s)
            inputs.push_back(random_psi(n, rng, cache));
        for (const auto &f : inputs) {
            MouldComponent g = f;
            for (int k = 0; k <= n; ++k)
                g = push(g);
            order.add(g == f, "degree " + std::to_string(n) + ": " + f.to_string());
        }
    }
    rec.check("tau^{n+1} = id", [&](std::string &d) { return order.ok(d); });
    return rec.finish(0);
}

// --- dendriform trees ---------------------------------------------------

const char *kFigureTree = "((L,((L,L),L)),((L,L),(L,L)))";

SuiteReport suite_dend(const VerifyOptions &opts)
{
    Recorder rec("dend");
    Rng rng(opts.seed + 2);
    TreeCache cache;
    MouldComponent l = dend_left(), r = dend_right();
    rec.check("left o_1 (left + right) = left o_2 left",
              [&](std::string &) { return compose_at(l, l + r, 1) == compose_at(l, l, 2); });
    rec.check("right o_1 left = left o_2 right",
              [&](std::string &) { return compose_at(r, l, 1) == compose_at(l, r, 2); });
    rec.check("right o_1 right = right o_2 (left + right)",
              [&](std::string &) { return compose_at(r, r, 1) == compose_at(r, l + r, 2); });
    rec.check("tau(left) = right", [&](std::string &) { return push(l) == r; });
    rec.check("tau(right) = -(left + right)", [&](std::string &) { return push(r) == -(l + r); });
    rec.check("psi of the degree-7 example tree", [&](std::string &d) {
        RatFun v = psi_tree(BinaryTree::parse(kFigureTree)).value();
        RatFun expected = parse_expression("1/((u1+u2+u3)*u2*(u2+u3)*(u1+u2+u3+u4+u5+u6+u7)*u5*(u5+u6+u7)*u7)");
        d = v.to_string();
        return v == expected && v.numerator() == Polynomial(1) && v.denominator_factors().size() == 7;
    });
    int top = cap(opts, 6);
    for (int n = 1; n <= top; ++n) {
        rec.check("psi(T) linearly independent, degree " + std::to_string(n), [&](std::string &d) {
            const auto &ts = cache.trees(n);
            int rank = 0;
            for (int attempt = 0; attempt < 3 && rank < static_cast<int>(ts.size()); ++attempt)
                rank = rank_exact(psi_evaluation_matrix(ts, n, rng, cache));
            d = "rank " + std::to_string(rank) + " of " + std::to_string(ts.size());
            return rank == static_cast<int>(ts.size());
        });
    }
    for (int n = 1; n <= top; ++n) {
        rec.check("sum of psi(T) = 1/(u1...un), degree " + std::to_string(n), [&](std::string &) {
            std::vector<RatFun> terms;
            for (const auto &t : cache.trees(n))
                terms.push_back(cache.psi(t));
            return MouldComponent(n, sum(std::move(terms))) == as_mould(n);
        });
    }
    return rec.finish(0);
}

SuiteReport suite_residue(const VerifyOptions &opts)
{
    Recorder rec("residue");
    TreeCache cache;
    int top = std::min(cap(opts, 4), 6);
    for (int n = 1; n <= top; ++n) {
        rec.check("multi-residue non-zero iff pi(sigma) = T, degree " + std::to_string(n), [&](std::string &d) {
            Tally t;
            Permutation sigma(n);
            for (int k = 0; k < n; ++k)
                sigma[k] = k + 1;
            do {
                BinaryTree target = pi(sigma);
                for (const auto &tree : cache.trees(n)) {
                    bool nonzero = !multi_residue(MouldComponent(n, cache.psi(tree)), sigma).is_zero();
                    t.add(nonzero == (target == tree), tree.to_string());
                }
            } while (std::next_permutation(sigma.begin(), sigma.end()));
            return t.ok(d);
        });
    }
    rec.check("pi(4163527) = pi(4651372) = example tree", [&](std::string &d) {
        BinaryTree a = pi({4, 1, 6, 3, 5, 2, 7}), b = pi({4, 6, 5, 1, 3, 7, 2});
        d = a.to_string();
        return a == b && a == BinaryTree::parse(kFigureTree);
    });
    return rec.finish(0);
}

SuiteReport suite_tamari(const VerifyOptions &opts)
{
    Recorder rec("tamari");
    int top = std::min(cap(opts, 4), 5);
    for (int n = 1; n <= top; ++n) {
        rec.check("non-crossing tree expansions are 0/1 on a Tamari interval, degree " + std::to_string(n),
                  [&](std::string &d) {
                      auto entries = tamari_interval_conjecture_check(n);
                      int good = 0;
                      for (const auto &e : entries)
                          good += e.multiplicity_free && e.is_interval;
                      d = std::to_string(good) + " of " + std::to_string(entries.size()) + " trees";
                      return good == static_cast<int>(entries.size()) && !entries.empty();
                  });
    }
    return rec.finish(0);
}

// --- tridendriform ------------------------------------------------------

// psi of a planar tree rebuilt by partial compositions with the generators,
// peeling one top vertex at a time.
RatFun planar_by_composition(const PlanarTree &t);

struct Peeled {
    PlanarTree reduced;
    int first_leaf;
    int children;
    bool last_child;
};

std::optional<Peeled> peel(const PlanarTree &t, int offset, bool last_child)
{
    const auto &cs = t.children();
    if (t.is_leaf())
        return std::nullopt;
    if (std::all_of(cs.begin(), cs.end(), [](const PlanarTree &c) { return c.is_leaf(); })) {
        int k = static_cast<int>(cs.size());
        PlanarTree reduced = k >= 3 ? PlanarTree::corolla(k - 1) : PlanarTree();
        return Peeled{reduced, offset, k, last_child};
    }
    std::vector<PlanarTree> rebuilt = cs;
    int leaf = offset;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].is_leaf()) {
            auto inner = peel(cs[i], leaf, i + 1 == cs.size());
            rebuilt[i] = inner->reduced;
            inner->reduced = PlanarTree::node(rebuilt);
            return inner;
        }
        leaf += cs[i].leaves();
    }
    return std::nullopt;
}

RatFun planar_by_composition(const PlanarTree &t)
{
    if (t.degree() == 1)
        return unit().value();
    auto p = peel(t, 1, true);
    MouldComponent reduced(t.degree() - 1, planar_by_composition(p->reduced));
    if (p->children >= 3)
        return compose_at(reduced, tridend_bottom(), p->first_leaf).value();
    if (!p->last_child)
        return compose_at(reduced, dend_left(), p->first_leaf).value();
    return compose_at(reduced, dend_right(), p->first_leaf - 1).value();
}

SuiteReport suite_tridend(const VerifyOptions &opts)
{
    Recorder rec("tridend");
    MouldComponent l = dend_left(), r = dend_right(), b = tridend_bottom();
    rec.check("dendriform relations", [&](std::string &) {
        return compose_at(l, l + r, 1) == compose_at(l, l, 2) && compose_at(r, l, 1) == compose_at(l, r, 2) &&
               compose_at(r, r, 1) == compose_at(r, l + r, 2);
    });
    rec.check("bottom o_1 bottom = bottom o_2 bottom",
              [&](std::string &) { return compose_at(b, b, 1) == compose_at(b, b, 2); });
    rec.check("bottom o_1 right = bottom o_2 left",
              [&](std::string &) { return compose_at(b, r, 1) == compose_at(b, l, 2); });
    rec.check("bottom o_1 left = left o_2 bottom",
              [&](std::string &) { return compose_at(b, l, 1) == compose_at(l, b, 2); });
    rec.check("right o_1 bottom = bottom o_2 right",
              [&](std::string &) { return compose_at(r, b, 1) == compose_at(b, r, 2); });
    int top = cap(opts, 4);
    for (int n = 1; n <= top; ++n) {
        rec.check("planar psi matches generator composition, degree " + std::to_string(n), [&](std::string &d) {
            Tally t;
            for (const auto &tree : enumerate_planar_trees(n))
                t.add(psi_planar_tree(tree).value() == planar_by_composition(tree), tree.to_string());
            return t.ok(d);
        });
    }
    rec.check("push leaves the planar-tree span in degree 2", [&](std::string &d) {
        MouldComponent witness = push(b);
        std::vector<RatFun> span;
        for (const auto &tree : enumerate_planar_trees(2))
            span.push_back(psi_planar_tree(tree).value());
        Rng rng(opts.seed + 3);
        Matrix with, without;
        for (int row = 0; row < 6; ++row) {
            Assignment point{{Var::u(1), uniform(rng, 1, 40)}, {Var::u(2), uniform(rng, 1, 40)}};
            std::vector<Rational> vals;
            for (const auto &f : span)
                vals.push_back(f.evaluate(point));
            without.push_back(vals);
            vals.push_back(witness.value().evaluate(point));
            with.push_back(vals);
        }
        int r0 = rank_exact(without), r1 = rank_exact(with);
        d = "tau(bottom) = " + witness.to_string() + ", rank " + std::to_string(r0) + " -> " + std::to_string(r1);
        return r1 == r0 + 1;
    });
    return rec.finish(0);
}

// --- non-crossing plants ------------------------------------------------

SuiteReport suite_ncp_counts(const VerifyOptions &opts)
{
    Recorder rec("ncp-counts");
    PlantSeries s = plant_counts_series(10);
    rec.check("series coefficients 1, 3, 14, 80 and 1, 2, 9, 51", [&](std::string &d) {
        d = s.all.to_string();
        return s.all[1] == 1 && s.all[2] == 3 && s.all[3] == 14 && s.all[4] == 80 && s.based[1] == 1 &&
               s.based[2] == 2 && s.based[3] == 9 && s.based[4] == 51;
    });
    int top = std::max(2, cap(opts, 5));
    for (int n = 1; n <= std::min(top, 7); ++n) {
        rec.check("enumeration matches the series, degree " + std::to_string(n), [&](std::string &d) {
            auto all = enumerate_plants(n), based = enumerate_plants(n, true);
            d = "plants=" + std::to_string(all.size()) + " based=" + std::to_string(based.size());
            bool valid = std::all_of(all.begin(), all.end(), [](const Plant &p) { return is_valid_plant(p); });
            return valid && Rational(static_cast<long>(all.size())) == s.all[n] &&
                   Rational(static_cast<long>(based.size())) == s.based[n];
        });
    }
    for (int n = 1; n <= std::min(top, 4); ++n) {
        rec.check("brute force agrees, degree " + std::to_string(n), [&](std::string &d) {
            auto brute = enumerate_plants_brute_force(n);
            d = std::to_string(brute.size()) + " plants";
            return brute == enumerate_plants(n);
        });
    }
    rec.check("x - P + xP^2 + 2xP + P^2 + P^3 = 0 to order 10", [&](std::string &) {
        const PowerSeries &p = s.all;
        PowerSeries x = PowerSeries::x(10);
        PowerSeries e = x - p + x * p * p + (x * p).scaled(2) + p * p + p.pow(3);
        return e == PowerSeries(10);
    });
    rec.check("x = (P - P^2 - P^3)/(1 + P)^2 to order 10", [&](std::string &) {
        const PowerSeries &p = s.all;
        PowerSeries one = PowerSeries::constant(10, 1);
        return (p - p * p - p.pow(3)) * ((one + p) * (one + p)).inverse() == PowerSeries::x(10);
    });
    rec.check("P = Q/(1 - Q)", [&](std::string &) {
        PowerSeries one = PowerSeries::constant(10, 1);
        return s.all == s.based * (one - s.based).inverse();
    });
    rec.check("every plant has a peeling point", [&](std::string &d) {
        Tally t;
        for (int n = 2; n <= std::min(top, 5); ++n)
            for (const auto &p : enumerate_plants(n))
                t.add(!peeling_points(p).empty(), p.to_json());
        return t.ok(d);
    });
    rec.check("every based non-crossing tree has a border leaf", [&](std::string &d) {
        Tally t;
        for (int n = 2; n <= std::min(top, 5); ++n)
            for (const auto &p : enumerate_plants(n, true))
                if (p.is_tree())
                    t.add(!border_leaves(p).empty(), p.to_json());
        return t.ok(d);
    });
    return rec.finish(0);
}

// Plant rebuilt from the unit by iterated decomposition.
Plant rebuild(const Plant &p)
{
    if (p.degree() == 1)
        return unit_plant();
    Decomposition d = decompose(p);
    return graft(rebuild(d.rest), generator_plant(d.delta), d.index);
}

SuiteReport suite_ncp_operad(const VerifyOptions &opts)
{
    Recorder rec("ncp-operad");
    int top = std::max(2, cap(opts, 5));
    rec.check("psi(graft) = composition of psi", [&](std::string &d) {
        Tally t;
        std::map<int, std::vector<Plant>> plants;
        std::map<Plant, MouldComponent> psi;
        for (int n = 1; n <= top; ++n)
            for (const auto &p : plants[n] = enumerate_plants(n))
                psi.emplace(p, psi_plant(p));
        for (int a = 1; a <= top; ++a)
            for (int b = 1; a + b - 1 <= top; ++b)
                for (const auto &f : plants[a])
                    for (const auto &g : plants[b])
                        for (int i = 1; i <= a; ++i) {
                            Plant h = graft(f, g, i);
                            t.add(is_valid_plant(h) && psi_plant(h) == compose_at(psi.at(f), psi.at(g), i),
                                  f.to_json() + " o_" + std::to_string(i) + " " + g.to_json());
                        }
        return t.ok(d);
    });
    Plant l = left_plant(), r = right_plant(), m = assoc_plant();
    rec.check("left o_2 right = right o_1 left", [&](std::string &) { return graft(l, r, 2) == graft(r, l, 1); });
    rec.check("assoc o_1 assoc = assoc o_2 assoc", [&](std::string &) { return graft(m, m, 1) == graft(m, m, 2); });
    rec.check("left o_1 assoc = left o_2 left", [&](std::string &) { return graft(l, m, 1) == graft(l, l, 2); });
    rec.check("right o_2 assoc = right o_1 right", [&](std::string &) { return graft(r, m, 2) == graft(r, r, 1); });
    rec.check("decomposition rebuilds every plant", [&](std::string &d) {
        Tally t;
        for (int n = 1; n <= top; ++n)
            for (const auto &p : enumerate_plants(n))
                t.add(rebuild(p) == p, p.to_json());
        return t.ok(d);
    });
    rec.check("every peeling point gives a valid decomposition", [&](std::string &d) {
        Tally t;
        for (int n = 2; n <= top; ++n)
            for (const auto &p : enumerate_plants(n))
                for (int v : peeling_points(p)) {
                    Decomposition dec = decompose_at(p, v);
                    t.add(is_valid_plant(dec.rest) && graft(dec.rest, generator_plant(dec.delta), v) == p,
                          p.to_json() + " at " + std::to_string(v));
                }
        return t.ok(d);
    });
    rec.check("push maps plants to signed plants", [&](std::string &d) {
        Tally t;
        for (int n = 1; n <= std::min(top, cap(opts, 4)); ++n)
            for (const auto &p : enumerate_plants(n)) {
                RotatedPlant rp = rotate_plant(p);
                t.add(is_valid_plant(rp.plant) && push(psi_plant(p)) == psi_plant(rp.plant).scaled(rp.sign),
                      p.to_json());
            }
        return t.ok(d);
    });
    rec.check("degree-7 example tree: value and border leaves", [&](std::string &d) {
        Plant p(7, {{0, 7}, {1, 2}, {1, 3}, {3, 7}, {4, 5}, {5, 6}, {5, 7}});
        RatFun expected = parse_expression("1/((u1+u2+u3+u4+u5+u6+u7)*u2*(u2+u3)*(u4+u5+u6+u7)*u5*u6*(u6+u7))");
        auto leaves = border_leaves(p);
        d = psi_plant(p).to_string();
        return psi_plant(p).value() == expected && leaves == std::vector<int>{2, 4, 6};
    });
    rec.check("degree-7 example plant: value and peeling points", [&](std::string &d) {
        Plant p(7, {{0, 1}, {0, 6}, {1, 4}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}, {{0, 4}});
        RatFun expected =
            parse_expression("(u1+u2+u3+u4)/((u1+u2+u3+u4+u5+u6)*u1*(u2+u3+u4)*(u3+u4)*u4*u5*u6*u7)");
        auto points = peeling_points(p);
        d = psi_plant(p).to_string();
        return psi_plant(p).value() == expected && points == std::vector<int>{3, 5};
    });
    return rec.finish(0);
}

// --- products: preservation and derivation --------------------------------

struct NamedOp {
    std::string name;
    Op op;
    int arity_shift; // result arity = a + b + arity_shift
};

const std::vector<NamedOp> &all_ops()
{
    static const std::vector<NamedOp> ops = {
        {"succ", succ, 0}, {"prec", prec, 0}, {"mu", mu, 0},   {"limu", limu, 0},
        {"arrow", prelie_arrow, 0}, {"circ", prelie_circ, -1}, {"arit", arit, 0}, {"ari", ari, 0},
    };
    return ops;
}

const NamedOp &op_named(const std::string &name)
{
    for (const auto &op : all_ops())
        if (op.name == name)
            return op;
    throw InvalidArgument("unknown product " + name);
}

// Alternal inputs: multiples of CM_n plus, from degree 3 on, CM_1 <- CM_{n-1};
// each is certified by the shuffle check before use.
MouldComponent random_alternal(int n, Rng &rng)
{
    MouldComponent f = cm_mould(n).scaled(uniform(rng, 1, 3));
    if (n >= 3)
        f = f + prelie_arrow(cm_mould(1), cm_mould(n - 1)).scaled(uniform(rng, -2, 2));
    return f;
}

// Iterated pre-Lie products of the unit, degree n.
std::vector<MouldComponent> prelie_monomials(int n, std::map<int, std::vector<MouldComponent>> &memo)
{
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    std::vector<MouldComponent> out;
    if (n == 1)
        out.push_back(unit());
    for (int a = 1; a < n; ++a)
        for (const auto &f : prelie_monomials(a, memo))
            for (const auto &g : prelie_monomials(n - a, memo))
                out.push_back(prelie_arrow(f, g));
    return memo[n] = out;
}

// Dimension of the pre-Lie image and of the alternal elements of span psi(T)
// in degree n, both by exact rank at random points.
std::pair<int, int> prelie_dimensions(int n, Rng &rng, TreeCache &cache)
{
    std::map<int, std::vector<MouldComponent>> memo;
    const auto &mons = prelie_monomials(n, memo);
    const auto &trees = cache.trees(n);
    auto random_point = [&] {
        std::vector<Rational> p;
        for (int k = 0; k < n; ++k)
            p.emplace_back(uniform(rng, 1, 40));
        return p;
    };
    auto at = [&](const std::vector<Rational> &p) {
        Assignment a;
        for (int k = 0; k < n; ++k)
            a[Var::u(k + 1)] = p[k];
        return a;
    };
    Matrix image;
    for (std::size_t row = 0; row < std::max(mons.size(), trees.size()); ++row) {
        Assignment a = at(random_point());
        std::vector<Rational> r;
        for (const auto &m : mons)
            r.push_back(m.value().evaluate(a));
        image.push_back(std::move(r));
    }
    // Shuffle sums of each psi(T): one row per (split, point).
    Matrix conditions;
    for (int i = 1; i < n; ++i)
        for (std::size_t row = 0; row < trees.size(); ++row) {
            std::vector<Rational> p = random_point();
            std::vector<Rational> r(trees.size(), Rational(0));
            std::vector<bool> first(static_cast<std::size_t>(n), false);
            std::fill(first.begin(), first.begin() + i, true);
            do {
                std::vector<Rational> q;
                int x = 0, y = i;
                for (int pos = 0; pos < n; ++pos)
                    q.push_back(p[first[pos] ? x++ : y++]);
                Assignment a = at(q);
                for (std::size_t c = 0; c < trees.size(); ++c)
                    r[c] += cache.psi(trees[c]).evaluate(a);
            } while (std::prev_permutation(first.begin(), first.end()));
            conditions.push_back(std::move(r));
        }
    int meet = static_cast<int>(trees.size()) - (conditions.empty() ? 0 : rank_exact(conditions));
    return {rank_exact(image), meet};
}

SuiteReport suite_preservation(const VerifyOptions &opts)
{
    Recorder rec("preservation");
    Rng rng(opts.seed + 4);
    TreeCache cache;
    int top = cap(opts, 5);
    std::map<int, MouldComponent> alt, veg;
    for (int n = 1; n <= top; ++n) {
        alt.emplace(n, random_alternal(n, rng));
        veg.emplace(n, random_psi(n, rng, cache));
    }
    rec.check("alternal inputs", [&](std::string &) {
        return std::all_of(alt.begin(), alt.end(), [](const auto &kv) { return is_alternal(kv.second); });
    });
    rec.check("vegetal inputs", [&](std::string &) {
        return std::all_of(veg.begin(), veg.end(), [](const auto &kv) { return is_vegetal(kv.second); });
    });
    for (const std::string name : {"arrow", "circ", "ari"}) {
        const NamedOp &op = op_named(name);
        rec.check("alternality preserved by " + name, [&](std::string &d) {
            Tally t;
            for (int a = 1; a <= top; ++a)
                for (int b = 1; a + b + op.arity_shift <= top; ++b)
                    t.add(is_alternal(op.op(alt.at(a), alt.at(b))), std::to_string(a) + "," + std::to_string(b));
            return t.ok(d);
        });
    }
    for (const std::string name : {"succ", "prec", "mu", "circ", "arit", "ari"}) {
        const NamedOp &op = op_named(name);
        rec.check("vegetality preserved by " + name, [&](std::string &d) {
            Tally t;
            for (int a = 1; a <= top; ++a)
                for (int b = 1; a + b + op.arity_shift <= top; ++b)
                    if (a + b + op.arity_shift >= 2)
                        t.add(is_vegetal(op.op(veg.at(a), veg.at(b))), std::to_string(a) + "," + std::to_string(b));
            return t.ok(d);
        });
    }
    // Open comparison: the image of the free pre-Lie algebra sits inside the
    // alternal part of the dendriform image; equality is only reported.
    for (int n = 1; n <= std::min(top, 5); ++n) {
        rec.check("pre-Lie image inside dendriform and alternal, degree " + std::to_string(n), [&](std::string &d) {
            auto [image, meet] = prelie_dimensions(n, rng, cache);
            d = "dimensions " + std::to_string(image) + " and " + std::to_string(meet) +
                (image == meet ? " (equal)" : " (differ)");
            return image <= meet;
        });
    }
    return rec.finish(0);
}

SuiteReport suite_derivation(const VerifyOptions &opts)
{
    Recorder rec("derivation");
    Rng rng(opts.seed + 5);
    TreeCache cache;
    int top = cap(opts, 5);
    // Both arguments have arity >= 2, so pairs start at total degree 4.
    int pair_top = std::max(top, 4);
    for (const auto &op : all_ops()) {
        rec.check("derivation of " + op.name, [&](std::string &d) {
            Tally t;
            for (int a = 2; a <= pair_top; ++a)
                for (int b = 2; a + b + op.arity_shift <= pair_top; ++b) {
                    MouldComponent f = random_psi(a, rng, cache), g = random_psi(b, rng, cache);
                    MouldComponent lhs = derivation(op.op(f, g));
                    MouldComponent rhs = op.op(derivation(f), g) + op.op(f, derivation(g));
                    t.add(lhs == rhs, std::to_string(a) + "," + std::to_string(b));
                }
            return t.ok(d);
        });
    }
    rec.check("derivation commutes with f/Y and Y\\f", [&](std::string &d) {
        Tally t;
        for (int n = 2; n < top; ++n) {
            MouldComponent f = random_psi(n, rng, cache);
            t.add(derivation(over(f, unit())) == over(derivation(f), unit()), "over " + std::to_string(n));
            t.add(derivation(under(unit(), f)) == under(unit(), derivation(f)), "under " + std::to_string(n));
        }
        return t.ok(d);
    });
    rec.check("derivation kills alternal moulds", [&](std::string &d) {
        Tally t;
        for (int n = 2; n <= top; ++n) {
            t.add(derivation(cm_mould(n)).is_zero(), "CM" + std::to_string(n));
            for (int a = 1; a < n; ++a)
                t.add(derivation(ari(cm_mould(a), cm_mould(n - a))).is_zero(),
                      "ari(CM" + std::to_string(a) + ",CM" + std::to_string(n - a) + ")");
        }
        return t.ok(d);
    });
    rec.check("derivation of psi(T) removes top vertices", [&](std::string &d) {
        Tally t;
        for (int n = 2; n <= top; ++n)
            for (const auto &tree : cache.trees(n)) {
                std::vector<RatFun> terms;
                for (const auto &v : top_vertices(tree))
                    terms.push_back(cache.psi(v.reduced));
                t.add(derivation(MouldComponent(n, cache.psi(tree))) == MouldComponent(n - 1, sum(std::move(terms))),
                      tree.to_string());
            }
        return t.ok(d);
    });
    rec.check("forgetful image of the derivation is d/dx", [&](std::string &d) {
        Tally t;
        for (int n = 1; n <= top; ++n)
            for (int s = 0; s < 3; ++s) {
                MouldComponent f = random_psi(n, rng, cache);
                RatFun lhs = n == 1 ? derivation_constant(f) : value_at_ones(derivation(f));
                t.add(lhs == value_at_ones(f).scaled(n), f.to_string());
            }
        return t.ok(d);
    });
    return rec.finish(0);
}

// --- gallery and forgetful map --------------------------------------------

SuiteReport suite_gallery(const VerifyOptions &opts)
{
    Recorder rec("gallery");
    TreeCache cache;
    int top = cap(opts, 8);
    rec.check("CM recursion equals the closed form", [&](std::string &d) {
        Tally t;
        for (int n = 1; n <= top; ++n)
            t.add(cm_mould(n) == cm_closed_form(n), "n=" + std::to_string(n));
        return t.ok(d);
    });
    rec.check("binomial C(n,k) variant of the closed form fails at n = 2", [&](std::string &d) {
        std::string failing;
        for (int n = 1; n <= top; ++n)
            if (!(cm_mould(n) == cm_closed_form(n, true)))
                failing += (failing.empty() ? "" : ",") + std::to_string(n);
        d = "fails for n in {" + failing + "}";
        return cm_mould(1) == cm_closed_form(1, true) && !(cm_mould(2) == cm_closed_form(2, true));
    });
    rec.check("PO recursion equals the closed form (formal t)", [&](std::string &d) {
        Tally t;
        for (int n = 1; n <= std::min(top, 6); ++n)
            t.add(po_mould(n) == po_recursion(n), "n=" + std::to_string(n));
        return t.ok(d);
    });
    rec.check("CM is alternal", [&](std::string &d) {
        Tally t;
        for (int n = 1; n <= std::min(top, 6); ++n)
            t.add(is_alternal(cm_mould(n)), "n=" + std::to_string(n));
        return t.ok(d);
    });
    rec.check("TY, PO, weighted and PQ lie in the tree span", [&](std::string &d) {
        Tally t;
        for (int n = 1; n <= std::min(top, 4); ++n) {
            t.add(try_expand_in_tree_basis(ty_mould(n, Rational(2))).has_value(), "TY " + std::to_string(n));
            t.add(try_expand_in_tree_basis(po_mould(n, Rational(3))).has_value(), "PO " + std::to_string(n));
            t.add(try_expand_in_tree_basis(weighted_mould(n)).has_value(), "weighted " + std::to_string(n));
            for (int p = 1; p <= n; ++p)
                t.add(try_expand_in_tree_basis(pq_sum(p, n - p)).has_value(), "PQ " + std::to_string(n));
        }
        return t.ok(d);
    });
    rec.check("weight -n and nice poles", [&](std::string &d) {
        Tally t;
        for (int n = 1; n <= std::min(top, 6); ++n) {
            std::vector<std::pair<std::string, MouldComponent>> all = {
                {"AS", as_mould(n)},         {"TY", ty_mould(n)}, {"weighted", weighted_mould(n)},
                {"CM", cm_mould(n)},         {"PO", po_mould(n)},
            };
            for (int p = 1; p <= n; ++p)
                all.emplace_back("PQ", pq_sum(p, n - p));
            for (const auto &[name, f] : all) {
                auto w = f.value().homogeneity_weight();
                t.add(w && *w == -n && f.value().has_nice_poles(n), name + " " + std::to_string(n));
            }
        }
        return t.ok(d);
    });
    rec.check("AS and TY(1) are vegetal", [&](std::string &d) {
        Tally t;
        for (int n = 1; n <= std::min(top, 5); ++n) {
            t.add(is_vegetal(as_mould(n)), "AS " + std::to_string(n));
            t.add(ty_mould(n, Rational(1)) == as_mould(n), "TY(1) " + std::to_string(n));
        }
        return t.ok(d);
    });
    rec.check("PQ sums: tree sums and partition of AS", [&](std::string &d) {
        Tally t;
        for (int n = 1; n <= std::min(top, 5); ++n) {
            MouldComponent total(n, RatFun());
            for (int p = 1; p <= n; ++p) {
                t.add(pq_sum(p, n - p) == pq_tree_sum(p, n - p),
                      "(" + std::to_string(p) + "," + std::to_string(n - p) + ")");
                total = total + pq_sum(p, n - p);
            }
            t.add(total == as_mould(n), "AS " + std::to_string(n));
        }
        return t.ok(d);
    });
    return rec.finish(0);
}

// Sums op(f_a, g_b) over all component pairs, keeping degrees <= order.
Mould combine(const Mould &f, const Mould &g, const Op &op, int shift, int order)
{
    std::vector<std::vector<RatFun>> parts(order + 1);
    for (int a = 1; a <= f.truncation(); ++a)
        for (int b = 1; b <= g.truncation(); ++b) {
            int n = a + b + shift;
            if (n < 1 || n > order || f.component(a).is_zero() || g.component(b).is_zero())
                continue;
            parts[n].push_back(op(f.component(a), g.component(b)).value());
        }
    Mould out(order);
    for (int n = 1; n <= order; ++n)
        out.set(MouldComponent(n, sum(std::move(parts[n]))));
    return out;
}

SuiteReport suite_forgetful(const VerifyOptions &opts)
{
    Recorder rec("forgetful");
    Rng rng(opts.seed + 6);
    TreeCache cache;
    const unsigned order = static_cast<unsigned>(std::max(1, cap(opts, 8)));
    const int n = static_cast<int>(order);
    PowerSeries x = PowerSeries::x(order), one = PowerSeries::constant(order, 1);
    auto expect = [&](const std::string &name, const std::function<MouldComponent(int)> &gen,
                      const PowerSeries &target) {
        rec.check(name, [&](std::string &d) {
            PowerSeries got = forgetful(truncated_mould(n, gen), order);
            d = got.to_string();
            return got == target;
        });
    };
    expect("F(AS) = x/(1-x)", as_mould, x * (one - x).inverse());
    expect("F(CM) = x", cm_mould, x);
    expect("F(weighted) = x(2-x)/(2(1-x)^2)", weighted_mould,
           (x * (one.scaled(2) - x) * ((one - x) * (one - x)).inverse()).scaled(Rational(1, 2)));
    for (Rational t : {Rational(2), Rational(1, 3)}) {
        PowerSeries target = ((one - x.scaled(t)) * (one - x).inverse()).log().scaled(1 / (1 - t));
        expect("F(TY, t=" + t.get_str() + ") = log((1-tx)/(1-x))/(1-t)",
               [t](int k) { return ty_mould(k, t); }, target);
    }
    for (Rational t : {Rational(1), Rational(3)}) {
        PowerSeries target = ((one - x).binomial_power(-t) - one).scaled(1 / t);
        expect("F(PO, t=" + t.get_str() + ") = ((1-x)^-t - 1)/t", [t](int k) { return po_mould(k, t); }, target);
    }
    auto random_mould = [&]() {
        Mould m(3);
        for (int k = 1; k <= 3; ++k)
            m.set(random_psi(k, rng, cache));
        return m;
    };
    rec.check("F(f o g) = F(f)' F(g)", [&](std::string &d) {
        Tally t;
        for (int s = 0; s < 5; ++s) {
            Mould f = random_mould(), g = random_mould();
            PowerSeries lhs = forgetful(combine(f, g, prelie_circ, -1, n), order);
            t.add(lhs == forgetful(f, order).derivative() * forgetful(g, order), "sample " + std::to_string(s));
        }
        return t.ok(d);
    });
    rec.check("F(MU(f, g)) = F(f) F(g)", [&](std::string &d) {
        Tally t;
        for (int s = 0; s < 5; ++s) {
            Mould f = random_mould(), g = random_mould();
            PowerSeries lhs = forgetful(combine(f, g, mu, 0, n), order);
            t.add(lhs == forgetful(f, order) * forgetful(g, order), "sample " + std::to_string(s));
        }
        return t.ok(d);
    });
    return rec.finish(0);
}

using SuiteFn = SuiteReport (*)(const VerifyOptions &);

const std::vector<std::pair<std::string, SuiteFn>> &registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"operad", suite_operad},         {"anticyclic", suite_anticyclic},
        {"dend", suite_dend},             {"residue", suite_residue},
        {"tamari", suite_tamari},         {"tridend", suite_tridend},
        {"ncp-counts", suite_ncp_counts}, {"ncp-operad", suite_ncp_operad},
        {"preservation", suite_preservation}, {"derivation", suite_derivation},
        {"gallery", suite_gallery},       {"forgetful", suite_forgetful},
    };
    return r;
}

} // namespace

bool SuiteReport::passed() const
{
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &entry : registry())
            out.push_back(entry.first);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string &name, const VerifyOptions &opts)
{
    if (opts.max_degree && *opts.max_degree < 1)
        throw InvalidArgument("max degree must be at least 1");
    for (const auto &[key, fn] : registry())
        if (key == name) {
            auto start = std::chrono::steady_clock::now();
            SuiteReport r = fn(opts);
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return r;
        }
    throw InvalidArgument("unknown verification suite '" + name + "'");
}

std::vector<std::string> suites_in_group(const std::string &group)
{
    static const std::map<std::string, std::vector<std::string>> groups = {
        {"operad", {"operad"}},
        {"anticyclic", {"anticyclic"}},
        {"dend", {"dend", "residue", "tamari"}},
        {"tridend", {"tridend"}},
        {"ncp", {"ncp-counts", "ncp-operad"}},
        {"derivation", {"derivation"}},
        {"ari", {"preservation"}},
        {"gallery", {"gallery", "forgetful"}},
    };
    if (group == "all")
        return suite_names();
    auto it = groups.find(group);
    return it == groups.end() ? std::vector<std::string>{} : it->second;
}

std::string report_text(const std::vector<SuiteReport> &reports)
{
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    for (const auto &r : reports) {
        out << (r.passed() ? "PASS" : "FAIL") << "  " << r.suite << " (" << r.seconds << " s)\n";
        for (const auto &c : r.checks) {
            out << "  " << (c.passed ? "ok  " : "FAIL") << "  " << c.name;
            if (!c.detail.empty())
                out << ": " << c.detail;
            out << '\n';
        }
    }
    return out.str();
}

std::string report_json(const std::vector<SuiteReport> &reports)
{
    nlohmann::json suites = nlohmann::json::array();
    bool all = true;
    for (const auto &r : reports) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto &c : r.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        suites.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"seconds", r.seconds}, {"checks", checks}});
        all = all && r.passed();
    }
    return nlohmann::json{{"passed", all}, {"suites", suites}}.dump(2);
}

} // namespace mouldlab
