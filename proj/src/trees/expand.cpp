#include <algorithm>
#include <random>

#include "mouldlab/errors.hpp"
#include "mouldlab/linalg.hpp"
#include "mouldlab/trees.hpp"

namespace mouldlab {

namespace {

struct Basis {
    std::vector<BinaryTree> trees;
    std::vector<std::vector<std::pair<int, int>>> intervals;
};

Basis make_basis(int n)
{
    Basis b;
    b.trees = enumerate_binary_trees(n);
    std::sort(b.trees.begin(), b.trees.end());
    for (const auto &t : b.trees)
        b.intervals.push_back(vertex_intervals(t));
    return b;
}

// psi(T) at a point with positive coordinates never hits a pole.
Rational psi_at(const std::vector<std::pair<int, int>> &iv, const std::vector<Rational> &prefix)
{
    Rational d = 1;
    for (auto [lo, hi] : iv)
        d *= prefix[hi] - prefix[lo - 1];
    return 1 / d;
}

std::vector<Rational> random_point(int n, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> dist(1, 40);
    std::vector<Rational> p(static_cast<std::size_t>(n));
    for (auto &v : p)
        v = dist(rng);
    return p;
}

std::vector<Rational> prefix_sums(const std::vector<Rational> &p)
{
    std::vector<Rational> s(p.size() + 1);
    s[0] = 0;
    for (std::size_t k = 0; k < p.size(); ++k)
        s[k + 1] = s[k] + p[k];
    return s;
}

Assignment as_assignment(const std::vector<Rational> &p)
{
    Assignment a;
    for (std::size_t k = 0; k < p.size(); ++k)
        a[Var::u(static_cast<int>(k) + 1)] = p[k];
    return a;
}

} // namespace

std::optional<Expansion> try_expand_in_tree_basis(const MouldComponent &f, const ExpandOptions &opts)
{
    int n = f.arity();
    for (Var v : f.value().variables())
        if (!v.is_u())
            throw InvalidArgument("tree-basis expansion needs a function of u1..un only; fix " + v.name() +
                                  " to a rational value");
    Basis basis = make_basis(n);
    std::size_t c = basis.trees.size();
    std::mt19937_64 rng(opts.seed);

    std::optional<std::vector<Rational>> coefs;
    for (int attempt = 0; attempt <= opts.max_retries && !coefs; ++attempt) {
        Matrix a;
        std::vector<Rational> b;
        a.reserve(c);
        int misses = 0;
        while (a.size() < c) {
            auto p = random_point(n, rng);
            Rational fv;
            try {
                fv = f.value().evaluate(as_assignment(p));
            } catch (const DomainError &) {
                if (++misses > 100 * opts.max_retries + 100)
                    throw DomainError("could not find evaluation points avoiding the poles of f");
                continue;
            }
            auto s = prefix_sums(p);
            std::vector<Rational> row;
            row.reserve(c);
            for (const auto &iv : basis.intervals)
                row.push_back(psi_at(iv, s));
            a.push_back(std::move(row));
            b.push_back(fv);
        }
        coefs = solve_exact(a, b);
    }
    if (!coefs)
        throw DomainError("evaluation matrix stayed singular after retries");

    Expansion e;
    for (std::size_t k = 0; k < c; ++k)
        if (sgn((*coefs)[k]) != 0)
            e.terms.emplace_back(basis.trees[k], (*coefs)[k]);

    if (n <= opts.symbolic_limit) {
        std::vector<RatFun> terms;
        for (const auto &[t, a] : e.terms)
            terms.push_back(psi_tree(t).value().scaled(a));
        if (!(sum(std::move(terms)) == f.value()))
            return std::nullopt;
    } else {
        int checked = 0, misses = 0;
        while (checked < opts.extra_checks) {
            auto p = random_point(n, rng);
            Rational fv;
            try {
                fv = f.value().evaluate(as_assignment(p));
            } catch (const DomainError &) {
                if (++misses > 1000)
                    throw DomainError("could not find check points avoiding the poles of f");
                continue;
            }
            auto s = prefix_sums(p);
            Rational acc = 0;
            for (std::size_t k = 0; k < c; ++k)
                if (sgn((*coefs)[k]) != 0)
                    acc += (*coefs)[k] * psi_at(basis.intervals[k], s);
            if (acc != fv)
                return std::nullopt;
            ++checked;
        }
    }
    return e;
}

Expansion expand_in_tree_basis(const MouldComponent &f, const ExpandOptions &opts)
{
    auto e = try_expand_in_tree_basis(f, opts);
    if (!e)
        throw DomainError("function is not in the span of the tree images");
    return *e;
}

} // namespace mouldlab
