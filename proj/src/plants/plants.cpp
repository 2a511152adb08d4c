#include "mouldlab/plants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "mouldlab/errors.hpp"

namespace mouldlab {

namespace {

using Adjacency = std::vector<std::vector<int>>;

Adjacency adjacency(const Plant &p)
{
    Adjacency adj(static_cast<std::size_t>(p.degree()) + 1);
    for (const auto &d : p.denominators()) {
        adj[d.a].push_back(d.b);
        adj[d.b].push_back(d.a);
    }
    for (auto &l : adj)
        std::sort(l.begin(), l.end());
    return adj;
}

// Face lying between chord (a, b) and the vertices a..b, if it is bounded.
std::optional<std::vector<int>> face_under(const Adjacency &adj, int a, int b)
{
    std::vector<int> cycle{a};
    int cur = a;
    while (cur != b) {
        int next = -1;
        for (int w : adj[cur])
            if (w > cur && w <= b && !(cur == a && w == b))
                next = std::max(next, w);
        if (next < 0)
            return std::nullopt;
        cycle.push_back(next);
        cur = next;
    }
    return cycle;
}

bool adjacent_on_cycle(const std::vector<int> &cycle, int c, int d)
{
    auto ic = std::find(cycle.begin(), cycle.end(), c) - cycle.begin();
    auto id = std::find(cycle.begin(), cycle.end(), d) - cycle.begin();
    auto k = static_cast<long>(cycle.size());
    long diff = std::abs(ic - id);
    return diff == 1 || diff == k - 1;
}

bool on_cycle(const std::vector<int> &cycle, int v)
{
    return std::find(cycle.begin(), cycle.end(), v) != cycle.end();
}

// Copy of p with vertices moved by `offset`, into a polygon of degree n.
void embed(const Plant &p, int offset, std::vector<Diagonal> &den, std::vector<Diagonal> &num)
{
    for (const auto &d : p.denominators())
        den.push_back({d.a + offset, d.b + offset});
    for (const auto &d : p.numerators())
        num.push_back({d.a + offset, d.b + offset});
}

struct Generation {
    std::vector<std::vector<Plant>> all, based;

    explicit Generation(int n) : all(static_cast<std::size_t>(n) + 1), based(static_cast<std::size_t>(n) + 1)
    {
        for (int m = 1; m <= n; ++m)
            build(m);
    }

    // Ordered lists of based plants along 0 = c0 < c1 < ... < ck = m.
    void chains(int m, int min_parts, const std::function<void(const std::vector<int> &, std::vector<Diagonal> &,
                                                               std::vector<Diagonal> &)> &emit)
    {
        std::vector<int> cuts{0};
        std::vector<Diagonal> den, num;
        std::function<void(int)> rec = [&](int pos) {
            if (pos == m) {
                if (static_cast<int>(cuts.size()) - 1 >= min_parts)
                    emit(cuts, den, num);
                return;
            }
            for (int next = pos + 1; next <= m; ++next) {
                if (pos == 0 && next == m)
                    continue; // a single part is the whole polygon
                cuts.push_back(next);
                for (const auto &sub : based[next - pos]) {
                    auto dsize = den.size(), nsize = num.size();
                    embed(sub, pos, den, num);
                    rec(next);
                    den.resize(dsize);
                    num.resize(nsize);
                }
                cuts.pop_back();
            }
        };
        rec(0);
    }

    void build(int m)
    {
        std::set<Plant> based_set, all_set;
        if (m == 1) {
            based_set.insert(unit_plant());
        } else {
            // Kind I: base closes a cycle c0..ck carrying one numerator chord.
            chains(m, 3, [&](const std::vector<int> &cuts, std::vector<Diagonal> &den, std::vector<Diagonal> &num) {
                std::size_t k = cuts.size();
                for (std::size_t x = 0; x < k; ++x)
                    for (std::size_t y = x + 2; y < k; ++y) {
                        if (x == 0 && y == k - 1)
                            continue;
                        auto d = den;
                        auto nu = num;
                        d.push_back({0, m});
                        nu.push_back({cuts[x], cuts[y]});
                        based_set.insert(Plant(m, d, nu));
                    }
            });
            // Kind II: the base is a bridge; the side (a, a+1) is missing and
            // optional plants sit on 0..a and a+1..m.
            for (int a = 0; a < m; ++a) {
                const std::vector<Plant> empty_only{Plant(0, {}, {})};
                const auto &lefts = a == 0 ? empty_only : all[a];
                const auto &rights = a + 1 == m ? empty_only : all[m - a - 1];
                for (const auto &l : lefts)
                    for (const auto &r : rights) {
                        std::vector<Diagonal> d{{0, m}}, nu;
                        embed(l, 0, d, nu);
                        embed(r, a + 1, d, nu);
                        based_set.insert(Plant(m, d, nu));
                    }
            }
        }
        based[m].assign(based_set.begin(), based_set.end());
        all_set = based_set;
        // Kind III: a chain of at least two based plants, base absent.
        if (m >= 2)
            chains(m, 2, [&](const std::vector<int> &, std::vector<Diagonal> &den, std::vector<Diagonal> &num) {
                all_set.insert(Plant(m, den, num));
            });
        all[m].assign(all_set.begin(), all_set.end());
    }
};

} // namespace

bool crosses(const Diagonal &d, const Diagonal &e)
{
    return (d.a < e.a && e.a < d.b && d.b < e.b) || (e.a < d.a && d.a < e.b && e.b < d.b);
}

Plant::Plant(int n, std::vector<Diagonal> denominators, std::vector<Diagonal> numerators)
    : n_(n), den_(std::move(denominators)), num_(std::move(numerators))
{
    if (n < 0)
        throw InvalidArgument("negative plant degree");
    for (auto *list : {&den_, &num_}) {
        for (auto &d : *list) {
            if (d.a > d.b)
                std::swap(d.a, d.b);
            if (d.a < 0 || d.b > n || d.a == d.b)
                throw InvalidArgument("diagonal (" + std::to_string(d.a) + "," + std::to_string(d.b) +
                                      ") outside the polygon of degree " + std::to_string(n));
        }
        std::sort(list->begin(), list->end());
        if (std::adjacent_find(list->begin(), list->end()) != list->end())
            throw InvalidArgument("repeated diagonal");
    }
}

Plant Plant::parse_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw InvalidArgument(std::string("invalid plant JSON: ") + e.what());
    }
    auto read = [&](const char *key) {
        std::vector<Diagonal> out;
        if (!j.contains(key))
            return out;
        for (const auto &pair : j.at(key)) {
            if (!pair.is_array() || pair.size() != 2)
                throw InvalidArgument(std::string("plant JSON: entries of ") + key + " must be [a,b] pairs");
            out.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
        return out;
    };
    if (!j.is_object() || !j.contains("n"))
        throw InvalidArgument("plant JSON needs an object with key \"n\"");
    try {
        return Plant(j.at("n").get<int>(), read("denom"), read("numer"));
    } catch (const nlohmann::json::exception &e) {
        throw InvalidArgument(std::string("invalid plant JSON: ") + e.what());
    }
}

bool Plant::has_denominator(int a, int b) const
{
    return std::binary_search(den_.begin(), den_.end(), Diagonal{a, b});
}

bool Plant::has_numerator(int a, int b) const
{
    return std::binary_search(num_.begin(), num_.end(), Diagonal{a, b});
}

std::string Plant::to_json() const
{
    nlohmann::json j;
    j["n"] = n_;
    j["denom"] = nlohmann::json::array();
    j["numer"] = nlohmann::json::array();
    for (const auto &d : den_)
        j["denom"].push_back({d.a, d.b});
    for (const auto &d : num_)
        j["numer"].push_back({d.a, d.b});
    return j.dump();
}

std::vector<std::vector<int>> bounded_faces(const Plant &p)
{
    Adjacency adj = adjacency(p);
    std::vector<std::vector<int>> faces;
    for (const auto &d : p.denominators())
        if (d.b - d.a >= 2)
            if (auto f = face_under(adj, d.a, d.b))
                faces.push_back(*f);
    return faces;
}

std::string plant_defect(const Plant &p)
{
    int n = p.degree();
    if (n < 1)
        return "degree must be at least 1";
    if (n == 1)
        return p.denominators() == std::vector<Diagonal>{{0, 1}} && p.numerators().empty()
                   ? ""
                   : "the only plant of degree 1 is the single edge (0,1)";
    for (const auto &d : p.numerators())
        if (p.has_denominator(d.a, d.b))
            return "a chord is both a numerator and a denominator";
    std::vector<Diagonal> all = p.denominators();
    all.insert(all.end(), p.numerators().begin(), p.numerators().end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (crosses(all[i], all[j]))
                return "chords cross";
    for (const auto &d : p.numerators())
        if (d.b - d.a == 1 || (d.a == 0 && d.b == n))
            return "a numerator is a polygon side";

    Adjacency adj = adjacency(p);
    std::vector<bool> seen(adj.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        return "denominators are not connected through all vertices";

    auto faces = bounded_faces(p);
    std::vector<int> per_face(faces.size(), 0);
    for (const auto &d : p.numerators()) {
        int owner = -1;
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (on_cycle(faces[f], d.a) && on_cycle(faces[f], d.b) && !adjacent_on_cycle(faces[f], d.a, d.b))
                owner = static_cast<int>(f);
        if (owner < 0)
            return "a numerator is not a chord of a denominator cycle";
        ++per_face[owner];
    }
    for (int c : per_face)
        if (c != 1)
            return "a denominator cycle does not carry exactly one numerator";
    return "";
}

bool is_valid_plant(const Plant &p)
{
    return plant_defect(p).empty();
}

PlantKind plant_kind(const Plant &p)
{
    if (!p.is_based())
        return PlantKind::III;
    if (p.degree() >= 2 && face_under(adjacency(p), 0, p.degree()))
        return PlantKind::I;
    return PlantKind::II;
}

Plant unit_plant()
{
    return Plant(1, {{0, 1}});
}

Plant left_plant()
{
    return Plant(2, {{0, 1}, {0, 2}});
}

Plant right_plant()
{
    return Plant(2, {{0, 2}, {1, 2}});
}

Plant assoc_plant()
{
    return Plant(2, {{0, 1}, {1, 2}});
}

std::vector<Plant> enumerate_plants(int n, bool based_only)
{
    if (n < 1)
        throw InvalidArgument("plant degree must be at least 1");
    Generation g(n);
    return based_only ? g.based[n] : g.all[n];
}

std::vector<Plant> enumerate_plants_brute_force(int n, bool based_only)
{
    if (n < 1)
        throw InvalidArgument("plant degree must be at least 1");
    if (n > 5)
        throw InvalidArgument("brute-force plant enumeration is limited to degree 5");
    std::vector<Diagonal> chords;
    for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            chords.push_back({a, b});
    std::vector<int> role(chords.size(), 0);
    std::vector<Plant> out;
    while (true) {
        std::vector<Diagonal> den, num;
        for (std::size_t k = 0; k < chords.size(); ++k) {
            if (role[k] == 1)
                den.push_back(chords[k]);
            else if (role[k] == 2)
                num.push_back(chords[k]);
        }
        Plant p(n, den, num);
        if ((!based_only || p.is_based()) && is_valid_plant(p))
            out.push_back(p);
        std::size_t k = 0;
        while (k < role.size() && role[k] == 2)
            role[k++] = 0;
        if (k == role.size())
            break;
        ++role[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

MouldComponent psi_plant(const Plant &p)
{
    std::string defect = plant_defect(p);
    if (!defect.empty())
        throw InvalidArgument("invalid plant: " + defect);
    Polynomial num(1);
    for (const auto &d : p.numerators())
        num = num * Polynomial::interval(d.a + 1, d.b);
    std::vector<std::pair<Polynomial, unsigned>> den;
    for (const auto &d : p.denominators())
        den.emplace_back(Polynomial::interval(d.a + 1, d.b), 1);
    return MouldComponent(p.degree(), RatFun::from_factors(num, den));
}

Plant graft(const Plant &f, const Plant &g, int i)
{
    int m = f.degree(), n = g.degree();
    if (i < 1 || i > m)
        throw InvalidArgument("graft index " + std::to_string(i) + " outside 1.." + std::to_string(m));
    auto fv = [&](int v) { return v <= i - 1 ? v : v + n - 1; };
    std::vector<Diagonal> den, num;
    bool side_in_f = f.has_denominator(i - 1, i);
    bool base_in_g = g.has_denominator(0, n);
    for (const auto &d : f.denominators())
        if (!(d.a == i - 1 && d.b == i))
            den.push_back({fv(d.a), fv(d.b)});
    for (const auto &d : f.numerators())
        num.push_back({fv(d.a), fv(d.b)});
    for (const auto &d : g.denominators())
        if (!(d.a == 0 && d.b == n))
            den.push_back({d.a + i - 1, d.b + i - 1});
    for (const auto &d : g.numerators())
        num.push_back({d.a + i - 1, d.b + i - 1});
    Diagonal glue{i - 1, i - 1 + n};
    if (side_in_f && base_in_g)
        den.push_back(glue);
    else if (!side_in_f && !base_in_g)
        num.push_back(glue);
    return Plant(m + n - 1, den, num);
}

std::vector<int> peeling_points(const Plant &p)
{
    if (p.degree() < 2)
        throw InvalidArgument("peeling points need degree at least 2");
    Adjacency adj = adjacency(p);
    std::vector<int> out;
    for (int v = 1; v < p.degree(); ++v) {
        bool only_sides = std::all_of(adj[v].begin(), adj[v].end(), [&](int w) { return std::abs(w - v) == 1; });
        // Numerator chords count as incident diagonals too.
        bool numerator_free = std::none_of(p.numerators().begin(), p.numerators().end(),
                                           [&](const Diagonal &d) { return d.a == v || d.b == v; });
        if (only_sides && numerator_free && !adj[v].empty())
            out.push_back(v);
    }
    return out;
}

std::vector<int> border_leaves(const Plant &p)
{
    Adjacency adj = adjacency(p);
    std::vector<int> out;
    for (int v : peeling_points(p))
        if (adj[v].size() == 1)
            out.push_back(v);
    return out;
}

Plant generator_plant(Generator g)
{
    switch (g) {
    case Generator::Left:
        return left_plant();
    case Generator::Right:
        return right_plant();
    case Generator::Assoc:
        break;
    }
    return assoc_plant();
}

std::string generator_name(Generator g)
{
    switch (g) {
    case Generator::Left:
        return "left";
    case Generator::Right:
        return "right";
    case Generator::Assoc:
        break;
    }
    return "assoc";
}

Decomposition decompose(const Plant &p)
{
    if (p.degree() < 2)
        throw InvalidArgument("decompose needs degree at least 2");
    auto points = peeling_points(p);
    if (points.empty())
        throw InvalidArgument("plant has no peeling point: " + p.to_json());
    return decompose_at(p, points.front());
}

Decomposition decompose_at(const Plant &p, int v)
{
    int n = p.degree();
    auto points = peeling_points(p);
    if (std::find(points.begin(), points.end(), v) == points.end())
        throw InvalidArgument("vertex " + std::to_string(v) + " is not a peeling point");
    bool left = p.has_denominator(v - 1, v), right = p.has_denominator(v, v + 1);
    Generator delta = left && right ? Generator::Assoc : (left ? Generator::Left : Generator::Right);

    auto relabel = [&](int w) { return w > v ? w - 1 : w; };
    std::vector<Diagonal> den, num;
    for (const auto &d : p.denominators())
        if (d.a != v && d.b != v)
            den.push_back({relabel(d.a), relabel(d.b)});
    for (const auto &d : p.numerators()) {
        if (delta == Generator::Assoc && d.a == v - 1 && d.b == v + 1)
            continue;
        num.push_back({relabel(d.a), relabel(d.b)});
    }
    // With both sides at v the rest keeps side v exactly when the chord
    // (v-1, v+1) is absent from p.
    if (delta == Generator::Assoc && !p.has_numerator(v - 1, v + 1))
        den.push_back({v - 1, v});
    return Decomposition{Plant(n - 1, den, num), delta, v};
}

RotatedPlant rotate_plant(const Plant &p)
{
    int n = p.degree();
    int sign = 1;
    auto rot = [&](const Diagonal &d) -> Diagonal {
        if (d.a == 0) {
            sign = -sign;
            return {d.b - 1, n};
        }
        return {d.a - 1, d.b - 1};
    };
    std::vector<Diagonal> den, num;
    for (const auto &d : p.denominators())
        den.push_back(rot(d));
    for (const auto &d : p.numerators())
        num.push_back(rot(d));
    return RotatedPlant{Plant(n, den, num), sign};
}

PlantSeries plant_counts_series(unsigned order)
{
    PowerSeries q(order), p(order);
    PowerSeries one = PowerSeries::constant(order, 1), x = PowerSeries::x(order);
    // Each pass fixes at least one more coefficient.
    for (unsigned pass = 0; pass <= order; ++pass) {
        p = q * (one - q).inverse();
        PowerSeries next = x * (one + p) * (one + p);
        PowerSeries qk = q * q;
        for (unsigned k = 3; k <= order; ++k) {
            qk = qk * q;
            next = next + qk.scaled(Rational((k + 1) * (k - 2) / 2));
        }
        q = next;
    }
    p = q * (one - q).inverse();
    return PlantSeries{p, q};
}

std::vector<ConjectureEntry> tamari_interval_conjecture_check(int n)
{
    TamariPoset poset(n);
    std::vector<ConjectureEntry> out;
    for (const auto &pl : enumerate_plants(n)) {
        if (!pl.is_tree())
            continue;
        Expansion e = expand_in_tree_basis(psi_plant(pl));
        bool free = std::all_of(e.terms.begin(), e.terms.end(), [](const auto &t) { return t.second == 1; });
        std::vector<BinaryTree> support;
        for (const auto &t : e.terms)
            support.push_back(t.first);
        out.push_back(ConjectureEntry{pl, e, free, poset.is_interval(support)});
    }
    return out;
}

bool hille_identity_check(int n)
{
    std::vector<RatFun> terms;
    for (const auto &t : enumerate_binary_trees(n))
        terms.push_back(psi_tree(t).value());
    std::vector<std::pair<Polynomial, unsigned>> den;
    for (int k = 1; k <= n; ++k)
        den.emplace_back(Polynomial::variable(Var::u(k)), 1);
    return sum(std::move(terms)) == RatFun::from_factors(Polynomial(1), den);
}

} // namespace mouldlab
