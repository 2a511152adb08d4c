#include "mouldlab/mouldlab.h"

#include <cstring>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mouldlab/errors.hpp"
#include "mouldlab/gallery.hpp"
#include "mouldlab/operad.hpp"
#include "mouldlab/parse.hpp"
#include "mouldlab/plants.hpp"
#include "mouldlab/trees.hpp"
#include "mouldlab/verify.hpp"

using namespace mouldlab;
using nlohmann::json;

struct mouldlab_expr {
    int arity;
    RatFun value;
};

namespace {

thread_local std::string last_error;

struct NullPointer : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

mouldlab_status fail(mouldlab_status s, const std::string &msg)
{
    last_error = msg;
    return s;
}

// Runs body and maps exceptions to status codes.
mouldlab_status guarded(const std::function<void()> &body)
{
    try {
        body();
        last_error.clear();
        return MOULDLAB_OK;
    } catch (const NullPointer &e) {
        return fail(MOULDLAB_ERR_NULL_POINTER, e.what());
    } catch (const ParseError &e) {
        return fail(MOULDLAB_ERR_PARSE, e.what());
    } catch (const InvalidArgument &e) {
        return fail(MOULDLAB_ERR_INVALID_ARGUMENT, e.what());
    } catch (const DomainError &e) {
        return fail(MOULDLAB_ERR_DOMAIN, e.what());
    } catch (const json::exception &e) {
        return fail(MOULDLAB_ERR_PARSE, std::string("invalid JSON: ") + e.what());
    } catch (const std::exception &e) {
        return fail(MOULDLAB_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(MOULDLAB_ERR_INTERNAL, "unknown error");
    }
}

void require(const void *p, const char *what)
{
    if (!p)
        throw NullPointer(std::string("null pointer: ") + what);
}

char *copy_string(const std::string &s)
{
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

MouldComponent component(const mouldlab_expr *e)
{
    require(e, "expression");
    if (e->arity < 1)
        throw InvalidArgument("operation needs an arity of at least 1");
    return MouldComponent(e->arity, e->value);
}

mouldlab_expr *wrap(const MouldComponent &c)
{
    return new mouldlab_expr{c.arity(), c.value()};
}

Rational parse_constant(const std::string &text)
{
    RatFun v = parse_expression(text);
    if (!v.is_constant())
        throw InvalidArgument("expected a rational number, got '" + text + "'");
    return v.constant_value();
}

Var parse_variable(const std::string &name)
{
    if (name == "t")
        return Var::t();
    if (name == "x")
        return Var::x();
    if (name.size() >= 2 && name[0] == 'u' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
        int k = std::stoi(name.substr(1));
        if (k >= 1 && k <= 99)
            return Var::u(k);
    }
    throw InvalidArgument("unknown variable '" + name + "'");
}

// Syntax errors surface as parse errors, bad structure as invalid arguments.
Plant parse_plant(const char *text)
{
    json syntax = json::parse(text);
    (void)syntax;
    return Plant::parse_json(text);
}

json tree_json(const BinaryTree &t)
{
    if (t.is_leaf())
        return "L";
    return json::array({tree_json(t.left()), tree_json(t.right())});
}

json tree_json(const PlanarTree &t)
{
    if (t.is_leaf())
        return "L";
    json a = json::array();
    for (const auto &c : t.children())
        a.push_back(tree_json(c));
    return a;
}

// JSON nested arrays back to the bracket notation.
std::string tree_text_from_json(const json &j)
{
    if (j.is_string()) {
        if (j.get<std::string>() != "L")
            throw InvalidArgument("tree leaves must be \"L\"");
        return "L";
    }
    if (!j.is_array() || j.size() < 2)
        throw InvalidArgument("tree nodes must be arrays with at least two children");
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i)
        s += (i ? "," : "") + tree_text_from_json(j[i]);
    return s + ")";
}

std::string tree_text(const char *text)
{
    std::string s(text);
    auto first = s.find_first_not_of(" \t\n");
    if (first != std::string::npos && (s[first] == '[' || s[first] == '"'))
        return tree_text_from_json(json::parse(s));
    return s;
}

Permutation parse_permutation(const std::string &s)
{
    Permutation p;
    if (s.find(',') == std::string::npos && s.find('[') == std::string::npos) {
        for (char c : s)
            if (c >= '1' && c <= '9')
                p.push_back(c - '0');
            else if (c != ' ')
                throw InvalidArgument("permutation digits must be 1-9");
    } else {
        std::string body = s;
        for (char &c : body)
            if (c == '[' || c == ']' || c == ',')
                c = ' ';
        std::size_t pos = 0;
        while ((pos = body.find_first_not_of(' ', pos)) != std::string::npos) {
            std::size_t end = body.find(' ', pos);
            p.push_back(std::stoi(body.substr(pos, end - pos)));
            pos = end;
        }
    }
    if (!is_permutation(p))
        throw InvalidArgument("not a permutation of 1..n: '" + s + "'");
    return p;
}

json plant_json(const Plant &p)
{
    return json::parse(p.to_json());
}

const std::map<std::string, std::function<MouldComponent(const MouldComponent &, const MouldComponent &)>> &
products()
{
    static const std::map<std::string, std::function<MouldComponent(const MouldComponent &, const MouldComponent &)>>
        ops = {
            {"succ", succ},   {"prec", prec},   {"mu", mu},   {"limu", limu},  {"arrow", prelie_arrow},
            {"circ", prelie_circ}, {"over", over}, {"under", under}, {"arit", arit}, {"ari", ari},
        };
    return ops;
}

TParam parse_t(const char *t)
{
    if (!t)
        return std::nullopt;
    return parse_constant(t);
}

MouldComponent gallery_component(const std::string &name, int n, int p, const TParam &t)
{
    if (name == "as")
        return as_mould(n);
    if (name == "ty")
        return ty_mould(n, t);
    if (name == "pq")
        return pq_sum(p, n - p);
    if (name == "weighted")
        return weighted_mould(n);
    if (name == "cm")
        return cm_mould(n);
    if (name == "po")
        return po_mould(n, t);
    throw InvalidArgument("unknown gallery mould '" + name + "' (expected as, ty, pq, weighted, cm or po)");
}

} // namespace

extern "C" {

const char *mouldlab_version(void)
{
    return "0.1.0";
}

const char *mouldlab_last_error(void)
{
    return last_error.c_str();
}

void mouldlab_string_free(char *s)
{
    std::free(s);
}

mouldlab_status mouldlab_expr_parse(const char *text, int arity, mouldlab_expr **out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        RatFun v = parse_expression(text);
        int hi = v.highest_u_index();
        int a = arity > 0 ? arity : std::max(1, hi);
        *out = wrap(MouldComponent(a, v));
    });
}

void mouldlab_expr_free(mouldlab_expr *e)
{
    delete e;
}

int mouldlab_expr_arity(const mouldlab_expr *e)
{
    return e ? e->arity : -1;
}

mouldlab_status mouldlab_expr_to_string(const mouldlab_expr *e, char **out)
{
    return guarded([&] {
        require(e, "expression");
        require(out, "out");
        *out = copy_string(e->value.to_string());
    });
}

mouldlab_status mouldlab_expr_to_json(const mouldlab_expr *e, char **out)
{
    return guarded([&] {
        require(e, "expression");
        require(out, "out");
        *out = copy_string(json{{"arity", e->arity}, {"expr", e->value.to_string()}}.dump());
    });
}

mouldlab_status mouldlab_expr_equal(const mouldlab_expr *a, const mouldlab_expr *b, int *out)
{
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = a->arity == b->arity && a->value == b->value;
    });
}

mouldlab_status mouldlab_expr_evaluate(const mouldlab_expr *e, const char *assignment, char **out)
{
    return guarded([&] {
        require(e, "expression");
        require(assignment, "assignment");
        require(out, "out");
        Substitution s;
        std::string text(assignment);
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find(',', pos);
            if (end == std::string::npos)
                end = text.size();
            std::string item = text.substr(pos, end - pos);
            pos = end + 1;
            if (item.find_first_not_of(' ') == std::string::npos)
                continue;
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw InvalidArgument("assignment items look like u1=3, got '" + item + "'");
            std::string name = item.substr(0, eq);
            name.erase(0, name.find_first_not_of(' '));
            name.erase(name.find_last_not_of(' ') + 1);
            s.emplace_back(parse_variable(name), Polynomial(parse_constant(item.substr(eq + 1))));
        }
        *out = copy_string(e->value.substitute(s).to_string());
    });
}

mouldlab_status mouldlab_compose(const mouldlab_expr *f, const mouldlab_expr *g, int i, mouldlab_expr **out)
{
    return guarded([&] {
        require(out, "out");
        *out = wrap(compose_at(component(f), component(g), i));
    });
}

mouldlab_status mouldlab_product(const char *op, const mouldlab_expr *f, const mouldlab_expr *g, mouldlab_expr **out)
{
    return guarded([&] {
        require(op, "op");
        require(out, "out");
        auto it = products().find(op);
        if (it == products().end())
            throw InvalidArgument(std::string("unknown product '") + op +
                                  "' (expected succ, prec, mu, limu, arrow, circ, over, under, arit or ari)");
        *out = wrap(it->second(component(f), component(g)));
    });
}

mouldlab_status mouldlab_push(const mouldlab_expr *f, mouldlab_expr **out)
{
    return guarded([&] {
        require(out, "out");
        *out = wrap(push(component(f)));
    });
}

mouldlab_status mouldlab_derivation(const mouldlab_expr *f, mouldlab_expr **out)
{
    return guarded([&] {
        require(out, "out");
        MouldComponent c = component(f);
        if (c.arity() == 1)
            *out = new mouldlab_expr{0, derivation_constant(c)};
        else
            *out = wrap(derivation(c));
    });
}

mouldlab_status mouldlab_check(const char *check, const mouldlab_expr *f, int *out)
{
    return guarded([&] {
        require(check, "check");
        require(out, "out");
        MouldComponent c = component(f);
        std::string name(check);
        if (name == "alternal")
            *out = is_alternal(c);
        else if (name == "vegetal")
            *out = is_vegetal(c);
        else if (name == "homogeneous") {
            auto w = c.value().homogeneity_weight();
            *out = w && *w == -c.arity();
        } else if (name == "nice-poles")
            *out = c.value().has_nice_poles(c.arity());
        else
            throw InvalidArgument("unknown check '" + name + "' (expected alternal, vegetal, homogeneous or nice-poles)");
    });
}

mouldlab_status mouldlab_trees_enumerate(int n, int planar, char **out)
{
    return guarded([&] {
        require(out, "out");
        json a = json::array();
        if (planar) {
            for (const auto &t : enumerate_planar_trees(n))
                a.push_back({{"tree", t.to_string()}, {"json", tree_json(t)}});
        } else {
            for (const auto &t : enumerate_binary_trees(n))
                a.push_back({{"tree", t.to_string()}, {"json", tree_json(t)}});
        }
        *out = copy_string(a.dump());
    });
}

mouldlab_status mouldlab_tree_psi(const char *tree, mouldlab_expr **out)
{
    return guarded([&] {
        require(tree, "tree");
        require(out, "out");
        PlanarTree t = PlanarTree::parse(tree_text(tree));
        *out = wrap(psi_planar_tree(t));
    });
}

mouldlab_status mouldlab_tree_pi(const char *sigma, char **out)
{
    return guarded([&] {
        require(sigma, "sigma");
        require(out, "out");
        *out = copy_string(pi(parse_permutation(sigma)).to_string());
    });
}

mouldlab_status mouldlab_tree_expand(const mouldlab_expr *f, uint64_t seed, char **out)
{
    return guarded([&] {
        require(out, "out");
        ExpandOptions opts;
        opts.seed = seed;
        Expansion e = expand_in_tree_basis(component(f), opts);
        json o = json::object();
        for (const auto &[t, c] : e.terms)
            o[t.to_string()] = c.get_str();
        *out = copy_string(o.dump());
    });
}

mouldlab_status mouldlab_tamari(int n, char **out)
{
    return guarded([&] {
        require(out, "out");
        TamariPoset poset(n);
        json trees = json::array(), covers = json::array();
        for (const auto &t : poset.trees())
            trees.push_back(t.to_string());
        for (const auto &[a, b] : poset.covers())
            covers.push_back({poset.index_of(a), poset.index_of(b)});
        *out = copy_string(json{{"degree", n}, {"trees", trees}, {"covers", covers}}.dump());
    });
}

mouldlab_status mouldlab_plants_enumerate(int n, int based_only, char **out)
{
    return guarded([&] {
        require(out, "out");
        json a = json::array();
        for (const auto &p : enumerate_plants(n, based_only != 0))
            a.push_back(plant_json(p));
        *out = copy_string(a.dump());
    });
}

mouldlab_status mouldlab_plants_count(int n, long long *plants, long long *based)
{
    return guarded([&] {
        require(plants, "plants");
        require(based, "based");
        if (n < 1)
            throw InvalidArgument("plant degree must be at least 1");
        // The series gives the counts without enumerating.
        PlantSeries s = plant_counts_series(static_cast<unsigned>(n));
        *plants = s.all[n].get_num().get_si();
        *based = s.based[n].get_num().get_si();
    });
}

mouldlab_status mouldlab_plants_series(int order, char **out)
{
    return guarded([&] {
        require(out, "out");
        if (order < 1)
            throw InvalidArgument("series order must be at least 1");
        PlantSeries s = plant_counts_series(static_cast<unsigned>(order));
        json p = json::array(), q = json::array();
        for (int k = 0; k <= order; ++k) {
            p.push_back(s.all[k].get_str());
            q.push_back(s.based[k].get_str());
        }
        *out = copy_string(json{{"P", p}, {"Q", q}}.dump());
    });
}

mouldlab_status mouldlab_plants_graft(const char *f, const char *g, int i, char **out)
{
    return guarded([&] {
        require(f, "f");
        require(g, "g");
        require(out, "out");
        Plant pf = parse_plant(f), pg = parse_plant(g);
        for (const Plant *p : {&pf, &pg}) {
            std::string defect = plant_defect(*p);
            if (!defect.empty())
                throw InvalidArgument("invalid plant " + p->to_json() + ": " + defect);
        }
        Plant h = graft(pf, pg, i);
        *out = copy_string(json{{"plant", plant_json(h)}, {"psi", psi_plant(h).to_string()}}.dump());
    });
}

mouldlab_status mouldlab_plant_psi(const char *plant, mouldlab_expr **out)
{
    return guarded([&] {
        require(plant, "plant");
        require(out, "out");
        *out = wrap(psi_plant(parse_plant(plant)));
    });
}

mouldlab_status mouldlab_plants_conjecture(int n, char **out)
{
    return guarded([&] {
        require(out, "out");
        json a = json::array();
        for (const auto &e : tamari_interval_conjecture_check(n)) {
            json expansion = json::object();
            for (const auto &[t, c] : e.expansion.terms)
                expansion[t.to_string()] = c.get_str();
            a.push_back({{"plant", plant_json(e.tree)},
                         {"expansion", expansion},
                         {"multiplicity_free", e.multiplicity_free},
                         {"interval", e.is_interval}});
        }
        *out = copy_string(a.dump());
    });
}

mouldlab_status mouldlab_gallery(const char *name, int n, int p, const char *t, mouldlab_expr **out)
{
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        *out = wrap(gallery_component(name, n, p, parse_t(t)));
    });
}

mouldlab_status mouldlab_forgetful(const char *name, int order, const char *t, char **out)
{
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        std::string key(name);
        if (key == "pq")
            throw InvalidArgument("pq has no single forgetful series; use as, ty, weighted, cm or po");
        if ((key == "ty" || key == "po") && !t)
            throw InvalidArgument("the forgetful map of " + key + " needs a rational value of t");
        if (order < 1)
            throw InvalidArgument("series order must be at least 1");
        TParam tp = parse_t(t);
        Mould m = truncated_mould(order, [&](int k) { return gallery_component(key, k, 1, tp); });
        PowerSeries s = forgetful(m, static_cast<unsigned>(order));
        json a = json::array();
        for (const auto &c : s.coefficients())
            a.push_back(c.get_str());
        *out = copy_string(a.dump());
    });
}

mouldlab_status mouldlab_verify(const char *group, uint64_t seed, int max_degree, int as_json, char **report,
                                int *passed)
{
    return guarded([&] {
        require(group, "group");
        require(report, "report");
        require(passed, "passed");
        auto names = suites_in_group(group);
        if (names.empty())
            throw InvalidArgument(std::string("unknown verification group '") + group +
                                  "' (expected operad, anticyclic, dend, tridend, ncp, derivation, ari, gallery "
                                  "or all)");
        VerifyOptions opts;
        opts.seed = seed;
        if (max_degree > 0)
            opts.max_degree = max_degree;
        std::vector<SuiteReport> reports;
        for (const auto &name : names)
            reports.push_back(run_suite(name, opts));
        *passed = std::all_of(reports.begin(), reports.end(), [](const SuiteReport &r) { return r.passed(); });
        *report = copy_string(as_json ? report_json(reports) : report_text(reports));
    });
}

} // extern "C"
