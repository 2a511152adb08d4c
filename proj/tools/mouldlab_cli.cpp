// Command-line front end; talks to the library only through the C API.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mouldlab/mouldlab.h"

namespace {

using nlohmann::json;

struct ExprDeleter {
    void operator()(mouldlab_expr *e) const { mouldlab_expr_free(e); }
};
using Expr = std::unique_ptr<mouldlab_expr, ExprDeleter>;

// Failure raised after a C call; carries the exit code.
struct Failure {
    int code;
    std::string message;
};

// Usage problems exit 2, everything else 1.
void check(mouldlab_status s)
{
    if (s == MOULDLAB_OK)
        return;
    bool usage = s == MOULDLAB_ERR_PARSE || s == MOULDLAB_ERR_INVALID_ARGUMENT || s == MOULDLAB_ERR_NULL_POINTER;
    throw Failure{usage ? 2 : 1, mouldlab_last_error()};
}

std::string take(char *s)
{
    std::string out(s);
    mouldlab_string_free(s);
    return out;
}

// "EXPR" or "N:EXPR" with an explicit arity.
Expr parse_expr(const std::string &arg)
{
    int arity = 0;
    std::string text = arg;
    auto colon = arg.find(':');
    if (colon != std::string::npos && colon > 0 &&
        arg.find_first_not_of("0123456789") == colon) {
        arity = std::stoi(arg.substr(0, colon));
        text = arg.substr(colon + 1);
    }
    mouldlab_expr *e = nullptr;
    check(mouldlab_expr_parse(text.c_str(), arity, &e));
    return Expr(e);
}

std::string expr_string(const mouldlab_expr *e)
{
    char *s = nullptr;
    check(mouldlab_expr_to_string(e, &s));
    return take(s);
}

std::string expr_json(const mouldlab_expr *e)
{
    char *s = nullptr;
    check(mouldlab_expr_to_json(e, &s));
    return take(s);
}

struct Globals {
    bool json = false;
    std::uint64_t seed = 1;
    int max_degree = 0;
};

void print_expr(const Globals &g, const mouldlab_expr *e)
{
    std::cout << (g.json ? expr_json(e) : expr_string(e)) << '\n';
}

// Runs a C call producing a JSON string and returns it parsed.
template <typename F>
json call_json(F &&f)
{
    char *s = nullptr;
    check(f(&s));
    return json::parse(take(s));
}

std::string join(const json &arr, const std::string &sep)
{
    std::string out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out += (i ? sep : "") + arr[i].get<std::string>();
    return out;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact computations with moulds, dendriform trees and non-crossing plants"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Print results as JSON");
    app.add_option("--seed", g.seed, "Seed for randomized checks")->envname("MOULDLAB_SEED");
    app.add_option("--max-degree", g.max_degree, "Override the degree caps of verification suites")
        ->check(CLI::PositiveNumber);
    app.set_version_flag("--version", std::string(mouldlab_version()));

    int exit_code = 0;
    std::function<void()> action;

    // eval
    auto *eval = app.add_subcommand("eval", "Parse, reduce and optionally evaluate an expression");
    std::string eval_expr, eval_at;
    eval->add_option("expr", eval_expr, "Expression, optionally prefixed by ARITY:")->required();
    eval->add_option("--at", eval_at, "Assignment such as u1=1,u2=3/2,t=2");
    eval->callback([&] {
        action = [&] {
            Expr e = parse_expr(eval_expr);
            if (eval_at.empty())
                return print_expr(g, e.get());
            char *s = nullptr;
            check(mouldlab_expr_evaluate(e.get(), eval_at.c_str(), &s));
            std::string v = take(s);
            std::cout << (g.json ? json{{"value", v}}.dump() : v) << '\n';
        };
    });

    // compose
    auto *compose = app.add_subcommand("compose", "Partial composition f o_i g");
    int compose_i = 1;
    std::string compose_f, compose_g;
    compose->add_option("-i", compose_i, "Slot index")->required();
    compose->add_option("f", compose_f)->required();
    compose->add_option("g", compose_g)->required();
    compose->callback([&] {
        action = [&] {
            Expr f = parse_expr(compose_f), h = parse_expr(compose_g);
            mouldlab_expr *r = nullptr;
            check(mouldlab_compose(f.get(), h.get(), compose_i, &r));
            print_expr(g, Expr(r).get());
        };
    });

    // product
    auto *product = app.add_subcommand("product", "Bilinear products of moulds");
    std::string product_op, product_f, product_g;
    product->add_option("--op", product_op, "Product name")
        ->required()
        ->check(CLI::IsMember({"succ", "prec", "mu", "limu", "arrow", "circ", "over", "under", "arit", "ari"}));
    product->add_option("f", product_f)->required();
    product->add_option("g", product_g)->required();
    product->callback([&] {
        action = [&] {
            Expr f = parse_expr(product_f), h = parse_expr(product_g);
            mouldlab_expr *r = nullptr;
            check(mouldlab_product(product_op.c_str(), f.get(), h.get(), &r));
            print_expr(g, Expr(r).get());
        };
    });

    // push, deriv
    auto *push = app.add_subcommand("push", "Anticyclic action");
    std::string push_f;
    push->add_option("f", push_f)->required();
    push->callback([&] {
        action = [&] {
            Expr f = parse_expr(push_f);
            mouldlab_expr *r = nullptr;
            check(mouldlab_push(f.get(), &r));
            print_expr(g, Expr(r).get());
        };
    });
    auto *deriv = app.add_subcommand("deriv", "Residue derivation");
    std::string deriv_f;
    deriv->add_option("f", deriv_f)->required();
    deriv->callback([&] {
        action = [&] {
            Expr f = parse_expr(deriv_f);
            mouldlab_expr *r = nullptr;
            check(mouldlab_derivation(f.get(), &r));
            print_expr(g, Expr(r).get());
        };
    });

    // check
    auto *checkc = app.add_subcommand("check", "Structural predicates; exit 1 when false");
    std::string check_kind, check_f;
    checkc->add_option("kind", check_kind)
        ->required()
        ->check(CLI::IsMember({"alternal", "vegetal", "homogeneous", "nice-poles"}));
    checkc->add_option("f", check_f)->required();
    checkc->callback([&] {
        action = [&] {
            Expr f = parse_expr(check_f);
            int ok = 0;
            check(mouldlab_check(check_kind.c_str(), f.get(), &ok));
            std::cout << (g.json ? json{{"check", check_kind}, {"result", ok != 0}}.dump()
                                 : std::string(ok ? "true" : "false"))
                      << '\n';
            exit_code = ok ? 0 : 1;
        };
    });

    // trees
    auto *trees = app.add_subcommand("trees", "Planar binary trees");
    trees->require_subcommand(1);
    auto *t_enum = trees->add_subcommand("enumerate", "All trees of a degree");
    int t_enum_n = 0;
    bool t_enum_planar = false;
    t_enum->add_option("n", t_enum_n)->required();
    t_enum->add_flag("--planar", t_enum_planar, "All planar trees instead of binary ones");
    t_enum->callback([&] {
        action = [&] {
            json a = call_json([&](char **s) { return mouldlab_trees_enumerate(t_enum_n, t_enum_planar, s); });
            if (g.json)
                std::cout << a.dump() << '\n';
            else
                for (const auto &t : a)
                    std::cout << t["tree"].get<std::string>() << '\n';
        };
    });
    auto *t_psi = trees->add_subcommand("psi", "Rational function of a tree");
    std::string t_psi_tree;
    t_psi->add_option("tree", t_psi_tree, "Bracket notation or JSON")->required();
    t_psi->callback([&] {
        action = [&] {
            mouldlab_expr *r = nullptr;
            check(mouldlab_tree_psi(t_psi_tree.c_str(), &r));
            print_expr(g, Expr(r).get());
        };
    });
    auto *t_pi = trees->add_subcommand("pi", "Tree of a permutation");
    std::string t_pi_sigma;
    t_pi->add_option("sigma", t_pi_sigma, "Digits (4163527) or comma-separated")->required();
    t_pi->callback([&] {
        action = [&] {
            char *s = nullptr;
            check(mouldlab_tree_pi(t_pi_sigma.c_str(), &s));
            std::string t = take(s);
            std::cout << (g.json ? json{{"tree", t}}.dump() : t) << '\n';
        };
    });
    auto *t_expand = trees->add_subcommand("expand", "Coefficients in the tree basis; exit 1 outside the span");
    std::string t_expand_f;
    t_expand->add_option("f", t_expand_f)->required();
    t_expand->callback([&] {
        action = [&] {
            Expr f = parse_expr(t_expand_f);
            json o = call_json([&](char **s) { return mouldlab_tree_expand(f.get(), g.seed, s); });
            if (g.json)
                std::cout << o.dump() << '\n';
            else
                for (const auto &[tree, c] : o.items())
                    std::cout << c.get<std::string>() << "  " << tree << '\n';
        };
    });
    auto *t_tamari = trees->add_subcommand("tamari", "Covering relations of the Tamari order");
    int t_tamari_n = 0;
    t_tamari->add_option("n", t_tamari_n)->required();
    t_tamari->callback([&] {
        action = [&] {
            json o = call_json([&](char **s) { return mouldlab_tamari(t_tamari_n, s); });
            if (g.json)
                return void(std::cout << o.dump() << '\n');
            const auto &ts = o["trees"];
            for (const auto &c : o["covers"])
                std::cout << ts[c[0].get<int>()].get<std::string>() << " < "
                          << ts[c[1].get<int>()].get<std::string>() << '\n';
        };
    });

    // plants
    auto *plants = app.add_subcommand("plants", "Non-crossing plants");
    plants->require_subcommand(1);
    auto *p_enum = plants->add_subcommand("enumerate", "All plants of a degree, as JSON lines");
    int p_enum_n = 0;
    bool p_enum_based = false;
    p_enum->add_option("n", p_enum_n)->required();
    p_enum->add_flag("--based", p_enum_based, "Only plants containing the base");
    p_enum->callback([&] {
        action = [&] {
            json a = call_json([&](char **s) { return mouldlab_plants_enumerate(p_enum_n, p_enum_based, s); });
            if (g.json)
                std::cout << a.dump() << '\n';
            else
                for (const auto &p : a)
                    std::cout << p.dump() << '\n';
        };
    });
    auto *p_count = plants->add_subcommand("count", "Number of plants and based plants");
    int p_count_n = 0;
    bool p_count_csv = false;
    p_count->add_option("n", p_count_n)->required();
    p_count->add_flag("--csv", p_count_csv, "Table n,plants,based for every degree up to n");
    p_count->callback([&] {
        action = [&] {
            if (p_count_csv)
                std::cout << "n,plants,based\n";
            json rows = json::array();
            for (int n = p_count_csv ? 1 : p_count_n; n <= p_count_n; ++n) {
                long long all = 0, based = 0;
                check(mouldlab_plants_count(n, &all, &based));
                if (g.json)
                    rows.push_back({{"n", n}, {"plants", all}, {"based", based}});
                else if (p_count_csv)
                    std::cout << n << ',' << all << ',' << based << '\n';
                else
                    std::cout << "plants=" << all << " based=" << based << '\n';
            }
            if (g.json)
                std::cout << (p_count_csv ? rows.dump() : rows[0].dump()) << '\n';
        };
    });
    auto *p_series = plants->add_subcommand("series", "Counting series P (all) and Q (based)");
    int p_series_order = 10;
    p_series->add_option("--order", p_series_order, "Truncation order");
    p_series->callback([&] {
        action = [&] {
            json o = call_json([&](char **s) { return mouldlab_plants_series(p_series_order, s); });
            if (g.json)
                return void(std::cout << o.dump() << '\n');
            std::cout << "P: " << join(o["P"], " ") << "\nQ: " << join(o["Q"], " ") << '\n';
        };
    });
    auto *p_graft = plants->add_subcommand("graft", "Graft plant G into side i of plant F");
    int p_graft_i = 1;
    std::string p_graft_f, p_graft_g;
    p_graft->add_option("-i", p_graft_i, "Side index")->required();
    p_graft->add_option("f", p_graft_f, "Plant JSON")->required();
    p_graft->add_option("g", p_graft_g, "Plant JSON")->required();
    p_graft->callback([&] {
        action = [&] {
            json o = call_json(
                [&](char **s) { return mouldlab_plants_graft(p_graft_f.c_str(), p_graft_g.c_str(), p_graft_i, s); });
            if (g.json)
                return void(std::cout << o.dump() << '\n');
            std::cout << o["plant"].dump() << '\n' << o["psi"].get<std::string>() << '\n';
        };
    });
    auto *p_conj = plants->add_subcommand("conjecture", "Tree-basis expansions of non-crossing trees");
    int p_conj_n = 0;
    p_conj->add_option("n", p_conj_n)->required();
    p_conj->callback([&] {
        action = [&] {
            json a = call_json([&](char **s) { return mouldlab_plants_conjecture(p_conj_n, s); });
            int good = 0;
            for (const auto &e : a)
                good += e["multiplicity_free"].get<bool>() && e["interval"].get<bool>();
            exit_code = good == static_cast<int>(a.size()) ? 0 : 1;
            if (g.json)
                return void(std::cout << a.dump() << '\n');
            for (const auto &e : a)
                std::cout << e["plant"].dump() << "  terms=" << e["expansion"].size()
                          << " coefficients-0/1=" << (e["multiplicity_free"].get<bool>() ? "yes" : "no")
                          << " interval=" << (e["interval"].get<bool>() ? "yes" : "no") << '\n';
            std::cout << good << " of " << a.size() << " trees have 0/1 expansions supported on a Tamari interval\n";
        };
    });

    // gallery
    auto *gallery = app.add_subcommand("gallery", "Named example moulds");
    gallery->require_subcommand(1);
    std::string gallery_name, gallery_t;
    int gallery_n = 0, gallery_p = 1, gallery_q = 0;
    for (const char *name : {"as", "ty", "weighted", "cm", "po"}) {
        auto *sub = gallery->add_subcommand(name, std::string("Component of degree n of ") + name);
        sub->add_option("n", gallery_n)->required();
        if (std::string(name) == "ty" || std::string(name) == "po")
            sub->add_option("--t", gallery_t, "Rational value of t (formal when omitted)");
        sub->callback([&, name] {
            gallery_name = name;
            action = [&] {
                mouldlab_expr *r = nullptr;
                check(mouldlab_gallery(gallery_name.c_str(), gallery_n, 1,
                                       gallery_t.empty() ? nullptr : gallery_t.c_str(), &r));
                print_expr(g, Expr(r).get());
            };
        });
    }
    auto *g_pq = gallery->add_subcommand("pq", "Sum over trees with the root at gap p, degree p+q");
    g_pq->add_option("p", gallery_p)->required();
    g_pq->add_option("q", gallery_q)->required();
    g_pq->callback([&] {
        action = [&] {
            mouldlab_expr *r = nullptr;
            check(mouldlab_gallery("pq", gallery_p + gallery_q, gallery_p, nullptr, &r));
            print_expr(g, Expr(r).get());
        };
    });

    // series
    auto *series = app.add_subcommand("series", "Generating series");
    series->require_subcommand(1);
    auto *s_forget = series->add_subcommand("forgetful", "Forgetful image of a gallery mould");
    std::string s_name, s_t;
    int s_order = 8;
    s_forget->add_option("name", s_name)->required()->check(CLI::IsMember({"as", "ty", "weighted", "cm", "po"}));
    s_forget->add_option("--order", s_order, "Truncation order");
    s_forget->add_option("--t", s_t, "Rational value of t (needed for ty and po)");
    s_forget->callback([&] {
        action = [&] {
            json a = call_json([&](char **s) {
                return mouldlab_forgetful(s_name.c_str(), s_order, s_t.empty() ? nullptr : s_t.c_str(), s);
            });
            std::cout << (g.json ? a.dump() : join(a, " ")) << '\n';
        };
    });

    // verify
    auto *verify = app.add_subcommand("verify", "Run verification suites; exit 1 on any failure");
    std::string verify_group;
    verify->add_option("group", verify_group)
        ->required()
        ->check(CLI::IsMember({"operad", "anticyclic", "dend", "tridend", "ncp", "derivation", "ari", "gallery", "all"}));
    verify->callback([&] {
        action = [&] {
            char *report = nullptr;
            int passed = 0;
            check(mouldlab_verify(verify_group.c_str(), g.seed, g.max_degree, g.json, &report, &passed));
            std::cout << take(report);
            if (g.json)
                std::cout << '\n';
            exit_code = passed ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (action)
            action();
    } catch (const Failure &f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
