#include <doctest.h>

#include <json.hpp>
#include <string>

#include "mouldlab/mouldlab.h"

using nlohmann::json;

namespace {

// Owns an expression handle for the duration of a test.
struct Expr {
    mouldlab_expr *p = nullptr;
    ~Expr() { mouldlab_expr_free(p); }
};

std::string take(char *s)
{
    std::string r = s ? s : "";
    mouldlab_string_free(s);
    return r;
}

std::string str(const mouldlab_expr *e)
{
    char *s = nullptr;
    REQUIRE(mouldlab_expr_to_string(e, &s) == MOULDLAB_OK);
    return take(s);
}

Expr parse(const char *text, int arity = 0)
{
    Expr e;
    REQUIRE(mouldlab_expr_parse(text, arity, &e.p) == MOULDLAB_OK);
    return e;
}

} // namespace

TEST_CASE("parse, print and compare")
{
    CHECK(std::string(mouldlab_version()).size() > 0);
    Expr e = parse("1/(u2*(u1+u2))");
    CHECK(mouldlab_expr_arity(e.p) == 2);
    CHECK(str(e.p) == "1/((u1+u2)*u2)");
    char *j = nullptr;
    REQUIRE(mouldlab_expr_to_json(e.p, &j) == MOULDLAB_OK);
    json doc = json::parse(take(j));
    CHECK(doc["arity"] == 2);
    CHECK(doc["expr"] == "1/((u1+u2)*u2)");

    Expr wide = parse("1/u1", 3);
    CHECK(mouldlab_expr_arity(wide.p) == 3);
    Expr same = parse("1/((u1+u2)*u2)");
    int eq = -1;
    CHECK(mouldlab_expr_equal(e.p, same.p, &eq) == MOULDLAB_OK);
    CHECK(eq == 1);
    char *v = nullptr;
    REQUIRE(mouldlab_expr_evaluate(e.p, "u1=1,u2=1/2", &v) == MOULDLAB_OK);
    CHECK(take(v) == "4/3");
    REQUIRE(mouldlab_expr_evaluate(e.p, "u2=1", &v) == MOULDLAB_OK);
    CHECK(take(v) == "1/(u1+1)");
}

TEST_CASE("error codes and messages")
{
    mouldlab_expr *e = nullptr;
    CHECK(mouldlab_expr_parse("1/(u1+", 0, &e) == MOULDLAB_ERR_PARSE);
    CHECK(e == nullptr);
    CHECK(std::string(mouldlab_last_error()).size() > 0);
    CHECK(mouldlab_expr_parse("1/(u1-u1)", 0, &e) == MOULDLAB_ERR_DOMAIN);
    CHECK(mouldlab_expr_parse("1/u3", 2, &e) == MOULDLAB_ERR_INVALID_ARGUMENT);
    CHECK(mouldlab_expr_parse(nullptr, 0, &e) == MOULDLAB_ERR_NULL_POINTER);
    CHECK(mouldlab_expr_parse("1/u1", 0, nullptr) == MOULDLAB_ERR_NULL_POINTER);
    Expr ok = parse("1/u1");
    CHECK(std::string(mouldlab_last_error()).empty());
    Expr f = parse("1/(u1*(u1+u2))");
    CHECK(mouldlab_compose(f.p, ok.p, 3, &e) == MOULDLAB_ERR_INVALID_ARGUMENT);
    CHECK(mouldlab_product("bogus", f.p, ok.p, &e) == MOULDLAB_ERR_INVALID_ARGUMENT);
    char *s = nullptr;
    Expr bad = parse("1/u2^2");
    CHECK(mouldlab_tree_expand(bad.p, 1, &s) == MOULDLAB_ERR_DOMAIN);
    CHECK(mouldlab_tree_pi("112", &s) == MOULDLAB_ERR_INVALID_ARGUMENT);
    CHECK(mouldlab_plants_graft("{\"n\":2", "{}", 1, &s) == MOULDLAB_ERR_PARSE);
    mouldlab_expr_free(nullptr);
    mouldlab_string_free(nullptr);
}

TEST_CASE("operations")
{
    Expr u = parse("1/u1");
    Expr l = parse("1/(u1*(u1+u2))");
    Expr out;
    REQUIRE(mouldlab_compose(l.p, l.p, 2, &out.p) == MOULDLAB_OK);
    CHECK(str(out.p) == "1/((u1+u2+u3)*u1*u2)");
    Expr sc;
    REQUIRE(mouldlab_product("succ", u.p, u.p, &sc.p) == MOULDLAB_OK);
    CHECK(str(sc.p) == "1/((u1+u2)*u1)");
    Expr mu;
    REQUIRE(mouldlab_product("mu", u.p, u.p, &mu.p) == MOULDLAB_OK);
    CHECK(str(mu.p) == "1/(u1*u2)");
    Expr pu;
    REQUIRE(mouldlab_push(l.p, &pu.p) == MOULDLAB_OK);
    CHECK(str(pu.p) == "1/((u1+u2)*u2)");
    Expr d;
    REQUIRE(mouldlab_derivation(l.p, &d.p) == MOULDLAB_OK);
    CHECK(str(d.p) == "1/u1");
    Expr c;
    REQUIRE(mouldlab_derivation(u.p, &c.p) == MOULDLAB_OK);
    CHECK(mouldlab_expr_arity(c.p) == 0);
    CHECK(str(c.p) == "1");
    int r = -1;
    CHECK(mouldlab_check("vegetal", l.p, &r) == MOULDLAB_OK);
    CHECK(r == 1);
    CHECK(mouldlab_check("alternal", mu.p, &r) == MOULDLAB_OK);
    CHECK(r == 0);
    CHECK(mouldlab_check("nice-poles", l.p, &r) == MOULDLAB_OK);
    CHECK(r == 1);
    CHECK(mouldlab_check("whatever", l.p, &r) == MOULDLAB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("trees and plants")
{
    char *s = nullptr;
    REQUIRE(mouldlab_trees_enumerate(3, 0, &s) == MOULDLAB_OK);
    CHECK(json::parse(take(s)).size() == 5);
    REQUIRE(mouldlab_trees_enumerate(3, 1, &s) == MOULDLAB_OK);
    CHECK(json::parse(take(s)).size() == 11);
    REQUIRE(mouldlab_tree_pi("4163527", &s) == MOULDLAB_OK);
    std::string example = take(s);
    CHECK(example == "((L,((L,L),L)),((L,L),(L,L)))");
    Expr psi;
    REQUIRE(mouldlab_tree_psi(example.c_str(), &psi.p) == MOULDLAB_OK);
    CHECK(str(psi.p) == "1/((u1+u2+u3+u4+u5+u6+u7)*(u1+u2+u3)*(u2+u3)*u2*(u5+u6+u7)*u5*u7)");
    Expr from_json;
    REQUIRE(mouldlab_tree_psi("[[\"L\",\"L\"],\"L\"]", &from_json.p) == MOULDLAB_OK);
    CHECK(str(from_json.p) == "1/((u1+u2)*u1)");
    Expr as2 = parse("1/(u1*u2)");
    REQUIRE(mouldlab_tree_expand(as2.p, 7, &s) == MOULDLAB_OK);
    json ex = json::parse(take(s));
    CHECK(ex.size() == 2);
    CHECK(ex["((L,L),L)"] == "1");
    REQUIRE(mouldlab_tamari(3, &s) == MOULDLAB_OK);
    json t = json::parse(take(s));
    CHECK(t["trees"].size() == 5);
    CHECK(t["covers"].size() == 5);

    long long plants = 0, based = 0;
    REQUIRE(mouldlab_plants_count(4, &plants, &based) == MOULDLAB_OK);
    CHECK(plants == 80);
    CHECK(based == 51);
    REQUIRE(mouldlab_plants_enumerate(3, 1, &s) == MOULDLAB_OK);
    CHECK(json::parse(take(s)).size() == 9);
    REQUIRE(mouldlab_plants_series(4, &s) == MOULDLAB_OK);
    CHECK(json::parse(take(s))["P"] == json({"0", "1", "3", "14", "80"}));
    const char *left = R"({"n":2,"denom":[[0,1],[0,2]],"numer":[]})";
    REQUIRE(mouldlab_plants_graft(left, left, 2, &s) == MOULDLAB_OK);
    CHECK(json::parse(take(s))["psi"] == "1/((u1+u2+u3)*u1*u2)");
    Expr pp;
    REQUIRE(mouldlab_plant_psi(left, &pp.p) == MOULDLAB_OK);
    CHECK(str(pp.p) == "1/((u1+u2)*u1)");
    REQUIRE(mouldlab_plants_conjecture(3, &s) == MOULDLAB_OK);
    for (const auto &e : json::parse(take(s))) {
        CHECK(e["multiplicity_free"] == true);
        CHECK(e["interval"] == true);
    }
}

TEST_CASE("gallery, series and verification")
{
    Expr cm;
    REQUIRE(mouldlab_gallery("cm", 3, 0, nullptr, &cm.p) == MOULDLAB_OK);
    CHECK(str(cm.p) == "(u1-2*u2+u3)/((u1+u2+u3)*u1*u2*u3)");
    Expr po;
    REQUIRE(mouldlab_gallery("po", 2, 0, nullptr, &po.p) == MOULDLAB_OK);
    CHECK(str(po.p) == "(u2*t+u1)/((u1+u2)*u1*u2)");
    Expr pq;
    REQUIRE(mouldlab_gallery("pq", 2, 1, nullptr, &pq.p) == MOULDLAB_OK);
    CHECK(str(pq.p) == "1/((u1+u2)*u2)");
    mouldlab_expr *e = nullptr;
    CHECK(mouldlab_gallery("nope", 2, 0, nullptr, &e) == MOULDLAB_ERR_INVALID_ARGUMENT);
    char *s = nullptr;
    REQUIRE(mouldlab_forgetful("po", 3, "3", &s) == MOULDLAB_OK);
    CHECK(json::parse(take(s)) == json({"0", "1", "2", "10/3"}));
    REQUIRE(mouldlab_forgetful("ty", 3, "2", &s) == MOULDLAB_OK);
    CHECK(json::parse(take(s)) == json({"0", "1", "3/2", "7/3"}));
    CHECK(mouldlab_forgetful("ty", 3, nullptr, &s) == MOULDLAB_ERR_INVALID_ARGUMENT);
    int passed = 0;
    REQUIRE(mouldlab_verify("operad", 1, 3, 1, &s, &passed) == MOULDLAB_OK);
    CHECK(passed == 1);
    CHECK(json::parse(take(s))["passed"] == true);
    CHECK(mouldlab_verify("nope", 1, 3, 0, &s, &passed) == MOULDLAB_ERR_INVALID_ARGUMENT);
}
