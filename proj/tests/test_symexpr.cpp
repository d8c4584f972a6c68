#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iso4d/matrix.hpp>
#include <iso4d/ratexpr.hpp>
#include <iso4d/rng.hpp>

using namespace iso4d;

static RationalExpr E(const std::string& s) { return parse_expr(s); }

TEST_CASE("normalize: canonical cancellation") {
    CHECK(E("(2*q)/2") == E("q"));
    CHECK(E("(q^2-1)/(q-1)") == E("q+1"));
    CHECK(E("(p+q)-(q+p)") == RationalExpr(0));
    CHECK(E("(q^2-1)/(q-1)").is_polynomial());
    // denominator leading coefficient is 1
    RationalExpr e = E("q/(3*t-6)");
    CHECK(e.den().leading().second == Rat(1));
}

TEST_CASE("differentiate") {
    Symbol q = sym("q"), p = sym("p"), t = sym("t"), x = sym("x");
    CHECK(E("q^2*p").derivative(q) == E("2*q*p"));
    CHECK(E("p^2-q^3-t*q").derivative(p) == E("2*p"));
    CHECK(E("1/(x-t)").derivative(x) == E("-1/((x-t)^2)"));
}

TEST_CASE("substitute") {
    Symbol q = sym("q"), eps = sym("eps"), t = sym("t"), qt = sym("qq");
    std::map<Symbol, RationalExpr> m{{q, E("1+eps*t*qq")}};
    CHECK(E("q^2").substitute(m) == E("(1+eps*t*qq)^2"));
    std::map<Symbol, RationalExpr> id{{q, RationalExpr(q)}};
    RationalExpr e = E("q^3/(q-1)");
    CHECK(e.substitute(id) == e);
    std::map<Symbol, RationalExpr> inv{{q, E("1/(1-eps*q)")}};
    CHECK(E("1/q").substitute(inv) == E("1-eps*q"));
}

TEST_CASE("eval_exact") {
    Symbol t = sym("t"), q = sym("q"), p = sym("p"), x = sym("x");
    std::map<int, Rat> pt{{t.id(), 1}, {q.id(), 2}, {p.id(), 3}};
    CHECK(E("p^2-q^3-t*q").eval_exact(pt) == Rat(-1));
    std::map<int, Rat> pt2{{x.id(), 5}, {t.id(), 5}};
    CHECK_THROWS_AS(E("1/(x-t)").eval_exact(pt2), pole_error);
    std::map<int, Rat> pt3{{q.id(), 3}, {p.id(), 1}};
    CHECK(E("(q-p)/(q+p)").eval_exact(pt3) == Rat(1, 2));
}

TEST_CASE("limit_at_zero") {
    Symbol eps = sym("eps");
    CHECK(E("(eps^2*q+eps*p)/eps").limit_at_zero(eps) == E("p"));
    CHECK(E("q+eps*t").limit_at_zero(eps) == E("q"));
    try {
        E("1/eps").limit_at_zero(eps);
        CHECK(false);
    } catch (const pole_order_error& e) {
        CHECK(e.order == 1);
    }
    // pole order through cancellation: eps/eps^3
    try {
        E("eps/(eps^3)").limit_at_zero(eps);
        CHECK(false);
    } catch (const pole_order_error& e) {
        CHECK(e.order == 2);
    }
}

TEST_CASE("strip_canonical_free") {
    Symbol q = sym("q"), p = sym("p");
    std::set<Symbol> vars{q, p};
    CHECK(E("p*q + t^2 + th/eps").strip_canonical_free(vars) == E("p*q"));
    RationalExpr e = E("p^2*q + q*t");
    CHECK(e.strip_canonical_free(vars) == e);
    CHECK(E("(th*t)/(t-1)").strip_canonical_free(vars) == RationalExpr(0));
    // monomial canonical denominator (III(D8)-style term)
    CHECK(E("(p^2*q^2+q*p-q-t/q)").strip_canonical_free(vars) ==
          E("p^2*q^2+q*p-q-t/q"));
    CHECK(E("(q*p+t*q)/q").strip_canonical_free(vars) == E("(q*p)/q"));
}

static RationalExpr random_expr(RatSampler& rs, int depth) {
    static const char* names[] = {"q", "p", "t", "th"};
    if (depth == 0) {
        if (rs.raw() % 2)
            return RationalExpr(sym(names[rs.raw() % 4]));
        return RationalExpr(rs.next());
    }
    RationalExpr a = random_expr(rs, depth - 1), b = random_expr(rs, depth - 1);
    switch (rs.raw() % 4) {
        case 0: return a + b;
        case 1: return a - b;
        case 2: return a * b;
        default: return b.is_zero() ? a : a / b;
    }
}

TEST_CASE("property: normalize idempotent on randomized expressions") {
    RatSampler rs(12345);
    for (int i = 0; i < 1000; ++i) {
        RationalExpr e = random_expr(rs, 3);
        // canonical form is a fixed point of re-normalization
        CHECK(RationalExpr(e.num(), e.den()) == e);
        CHECK(poly_gcd(e.num(), e.den()).is_constant());
    }
}

TEST_CASE("property: product and quotient rules") {
    RatSampler rs(777);
    Symbol q = sym("q");
    for (int i = 0; i < 50; ++i) {
        RationalExpr e = random_expr(rs, 2), f = random_expr(rs, 2);
        CHECK((e * f).derivative(q) == e * f.derivative(q) + f * e.derivative(q));
        if (!f.is_zero())
            CHECK((e / f).derivative(q) ==
                  (e.derivative(q) * f - e * f.derivative(q)) / (f * f));
    }
}

TEST_CASE("property: substitute commutes with eval") {
    RatSampler rs(99);
    Symbol q = sym("q"), p = sym("p"), t = sym("t"), th = sym("th");
    for (int i = 0; i < 100; ++i) {
        RationalExpr e = random_expr(rs, 2);
        RationalExpr g = random_expr(rs, 1);
        std::map<Symbol, RationalExpr> m{{q, g}};
        std::map<int, Rat> pt{{q.id(), rs.next()}, {p.id(), rs.next()},
                              {t.id(), rs.next()}, {th.id(), rs.next()}};
        try {
            Rat lhs = e.substitute(m).eval_exact(pt);
            std::map<int, Rat> pt2(pt);
            pt2[q.id()] = g.eval_exact(pt);
            CHECK(lhs == e.eval_exact(pt2));
        } catch (const pole_error&) {
            continue;  // sample hit a pole; property vacuous here
        }
    }
}

TEST_CASE("property: limit_at_zero agrees with small-eps evaluation") {
    RatSampler rs(4242);
    Symbol q = sym("q"), p = sym("p"), t = sym("t"), th = sym("th"), eps = sym("eps");
    int checked = 0;
    for (int i = 0; checked < 100 && i < 500; ++i) {
        RationalExpr base = random_expr(rs, 2);
        // build an eps-dependent expression regular at eps=0
        RationalExpr e = base + RationalExpr(eps) * random_expr(rs, 1);
        RationalExpr lim;
        try {
            lim = e.limit_at_zero(eps);
        } catch (const pole_order_error&) {
            continue;
        }
        std::map<int, Rat> pt{{q.id(), rs.next()}, {p.id(), rs.next()},
                              {t.id(), rs.next()}, {th.id(), rs.next()}};
        try {
            Rat expected = lim.eval_exact(pt);
            pt[eps.id()] = Rat(1, 1000000);
            Rat nearby = e.eval_exact(pt);
            // at eps=1e-6 the difference must be O(eps)
            Rat diff = abs(nearby - expected);
            CHECK(diff < Rat(1, 100));
            ++checked;
        } catch (const pole_error&) {
            continue;
        }
    }
    CHECK(checked >= 50);
}

TEST_CASE("matrix arithmetic and inverse") {
    Symbol a = sym("a"), b = sym("b");
    MatrixExpr m(2, 2, {E("1"), E("a"), E("b"), E("1+a*b")});
    MatrixExpr inv = m.inverse();
    CHECK((m * inv - MatrixExpr::identity(2)).is_zero());
    CHECK((inv * m - MatrixExpr::identity(2)).is_zero());
    MatrixExpr k = MatrixExpr::diagonal({E("1"), E("-1")});
    CHECK(commutator(k, k).is_zero());
    CHECK(m.trace() == E("2+a*b"));
}

TEST_CASE("parser round trip") {
    RatSampler rs(31337);
    for (int i = 0; i < 200; ++i) {
        RationalExpr e = random_expr(rs, 3);
        CHECK(parse_expr(to_string(e)) == e);
    }
}
