#pragma once
// 4x4 linear problems with the coupled 2x2-block structure.  Included at
// the end of laxpair.hpp via laxpair_data.hpp; do not include directly.

namespace iso4d {

namespace lax_detail {

// Symbolic total derivative d/dt along the Hamiltonian flow of lp.
inline RationalExpr total_dt(const RationalExpr& e, const LinearProblem& lp,
                             size_t ti) {
    RationalExpr r = e.derivative(lp.times[ti]);
    for (const auto& [v, rhs] : flow_field(lp, ti, lp.flow))
        r = r + e.derivative(v) * rhs;
    return r;
}

inline MatrixExpr m2(const RationalExpr& a, const RationalExpr& b,
                     const RationalExpr& c, const RationalExpr& d) {
    return MatrixExpr(2, 2, {a, b, c, d});
}

inline void build_sasano(std::vector<LinearProblem>& out) {
    const MatrixExpr I2 = MatrixExpr::identity(2);
    const MatrixExpr Z2(2, 2);
    const MatrixExpr E1d =
        M(4, {"1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0",
              "0", "0", "0"});
    const MatrixExpr E2I2 =
        M(4, {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0",
              "0", "0", "1"});
    auto E = [](const char* s) { return parse_expr(s); };

    {  // Ss:D6 — Fuchsian, four regular points; implicit gauge equations
        LinearProblem lp = from_catalog("Ss:D6", "Ss:D6", 4);
        RationalExpr one(1);
        RationalExpr f1 = E("(p1*(q2-q1)+th1+tht+thi2+thi3)/(thi3-thi4)");
        RationalExpr p12 = E("p1") + E("p2") * (one - f1);
        RationalExpr f2 =
            (E("p2*(q2-q1)-thi3") *
                 (E("p2") * (E("q1") * (one - f1) - E("q2")) + E("th1+thi3")) -
             E("p2*q1") * (p12 * E("q2-q1") + E("thi4") * f1)) /
            E("thi3-thi2");
        RationalExpr f3 =
            (p12 * (E("(thi3-thi4)*q1") * f1 +
                    E("(q1-q2)*(q1*p1+q2*p2-th1-thi3-thi4)")) +
             E("thi4*(th1+thi4)") * f1) /
            E("thi4-thi2");
        MatrixExpr B1 = m2(E("p2*q2-thi3"), E("-p2*(q2-q1)+thi3") + f2,
                           (one - f1) * E("p2*q2-thi4") + E("p1*q2"),
                           E("-(q2-q1)") * p12 - E("thi4") * f1 + f3);
        MatrixExpr C1 = m2(f1, one, f1 - one, one);
        MatrixExpr Bt = m2(E("t*p2"), f2, E("t") * p12, f3);
        MatrixExpr Ct = m2((E("q1") * (one - f1) - E("q2")) / E("t"),
                           E("-q1/t"), one - f1, -one);
        MatrixExpr A1 = sasano_pair(B1, E("th1") * I2 - C1 * B1, C1);
        MatrixExpr At = sasano_pair(Bt, E("tht") * I2 - Ct * Bt, Ct);
        RationalExpr qf = (E("q1") * f1 + E("q2-q1")) / E("t");
        MatrixExpr A0 = outer(
            exprs({"1", "0", "0", "0"}),
            {E("th0"),
             E("-(p1+p2)*(q2-q1)") + E("thi3-thi4") * f1 + f2 * (f1 - qf) +
                 f3 * (one - E("q1/t")),
             -f1 + qf, E("-1+q1/t")});
        lp.A = {term(A0, "1/x"), term(A1, "1/(x-1)"), term(At, "1/(x-t)")};
        lp.B = {{term(At, "-1/(x-t)")}};
        RationalExpr a2 =
            (C1 * B1 + Ct * Bt - E("th1+tht") * I2).at(1, 0);
        MatrixExpr M34 = B1 * (C1 * B1 - E("th1") * I2) +
                         Bt * (Ct * Bt - E("tht") * I2);
        RationalExpr a3 = M34.at(0, 0);
        RationalExpr a4 = M34.at(1, 0);
        FrameFactor P;
        P.chain = true;
        P.F = MatrixExpr::identity(4);
        P.F.at(1, 0) = a2 / E("thi1-thi2");
        P.F.at(2, 0) = a3 / E("thi1-thi3");
        P.F.at(3, 0) = a4 / E("thi1-thi4");
        RationalExpr u_rhs =
            (total_dt(a2, lp, 0) + E("(thi1-thi2)*p1")) / a2;
        RationalExpr v_rhs =
            (total_dt(a3, lp, 0) +
             E("thi1-thi3") *
                 (f2 * E("p1") + E("p2*(p1*q1+p2*q2+tht)"))) /
            a3;
        RationalExpr w_rhs =
            (total_dt(a4, lp, 0) +
             E("thi1-thi4") *
                 (f3 * E("p1") + p12 * E("p1*q1+p2*q2+tht"))) /
            a4;
        std::vector<std::vector<std::pair<Symbol, RationalExpr>>> odes = {
            {{sym("u"), u_rhs}, {sym("v"), v_rhs}, {sym("w"), w_rhs}}};
        lp.frame = {P, diag_gauge(lp, odes)};
        record_gauge(lp, odes);
        add_guards(lp, {"t", "t-1", "thi1-thi2", "thi1-thi3", "thi1-thi4",
                        "thi2-thi3", "thi2-thi4", "thi3-thi4"});
        lp.guards.push_back(a2);
        lp.guards.push_back(a3);
        lp.guards.push_back(a4);
        fuchsian_point(lp, "0", A0, {"0", "0", "0", "th0"});
        fuchsian_point(lp, "1", A1, {"0", "0", "th1", "th1"});
        fuchsian_point(lp, "t", At, {"0", "0", "tht", "tht"});
        fuchsian_point(lp, "infinity", -(A0 + A1 + At),
                       {"thi1", "thi2", "thi3", "thi4"});
        infinity_thetas(lp, {"thi1", "thi2", "thi3", "thi4"});
        out.push_back(std::move(lp));
    }

    {  // Ss:D5 — rank-one irregular x = 1, regular x = 0
        LinearProblem lp = from_catalog("Ss:D5", "Ss:D5", 4);
        const auto& sys = get_system("Ss:D5");
        RationalExpr one(1);
        RationalExpr f1 = E("(p1*(q2-q1)+th1+thi2+thi3)/(thi3-thi4)");
        RationalExpr p12 = E("p1") + E("p2") * (one - f1);
        RationalExpr f2 =
            E("(p2*((p2+t)*(q1-q2)+th1+thi2+thi3)+t*thi3)/(thi3-thi2)");
        RationalExpr f3 =
            (p12 * E("(p2+t)*(q1-q2)+th1+thi2+thi3") - E("t*thi4") * f1) /
            E("thi4-thi2");
        RationalExpr f4 = (E("p2") + f2) * E("q1-q2") +
                          (f1 * f2 + f3) * E("1-q1") + E("th1+thi2+thi3");
        MatrixExpr B1 = m2(E("p2"), f2, p12, f3);
        MatrixExpr C1 = m2(f1, one, f1 - one, one);
        MatrixExpr A1m1 = sasano_pair(B1, E("t") * I2 + C1 * B1, -C1);
        RationalExpr a12 = E("q1-1") * (f1 * f2 + f3) -
                           E("q1-q2") * (f2 + E("p2")) -
                           E("th1+thi2+thi3");
        RationalExpr a31 =
            (E("p2") + f2) * E("p1*(1-q1)") +
            E("p2*((t+p2)*(1-q2)-th0-thi1+thi3)+t*thi3") +
            f2 * E("th1+thi2+thi4");
        RationalExpr a41 =
            (E("p1") - (f1 - one) * E("p2")) *
                E("(p2+t)*(1-q2)+p1*(1-q1)-th0-thi1+thi4") -
            f3 * (E("p1*(q2-1)") - (f1 - one) * E("thi3-thi4")) -
            (f1 - one) * E("t*thi4");
        MatrixExpr A10(4, 4);
        A10.at(0, 0) = E("-th0-thi1");
        A10.at(0, 1) = a12;
        A10.at(0, 2) = f1 * E("1-q1") + E("q1-q2");
        A10.at(0, 3) = E("1-q1");
        A10.at(1, 0) = E("th1+thi2+thi4-p1*(q1-1)");
        A10.at(1, 1) = E("-thi2");
        A10.at(2, 0) = a31;
        A10.at(2, 2) = E("-thi3");
        A10.at(3, 0) = a41;
        A10.at(3, 3) = E("-thi4");
        MatrixExpr A00 = outer(exprs({"1", "0", "0", "0"}),
                               {E("th0"), f4, f1 * E("q1-1") + E("q2-q1"),
                                E("q1-1")});
        lp.A = {term(A1m1, "1/(x-1)^2"), term(A10, "1/(x-1)"),
                term(A00, "1/x")};
        lp.B = {{term(A1m1, "-1/(t*(x-1))")}};
        FrameFactor P;
        P.chain = true;
        P.F = MatrixExpr::identity(4);
        P.F.at(1, 0) = -A10.at(1, 0) / E("thi1-thi2");
        P.F.at(2, 0) = -a31 / E("thi1-thi3");
        P.F.at(3, 0) = -a41 / E("thi1-thi4");
        lp.frame = {P, diag_gauge(lp, sys.gauge_odes)};
        record_gauge(lp, sys.gauge_odes);
        add_guards(lp, {"t", "thi1-thi2", "thi1-thi3", "thi1-thi4",
                        "thi2-thi3", "thi2-thi4", "thi3-thi4"});
        fuchsian_point(lp, "0", A00, {"0", "0", "0", "th0"});
        irregular_point(lp, "1", A10);
        fuchsian_point(lp, "infinity", -(A10 + A00),
                       {"thi1", "thi2", "thi3", "thi4"});
        infinity_thetas(lp, {"thi1", "thi2", "thi3", "thi4"});
        out.push_back(std::move(lp));
    }

    {  // NY:A5, rank-four realization — regular 0 and 1, irregular infinity
        LinearProblem lp;
        lp.id = "NY:A5-4x4";
        lp.system_id = "NY:A5";
        lp.size = 4;
        lp.times = {sym("t")};
        lp.vars = {sym("q1"), sym("p1"), sym("q2"), sym("p2")};
        lp.params = {sym("th0"), sym("th1"), sym("thi1"), sym("thi2"),
                     sym("thi3"), sym("thi4")};
        lp.fuchs = parse_expr("th0+2*th1+thi1+thi2+thi3+thi4");
        lp.flow = {
            cat_detail::CH("V", {"th1+thi1", "th0+th1", "-th1"}, "t", "q1",
                           "p1") +
            cat_detail::CH("V", {"th1-thi1+thi2", "th0+th1", "thi1+thi4"},
                           "t", "q2", "p2") +
            E("2*p1*p2*q1*(q2-1)/t")};
        RationalExpr f1 = E("p1*q1*(q1-1)-thi1*q1");
        RationalExpr f2 = E("p2*q2*(q2-1)-(th1+thi2+thi4)*q2");
        RationalExpr f3 = E("q1*(p1*(q2-q1)+thi1)/q2");
        RationalExpr f4 = E("p2*q2") * f1 - E("p1*q1") * f2;
        RationalExpr f5 =
            E("(p2*q2*(q1-q2)+(th1+thi2+thi4)*q2)/((thi1-thi2)*q1)");
        RationalExpr one(1);
        std::vector<RationalExpr> c0 = {
            -f1 - E("p1*q1"), -f2 - E("p2*q2") + f5 * (f1 + E("p1*q1")), one,
            f2 / E("thi4-thi3")};
        std::vector<RationalExpr> r0 = {
            (-f2 + E("p2*(q2-1)*q1-th1-thi1-thi4")) / E("(thi1-thi2)*q1") +
                one,
            E("1-1/q2"),
            f1 - E("th1+thi3") + f2 * (f3 + E("th1+thi3")) / E("thi3-thi4"),
            f3 + E("th1+thi4")};
        MatrixExpr A0 = outer(c0, r0);
        MatrixExpr F(4, 2);
        F.at(0, 0) = -f1;
        F.at(0, 1) = -f3;
        F.at(1, 0) = (E("1-1/q1") * f4 + E("thi2") * f2) / E("thi1-thi2");
        F.at(1, 1) = (E("1/q1-1/q2") * f4 + E("(th1+thi1+thi4)*thi2")) /
                     E("thi1-thi2");
        F.at(2, 0) = one;
        F.at(3, 0) = f2 / E("thi4-thi3");
        F.at(3, 1) = one;
        MatrixExpr G(2, 4);
        G.at(0, 0) = -f5 - one;
        G.at(0, 1) = -one;
        G.at(0, 2) =
            f2 * (f3 + E("th1+thi3")) / E("thi4-thi3") - f1 + E("th1");
        G.at(0, 3) = -f3 - E("th1+thi4");
        G.at(1, 0) = -f5;
        G.at(1, 1) = -one;
        G.at(1, 2) = E("thi3") * f2 / E("thi4-thi3");
        G.at(1, 3) = E("-thi4");
        MatrixExpr A1 = F * G;
        MatrixExpr Ainf(4, 4);
        Ainf.at(2, 2) = E("-t");
        Ainf.at(3, 3) = E("-t");
        MatrixExpr S = A0 + A1;
        MatrixExpr B1h(4, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                B1h.at(i, j + 2) = S.at(i, j + 2) / E("t");
                B1h.at(i + 2, j) = S.at(i + 2, j) / E("t");
            }
        lp.A = {term(A0, "1/x"), term(A1, "1/(x-1)"), term(Ainf, "1")};
        lp.B = {{term(E2I2, "-x"), term(B1h, "1")}};
        std::vector<std::vector<std::pair<Symbol, RationalExpr>>> odes = {
            cat_detail::godes(
                // The source display has 2p1q1-th1-thi4 in the middle term of
                // the u equation; solving the deformation equations for the
                // frame forces 2p1q1-thi1-thi4 (as in the w equation), and
                // only that choice makes the residual vanish.
                {{"u",
                  "-(q1*q2*(p2-2*p1+thi2-thi1)+q1*(2*p1*q1-thi1-thi4)"
                  "-th1*q2)/(t*q1*q2)"},
                 {"v",
                  "(q1*p2*(1-2*q2)-2*p1*q1*(q1-1)"
                  "+(t+th1+2*thi1+thi2+thi4)*q1+th1)/(t*q1)"},
                 {"w",
                  "(q1*q2*(2*p1+t+thi1-thi4)-q1*(2*p1*q1-thi1-thi4)"
                  "+th1*q2)/(t*q1*q2)"}})};
        lp.frame = {diag_gauge(lp, odes)};
        record_gauge(lp, odes);
        add_guards(lp, {"t", "q1", "q2", "thi1-thi2", "thi3-thi4"});
        fuchsian_point(lp, "0", A0, {"0", "0", "0", "th0"});
        fuchsian_point(lp, "1", A1, {"0", "0", "th1", "th1"});
        infinity_thetas(lp, {"thi1", "thi2", "thi3", "thi4"});
        out.push_back(std::move(lp));
    }

    {  // Ss:D5, symmetric realization in the (lambda, mu) chart
        LinearProblem lp;
        lp.id = "Ss:D5-tilde";
        lp.system_id = "Ss:D5";
        lp.size = 4;
        lp.times = {sym("t")};
        lp.vars = {sym("lambda1"), sym("mu1"), sym("lambda2"), sym("mu2")};
        lp.params = {sym("th0"), sym("th1"), sym("thi1"), sym("thi2"),
                     sym("thi3"), sym("thi4")};
        lp.fuchs = parse_expr("2*th0+2*th1+thi1+thi2+thi3+thi4");
        lp.flow = {
            cat_detail::CH("V~",
                           {"-th1-thi2-thi3", "th0+thi2-thi3",
                            "-2*th0-th1-thi1-thi2"},
                           "t", "lambda1", "mu1") +
            cat_detail::CH("V~", {"th0", "th1", "thi3"}, "t", "lambda2",
                           "mu2") +
            E("2*mu2*lambda2*(lambda1-1)"
              "*(mu1*(lambda1-1)+th0+th1+thi1+thi3)/t")};
        RationalExpr one(1);
        RationalExpr f1 =
            E("(mu1*(lambda2-lambda1)+th0+th1+thi2+thi3)/(thi3-thi4)");
        RationalExpr f2 =
            E("(mu2*lambda2*(mu2*(lambda2-lambda1)-th1-2*thi3)"
              "-mu2*lambda1*(th0+thi2-thi3)+thi3*(th1+thi3))/(thi2-thi3)");
        RationalExpr f3 =
            ((E("lambda2") *
                  (E("mu2*(lambda1-lambda2)") + E("th1+thi3+thi4")) +
              E("(th0+thi2-thi4)*lambda1")) *
                 ((f1 - one) * E("mu2") - E("mu1")) -
             f1 * E("thi4*(th1+thi4)")) /
            E("thi2-thi4");
        MatrixExpr B0 = m2(E("mu2"), f2,
                           E("mu1") - (f1 - one) * E("mu2"), f3);
        MatrixExpr C0 = m2((one - f1) * E("lambda1") - E("lambda2"),
                           E("-lambda1"), one - f1, -one);
        MatrixExpr B1 =
            m2(E("mu2*lambda2-thi3"),
               f2 + E("mu2*(lambda1-lambda2)+thi3"),
               E("mu1*lambda2") + (one - f1) * E("mu2*lambda2-thi4"),
               f3 + E("(lambda1-lambda2)") *
                        (E("mu2") * (one - f1) + E("mu1")) -
                   f1 * E("thi4"));
        MatrixExpr C1 = m2(f1, one, f1 - one, one);
        MatrixExpr A0 = sasano_pair(B0, E("th0") * I2 - C0 * B0, C0);
        MatrixExpr A1 = sasano_pair(B1, E("th1") * I2 - C1 * B1, C1);
        MatrixExpr Ainf(4, 4);
        Ainf.at(0, 0) = E("-t");
        MatrixExpr S = A0 + A1;
        MatrixExpr Bh(4, 4);
        for (int k = 1; k < 4; ++k) {
            Bh.at(0, k) = S.at(0, k) / E("t");
            Bh.at(k, 0) = S.at(k, 0) / E("t");
        }
        lp.A = {term(A0, "1/x"), term(A1, "1/(x-1)"), term(Ainf, "1")};
        lp.B = {{term(E1d, "-x"), term(Bh, "1")}};
        std::vector<std::vector<std::pair<Symbol, RationalExpr>>> odes = {
            cat_detail::godes(
                {{"u",
                  "-((lambda1-1)*(2*mu2*lambda2+mu1*(lambda1-1)"
                  "-th1-thi3-thi4)+t-thi1+thi2)/t"},
                 {"v",
                  "-((lambda1-1)*(mu1*(lambda1-1)+th0+th1+thi1+thi3)"
                  "+lambda2*(2*mu2*(lambda2-1)-th1-2*thi3)"
                  "+t-th0-thi1+thi3)/t"},
                 {"w",
                  "-(2*(lambda1-1)*(mu1*lambda1+mu2*lambda2)"
                  "+lambda1*(th0+thi1-thi4)+t-2*th0-th1-2*thi1)/t"}})};
        lp.frame = {diag_gauge(lp, odes)};
        record_gauge(lp, odes);
        add_guards(lp, {"t", "thi2-thi3", "thi2-thi4", "thi3-thi4"});
        fuchsian_point(lp, "0", A0, {"0", "0", "th0", "th0"});
        fuchsian_point(lp, "1", A1, {"0", "0", "th1", "th1"});
        infinity_thetas(lp, {"thi1", "thi2", "thi3", "thi4"});
        out.push_back(std::move(lp));
    }

    {  // NY:A4, rank-four realization — regular 0, irregular infinity
        LinearProblem lp;
        lp.id = "NY:A4-4x4";
        lp.system_id = "NY:A4";
        lp.size = 4;
        lp.times = {sym("t")};
        lp.vars = {sym("q1"), sym("p1"), sym("q2"), sym("p2")};
        lp.params = {sym("th0"), sym("thi1"), sym("thi2"), sym("thi3"),
                     sym("thi4")};
        lp.fuchs = parse_expr("th0+thi1+thi2+thi3+thi4");
        // The source display writes the Hamiltonian as
        //   H_IV(thi2+thi4, -thi1-thi4; t; q1, p1)
        //   + H_IV(thi3, th0; t; q2, p2) + 2*q1*p1*p2.
        // Solving the deformation equations forces -thi2-thi3 in place of
        // -thi1-thi4 in the first summand and thi1 in place of thi3 in the
        // second; only that flow makes the residual vanish.
        lp.flow = {
            cat_detail::CH("IV", {"thi2+thi4", "-thi2-thi3"}, "t", "q1",
                           "p1") +
            cat_detail::CH("IV", {"thi1", "th0"}, "t", "q2", "p2") +
            E("2*q1*p1*p2")};
        RationalExpr one(1);
        RationalExpr f1 = E("p1*q1-thi2-thi4");
        RationalExpr f2 = E("p2*q2-thi1-thi4");
        RationalExpr f3 =
            E("((p1*q1-thi2-thi3)*(p2*q2-thi1-thi3)"
              "-p2*q1*(p1*q1-thi2-thi4))/(thi4-thi3)");
        RationalExpr f4 = (f1 - E("p1*q2")) / E("thi2-thi1");
        MatrixExpr Am2(4, 4);
        Am2.at(2, 2) = RationalExpr(-1);
        Am2.at(3, 3) = RationalExpr(-1);
        MatrixExpr Am1(4, 4);
        Am1.at(0, 2) =
            f4 * (f3 + E("thi3") - E("thi3") * f1 / E("thi3-thi4"));
        Am1.at(0, 3) = -f4 * (f2 - E("p2*q1") + E("thi4"));
        Am1.at(1, 2) = -f4 * (f3 + E("thi3")) +
                       E("thi3") * f1 * (f4 + one) / E("thi3-thi4");
        Am1.at(1, 3) = f4 * (f2 - E("p2*q1") + E("thi4")) + E("thi4");
        Am1.at(2, 0) = one + one / f4;
        Am1.at(2, 1) = one;
        Am1.at(2, 2) = E("t");
        Am1.at(3, 0) = f1 * (one + one / f4) / E("thi4-thi3") + one;
        Am1.at(3, 1) = f1 / E("thi4-thi3") + one;
        Am1.at(3, 3) = E("t");
        MatrixExpr A00 =
            outer({-E("p2") * f4, -E("p1") + E("p2") * f4, one,
                   f1 / E("thi4-thi3")},
                  {E("q1") + E("q2") / f4, E("q1"), f3,
                   E("p2*q1") - f2});
        MatrixExpr B1h(4, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                B1h.at(i, j + 2) = -Am1.at(i, j + 2);
                B1h.at(i + 2, j) = -Am1.at(i + 2, j);
            }
        lp.A = {term(Am2, "x"), term(Am1, "1"), term(A00, "1/x")};
        lp.B = {{term(E2I2, "x"), term(B1h, "1")}};
        RationalExpr g = E("(thi1-thi2)*p1") / (E("p1*q2") - f1);
        std::vector<std::vector<std::pair<Symbol, RationalExpr>>> odes = {
            {{sym("u"), g},
             {sym("v"), E("-q1-t") + g},
             {sym("w"), E("p1-t") + g}}};
        lp.frame = {diag_gauge(lp, odes)};
        record_gauge(lp, odes);
        add_guards(lp, {"thi1-thi2", "thi3-thi4",
                        "p1*q2-p1*q1+thi2+thi4"});
        fuchsian_point(lp, "0", A00, {"0", "0", "0", "th0"});
        infinity_thetas(lp, {"thi1", "thi2", "thi3", "thi4"});
        out.push_back(std::move(lp));
    }

    {  // Ss:D4 — rank-one irregular 0, rank-one irregular infinity
        LinearProblem lp = from_catalog("Ss:D4", "Ss:D4", 4);
        const auto& sys = get_system("Ss:D4");
        RationalExpr one(1);
        RationalExpr f1 = E("(-p1*(q1-q2)+th0+thi2+thi3)/(thi3-thi4)");
        RationalExpr p12 = (one - f1) * E("p2") + E("p1");
        RationalExpr f2 =
            E("((q1-q2)*p2*(1-p2)-p2*(th0+thi2+thi3)+thi3)/(thi2-thi3)");
        RationalExpr f3 =
            (p12 * E("(q1-q2)*(p2-1)+th0+thi2+thi3") + f1 * E("thi4")) /
            E("thi4-thi2");
        RationalExpr a12 = f3 * E("q1") + E("p2*(q2-q1)") +
                           f2 * ((f1 - one) * E("q1") + E("q2")) -
                           E("th0+thi2+thi3");
        RationalExpr a31 =
            E("p2*(thi3-thi1)+p2*q2*(1-p2)") -
            E("p1*q1") * (f2 + E("p2")) - E("thi3") +
            f2 * E("th0+thi2+thi4");
        RationalExpr a41 =
            E("p1*q1+(p2-1)*q2+thi1-thi4") * ((f1 - one) * E("p2") - E("p1")) +
            f3 * E("-p1*q1+th0+thi2+thi4") + (f1 - one) * E("thi4");
        MatrixExpr A00(4, 4);
        A00.at(0, 0) = E("-thi1");
        A00.at(0, 1) = a12;
        A00.at(0, 2) = (one - f1) * E("q1") - E("q2");
        A00.at(0, 3) = E("-q1");
        A00.at(1, 0) = E("-p1*q1+th0+thi2+thi4");
        A00.at(1, 1) = E("-thi2");
        A00.at(2, 0) = a31;
        A00.at(2, 2) = E("-thi3");
        A00.at(3, 0) = a41;
        A00.at(3, 3) = E("-thi4");
        MatrixExpr B0 = m2(E("p2"), f2, p12, f3);
        MatrixExpr C0 = m2(f1, one, f1 - one, one);
        MatrixExpr A0m1 = sasano_pair(B0, I2 - C0 * B0, C0);
        MatrixExpr Ainf(4, 4);
        Ainf.at(0, 0) = E("-t");
        // The source display builds B from the entries of A_0^(-1); the
        // constant part of the compatibility equation forces the entries of
        // A_0^(0) instead, and only that choice makes the residual vanish.
        MatrixExpr Bh(4, 4);
        for (int k = 1; k < 4; ++k) {
            Bh.at(0, k) = A00.at(0, k) / E("t");
            Bh.at(k, 0) = A00.at(k, 0) / E("t");
        }
        lp.A = {term(A0m1, "1/x^2"), term(A00, "1/x"), term(Ainf, "1")};
        lp.B = {{term(E1d, "-x"), term(Bh, "1")}};
        lp.frame = {diag_gauge(lp, sys.gauge_odes)};
        record_gauge(lp, sys.gauge_odes);
        add_guards(lp, {"t", "thi2-thi3", "thi2-thi4", "thi3-thi4"});
        irregular_point(lp, "0", A00);
        infinity_thetas(lp, {"thi1", "thi2", "thi3", "thi4"});
        out.push_back(std::move(lp));
    }
}

}  // namespace lax_detail

}  // namespace iso4d
