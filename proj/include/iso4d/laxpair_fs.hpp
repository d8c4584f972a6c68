#pragma once
// 3x3 linear problems.  Included at the end of laxpair.hpp via
// laxpair_data.hpp; do not include directly.  Matrices are stored in the
// hat frame (see laxpair.hpp).

namespace iso4d {

namespace lax_detail {

// Lower-triangular conjugator bringing the residue at infinity to diagonal
// form; a, b, c are the subdiagonal data of that residue.
inline MatrixExpr p_chain3(const RationalExpr& a, const RationalExpr& b,
                           const RationalExpr& c) {
    MatrixExpr P = MatrixExpr::identity(3);
    RationalExpr d12 = parse_expr("thi1-thi2");
    RationalExpr d13 = parse_expr("thi1-thi3");
    RationalExpr d23 = parse_expr("thi2-thi3");
    P.at(1, 0) = a / d12;
    P.at(2, 0) = (b + a * c / d12) / d13;
    P.at(2, 1) = c / d23;
    return P;
}

inline void build_fs(std::vector<LinearProblem>& out) {
    using cat_detail::CH;
    const MatrixExpr E2 = M(3, {"0", "0", "0", "0", "1", "0", "0", "0", "0"});
    const MatrixExpr E3 = M(3, {"0", "0", "0", "0", "0", "0", "0", "0", "1"});

    {  // FS:A5 — Fuchsian, four regular points
        LinearProblem lp = from_catalog("FS:A5", "FS:A5", 3);
        const auto& sys = get_system("FS:A5");
        MatrixExpr A0 = M(3, {"th01", "q1/t-1", "q2/t-1",
                              "0", "th02", "p1*(q2-q1)+thi2+th02",
                              "0", "0", "0"});
        MatrixExpr At = outer({"1", "t*p1", "t*p2"},
                              {"tht+p1*q1+p2*q2", "-q1/t", "-q2/t"});
        MatrixExpr A1 = outer({"1", "p1*q1-thi2-th02", "p2*q2-thi3"},
                              {"-p1*q1-p2*q2-th01-tht-thi1", "1", "1"});
        lp.A = {term(A0, "1/x"), term(A1, "1/(x-1)"), term(At, "1/(x-t)")};
        lp.B = {{term(At, "-1/(x-t)")}};
        RationalExpr a = parse_expr(
            "-t*p1*(p1*q1+p2*q2+tht)"
            "+(p1*q1-th02-thi2)*(p1*q1+p2*q2+th01+tht+thi1)");
        RationalExpr b = parse_expr(
            "-t*p2*(p1*q1+p2*q2+tht)"
            "+(p2*q2-thi3)*(p1*q1+p2*q2+th01+tht+thi1)");
        RationalExpr c = parse_expr("p2*(q1-q2)+thi3");
        FrameFactor P;
        P.chain = true;
        P.F = p_chain3(a, b, c);
        lp.frame = {P, diag_gauge(lp, sys.gauge_odes)};
        record_gauge(lp, sys.gauge_odes);
        add_guards(lp, {"t", "t-1", "thi1-thi2", "thi1-thi3", "thi2-thi3"});
        fuchsian_point(lp, "0", A0, {"0", "th01", "th02"});
        fuchsian_point(lp, "1", A1, {"0", "0", "th1"});
        fuchsian_point(lp, "t", At, {"0", "0", "tht"});
        fuchsian_point(lp, "infinity", -(A0 + A1 + At), {"thi1", "thi2", "thi3"});
        infinity_thetas(lp, {"thi1", "thi2", "thi3"});
        out.push_back(std::move(lp));
    }

    {  // NY:A5 — rank-one irregular point at x = 1
        LinearProblem lp = from_catalog("NY:A5", "NY:A5", 3);
        const auto& sys = get_system("NY:A5");
        MatrixExpr A00 = M(3, {"th01", "t*(q2-1)", "t*(q1-1)",
                               "0", "th02", "p2*(q1-q2)+th02+thi2",
                               "0", "0", "0"});
        MatrixExpr A1m1 = outer({"1", "p2/t", "p1/t"}, {"p1+p2+t", "-t", "-t"});
        RationalExpr a = parse_expr(
            "(p2*(q2-1)*(p1+p2+t)-(th02+thi2)*(p1+t)"
            "-(2*th02+th1+2*thi2+thi3)*p2)/t");
        RationalExpr b = parse_expr(
            "(p1*(q1-1)*(p1+p2+t)-thi3*(p2+t)"
            "-(th02+th1+thi2+2*thi3)*p1)/t");
        RationalExpr c = parse_expr("p1*(q2-q1)+thi3");
        MatrixExpr A10(3, 3);
        A10.at(0, 0) = parse_expr("th02+th1+thi2+thi3");
        A10.at(0, 1) = parse_expr("t*(1-q2)");
        A10.at(0, 2) = parse_expr("t*(1-q1)");
        A10.at(1, 0) = -a;
        A10.at(1, 1) = parse_expr("-th02-thi2");
        A10.at(1, 2) = parse_expr("p2*(q2-q1)-th02-thi2");
        A10.at(2, 0) = -b;
        A10.at(2, 1) = parse_expr("p1*(q1-q2)-thi3");
        A10.at(2, 2) = parse_expr("-thi3");
        lp.A = {term(A1m1, "1/(x-1)^2"), term(A10, "1/(x-1)"),
                term(A00, "1/x")};
        lp.B = {{term(A1m1, "-1/(t*(x-1))")}};
        FrameFactor P;
        P.chain = true;
        P.F = p_chain3(a, b, c);
        lp.frame = {P, diag_gauge(lp, sys.gauge_odes)};
        record_gauge(lp, sys.gauge_odes);
        add_guards(lp, {"t", "thi1-thi2", "thi1-thi3", "thi2-thi3"});
        fuchsian_point(lp, "0", A00, {"0", "th01", "th02"});
        irregular_point(lp, "1", A10);
        fuchsian_point(lp, "infinity", -(A10 + A00), {"thi1", "thi2", "thi3"});
        infinity_thetas(lp, {"thi1", "thi2", "thi3"});
        out.push_back(std::move(lp));
    }

    {  // FS:A4 — rank-one irregular point at x = 0, regular x = 1
        LinearProblem lp = from_catalog("FS:A4", "FS:A4", 3);
        const auto& sys = get_system("FS:A4");
        MatrixExpr A1 = outer({"1", "-p1*q1", "-p2*q2"},
                              {"p1*q1+p2*q2+th1", "1", "1"});
        MatrixExpr A0m1 = outer({"1", "0", "0"}, {"t", "-1/q1", "-1/q2"});
        MatrixExpr A00 = M(3, {"-p1*q1-p2*q2-th1-thi1", "-1", "-1",
                               "-t*q1*(p1*q1-th01-thi2)", "p1*q1-thi2", "p1*q1",
                               "-t*q2*(p2*q2-thi3)", "q2*(p2*q2-thi3)/q1",
                               "p2*q2-thi3"});
        lp.A = {term(A0m1, "1/x^2"), term(A00, "1/x"), term(A1, "1/(x-1)")};
        lp.B = {{term(A0m1, "-1/(t*x)")}};
        RationalExpr a =
            parse_expr("t*q1*(p1*q1-th01-thi2)+p1*q1*(p1*q1+p2*q2+th1)");
        RationalExpr b =
            parse_expr("t*q2*(p2*q2-thi3)+p2*q2*(p1*q1+p2*q2+th1)");
        RationalExpr c = parse_expr("-q2*(p2*q2-thi3)*(1/q1-1/q2)+thi3");
        FrameFactor P;
        P.chain = true;
        P.F = p_chain3(a, b, c);
        lp.frame = {P, diag_gauge(lp, sys.gauge_odes)};
        record_gauge(lp, sys.gauge_odes);
        add_guards(lp, {"t", "q1", "q2", "thi1-thi2", "thi1-thi3", "thi2-thi3"});
        irregular_point(lp, "0", A00);
        fuchsian_point(lp, "1", A1, {"0", "0", "th1"});
        fuchsian_point(lp, "infinity", -(A00 + A1), {"thi1", "thi2", "thi3"});
        infinity_thetas(lp, {"thi1", "thi2", "thi3"});
        out.push_back(std::move(lp));
    }

    {  // Gar:2+1+1+1, rank-three realization — regular 0, 1; irregular infinity
        LinearProblem lp;
        lp.id = "Gar:2+1+1+1-3x3";
        lp.system_id = "Gar:2+1+1+1";
        lp.size = 3;
        lp.times = {sym("t1"), sym("t2")};
        lp.vars = {sym("q1"), sym("p1"), sym("q2"), sym("p2")};
        lp.params = {sym("th0"), sym("th1"), sym("thi1"), sym("thi2"),
                     sym("thi3")};
        lp.fuchs = parse_expr("th0+th1+thi1+thi2+thi3");
        lp.flow = {
            CH("V", {"th1+thi2", "th0+th1", "-th1"}, "t1", "q1", "p1") +
                parse_expr("(p1/t1)*(thi3*(q1-q2)+p2*q2*(q2-1))"
                           "+((q1-q2)*p1-thi2)*((q2-q1)*p2-thi3)/(t1-t2)"),
            CH("V", {"th1+thi3", "th0+th1", "-th1"}, "t2", "q2", "p2") +
                parse_expr("(p2/t2)*(thi2*(q2-q1)+p1*q1*(q1-1))"
                           "+((q2-q1)*p2-thi3)*((q1-q2)*p1-thi2)/(t2-t1)")};
        auto ch = cat_detail::chart({{"lambda1", "1-1/q1"},
                                     {"lambda2", "1-1/q2"},
                                     {"mu1", "q1*(p1*q1-thi2)"},
                                     {"mu2", "q2*(p2*q2-thi3)"}});
        MatrixExpr A00 = outer({"1", "mu1", "mu2"},
                               {"mu1*lambda1+mu2*lambda2+th0", "-lambda1",
                                "-lambda2"})
                             .substitute(ch);
        MatrixExpr A10 = outer({"1", "mu1*lambda1-thi2", "mu2*lambda2-thi3"},
                               {"-mu1*lambda1-mu2*lambda2+th1+thi2+thi3", "1",
                                "1"})
                             .substitute(ch);
        MatrixExpr Ainf =
            M(3, {"0", "0", "0", "0", "t1", "0", "0", "0", "t2"});
        MatrixExpr S = A00 + A10;
        MatrixExpr B1h(3, 3), B2h(3, 3);
        B1h.at(0, 1) = S.at(0, 1) / parse_expr("t1");
        B1h.at(1, 0) = S.at(1, 0) / parse_expr("t1");
        B1h.at(1, 2) = S.at(1, 2) / parse_expr("t1-t2");
        B1h.at(2, 1) = S.at(2, 1) / parse_expr("t1-t2");
        B2h.at(0, 2) = S.at(0, 2) / parse_expr("t2");
        B2h.at(2, 0) = S.at(2, 0) / parse_expr("t2");
        B2h.at(1, 2) = S.at(1, 2) / parse_expr("t2-t1");
        B2h.at(2, 1) = S.at(2, 1) / parse_expr("t2-t1");
        lp.A = {term(Ainf, "1"), term(A00, "1/x"), term(A10, "1/(x-1)")};
        lp.B = {{term(E2, "x"), term(B1h, "1")},
                {term(E3, "x"), term(B2h, "1")}};
        std::vector<std::vector<std::pair<Symbol, RationalExpr>>> odes = {
            cat_detail::godes(
                {{"u",
                  "(2*p1*q1*(q1-1)-(2*thi2+t1)*q1-p2*q2-th1"
                  "+(p2*q2*(t1*q1-t2*q2)+thi3*t2*q2)/(t1-t2))/(t1*q1)"},
                 {"v",
                  "((-p1*q1*(t1*q1+(t2-2*t1)*q2)+thi2*t1*q1)/(t1-t2)"
                  "-(p1+thi2)*q2)/(t1*q2)"}}),
            cat_detail::godes(
                {{"u",
                  "((p2*q2*(t2*q2+(t1-2*t2)*q1)-thi3*t2*q2)/(t1-t2)"
                  "-(p2+thi3)*q1)/(t2*q1)"},
                 {"v",
                  "(2*p2*q2*(q2-1)-(2*thi3+t2)*q2-p1*q1-th1"
                  "-(p1*q1*(t2*q2-t1*q1)+thi2*t1*q1)/(t1-t2))/(t2*q2)"}})};
        lp.frame = {diag_gauge(lp, odes)};
        record_gauge(lp, odes);
        add_guards(lp, {"t1", "t2", "t1-t2", "q1", "q2"});
        fuchsian_point(lp, "0", A00, {"0", "0", "th0"});
        fuchsian_point(lp, "1", A10, {"0", "0", "th1"});
        infinity_thetas(lp, {"thi1", "thi2", "thi3"});
        out.push_back(std::move(lp));
    }

    {  // NY:A4 — single irregular point at x = 0
        LinearProblem lp = from_catalog("NY:A4", "NY:A4", 3);
        const auto& sys = get_system("NY:A4");
        MatrixExpr A0m2 = outer({"1", "0", "0"}, {"1", "1", "1"});
        MatrixExpr A0m1 = M(3, {"p1+p2-t", "q2", "q1",
                                "-p2", "-p2", "-p2",
                                "-p1", "-p1", "-p1"});
        RationalExpr a = parse_expr("p2*(p2-q2-t)+p1*p2+th01+thi2");
        RationalExpr b = parse_expr("p1*(p1-q1-t)+p1*p2+thi3");
        RationalExpr c = parse_expr("p1*(q2-q1)+thi3");
        MatrixExpr A00(3, 3);
        A00.at(0, 0) = parse_expr("-thi1");
        A00.at(1, 0) = -a;
        A00.at(1, 1) = parse_expr("-thi2");
        A00.at(2, 0) = -b;
        A00.at(2, 1) = -c;
        A00.at(2, 2) = parse_expr("-thi3");
        lp.A = {term(A0m2, "1/x^3"), term(A0m1, "1/x^2"), term(A00, "1/x")};
        lp.B = {{term(A0m2, "1/x")}};
        FrameFactor P;
        P.chain = true;
        P.F = p_chain3(a, b, c);
        lp.frame = {P, diag_gauge(lp, sys.gauge_odes)};
        record_gauge(lp, sys.gauge_odes);
        add_guards(lp, {"thi1-thi2", "thi1-thi3", "thi2-thi3"});
        irregular_point(lp, "0", A00);
        fuchsian_point(lp, "infinity", -A00, {"thi1", "thi2", "thi3"});
        infinity_thetas(lp, {"thi1", "thi2", "thi3"});
        out.push_back(std::move(lp));
    }

    {  // Gar:3+1+1, rank-three realization — regular 0, irregular infinity
        LinearProblem lp;
        lp.id = "Gar:3+1+1-3x3";
        lp.system_id = "Gar:3+1+1";
        lp.size = 3;
        lp.times = {sym("t1"), sym("t2")};
        lp.vars = {sym("q1"), sym("p1"), sym("q2"), sym("p2")};
        lp.params = {sym("th0"), sym("thi1"), sym("thi2"), sym("thi3")};
        lp.fuchs = parse_expr("th0+thi1+thi2+thi3");
        lp.flow = {
            CH("IV", {"thi2", "th0"}, "t1", "q1", "p1") +
                parse_expr("p2*q2*p1+(p1*(q1-q2)-thi2)*(p2*(q2-q1)-thi3)"
                           "/(t1-t2)"),
            CH("IV", {"thi3", "th0"}, "t2", "q2", "p2") +
                parse_expr("p1*q1*p2+(p1*(q1-q2)-thi2)*(p2*(q2-q1)-thi3)"
                           "/(t2-t1)")};
        MatrixExpr Am2 = M(3, {"0", "0", "0", "0", "1", "0", "0", "0", "1"});
        MatrixExpr Am1 = M(3, {"0", "-1", "-1",
                               "-p1*q1+thi2", "-t1", "0",
                               "-p2*q2+thi3", "0", "-t2"});
        MatrixExpr A00 = outer({"1", "p1", "p2"},
                               {"p1*q1+p2*q2+th0", "-q1", "-q2"});
        MatrixExpr B1h = M(3, {"0", "1", "0",
                               "p1*q1-thi2", "0",
                               "(p1*(q1-q2)-thi2)/(t1-t2)",
                               "0", "(p2*(q2-q1)-thi3)/(t1-t2)", "0"});
        MatrixExpr B2h = M(3, {"0", "0", "1",
                               "0", "0", "(p1*(q1-q2)-thi2)/(t2-t1)",
                               "p2*q2-thi3", "(p2*(q2-q1)-thi3)/(t2-t1)",
                               "0"});
        lp.A = {term(Am2, "x"), term(Am1, "1"), term(A00, "1/x")};
        lp.B = {{term(E2, "-x"), term(B1h, "1")},
                {term(E3, "-x"), term(B2h, "1")}};
        std::vector<std::vector<std::pair<Symbol, RationalExpr>>> odes = {
            cat_detail::godes(
                {{"u", "(p2*(q1-q2)+(t1-t2)*(q1+t1)+thi3)/(t1-t2)"},
                 {"v", "(p1*(q2-q1)+thi2)/(t1-t2)"}}),
            cat_detail::godes(
                {{"u", "(p2*(q1-q2)+thi3)/(t2-t1)"},
                 {"v", "(p1*(q2-q1)+(t2-t1)*(q2+t2)+thi2)/(t2-t1)"}})};
        lp.frame = {diag_gauge(lp, odes)};
        record_gauge(lp, odes);
        add_guards(lp, {"t1-t2"});
        fuchsian_point(lp, "0", A00, {"0", "0", "th0"});
        infinity_thetas(lp, {"thi1", "thi2", "thi3"});
        out.push_back(std::move(lp));
    }

    {  // FS:A3 — irregular points at x = 0 and infinity
        LinearProblem lp = from_catalog("FS:A3", "FS:A3", 3);
        const auto& sys = get_system("FS:A3");
        MatrixExpr Ainf = outer({"-1", "p1*q1", "p2*q2"}, {"1", "0", "0"});
        MatrixExpr A00 = M(3, {"-p1*q1-p2*q2-thi3", "-1", "-1",
                               "q1*(p1*q1-th01-thi2)", "p1*q1-thi2", "p1*q1",
                               "q2*(p2*q2-thi1)", "q2*(p2*q2-thi1)/q1",
                               "p2*q2-thi1"});
        MatrixExpr A0m1 = outer({"1", "0", "0"}, {"t", "t/q1", "t/q2"});
        lp.A = {term(A0m1, "1/x^2"), term(A00, "1/x"), term(Ainf, "1")};
        lp.B = {{term(A0m1, "-1/(t*x)")}};
        FrameFactor P;
        P.chain = true;
        P.F = M(3, {"1", "0", "0",
                    "-p1*q1", "1", "0",
                    "-p2*q2",
                    "(p2*q2*(q1-q2)+thi1*q2)/((thi2-thi1)*q1)", "1"});
        lp.frame = {P, diag_gauge(lp, sys.gauge_odes)};
        record_gauge(lp, sys.gauge_odes);
        add_guards(lp, {"t", "q1", "q2", "thi2-thi1"});
        irregular_point(lp, "0", A00);
        infinity_thetas(lp, {"thi1", "thi2", "thi3"});
        out.push_back(std::move(lp));
    }

    {  // Gar:3/2+1+1+1 — rank-one irregular 0, rank-one irregular infinity
        LinearProblem lp = from_catalog("Gar:3/2+1+1+1", "Gar:3/2+1+1+1", 3);
        const auto& sys = get_system("Gar:3/2+1+1+1");
        MatrixExpr A0m1 = outer({"1", "p1", "p2"}, {"-p1-p2+1", "1", "1"});
        MatrixExpr A00 =
            M(3, {"-thi1", "-q1", "-q2",
                  "-p1*q1*(p1+p2-1)+thi2*(p2-1)+(thi2-thi1)*p1", "-thi2",
                  "p1*(q1-q2)-thi2",
                  "-p2*q2*(p1+p2-1)+thi3*(p1-1)+(thi3-thi1)*p2",
                  "p2*(q2-q1)-thi3", "-thi3"});
        MatrixExpr Ainf =
            M(3, {"0", "0", "0", "0", "t1", "0", "0", "0", "t2"});
        MatrixExpr B1h(3, 3), B2h(3, 3);
        B1h.at(0, 1) = A00.at(0, 1) / parse_expr("t1");
        B1h.at(1, 0) = A00.at(1, 0) / parse_expr("t1");
        B1h.at(1, 2) = A00.at(1, 2) / parse_expr("t1-t2");
        B1h.at(2, 1) = A00.at(2, 1) / parse_expr("t1-t2");
        B2h.at(0, 2) = A00.at(0, 2) / parse_expr("t2");
        B2h.at(2, 0) = A00.at(2, 0) / parse_expr("t2");
        B2h.at(1, 2) = A00.at(1, 2) / parse_expr("t2-t1");
        B2h.at(2, 1) = A00.at(2, 1) / parse_expr("t2-t1");
        lp.A = {term(A0m1, "1/x^2"), term(A00, "1/x"), term(Ainf, "1")};
        lp.B = {{term(E2, "x"), term(B1h, "1")},
                {term(E3, "x"), term(B2h, "1")}};
        lp.frame = {diag_gauge(lp, sys.gauge_odes)};
        record_gauge(lp, sys.gauge_odes);
        add_guards(lp, {"t1", "t2", "t1-t2"});
        irregular_point(lp, "0", A00);
        infinity_thetas(lp, {"thi1", "thi2", "thi3"});
        out.push_back(std::move(lp));
    }

    {  // Gar:5/2+1+1 — single irregular point at infinity
        LinearProblem lp = from_catalog("Gar:5/2+1+1", "Gar:5/2+1+1", 3);
        const auto& sys = get_system("Gar:5/2+1+1");
        MatrixExpr Am3 =
            M(3, {"0", "0", "0", "0", "-1", "0", "0", "0", "-1"});
        MatrixExpr Am2 = M(3, {"0", "-1", "-1",
                               "-p1", "0", "0",
                               "-p2", "0", "0"});
        MatrixExpr Am1 = M(3, {"-p1-p2", "-q1", "-q2",
                               "p1*q1-thi2", "p1-t1", "p1",
                               "p2*q2-thi3", "p2", "p2-t2"});
        MatrixExpr B1h =
            M(3, {"0", "-1", "0",
                  "-p1", "(p2*(q1-q2)+thi3)/(t1-t2)+q1",
                  "(p1*(q1-q2)-thi2)/(t1-t2)",
                  "0", "(p2*(q2-q1)-thi3)/(t1-t2)",
                  "(p1*(q2-q1)+thi2)/(t1-t2)"});
        MatrixExpr B2h =
            M(3, {"0", "0", "-1",
                  "0", "(p2*(q1-q2)+thi3)/(t2-t1)",
                  "(p1*(q1-q2)-thi2)/(t2-t1)",
                  "-p2", "(p2*(q2-q1)-thi3)/(t2-t1)",
                  "(p1*(q2-q1)+thi2)/(t2-t1)+q2"});
        lp.A = {term(Am3, "x^2"), term(Am2, "x"), term(Am1, "1")};
        lp.B = {{term(E2, "-x"), term(B1h, "1")},
                {term(E3, "-x"), term(B2h, "1")}};
        lp.frame = {diag_gauge(lp, sys.gauge_odes)};
        record_gauge(lp, sys.gauge_odes);
        add_guards(lp, {"t1-t2"});
        infinity_thetas(lp, {"thi1", "thi2", "thi3"});
        out.push_back(std::move(lp));
    }
}

}  // namespace lax_detail

}  // namespace iso4d
