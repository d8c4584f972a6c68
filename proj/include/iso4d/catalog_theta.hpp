#pragma once
// Theta-form data for the catalog: Hamiltonians in the characteristic
// exponents of the linear problems, Fuchs relations, the affine maps from
// the Greek-letter parameters, the gauge-factor ODEs, and canonical charts.
// Included at the end of catalog.hpp; do not include directly.

namespace iso4d {

namespace cat_detail {

inline HamiltonianSystem& find_system(std::vector<HamiltonianSystem>& v,
                                      const std::string& id) {
    for (auto& s : v)
        if (s.id == id) return s;
    throw iso4d_error("load_theta_forms: unknown id '" + id + "'");
}

// param_map helper: {greek, theta-expression} pairs.
inline std::map<Symbol, RationalExpr> pmap(
    std::initializer_list<std::pair<const char*, const char*>> xs) {
    std::map<Symbol, RationalExpr> m;
    for (const auto& [g, e] : xs) m[sym(g)] = parse_expr(e);
    return m;
}

// gauge helper: one {gauge symbol, d log(gauge)/dt} list per time.
inline std::vector<std::pair<Symbol, RationalExpr>> godes(
    std::initializer_list<std::pair<const char*, const char*>> xs) {
    std::vector<std::pair<Symbol, RationalExpr>> v;
    for (const auto& [g, e] : xs) v.emplace_back(sym(g), parse_expr(e));
    return v;
}

inline std::map<Symbol, RationalExpr> chart(
    std::initializer_list<std::pair<const char*, const char*>> xs) {
    std::map<Symbol, RationalExpr> m;
    for (const auto& [g, e] : xs) m[sym(g)] = parse_expr(e);
    return m;
}

}  // namespace cat_detail

inline void load_theta_forms(std::vector<HamiltonianSystem>& systems) {
    using cat_detail::CH;
    using cat_detail::chart;
    using cat_detail::E;
    using cat_detail::find_system;
    using cat_detail::godes;
    using cat_detail::M2;
    using cat_detail::pmap;
    using cat_detail::syms;

    auto set = [&](const std::string& id, std::initializer_list<const char*> names,
                   const char* fuchs, std::vector<RationalExpr> hams,
                   std::map<Symbol, RationalExpr> map) -> HamiltonianSystem& {
        HamiltonianSystem& s = find_system(systems, id);
        s.params.names = syms(names);
        s.params.fuchs_relation = E(fuchs);
        s.hamiltonians_theta = std::move(hams);
        s.param_map = std::move(map);
        return s;
    };

    // --- Garnier family ---------------------------------------------------

    {  // Gar:1+1+1+1+1 (i in Z/2Z; regular points 0,1,t1,t2,infinity)
        std::vector<RationalExpr> H;
        for (int i = 0; i < 2; ++i) {
            std::string qi = i ? "q2" : "q1", pi = i ? "p2" : "p1";
            std::string qj = i ? "q1" : "q2", pj = i ? "p1" : "p2";
            std::string ti = i ? "t2" : "t1", tj = i ? "t1" : "t2";
            std::string gi = i ? "tht2" : "tht1", gj = i ? "tht1" : "tht2";
            RationalExpr hvi = classical_hamiltonian(
                "VI", {E("thi2"), E("th1"), E(gi), E("th0+" + gj + "+1")}, E(ti),
                E(qi), E(pi));
            RationalExpr coup =
                E("(2*" + qi + "*" + pi + "+" + qj + "*" + pj +
                  "-th1-2*thi2)*q1*q2*" + pj) -
                E("1/(" + ti + "-" + tj + ")*(" + ti + "*(" + ti + "-1)*(" + pi +
                  "*" + qi + "+" + gi + ")*" + pi + "*" + qj + "-" + ti + "*(" + tj +
                  "-1)*(2*" + pi + "*" + qi + "+" + gi + ")*" + pj + "*" + qj + "+" +
                  tj + "*(" + ti + "-1)*(" + pj + "^2*" + qj + "+" + gj + "*(" + pj +
                  "-" + pi + "))*" + qi + ")");
            H.push_back(hvi + coup / E(ti + "*(" + ti + "-1)"));
        }
        auto& s = set("Gar:1+1+1+1+1", {"th0", "th1", "tht1", "tht2", "thi1", "thi2"},
                      "th0+th1+tht1+tht2+thi1+thi2", std::move(H),
                      pmap({{"alpha", "thi2"},
                            {"beta", "th1"},
                            {"gamma1", "tht1"},
                            {"gamma2", "tht2"},
                            {"delta", "th0+1"}}));
        s.gauge_odes = {
            godes({{"u", "(q1*(2*p1*(t1-q1)+th1+2*thi2)-2*q1*p2*q2+t1*tht1)"
                         "/(t1*(t1-1))"}}),
            godes({{"u", "(q2*(2*p2*(t2-q2)+th1+2*thi2)-2*q2*p1*q1+t2*tht2)"
                         "/(t2*(t2-1))"}})};
    }

    {  // Gar:2+1+1+1
        auto& s = set(
            "Gar:2+1+1+1", {"th0", "th1", "tht", "thi1", "thi2"},
            "th0+th1+tht+thi1+thi2",
            {CH("V", {"th0+th1+thi1", "2*th0+thi1+thi2", "-th0-thi1"}, "t1", "q1",
                "p1") +
                 E("p1/t1*(p2*q2*(q2-1)+tht*(q1-q2))"
                   "-(p1*(q1-q2)-th1)*(p2*(q1-q2)+tht)/(t1-t2)"),
             CH("V", {"th0+tht+thi1", "2*th0+thi1+thi2", "-th0-thi1"}, "t2", "q2",
                "p2") +
                 E("p2/t2*(p1*q1*(q1-1)+th1*(q2-q1))"
                   "-(p1*(q1-q2)-th1)*(p2*(q1-q2)+tht)/(t2-t1)")},
            pmap({{"alpha", "thi2"},
                  {"beta", "th1"},
                  {"gamma", "tht"},
                  {"delta", "-th0-1"}}));
        s.gauge_odes = {godes({{"u", "(p1+thi1-thi2)/t1"}}),
                        godes({{"u", "p2/t2"}})};
        s.charts["lambda_mu"] = chart({{"lambda1", "1-1/q1"},
                                       {"mu1", "q1*(p1*q1-th1)"},
                                       {"lambda2", "1-1/q2"},
                                       {"mu2", "q2*(p2*q2-tht)"}});
    }

    {  // Gar:2+2+1
        auto& s = set(
            "Gar:2+2+1", {"th0", "th1", "thi1", "thi2"}, "th0+th1+thi1+thi2",
            {CH("V", {"-thi2", "th0-th1", "th1+thi2"}, "t1", "q1", "p1") +
                 E("(q1*q2*(p1*q1-th1)+p2*q2*(th1+p1-2*p1*q1)"
                   "-t2/t1*p1*(p2-q1))/t1"),
             CH("III_D6", {"thi2", "-th0"}, "t2", "q2", "p2") +
                 E("(-(p1*q1-th1)*q2*(q1-1)+t2/t1*p1*(p2-q1))/t2")},
            pmap({{"alpha", "th1"}, {"beta", "th0"}, {"gamma", "-th0-th1-thi2"}}));
        s.gauge_odes = {godes({{"u", "(p1+thi1-thi2)/t1"}}),
                        godes({{"u", "-q2/t2"}})};
        s.charts["lambda_mu"] =
            chart({{"lambda1", "1-1/q1"}, {"mu1", "q1*(p1*q1-th1)"}});
    }

    {  // Gar:3+1+1
        auto& s = set(
            "Gar:3+1+1", {"th0", "th1", "thi1", "thi2"}, "th0+th1+thi1+thi2",
            {CH("IV", {"th1", "thi1"}, "t1", "q1", "p1") +
                 E("p2*q2*p1+(p1*(q1-q2)-th1)*(p2*(q2-q1)-th0)/(t1-t2)"),
             CH("IV", {"th0", "thi1"}, "t2", "q2", "p2") +
                 E("p1*q1*p2+(p1*(q1-q2)-th1)*(p2*(q2-q1)-th0)/(t2-t1)")},
            pmap({{"alpha", "th1"}, {"beta", "th0"}, {"gamma", "thi1"}}));
        s.gauge_odes = {godes({{"u", "-p1"}}), godes({{"u", "t2-p2"}})};
    }

    {  // Gar:3+2
        auto& s = set("Gar:3+2", {"th0", "thi1", "thi2"}, "th0+thi1+thi2",
                      {CH("III_D6", {"-thi1", "th0+1"}, "t1", "q1", "p1") +
                           E("-p1-q1*q2/t1*(q2-p2+t2)+p1*p2-q2"),
                       CH("IV", {"th0", "thi1"}, "t2", "q2", "p2") +
                           E("-p1*q1*(p2-2*q2-t2)-q1*q2+t1*p1")},
                      pmap({{"alpha", "th0"}, {"beta", "thi1"}}));
        s.gauge_odes = {godes({{"u", "-q1/t1"}}), godes({{"u", "t2-p2"}})};
    }

    {  // Gar:4+1
        auto& s = set(
            "Gar:4+1", {"th0", "thi1", "thi2"}, "th0+thi1+thi2",
            {CH("II", {"-thi1"}, "t1", "q1", "p1") +
                 E("p2*q2*(q1-q2+t2)+p1*p2+th0*q2"),
             E("-p2^2*q2-t2*p2*q2^2+t2^2*p2*q2+th0*t2*q2-thi1*p2"
               "+p1*p2*(q1-2*q2+t2)+q1*q2*(p2*q2-th0)+th0*p1+t1*p2*q2")},
            pmap({{"alpha", "th0"}, {"beta", "thi1"}}));
        s.gauge_odes = {godes({{"u", "-q1-t2"}}), godes({{"u", "p2-t1-t2^2"}})};
    }

    {  // Gar:5
        auto& s = set(
            "Gar:5", {"thi1", "thi2"}, "thi1+thi2",
            {E("-q1*(q1*p1-thi1)+q2*(q1*(p2+q2)-2*p1+t1)+p1*(p2-2*t2)"),
             CH("IV", {"-1", "thi1"}, "2*t2", "q2", "p2") +
                 E("q1*q2*(q1*q2-2*p1+t1)+p1*(p1-p2*q1-t1)")},
            pmap({{"alpha", "thi1"}}));
        s.gauge_odes = {godes({{"u", "-q1"}}), godes({{"u", "2*t2-p2"}})};
    }

    {  // Gar:3/2+1+1+1 (rank-three linear problem, (2)(1),(1)(1)(1))
        auto& s = set(
            "Gar:3/2+1+1+1", {"th0", "thi1", "thi2", "thi3"}, "th0+thi1+thi2+thi3",
            {CH("III_D6", {"-thi2", "thi1-thi2"}, "t1", "q1", "p1") +
                 E("q1*(q1*p1*p2-thi2*p2)/t1"
                   "+(p1*(q1-q2)-thi2)*(p2*(q2-q1)-thi3)/(t1-t2)"),
             CH("III_D6", {"-thi3", "thi1-thi3"}, "t2", "q2", "p2") +
                 E("q2*(q2*p1*p2-thi3*p1)/t2"
                   "+(p1*(q1-q2)-thi2)*(p2*(q2-q1)-thi3)/(t2-t1)")},
            pmap({{"alpha", "thi2"}, {"beta", "thi3"}, {"gamma", "thi1"}}));
        s.gauge_odes = {
            godes({{"u",
                    "((t1-t2)*(1-2*p1)*q1+p2*(t2*q1-t1*q2)+thi3*t1)/(t1*(t1-t2))"},
                   {"v", "(t1*(thi2-2*p1*q1)+p1*(t2*q1+t1*q2))/(t1*(t1-t2))"}}),
            godes({{"u", "(t2*(thi3-2*p2*q2)+p2*(t2*q1+t1*q2))/(t2*(t2-t1))"},
                   {"v",
                    "((t2-t1)*(1-2*p2)*q2+p1*(t1*q2-t2*q1)+thi2*t2)/(t2*(t2-t1))"}})};
    }

    {  // Gar:5/2+1+1 (rank-three linear problem, (((1)(1)))(((1))))
        auto& s = set(
            "Gar:5/2+1+1", {"thi1", "thi2", "thi3"}, "thi1+thi2+thi3",
            {CH("II", {"-thi2"}, "t1", "q1", "p1") +
                 E("p1*p2+(p1*(q1-q2)-thi2)*(p2*(q2-q1)-thi3)/(t1-t2)"),
             CH("II", {"-thi3"}, "t2", "q2", "p2") +
                 E("p1*p2+(p1*(q1-q2)-thi2)*(p2*(q2-q1)-thi3)/(t2-t1)")},
            pmap({{"alpha", "thi2"}, {"beta", "thi3"}}));
        s.gauge_odes = {godes({{"u", "0"}, {"v", "0"}}),
                        godes({{"u", "0"}, {"v", "0"}})};
    }

    // --- Fuji-Suzuki family -----------------------------------------------

    {  // FS:A5 (21,21,111,111)
        auto& s = set(
            "FS:A5", {"th01", "th02", "th1", "tht", "thi1", "thi2", "thi3"},
            "th01+th02+th1+tht+thi1+thi2+thi3",
            {CH("VI", {"th02+thi2", "th1+thi3", "tht+thi3", "th01-th02+1"}, "t",
                "q1", "p1") +
             CH("VI",
                {"thi3", "th02+th1+thi2", "th02+tht+thi2", "th01-th02-thi2+1"},
                "t", "q2", "p2") +
             E("(q1-t)*(q2-1)*((p1*q1-th02-thi2)*p2+p1*(p2*q2-thi3))/(t*(t-1))")},
            pmap({{"alpha", "th02+thi2"},
                  {"beta", "thi3"},
                  {"gamma", "tht"},
                  {"delta", "th1"},
                  {"epsilon", "th01"},
                  {"omega", "th02"}}));
        s.gauge_odes = {godes(
            {{"u", "(2*p1*q1*(t-q1)+p2*q2*(t-q2)+(-th01+th02-tht-thi1+thi2)*q1"
                   "+thi3*q2+q1*p2*(1-q2)+t*tht)/(t*(t-1))"},
             {"v", "(q1*(p1*(t-q1)+th02+thi2)+q2*(2*p2*(t-q2)-th01-tht-thi1+thi3)"
                   "+p1*q2*(t-q1)+t*tht)/(t*(t-1))"}})};
    }

    {  // FS:A4 ((11)(1),21,111)
        auto& s = set(
            "FS:A4", {"th01", "th02", "th1", "thi1", "thi2", "thi3"},
            "th01+th02+th1+thi1+thi2+thi3",
            {CH("V", {"th01+th1+thi2+thi3", "th1+thi1-thi2-1", "-th1-thi3"}, "t",
                "q1", "p1") +
             CH("V", {"th1+thi3", "th1+thi1-thi3-1", "-th1"}, "t", "q2", "p2") +
             E("p1*(q2-1)*(p2*(q1+q2)-thi3)/t")},
            pmap({{"alpha", "th1"},
                  {"beta", "th01"},
                  {"gamma", "thi1"},
                  {"delta", "thi2"},
                  {"epsilon", "thi3"}}));
        s.gauge_odes = {godes(
            {{"u", "(q2*(p2*q2-p2-thi3)-q1*(2*p1+p2+t)-th1)/(t*q1)"},
             {"v", "(-p1*(q1+q2)-(2*p2+t)*q2-th1)/(t*q2)"}})};
    }

    {  // FS:A3 ((11)(1),(11)(1))
        auto& s = set(
            "FS:A3", {"th01", "th02", "thi1", "thi2", "thi3"},
            "th01+th02+thi1+thi2+thi3",
            {CH("III_D6", {"-th01-thi2", "thi3-thi2"}, "t", "q1", "p1") +
             CH("III_D6", {"-thi1", "thi3-thi1"}, "t", "q2", "p2") +
             E("p1*q2*(p2*(q1+q2)-thi1)/t")},
            pmap({{"alpha", "-th01"},
                  {"beta", "-thi3"},
                  {"gamma", "-thi2"},
                  {"delta", "-thi1"}}));
        s.gauge_odes = {godes({{"u", "(q2*(p2*q2-thi1)+t)/(t*q1)"},
                               {"v", "1/q2"}})};
    }

    {  // NY:A5 ((2)(1),111,111)
        auto& s = set(
            "NY:A5", {"th01", "th02", "th1", "thi1", "thi2", "thi3"},
            "th01+th02+th1+thi1+thi2+thi3",
            {CH("V", {"thi1-1", "th01-th02+thi1-thi2-thi3-1", "-thi1+thi3+1"},
                "t", "q1", "p1") +
             CH("V",
                {"th02+thi1-thi3-1", "th01-th02+thi1-thi2-thi3-1",
                 "-thi1+thi2+thi3+1"},
                "t", "q2", "p2") +
             E("2*p1*p2*q1*(q2-1)/t")},
            pmap({{"alpha", "thi1-thi3-1"},
                  {"beta", "thi3"},
                  {"gamma", "-thi2"},
                  {"delta", "th02+thi2"},
                  {"epsilon", "th01-th02"}}));
        s.gauge_odes = {godes(
            {{"u", "(p1*(1-2*q1)+(2*p2+t)*(1-q2)-th01+th02-thi1+thi2+thi3)/t"},
             {"v", "((2*p1+t)*(1-q1)+2*p2*(1-q2)-th01+th02-thi1+thi2+thi3)/t"}})};
    }

    {  // NY:A4 (((11))((1)),111)
        auto& s = set(
            "NY:A4", {"th01", "th02", "thi1", "thi2", "thi3"},
            "th01+th02+thi1+thi2+thi3",
            {CH("IV", {"thi3", "thi1-thi3-1"}, "t", "q1", "p1") +
             CH("IV", {"th01+thi2", "thi1-thi2-thi3-1"}, "t", "q2", "p2") +
             E("2*p1*q1*p2")},
            pmap({{"alpha", "thi1-thi3-1"},
                  {"beta", "thi3"},
                  {"gamma", "-thi2"},
                  {"delta", "th01+thi2"}}));
        s.gauge_odes = {godes({{"u", "-p1-2*p2+q2+t"},
                               {"v", "q1-2*p1-2*p2+t"}})};
    }

    // --- Sasano family ----------------------------------------------------

    {  // Ss:D6 (31,22,22,1111)
        auto& s = set(
            "Ss:D6", {"th0", "th1", "tht", "thi1", "thi2", "thi3", "thi4"},
            "th0+2*th1+2*tht+thi1+thi2+thi3+thi4",
            {CH("VI",
                {"-th0-th1-tht-thi1-thi3", "-tht-thi2+thi3", "-th1-thi2-thi3",
                 "th0+th1+tht+thi2+thi3+1"},
                "t", "q1", "p1") +
             CH("VI", {"thi3", "th1", "tht", "-thi1+thi2-thi3+thi4+1"}, "t", "q2",
                "p2") +
             E("2*(q1-1)*p2*q2*(p1*(q1-t)+th0+th1+tht+thi1+thi3)/(t*(t-1))")},
            pmap({{"alpha", "thi1-thi2"},
                  {"beta", "thi2-thi3"},
                  {"gamma", "thi3-thi4"},
                  {"delta", "thi4"},
                  {"epsilon", "th1"},
                  {"zeta", "tht"}}));
        // the printed gauge equations are implicit in d(a_hat)/dt; the
        // explicit forms live with the linear problem
        s.gauge_odes = {};
    }

    {  // Ss:D5 ((2)(2),31,1111)
        auto& s = set(
            "Ss:D5", {"th0", "th1", "thi1", "thi2", "thi3", "thi4"},
            "th0+2*th1+thi1+thi2+thi3+thi4",
            {CH("V",
                {"-th0-th1-thi3-thi4-1", "th0+th1+thi1+thi2+thi3-thi4-1",
                 "-thi1+thi4+1"},
                "t", "q1", "p1") +
             CH("V",
                {"th0+th1+2*thi1+thi3-1", "th0+th1+thi1+thi2-thi3+thi4-1",
                 "-th0-th1-2*thi1+1"},
                "t", "q2", "p2") +
             E("2*p2*q1*(p1*(q1-1)+th0+th1+thi1+thi3)/t")},
            pmap({{"alpha", "th0+th1+thi2+thi3"},
                  {"beta", "-thi1+thi4+1"},
                  {"gamma", "thi1-thi2-thi3"},
                  {"delta", "-th0-th1-thi2-thi4"},
                  {"epsilon", "-th0-th1-thi3-thi4-1"}}));
        // The source display writes the gauge equations as
        //   -(t/u)u' = (t+2p2)(1-q1)+p1,
        //   -(t/v)v' = (t+2p2)(1-q2)+p1+th1+2thi3,
        //   -(t/w)w' = (t+2p1+2p2)(1-q1)-th1-2thi4.
        // Solving the deformation equations for the frame forces the opposite
        // sign on the left of all three, a "+1" in the v constant, and
        // +th1+2thi4+1 in place of -th1-2thi4 in the w constant; only that
        // form makes the residual vanish.
        s.gauge_odes = {godes(
            {{"u", "((t+2*p2)*(1-q1)+p1)/t"},
             {"v", "((t+2*p2)*(1-q2)+p1+th1+2*thi3+1)/t"},
             {"w", "((t+2*p1+2*p2)*(1-q1)+th1+2*thi4+1)/t"}})};
        s.charts["lambda_mu"] =
            chart({{"lambda1", "1-1/q2"},
                   {"mu1", "q2*(q2*p2+th0+th1+thi1+thi3)"},
                   {"lambda2", "1-1/q1"},
                   {"mu2", "q1*(q1*p1-th1-thi3)"}});
    }

    {  // Ss:D4 ((2)(2),(111)(1))
        auto& s = set(
            "Ss:D4", {"th0", "thi1", "thi2", "thi3", "thi4"},
            "2*th0+thi1+thi2+thi3+thi4",
            {CH("III_D6", {"th0+thi1+thi3", "-th0-2*thi4"}, "t", "q1", "p1") +
             CH("III_D6", {"-thi3", "-th0-2*thi3"}, "t", "q2", "p2") +
             E("2*p2*q1*(p1*q1+th0+thi1+thi3)/t")},
            pmap({{"alpha", "th0"},
                  {"beta", "thi1"},
                  {"gamma", "thi3"},
                  {"delta", "thi4"}}));
        s.gauge_odes = {godes(
            {{"u", "((1-2*p2)*q1+thi1-thi2)/t"},
             {"v", "((1-2*p2)*q2+th0+thi1+thi3)/t"},
             {"w", "((1-2*p1-2*p2)*q1-th0-thi2-thi3)/t"}})};
    }

    // --- Matrix Painlevé family -------------------------------------------
    // Trace Hamiltonians in the exponents of the linear problems; the P
    // matrix in the exponents differs from the Greek one only in its (2,1)
    // entry.

    auto mat_theta = [&](const char* p21) {
        MatrixExpr Q = M2("q1", "1", "-q2", "q1");
        MatrixExpr P = MatrixExpr(
            2, 2, {E("p1/2"), E("-p2"), E(p21), E("p1/2")});
        return std::make_pair(Q, P);
    };
    MatrixExpr I2 = MatrixExpr::identity(2);
    MatrixExpr K = MatrixExpr::diagonal({RationalExpr(1), RationalExpr(-1)});
    RationalExpr t = E("t");

    {  // Mat:VI (22,22,22,211)
        auto [Q, P] = mat_theta("p2*q2-(th0+th1+tht+thi1+thi2)");
        RationalExpr th = E("th0+th1+tht");
        MatrixExpr lin = (E("th0+1") * I2 - (th + E("thi1+thi2")) * K) * Q *
                             (Q - I2) +
                         E("tht") * (Q - I2) * (Q - t * I2) +
                         (th + E("2*thi1-1")) * Q * (Q - t * I2);
        MatrixExpr H = Q * (Q - I2) * (Q - t * I2) * P * P + lin * P +
                       ((th + E("thi1")) * E("th0+tht+thi1")) * Q;
        auto& s = set("Mat:VI", {"th0", "th1", "tht", "thi1", "thi2", "thi3"},
                      "2*th0+2*th1+2*tht+2*thi1+thi2+thi3",
                      {H.trace() / (t * (t - RationalExpr(1)))},
                      pmap({{"alpha", "-th0-tht-thi1"},
                            {"beta", "-th1"},
                            {"gamma", "tht"},
                            {"delta", "th0+1"},
                            {"omega", "th1+thi3"}}));
        s.gauge_odes = {godes(
            {{"v", "(2*q1*((t+1)*p1+th1+2*thi2)-p1*(3*q1^2+t)+2*(t+1)*p2*q2"
                   "+2*q1*p2*(q1*(q1-t-1)+t-3*q2)+p1*q2"
                   "+(th0+th1+2*tht+2*thi1-1)*t+th0+tht-thi2+thi3+1)"
                   "/(t*(t-1))"}})};
    }

    {  // Mat:V ((2)(2),22,211)
        auto [Q, P] = mat_theta("p2*q2-(th0+th1+thi1+thi2)");
        MatrixExpr H = P * (P + t * I2) * Q * (Q - I2) +
                       E("th0+th1+thi1") * P -
                       (E("(th0+th1+2*thi1-1)") * t) * Q -
                       E("2*th0+th1+2*thi1") * P * Q;
        auto& s = set("Mat:V", {"th0", "th1", "thi1", "thi2", "thi3"},
                      "2*th0+2*th1+2*thi1+thi2+thi3", {H.trace() / t},
                      pmap({{"alpha", "thi1-1"},
                            {"beta", "-2*th0-th1-2*thi1"},
                            {"gamma", "th0+th1+thi1"},
                            {"omega", "-th0-th1-thi2-1"}}));
        s.gauge_odes = {godes(
            {{"v", "(p1*(1-2*q1)-2*t*q1-2*p2*q2+2*p2*q1*(q1-1)+t"
                   "+4*th0+3*th1+4*thi1+2*thi2)/t"}})};
    }

    {  // Mat:IV (((2))((2)),211)
        auto [Q, P] = mat_theta("p2*q2-(th0+thi1+thi2)");
        MatrixExpr H = P * Q * (P - Q - t * I2) - E("th0+thi1") * P +
                       E("th0+2*thi1-1") * Q;
        auto& s = set("Mat:IV", {"th0", "thi1", "thi2", "thi3"},
                      "2*th0+2*thi1+thi2+thi3", {H.trace()},
                      pmap({{"alpha", "th0+2*thi1-1"},
                            {"beta", "-th0-thi1"},
                            {"omega", "thi1-thi2-1"}}));
        s.gauge_odes = {godes({{"v", "2*(p2+1)*q1-p1+t"}})};
    }

    {  // Mat:III_D6 ((2)(2),(2)(11))
        auto [Q, P] = mat_theta("p2*q2-(th0+thi1+thi2)");
        MatrixExpr H = Q * Q * P * P -
                       (Q * Q - E("th0+2*thi1") * Q - t * I2) * P -
                       E("th0+thi1") * Q;
        auto& s = set("Mat:III_D6", {"th0", "thi1", "thi2", "thi3"},
                      "2*th0+2*thi1+thi2+thi3", {H.trace() / t},
                      pmap({{"alpha", "th0+thi1"},
                            {"beta", "-th0-2*thi1"},
                            {"omega", "-thi2"}}));
        s.gauge_odes = {godes(
            {{"v", "(2*p2*(q1^2-q2)-2*(p1-1)*q1+th0+2*thi2)/t"}})};
    }

    {  // Mat:II ((((2)))(((11))))
        auto [Q, P] = mat_theta("p2*q2-(thi1+thi2)");
        MatrixExpr H = P * P - (Q * Q + t * I2) * P + E("thi1-1") * Q;
        auto& s = set("Mat:II", {"thi1", "thi2", "thi3"}, "2*thi1+thi2+thi3",
                      {H.trace()},
                      pmap({{"alpha", "-thi1+1"}, {"omega", "thi3+1"}}));
        s.gauge_odes = {godes({{"v", "2*(q1+p2)"}})};
    }
}

}  // namespace iso4d
