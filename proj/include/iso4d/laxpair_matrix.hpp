#pragma once
// Matrix Painlevé linear problems (4x4, built from 2x2 blocks in Q and P).
// Included via laxpair_data.hpp; do not include directly.

namespace iso4d {

namespace lax_detail {

// 2x2 canonical pair: Q = [[q1,1],[-q2,q1]], P = [[p1/2,-p2],[p21,p1/2]]
// where p21 = p2*q2 - (system-dependent theta sum).
inline std::pair<MatrixExpr, MatrixExpr> mat_qp(const char* p21) {
    MatrixExpr Q = M(2, {"q1", "1", "-q2", "q1"});
    MatrixExpr P(2, 2, {parse_expr("p1/2"), parse_expr("-p2"),
                        parse_expr(p21), parse_expr("p1/2")});
    return {Q, P};
}

inline MatrixExpr diag2(const RationalExpr& a, const RationalExpr& b) {
    return MatrixExpr::diagonal({a, b});
}

// Direct frame factor for the block gauge U (+) diag(v,1):
// W = blocks4(dU/dt U^{-1}, 0, 0, diag(dlog v/dt, 0)).
inline FrameFactor gauge_Uv(const MatrixExpr& UdotUinv,
                            const RationalExpr& vlog) {
    FrameFactor f;
    f.chain = false;
    f.W = {blocks4(UdotUinv, MatrixExpr(2, 2), MatrixExpr(2, 2),
                   diag2(vlog, RationalExpr(0)))};
    return f;
}

// Direct frame factor for the block gauge diag(1,v) (+) U.
inline FrameFactor gauge_vU(const RationalExpr& vlog,
                            const MatrixExpr& UdotUinv) {
    FrameFactor f;
    f.chain = false;
    f.W = {blocks4(diag2(RationalExpr(0), vlog), MatrixExpr(2, 2),
                   MatrixExpr(2, 2), UdotUinv)};
    return f;
}

inline void build_matrix(std::vector<LinearProblem>& out) {
    const MatrixExpr I2 = MatrixExpr::identity(2);
    const MatrixExpr O2(2, 2);
    auto E = [](const char* s) { return parse_expr(s); };
    auto sI = [&](const char* s) { return parse_expr(s) * I2; };

    {  // Mat:VI — Fuchsian 0, 1, t, infinity (22,22,22,211)
        LinearProblem lp = from_catalog("Mat:VI", "Mat:VI", 4);
        auto [Q, P] = mat_qp("p2*q2-(th0+th1+tht+thi1+thi2)");
        RationalExpr t = E("t");
        MatrixExpr A0 = blocks4(sI("th0"), Q / t - I2, O2, O2);
        MatrixExpr PQth = P * Q - diag2(E("thi2"), E("thi3"));
        MatrixExpr A1 = blocks4(sI("th1") - PQth, I2,
                                PQth * (sI("th1") - PQth), PQth);
        MatrixExpr QPt = Q * P + sI("tht");
        MatrixExpr At = blocks4(QPt, RationalExpr(-1) * Q / t,
                                t * P * QPt, RationalExpr(-1) * P * Q);
        lp.A = {term(A0, "1/x"), term(A1, "1/(x-1)"), term(At, "1/(x-t)")};
        lp.B = {{term(At, "-1/(x-t)")}};
        // conjugator X = [[I,0],[Z,I]]
        MatrixExpr QPs = Q * P + sI("th0+th1+tht+thi1");
        MatrixExpr Zn = sI("-th1") * QPs + QPs * QPs -
                        t * (P * Q + sI("tht")) * P;
        MatrixExpr Z = diag2(E("1/(thi1-thi2)"), E("1/(thi1-thi3)")) * Zn;
        FrameFactor X;
        X.chain = true;
        X.F = blocks4(I2, O2, Z, I2);
        // gauge: t(t-1) dU/dt = M U,  t(t-1) dlog v/dt = (printed)
        RationalExpr den = E("t*(t-1)");
        MatrixExpr Mu(2, 2,
            {E("p1*(2*q1-t)*(1-q1)-(th0+tht+thi1-thi2)*q1+2*p2*q2"
               "+2*q1*p2*(q1*(q1-t-1)+t-q2)+(thi1-thi3-1)*t"
               "+th0+tht-thi2+thi3+1"),
             E("p1*(2*q1-t)+2*p2*q2+2*q1*p2*(t-q1)+th0+tht+thi1-thi2"),
             E("2*(th0+th1+tht+thi1+thi2)*q1*(t-q1)"
               "-(2*p2*q2+th0+tht+thi1-thi2)*q2+p1*q2*(t-2*q1)"
               "+2*q1*p2*q2*(q1-t)"),
             E("((q1-t)*p1+th0+tht+thi1-thi2)*q1-2*t*p2*q2"
               "+q2*(4*p2*q1-p1)+(th0+th1+thi1+thi2)*t")});
        RationalExpr vlog =
            E("2*q1*((t+1)*p1+th1+2*thi2)-p1*(3*q1^2+t)+2*(t+1)*p2*q2"
              "+2*q1*p2*(q1*(q1-t-1)+t-3*q2)+p1*q2"
              "+(th0+th1+2*tht+2*thi1-1)*t+th0+tht-thi2+thi3+1");
        lp.frame = {X, gauge_Uv(Mu / den, vlog / den)};
        record_gauge(lp, get_system("Mat:VI").gauge_odes);
        add_guards(lp, {"t", "t-1", "thi1-thi2", "thi1-thi3"});
        fuchsian_point(lp, "0", A0, {"0", "0", "th0", "th0"});
        fuchsian_point(lp, "1", A1, {"0", "0", "th1", "th1"});
        fuchsian_point(lp, "t", At, {"0", "0", "tht", "tht"});
        fuchsian_point(lp, "infinity", RationalExpr(-1) * (A0 + A1 + At),
                       {"thi1", "thi1", "thi2", "thi3"});
        infinity_thetas(lp, {"thi1", "thi1", "thi2", "thi3"});
        out.push_back(std::move(lp));
    }

    {  // Mat:V — rank-one irregular x=1, Fuchsian x=0 ((2)(2),22,211)
        LinearProblem lp = from_catalog("Mat:V", "Mat:V", 4);
        auto [Q, P] = mat_qp("p2*q2-(th0+th1+thi1+thi2)");
        RationalExpr t = E("t");
        MatrixExpr Th = diag2(E("thi2"), E("thi3"));
        MatrixExpr Zn = RationalExpr(-1) * (P + t * I2) * Q * (Q - I2) +
                        E("2*th0+th1+2*thi1") * Q - sI("th0+th1+thi1");
        MatrixExpr Z = diag2(E("1/(thi1-thi2)"), E("1/(thi1-thi3)")) * Zn;
        MatrixExpr QmZ = Q - Z;
        MatrixExpr r1 = RationalExpr(-1) * t * (I2 - Q) - t * Z;
        MatrixExpr A1m1 = blocks4(r1, RationalExpr(-1) * t * I2,
                                  QmZ * r1, RationalExpr(-1) * t * QmZ);
        MatrixExpr PtZ = (P + t * I2) * Z;
        MatrixExpr A10 = blocks4(sI("-th0-thi1") + PtZ, P + t * I2,
                                 E("th0") * Z - Z * PtZ,
                                 RationalExpr(-1) * Z * (P + t * I2) - Th);
        MatrixExpr c0 = sI("th0") - PtZ;
        MatrixExpr A00 = blocks4(c0, RationalExpr(-1) * t * I2 - P,
                                 RationalExpr(-1) * Z * c0,
                                 Z * (t * I2 + P));
        lp.A = {term(A00, "1/x"), term(A1m1, "1/(x-1)^2"),
                term(A10, "1/(x-1)")};
        lp.B = {{term(A1m1, "-1/(t*(x-1))")}};
        MatrixExpr Mu(2, 2,
            {E("(1-2*q1)*(3/2*p1+2*t)"
               "+2*(q1*(q1-1)*p2-2*p2*q2+th0+thi1-thi3)"),
             E("(2*q1-1)*p2-p1-2*t"),
             E("(p2*q2-th0-th1-thi1-thi2)*(1-2*q1)+(p1+2*t)*q2"),
             E("(1-2*q1)*(1/2*p1+t)-2*p2*q2+4*th0+3*th1+4*thi1+2*thi2")});
        RationalExpr vlog =
            E("p1*(1-2*q1)-2*t*q1-2*p2*q2+2*p2*q1*(q1-1)+t"
              "+4*th0+3*th1+4*thi1+2*thi2");
        lp.frame = {gauge_Uv(Mu / t, vlog / t)};
        record_gauge(lp, get_system("Mat:V").gauge_odes);
        add_guards(lp, {"t", "thi1-thi2", "thi1-thi3"});
        fuchsian_point(lp, "0", A00, {"0", "0", "th0", "th0"});
        irregular_point(lp, "1", A10);
        infinity_thetas(lp, {"thi1", "thi1", "thi2", "thi3"});
        out.push_back(std::move(lp));
    }

    {  // Mat:V-alt — second realization of Mat:V ((2)(11),22,22):
       // Fuchsian 0 and 1, rank-one irregular infinity.
        LinearProblem lp = from_catalog("Mat:V-alt", "Mat:V", 4);
        auto [Q, P] = mat_qp("p2*q2-(th0+th1+thi1+thi2)");
        RationalExpr t = E("t");
        MatrixExpr Th = diag2(E("thi2"), E("thi3"));
        MatrixExpr Ainf = blocks4(O2, O2, O2, RationalExpr(-1) * t * I2);
        MatrixExpr QPs = Q * P + sI("th0+thi1");
        MatrixExpr C0 = ((Q - I2) * Q * P + E("th0+thi1") * Q - sI("thi1")) / t;
        MatrixExpr A00 = blocks4(QPs * (I2 - Q), QPs * C0,
                                 t * (I2 - Q), t * C0);
        MatrixExpr L1 = QPs * (Q - I2) - Th;
        MatrixExpr C1 = ((Q * P + sI("th0+th1+thi1") + Th) * Q.inverse() -
                         QPs) / t;
        MatrixExpr A10 = blocks4(L1, L1 * C1, t * Q, t * Q * C1);
        lp.A = {term(Ainf, "1"), term(A00, "1/x"), term(A10, "1/(x-1)")};
        MatrixExpr S = A00 + A10;
        MatrixExpr B1h = blocks4(
            O2,
            MatrixExpr(2, 2, {S.at(0, 2) / t, S.at(0, 3) / t,
                              S.at(1, 2) / t, S.at(1, 3) / t}),
            MatrixExpr(2, 2, {S.at(2, 0) / t, S.at(2, 1) / t,
                              S.at(3, 0) / t, S.at(3, 1) / t}),
            O2);
        MatrixExpr E2I2 = blocks4(O2, O2, O2, I2);
        lp.B = {{term(RationalExpr(-1) * E2I2, "x"), term(B1h, "1")}};
        // this realization carries its own Hamiltonian
        MatrixExpr H = Q * (Q - I2) * P * (P + t * I2) +
                       E("th0-th1") * Q * P + E("th1") * P +
                       E("(th0+thi1)*t") * Q;
        lp.flow = {H.trace() / t};
        MatrixExpr Mu(2, 2,
            {E("t*q1-thi1+thi2+1"), t, E("-t*q2"),
             E("2*p1*q1+3*t*q1-p1+2*p2*q2-2*q1*p2*(q1-1)"
               "-(th0+3*th1+3*thi1+thi2-1)-t")});
        RationalExpr vlog =
            E("(2*q1-1)*p1-2*q1*p2*(q1-1)+2*t*q1+2*p2*q2-t+th0-th1");
        lp.frame = {gauge_vU(vlog / t, Mu / t)};
        std::vector<std::vector<std::pair<Symbol, RationalExpr>>> odes = {
            {{sym("v"), vlog / t}}};
        record_gauge(lp, odes);
        add_guards(lp, {"t", "q1^2+q2"});
        fuchsian_point(lp, "0", A00, {"0", "0", "th0", "th0"});
        fuchsian_point(lp, "1", A10, {"0", "0", "th1", "th1"});
        infinity_thetas(lp, {"thi2", "thi3", "thi1", "thi1"});
        out.push_back(std::move(lp));
    }

    {  // Mat:IV — rank-two irregular x=0, Fuchsian infinity (((2))((2)),211)
        LinearProblem lp = from_catalog("Mat:IV", "Mat:IV", 4);
        auto [Q, P] = mat_qp("p2*q2-(th0+thi1+thi2)");
        RationalExpr t = E("t");
        MatrixExpr Zn = (P - Q - t * I2) * Q - sI("th0+thi1");
        MatrixExpr Z = diag2(E("1/(thi1-thi2)"), E("1/(thi1-thi3)")) * Zn;
        MatrixExpr A0m2 = blocks4(RationalExpr(-1) * I2 - Z,
                                  RationalExpr(-1) * I2,
                                  Z * (I2 + Z), Z);
        MatrixExpr A0m1 = blocks4(
            P * Z + Q + t * I2, P,
            RationalExpr(-1) * Z * P * Z - Q * Z - Z * Q - t * Z - Q,
            RationalExpr(-1) * Z * P - Q);
        MatrixExpr A00 = blocks4(sI("-thi1"), O2, O2,
                                 diag2(E("-thi2"), E("-thi3")));
        lp.A = {term(A0m2, "1/x^3"), term(A0m1, "1/x^2"), term(A00, "1/x")};
        lp.B = {{term(A0m2, "1/x")}};
        MatrixExpr Mu(2, 2,
            {E("-3/2*p1+2*(p2+2)*q1+2*t"), E("p2+2"),
             E("-(p2+2)*q2+th0+thi1+thi2"), E("2*q1+t-p1/2")});
        RationalExpr vlog = E("2*(p2+1)*q1-p1+t");
        lp.frame = {gauge_Uv(Mu, vlog)};
        record_gauge(lp, get_system("Mat:IV").gauge_odes);
        add_guards(lp, {"thi1-thi2", "thi1-thi3"});
        irregular_point(lp, "0", A00);
        infinity_thetas(lp, {"thi1", "thi1", "thi2", "thi3"});
        out.push_back(std::move(lp));
    }

    {  // Mat:IV-alt — second realization of Mat:IV (((2))((11)),22):
       // Fuchsian 0, rank-two irregular infinity.
        LinearProblem lp = from_catalog("Mat:IV-alt", "Mat:IV", 4);
        auto [Q, P] = mat_qp("p2*q2-(th0+thi1+thi2)");
        RationalExpr t = E("t");
        MatrixExpr Th = diag2(E("thi2"), E("thi3"));
        MatrixExpr Am2 = blocks4(O2, O2, O2, RationalExpr(-1) * I2);
        MatrixExpr Am1 = blocks4(O2, P * Q - Th, I2, t * I2);
        MatrixExpr A00 = blocks4(
            RationalExpr(-1) * P * Q,
            RationalExpr(-1) * P * (Q * P + sI("th0")), Q,
            Q * P + sI("th0"));
        lp.A = {term(Am2, "x"), term(Am1, "1"), term(A00, "1/x")};
        MatrixExpr E2I2 = blocks4(O2, O2, O2, I2);
        MatrixExpr B1h = blocks4(O2, RationalExpr(-1) * (P * Q - Th),
                                 RationalExpr(-1) * I2, O2);
        lp.B = {{term(E2I2, "x"), term(B1h, "1")}};
        // this realization carries its own Hamiltonian
        MatrixExpr H = Q * P * (P - Q - t * I2) + E("th0") * P -
                       E("th0+thi1") * Q;
        lp.flow = {H.trace()};
        MatrixExpr Mu(2, 2, {E("-q1-t"), E("-1"), E("q2"),
                             E("p1-(2*p2+3)*q1-2*t")});
        RationalExpr vlog = E("p1-2*(p2+1)*q1-t");
        lp.frame = {gauge_vU(vlog, Mu)};
        std::vector<std::vector<std::pair<Symbol, RationalExpr>>> odes = {
            {{sym("v"), vlog}}};
        record_gauge(lp, odes);
        fuchsian_point(lp, "0", A00, {"0", "0", "th0", "th0"});
        infinity_thetas(lp, {"thi2", "thi3", "thi1", "thi1"});
        out.push_back(std::move(lp));
    }

    {  // Mat:III_D6 — rank-one irregular 0 and infinity ((2)(2),(2)(11))
        LinearProblem lp = from_catalog("Mat:III_D6", "Mat:III_D6", 4);
        auto [Q, P] = mat_qp("p2*q2-(th0+thi1+thi2)");
        RationalExpr t = E("t");
        MatrixExpr A0m1 = blocks4(t * (I2 - P), t * I2,
                                  t * P * (I2 - P), t * P);
        MatrixExpr Z = (Q * P + sI("th0+2*thi1")) * P -
                       (Q * P + sI("th0+thi1"));
        MatrixExpr A00 = blocks4(sI("-thi1"), RationalExpr(-1) * Q,
                                 RationalExpr(-1) * Z,
                                 diag2(E("-thi2"), E("-thi3")));
        MatrixExpr Ainf = blocks4(RationalExpr(-1) * I2, O2, O2, O2);
        lp.A = {term(A0m1, "1/x^2"), term(A00, "1/x"), term(Ainf, "1")};
        lp.B = {{term(A0m1, "-1/(t*x)")}};
        MatrixExpr Mu(2, 2,
            {E("(2*p2*q1-p1+1)*q1"), E("p1-2*p2*q1-1"),
             E("2*q1*(p2*q2-th0-thi1-thi2)-(p1-1)*q2"),
             E("2*p2*q2+(p1-1)*q1+th0+2*thi1")});
        RationalExpr vlog = E("2*p2*(q1^2-q2)-2*(p1-1)*q1+th0+2*thi2");
        lp.frame = {gauge_Uv(Mu / t, vlog / t)};
        record_gauge(lp, get_system("Mat:III_D6").gauge_odes);
        add_guards(lp, {"t"});
        irregular_point(lp, "0", A00);
        infinity_thetas(lp, {"thi1", "thi1", "thi2", "thi3"});
        out.push_back(std::move(lp));
    }

    {  // Mat:II — single irregular point at infinity ((((2)))(((11))))
        LinearProblem lp = from_catalog("Mat:II", "Mat:II", 4);
        auto [Q, P] = mat_qp("p2*q2-(thi1+thi2)");
        RationalExpr t = E("t");
        MatrixExpr Th = diag2(E("thi2"), E("thi3"));
        MatrixExpr R = RationalExpr(-1) * P + Q * Q + t * I2;
        MatrixExpr Am3 = blocks4(O2, O2, O2, I2);
        MatrixExpr Am2 = blocks4(O2, I2, R, O2);
        MatrixExpr Am1 = blocks4(R, Q, RationalExpr(-1) * R * Q - Th,
                                 P - Q * Q);
        lp.A = {term(Am3, "x^2"), term(Am2, "x"), term(Am1, "1")};
        MatrixExpr B1h = blocks4(Q, I2, R, O2);
        lp.B = {{term(Am3, "x"), term(B1h, "1")}};
        MatrixExpr Mu = diag2(E("2*(q1+p2)"), RationalExpr(0));
        RationalExpr vlog = E("2*(q1+p2)");
        lp.frame = {gauge_Uv(Mu, vlog)};
        record_gauge(lp, get_system("Mat:II").gauge_odes);
        infinity_thetas(lp, {"thi1", "thi1", "thi2", "thi3"});
        out.push_back(std::move(lp));
    }
}

}  // namespace lax_detail

}  // namespace iso4d
