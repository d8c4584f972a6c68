#pragma once
// Per-system linear-problem data.  Included at the end of laxpair.hpp; do
// not include directly.  All matrices are stored in the hat frame (see the
// header comment of laxpair.hpp).

namespace iso4d {

namespace lax_detail {

// Start a problem from its catalog entry: times, variables, theta
// parameters, Fuchs relation and flow Hamiltonians.
inline LinearProblem from_catalog(const std::string& id,
                                  const std::string& system_id, int size) {
    const HamiltonianSystem& sys = get_system(system_id);
    LinearProblem lp;
    lp.id = id;
    lp.system_id = system_id;
    lp.size = size;
    lp.times = sys.times;
    lp.vars = sys.vars;
    lp.params = sys.params.names;
    lp.fuchs = sys.params.fuchs_relation;
    lp.flow = sys.hamiltonians_theta;
    return lp;
}

// Diagonal gauge factor diag(1, u, v, ...) taken from the catalog gauge
// ODEs: W_i = diag(0, dlog u/dt_i, dlog v/dt_i, ...).
inline FrameFactor diag_gauge(const LinearProblem& lp,
                              const std::vector<std::vector<std::pair<Symbol, RationalExpr>>>& odes) {
    FrameFactor f;
    f.chain = false;
    for (const auto& per_time : odes) {
        MatrixExpr W(lp.size, lp.size);
        int slot = 1;
        for (const auto& [g, rhs] : per_time) {
            W.at(slot, slot) = rhs;
            ++slot;
        }
        f.W.push_back(W);
    }
    return f;
}

inline void record_gauge(LinearProblem& lp,
                         const std::vector<std::vector<std::pair<Symbol, RationalExpr>>>& odes) {
    for (size_t i = 0; i < odes.size(); ++i)
        for (const auto& [g, rhs] : odes[i]) {
            auto& v = lp.gauge_subst[g];
            v.resize(lp.times.size());
            v[i] = rhs;
        }
}

inline void add_guards(LinearProblem& lp, std::initializer_list<const char*> gs) {
    for (const char* g : gs) lp.guards.push_back(parse_expr(g));
}

inline void fuchsian_point(LinearProblem& lp, const std::string& label,
                           const MatrixExpr& residue,
                           std::initializer_list<const char*> exps) {
    SchemePoint pt;
    pt.label = label;
    pt.residue = residue;
    for (const char* e : exps) pt.exponents.push_back(parse_expr(e));
    pt.fuchsian = true;
    lp.scheme.push_back(std::move(pt));
}

inline void irregular_point(LinearProblem& lp, const std::string& label,
                            const MatrixExpr& residue) {
    SchemePoint pt;
    pt.label = label;
    pt.residue = residue;  // coefficient of 1/(x - location) only
    pt.fuchsian = false;
    lp.scheme.push_back(std::move(pt));
}

inline void infinity_thetas(LinearProblem& lp,
                            std::initializer_list<const char*> exps) {
    for (const char* e : exps) lp.infinity_exponents.push_back(parse_expr(e));
}

// --- Garnier family (2x2 linear problems) ----------------------------------

inline void build_garnier(std::vector<LinearProblem>& out) {
    const MatrixExpr E2 = M(2, {"0", "0", "0", "1"});

    {  // Gar:1+1+1+1+1 — Fuchsian, five regular points
        LinearProblem lp = from_catalog("Gar:1+1+1+1+1", "Gar:1+1+1+1+1", 2);
        MatrixExpr A0 = outer({"1", "0"}, {"th0", "-1+q1/t1+q2/t2"});
        MatrixExpr A1 = outer({"1", "p1*q1+p2*q2-thi2"},
                              {"th1+thi2-p1*q1-p2*q2", "1"});
        MatrixExpr At1 = outer({"1", "t1*p1"}, {"tht1+p1*q1", "-q1/t1"});
        MatrixExpr At2 = outer({"1", "t2*p2"}, {"tht2+p2*q2", "-q2/t2"});
        lp.A = {term(A0, "1/x"), term(A1, "1/(x-1)"), term(At1, "1/(x-t1)"),
                term(At2, "1/(x-t2)")};
        lp.B = {{term(At1, "-1/(x-t1)")}, {term(At2, "-1/(x-t2)")}};
        // a = (A_inf)_{21} with A_inf = -(A0+A1+At1+At2)
        FrameFactor P;
        P.chain = true;
        RationalExpr a = -(A0 + A1 + At1 + At2).at(1, 0);
        P.F = MatrixExpr(2, 2, {parse_expr("1"), parse_expr("0"),
                                a / parse_expr("thi1-thi2"), parse_expr("1")});
        const auto& odes = get_system("Gar:1+1+1+1+1").gauge_odes;
        lp.frame = {P, diag_gauge(lp, odes)};
        record_gauge(lp, odes);
        add_guards(lp, {"t1", "t2", "t1-1", "t2-1", "t1-t2", "thi1-thi2"});
        fuchsian_point(lp, "0", A0, {"0", "th0"});
        fuchsian_point(lp, "1", A1, {"0", "th1"});
        fuchsian_point(lp, "t1", At1, {"0", "tht1"});
        fuchsian_point(lp, "t2", At2, {"0", "tht2"});
        fuchsian_point(lp, "infinity", -(A0 + A1 + At1 + At2), {"thi1", "thi2"});
        infinity_thetas(lp, {"thi1", "thi2"});
        out.push_back(std::move(lp));
    }

    {  // Gar:2+1+1+1 — regular points 0, 1, t2/t1; rank-one irregular infinity
        LinearProblem lp = from_catalog("Gar:2+1+1+1", "Gar:2+1+1+1", 2);
        const auto& sys = get_system("Gar:2+1+1+1");
        std::map<Symbol, RationalExpr> ch = sys.charts.at("lambda_mu");
        MatrixExpr A0 =
            outer({"1", "1"}, {"mu1*lambda1+mu2*lambda2-th1-tht-thi1",
                               "-mu1*lambda1-mu2*lambda2-thi2"})
                .substitute(ch);
        MatrixExpr A1 =
            outer({"1", "lambda1"}, {"th1-mu1*lambda1", "mu1"}).substitute(ch);
        MatrixExpr At =
            outer({"1", "lambda2"}, {"tht-mu2*lambda2", "mu2"}).substitute(ch);
        MatrixExpr Ainf = M(2, {"0", "0", "0", "t1"});
        MatrixExpr S = A0 + A1 + At;
        MatrixExpr B1h(2, 2);
        B1h.at(0, 1) = S.at(0, 1) / parse_expr("t1");
        B1h.at(1, 0) = S.at(1, 0) / parse_expr("t1");
        lp.A = {term(A0, "1/x"), term(A1, "1/(x-1)"),
                term(At, "1/(x-t2/t1)"), term(Ainf, "1")};
        lp.B = {{term(E2, "x"), term(B1h, "1"),
                 term(At, "t2/(t1^2*(x-t2/t1))")},
                {term(At, "-1/(t1*(x-t2/t1))")}};
        lp.frame = {diag_gauge(lp, sys.gauge_odes)};
        record_gauge(lp, sys.gauge_odes);
        add_guards(lp, {"t1", "t2", "t1-t2", "t2/t1-1", "q1", "q2"});
        fuchsian_point(lp, "0", A0, {"0", "th0"});
        fuchsian_point(lp, "1", A1, {"0", "th1"});
        fuchsian_point(lp, "t2/t1", At, {"0", "tht"});
        infinity_thetas(lp, {"thi1", "thi2"});
        out.push_back(std::move(lp));
    }

    {  // Gar:2+2+1 — irregular x=0 of rank one, regular x=1
        LinearProblem lp = from_catalog("Gar:2+2+1", "Gar:2+2+1", 2);
        const auto& sys = get_system("Gar:2+2+1");
        std::map<Symbol, RationalExpr> ch = sys.charts.at("lambda_mu");
        ch[sym("lambda2")] = parse_expr("q2");
        ch[sym("mu2")] = parse_expr("p2");
        MatrixExpr A0m1 =
            (parse_expr("t2/t1") * outer({"1", "1"}, {"1-mu2", "mu2"}))
                .substitute(ch);
        MatrixExpr A00 =
            M(2, {"mu1*lambda1-th1-thi1", "-mu1*lambda1-mu2*lambda2-thi2",
                  "mu1*lambda1+(1-mu2)*lambda2-th1-thi1", "-mu1*lambda1-thi2"})
                .substitute(ch);
        MatrixExpr A10 =
            outer({"1", "lambda1"}, {"-mu1*lambda1+th1", "mu1"}).substitute(ch);
        MatrixExpr Ainf = M(2, {"0", "0", "0", "t1"});
        MatrixExpr S = A00 + A10;
        MatrixExpr B1h(2, 2);
        B1h.at(0, 1) = S.at(0, 1) / parse_expr("t1");
        B1h.at(1, 0) = S.at(1, 0) / parse_expr("t1");
        lp.A = {term(A0m1, "1/x^2"), term(A00, "1/x"), term(A10, "1/(x-1)"),
                term(Ainf, "1")};
        lp.B = {{term(E2, "x"), term(B1h, "1"), term(A0m1, "1/(t1*x)")},
                {term(A0m1, "-1/(t2*x)")}};
        lp.frame = {diag_gauge(lp, sys.gauge_odes)};
        record_gauge(lp, sys.gauge_odes);
        add_guards(lp, {"t1", "t2", "q1"});
        fuchsian_point(lp, "1", A10, {"0", "th1"});
        irregular_point(lp, "0", A00);
        infinity_thetas(lp, {"thi1", "thi2"});
        out.push_back(std::move(lp));
    }

    {  // Gar:3+1+1 — regular 0 and t2-t1, rank-two irregular infinity
        LinearProblem lp = from_catalog("Gar:3+1+1", "Gar:3+1+1", 2);
        const auto& sys = get_system("Gar:3+1+1");
        MatrixExpr A00 = outer({"q2", "1"}, {"p2", "-p2*q2+th0"});
        MatrixExpr A10 = outer({"q1", "1"}, {"p1", "-p1*q1+th1"});
        MatrixExpr Am1 = M(2, {"0", "-(p1*q1+p2*q2+thi1)", "-1", "-t2"});
        MatrixExpr B1h = M(2, {"0", "p1*q1+p2*q2+thi1", "1", "0"});
        lp.A = {term(A00, "1/x"), term(A10, "1/(x-(t2-t1))"), term(Am1, "1"),
                term(E2, "x")};
        lp.B = {{term(A10, "1/(x-(t2-t1))")},
                {term(A10, "-1/(x-(t2-t1))"), term(E2, "-x"), term(B1h, "1")}};
        lp.frame = {diag_gauge(lp, sys.gauge_odes)};
        record_gauge(lp, sys.gauge_odes);
        add_guards(lp, {"t1-t2"});
        fuchsian_point(lp, "0", A00, {"0", "th0"});
        fuchsian_point(lp, "t2-t1", A10, {"0", "th1"});
        infinity_thetas(lp, {"thi1", "thi2"});
        out.push_back(std::move(lp));
    }

    {  // Gar:3+2
        LinearProblem lp = from_catalog("Gar:3+2", "Gar:3+2", 2);
        const auto& sys = get_system("Gar:3+2");
        MatrixExpr A0m1 = outer({"q2", "1"}, {"-q1", "q1*q2+t1"});
        MatrixExpr A00 =
            M(2, {"-p1*q1+p2*q2", "-q2*(p2*q2-th0)+p1*(2*q1*q2+t1)", "p2",
                  "p1*q1-p2*q2+th0"});
        MatrixExpr Am1 = M(2, {"0", "p1*q1-p2*q2-thi1", "-1", "-t2"});
        MatrixExpr B1h = M(2, {"0", "-(p1*q1-p2*q2-thi1)", "1", "0"});
        lp.A = {term(A0m1, "1/x^2"), term(A00, "1/x"), term(Am1, "1"),
                term(E2, "x")};
        lp.B = {{term(A0m1, "-1/(t1*x)")}, {term(E2, "-x"), term(B1h, "1")}};
        lp.frame = {diag_gauge(lp, sys.gauge_odes)};
        record_gauge(lp, sys.gauge_odes);
        add_guards(lp, {"t1", "t2"});
        irregular_point(lp, "0", A00);
        infinity_thetas(lp, {"thi1", "thi2"});
        out.push_back(std::move(lp));
    }

    {  // Gar:4+1
        LinearProblem lp = from_catalog("Gar:4+1", "Gar:4+1", 2);
        const auto& sys = get_system("Gar:4+1");
        MatrixExpr A00 = outer({"q2", "1"}, {"p2", "-p2*q2+th0"});
        MatrixExpr Am3 = M(2, {"0", "0", "0", "-1"});
        MatrixExpr Am2 = M(2, {"0", "p1", "1", "-2*t2"});
        MatrixExpr Am1 =
            M(2, {"-p1", "p1*(q1+t2)-p2*q2-thi1", "-q1+t2", "p1-t1-t2^2"});
        MatrixExpr B1h = M(2, {"0", "p1", "1", "0"});
        MatrixExpr T1 = M(2, {"0", "0", "0", "t1+t2^2"});
        lp.A = {term(A00, "1/x"), term(Am1, "1"), term(Am2, "x"),
                term(Am3, "x^2")};
        lp.B = {{term(E2, "-x"), term(B1h, "1")},
                {term(E2, "-x^2"), term(Am2, "x"), term(Am1, "1"), term(T1, "1")}};
        lp.frame = {diag_gauge(lp, sys.gauge_odes)};
        record_gauge(lp, sys.gauge_odes);
        fuchsian_point(lp, "0", A00, {"0", "th0"});
        infinity_thetas(lp, {"thi1", "thi2"});
        out.push_back(std::move(lp));
    }

    {  // Gar:5 — single irregular point at infinity
        LinearProblem lp = from_catalog("Gar:5", "Gar:5", 2);
        const auto& sys = get_system("Gar:5");
        MatrixExpr Am4 = M(2, {"0", "0", "0", "1"});
        MatrixExpr Am3 = M(2, {"0", "q2", "-1", "0"});
        MatrixExpr Am2 = M(2, {"-q2", "-p1", "-q1", "q2+2*t2"});
        MatrixExpr Am1 =
            M(2, {"p1-q1*q2", "p1*q1-(p2-q2-2*t2)*q2-thi1", "-p2",
                  "-p1+q1*q2+t1"});
        MatrixExpr Tm2 = M(2, {"0", "0", "0", "-2*t2"});
        lp.A = {term(Am4, "x^3"), term(Am3, "x^2"), term(Am2, "x"),
                term(Am1, "1")};
        lp.B = {{term(Am4, "x"), term(Am3, "1")},
                {term(Am4, "x^2"), term(Am3, "x"), term(Am2, "1"),
                 term(Tm2, "1")}};
        lp.frame = {diag_gauge(lp, sys.gauge_odes)};
        record_gauge(lp, sys.gauge_odes);
        infinity_thetas(lp, {"thi1", "thi2"});
        out.push_back(std::move(lp));
    }
}

void build_fs(std::vector<LinearProblem>& out);
void build_sasano(std::vector<LinearProblem>& out);
void build_matrix(std::vector<LinearProblem>& out);

inline std::vector<LinearProblem> build_all() {
    std::vector<LinearProblem> v;
    build_garnier(v);
    build_fs(v);
    build_sasano(v);
    build_matrix(v);
    return v;
}

}  // namespace lax_detail

}  // namespace iso4d

#include "laxpair_fs.hpp"
#include "laxpair_sasano.hpp"
#include "laxpair_matrix.hpp"
