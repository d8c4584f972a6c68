#pragma once
#include <array>
#include <map>
#include <string>
#include <vector>

#include "classical.hpp"
#include "matrix.hpp"
#include "spectral.hpp"

namespace iso4d {

// ---------------------------------------------------------------------------
// Catalog of the 22 four-dimensional Painlevé-type Hamiltonian systems.
// Each system carries two equivalent parameterizations:
//   * the Greek-letter form (alpha, beta, ...) used in the survey list, and
//   * the theta-form (characteristic exponents of the linear problem) used
//     by the Lax pairs, together with the affine map Greek -> theta.
// Hamiltonians are stored bare (prefactors t(t-1), t divided out), so the
// flow is always q' = dH/dp, p' = -dH/dq.
// ---------------------------------------------------------------------------

struct ParameterSet {
    std::vector<Symbol> names;     // theta symbols, in Riemann-scheme order
    RationalExpr fuchs_relation;   // linear form required to vanish
};

struct HamiltonianSystem {
    std::string id;       // e.g. "Gar:2+1+1+1", "FS:A5", "Mat:VI"
    Family family;
    std::string pattern;  // singularity pattern, e.g. "2+1+1+1"
    std::string spectral; // spectral type, e.g. "(1)(1),11,11,11"
    std::vector<Symbol> times;              // length 1 or 2
    std::vector<Symbol> vars;               // q1,p1,q2,p2
    std::vector<Symbol> greek_params;       // survey-list parameter names
    std::vector<RationalExpr> hamiltonians_greek;  // one per time
    // theta-form data (filled from the Lax-pair parameterizations)
    ParameterSet params;                            // theta names + Fuchs relation
    std::vector<RationalExpr> hamiltonians_theta;   // one per time
    std::map<Symbol, RationalExpr> param_map;       // greek symbol -> theta expr
    // gauge log-derivatives, one list per time variable:
    // gauge_odes[i] = {(g, rhs)} with d(log g)/dt_i = rhs (theta parameters)
    std::vector<std::vector<std::pair<Symbol, RationalExpr>>> gauge_odes;
    // named canonical charts, e.g. "lambda_mu": lambda/mu symbols in terms of
    // the (q,p) chart
    std::map<std::string, std::map<Symbol, RationalExpr>> charts;

    const std::vector<RationalExpr>& hamiltonians() const {
        return hamiltonians_theta.empty() ? hamiltonians_greek : hamiltonians_theta;
    }
};

namespace cat_detail {

inline RationalExpr E(const std::string& s) { return parse_expr(s); }

inline std::vector<RationalExpr> P(std::initializer_list<const char*> xs) {
    std::vector<RationalExpr> v;
    for (const char* x : xs) v.push_back(parse_expr(x));
    return v;
}

inline std::vector<Symbol> syms(std::initializer_list<const char*> xs) {
    std::vector<Symbol> v;
    for (const char* x : xs) v.push_back(sym(x));
    return v;
}

// 2x2 matrix from four expression strings (row major).
inline MatrixExpr M2(const char* a, const char* b, const char* c, const char* d) {
    return MatrixExpr(2, 2, {parse_expr(a), parse_expr(b), parse_expr(c), parse_expr(d)});
}

}  // namespace cat_detail

// Matrix Painlevé canonical chart: Q, P in (q1,p1,q2,p2) with commutation
// [P,Q] = kappa K, kappa = alpha - omega, K = diag(1,-1); the canonical
// variables are recovered as p1 = tr P, q1 = (1/2) tr Q, p2 = P12/Q12,
// q2 = -Q12 Q21.
struct MatrixChart {
    MatrixExpr Q, P, K;
    RationalExpr kappa;
};

inline MatrixChart matrix_chart_greek() {
    using cat_detail::M2;
    MatrixChart ch;
    ch.Q = M2("q1", "1", "-q2", "q1");
    ch.P = M2("p1/2", "-p2", "p2*q2-(alpha-omega)", "p1/2");
    ch.K = MatrixExpr::diagonal({RationalExpr(1), RationalExpr(-1)});
    ch.kappa = cat_detail::E("alpha-omega");
    return ch;
}

// Trace-form matrix Hamiltonians, expanded to scalars in (q1,p1,q2,p2).
// Prefactors t(t-1), t are divided out.
inline RationalExpr matrix_expand(const std::string& id) {
    using cat_detail::E;
    MatrixChart ch = matrix_chart_greek();
    const MatrixExpr &Q = ch.Q, &P = ch.P, &K = ch.K;
    MatrixExpr I = MatrixExpr::identity(2);
    RationalExpr t = E("t");
    MatrixExpr Qm1 = Q - I, Qmt = Q - t * I;
    if (id == "Mat:VI") {
        RationalExpr a = E("alpha"), b = E("beta"), c = E("gamma"), d = E("delta"),
                     w = E("omega");
        MatrixExpr lin = (d * I - (a - w) * K) * Q * Qm1 + c * Qm1 * Qmt -
                         (2 * a + b + c + d) * Q * Qmt;
        MatrixExpr H = Q * Qm1 * Qmt * P * P + lin * P + (a * (a + b)) * Q;
        return H.trace() / (t * (t - RationalExpr(1)));
    }
    if (id == "Mat:V") {
        RationalExpr a = E("alpha"), b = E("beta"), c = E("gamma");
        MatrixExpr H = Q * Qm1 * P * (P + t * I) + b * Q * P + c * P - ((a + c) * t) * Q;
        return H.trace() / t;
    }
    if (id == "Mat:IV") {
        RationalExpr a = E("alpha"), b = E("beta");
        MatrixExpr H = Q * P * (P - Q - t * I) + b * P + a * Q;
        return H.trace();
    }
    if (id == "Mat:III_D6") {
        RationalExpr a = E("alpha"), b = E("beta");
        MatrixExpr H = Q * Q * P * P - (Q * Q + b * Q - t * I) * P - a * Q;
        return H.trace() / t;
    }
    if (id == "Mat:II") {
        RationalExpr a = E("alpha");
        MatrixExpr H = P * P - (Q * Q + t * I) * P - a * Q;
        return H.trace();
    }
    throw iso4d_error("matrix_expand: unknown id '" + id + "'");
}

namespace cat_detail {

inline RationalExpr CH(const char* kind, std::initializer_list<const char*> par,
                       const char* t, const char* q, const char* p) {
    return classical_hamiltonian(kind, P(par), E(t), E(q), E(p));
}

inline std::vector<HamiltonianSystem> build_catalog() {
    std::vector<HamiltonianSystem> out;
    auto add = [&](const std::string& id, Family fam, const std::string& pattern,
                   const std::string& spectral, std::initializer_list<const char*> times,
                   std::initializer_list<const char*> greeks,
                   std::vector<RationalExpr> hams) {
        HamiltonianSystem s;
        s.id = id;
        s.family = fam;
        s.pattern = pattern;
        s.spectral = spectral;
        s.times = syms(times);
        s.vars = syms({"q1", "p1", "q2", "p2"});
        s.greek_params = syms(greeks);
        s.hamiltonians_greek = std::move(hams);
        out.push_back(std::move(s));
    };

    // --- Garnier family (two time variables each) -------------------------

    {  // Gar:1+1+1+1+1, i in Z/2Z
        std::vector<RationalExpr> H;
        for (int i = 0; i < 2; ++i) {
            std::string qi = i ? "q2" : "q1", pi = i ? "p2" : "p1";
            std::string qj = i ? "q1" : "q2", pj = i ? "p1" : "p2";
            std::string ti = i ? "t2" : "t1", tj = i ? "t1" : "t2";
            std::string gi = i ? "gamma2" : "gamma1", gj = i ? "gamma1" : "gamma2";
            RationalExpr hvi = classical_hamiltonian(
                "VI", {E("alpha"), E("beta"), E(gi), E(gj) + E("delta")}, E(ti), E(qi),
                E(pi));
            // Coupling terms.  A frequently-seen rendering of this system has
            // the q1*q2*p_{i+1} coefficient (alpha+gamma1+gamma2+delta-1), a
            // +2 t_i(t_{i+1}-1) p1 p2 cross term, and a last term
            // -gamma_i t_i ((t1-1)p1+(t2-1)p2)/(t_i-t_{i+1}).  That variant
            // fails the pairwise-flow compatibility identity; the form below
            // is the one consistent with the deformation equations (it is the
            // expansion of the theta-parameterized coupling).
            RationalExpr coup =
                E("(2*" + qi + "*" + pi + "+" + qj + "*" + pj +
                  "-beta-2*alpha)*q1*q2*" + pj) -
                E("q1*q2/(" + ti + "-" + tj + ")*(" + ti + "*(" + ti + "-1)*" + pi +
                  "^2-2*" + ti + "*(" + tj + "-1)*p1*p2+" + tj + "*(" + ti + "-1)*" + pj +
                  "^2)") +
                E(gj + "*" + tj + "*(" + ti + "-1)/(" + ti + "-" + tj + ")*" + qi + "*(" +
                  pi + "-" + pj + ")") -
                E(gi + "*" + ti + "/(" + ti + "-" + tj + ")*" + qj + "*((" + ti +
                  "-1)*" + pi + "-(" + tj + "-1)*" + pj + ")");
            H.push_back(hvi + coup / E(ti + "*(" + ti + "-1)"));
        }
        add("Gar:1+1+1+1+1", Family::Garnier, "1+1+1+1+1", "11,11,11,11,11",
            {"t1", "t2"}, {"alpha", "beta", "gamma1", "gamma2", "delta"}, std::move(H));
    }

    add("Gar:2+1+1+1", Family::Garnier, "2+1+1+1", "(1)(1),11,11,11", {"t1", "t2"},
        {"alpha", "beta", "gamma", "delta"},
        {CH("V", {"-alpha-gamma", "-beta-gamma-delta-1", "alpha+beta+gamma"}, "t1", "q1",
            "p1") +
             E("p1/t1*(gamma*(q1-q2)+p2*q2*(q2-1))"
               "+((q1-q2)*p1-beta)*((q2-q1)*p2-gamma)/(t1-t2)"),
         CH("V", {"-alpha-beta", "-beta-gamma-delta-1", "alpha+beta+gamma"}, "t2", "q2",
            "p2") +
             E("p2/t2*(beta*(q2-q1)+p1*q1*(q1-1))"
               "+((q1-q2)*p1-beta)*((q2-q1)*p2-gamma)/(t2-t1)")});

    add("Gar:2+2+1", Family::Garnier, "2+2+1", "(1)(1),(1)(1),11", {"t1", "t2"},
        {"alpha", "beta", "gamma"},
        {CH("V", {"alpha+beta+gamma", "beta-alpha", "-beta-gamma"}, "t1", "q1", "p1") +
             E("(q1*q2*(p1*q1-alpha)+p2*q2*(alpha+p1-2*p1*q1)"
               "-t2/t1*p1*(p2-q1))/t1"),
         CH("III_D6", {"-alpha-beta-gamma", "-beta"}, "t2", "q2", "p2") +
             E("(-(p1*q1-alpha)*q2*(q1-1)+t2/t1*p1*(p2-q1))/t2")});

    add("Gar:3+1+1", Family::Garnier, "3+1+1", "((1))((1)),11,11", {"t1", "t2"},
        {"alpha", "beta", "gamma"},
        {CH("IV", {"alpha", "gamma"}, "t1", "q1", "p1") +
             E("p2*q2*p1+(p1*(q1-q2)-alpha)*(p2*(q2-q1)-beta)/(t1-t2)"),
         CH("IV", {"beta", "gamma"}, "t2", "q2", "p2") +
             E("p1*q1*p2+(p1*(q1-q2)-alpha)*(p2*(q2-q1)-beta)/(t2-t1)")});

    add("Gar:3+2", Family::Garnier, "3+2", "((1))((1)),(1)(1)", {"t1", "t2"},
        {"alpha", "beta"},
        {CH("III_D6", {"-beta", "alpha+1"}, "t1", "q1", "p1") +
             E("-p1-q1*q2/t1*(q2-p2+t2)+p1*p2-q2"),
         CH("IV", {"alpha", "beta"}, "t2", "q2", "p2") +
             E("-p1*q1*(p2-2*q2-t2)-q1*q2+t1*p1")});

    add("Gar:4+1", Family::Garnier, "4+1", "(((1)))(((1))),11", {"t1", "t2"},
        {"alpha", "beta"},
        {CH("II", {"-beta"}, "t1", "q1", "p1") +
             E("p2*q2*(q1-q2+t2)+p1*p2+alpha*q2"),
         E("-p2^2*q2-t2*p2*q2^2+t2^2*p2*q2+alpha*t2*q2-beta*p2"
           "+p1*p2*(q1-2*q2+t2)+q1*q2*(p2*q2-alpha)+alpha*p1+t1*p2*q2")});

    add("Gar:5", Family::Garnier, "5", "((((1))))((((1))))", {"t1", "t2"}, {"alpha"},
        {E("-q1*(q1*p1-alpha)+q2*(q1*(p2+q2)-2*p1+t1)+p1*(p2-2*t2)"),
         CH("IV", {"-1", "alpha"}, "2*t2", "q2", "p2") +
             E("q1*q2*(q1*q2-2*p1+t1)+p1*(p1-p2*q1-t1)")});

    add("Gar:3/2+1+1+1", Family::FS, "2+2", "(2)(1),(1)(1)(1)", {"t1", "t2"},
        {"alpha", "beta", "gamma"},
        {CH("III_D6", {"-alpha", "gamma-alpha"}, "t1", "q1", "p1") +
             E("q1*(q1*p1*p2-alpha*p2)/t1"
               "+(p1*(q1-q2)-alpha)*(p2*(q2-q1)-beta)/(t1-t2)"),
         CH("III_D6", {"-beta", "gamma-beta"}, "t2", "q2", "p2") +
             E("q2*(q2*p1*p2-beta*p1)/t2"
               "+(p1*(q1-q2)-alpha)*(p2*(q2-q1)-beta)/(t2-t1)")});

    add("Gar:5/2+1+1", Family::FS, "4", "(((1)(1)))(((1)))", {"t1", "t2"},
        {"alpha", "beta"},
        {CH("II", {"-alpha"}, "t1", "q1", "p1") +
             E("p1*p2+(p1*(q1-q2)-alpha)*(p2*(q2-q1)-beta)/(t1-t2)"),
         CH("II", {"-beta"}, "t2", "q2", "p2") +
             E("p1*p2+(p1*(q1-q2)-alpha)*(p2*(q2-q1)-beta)/(t2-t1)")});

    // --- Fuji-Suzuki family (single time) ---------------------------------

    add("FS:A5", Family::FS, "1+1+1+1", "21,21,111,111", {"t"},
        {"alpha", "beta", "gamma", "delta", "epsilon", "omega"},
        {CH("VI", {"alpha", "beta+delta", "beta+gamma", "epsilon-omega+1"}, "t", "q1",
            "p1") +
         CH("VI", {"beta", "alpha+delta", "alpha+gamma", "epsilon-alpha+1"}, "t", "q2",
            "p2") +
         E("(q1-t)*(q2-1)*((p1*q1-alpha)*p2+p1*(p2*q2-beta))/(t*(t-1))")});

    add("FS:A4", Family::FS, "2+1+1", "(11)(1),21,111", {"t"},
        {"alpha", "beta", "gamma", "delta", "epsilon"},
        {CH("V", {"alpha+beta+delta+epsilon", "alpha+gamma-delta-1", "-alpha-epsilon"},
            "t", "q1", "p1") +
         CH("V", {"alpha+epsilon", "alpha+gamma-epsilon-1", "-alpha"}, "t", "q2", "p2") +
         E("p1*(q2-1)*(p2*(q1+q2)-epsilon)/t")});

    add("FS:A3", Family::FS, "2+2", "(11)(1),(11)(1)", {"t"},
        {"alpha", "beta", "gamma", "delta"},
        {CH("III_D6", {"alpha+gamma", "-beta+gamma"}, "t", "q1", "p1") +
         CH("III_D6", {"delta", "-beta+delta"}, "t", "q2", "p2") +
         E("p1*q2*(p2*(q1+q2)+delta)/t")});

    add("NY:A5", Family::FS, "2+1+1", "(2)(1),111,111", {"t"},
        {"alpha", "beta", "gamma", "delta", "epsilon"},
        {CH("V", {"alpha+beta", "alpha+gamma+epsilon", "-alpha"}, "t", "q1", "p1") +
         CH("V", {"alpha+gamma+delta", "alpha+gamma+epsilon", "-alpha-gamma"}, "t", "q2",
            "p2") +
         E("2*p1*p2*q1*(q2-1)/t")});

    add("NY:A4", Family::FS, "3+1", "((11))((1)),111", {"t"},
        {"alpha", "beta", "gamma", "delta"},
        {CH("IV", {"beta", "alpha"}, "t", "q1", "p1") +
         CH("IV", {"delta", "alpha+gamma"}, "t", "q2", "p2") + E("2*q1*p1*p2")});

    // --- Sasano family ----------------------------------------------------

    add("Ss:D6", Family::Sasano, "1+1+1+1", "31,22,22,1111", {"t"},
        {"alpha", "beta", "gamma", "delta", "epsilon", "zeta"},
        // The fourth argument of the first H_VI is often rendered
        // 1-alpha-beta-2*delta-epsilon-zeta; that variant is inconsistent
        // with the exponent parameterization of the linear problem (it
        // differs by gamma), so the corrected value is stored here.
        {CH("VI",
            {"beta+gamma+2*delta+epsilon+zeta", "-beta-zeta", "-beta-2*gamma-2*delta-epsilon",
             "1-alpha-beta-gamma-2*delta-epsilon-zeta"},
            "t", "q1", "p1") +
         CH("VI", {"gamma+delta", "epsilon", "zeta", "1-alpha-gamma"}, "t", "q2", "p2") +
         E("2*(q1-1)*p2*q2*((q1-t)*p1-(beta+gamma+2*delta+epsilon+zeta))/(t*(t-1))")});

    add("Ss:D5", Family::Sasano, "2+1+1", "(2)(2),31,1111", {"t"},
        {"alpha", "beta", "gamma", "delta", "epsilon"},
        {CH("V", {"epsilon", "alpha-beta", "beta"}, "t", "q1", "p1") +
         CH("V",
            {"-2*alpha-3*beta-gamma-delta-2*epsilon", "-alpha-beta-2*delta",
             "alpha+2*beta+delta+epsilon"},
            "t", "q2", "p2") +
         E("2*p2*q1*(p1*(q1-1)-beta-epsilon)/t")});

    add("Ss:D4", Family::Sasano, "2+2", "(2)(2),(111)(1)", {"t"},
        {"alpha", "beta", "gamma", "delta"},
        {CH("III_D6", {"alpha+beta+gamma", "-alpha-2*delta"}, "t", "q1", "p1") +
         CH("III_D6", {"-gamma", "-alpha-2*gamma"}, "t", "q2", "p2") +
         E("2*p2*q1*(p1*q1+alpha+beta+gamma)/t")});

    // --- Matrix Painlevé family -------------------------------------------

    add("Mat:VI", Family::Matrix, "1+1+1+1", "22,22,22,211", {"t"},
        {"alpha", "beta", "gamma", "delta", "omega"}, {matrix_expand("Mat:VI")});
    add("Mat:V", Family::Matrix, "2+1+1", "(2)(2),22,211", {"t"},
        {"alpha", "beta", "gamma", "omega"}, {matrix_expand("Mat:V")});
    add("Mat:IV", Family::Matrix, "3+1", "((2))((2)),211", {"t"},
        {"alpha", "beta", "omega"}, {matrix_expand("Mat:IV")});
    add("Mat:III_D6", Family::Matrix, "2+2", "(2)(2),(2)(11)", {"t"},
        {"alpha", "beta", "omega"}, {matrix_expand("Mat:III_D6")});
    add("Mat:II", Family::Matrix, "4", "(((2)))(((11)))", {"t"}, {"alpha", "omega"},
        {matrix_expand("Mat:II")});

    return out;
}

}  // namespace cat_detail

// Defined in catalog_theta.hpp (included at the end of this header): fills
// in the theta-form Hamiltonians, Fuchs relations, parameter maps and gauge
// ODEs read off the Lax-pair parameterizations.
void load_theta_forms(std::vector<HamiltonianSystem>& systems);

inline const std::vector<HamiltonianSystem>& catalog() {
    static const std::vector<HamiltonianSystem> c = [] {
        auto v = cat_detail::build_catalog();
        load_theta_forms(v);
        return v;
    }();
    return c;
}

inline const HamiltonianSystem& get_system(const std::string& id) {
    for (const auto& s : catalog())
        if (s.id == id) return s;
    throw iso4d_error("get_system: unknown id '" + id + "'");
}

inline std::vector<std::string> catalog_ids() {
    std::vector<std::string> v;
    for (const auto& s : catalog()) v.push_back(s.id);
    return v;
}

// Hamiltonian vector field q_i' = dH/dp_i, p_i' = -dH/dq_i for the flow in
// times[time_index].  Uses the Greek-form Hamiltonian unless `theta` is set.
inline std::map<Symbol, RationalExpr> vector_field(const HamiltonianSystem& sys,
                                                   size_t time_index,
                                                   bool theta = false) {
    if (time_index >= sys.times.size())
        throw iso4d_error("vector_field: time index out of range for " + sys.id);
    const RationalExpr& H = theta ? sys.hamiltonians_theta.at(time_index)
                                  : sys.hamiltonians_greek.at(time_index);
    std::map<Symbol, RationalExpr> vf;
    for (size_t i = 0; i + 1 < sys.vars.size(); i += 2) {
        Symbol q = sys.vars[i], p = sys.vars[i + 1];
        vf[q] = H.derivative(p);
        vf[p] = -H.derivative(q);
    }
    return vf;
}

// The Fuchs(-Hukuhara) relation must be a linear form in the stored theta
// parameters with integer coefficients, every one of which actually occurs.
inline bool fuchs_check(const std::string& id) {
    const auto& sys = get_system(id);
    const RationalExpr& f = sys.params.fuchs_relation;
    if (f.is_zero()) return false;
    if (!f.den().is_constant()) return false;
    for (const Symbol& th : sys.params.names) {
        RationalExpr d = f.derivative(th);
        if (!d.num().is_constant() || !d.den().is_constant()) return false;  // linearity
        Rat c = d.num().constant_value() / d.den().constant_value();
        if (c.get_den() != 1) return false;  // integer coefficient
    }
    // the relation involves nothing but the parameters (no constant offset)
    RationalExpr rest = f;
    for (const Symbol& th : sys.params.names)
        rest = rest.substitute({{th, RationalExpr(0)}});
    return rest.is_zero();
}

// Substitute the Fuchs relation into an expression by solving it for the
// last theta parameter (the section-5 schemes are only consistent on that
// hyperplane).
inline RationalExpr impose_fuchs(const HamiltonianSystem& sys, const RationalExpr& e) {
    if (sys.params.names.empty()) return e;
    const Symbol last = sys.params.names.back();
    const RationalExpr& f = sys.params.fuchs_relation;
    RationalExpr c = f.derivative(last);
    if (!c.num().is_constant() || !c.den().is_constant() || c.is_zero())
        throw iso4d_error("impose_fuchs: relation not linear in " + last.name());
    RationalExpr sol = (c * RationalExpr(last) - f) / c;  // solve f == 0
    return e.substitute({{last, sol}});
}

// Poisson bracket {f,g} = sum_i df/dq_i dg/dp_i - df/dp_i dg/dq_i.
inline RationalExpr poisson_bracket(const RationalExpr& f, const RationalExpr& g,
                                    const std::vector<Symbol>& vars) {
    RationalExpr r;
    for (size_t i = 0; i + 1 < vars.size(); i += 2) {
        Symbol q = vars[i], p = vars[i + 1];
        r += f.derivative(q) * g.derivative(p) - f.derivative(p) * g.derivative(q);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Noumi-Yamada correspondence.  The A4 (resp. A5) system for f_0..f_4
// (resp. f_0..f_5) maps onto the NY:A4 / NY:A5 Hamiltonian systems via
//   p1 = f2, q1 = -f1, p2 = f4, q2 = -f1-f3,
// with parameters alpha..epsilon = -alpha_1..-alpha_5.
// ---------------------------------------------------------------------------
inline std::map<Symbol, RationalExpr> ny_map(const std::vector<RationalExpr>& f,
                                             const std::string& level) {
    size_t need = level == "A4" ? 5 : level == "A5" ? 6 : 0;
    if (need == 0) throw iso4d_error("ny_map: level must be A4 or A5");
    if (f.size() != need)
        throw iso4d_error("ny_map: " + level + " needs " + std::to_string(need) +
                          " f's, got " + std::to_string(f.size()));
    std::map<Symbol, RationalExpr> m;
    m[sym("p1")] = f[2];
    m[sym("q1")] = -f[1];
    m[sym("p2")] = f[4];
    m[sym("q2")] = -f[1] - f[3];
    return m;
}

// Right-hand sides of the NY A4 system df_i/dt = f_i(f_{i+1}-f_{i+2}+f_{i+3}-f_{i+4}) + a_i.
inline std::vector<RationalExpr> ny_a4_rhs(const std::vector<RationalExpr>& f,
                                           const std::vector<RationalExpr>& a) {
    if (f.size() != 5 || a.size() != 5) throw iso4d_error("ny_a4_rhs: need 5 f's and 5 a's");
    std::vector<RationalExpr> r;
    for (size_t i = 0; i < 5; ++i)
        r.push_back(f[i] * (f[(i + 1) % 5] - f[(i + 2) % 5] + f[(i + 3) % 5] -
                            f[(i + 4) % 5]) +
                    a[i]);
    return r;
}

// Right-hand sides of the NY A5 system (i in Z/6Z):
// df_i/dt = f_i(f_{i+1}f_{i+2} - f_{i+2}f_{i+3} + f_{i+1}f_{i+4} - f_{i+2}f_{i+5}
//               + f_{i+3}f_{i+4} - f_{i+4}f_{i+5})
//           + (-1)^i (a_{i+1}+a_{i+2}+a_{i+5}) f_i + a_i (f_i+f_{i+2}+f_{i+4}).
inline std::vector<RationalExpr> ny_a5_rhs(const std::vector<RationalExpr>& f,
                                           const std::vector<RationalExpr>& a) {
    if (f.size() != 6 || a.size() != 6) throw iso4d_error("ny_a5_rhs: need 6 f's and 6 a's");
    std::vector<RationalExpr> r;
    auto F = [&](size_t i) { return f[i % 6]; };
    auto A = [&](size_t i) { return a[i % 6]; };
    for (size_t i = 0; i < 6; ++i) {
        RationalExpr cubic = F(i) * (F(i + 1) * F(i + 2) - F(i + 2) * F(i + 3) +
                                     F(i + 1) * F(i + 4) - F(i + 2) * F(i + 5) +
                                     F(i + 3) * F(i + 4) - F(i + 4) * F(i + 5));
        RationalExpr lin = (A(i + 1) + A(i + 2) + A(i + 5)) * F(i);
        if (i % 2) lin = -lin;
        r.push_back(cubic + lin + A(i) * (F(i) + F(i + 2) + F(i + 4)));
    }
    return r;
}

// Parameter aliases for the NY correspondence: alpha..epsilon = -alpha_1.. .
inline std::map<Symbol, RationalExpr> ny_params(const std::string& level) {
    std::map<Symbol, RationalExpr> m;
    const char* greek[] = {"alpha", "beta", "gamma", "delta", "epsilon"};
    size_t n = level == "A4" ? 4 : level == "A5" ? 5 : 0;
    if (n == 0) throw iso4d_error("ny_params: level must be A4 or A5");
    for (size_t i = 0; i < n; ++i)
        m[sym(greek[i])] = -RationalExpr(sym("a" + std::to_string(i + 1)));
    return m;
}

}  // namespace iso4d

#include "catalog_theta.hpp"
