#pragma once
// Linear problems (Lax pairs) for every parameterized system, and the
// isomonodromy compatibility verifier.
//
// Each linear problem stores the x-equation A(x) and the deformation
// matrices B_i(x) in the "hat" frame, i.e. before conjugation by the gauge
// frame G (a product of a unipotent conjugator P or X and a diagonal or
// block-diagonal gauge U).  Writing W_i = (dG/dt_i) G^{-1}, the true
// compatibility residual is conjugate to
//
//   R_i(x) = d/dt_i A(x) + [A(x), W_i] - d/dx B_i(x) + [A(x), B_i(x)],
//
// where d/dt_i differentiates through the canonical variables with the
// Hamiltonian vector field of the flow.  R_i vanishes identically exactly
// when the printed compatibility statement holds, independently of the
// gauge values, so samples never need to assign u, v, w.
#include <map>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "matrix.hpp"
#include "rng.hpp"

namespace iso4d {

struct LaxTerm {
    MatrixExpr M;     // x-free coefficient matrix (hat frame)
    RationalExpr r;   // scalar in x and the times, e.g. 1/(x-t)
};

struct FrameFactor {
    bool chain = false;           // true: differentiate F by the chain rule
    MatrixExpr F;                 // the frame factor itself (chain case)
    std::vector<MatrixExpr> W;    // direct case: (dF/dt_i) F^{-1}, one per time
};

struct SchemePoint {
    std::string label;                     // "0", "1", "t", "t1", ...
    MatrixExpr residue;                    // coefficient of 1/(x - location)
    std::vector<RationalExpr> exponents;   // characteristic exponents
    bool fuchsian = false;                 // simple pole: residue eigenvalues
};

struct LinearProblem {
    std::string id;         // linear-problem id (may differ from system_id)
    std::string system_id;  // owning catalog system
    int size = 2;
    std::vector<Symbol> times;
    std::vector<Symbol> vars;    // canonical pairs (q1,p1,q2,p2) or (l1,m1,l2,m2)
    std::vector<Symbol> params;  // theta parameters, Fuchs solved for the last
    RationalExpr fuchs;
    std::vector<RationalExpr> flow;        // Hamiltonians, one per time
    std::vector<LaxTerm> A;                // x-equation
    std::vector<std::vector<LaxTerm>> B;   // deformation, one list per time
    std::vector<FrameFactor> frame;        // G = frame[0].F * frame[1].F * ...
    std::vector<RationalExpr> guards;      // must not vanish at a sample
    std::vector<SchemePoint> scheme;                // finite singular points
    std::vector<RationalExpr> infinity_exponents;   // theta row at infinity
    // gauge log-derivative substitution, one rhs per time
    std::map<Symbol, std::vector<RationalExpr>> gauge_subst;
};

struct ResidualReport {
    std::string system_id;
    std::string time;
    std::map<Symbol, Rat> sample;
    bool zero = false;
    std::vector<std::string> offending;
};

namespace lax_detail {

inline const Symbol& xsym() {
    static Symbol x = sym("x");
    return x;
}

inline MatrixExpr M(int n, std::initializer_list<const char*> es) {
    std::vector<RationalExpr> v;
    for (const char* e : es) v.push_back(parse_expr(e));
    return MatrixExpr(n, n, std::move(v));
}

// outer product col * row from expression strings
inline MatrixExpr outer(std::initializer_list<const char*> col,
                        std::initializer_list<const char*> row) {
    std::vector<RationalExpr> c, r;
    for (const char* e : col) c.push_back(parse_expr(e));
    for (const char* e : row) r.push_back(parse_expr(e));
    MatrixExpr m(static_cast<int>(c.size()), static_cast<int>(r.size()));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < r.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = c[i] * r[j];
    return m;
}

inline MatrixExpr outer(const std::vector<RationalExpr>& c,
                        const std::vector<RationalExpr>& r) {
    MatrixExpr m(static_cast<int>(c.size()), static_cast<int>(r.size()));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < r.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = c[i] * r[j];
    return m;
}

inline LaxTerm term(MatrixExpr m, const std::string& r) {
    return LaxTerm{std::move(m), parse_expr(r)};
}

inline std::vector<RationalExpr> exprs(std::initializer_list<const char*> es) {
    std::vector<RationalExpr> v;
    for (const char* e : es) v.push_back(parse_expr(e));
    return v;
}

// place the four 2x2 blocks into a 4x4 matrix
inline MatrixExpr blocks4(const MatrixExpr& a11, const MatrixExpr& a12,
                          const MatrixExpr& a21, const MatrixExpr& a22) {
    MatrixExpr m(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m.at(i, j) = a11.at(i, j);
            m.at(i, j + 2) = a12.at(i, j);
            m.at(i + 2, j) = a21.at(i, j);
            m.at(i + 2, j + 2) = a22.at(i, j);
        }
    return m;
}

// [I2; Bh] * (L, C): the 4x2 * 2x4 product used by the Sasano family
inline MatrixExpr sasano_pair(const MatrixExpr& Bh, const MatrixExpr& L,
                              const MatrixExpr& C) {
    return blocks4(L, C, Bh * L, Bh * C);
}

// Hamiltonian vector field values q' = dH/dp, p' = -dH/dq for var pairs.
inline std::vector<std::pair<Symbol, RationalExpr>> flow_field(
    const LinearProblem& lp, size_t ti, const std::vector<RationalExpr>& flows) {
    const RationalExpr& H = flows.at(ti);
    std::vector<std::pair<Symbol, RationalExpr>> vf;
    for (size_t i = 0; i + 1 < lp.vars.size(); i += 2) {
        Symbol q = lp.vars[i], p = lp.vars[i + 1];
        vf.emplace_back(q, H.derivative(p));
        vf.emplace_back(p, -H.derivative(q));
    }
    return vf;
}

}  // namespace lax_detail

// Registry ------------------------------------------------------------------

namespace lax_detail {
std::vector<LinearProblem> build_all();  // defined in laxpair_data.hpp
}

inline const std::vector<LinearProblem>& lax_registry() {
    static const std::vector<LinearProblem> reg = lax_detail::build_all();
    return reg;
}

inline std::vector<std::string> lax_ids() {
    std::vector<std::string> v;
    for (const auto& lp : lax_registry()) v.push_back(lp.id);
    return v;
}

inline const LinearProblem& get_lax(const std::string& id) {
    // accept a trailing "-lin" marker on the id
    std::string key = id;
    if (key.size() > 4 && key.compare(key.size() - 4, 4, "-lin") == 0)
        key = key.substr(0, key.size() - 4);
    for (const auto& lp : lax_registry())
        if (lp.id == key) return lp;
    throw iso4d_error("get_lax: unknown linear problem '" + id + "'");
}

inline LinearProblem build_lax(const std::string& id) { return get_lax(id); }

// Sampling ------------------------------------------------------------------

// Draw rational values for the canonical variables, the times and the free
// theta parameters; the last theta is fixed by the Fuchs relation.  Redraws
// until every denominator guard is nonzero.
inline std::map<Symbol, Rat> lax_sample(const LinearProblem& lp, RatSampler& rs) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::map<Symbol, Rat> s;
        for (const Symbol& v : lp.vars) s[v] = rs.next();
        for (const Symbol& t : lp.times) s[t] = rs.next();
        size_t n = lp.params.size();
        for (size_t i = 0; i + 1 < n; ++i) s[lp.params[i]] = rs.next();
        if (n > 0) {
            // solve the (integer-linear) Fuchs relation for the last theta
            const Symbol last = lp.params.back();
            std::map<Symbol, RationalExpr> sub;
            for (const auto& [k, v] : s) sub.emplace(k, RationalExpr(v));
            sub[last] = RationalExpr(0);
            RationalExpr rest = lp.fuchs.substitute(sub);
            RationalExpr coef = lp.fuchs.derivative(last);
            if (!rest.num().is_constant() || !coef.num().is_constant())
                throw iso4d_error("lax_sample: Fuchs relation not linear for " +
                                  lp.id);
            Rat c = coef.num().constant_value() / coef.den().constant_value();
            Rat r = rest.num().constant_value() / rest.den().constant_value();
            s[last] = -r / c;
        }
        std::map<Symbol, RationalExpr> sub;
        for (const auto& [k, v] : s) sub.emplace(k, RationalExpr(v));
        bool ok = true;
        for (const RationalExpr& g : lp.guards)
            if (g.substitute(sub).is_zero()) {
                ok = false;
                break;
            }
        if (ok) return s;
    }
    throw iso4d_error("lax_sample: could not satisfy guards for " + lp.id);
}

// Residual evaluation -------------------------------------------------------

namespace lax_detail {

struct SampleContext {
    std::map<Symbol, RationalExpr> sub;  // sample as expressions (x stays free)

    RationalExpr ev(const RationalExpr& e) const { return e.substitute(sub); }
    MatrixExpr ev(const MatrixExpr& m) const { return m.substitute(sub); }
};

// Evaluated total time derivative: de/dt + sum_v de/dv * v'(sample).
class TotalDerivative {
public:
    TotalDerivative(const SampleContext& ctx, Symbol t,
                    const std::vector<std::pair<Symbol, RationalExpr>>& field)
        : ctx_(ctx), t_(t) {
        for (const auto& [v, rhs] : field) vdot_.emplace_back(v, ctx.ev(rhs));
    }

    RationalExpr operator()(const RationalExpr& e) const {
        RationalExpr r = ctx_.ev(e.derivative(t_));
        for (const auto& [v, vd] : vdot_) {
            RationalExpr d = e.derivative(v);
            if (!d.is_zero()) r += ctx_.ev(d) * vd;
        }
        return r;
    }
    MatrixExpr operator()(const MatrixExpr& m) const {
        MatrixExpr r(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) r.at(i, j) = (*this)(m.at(i, j));
        return r;
    }

private:
    const SampleContext& ctx_;
    Symbol t_;
    std::vector<std::pair<Symbol, RationalExpr>> vdot_;
};

// W_i = (dG/dt_i) G^{-1} for the frame product, evaluated at the sample.
inline MatrixExpr frame_w(const LinearProblem& lp, size_t ti,
                          const SampleContext& ctx, const TotalDerivative& Dt) {
    MatrixExpr W(lp.size, lp.size), Prod = MatrixExpr::identity(lp.size);
    for (const FrameFactor& f : lp.frame) {
        MatrixExpr contrib;
        if (f.chain) {
            MatrixExpr Fs = ctx.ev(f.F);
            contrib = Dt(f.F) * Fs.inverse();
            W = W + Prod * contrib * Prod.inverse();
            Prod = Prod * Fs;
        } else {
            contrib = ctx.ev(f.W.at(ti));
            W = W + Prod * contrib * Prod.inverse();
        }
    }
    return W;
}

inline size_t time_index(const LinearProblem& lp, const Symbol& t) {
    for (size_t i = 0; i < lp.times.size(); ++i)
        if (lp.times[i] == t) return i;
    throw iso4d_error("laxpair: " + t.name() + " is not a time of " + lp.id);
}

inline void report_entries(const MatrixExpr& R, ResidualReport& rep) {
    rep.zero = true;
    for (int i = 0; i < R.rows(); ++i)
        for (int j = 0; j < R.cols(); ++j)
            if (!R.at(i, j).is_zero()) {
                rep.zero = false;
                rep.offending.push_back("(" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ")");
            }
}

}  // namespace lax_detail

// R(x) = dA/dt_i + [A, W_i] - dB_i/dx + [A, B_i] at an exact rational sample;
// the x-dependence stays symbolic, so the zero flag is an exact statement
// about the rational function R.
inline ResidualReport isomonodromy_residual(
    const LinearProblem& lp, const Symbol& time, const std::map<Symbol, Rat>& sample,
    const std::vector<RationalExpr>* flow_override = nullptr) {
    using namespace lax_detail;
    size_t ti = time_index(lp, time);
    ResidualReport rep;
    rep.system_id = lp.id;
    rep.time = time.name();
    rep.sample = sample;

    SampleContext ctx;
    for (const auto& [k, v] : sample) ctx.sub.emplace(k, RationalExpr(v));
    const std::vector<RationalExpr>& flows = flow_override ? *flow_override : lp.flow;
    TotalDerivative Dt(ctx, time, flow_field(lp, ti, flows));

    const Symbol& x = xsym();
    MatrixExpr Ax(lp.size, lp.size), dA(lp.size, lp.size);
    for (const LaxTerm& t : lp.A) {
        MatrixExpr Ms = ctx.ev(t.M);
        RationalExpr rs = ctx.ev(t.r);
        Ax = Ax + Ms * rs;
        dA = dA + Dt(t.M) * rs + Ms * ctx.ev(t.r.derivative(time));
    }
    MatrixExpr Bx(lp.size, lp.size), dxB(lp.size, lp.size);
    for (const LaxTerm& t : lp.B.at(ti)) {
        MatrixExpr Ms = ctx.ev(t.M);
        Bx = Bx + Ms * ctx.ev(t.r);
        dxB = dxB + Ms * ctx.ev(t.r.derivative(x));
    }
    MatrixExpr W = frame_w(lp, ti, ctx, Dt);
    MatrixExpr R = dA + commutator(Ax, W) - dxB + commutator(Ax, Bx);
    report_entries(R, rep);
    return rep;
}

inline ResidualReport isomonodromy_residual(const std::string& system_id,
                                            const Symbol& time,
                                            const std::map<Symbol, Rat>& sample) {
    return isomonodromy_residual(get_lax(system_id), time, sample);
}

// dB_1/dt_2 - dB_2/dt_1 + [B_1, B_2] for the two-time systems.
inline ResidualReport cross_compatibility(const LinearProblem& lp,
                                          const std::map<Symbol, Rat>& sample) {
    using namespace lax_detail;
    if (lp.times.size() != 2)
        throw iso4d_error("cross_compatibility: " + lp.id + " has a single time");
    ResidualReport rep;
    rep.system_id = lp.id;
    rep.time = lp.times[0].name() + "," + lp.times[1].name();
    rep.sample = sample;

    SampleContext ctx;
    for (const auto& [k, v] : sample) ctx.sub.emplace(k, RationalExpr(v));
    TotalDerivative D1(ctx, lp.times[0], flow_field(lp, 0, lp.flow));
    TotalDerivative D2(ctx, lp.times[1], flow_field(lp, 1, lp.flow));

    auto assemble = [&](size_t ti, const TotalDerivative& Dother,
                        const Symbol& tother, MatrixExpr& Bx, MatrixExpr& dB) {
        for (const LaxTerm& t : lp.B.at(ti)) {
            MatrixExpr Ms = ctx.ev(t.M);
            RationalExpr rs = ctx.ev(t.r);
            Bx = Bx + Ms * rs;
            dB = dB + Dother(t.M) * rs + Ms * ctx.ev(t.r.derivative(tother));
        }
    };
    MatrixExpr B1(lp.size, lp.size), d2B1(lp.size, lp.size);
    MatrixExpr B2(lp.size, lp.size), d1B2(lp.size, lp.size);
    assemble(0, D2, lp.times[1], B1, d2B1);
    assemble(1, D1, lp.times[0], B2, d1B2);
    MatrixExpr W1 = frame_w(lp, 0, ctx, D1);
    MatrixExpr W2 = frame_w(lp, 1, ctx, D2);
    MatrixExpr R = d2B1 + commutator(B1, W2) - d1B2 - commutator(B2, W1) +
                   commutator(B1, B2);
    lax_detail::report_entries(R, rep);
    return rep;
}

inline ResidualReport cross_compatibility(const std::string& system_id,
                                          const std::map<Symbol, Rat>& sample) {
    return cross_compatibility(get_lax(system_id), sample);
}

// Residue exponents ---------------------------------------------------------

// For every Fuchsian scheme point the characteristic polynomial of the
// residue must be prod_j (y - theta_j); checked through power sums
// tr(R^k) = sum_j theta_j^k (k = 1..m) at `nsamples` exact rational points.
// The trace identity (sum of finite residue traces plus the exponents at
// infinity) must vanish on the Fuchs hyperplane; it is checked symbolically.
inline bool residue_exponents_check(const LinearProblem& lp, uint64_t seed,
                                    int nsamples = 20) {
    RatSampler rs(seed);
    for (int n = 0; n < nsamples; ++n) {
        auto sample = lax_sample(lp, rs);
        std::map<Symbol, RationalExpr> sub;
        for (const auto& [k, v] : sample) sub.emplace(k, RationalExpr(v));
        for (const SchemePoint& pt : lp.scheme) {
            if (!pt.fuchsian) continue;
            MatrixExpr R = pt.residue.substitute(sub);
            MatrixExpr Pw = R;
            for (int k = 1; k <= lp.size; ++k) {
                RationalExpr want;
                for (const RationalExpr& th : pt.exponents) {
                    RationalExpr v = th.substitute(sub);
                    RationalExpr pw = v;
                    for (int j = 1; j < k; ++j) pw *= v;
                    want += pw;
                }
                if (!(Pw.trace() - want).is_zero()) return false;
                if (k < lp.size) Pw = Pw * R;
            }
        }
    }
    // symbolic trace identity on the Fuchs hyperplane
    RationalExpr total;
    for (const SchemePoint& pt : lp.scheme)
        if (pt.label != "infinity") total += pt.residue.trace();
    for (const RationalExpr& e : lp.infinity_exponents) total += e;
    // strip the canonical variables: residue traces may involve them only
    // through combinations that cancel
    const Symbol last = lp.params.empty() ? Symbol() : lp.params.back();
    if (!lp.params.empty()) {
        RationalExpr coef = lp.fuchs.derivative(last);
        RationalExpr sol = (coef * RationalExpr(last) - lp.fuchs) / coef;
        total = total.substitute({{last, sol}});
    }
    return total.is_zero();
}

inline bool residue_exponents_check(const std::string& system_id,
                                    uint64_t seed = 0x150u) {
    return residue_exponents_check(get_lax(system_id), seed);
}

}  // namespace iso4d

#include "laxpair_data.hpp"
