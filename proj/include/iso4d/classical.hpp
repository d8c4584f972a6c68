#pragma once
#include <string>
#include <vector>

#include "ratexpr.hpp"

namespace iso4d {

// The classical 2-dimensional Painlevé Hamiltonians.  Prefactors such as
// t(t-1) or t are divided out: the return value is H itself, suitable for
// q' = dH/dp, p' = -dH/dq.
//
//   VI(a,b,c,d):  t(t-1)H = q(q-1)(q-t)p^2
//                  + {d q(q-1) - (2a+b+c+d) q(q-t) + c (q-1)(q-t)} p
//                  + a(a+b)(q-t)
//   V(a,b,c):     tH = p(p+t)q(q-1) + b pq + c p - (a+c) tq
//   V~(a,b,c):    tH = q(q-1)^2 p^2 + {(1-q)(a+(b+2c)q) + tq} p - c(b+c)(1-q)
//   IV(a,b):      H  = pq(p-q-t) + b p + a q
//   III_D6(a,b):  tH = p^2 q^2 - (q^2 - b q - t) p - a q
//   III_D7(a):    tH = p^2 q^2 + a qp + tp + q
//   III_D8():     tH = p^2 q^2 + qp - q - t/q
//   II(a):        H  = p^2 - (q^2 + t) p - a q
//   I():          H  = p^2 - q^3 - tq
inline RationalExpr classical_hamiltonian(const std::string& kind,
                                          const std::vector<RationalExpr>& par,
                                          const RationalExpr& t, const RationalExpr& q,
                                          const RationalExpr& p) {
    auto need = [&](size_t n) {
        if (par.size() != n)
            throw iso4d_error("classical_hamiltonian " + kind + ": expected " +
                              std::to_string(n) + " parameters, got " +
                              std::to_string(par.size()));
    };
    const RationalExpr one(1);
    if (kind == "VI") {
        need(4);
        const RationalExpr &a = par[0], &b = par[1], &c = par[2], &d = par[3];
        RationalExpr H = q * (q - one) * (q - t) * p * p +
                         (d * q * (q - one) - (2 * a + b + c + d) * q * (q - t) +
                          c * (q - one) * (q - t)) *
                             p +
                         a * (a + b) * (q - t);
        return H / (t * (t - one));
    }
    if (kind == "V") {
        need(3);
        const RationalExpr &a = par[0], &b = par[1], &c = par[2];
        return (p * (p + t) * q * (q - one) + b * p * q + c * p - (a + c) * t * q) / t;
    }
    if (kind == "V~") {
        need(3);
        const RationalExpr &a = par[0], &b = par[1], &c = par[2];
        return (q * (q - one) * (q - one) * p * p +
                ((one - q) * (a + (b + 2 * c) * q) + t * q) * p - c * (b + c) * (one - q)) /
               t;
    }
    if (kind == "IV") {
        need(2);
        const RationalExpr &a = par[0], &b = par[1];
        return p * q * (p - q - t) + b * p + a * q;
    }
    if (kind == "III_D6") {
        need(2);
        const RationalExpr &a = par[0], &b = par[1];
        return (p * p * q * q - (q * q - b * q - t) * p - a * q) / t;
    }
    if (kind == "III_D7") {
        need(1);
        const RationalExpr& a = par[0];
        return (p * p * q * q + a * q * p + t * p + q) / t;
    }
    if (kind == "III_D8") {
        need(0);
        return (p * p * q * q + q * p - q - t / q) / t;
    }
    if (kind == "II") {
        need(1);
        const RationalExpr& a = par[0];
        return p * p - (q * q + t) * p - a * q;
    }
    if (kind == "I") {
        need(0);
        return p * p - q * q * q - t * q;
    }
    throw iso4d_error("classical_hamiltonian: unknown kind '" + kind + "'");
}

}  // namespace iso4d
