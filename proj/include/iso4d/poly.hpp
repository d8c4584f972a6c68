#pragma once
#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "symbol.hpp"

namespace iso4d {

using Rat = mpq_class;

// Sparse exponent vector: (symbol id, exponent>0) pairs sorted by id.
using Mono = std::vector<std::pair<int, int>>;

inline int total_degree(const Mono& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

// Degree-lexicographic total order (ties broken lexicographically, smaller
// symbol id treated as the bigger variable).  Any fixed order would do for
// canonicalization; this one is stable and cheap.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i].first != b[j].first)
                return a[i].first > b[j].first;  // missing small-id var => smaller
            if (a[i].second != b[j].second) return a[i].second < b[j].second;
            ++i, ++j;
        }
        return a.size() < b.size();
    }
};

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            r.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first)
            r.push_back(b[j++]);
        else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    return r;
}

// a / b if b divides a, else nullopt-style flag via bool return.
inline bool mono_div(const Mono& a, const Mono& b, Mono& out) {
    out.clear();
    size_t i = 0;
    for (const auto& [v, e] : b) {
        while (i < a.size() && a[i].first < v) out.push_back(a[i++]);
        if (i == a.size() || a[i].first != v || a[i].second < e) return false;
        if (a[i].second > e) out.emplace_back(v, a[i].second - e);
        ++i;
    }
    while (i < a.size()) out.push_back(a[i++]);
    return true;
}

inline int mono_deg_in(const Mono& m, int var) {
    for (const auto& [v, e] : m)
        if (v == var) return e;
    return 0;
}

// Sparse multivariate polynomial with exact rational coefficients.
class Poly {
public:
    using Terms = std::map<Mono, Rat, MonoLess>;
    Terms terms;  // invariant: no zero coefficients

    Poly() = default;
    Poly(const Rat& c) {
        if (c != 0) terms.emplace(Mono{}, c);
    }
    Poly(long c) : Poly(Rat(c)) {}
    Poly(int c) : Poly(Rat(c)) {}
    Poly(Symbol s) { terms.emplace(Mono{{s.id(), 1}}, Rat(1)); }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
    }
    Rat constant_value() const {
        if (terms.empty()) return Rat(0);
        auto it = terms.find(Mono{});
        return it == terms.end() ? Rat(0) : it->second;
    }

    // Leading term under the fixed monomial order.
    const std::pair<const Mono, Rat>& leading() const { return *terms.rbegin(); }

    void add_term(const Mono& m, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r;
        for (const auto& [m, c] : a.terms) r.terms.emplace(m, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms)
            for (const auto& [mb, cb] : b.terms) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(const Poly& a, const Rat& c) {
        Poly r;
        if (c == 0) return r;
        for (const auto& [m, k] : a.terms) r.terms.emplace(m, k * c);
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }

    Poly pow(int e) const {
        if (e < 0) throw iso4d_error("Poly::pow: negative exponent");
        Poly r(1), base(*this);
        while (e) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    int degree_in(int var) const {
        int d = 0;
        for (const auto& [m, c] : terms) d = std::max(d, mono_deg_in(m, var));
        return d;
    }
    int degree_in(Symbol s) const { return degree_in(s.id()); }

    bool contains(int var) const {
        for (const auto& [m, c] : terms)
            if (mono_deg_in(m, var) > 0) return true;
        return false;
    }
    bool contains(Symbol s) const { return contains(s.id()); }

    std::vector<int> variables() const {
        std::vector<int> vs;
        for (const auto& [m, c] : terms)
            for (const auto& [v, e] : m)
                if (!std::binary_search(vs.begin(), vs.end(), v))
                    vs.insert(std::lower_bound(vs.begin(), vs.end(), v), v);
        return vs;
    }

    Poly derivative(Symbol s) const {
        Poly r;
        const int var = s.id();
        for (const auto& [m, c] : terms) {
            int e = mono_deg_in(m, var);
            if (e == 0) continue;
            Mono m2;
            for (const auto& [v, k] : m) {
                if (v == var) {
                    if (k > 1) m2.emplace_back(v, k - 1);
                } else
                    m2.emplace_back(v, k);
            }
            r.add_term(m2, c * e);
        }
        return r;
    }

    // Coefficients of this viewed as a univariate polynomial in `var`,
    // index = degree.
    std::vector<Poly> coeffs_in(int var) const {
        std::vector<Poly> cs(static_cast<size_t>(degree_in(var)) + 1);
        for (const auto& [m, c] : terms) {
            int e = mono_deg_in(m, var);
            Mono m2;
            for (const auto& [v, k] : m)
                if (v != var) m2.emplace_back(v, k);
            cs[static_cast<size_t>(e)].add_term(m2, c);
        }
        return cs;
    }

    static Poly from_coeffs(const std::vector<Poly>& cs, int var) {
        Poly r;
        Poly x{Symbol(var)};
        for (size_t e = 0; e < cs.size(); ++e)
            if (!cs[e].is_zero()) r += cs[e] * x.pow(static_cast<int>(e));
        return r;
    }

    Rat eval(const std::map<int, Rat>& point) const {
        Rat total(0);
        for (const auto& [m, c] : terms) {
            Rat v(c);
            for (const auto& [var, e] : m) {
                auto it = point.find(var);
                if (it == point.end())
                    throw iso4d_error("Poly::eval: unassigned symbol " + Symbol(var).name());
                Rat p(it->second);
                mpz_class num, den;
                mpz_pow_ui(num.get_mpz_t(), p.get_num_mpz_t(), static_cast<unsigned>(e));
                mpz_pow_ui(den.get_mpz_t(), p.get_den_mpz_t(), static_cast<unsigned>(e));
                v *= Rat(num) / Rat(den);
            }
            total += v;
        }
        return total;
    }
};

// ---------------------------------------------------------------------------
// GCD machinery: monomial content extraction + primitive PRS over Q.
// ---------------------------------------------------------------------------

inline Mono mono_content(const Poly& p) {
    if (p.is_zero()) return {};
    Mono g = p.terms.begin()->first;
    for (const auto& [m, c] : p.terms) {
        Mono r;
        size_t i = 0;
        for (const auto& [v, e] : g) {
            while (i < m.size() && m[i].first < v) ++i;
            if (i < m.size() && m[i].first == v) r.emplace_back(v, std::min(e, m[i].second));
        }
        g = std::move(r);
        if (g.empty()) break;
    }
    return g;
}

inline Mono mono_gcd(const Mono& a, const Mono& b) {
    Mono r;
    size_t i = 0;
    for (const auto& [v, e] : a) {
        while (i < b.size() && b[i].first < v) ++i;
        if (i < b.size() && b[i].first == v) r.emplace_back(v, std::min(e, b[i].second));
    }
    return r;
}

// Exact division; throws if not divisible.
inline Poly divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw iso4d_error("divexact: division by zero polynomial");
    if (b.is_constant()) {
        Poly r;
        Rat inv = 1 / b.constant_value();
        for (const auto& [m, c] : a.terms) r.terms.emplace(m, c * inv);
        return r;
    }
    Poly rem(a), quot;
    const auto& lb = b.leading();
    while (!rem.is_zero()) {
        const auto& lr = rem.leading();
        Mono q;
        if (!mono_div(lr.first, lb.first, q))
            throw iso4d_error("divexact: not divisible");
        Rat c = lr.second / lb.second;
        Poly t;
        t.terms.emplace(q, c);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

// Scale p so its coefficients are coprime integers with positive leading
// coefficient (the canonical associate for gcd purposes).
inline Poly primitive_scale(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& [m, c] : p.terms) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    Rat scale = Rat(den_lcm) / Rat(num_gcd);
    if (p.leading().second < 0) scale = -scale;
    return p * scale;
}

Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

// Pseudo-remainder of a by b w.r.t. variable var (lc(b)^(da-db+1) * a mod b).
inline Poly pseudo_rem(const Poly& a, const Poly& b, int var) {
    std::vector<Poly> ra = a.coeffs_in(var);
    std::vector<Poly> rb = b.coeffs_in(var);
    int da = static_cast<int>(ra.size()) - 1;
    int db = static_cast<int>(rb.size()) - 1;
    const Poly& lcb = rb[static_cast<size_t>(db)];
    while (da >= db) {
        // ra <- lcb*ra - lc(ra)*x^(da-db)*b
        Poly lca = ra[static_cast<size_t>(da)];
        for (auto& c : ra) c *= lcb;
        for (int i = 0; i <= db; ++i)
            ra[static_cast<size_t>(da - db + i)] -= lca * rb[static_cast<size_t>(i)];
        while (da >= 0 && ra[static_cast<size_t>(da)].is_zero()) --da;
        ra.resize(static_cast<size_t>(da + 1));
        if (da < 0) break;
    }
    return Poly::from_coeffs(ra, var);
}

// Degree in `var` of gcd(a|pt, b|pt) where pt evaluates every variable except
// `var`.  Returns -1 for an unlucky point (a leading coefficient vanishes).
// Since specialization can only raise the gcd degree (away from lc zeros), a
// result of 0 certifies that the true gcd has degree 0 in `var`.
inline int image_gcd_degree(const Poly& a, const Poly& b, int var, std::uint64_t& state) {
    auto rnd = [&state]() {  // deterministic splitmix64 -> small nonzero value
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        long v = static_cast<long>(z % 41) - 20;
        return Rat(v == 0 ? 21 : v);
    };
    std::map<int, Rat> pt;
    for (int v : a.variables())
        if (v != var) pt.emplace(v, rnd());
    for (int v : b.variables())
        if (v != var) pt.emplace(v, rnd());
    auto image = [&](const Poly& p) {
        std::vector<Poly> cs = p.coeffs_in(var);
        std::vector<Rat> u(cs.size());
        for (size_t i = 0; i < cs.size(); ++i) u[i] = cs[i].eval(pt);
        return u;
    };
    std::vector<Rat> u = image(a), v = image(b);
    if (u.back() == 0 || v.back() == 0) return -1;
    if (u.size() < v.size()) u.swap(v);
    while (true) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        if (v.empty()) return static_cast<int>(u.size()) - 1;
        if (v.size() == 1) return 0;
        // u <- u mod v (monic reduction)
        Rat lc = v.back();
        for (size_t k = u.size(); k-- >= v.size();) {
            Rat f = u[k] / lc;
            if (f == 0) continue;
            for (size_t i = 0; i < v.size(); ++i) u[k - (v.size() - 1) + i] -= f * v[i];
        }
        u.resize(v.size() - 1);
        u.swap(v);
    }
}

inline Poly content_in(const Poly& p, int var, Poly& pp) {
    std::vector<Poly> cs = p.coeffs_in(var);
    Poly g;
    for (const auto& c : cs)
        if (!c.is_zero()) g = g.is_zero() ? primitive_scale(c) : poly_gcd(g, c);
    pp = divexact(p, g);
    return g;
}

}  // namespace detail

// Primitive-PRS multivariate gcd over Q.  Result is the primitive integer
// associate (positive leading coefficient); gcd of the zero pair is 0.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return primitive_scale(b);
    if (b.is_zero()) return primitive_scale(a);
    // Split off monomial content first; it is the cheap common case.
    Mono ma = mono_content(a), mb = mono_content(b);
    Mono mg = mono_gcd(ma, mb);
    Poly pa(a), pb(b);
    if (!ma.empty()) {
        Poly d;
        d.terms.emplace(ma, Rat(1));
        pa = divexact(pa, d);
    }
    if (!mb.empty()) {
        Poly d;
        d.terms.emplace(mb, Rat(1));
        pb = divexact(pb, d);
    }
    Poly mono_part;
    mono_part.terms.emplace(mg, Rat(1));

    pa = primitive_scale(pa);
    pb = primitive_scale(pb);
    if (pa.is_constant() || pb.is_constant()) return mono_part;
    if (pa == pb) return mono_part * pa;

    // Pick a common main variable with the smallest max degree.
    std::vector<int> va = pa.variables(), vb = pb.variables();
    int var = -1, best = 0;
    for (int v : va) {
        if (!std::binary_search(vb.begin(), vb.end(), v)) continue;
        int d = std::max(pa.degree_in(v), pb.degree_in(v));
        if (var < 0 || d < best) var = v, best = d;
    }
    if (var < 0) return mono_part;  // no common variables

    // Coprimality certificate: if a random specialization leaves univariate
    // images with constant gcd in every shared variable, the gcd is 1 and the
    // expensive PRS below is skipped (the dominant case in expression
    // arithmetic, where reduce() pairs are almost always coprime).
    {
        std::uint64_t state = 0x6b5fca3a01bace24ULL;
        bool coprime = true;
        for (int v : va) {
            if (!std::binary_search(vb.begin(), vb.end(), v)) continue;
            int deg = -1;
            for (int attempt = 0; attempt < 4 && deg < 0; ++attempt)
                deg = detail::image_gcd_degree(pa, pb, v, state);
            if (deg != 0) {
                coprime = false;
                break;
            }
        }
        if (coprime) return mono_part;
    }

    Poly ppa, ppb;
    Poly ca = detail::content_in(pa, var, ppa);
    Poly cb = detail::content_in(pb, var, ppb);
    Poly cg = poly_gcd(ca, cb);

    Poly u = ppa, v = ppb;
    if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);
    while (true) {
        Poly r = detail::pseudo_rem(u, v, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            v = Poly(1);
            break;
        }
        Poly pp;
        detail::content_in(r, var, pp);
        u = v;
        v = pp;
    }
    Poly result = mono_part * cg;
    if (!v.is_constant()) {
        Poly ppv;
        detail::content_in(v, var, ppv);
        result = result * primitive_scale(ppv);
    }
    return primitive_scale(result);
}

// Rendering: terms from highest to lowest order, fully explicit products.
inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        Rat c = it->second;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        Rat ac = abs(c);
        bool wrote = false;
        if (ac != 1 || it->first.empty()) {
            if (ac.get_den() == 1)
                os << ac.get_num().get_str();
            else
                os << "(" << ac.get_str() << ")";
            wrote = true;
        }
        for (const auto& [v, e] : it->first) {
            if (wrote) os << "*";
            os << Symbol(v).name();
            if (e > 1) os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace iso4d
