#pragma once
#include <cctype>
#include <map>
#include <set>
#include <string>

#include "poly.hpp"

namespace iso4d {

// Exact multivariate rational function in canonical form: numerator and
// denominator coprime, denominator leading coefficient 1.  Equality of
// canonical forms is structural equality.
class RationalExpr {
public:
    RationalExpr() : num_(), den_(1) {}
    RationalExpr(const Rat& c) : num_(c), den_(1) {}
    RationalExpr(long c) : num_(c), den_(1) {}
    RationalExpr(int c) : num_(c), den_(1) {}
    RationalExpr(Symbol s) : num_(s), den_(1) {}
    RationalExpr(Poly n) : num_(std::move(n)), den_(1) {}
    RationalExpr(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    friend bool operator==(const RationalExpr& a, const RationalExpr& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend RationalExpr operator-(const RationalExpr& a) {
        RationalExpr r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
        RationalExpr r;
        if (a.den_ == b.den_) {
            r.num_ = a.num_ + b.num_;
            r.den_ = a.den_;
            r.reduce();
            return r;
        }
        Poly g = poly_gcd(a.den_, b.den_);
        if (g.is_constant()) {
            r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            r.den_ = a.den_ * b.den_;
            r.normalize_lc();  // coprime by construction
            return r;
        }
        Poly da = divexact(a.den_, g), db = divexact(b.den_, g);
        Poly t = a.num_ * db + b.num_ * da;
        Poly h = poly_gcd(t, g);
        if (h.is_constant()) {
            r.num_ = t;
            r.den_ = da * b.den_;
        } else {
            r.num_ = divexact(t, h);
            r.den_ = da * divexact(b.den_, h);
        }
        r.normalize_lc();
        return r;
    }
    friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
        return a + (-b);
    }
    friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
        if (a.is_zero() || b.is_zero()) return RationalExpr();
        Poly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
        RationalExpr r;
        r.num_ = divexact(a.num_, g1) * divexact(b.num_, g2);
        r.den_ = divexact(a.den_, g2) * divexact(b.den_, g1);
        r.normalize_lc();
        return r;
    }
    friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
        if (b.is_zero()) throw iso4d_error("RationalExpr: division by zero");
        RationalExpr inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        inv.normalize_lc();
        return a * inv;
    }
    RationalExpr& operator+=(const RationalExpr& o) { return *this = *this + o; }
    RationalExpr& operator-=(const RationalExpr& o) { return *this = *this - o; }
    RationalExpr& operator*=(const RationalExpr& o) { return *this = *this * o; }
    RationalExpr& operator/=(const RationalExpr& o) { return *this = *this / o; }

    RationalExpr pow(int e) const {
        if (e < 0) return RationalExpr(1) / pow(-e);
        RationalExpr r(1), base(*this);
        while (e) {
            if (e & 1) r *= base;
            if (e >>= 1) base *= base;
        }
        return r;
    }

    RationalExpr derivative(Symbol s) const {
        // Quotient rule; gcd cancellation happens in the constructor.
        Poly dn = num_.derivative(s), dd = den_.derivative(s);
        if (dd.is_zero()) return RationalExpr(dn, den_);
        return RationalExpr(dn * den_ - num_ * dd, den_ * den_);
    }

    bool contains(Symbol s) const { return num_.contains(s) || den_.contains(s); }

    std::set<int> symbols() const {
        std::set<int> out;
        for (int v : num_.variables()) out.insert(v);
        for (int v : den_.variables()) out.insert(v);
        return out;
    }

    Rat eval_exact(const std::map<int, Rat>& point) const {
        Rat d = den_.eval(point);
        if (d == 0) throw pole_error("eval_exact: denominator vanishes at sample point");
        return num_.eval(point) / d;
    }

    // Simultaneous substitution of symbols by rational expressions.
    RationalExpr substitute(const std::map<Symbol, RationalExpr>& map) const {
        RationalExpr n = subst_poly(num_, map);
        RationalExpr d = subst_poly(den_, map);
        if (d.is_zero()) throw pole_error("substitute: denominator becomes identically zero");
        return n / d;
    }

    // Value at s=0 when regular there; throws pole_order_error otherwise.
    RationalExpr limit_at_zero(Symbol s) const {
        auto sval = [&](const Poly& p) {  // s-adic valuation
            int v = -1;
            for (const auto& [m, c] : p.terms) {
                int e = mono_deg_in(m, s.id());
                v = (v < 0) ? e : std::min(v, e);
                if (v == 0) break;
            }
            return v;
        };
        int vn = num_.is_zero() ? 0 : sval(num_), vd = sval(den_);
        if (vn < vd)
            throw pole_order_error("limit_at_zero: pole of order " + std::to_string(vd - vn),
                                   vd - vn);
        Poly n = num_, d = den_;
        if (vd > 0) {
            Poly spow;
            spow.terms.emplace(Mono{{s.id(), vd}}, Rat(1));
            if (!n.is_zero()) n = divexact(n, spow);
            d = divexact(d, spow);
        }
        return RationalExpr(subst_zero(n, s), subst_zero(d, s));
    }

    // Drop every additive term of total degree zero in `vars`.  Requires the
    // denominator to factor as (monomial in vars) x (vars-free polynomial),
    // which covers every Hamiltonian in the catalog (the only canonical
    // denominator is the single q of the III(D8) term).
    RationalExpr strip_canonical_free(const std::set<Symbol>& vars) const {
        auto in_vars = [&](int v) { return vars.count(Symbol(v)) != 0; };
        Mono den_mono;
        for (const auto& [m, c] : den_.terms)
            for (const auto& [v, e] : m)
                if (in_vars(v)) {
                    // denominator touches vars: must be exactly a monomial part
                    Mono mc = mono_content(den_);
                    Mono vpart;
                    for (const auto& [vv, ee] : mc)
                        if (in_vars(vv)) vpart.emplace_back(vv, ee);
                    for (const auto& [m2, c2] : den_.terms) {
                        Mono v2;
                        for (const auto& [vv, ee] : m2)
                            if (in_vars(vv)) v2.emplace_back(vv, ee);
                        if (v2 != vpart)
                            throw iso4d_error(
                                "strip_canonical_free: denominator mixes canonical "
                                "variables non-monomially (needs partial fractions)");
                    }
                    den_mono = vpart;
                    goto scan_done;
                }
    scan_done:
        // A numerator term is vars-free iff its vars-part equals den_mono.
        Poly kept;
        for (const auto& [m, c] : num_.terms) {
            Mono vpart;
            for (const auto& [v, e] : m)
                if (in_vars(v)) vpart.emplace_back(v, e);
            if (vpart != den_mono) kept.add_term(m, c);
        }
        return RationalExpr(kept, den_);
    }

private:
    Poly num_, den_;

    void reduce() {
        if (den_.is_zero()) throw iso4d_error("RationalExpr: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
        normalize_lc();
    }
    void normalize_lc() {
        Rat lc = den_.leading().second;
        if (lc != 1) {
            Rat inv = 1 / lc;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    static RationalExpr subst_poly(const Poly& p, const std::map<Symbol, RationalExpr>& map);
    static Poly subst_zero(const Poly& p, Symbol s) {
        Poly r;
        for (const auto& [m, c] : p.terms) {
            if (mono_deg_in(m, s.id()) > 0) continue;
            r.add_term(m, c);
        }
        return r;
    }
};

inline RationalExpr normalize(const RationalExpr& e) { return e; }  // already canonical

inline RationalExpr RationalExpr::subst_poly(const Poly& p,
                                             const std::map<Symbol, RationalExpr>& map) {
    // Accumulate numerators over one common denominator (product of the
    // substituted denominators raised to their max exponents) so that gcd
    // reduction happens once at the end instead of per-term.
    std::map<int, const RationalExpr*> by_id;
    std::map<int, int> max_exp;
    for (const auto& [s, e] : map) by_id[s.id()] = &e;
    for (const auto& [m, c] : p.terms)
        for (const auto& [v, e] : m)
            if (by_id.count(v)) max_exp[v] = std::max(max_exp[v], e);
    // Precompute power tables for mapped symbols.
    std::map<int, std::vector<Poly>> npow, dpow;
    for (const auto& [v, E] : max_exp) {
        std::vector<Poly> np{Poly(1)}, dp{Poly(1)};
        for (int k = 1; k <= E; ++k) {
            np.push_back(np.back() * by_id[v]->num());
            dp.push_back(dp.back() * by_id[v]->den());
        }
        npow[v] = std::move(np);
        dpow[v] = std::move(dp);
    }
    Poly acc;
    for (const auto& [m, c] : p.terms) {
        Poly term(c);
        Mono rest;
        for (const auto& [v, e] : m)
            if (!max_exp.count(v)) rest.emplace_back(v, e);
        for (const auto& [v, E] : max_exp) {
            int e = mono_deg_in(m, v);
            if (e > 0) term *= npow[v][static_cast<size_t>(e)];
            if (E > e) term *= dpow[v][static_cast<size_t>(E - e)];
        }
        if (!rest.empty()) {
            Poly rm;
            rm.terms.emplace(rest, Rat(1));
            term *= rm;
        }
        acc += term;
    }
    Poly common_den(1);
    for (const auto& [v, E] : max_exp) common_den *= dpow[v][static_cast<size_t>(E)];
    return RationalExpr(acc, common_den);
}

inline std::string to_string(const RationalExpr& e) {
    if (e.is_polynomial()) return "(" + to_string(e.num()) + ")";
    return "(" + to_string(e.num()) + ")/(" + to_string(e.den()) + ")";
}

// ---------------------------------------------------------------------------
// Expression parser: + - * / ^ with parentheses, integers, symbol names.
// ---------------------------------------------------------------------------
namespace detail {
class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}
    RationalExpr parse() {
        RationalExpr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("trailing input at position " + std::to_string(pos_));
        return e;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RationalExpr expr() {
        RationalExpr e = (peek() == '-') ? (eat('-'), -term()) : term();
        while (true) {
            if (eat('+'))
                e += term();
            else if (eat('-'))
                e -= term();
            else
                return e;
        }
    }
    RationalExpr term() {
        RationalExpr e = factor();
        while (true) {
            if (eat('*'))
                e *= factor();
            else if (eat('/'))
                e /= factor();
            else
                return e;
        }
    }
    RationalExpr factor() {
        if (eat('-')) return -factor();
        RationalExpr e = primary();
        if (eat('^')) {
            bool neg = eat('-');
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            if (digits.empty()) throw parse_error("expected integer exponent");
            int p = std::stoi(digits);
            e = e.pow(neg ? -p : p);
        }
        return e;
    }
    RationalExpr primary() {
        skip_ws();
        if (eat('(')) {
            RationalExpr e = expr();
            if (!eat(')')) throw parse_error("missing ')'");
            return e;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return RationalExpr(Rat(digits));
        }
        if (pos_ < s_.size() &&
            (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            std::string name;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_'))
                name += s_[pos_++];
            return RationalExpr(sym(name));
        }
        throw parse_error("unexpected character at position " + std::to_string(pos_));
    }
};
}  // namespace detail

inline RationalExpr parse_expr(const std::string& s) { return detail::ExprParser(s).parse(); }

}  // namespace iso4d
