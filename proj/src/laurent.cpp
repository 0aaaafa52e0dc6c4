#include "qons/laurent.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>

namespace qons {

unsigned Mono::degree_in(Symbol s) const {
    for (auto p : vars)
        if (sym_of(p) == s) return exp_of(p);
    return 0;
}

int mono_cmp(const Mono& a, const Mono& b) {
    if (a.texp != b.texp) return a.texp < b.texp ? -1 : 1;
    std::size_t i = 0, j = 0;
    const std::size_t na = a.vars.size(), nb = b.vars.size();
    while (i < na || j < nb) {
        const std::uint64_t ka = i < na ? (a.vars[i] >> 32) : UINT64_MAX;
        const std::uint64_t kb = j < nb ? (b.vars[j] >> 32) : UINT64_MAX;
        if (ka == kb) {
            const unsigned ea = Mono::exp_of(a.vars[i]), eb = Mono::exp_of(b.vars[j]);
            if (ea != eb) return ea < eb ? -1 : 1;
            ++i;
            ++j;
        } else if (ka < kb) {
            return 1;
        } else {
            return -1;
        }
    }
    return 0;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    r.texp = a.texp + b.texp;
    std::size_t i = 0, j = 0;
    const std::size_t na = a.vars.size(), nb = b.vars.size();
    while (i < na || j < nb) {
        const std::uint64_t ka = i < na ? (a.vars[i] >> 32) : UINT64_MAX;
        const std::uint64_t kb = j < nb ? (b.vars[j] >> 32) : UINT64_MAX;
        if (ka == kb) {
            r.vars.push_back((ka << 32) | (Mono::exp_of(a.vars[i]) + Mono::exp_of(b.vars[j])));
            ++i;
            ++j;
        } else if (ka < kb) {
            r.vars.push_back(a.vars[i++]);
        } else {
            r.vars.push_back(b.vars[j++]);
        }
    }
    return r;
}

namespace {

// a / b on the parameter part; false if some exponent would go negative.
bool mono_div(const Mono& a, const Mono& b, Mono& out) {
    out.texp = a.texp - b.texp;
    out.vars.clear();
    std::size_t i = 0, j = 0;
    const std::size_t na = a.vars.size(), nb = b.vars.size();
    while (j < nb) {
        if (i == na) return false;
        const std::uint64_t ka = a.vars[i] >> 32, kb = b.vars[j] >> 32;
        if (ka < kb) {
            out.vars.push_back(a.vars[i++]);
        } else if (ka == kb) {
            const unsigned ea = Mono::exp_of(a.vars[i]), eb = Mono::exp_of(b.vars[j]);
            if (ea < eb) return false;
            if (ea > eb) out.vars.push_back((ka << 32) | (ea - eb));
            ++i;
            ++j;
        } else {
            return false;
        }
    }
    while (i < na) out.vars.push_back(a.vars[i++]);
    return true;
}

} // namespace

LaurentPoly::LaurentPoly(long v) {
    if (v != 0) terms_.push_back({Mono{}, mpq_class(v)});
}

LaurentPoly::LaurentPoly(const mpq_class& v) {
    if (v != 0) terms_.push_back({Mono{}, v});
}

LaurentPoly LaurentPoly::t_power(int e) {
    LaurentPoly p;
    Mono m;
    m.texp = e;
    p.terms_.push_back({m, mpq_class(1)});
    return p;
}

LaurentPoly LaurentPoly::symbol(Symbol s, unsigned e) {
    LaurentPoly p;
    Mono m;
    if (e > 0) m.vars.push_back(Mono::pack(s, e));
    p.terms_.push_back({m, mpq_class(1)});
    return p;
}

LaurentPoly LaurentPoly::monomial(const mpq_class& c, Mono m) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
}

void LaurentPoly::canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return mono_less(a.m, b.m); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c += t.c;
        } else {
            if (!out.empty() && out.back().c == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().c == 0) out.pop_back();
    terms_ = std::move(out);
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c == 1;
}

mpq_class LaurentPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("constant_value of a non-constant polynomial");
    return terms_[0].c;
}

int LaurentPoly::min_texp() const {
    int m = INT_MAX;
    for (auto& t : terms_) m = std::min(m, t.m.texp);
    return terms_.empty() ? 0 : m;
}

int LaurentPoly::max_texp() const { return terms_.empty() ? 0 : terms_.back().m.texp; }

bool LaurentPoly::has_params() const {
    for (auto& t : terms_)
        if (!t.m.vars.empty()) return true;
    return false;
}

std::set<Symbol> LaurentPoly::symbols() const {
    std::set<Symbol> s;
    for (auto& t : terms_)
        for (auto p : t.m.vars) s.insert(Mono::sym_of(p));
    return s;
}

unsigned LaurentPoly::degree_in(Symbol s) const {
    unsigned d = 0;
    for (auto& t : terms_) d = std::max(d, t.m.degree_in(s));
    return d;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

namespace {

template <bool Sub>
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size()) c = 1;
        else if (j == b.size()) c = -1;
        else c = mono_cmp(a[i].m, b[j].m);
        if (c < 0) {
            out.push_back(a[i++]);
        } else if (c > 0) {
            out.push_back(b[j]);
            if constexpr (Sub) out.back().c = -out.back().c;
            ++j;
        } else {
            mpq_class s = Sub ? mpq_class(a[i].c - b[j].c) : mpq_class(a[i].c + b[j].c);
            if (s != 0) out.push_back({a[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge_terms<false>(terms_, o.terms_);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms<true>(terms_, o.terms_);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.mul_mono(a.terms_[0].m, a.terms_[0].c);
    if (b.terms_.size() == 1) return a.mul_mono(b.terms_[0].m, b.terms_[0].c);
    std::vector<LaurentPoly::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (auto& x : a.terms_)
        for (auto& y : b.terms_) prod.push_back({mono_mul(x.m, y.m), x.c * y.c});
    return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly& LaurentPoly::operator*=(const mpq_class& s) {
    if (s == 0) {
        terms_.clear();
    } else if (s != 1) {
        for (auto& t : terms_) t.c *= s;
    }
    return *this;
}

LaurentPoly LaurentPoly::mul_mono(const Mono& m, const mpq_class& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({mono_mul(t.m, m), t.c * c});
    return r;
}

LaurentPoly& LaurentPoly::shift_t(int e) {
    if (e != 0)
        for (auto& t : terms_) t.m.texp += e;
    return *this;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].c != o.terms_[i].c || !(terms_[i].m == o.terms_[i].m)) return false;
    return true;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.m.texp = -t.m.texp;
    r.canonicalize();
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& b) const {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return LaurentPoly{};
    if (b.terms_.size() == 1) {
        LaurentPoly r;
        r.terms_.reserve(terms_.size());
        const mpq_class inv = 1 / b.terms_[0].c;
        Mono q;
        for (auto& t : terms_) {
            if (!mono_div(t.m, b.terms_[0].m, q)) return std::nullopt;
            r.terms_.push_back({q, t.c * inv});
        }
        return r;
    }
    const int tmin = min_texp() - b.min_texp();
    const auto& lb = b.terms_.back();
    const mpq_class linv = 1 / lb.c;
    LaurentPoly rem = *this;
    std::vector<Term> quot;
    Mono qm;
    while (!rem.is_zero()) {
        const auto& lr = rem.terms_.back();
        if (!mono_div(lr.m, lb.m, qm) || qm.texp < tmin) return std::nullopt;
        mpq_class qc = lr.c * linv;
        rem -= b.mul_mono(qm, qc);
        quot.push_back({qm, std::move(qc)});
    }
    std::reverse(quot.begin(), quot.end());
    LaurentPoly r;
    r.terms_ = std::move(quot);
    return r;
}

// ---------------------------------------------------------------------------
// GCD

namespace {

struct Var {
    bool is_t;
    Symbol s;
};

using Dense = std::vector<mpq_class>; // coefficient of t^k at index k

void dense_trim(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

Dense to_dense(const LaurentPoly& p) {
    const int lo = p.min_texp();
    Dense d(p.max_texp() - lo + 1);
    for (auto& t : p.terms()) d[t.m.texp - lo] = t.c;
    return d;
}

LaurentPoly from_dense(const Dense& d) {
    std::vector<LaurentPoly::Term> ts;
    for (std::size_t k = 0; k < d.size(); ++k)
        if (d[k] != 0) {
            Mono m;
            m.texp = static_cast<int>(k);
            ts.push_back({m, d[k]});
        }
    return LaurentPoly::from_terms(std::move(ts));
}

void dense_make_monic(Dense& d) {
    dense_trim(d);
    if (d.empty() || d.back() == 1) return;
    const mpq_class inv = 1 / d.back();
    for (auto& c : d) c *= inv;
}

Dense dense_rem(Dense a, const Dense& b) {
    const std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t da = a.size() - 1;
        const mpq_class f = a.back() / b.back();
        for (std::size_t k = 0; k <= db; ++k) a[k + da - db] -= f * b[k];
        a.pop_back();
        dense_trim(a);
    }
    return a;
}

Dense dense_gcd(Dense a, Dense b) {
    dense_trim(a);
    dense_trim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        dense_make_monic(b);
        Dense r = dense_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    dense_make_monic(a);
    return a;
}

LaurentPoly normalize_unit(LaurentPoly p) {
    if (p.is_zero()) return p;
    p.shift_t(-p.min_texp());
    const mpq_class lc = p.leading().c;
    if (lc != 1) p *= mpq_class(1 / lc);
    return p;
}

// Divides out the largest monomial dividing every term (t-part included).
LaurentPoly strip_content(const LaurentPoly& p, Mono& content) {
    content = Mono{};
    const auto& ts = p.terms();
    content.texp = p.min_texp();
    // parameters present in every term, with their minimal exponents
    std::map<std::uint32_t, unsigned> mins;
    for (auto v : ts[0].m.vars) mins[static_cast<std::uint32_t>(v >> 32)] = Mono::exp_of(v);
    for (std::size_t i = 1; i < ts.size() && !mins.empty(); ++i) {
        for (auto it = mins.begin(); it != mins.end();) {
            const unsigned e = ts[i].m.degree_in(Symbol::from_key(it->first));
            if (e == 0) {
                it = mins.erase(it);
            } else {
                it->second = std::min(it->second, e);
                ++it;
            }
        }
    }
    for (auto& [k, e] : mins) content.vars.push_back(Mono::pack(Symbol::from_key(k), e));
    if (content.is_one()) return p;
    return *p.divide_exact(LaurentPoly::monomial(1, content));
}

unsigned var_degree(const LaurentPoly& p, const Var& x) {
    if (x.is_t) return static_cast<unsigned>(std::max(0, p.max_texp()));
    return p.degree_in(x.s);
}

std::vector<LaurentPoly> coeffs_in(const LaurentPoly& p, const Var& x) {
    std::vector<std::vector<LaurentPoly::Term>> buckets(var_degree(p, x) + 1);
    for (auto& t : p.terms()) {
        LaurentPoly::Term nt = t;
        unsigned k;
        if (x.is_t) {
            k = static_cast<unsigned>(t.m.texp);
            nt.m.texp = 0;
        } else {
            k = 0;
            for (auto it = nt.m.vars.begin(); it != nt.m.vars.end(); ++it)
                if (Mono::sym_of(*it) == x.s) {
                    k = Mono::exp_of(*it);
                    nt.m.vars.erase(it);
                    break;
                }
        }
        buckets[k].push_back(std::move(nt));
    }
    std::vector<LaurentPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(LaurentPoly::from_terms(std::move(b)));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

LaurentPoly var_power(const Var& x, unsigned k) {
    return x.is_t ? LaurentPoly::t_power(static_cast<int>(k)) : LaurentPoly::symbol(x.s, k);
}

LaurentPoly from_coeffs(const std::vector<LaurentPoly>& cs, const Var& x) {
    LaurentPoly r;
    for (std::size_t k = 0; k < cs.size(); ++k)
        if (!cs[k].is_zero()) r += cs[k] * var_power(x, static_cast<unsigned>(k));
    return r;
}

LaurentPoly gcd_full(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_of(const std::vector<LaurentPoly>& cs) {
    LaurentPoly g;
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? normalize_unit(c) : gcd_full(g, c);
        if (g.is_constant()) return LaurentPoly(1);
    }
    return g;
}

void trim(std::vector<LaurentPoly>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

std::vector<LaurentPoly> primitive_part(std::vector<LaurentPoly> v) {
    LaurentPoly c = content_of(v);
    if (!c.is_constant())
        for (auto& x : v) x = *x.divide_exact(c);
    // scale to keep rational coefficients tame
    const mpq_class lc = v.back().leading().c;
    if (lc != 1)
        for (auto& x : v) x *= mpq_class(1 / lc);
    return v;
}

std::vector<LaurentPoly> pseudo_rem(std::vector<LaurentPoly> r, const std::vector<LaurentPoly>& b) {
    const std::size_t db = b.size() - 1;
    const LaurentPoly& lcb = b.back();
    const bool lcb_const = lcb.is_constant();
    while (!r.empty() && r.size() - 1 >= db) {
        const std::size_t dr = r.size() - 1;
        const LaurentPoly lcr = r.back();
        if (lcb_const) {
            const mpq_class f = 1 / lcb.constant_value();
            for (std::size_t k = 0; k <= db; ++k) {
                LaurentPoly s = lcr * b[k];
                s *= f;
                r[k + dr - db] -= s;
            }
        } else {
            for (auto& x : r) x = x * lcb;
            for (std::size_t k = 0; k <= db; ++k) r[k + dr - db] -= lcr * b[k];
        }
        r.pop_back();
        trim(r);
    }
    return r;
}

LaurentPoly gcd_with_t_only(const LaurentPoly& a, const LaurentPoly& b_tonly) {
    Dense g = to_dense(b_tonly);
    std::map<std::vector<std::uint64_t>, std::vector<LaurentPoly::Term>> groups;
    for (auto& t : a.terms()) {
        std::vector<std::uint64_t> key(t.m.vars.begin(), t.m.vars.end());
        LaurentPoly::Term nt{Mono{}, t.c};
        nt.m.texp = t.m.texp;
        groups[key].push_back(std::move(nt));
    }
    for (auto& [k, ts] : groups) {
        g = dense_gcd(std::move(g), to_dense(LaurentPoly::from_terms(ts)));
        if (g.size() <= 1) return LaurentPoly(1);
    }
    return from_dense(g);
}

struct VarInfo {
    bool t = false;
    std::set<Symbol> syms;
};

VarInfo vars_of(const LaurentPoly& p) {
    VarInfo v;
    v.t = p.max_texp() > 0;
    v.syms = p.symbols();
    return v;
}

// Image of p under t, params -> fixed integers, except the variable x which
// stays symbolic.  Returns the dense univariate polynomial in x.
Dense specialize_dense(const LaurentPoly& p, const Var& x, long tval, const std::map<Symbol, long>& vals) {
    Dense d(var_degree(p, x) + 1);
    for (auto& t : p.terms()) {
        mpz_class v = 1;
        unsigned k = 0;
        if (x.is_t) {
            k = static_cast<unsigned>(t.m.texp);
        } else {
            mpz_class f;
            mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(tval), static_cast<unsigned long>(t.m.texp));
            v *= f;
        }
        for (auto pk : t.m.vars) {
            const Symbol s = Mono::sym_of(pk);
            if (!x.is_t && s == x.s) {
                k = Mono::exp_of(pk);
                continue;
            }
            mpz_class f;
            mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(vals.at(s)), Mono::exp_of(pk));
            v *= f;
        }
        d[k] += t.c * v;
    }
    return d;
}

// Upper bound on deg_x gcd(a, b): the gcd of a specialization in which both
// leading coefficients (in x) survive.  -1 if no good point was found.
int gcd_degree_bound(const LaurentPoly& a, const LaurentPoly& b, const Var& x, const std::set<Symbol>& syms) {
    static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
    const unsigned da = var_degree(a, x), db = var_degree(b, x);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::map<Symbol, long> vals;
        std::size_t k = static_cast<std::size_t>(attempt) * 3;
        for (auto s : syms) vals[s] = primes[(k++) % 20] + attempt;
        const long tval = primes[(k + 7) % 20] + 2 * attempt;
        Dense sa = specialize_dense(a, x, tval, vals), sb = specialize_dense(b, x, tval, vals);
        if (sa.size() != da + 1 || sa.back() == 0 || sb.size() != db + 1 || sb.back() == 0) continue;
        return static_cast<int>(dense_gcd(std::move(sa), std::move(sb)).size()) - 1;
    }
    return -1;
}

// a, b nonzero, all exponents nonnegative, no monomial content.
LaurentPoly gcd_prim(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
    const VarInfo va = vars_of(a), vb = vars_of(b);
    if (va.syms.empty() && vb.syms.empty()) return from_dense(dense_gcd(to_dense(a), to_dense(b)));
    if (vb.syms.empty()) return gcd_with_t_only(a, b);
    if (va.syms.empty()) return gcd_with_t_only(b, a);
    if (va.t != vb.t) {
        const Var tv{true, Symbol::z()};
        return va.t ? gcd_full(content_of(coeffs_in(a, tv)), b) : gcd_full(a, content_of(coeffs_in(b, tv)));
    }
    for (auto s : va.syms)
        if (!vb.syms.count(s)) return gcd_full(content_of(coeffs_in(a, {false, s})), b);
    for (auto s : vb.syms)
        if (!va.syms.count(s)) return gcd_full(a, content_of(coeffs_in(b, {false, s})));

    // Degree bounds from specializations.  A variable with bound 0 cannot
    // occur in the gcd, which therefore divides the contents in it.
    std::set<Symbol> all = va.syms;
    bool all_zero = true;
    std::optional<Var> absent;
    if (va.t) {
        const int bt = gcd_degree_bound(a, b, Var{true, Symbol::z()}, all);
        if (bt != 0) all_zero = false;
        else absent = Var{true, Symbol::z()};
    }
    for (auto s : va.syms) {
        const int bs = gcd_degree_bound(a, b, Var{false, s}, all);
        if (bs != 0) all_zero = false;
        else if (!absent) absent = Var{false, s};
    }
    if (all_zero) return LaurentPoly(1);
    if (absent) return gcd_full(content_of(coeffs_in(a, *absent)), content_of(coeffs_in(b, *absent)));

    // choose the common variable of least degree
    Var x{true, Symbol::z()};
    unsigned best = va.t ? std::max(var_degree(a, x), var_degree(b, x)) : UINT_MAX;
    for (auto s : va.syms) {
        const unsigned d = std::max(a.degree_in(s), b.degree_in(s));
        if (d < best) {
            best = d;
            x = Var{false, s};
        }
    }
    auto ca = coeffs_in(a, x), cb = coeffs_in(b, x);
    const LaurentPoly conta = content_of(ca), contb = content_of(cb);
    const LaurentPoly c = gcd_full(conta, contb);
    if (!conta.is_constant())
        for (auto& y : ca) y = *y.divide_exact(conta);
    if (!contb.is_constant())
        for (auto& y : cb) y = *y.divide_exact(contb);
    if (ca.size() < cb.size()) std::swap(ca, cb);
    ca = primitive_part(std::move(ca));
    cb = primitive_part(std::move(cb));
    for (;;) {
        auto r = pseudo_rem(ca, cb);
        if (r.empty()) break;
        if (r.size() == 1) return c;
        ca = std::move(cb);
        cb = primitive_part(std::move(r));
    }
    return c * from_coeffs(cb, x);
}

LaurentPoly gcd_full(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return normalize_unit(b);
    if (b.is_zero()) return normalize_unit(a);
    if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
    if (a == b) return normalize_unit(a);
    Mono ma, mb;
    const LaurentPoly A = strip_content(a, ma), B = strip_content(b, mb);
    Mono common;
    for (auto v : ma.vars) {
        const unsigned e = std::min(Mono::exp_of(v), mb.degree_in(Mono::sym_of(v)));
        if (e > 0) common.vars.push_back(Mono::pack(Mono::sym_of(v), e));
    }
    LaurentPoly g = gcd_prim(A, B);
    if (!common.is_one()) g = g.mul_mono(common, 1);
    return normalize_unit(std::move(g));
}

} // namespace

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) { return gcd_full(a, b); }

// ---------------------------------------------------------------------------
// Rendering

std::string render_rational(const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string render_mono(const Mono& m) {
    std::string s;
    auto add = [&](const std::string& f) {
        if (!s.empty()) s += "*";
        s += f;
    };
    if (m.texp == 1) add("t");
    else if (m.texp != 0) add("t^" + std::to_string(m.texp));
    for (auto v : m.vars) {
        const unsigned e = Mono::exp_of(v);
        add(e == 1 ? Mono::sym_of(v).name() : Mono::sym_of(v).name() + "^" + std::to_string(e));
    }
    return s;
}

std::string latex_tpow(int e) {
    if (e % 2 == 0) {
        const int h = e / 2;
        return h == 1 ? "q" : "q^{" + std::to_string(h) + "}";
    }
    return "q^{" + std::to_string(e) + "/2}";
}

std::string latex_mono(const Mono& m) {
    std::string s;
    if (m.texp != 0) s += latex_tpow(m.texp);
    for (auto v : m.vars) {
        const unsigned e = Mono::exp_of(v);
        if (!s.empty()) s += " ";
        s += Mono::sym_of(v).latex();
        if (e != 1) s += "^{" + std::to_string(e) + "}";
    }
    return s;
}

std::string latex_rational(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

template <class MonoFn, class RatFn>
std::string render_terms(const std::vector<LaurentPoly::Term>& ts, MonoFn mono, RatFn rat, const char* mul) {
    if (ts.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& t : ts) {
        const bool neg = t.c < 0;
        const mpq_class a = neg ? mpq_class(-t.c) : t.c;
        if (first) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        first = false;
        const std::string ms = mono(t.m);
        if (ms.empty()) s += rat(a);
        else if (a == 1) s += ms;
        else s += rat(a) + mul + ms;
    }
    return s;
}

} // namespace

std::string LaurentPoly::to_string() const { return render_terms(terms_, render_mono, render_rational, "*"); }

std::string LaurentPoly::to_latex() const { return render_terms(terms_, latex_mono, latex_rational, " "); }

} // namespace qons
