#include "qons/rational_fn.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qons {

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        const LaurentPoly g = LaurentPoly::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *num_.divide_exact(g);
            den_ = *den_.divide_exact(g);
        }
    }
    fix_units();
}

void RationalFn::fix_units() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    const int s = den_.min_texp();
    if (s != 0) {
        num_.shift_t(-s);
        den_.shift_t(-s);
    }
    const mpq_class lc = den_.leading().c;
    if (lc != 1) {
        const mpq_class inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

std::set<Symbol> RationalFn::symbols() const {
    auto s = num_.symbols();
    auto d = den_.symbols();
    s.insert(d.begin(), d.end());
    return s;
}

bool RationalFn::depends_on(Symbol s) const { return num_.degree_in(s) > 0 || den_.degree_in(s) > 0; }

bool RationalFn::depends_on_t() const {
    for (auto* p : {&num_, &den_})
        for (auto& t : p->terms())
            if (t.m.texp != 0) return true;
    return false;
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_, Raw{}); }

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return *this;
        }
        if (den_.is_one()) return *this;
        const LaurentPoly g = LaurentPoly::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *num_.divide_exact(g);
            den_ = *den_.divide_exact(g);
            fix_units();
        }
        return *this;
    }
    if (o.den_.is_one()) {
        num_ += o.num_ * den_;
        fix_units();
        return *this;
    }
    if (den_.is_one()) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        fix_units();
        return *this;
    }
    const LaurentPoly g = LaurentPoly::gcd(den_, o.den_);
    if (g.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        fix_units();
        return *this;
    }
    const LaurentPoly da = *den_.divide_exact(g), db = *o.den_.divide_exact(g);
    num_ = num_ * db + o.num_ * da;
    den_ = den_ * db;
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return *this;
    }
    const LaurentPoly g2 = LaurentPoly::gcd(num_, g);
    if (!g2.is_constant()) {
        num_ = *num_.divide_exact(g2);
        den_ = *den_.divide_exact(g2);
    }
    fix_units();
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
    if (is_zero() || o.is_zero()) return *this = RationalFn();
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    LaurentPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
    if (!d2.is_one()) {
        const LaurentPoly g = LaurentPoly::gcd(n1, d2);
        if (!g.is_constant()) {
            n1 = *n1.divide_exact(g);
            d2 = *d2.divide_exact(g);
        }
    }
    if (!d1.is_one()) {
        const LaurentPoly g = LaurentPoly::gcd(n2, d1);
        if (!g.is_constant()) {
            n2 = *n2.divide_exact(g);
            d1 = *d1.divide_exact(g);
        }
    }
    num_ = n1 * n2;
    den_ = d1 * d2;
    fix_units();
    return *this;
}

RationalFn RationalFn::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    RationalFn r(den_, num_, Raw{});
    r.fix_units();
    return r;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) { return *this *= o.inverse(); }

RationalFn RationalFn::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFn r(1), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

RationalFn& RationalFn::mul_t_power(int e) {
    num_.shift_t(e);
    return *this;
}

RationalFn RationalFn::bar() const {
    RationalFn r(num_.bar(), den_.bar(), Raw{});
    r.fix_units();
    return r;
}

std::string RationalFn::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string RationalFn::to_latex() const {
    if (den_.is_one()) return num_.to_latex();
    return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
}

RationalFn bar(const RationalFn& x) { return x.bar(); }

// ---------------------------------------------------------------------------
// Evaluation

std::complex<double> to_complex(const Number& n) {
    if (auto* q = std::get_if<mpq_class>(&n)) return {q->get_d(), 0.0};
    return std::get<std::complex<double>>(n);
}

bool is_exact(const Number& n) { return std::holds_alternative<mpq_class>(n); }

std::string render_number(const Number& n) {
    if (auto* q = std::get_if<mpq_class>(&n)) return render_rational(*q);
    const auto c = std::get<std::complex<double>>(n);
    std::ostringstream os;
    os.precision(12);
    os << c.real() << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i";
    return os.str();
}

namespace {

mpq_class qpow(const mpq_class& b, int e) {
    if (e < 0) {
        if (b == 0) throw std::domain_error("negative power of zero");
        return qpow(1 / b, -e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

const Number& lookup(const Assignment& at, Symbol s) {
    auto it = at.values.find(s);
    if (it == at.values.end()) throw std::invalid_argument("unassigned symbol " + s.name());
    return it->second;
}

} // namespace

Number evaluate(const LaurentPoly& x, const Assignment& at) {
    bool exact = true;
    bool need_t = false;
    for (auto& t : x.terms()) {
        if (t.m.texp != 0) need_t = true;
        for (auto v : t.m.vars)
            if (!is_exact(lookup(at, Mono::sym_of(v)))) exact = false;
    }
    if (need_t) {
        if (!at.t) throw std::invalid_argument("unassigned t");
        if (!is_exact(*at.t)) exact = false;
    }
    if (exact) {
        mpq_class sum = 0;
        for (auto& t : x.terms()) {
            mpq_class term = t.c;
            if (t.m.texp != 0) term *= qpow(std::get<mpq_class>(*at.t), t.m.texp);
            for (auto v : t.m.vars)
                term *= qpow(std::get<mpq_class>(lookup(at, Mono::sym_of(v))), static_cast<int>(Mono::exp_of(v)));
            sum += term;
        }
        return sum;
    }
    std::complex<double> sum = 0;
    for (auto& t : x.terms()) {
        std::complex<double> term = t.c.get_d();
        if (t.m.texp != 0) {
            const auto tv = to_complex(*at.t);
            if (t.m.texp < 0 && tv == 0.0) throw std::domain_error("negative power of zero");
            term *= std::pow(tv, t.m.texp);
        }
        for (auto v : t.m.vars)
            term *= std::pow(to_complex(lookup(at, Mono::sym_of(v))), static_cast<int>(Mono::exp_of(v)));
        sum += term;
    }
    return sum;
}

Number evaluate(const RationalFn& x, const Assignment& at) {
    const Number n = evaluate(x.num(), at);
    const Number d = evaluate(x.den(), at);
    if (is_exact(n) && is_exact(d)) {
        const auto& dq = std::get<mpq_class>(d);
        if (dq == 0) throw std::domain_error("denominator vanishes at the evaluation point");
        return mpq_class(std::get<mpq_class>(n) / dq);
    }
    const auto dc = to_complex(d);
    if (std::abs(dc) == 0.0) throw std::domain_error("denominator vanishes at the evaluation point");
    return to_complex(n) / dc;
}

namespace {

RationalFn substitute_poly(const LaurentPoly& p, const std::map<Symbol, RationalFn>& images) {
    // group terms by the exponents of the substituted symbols
    std::map<std::vector<std::uint64_t>, std::vector<LaurentPoly::Term>> groups;
    for (auto& t : p.terms()) {
        std::vector<std::uint64_t> key;
        LaurentPoly::Term rest{Mono{}, t.c};
        rest.m.texp = t.m.texp;
        for (auto v : t.m.vars) {
            if (images.count(Mono::sym_of(v))) key.push_back(v);
            else rest.m.vars.push_back(v);
        }
        groups[key].push_back(std::move(rest));
    }
    RationalFn sum;
    for (auto& [key, ts] : groups) {
        RationalFn f(LaurentPoly::from_terms(ts));
        for (auto v : key) f *= images.at(Mono::sym_of(v)).pow(static_cast<int>(Mono::exp_of(v)));
        sum += f;
    }
    return sum;
}

LaurentPoly specialize_poly(const LaurentPoly& p, const mpq_class& tval) {
    std::vector<LaurentPoly::Term> out;
    for (auto& t : p.terms()) {
        LaurentPoly::Term nt{t.m, t.c * qpow(tval, t.m.texp)};
        nt.m.texp = 0;
        out.push_back(std::move(nt));
    }
    return LaurentPoly::from_terms(std::move(out));
}

} // namespace

RationalFn substitute(const RationalFn& x, const std::map<Symbol, RationalFn>& images) {
    const RationalFn d = substitute_poly(x.den(), images);
    if (d.is_zero()) throw std::domain_error("denominator vanishes under substitution");
    return substitute_poly(x.num(), images) / d;
}

RationalFn specialize_t(const RationalFn& x, const mpq_class& tval) {
    LaurentPoly d = specialize_poly(x.den(), tval);
    if (d.is_zero()) throw std::domain_error("denominator vanishes at the given t");
    return RationalFn(specialize_poly(x.num(), tval), std::move(d));
}

// ---------------------------------------------------------------------------
// q-combinatorics

RationalFn qnum(int a, int d) {
    if (a < 0) throw std::invalid_argument("qnum: negative argument");
    if (d <= 0) throw std::invalid_argument("qnum: symmetrizer must be positive");
    if (a == 0) return RationalFn(1);
    LaurentPoly p;
    for (int k = 0; k < a; ++k) p += LaurentPoly::t_power(2 * d * (a - 1 - 2 * k));
    return RationalFn(p);
}

RationalFn qfactorial(int n, int d) {
    if (n < 0) throw std::invalid_argument("qfactorial: negative argument");
    RationalFn r(1);
    for (int k = 1; k <= n; ++k) r *= qnum(k, d);
    return r;
}

RationalFn qbinom(int n, int k, int d) {
    if (k < 0 || k > n) throw std::invalid_argument("qbinom: k out of range");
    return qfactorial(n, d) / (qfactorial(k, d) * qfactorial(n - k, d));
}

RationalFn qsum(int d) { return RationalFn(LaurentPoly::t_power(2 * d) + LaurentPoly::t_power(-2 * d)); }

} // namespace qons
