#pragma once

#include "qons/laurent.hpp"

#include <complex>
#include <map>
#include <variant>

namespace qons {

/// Element of Q(t, parameters), kept as a reduced fraction of Laurent
/// polynomials.  Canonical form: gcd(num, den) = 1, den has minimal
/// t-exponent 0 and leading coefficient 1.  Zero is 0/1.  Two values are equal
/// iff their representations are identical.
class RationalFn {
public:
    RationalFn() : den_(1) {}
    RationalFn(long v) : num_(v), den_(1) {}
    RationalFn(const mpq_class& v) : num_(v), den_(1) {}
    RationalFn(LaurentPoly p) : num_(std::move(p)), den_(1) {}
    RationalFn(LaurentPoly num, LaurentPoly den);

    static RationalFn t_power(int e) { return RationalFn(LaurentPoly::t_power(e)); }
    /// q^e with q = t^2.
    static RationalFn q_power(int e) { return t_power(2 * e); }
    static RationalFn symbol(Symbol s, unsigned e = 1) { return RationalFn(LaurentPoly::symbol(s, e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    std::set<Symbol> symbols() const;
    bool depends_on(Symbol s) const;
    bool depends_on_t() const;

    RationalFn operator-() const;
    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn& operator*=(const RationalFn& o);
    RationalFn& operator/=(const RationalFn& o);
    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
    RationalFn inverse() const;
    RationalFn pow(int e) const;
    /// Multiply by t^e; cheap (no gcd needed).
    RationalFn& mul_t_power(int e);

    bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// t -> t^{-1}, parameters fixed.
    RationalFn bar() const;

    std::string to_string() const;
    std::string to_latex() const;

private:
    struct Raw {};
    RationalFn(LaurentPoly num, LaurentPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    void fix_units();
    LaurentPoly num_, den_;
};

/// A number produced by evaluation: exact when every input is rational.
using Number = std::variant<mpq_class, std::complex<double>>;

std::complex<double> to_complex(const Number& n);
bool is_exact(const Number& n);
std::string render_number(const Number& n);

/// Point at which to evaluate.  `t` may be left unset for t-free inputs.
struct Assignment {
    std::optional<Number> t;
    std::map<Symbol, Number> values;
};

/// Errors: std::invalid_argument for an unassigned symbol, std::domain_error
/// for a vanishing denominator.
Number evaluate(const RationalFn& x, const Assignment& at);
Number evaluate(const LaurentPoly& x, const Assignment& at);

/// Replace symbols by rational functions.
RationalFn substitute(const RationalFn& x, const std::map<Symbol, RationalFn>& images);
/// Set t to an exact rational value (parameters untouched).
RationalFn specialize_t(const RationalFn& x, const mpq_class& tval);

// q-combinatorics; q_d = q^d = t^{2d}.

/// [a]_{q_d}; [0] = 1.  Throws std::invalid_argument for a < 0.
RationalFn qnum(int a, int d);
RationalFn qfactorial(int n, int d);
/// Gaussian binomial in q_d; throws std::invalid_argument unless 0 <= k <= n.
RationalFn qbinom(int n, int k, int d);
/// q_d + q_d^{-1}.
RationalFn qsum(int d);
RationalFn bar(const RationalFn& x);

} // namespace qons
