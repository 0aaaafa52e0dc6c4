#pragma once

#include "qons/symbol.hpp"

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qons {

/// Monomial t^texp * prod s^e.  Parameter exponents are kept sparse, sorted by
/// symbol key, each strictly positive.
struct Mono {
    using Packed = std::uint64_t; // (symbol key << 32) | exponent
    int texp = 0;
    boost::container::small_vector<Packed, 4> vars;

    static Packed pack(Symbol s, unsigned e) {
        return (static_cast<Packed>(s.key()) << 32) | e;
    }
    static Symbol sym_of(Packed p) { return Symbol::from_key(static_cast<std::uint32_t>(p >> 32)); }
    static unsigned exp_of(Packed p) { return static_cast<unsigned>(p & 0xffffffffu); }

    bool is_one() const { return texp == 0 && vars.empty(); }
    unsigned degree_in(Symbol s) const;

    bool operator==(const Mono&) const = default;
};

/// Lexicographic order with t most significant, then parameters in symbol
/// order.  A monomial order on the parameter part; t ranges over all integers.
int mono_cmp(const Mono& a, const Mono& b);
inline bool mono_less(const Mono& a, const Mono& b) { return mono_cmp(a, b) < 0; }
Mono mono_mul(const Mono& a, const Mono& b);

/// Laurent polynomial in t with polynomial dependence on parameter symbols,
/// coefficients in Q.  Terms are kept sorted ascending in mono order; the last
/// term is the leading term.
class LaurentPoly {
public:
    struct Term {
        Mono m;
        mpq_class c;
    };

    LaurentPoly() = default;
    LaurentPoly(long v);
    LaurentPoly(const mpq_class& v);

    static LaurentPoly t_power(int e);
    static LaurentPoly symbol(Symbol s, unsigned e = 1);
    static LaurentPoly monomial(const mpq_class& c, Mono m);
    /// Builds from arbitrary terms (sorted and combined here).
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }
    const Term& leading() const { return terms_.back(); }
    mpq_class constant_value() const; // requires is_constant()

    int min_texp() const;
    int max_texp() const;
    bool has_params() const;
    bool is_t_only() const { return !has_params(); }
    std::set<Symbol> symbols() const;
    unsigned degree_in(Symbol s) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const mpq_class& s);
    LaurentPoly mul_mono(const Mono& m, const mpq_class& c) const;
    /// Multiply by t^e (order-preserving, no re-sort).
    LaurentPoly& shift_t(int e);

    bool operator==(const LaurentPoly& o) const;

    /// t -> t^{-1}.
    LaurentPoly bar() const;
    /// Exact quotient if b divides *this in Q[t, t^-1][params]; nullopt otherwise.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& b) const;
    /// GCD up to units (nonzero rationals and powers of t).  Normalized so the
    /// leading coefficient is 1 and the minimal t-exponent is 0.
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    std::string to_string() const;
    std::string to_latex() const;

private:
    void canonicalize();
    std::vector<Term> terms_;
};

std::string render_rational(const mpq_class& q);

} // namespace qons
