#pragma once

#include "qons/cartan.hpp"
#include "qons/rational_fn.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <map>
#include <utility>

namespace qons {

enum class LetterKind : std::uint8_t { F = 0, E = 1, A = 2 };

struct Letter {
    LetterKind kind = LetterKind::E;
    std::uint8_t node = 0;

    static Letter E(int n) { return {LetterKind::E, static_cast<std::uint8_t>(n)}; }
    static Letter F(int n) { return {LetterKind::F, static_cast<std::uint8_t>(n)}; }
    static Letter A(int n) { return {LetterKind::A, static_cast<std::uint8_t>(n)}; }

    std::string to_string() const;
    std::string to_latex() const;
    auto operator<=>(const Letter&) const = default;
};

using Word = boost::container::small_vector<Letter, 8>;
/// K-exponents by node, trailing zeros trimmed (so equal vectors compare equal).
using KExp = boost::container::small_vector<int, 4>;

void trim_kexp(KExp& k);
int kexp_at(const KExp& k, int node);

/// word * prod K_a^{k[a]}, with every K pushed to the right.
struct Monomial {
    Word word;
    KExp k;

    static Monomial letters(std::initializer_list<Letter> ls) { return {Word(ls), {}}; }
    static Monomial kpow(int node, int e);
    bool is_one() const { return word.empty() && k.empty(); }
    bool has_A() const;
    bool has_EF() const;
    std::string to_string() const;
    std::string to_latex() const;
    bool operator==(const Monomial&) const = default;
};

/// Canonical display order: length, then letters, then K-exponents.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// t-exponent picked up when prod K_a^{k[a]} is moved to the right of word w:
/// sum_a k[a] d_a sum_{letters} (+a_{a,node} for E, -a_{a,node} for F).
int weight_shift(const KExp& k, const Word& w, const CartanData& cd);

/// Product of monomials as (monomial, t-exponent).  Throws std::invalid_argument
/// when A-letters would be mixed with E/F letters or K-exponents.
std::pair<Monomial, int> multiply(const Monomial& x, const Monomial& y, const CartanData& cd);

class NCPoly {
public:
    using Map = std::map<Monomial, RationalFn, MonomialOrder>;

    NCPoly() = default;
    NCPoly(const Monomial& m, RationalFn c = RationalFn(1));
    static NCPoly scalar(RationalFn c) { return NCPoly(Monomial{}, std::move(c)); }
    static NCPoly letter(Letter l) { return NCPoly(Monomial{Word{l}, {}}); }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    RationalFn coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const RationalFn& c);
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const RationalFn& c);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const RationalFn& c) { return a *= c; }
    friend NCPoly operator*(const RationalFn& c, NCPoly a) { return a *= c; }
    NCPoly operator-() const;
    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

    /// Apply f to every coefficient, dropping terms that become zero.
    template <class Fn>
    NCPoly map_coefficients(Fn&& f) const {
        NCPoly r;
        for (auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }

    std::string to_string() const;
    std::string to_latex() const;

private:
    Map terms_;
};

NCPoly multiply(const NCPoly& x, const NCPoly& y, const CartanData& cd);
NCPoly power(const NCPoly& x, int n, const CartanData& cd);

/// Algebra map A_i -> images[i].  p must be an A-polynomial with zero K-part.
/// Throws std::invalid_argument for a missing image.
NCPoly substitute(const NCPoly& p, const std::map<int, NCPoly>& images, const CartanData& cd);
/// Number of words produced by expanding the substitution before collecting.
std::size_t substitution_raw_terms(const NCPoly& p, const std::map<int, NCPoly>& images);

/// Element of U (left, E/F/K) tensor O (right, A-words).
class TensorPoly {
public:
    using Key = std::pair<Monomial, Monomial>;
    struct KeyOrder {
        bool operator()(const Key& a, const Key& b) const;
    };
    using Map = std::map<Key, RationalFn, KeyOrder>;

    TensorPoly() = default;
    static TensorPoly pure(const NCPoly& left, const NCPoly& right);

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    void add_term(const Monomial& l, const Monomial& r, const RationalFn& c);
    TensorPoly& operator+=(const TensorPoly& o);
    TensorPoly& operator-=(const TensorPoly& o);
    TensorPoly& operator*=(const RationalFn& c);
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    bool operator==(const TensorPoly& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    Map terms_;
};

/// (u (x) a)(v (x) b) = uv (x) ab.
TensorPoly tensor_multiply(const TensorPoly& x, const TensorPoly& y, const CartanData& cd);

} // namespace qons
