#pragma once

#include "qons/onsager.hpp"
#include "qons/uqreduce.hpp"

#include <optional>
#include <vector>

namespace qons {

/// Polynomial in a fixed list of w-parameters with coefficients in Q(t, c's),
/// terms kept in lex order (earlier variables more significant).
class WPoly {
public:
    using Exps = std::vector<int>;
    struct LexGreater {
        bool operator()(const Exps& a, const Exps& b) const { return a > b; }
    };
    using Map = std::map<Exps, RationalFn, LexGreater>;

    WPoly() = default;
    explicit WPoly(std::vector<Symbol> vars) : vars_(std::move(vars)) {}
    /// Splits a polynomial in t and parameters along the w-variables.
    static WPoly from_laurent(const LaurentPoly& p, const std::vector<Symbol>& vars);
    static WPoly constant(const std::vector<Symbol>& vars, RationalFn c);
    static WPoly variable(const std::vector<Symbol>& vars, Symbol v, int e = 1);

    const std::vector<Symbol>& vars() const { return vars_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Exps& lead_exps() const { return terms_.begin()->first; }
    const RationalFn& lead_coef() const { return terms_.begin()->second; }
    int total_degree() const;

    void add_term(const Exps& e, const RationalFn& c);
    WPoly& operator+=(const WPoly& o);
    WPoly& operator-=(const WPoly& o);
    friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
    friend WPoly operator-(WPoly a, const WPoly& b) { return a -= b; }
    friend WPoly operator*(const WPoly& a, const WPoly& b);
    WPoly scaled(const RationalFn& c, const Exps& shift) const;
    WPoly monic() const;
    bool operator==(const WPoly& o) const { return terms_ == o.terms_; }

    RationalFn to_rational() const;
    std::string to_string() const;
    std::string to_latex() const;

private:
    std::vector<Symbol> vars_;
    Map terms_;
};

/// Remainder of p on division by the list g (lex order).
WPoly reduce(const WPoly& p, const std::vector<WPoly>& g);
/// Exact quotient, if d divides p.
std::optional<WPoly> divide_exact(const WPoly& p, const WPoly& d);
/// Reduced Groebner basis (lex), monic elements.
std::vector<WPoly> groebner(std::vector<WPoly> gens);
/// p^k in the ideal of the basis for some k <= max_power.
bool in_radical(const WPoly& p, const std::vector<WPoly>& basis, int max_power = 4);

enum class Variant { Standard, Bar };
std::string to_string(Variant v);

/// kappa_i = c_i cbar_i / (q_i + q_i^-1 - 2).
RationalFn kappa(const CartanData& cd, int node);
/// q_i + q_i^-1 - 1, the scale of the second root pair at a triple link.
RationalFn root2_scale(const CartanData& cd, int node);

enum class AtomKind { Zero, Root1, Root2 };
std::string to_string(AtomKind k);

/// Elementary factor: w_n, w_n^2 + kappa_n, or w_n^2 + kappa_n (q_n + q_n^-1 - 1)^2.
struct Atom {
    AtomKind kind = AtomKind::Zero;
    int node = 0;
    bool operator==(const Atom&) const = default;
    auto operator<=>(const Atom&) const = default;
    WPoly poly(const CartanData& cd, const std::vector<Symbol>& vars) const;
    std::string to_string() const;
    std::string to_latex() const;
};

/// A polynomial constraint "= 0", factored into atoms where possible; a
/// non-constant leftover factor is kept in `rest`.
struct Constraint {
    WPoly poly;
    std::vector<Atom> atoms;
    WPoly rest;
    bool fully_factored() const { return rest.is_constant(); }
    std::string to_string() const;
    std::string to_latex() const;
};

Constraint factor_constraint(const WPoly& p, const CartanData& cd);

/// Images of A_n for every node: c E K + cbar F K + w K^2 (Bar: K^-1, K^-2).
std::map<int, NCPoly> realize(const CartanData& cd, Variant v);

/// The published constraint list for the pair, keyed on the link pattern
/// (reference data, used to judge the computed constraints).
std::vector<Constraint> reference_constraints(const CartanData& cd, int i, int j);

/// Published structure constants for the pair; the doubly-linked (q + q^-1)^2
/// is read with the short node's q_j.
std::map<Symbol, RationalFn> reference_rho(const CartanData& cd, int i, int j);

struct GateStatus {
    bool ideal_corpus = false;
    std::size_t corpus_instances = 0;
    bool overlaps = false;
    std::size_t overlap_count = 0;
    int overlap_degree = 0;
    bool passed() const { return ideal_corpus && overlaps; }
};

/// Engine gates for the rewriting system of a pair, cached by link pattern.
GateStatus engine_gates(const RewriteSystem& rs);

struct VerificationReport {
    AlgebraId algebra;
    int i = 0, j = 0;
    Variant variant = Variant::Standard;
    std::map<Symbol, RationalFn> rho;
    std::map<Symbol, RationalFn> reference_rho; // published values
    std::vector<Symbol> rho_mismatches;         // computed != published
    /// Residual coefficients after the rho solution, as w-polynomials.
    std::vector<WPoly> residual;
    std::vector<Constraint> constraints; // computed generators, factored
    std::vector<Constraint> reference;   // reference_constraints(cd, i, j)
    bool residual_zero = false;          // every branch of the reference constraints kills the residual
    bool implies_reference = false;      // reference polys lie in rad(computed ideal)
    bool implied_by_reference = false;   // computed polys lie in rad(reference ideal)
    bool generic_nonzero = false;        // residual nonzero at random points (necessity)
    bool sufficiency_only = false;       // gates failed: nonzero residuals not trusted
    ReductionTrace trace;
    GateStatus gates;
};

/// Thrown when the linear system for rho is inconsistent.
struct RhoInconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Substitutes the realization into both relations (i,j) and (j,i), reduces,
/// solves for rho at w = 0 and extracts the w-constraints.
VerificationReport verify_pair(const CartanData& cd, int i, int j, Variant v = Variant::Standard);

/// rho solutions agree and the constraint ideals coincide up to radical.
bool check_bar_symmetry(const VerificationReport& r1, const VerificationReport& r2);

/// Points of the reference zero set: for each branch, the atoms imposed.
std::vector<std::vector<Atom>> reference_branches(const std::vector<Constraint>& cs);

/// Reduces w-polynomials modulo the atoms of one branch.
bool vanishes_on_branch(const std::vector<WPoly>& polys, const std::vector<Atom>& branch, const CartanData& cd);

struct OracleResult {
    bool gate = false;          // U_q relations hold for the matrices
    std::string violated;       // name of a violated relation, if any
    bool talg = false;          // q-Dolan-Grady relations hold with the identified rho
    bool perturbed_fails = false; // rho + 1 breaks them
    bool ok() const { return gate && talg && perturbed_fails; }
};

/// Two-dimensional evaluation representation of U_q(a1^1) over Q(t, z, c, w).
OracleResult matrix_oracle_sl2();

} // namespace qons
