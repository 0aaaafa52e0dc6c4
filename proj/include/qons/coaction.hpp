#pragma once

#include "qons/homver.hpp"

namespace qons {

/// delta(A_i) = (c_i E_i K_i + cbar_i F_i K_i) (x) 1 + K_i^kpow (x) A_i; kpow = 2 is
/// the coaction, other values serve as negative controls.
TensorPoly coact(const CartanData& cd, int i, int kpow = 2);

/// Counit on the left factor: E, F -> 0, K -> 1.
NCPoly counit_left(const TensorPoly& x);

/// The relations of a pair used as rewrite rules on A-words, oriented by
/// degree-lex with A_hi > A_lo (hi = the smaller node index).
class OqRewrite {
public:
    struct Rule {
        Word lhs;
        NCPoly rhs;
        std::string name;
    };
    OqRewrite(const CartanData& cd, int i, int j, const std::map<Symbol, RationalFn>& rho);
    const std::vector<Rule>& rules() const { return rules_; }
    /// Irreducible form; `steps` receives the number of rewrites.  Throws
    /// std::runtime_error when the step guard trips.
    NCPoly reduce(const NCPoly& p, std::size_t* steps = nullptr) const;

private:
    CartanData cd_;
    std::vector<Rule> rules_;
};

struct CoactionCheck {
    int x = 0, y = 0;                 // relation (x, y)
    std::size_t raw_terms = 0;        // tensor terms before any reduction
    TensorPoly intermediate;          // left factors in normal form, right untouched
    Monomial unit;                    // K_x^{2(1-a_xy)} K_y^2
    bool intermediate_factors = false; // intermediate == unit (x) relation element
    TensorPoly residual;              // after rewriting the right factors
    std::size_t oq_steps = 0;
    bool passed() const { return intermediate_factors && residual.is_zero(); }
};

struct CoactionReport {
    AlgebraId algebra;
    int i = 0, j = 0;
    int kpow = 2;
    std::map<Symbol, RationalFn> rho; // shared by both tensor factors
    std::vector<CoactionCheck> checks; // (i, j) and (j, i)
    bool passed() const;
};

/// Substitutes the coaction into both relations of the pair, reduces left
/// factors with the U_q rewriting system and right factors with OqRewrite.
CoactionReport verify_coaction_pair(const CartanData& cd, int i, int j, int kpow = 2);

} // namespace qons
