#pragma once

#include "qons/freealg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qons {

enum class RuleClass { EF, SerreE, SerreF, Commute, Completion };
std::string to_string(RuleClass c);

struct RhsTerm {
    Word word;
    KExp k;
    RationalFn coef;
};

/// lhs -> sum of rhs terms, all strictly smaller in the termination order.
struct Rule {
    RuleClass cls;
    Word lhs;
    std::vector<RhsTerm> rhs;
    std::string name;
};

struct ReductionTrace {
    long steps = 0;
    std::size_t peak_terms = 0;
    std::map<RuleClass, long> fired;
    /// Largest number of E (or F) letters met in one monomial.  Normal forms
    /// are certified canonical only up to RewriteSystem::certified_degree().
    int max_block_degree = 0;

    void merge(const ReductionTrace& o);
};

/// Oriented rewriting system for the rank-2 subalgebra of U_q on nodes {i, j}:
/// e-f straightening E_a F_b -> F_b E_a + delta_ab (K_a^2 - K_a^-2)/(q_a - q_a^-1),
/// the two oriented q-Serre rules on each of the E and F sides (lower node
/// index = greater letter), and the degree-bounded completion of the Serre
/// rules so that normal forms are canonical up to the certified degree.
class RewriteSystem {
public:
    /// completion_degree <= 0 selects longest Serre left-hand side + 4.
    RewriteSystem(const CartanData& cd, int i, int j, int completion_degree = 0);

    const CartanData& cartan() const { return cd_; }
    int i() const { return i_; }
    int j() const { return j_; }
    int hi() const { return std::min(i_, j_); }
    int lo() const { return std::max(i_, j_); }
    const std::vector<Rule>& rules() const { return rules_; }
    int certified_degree() const { return completion_degree_; }
    int longest_lhs() const;
    std::size_t completion_rule_count() const;

    /// Position in the letter order used for orientation (E above F, lower
    /// node above higher node).
    static int letter_rank(Letter l) { return (l.kind == LetterKind::E ? 512 : 256) + (255 - l.node); }

private:
    friend NCPoly normal_form(const NCPoly&, const RewriteSystem&, ReductionTrace*);
    void complete_positive_part();
    void add_rule(Rule r);

    CartanData cd_;
    int i_, j_;
    int completion_degree_;
    std::vector<Rule> rules_;
    std::vector<std::vector<std::size_t>> by_first_; // rule indices keyed by first-letter slot
};

/// Convenience constructor mirroring the rule-table view.
inline RewriteSystem serre_rules(const CartanData& cd, int i, int j) { return RewriteSystem(cd, i, j); }

/// Leftmost rewriting, monomials processed from the greatest in the
/// termination order (degree, E-before-F inversions, letters).  Throws
/// std::invalid_argument on letters outside the pair and std::runtime_error if
/// the step guard trips.
NCPoly normal_form(const NCPoly& p, const RewriteSystem& rs, ReductionTrace* trace = nullptr);

/// Defining relations of the rank-2 subalgebra as elements that must vanish.
std::vector<std::pair<std::string, NCPoly>> defining_relations(const RewriteSystem& rs);

struct OverlapEntry {
    std::string rule1, rule2;
    std::string word;
    int degree = 0;
    bool joinable = true;
};

struct OverlapReport {
    int maxdeg = 0;
    std::vector<OverlapEntry> entries;
    std::size_t joined() const;
    bool all_joinable() const { return joined() == entries.size(); }
};

/// Critical overlaps and inclusions of left-hand sides up to maxdeg, both
/// branches reduced to normal form.  Discrepancies are recorded, not thrown.
OverlapReport overlap_check(const RewriteSystem& rs, int maxdeg);

struct CorpusReport {
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::vector<std::string> failing; // first few failing instances, rendered
    bool passed() const { return failures == 0; }
};

/// x * r * y for every defining relation r and `pairs_per_relation` random
/// monomial pairs (x, y) of length <= 2; every product must reduce to 0.
CorpusReport ideal_corpus(const RewriteSystem& rs, int pairs_per_relation, std::uint64_t seed);

} // namespace qons
