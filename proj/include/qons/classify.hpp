#pragma once

#include "qons/homver.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace qons {

/// Value assigned to one boundary parameter w_n by a solution family.
enum class Tag { Free, Zero, Root1, Root2 };
std::string to_string(Tag t);

/// One constraint of the boundary-condition system: product of atoms = 0,
/// with c_n = cbar_n = 1.
struct LinkConstraint {
    int x = 0, y = 0; // from relation (x, y)
    std::vector<Atom> atoms;
    std::string to_string() const;
};

struct ConstraintSet {
    CartanData cartan;
    std::vector<LinkConstraint> constraints;
};

/// One template instantiation per link (both orientations).
ConstraintSet constraints_for(const CartanData& cd);

struct SolutionFamily {
    std::vector<Tag> tags; // per node
    bool operator==(const SolutionFamily&) const = default;
    auto operator<=>(const SolutionFamily&) const = default;
    /// Every constraint has an atom satisfied by the tags.
    bool solves(const ConstraintSet& cs) const;
    /// Every non-free tag of `other` agrees with ours and we are not equal.
    bool strictly_contains(const SolutionFamily& other) const;
    bool contains(const SolutionFamily& other) const { return *this == other || strictly_contains(other); }
    std::string to_string() const; // e.g. "[R1, Z, *]"
};

/// Maximal families (no tag can be relaxed to Free), duplicate-free, sorted.
std::vector<SolutionFamily> enumerate_families(const ConstraintSet& cs);

/// Published family lists for the supported series.
struct ReferenceFamily {
    SolutionFamily family;
    std::string display; // the published statement, paraphrased
};
/// Empty optional when no table is encoded for the type.
std::optional<std::vector<ReferenceFamily>> reference_families(const CartanData& cd);

enum class PaperMatch { Exact, Subsumed, Extra };
std::string to_string(PaperMatch m);

struct ComparisonReport {
    std::vector<SolutionFamily> computed;
    std::vector<PaperMatch> match;                // per computed family
    std::vector<ReferenceFamily> reference;
    std::vector<int> reference_container;         // index into computed, -1 if unmatched
    bool all_reference_matched() const;
    /// Extras whose tags are all Zero or Free (the "simple solutions" kind).
    bool extras_zero_type() const;
};

/// Throws std::invalid_argument when no reference table is encoded.
ComparisonReport compare_with_paper(const CartanData& cd, const std::vector<SolutionFamily>& families);

/// Numeric value of one node under a family (the "+" sign); nullopt for Free.
/// Throws std::domain_error when the closed form has a vanishing denominator.
std::optional<std::complex<double>> instantiate_node(const CartanData& cd, Tag tag, int node, double tval);
std::vector<std::optional<std::complex<double>>> instantiate_numeric(const CartanData& cd, const SolutionFamily& f,
                                                                     double tval);

} // namespace qons
