#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qons {

struct AlgebraId {
    char series = 'a'; // one of a..g
    int rank = 1;
    int twist = 1;

    /// Canonical text form, e.g. "g2^1".
    std::string to_string() const;
    /// LaTeX form, e.g. "g_{2}^{(1)}".
    std::string to_latex() const;
    bool operator==(const AlgebraId&) const = default;
};

/// Input that does not match <series><rank>^<twist>.
struct AlgebraSyntaxError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Well-formed id naming no affine algebra (e.g. b2^1).
struct InadmissibleAlgebra : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Throws AlgebraSyntaxError or InadmissibleAlgebra.
AlgebraId parse_algebra_id(std::string_view s);
/// Throws InadmissibleAlgebra with a message naming the minimal rank.
void check_admissible(const AlgebraId& id);

struct CartanData {
    AlgebraId id;
    std::vector<std::vector<int>> a; // a[i][j], extended Cartan matrix
    std::vector<int> d;              // symmetrizers
    std::vector<int> marks;          // Kac labels

    int size() const { return static_cast<int>(d.size()); }
    int entry(int i, int j) const { return a[i][j]; }
};

/// Extended Cartan matrix with the node numbering of the standard affine
/// Dynkin pictures (affine node 0).  Throws InadmissibleAlgebra.
CartanData build(const AlgebraId& id);
inline CartanData build(std::string_view id) { return build(parse_algebra_id(id)); }

enum class LinkKind { Simple, Double, Triple, Quadruple, DoubleBoth };

std::string to_string(LinkKind k);

struct LinkClass {
    int i = 0, j = 0; // i < j
    LinkKind kind = LinkKind::Simple;
    int long_node = -1; // node carrying the -1 toward its partner; -1 for Simple/DoubleBoth

    int short_node() const { return long_node < 0 ? -1 : (long_node == i ? j : i); }
    bool operator==(const LinkClass&) const = default;
};

/// Classifies a single pair from {a_ij, a_ji}; throws std::logic_error for
/// patterns outside the five affine ones.
LinkClass classify_link(const CartanData& cd, int i, int j);
/// One entry per linked unordered pair, in lexicographic pair order.
std::vector<LinkClass> links(const CartanData& cd);

/// Every admissible id up to the given rank (exceptional types included).
std::vector<AlgebraId> admissible_ids(int max_rank);

} // namespace qons
