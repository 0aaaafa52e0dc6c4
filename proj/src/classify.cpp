#include "qons/classify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qons {

std::string to_string(Tag t) {
    switch (t) {
    case Tag::Free: return "*";
    case Tag::Zero: return "Z";
    case Tag::Root1: return "R1";
    case Tag::Root2: return "R2";
    }
    return "?";
}

std::string to_string(PaperMatch m) {
    switch (m) {
    case PaperMatch::Exact: return "exact";
    case PaperMatch::Subsumed: return "subsumed";
    case PaperMatch::Extra: return "extra";
    }
    return "?";
}

namespace {

Tag tag_of(AtomKind k) {
    switch (k) {
    case AtomKind::Zero: return Tag::Zero;
    case AtomKind::Root1: return Tag::Root1;
    case AtomKind::Root2: return Tag::Root2;
    }
    return Tag::Free;
}

std::string atom_text(const Atom& a) {
    const std::string w = "w" + std::to_string(a.node), qn = "q" + std::to_string(a.node);
    switch (a.kind) {
    case AtomKind::Zero: return w;
    case AtomKind::Root1: return "(" + w + "^2 + 1/(" + qn + " + " + qn + "^-1 - 2))";
    case AtomKind::Root2:
        return "(" + w + "^2 + (" + qn + " + " + qn + "^-1 - 1)^2/(" + qn + " + " + qn + "^-1 - 2))";
    }
    return "?";
}

bool satisfied(const Atom& a, const std::vector<Tag>& tags) { return tags[a.node] == tag_of(a.kind); }
bool blocked(const Atom& a, const std::vector<Tag>& tags) {
    return tags[a.node] != Tag::Free && tags[a.node] != tag_of(a.kind);
}

/// Depth-first case split over the first unsatisfied constraint, with unit
/// propagation; collects every consistent hitting assignment it reaches.
void search(const ConstraintSet& cs, std::vector<Tag> tags, std::set<std::vector<Tag>>& out) {
    // propagate
    for (bool changed = true; changed;) {
        changed = false;
        for (auto& c : cs.constraints) {
            const Atom* open = nullptr;
            int n_open = 0;
            bool sat = false;
            for (auto& a : c.atoms) {
                if (satisfied(a, tags)) sat = true;
                else if (!blocked(a, tags)) {
                    open = &a;
                    ++n_open;
                }
            }
            if (sat) continue;
            if (n_open == 0) return; // contradiction
            if (n_open == 1) {
                tags[open->node] = tag_of(open->kind);
                changed = true;
            }
        }
    }
    for (auto& c : cs.constraints) {
        if (std::any_of(c.atoms.begin(), c.atoms.end(), [&](auto& a) { return satisfied(a, tags); })) continue;
        for (auto& a : c.atoms) {
            if (blocked(a, tags)) continue;
            auto next = tags;
            next[a.node] = tag_of(a.kind);
            search(cs, std::move(next), out);
        }
        return;
    }
    out.insert(tags);
}

} // namespace

std::string LinkConstraint::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < atoms.size(); ++k) s += (k ? "*" : "") + atom_text(atoms[k]);
    return s + " = 0";
}

ConstraintSet constraints_for(const CartanData& cd) {
    ConstraintSet cs{cd, {}};
    for (const auto& l : links(cd))
        for (auto [x, y] : {std::pair{l.i, l.j}, std::pair{l.j, l.i}}) {
            if (cd.a[x][y] == -1) cs.constraints.push_back({x, y, {{AtomKind::Zero, y}, {AtomKind::Root1, x}}});
            else if (cd.a[x][y] == -3)
                cs.constraints.push_back({x, y, {{AtomKind::Zero, y}, {AtomKind::Root1, x}, {AtomKind::Root2, x}}});
        }
    return cs;
}

bool SolutionFamily::solves(const ConstraintSet& cs) const {
    return std::all_of(cs.constraints.begin(), cs.constraints.end(), [&](const LinkConstraint& c) {
        return std::any_of(c.atoms.begin(), c.atoms.end(), [&](auto& a) { return satisfied(a, tags); });
    });
}

bool SolutionFamily::strictly_contains(const SolutionFamily& other) const {
    if (tags.size() != other.tags.size() || *this == other) return false;
    for (std::size_t n = 0; n < tags.size(); ++n)
        if (tags[n] != Tag::Free && tags[n] != other.tags[n]) return false;
    return true;
}

std::string SolutionFamily::to_string() const {
    std::string s = "[";
    for (std::size_t n = 0; n < tags.size(); ++n) s += (n ? ", " : "") + qons::to_string(tags[n]);
    return s + "]";
}

std::vector<SolutionFamily> enumerate_families(const ConstraintSet& cs) {
    std::set<std::vector<Tag>> hits;
    search(cs, std::vector<Tag>(cs.cartan.size(), Tag::Free), hits);
    // relax to maximal families, then drop anything contained in another
    std::set<SolutionFamily> relaxed;
    for (auto tags : hits) {
        SolutionFamily f{tags};
        for (std::size_t n = 0; n < f.tags.size(); ++n) {
            if (f.tags[n] == Tag::Free) continue;
            const Tag keep = f.tags[n];
            f.tags[n] = Tag::Free;
            if (!f.solves(cs)) f.tags[n] = keep;
        }
        relaxed.insert(f);
    }
    std::vector<SolutionFamily> out;
    for (auto& f : relaxed)
        if (std::none_of(relaxed.begin(), relaxed.end(), [&](auto& g) { return g.strictly_contains(f); }))
            out.push_back(f);
    return out;
}

// ---------------------------------------------------------------------------
// Published tables

namespace {

SolutionFamily make(int size, std::initializer_list<std::pair<std::vector<int>, Tag>> parts) {
    SolutionFamily f{std::vector<Tag>(size, Tag::Free)};
    for (auto& [nodes, t] : parts)
        for (int n : nodes) f.tags.at(n) = t;
    return f;
}

std::vector<int> range(int a, int b) { // inclusive
    std::vector<int> r;
    for (int k = a; k <= b; ++k) r.push_back(k);
    return r;
}

} // namespace

std::optional<std::vector<ReferenceFamily>> reference_families(const CartanData& cd) {
    const int N = cd.size(), last = N - 1;
    const char s = cd.id.series;
    const int r = cd.id.rank, tw = cd.id.twist;
    const Tag R = Tag::Root1, Z = Tag::Zero;
    using V = std::vector<ReferenceFamily>;
    if (tw == 1 && ((s == 'a' && r > 1) || s == 'd' || s == 'e'))
        return V{{make(N, {{range(0, last), R}}), "eps_j = ±i/(q^1/2 - q^-1/2) for all j"}};
    if (tw == 1 && s == 'b')
        return V{{make(N, {{range(0, last - 1), R}}), "eps_j = ±i/(q - q^-1) for j < n, eps_n arbitrary"}};
    if (tw == 1 && s == 'c')
        return V{{make(N, {{range(0, last), R}}), "eps_j = ±i/(q_j^1/2 - q_j^-1/2) for all j"},
                 {make(N, {{range(1, last - 1), Z}}), "eps_j = 0 for 0 < j < n, eps_0 and eps_n arbitrary"}};
    if (tw == 2 && s == 'a' && r % 2 == 1)
        return V{{make(N, {{range(0, last), R}}), "eps_j = ±i/(q_j^1/2 - q_j^-1/2) for j = 0..n"},
                 {make(N, {{range(0, last - 1), Z}}), "eps_j = 0 for j < n, eps_n arbitrary"}};
    if (tw == 2 && s == 'd')
        return V{{make(N, {{range(1, last - 1), R}}), "eps_j = ±i/(q_j - q_j^-1) for 0 < j < n, eps_0 and eps_n arbitrary"}};
    if (tw == 2 && s == 'a' && r == 2)
        return V{{make(N, {{{0}, R}}), "eps_0 = ±i/(q^2 - q^-2), eps_1 arbitrary"},
                 {make(N, {{{1}, Z}}), "eps_1 = 0, eps_0 arbitrary"}};
    if (tw == 2 && s == 'a' && r == 4)
        return V{{make(N, {{{1, 2}, R}}), "eps_j = ±i/(q_j^1/2 - q_j^-1/2) for j = 1, 2, eps_0 arbitrary"},
                 {make(N, {{{2}, R}, {{0}, Z}}), "eps_2 = ±i/(q^2 - q^-2), eps_0 = 0, eps_1 arbitrary"},
                 {make(N, {{{0, 1}, Z}}), "eps_0 = eps_1 = 0, eps_2 arbitrary"}};
    if (tw == 2 && s == 'a' && r % 2 == 0)
        return V{{make(N, {{range(1, last), R}}), "eps_j = ±i/(q_j^1/2 - q_j^-1/2) for j = 1..n, eps_0 arbitrary"},
                 {make(N, {{range(0, last - 1), Z}}), "eps_j = 0 for j < n, eps_n arbitrary"}};
    if (s == 'g' && tw == 1)
        return V{{make(N, {{range(0, 2), R}}), "eps_j = ±i/(q_j^1/2 - q_j^-1/2)"},
                 {make(N, {{{0, 1}, R}, {{2}, Tag::Root2}}),
                  "eps_j = ±i/(q_j^1/2 - q_j^-1/2) for j = 0, 1, eps_2 = ±i(q + q^-1 - 1)/(q^1/2 - q^-1/2)"}};
    if (s == 'd' && tw == 3)
        return V{{make(N, {{range(0, 2), R}}), "eps_j = ±i/(q_j^1/2 - q_j^-1/2) for j = 0, 1, 2"}};
    if (s == 'f' && tw == 1)
        return V{{make(N, {{range(0, 4), R}}), "eps_j = ±i/(q_j^1/2 - q_j^-1/2) for j = 0..4"},
                 {make(N, {{range(0, 2), R}, {{3, 4}, Z}}), "eps_j = ±i/(q_j - q_j^-1) for j = 0, 1, 2, eps_3 = eps_4 = 0"}};
    if (s == 'e' && tw == 2)
        return V{{make(N, {{range(0, 4), R}}), "eps_j = ±i/(q_j^1/2 - q_j^-1/2) for j = 0..4"},
                 {make(N, {{range(0, 2), Z}, {{3, 4}, R}}), "eps_j = 0 for j = 0, 1, 2, eps_j = ±i/(q_j - q_j^-1) for j = 3, 4"}};
    return std::nullopt;
}

bool ComparisonReport::all_reference_matched() const {
    return std::none_of(reference_container.begin(), reference_container.end(), [](int k) { return k < 0; });
}

bool ComparisonReport::extras_zero_type() const {
    for (std::size_t k = 0; k < computed.size(); ++k) {
        if (match[k] != PaperMatch::Extra) continue;
        for (Tag t : computed[k].tags)
            if (t != Tag::Zero && t != Tag::Free) return false;
    }
    return true;
}

ComparisonReport compare_with_paper(const CartanData& cd, const std::vector<SolutionFamily>& families) {
    auto ref = reference_families(cd);
    if (!ref) throw std::invalid_argument("no published family table for " + cd.id.to_string());
    ComparisonReport rep;
    rep.computed = families;
    rep.reference = *ref;
    for (auto& f : families) {
        PaperMatch m = PaperMatch::Extra;
        for (auto& r : rep.reference) {
            if (f == r.family) m = PaperMatch::Exact;
            else if (m == PaperMatch::Extra && f.strictly_contains(r.family)) m = PaperMatch::Subsumed;
        }
        rep.match.push_back(m);
    }
    for (auto& r : rep.reference) {
        int idx = -1;
        for (std::size_t k = 0; k < families.size() && idx < 0; ++k)
            if (families[k] == r.family) idx = static_cast<int>(k);
        for (std::size_t k = 0; k < families.size() && idx < 0; ++k)
            if (families[k].contains(r.family)) idx = static_cast<int>(k);
        rep.reference_container.push_back(idx);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Numeric rendering

std::optional<std::complex<double>> instantiate_node(const CartanData& cd, Tag tag, int node, double tval) {
    if (tag == Tag::Free) return std::nullopt;
    if (tag == Tag::Zero) return std::complex<double>(0.0, 0.0);
    const double half = std::pow(tval, cd.d.at(node)); // q_n^{1/2}
    const double den = half - 1.0 / half;
    if (std::abs(den) < 1e-300) throw std::domain_error("vanishing denominator q_n^1/2 - q_n^-1/2");
    double scale = 1.0;
    if (tag == Tag::Root2) scale = half * half + 1.0 / (half * half) - 1.0;
    return std::complex<double>(0.0, scale / den);
}

std::vector<std::optional<std::complex<double>>> instantiate_numeric(const CartanData& cd, const SolutionFamily& f,
                                                                     double tval) {
    std::vector<std::optional<std::complex<double>>> out;
    for (std::size_t n = 0; n < f.tags.size(); ++n) out.push_back(instantiate_node(cd, f.tags[n], static_cast<int>(n), tval));
    return out;
}

} // namespace qons
