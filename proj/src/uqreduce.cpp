#include "qons/uqreduce.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

namespace qons {

std::string to_string(RuleClass c) {
    switch (c) {
    case RuleClass::EF: return "ef";
    case RuleClass::SerreE: return "serreE";
    case RuleClass::SerreF: return "serreF";
    case RuleClass::Commute: return "commute";
    case RuleClass::Completion: return "completion";
    }
    return "?";
}

void ReductionTrace::merge(const ReductionTrace& o) {
    steps += o.steps;
    peak_terms = std::max(peak_terms, o.peak_terms);
    for (auto& [k, v] : o.fired) fired[k] += v;
    max_block_degree = std::max(max_block_degree, o.max_block_degree);
}

namespace {

constexpr long kStepGuard = 20'000'000;

int misorder(const Word& w) {
    int es = 0, m = 0;
    for (auto l : w) {
        if (l.kind == LetterKind::E) ++es;
        else if (l.kind == LetterKind::F) m += es;
    }
    return m;
}

/// Termination order: degree, E-before-F inversions, letters (E above F,
/// lower node above higher node), then K-exponents for totality.
struct TermLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        const int ma = misorder(a.word), mb = misorder(b.word);
        if (ma != mb) return ma < mb;
        for (std::size_t p = 0; p < a.word.size(); ++p) {
            const int ra = RewriteSystem::letter_rank(a.word[p]), rb = RewriteSystem::letter_rank(b.word[p]);
            if (ra != rb) return ra < rb;
        }
        return std::lexicographical_compare(a.k.begin(), a.k.end(), b.k.begin(), b.k.end());
    }
};

using Pending = std::map<Monomial, RationalFn, TermLess>;

void accumulate(Pending& p, const Monomial& m, const RationalFn& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

Letter with_kind(Letter l, LetterKind k) { return {k, l.node}; }

bool matches_at(const Word& w, std::size_t pos, const Word& lhs) {
    if (pos + lhs.size() > w.size()) return false;
    for (std::size_t q = 0; q < lhs.size(); ++q)
        if (w[pos + q] != lhs[q]) return false;
    return true;
}

/// c * m with rule r applied at position pos, accumulated into out.
void apply_rule(const Rule& r, const Monomial& m, std::size_t pos, const RationalFn& c, const CartanData& cd,
                Pending& out) {
    Word suffix(m.word.begin() + static_cast<long>(pos + r.lhs.size()), m.word.end());
    for (const auto& term : r.rhs) {
        Monomial n;
        n.word.assign(m.word.begin(), m.word.begin() + static_cast<long>(pos));
        n.word.insert(n.word.end(), term.word.begin(), term.word.end());
        n.word.insert(n.word.end(), suffix.begin(), suffix.end());
        n.k = term.k;
        if (m.k.size() > n.k.size()) n.k.resize(m.k.size(), 0);
        for (std::size_t a = 0; a < m.k.size(); ++a) n.k[a] += m.k[a];
        trim_kexp(n.k);
        RationalFn coef = c * term.coef;
        coef.mul_t_power(weight_shift(term.k, suffix, cd));
        accumulate(out, n, coef);
    }
}

/// Leftmost match over a rule list.
struct Matcher {
    const std::vector<Rule>* rules;
    std::vector<std::vector<std::size_t>> by_first;

    static std::size_t slot(Letter l) { return static_cast<std::size_t>(l.kind) * 256 + l.node; }

    explicit Matcher(const std::vector<Rule>& rs) : rules(&rs), by_first(768) {
        for (std::size_t k = 0; k < rs.size(); ++k) by_first[slot(rs[k].lhs.front())].push_back(k);
    }
    void add(std::size_t k) { by_first[slot((*rules)[k].lhs.front())].push_back(k); }

    std::optional<std::pair<std::size_t, std::size_t>> find(const Word& w) const {
        for (std::size_t p = 0; p < w.size(); ++p)
            for (std::size_t k : by_first[slot(w[p])])
                if (matches_at(w, p, (*rules)[k].lhs)) return std::make_pair(p, k);
        return std::nullopt;
    }
};

NCPoly reduce_with(Pending pending, const std::vector<Rule>& rules, const Matcher& matcher, const CartanData& cd,
                   ReductionTrace* trace) {
    NCPoly out;
    long steps = 0;
    std::size_t peak = pending.size();
    int block = 0;
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        const Monomial m = it->first;
        const RationalFn c = std::move(it->second);
        pending.erase(it);
        int es = 0, fs = 0;
        for (auto l : m.word) (l.kind == LetterKind::E ? es : fs) += 1;
        block = std::max({block, es, fs});
        auto hit = matcher.find(m.word);
        if (!hit) {
            out.add_term(m, c);
            continue;
        }
        const Rule& r = rules[hit->second];
        apply_rule(r, m, hit->first, c, cd, pending);
        if (++steps > kStepGuard) throw std::runtime_error("normal_form: step guard exceeded");
        if (trace) trace->fired[r.cls] += 1;
        peak = std::max(peak, pending.size());
    }
    if (trace) {
        trace->steps += steps;
        trace->peak_terms = std::max(trace->peak_terms, peak);
        trace->max_block_degree = std::max(trace->max_block_degree, block);
    }
    return out;
}

/// sum_r (-1)^r [n;r]_{q_x} L_x^{n-r} L_y L_x^r as (word, coefficient) pairs.
std::vector<std::pair<Word, RationalFn>> serre_terms(LetterKind kind, int x, int y, int n, int dx) {
    std::vector<std::pair<Word, RationalFn>> out;
    for (int r = 0; r <= n; ++r) {
        Word w;
        for (int k = 0; k < n - r; ++k) w.push_back({kind, static_cast<std::uint8_t>(x)});
        w.push_back({kind, static_cast<std::uint8_t>(y)});
        for (int k = 0; k < r; ++k) w.push_back({kind, static_cast<std::uint8_t>(x)});
        out.emplace_back(w, qbinom(n, r, dx) * RationalFn(r % 2 ? -1 : 1));
    }
    return out;
}

bool word_less(const Word& a, const Word& b) {
    return TermLess{}(Monomial{a, {}}, Monomial{b, {}});
}

/// Orient sum c_w w = 0 into a rule on its greatest word.
Rule orient(const std::vector<std::pair<Word, RationalFn>>& rel, RuleClass cls, std::string name) {
    std::size_t lead = 0;
    for (std::size_t k = 1; k < rel.size(); ++k)
        if (word_less(rel[lead].first, rel[k].first)) lead = k;
    Rule r{cls, rel[lead].first, {}, std::move(name)};
    const RationalFn inv = -rel[lead].second.inverse();
    for (std::size_t k = 0; k < rel.size(); ++k)
        if (k != lead) r.rhs.push_back({rel[k].first, {}, rel[k].second * inv});
    return r;
}

Rule mirror_to_f(const Rule& r, RuleClass cls, std::string name) {
    Rule m{cls, {}, {}, std::move(name)};
    for (auto l : r.lhs) m.lhs.push_back(with_kind(l, LetterKind::F));
    for (const auto& t : r.rhs) {
        RhsTerm n{{}, t.k, t.coef};
        for (auto l : t.word) n.word.push_back(with_kind(l, LetterKind::F));
        m.rhs.push_back(std::move(n));
    }
    return m;
}

struct CriticalPair {
    Monomial word;
    std::size_t r1, r2, pos2;
};

/// Overlaps (proper suffix of lhs1 = prefix of lhs2) and inclusions (lhs2
/// inside lhs1) with resulting word length in [mindeg, maxdeg].
std::vector<CriticalPair> critical_pairs(const std::vector<Rule>& rules, std::size_t a, std::size_t b, int mindeg,
                                         int maxdeg) {
    std::vector<CriticalPair> out;
    const Word& u = rules[a].lhs;
    const Word& v = rules[b].lhs;
    for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
        const int len = static_cast<int>(u.size() + v.size() - k);
        if (len < mindeg || len > maxdeg) continue;
        if (!std::equal(u.end() - static_cast<long>(k), u.end(), v.begin())) continue;
        Monomial m{u, {}};
        m.word.insert(m.word.end(), v.begin() + static_cast<long>(k), v.end());
        out.push_back({m, a, b, u.size() - k});
    }
    const int ulen = static_cast<int>(u.size());
    if (a != b && v.size() <= u.size() && ulen >= mindeg && ulen <= maxdeg)
        for (std::size_t p = 0; p + v.size() <= u.size(); ++p)
            if (matches_at(u, p, v)) out.push_back({Monomial{u, {}}, a, b, p});
    return out;
}

} // namespace

RewriteSystem::RewriteSystem(const CartanData& cd, int i, int j, int completion_degree)
    : cd_(cd), i_(i), j_(j), completion_degree_(completion_degree) {
    const int n = cd.size();
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw std::invalid_argument("rewrite system needs two distinct nodes of the diagram");

    // e-f straightening
    for (int a : {hi(), lo()})
        for (int b : {hi(), lo()}) {
            Rule r{RuleClass::EF, Word{Letter::E(a), Letter::F(b)}, {}, "ef(E" + std::to_string(a) + ",F" + std::to_string(b) + ")"};
            r.rhs.push_back({Word{Letter::F(b), Letter::E(a)}, {}, RationalFn(1)});
            if (a == b) {
                const RationalFn inv = (RationalFn::q_power(cd.d[a]) - RationalFn::q_power(-cd.d[a])).inverse();
                r.rhs.push_back({{}, Monomial::kpow(a, 2).k, inv});
                r.rhs.push_back({{}, Monomial::kpow(a, -2).k, -inv});
            }
            add_rule(std::move(r));
        }

    // q-Serre (or plain commutation for unlinked nodes), E side then mirrored
    std::vector<Rule> eside;
    if (cd.a[i][j] == 0) {
        std::vector<std::pair<Word, RationalFn>> rel{{Word{Letter::E(hi()), Letter::E(lo())}, RationalFn(1)},
                                                     {Word{Letter::E(lo()), Letter::E(hi())}, RationalFn(-1)}};
        eside.push_back(orient(rel, RuleClass::Commute, "commE"));
    } else {
        for (auto [x, y] : {std::pair{hi(), lo()}, std::pair{lo(), hi()}}) {
            const int deg = 1 - cd.a[x][y];
            eside.push_back(orient(serre_terms(LetterKind::E, x, y, deg, cd.d[x]), RuleClass::SerreE,
                                   "serreE(" + std::to_string(x) + "," + std::to_string(y) + ")"));
        }
    }
    int longest = 0;
    for (auto& r : eside) longest = std::max(longest, static_cast<int>(r.lhs.size()));
    if (completion_degree_ <= 0) completion_degree_ = longest + 4;

    // degree-bounded completion of the positive part
    {
        Matcher matcher(eside);
        std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> seen;
        int made = 0;
        for (int deg = 2; deg <= completion_degree_; ++deg) {
            bool grew = true;
            while (grew) {
                grew = false;
                const std::size_t count = eside.size();
                for (std::size_t a = 0; a < count && !grew; ++a)
                    for (std::size_t b = 0; b < count && !grew; ++b)
                        for (const auto& cp : critical_pairs(eside, a, b, deg, deg)) {
                            if (!seen.insert({a, b, cp.pos2, cp.word.word.size()}).second) continue;
                            Pending one, two;
                            apply_rule(eside[a], cp.word, 0, RationalFn(1), cd_, one);
                            apply_rule(eside[b], cp.word, cp.pos2, RationalFn(1), cd_, two);
                            for (auto& [m, c] : two) accumulate(one, m, -c);
                            const NCPoly diff = reduce_with(std::move(one), eside, matcher, cd_, nullptr);
                            if (diff.is_zero()) continue;
                            std::vector<std::pair<Word, RationalFn>> rel;
                            for (auto& [m, c] : diff.terms()) rel.emplace_back(m.word, c);
                            eside.push_back(orient(rel, RuleClass::Completion, "compE#" + std::to_string(++made)));
                            matcher.add(eside.size() - 1);
                            grew = true;
                            break;
                        }
            }
        }
    }

    for (std::size_t k = 0; k < eside.size(); ++k) {
        Rule r = eside[k];
        add_rule(r);
        RuleClass fcls = r.cls == RuleClass::SerreE ? RuleClass::SerreF : r.cls;
        std::string fname = r.name;
        fname[fname.find('E')] = 'F';
        add_rule(mirror_to_f(r, fcls, fname));
    }
}

void RewriteSystem::add_rule(Rule r) {
    if (by_first_.empty()) by_first_.resize(768);
    by_first_[Matcher::slot(r.lhs.front())].push_back(rules_.size());
    rules_.push_back(std::move(r));
}

int RewriteSystem::longest_lhs() const {
    int m = 0;
    for (auto& r : rules_)
        if (r.cls == RuleClass::SerreE || r.cls == RuleClass::Commute) m = std::max(m, static_cast<int>(r.lhs.size()));
    return m;
}

std::size_t RewriteSystem::completion_rule_count() const {
    return static_cast<std::size_t>(
        std::count_if(rules_.begin(), rules_.end(), [](const Rule& r) { return r.cls == RuleClass::Completion; }));
}

NCPoly normal_form(const NCPoly& p, const RewriteSystem& rs, ReductionTrace* trace) {
    Pending pending;
    for (auto& [m, c] : p.terms()) {
        for (auto l : m.word)
            if (l.kind == LetterKind::A || (l.node != rs.i_ && l.node != rs.j_))
                throw std::invalid_argument("letter " + l.to_string() + " outside the rewriting pair (" +
                                            std::to_string(rs.i_) + "," + std::to_string(rs.j_) + ")");
        accumulate(pending, m, c);
    }
    Matcher matcher(rs.rules_);
    return reduce_with(std::move(pending), rs.rules_, matcher, rs.cd_, trace);
}

std::vector<std::pair<std::string, NCPoly>> defining_relations(const RewriteSystem& rs) {
    const CartanData& cd = rs.cartan();
    std::vector<std::pair<std::string, NCPoly>> out;
    for (int a : {rs.hi(), rs.lo()})
        for (int b : {rs.hi(), rs.lo()}) {
            NCPoly r;
            r.add_term(Monomial::letters({Letter::E(a), Letter::F(b)}), RationalFn(1));
            r.add_term(Monomial::letters({Letter::F(b), Letter::E(a)}), RationalFn(-1));
            if (a == b) {
                const RationalFn inv = (RationalFn::q_power(cd.d[a]) - RationalFn::q_power(-cd.d[a])).inverse();
                r.add_term(Monomial::kpow(a, 2), -inv);
                r.add_term(Monomial::kpow(a, -2), inv);
            }
            out.emplace_back("[E" + std::to_string(a) + ",F" + std::to_string(b) + "]", r);
        }
    for (LetterKind kind : {LetterKind::E, LetterKind::F})
        for (auto [x, y] : {std::pair{rs.hi(), rs.lo()}, std::pair{rs.lo(), rs.hi()}}) {
            NCPoly r;
            for (auto& [w, c] : serre_terms(kind, x, y, 1 - cd.a[x][y], cd.d[x])) r.add_term(Monomial{w, {}}, c);
            out.emplace_back(std::string(kind == LetterKind::E ? "serreE(" : "serreF(") + std::to_string(x) + "," +
                                 std::to_string(y) + ")",
                             r);
        }
    return out;
}

std::size_t OverlapReport::joined() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](auto& e) { return e.joinable; }));
}

OverlapReport overlap_check(const RewriteSystem& rs, int maxdeg) {
    OverlapReport rep;
    rep.maxdeg = maxdeg;
    const auto& rules = rs.rules();
    for (std::size_t a = 0; a < rules.size(); ++a)
        for (std::size_t b = 0; b < rules.size(); ++b)
            for (const auto& cp : critical_pairs(rules, a, b, 2, maxdeg)) {
                Pending one, two;
                apply_rule(rules[a], cp.word, 0, RationalFn(1), rs.cartan(), one);
                apply_rule(rules[b], cp.word, cp.pos2, RationalFn(1), rs.cartan(), two);
                NCPoly x, y;
                for (auto& [m, c] : one) x.add_term(m, c);
                for (auto& [m, c] : two) y.add_term(m, c);
                OverlapEntry e{rules[a].name, rules[b].name, cp.word.to_string(),
                               static_cast<int>(cp.word.word.size()), false};
                e.joinable = normal_form(x - y, rs).is_zero();
                rep.entries.push_back(std::move(e));
            }
    return rep;
}

CorpusReport ideal_corpus(const RewriteSystem& rs, int pairs_per_relation, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int nodes[2] = {rs.hi(), rs.lo()};
    std::uniform_int_distribution<int> len(0, 2), pick(0, 3), kx(-1, 1);
    auto random_monomial = [&] {
        Monomial m;
        const int l = len(rng);
        for (int k = 0; k < l; ++k) {
            const int c = pick(rng);
            m.word.push_back(c < 2 ? Letter::E(nodes[c]) : Letter::F(nodes[c - 2]));
        }
        m.k.assign(static_cast<std::size_t>(rs.lo() + 1), 0);
        for (int n : nodes) m.k[n] = kx(rng);
        trim_kexp(m.k);
        return m;
    };
    CorpusReport rep;
    const CartanData& cd = rs.cartan();
    for (const auto& [name, rel] : defining_relations(rs))
        for (int k = 0; k < pairs_per_relation; ++k) {
            const Monomial x = random_monomial(), y = random_monomial();
            const NCPoly prod = multiply(multiply(NCPoly(x), rel, cd), NCPoly(y), cd);
            ++rep.instances;
            if (!normal_form(prod, rs).is_zero()) {
                ++rep.failures;
                if (rep.failing.size() < 5) rep.failing.push_back(x.to_string() + " * " + name + " * " + y.to_string());
            }
        }
    return rep;
}

} // namespace qons
