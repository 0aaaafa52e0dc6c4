#include "qons/homver.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

namespace qons {

// ---------------------------------------------------------------------------
// WPoly

WPoly WPoly::from_laurent(const LaurentPoly& p, const std::vector<Symbol>& vars) {
    WPoly r(vars);
    for (const auto& term : p.terms()) {
        Exps e(vars.size(), 0);
        Mono rest;
        rest.texp = term.m.texp;
        for (auto packed : term.m.vars) {
            const Symbol s = Mono::sym_of(packed);
            auto it = std::find(vars.begin(), vars.end(), s);
            if (it != vars.end()) e[static_cast<std::size_t>(it - vars.begin())] = static_cast<int>(Mono::exp_of(packed));
            else rest.vars.push_back(packed);
        }
        r.add_term(e, RationalFn(LaurentPoly::monomial(term.c, rest)));
    }
    return r;
}

WPoly WPoly::constant(const std::vector<Symbol>& vars, RationalFn c) {
    WPoly r(vars);
    r.add_term(Exps(vars.size(), 0), c);
    return r;
}

WPoly WPoly::variable(const std::vector<Symbol>& vars, Symbol v, int e) {
    WPoly r(vars);
    Exps x(vars.size(), 0);
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw std::invalid_argument("symbol " + v.name() + " is not a variable of this ring");
    x[static_cast<std::size_t>(it - vars.begin())] = e;
    r.add_term(x, RationalFn(1));
    return r;
}

bool WPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

int WPoly::total_degree() const {
    int d = 0;
    for (auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

void WPoly::add_term(const Exps& e, const RationalFn& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WPoly& WPoly::operator+=(const WPoly& o) {
    if (vars_.empty()) vars_ = o.vars_;
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

WPoly& WPoly::operator-=(const WPoly& o) {
    if (vars_.empty()) vars_ = o.vars_;
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

WPoly operator*(const WPoly& a, const WPoly& b) {
    WPoly r(a.vars_.empty() ? b.vars_ : a.vars_);
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            WPoly::Exps e = ea;
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

WPoly WPoly::scaled(const RationalFn& c, const Exps& shift) const {
    WPoly r(vars_);
    for (auto& [e, x] : terms_) {
        Exps n = e;
        for (std::size_t k = 0; k < n.size(); ++k) n[k] += shift[k];
        r.add_term(n, x * c);
    }
    return r;
}

WPoly WPoly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(lead_coef().inverse(), Exps(vars_.size(), 0));
}

RationalFn WPoly::to_rational() const {
    RationalFn r;
    for (auto& [e, c] : terms_) {
        RationalFn m = c;
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0) m *= RationalFn::symbol(vars_[k], static_cast<unsigned>(e[k]));
        r += m;
    }
    return r;
}

namespace {

std::string render_wpoly(const WPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [e, c] : p.terms()) {
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += latex ? " " : "*";
            mono += latex ? p.vars()[k].latex() : p.vars()[k].name();
            if (e[k] != 1) mono += latex ? "^{" + std::to_string(e[k]) + "}" : "^" + std::to_string(e[k]);
        }
        const std::string body = latex ? c.to_latex() : c.to_string();
        const bool simple = c.is_polynomial() && c.num().size() == 1;
        std::string piece;
        if (mono.empty()) piece = simple ? body : "(" + body + ")";
        else if (c.is_one()) piece = mono;
        else if (c == RationalFn(-1)) piece = "-" + mono;
        else piece = (simple ? body : "(" + body + ")") + (latex ? " " : "*") + mono;
        if (!first) {
            if (piece[0] == '-') piece = " - " + piece.substr(1);
            else piece = " + " + piece;
        }
        s += piece;
        first = false;
    }
    return s;
}

bool divides(const WPoly::Exps& a, const WPoly::Exps& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

WPoly::Exps diff(const WPoly::Exps& b, const WPoly::Exps& a) {
    WPoly::Exps r(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) r[k] = b[k] - a[k];
    return r;
}

WPoly::Exps lcm(const WPoly::Exps& a, const WPoly::Exps& b) {
    WPoly::Exps r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
    return r;
}

} // namespace

std::string WPoly::to_string() const { return render_wpoly(*this, false); }
std::string WPoly::to_latex() const { return render_wpoly(*this, true); }

WPoly reduce(const WPoly& p, const std::vector<WPoly>& g) {
    WPoly rem(p.vars()), cur = p;
    while (!cur.is_zero()) {
        const auto lt = cur.lead_exps();
        const RationalFn lc = cur.lead_coef();
        bool hit = false;
        for (const auto& d : g) {
            if (d.is_zero() || !divides(d.lead_exps(), lt)) continue;
            cur -= d.scaled(lc / d.lead_coef(), diff(lt, d.lead_exps()));
            hit = true;
            break;
        }
        if (!hit) {
            rem.add_term(lt, lc);
            WPoly::Map::const_iterator it = cur.terms().begin();
            WPoly one(cur.vars());
            one.add_term(it->first, it->second);
            cur -= one;
        }
    }
    return rem;
}

std::optional<WPoly> divide_exact(const WPoly& p, const WPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    WPoly q(p.vars()), cur = p;
    while (!cur.is_zero()) {
        const auto lt = cur.lead_exps();
        if (!divides(d.lead_exps(), lt)) return std::nullopt;
        const RationalFn f = cur.lead_coef() / d.lead_coef();
        const auto sh = diff(lt, d.lead_exps());
        q.add_term(sh, f);
        cur -= d.scaled(f, sh);
    }
    return q;
}

std::vector<WPoly> groebner(std::vector<WPoly> gens) {
    std::vector<WPoly> g;
    for (auto& p : gens)
        if (!p.is_zero()) g.push_back(p.monic());
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b) pairs.emplace_back(a, b);
    while (!pairs.empty()) {
        auto [a, b] = pairs.back();
        pairs.pop_back();
        const auto l = lcm(g[a].lead_exps(), g[b].lead_exps());
        // coprime leading monomials: the S-polynomial reduces to zero
        bool coprime = true;
        for (std::size_t k = 0; k < l.size(); ++k)
            if (g[a].lead_exps()[k] > 0 && g[b].lead_exps()[k] > 0) coprime = false;
        if (coprime) continue;
        WPoly s = g[a].scaled(RationalFn(1), diff(l, g[a].lead_exps())) -
                  g[b].scaled(RationalFn(1), diff(l, g[b].lead_exps()));
        WPoly r = reduce(s, g);
        if (r.is_zero()) continue;
        g.push_back(r.monic());
        for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
    }
    // minimize
    std::vector<WPoly> m;
    for (std::size_t a = 0; a < g.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
            if (a == b || !divides(g[b].lead_exps(), g[a].lead_exps())) continue;
            if (g[b].lead_exps() != g[a].lead_exps() || b < a) redundant = true;
        }
        if (!redundant) m.push_back(g[a]);
    }
    // inter-reduce
    for (std::size_t a = 0; a < m.size(); ++a) {
        std::vector<WPoly> others;
        for (std::size_t b = 0; b < m.size(); ++b)
            if (b != a) others.push_back(m[b]);
        WPoly head(m[a].vars());
        head.add_term(m[a].lead_exps(), m[a].lead_coef());
        m[a] = (head + reduce(m[a] - head, others)).monic();
    }
    std::sort(m.begin(), m.end(), [](const WPoly& x, const WPoly& y) { return x.lead_exps() < y.lead_exps(); });
    return m;
}

bool in_radical(const WPoly& p, const std::vector<WPoly>& basis, int max_power) {
    if (p.is_zero()) return true;
    WPoly pk = p;
    for (int k = 1; k <= max_power; ++k) {
        if (reduce(pk, basis).is_zero()) return true;
        pk = pk * p;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Atoms and constraints

std::string to_string(Variant v) { return v == Variant::Standard ? "std" : "bar"; }

std::string to_string(AtomKind k) {
    switch (k) {
    case AtomKind::Zero: return "zero";
    case AtomKind::Root1: return "root1";
    case AtomKind::Root2: return "root2";
    }
    return "?";
}

RationalFn kappa(const CartanData& cd, int node) {
    const int d = cd.d[node];
    return RationalFn::symbol(Symbol::c(node)) * RationalFn::symbol(Symbol::cbar(node)) /
           (RationalFn::q_power(d) + RationalFn::q_power(-d) - RationalFn(2));
}

RationalFn root2_scale(const CartanData& cd, int node) {
    const int d = cd.d[node];
    return RationalFn::q_power(d) + RationalFn::q_power(-d) - RationalFn(1);
}

WPoly Atom::poly(const CartanData& cd, const std::vector<Symbol>& vars) const {
    if (kind == AtomKind::Zero) return WPoly::variable(vars, Symbol::w(node));
    RationalFn k = kappa(cd, node);
    if (kind == AtomKind::Root2) k *= root2_scale(cd, node).pow(2);
    return WPoly::variable(vars, Symbol::w(node), 2) + WPoly::constant(vars, k);
}

namespace {

std::string qi_text(int node) { return "q" + std::to_string(node); }

} // namespace

std::string Atom::to_string() const {
    const std::string n = std::to_string(node);
    const std::string qi = qi_text(node);
    switch (kind) {
    case AtomKind::Zero: return "w" + n;
    case AtomKind::Root1: return "(w" + n + "^2 + c" + n + "*cb" + n + "/(" + qi + " + " + qi + "^-1 - 2))";
    case AtomKind::Root2:
        return "(w" + n + "^2 + c" + n + "*cb" + n + "*(" + qi + " + " + qi + "^-1 - 1)^2/(" + qi + " + " + qi +
               "^-1 - 2))";
    }
    return "?";
}

std::string Atom::to_latex() const {
    const std::string n = "{" + std::to_string(node) + "}";
    const std::string qi = "q_" + n;
    switch (kind) {
    case AtomKind::Zero: return "w_" + n;
    case AtomKind::Root1:
        return "\\Big(w_" + n + "^2+\\frac{c_" + n + "\\,\\overline{c}_" + n + "}{" + qi + "+" + qi + "^{-1}-2}\\Big)";
    case AtomKind::Root2:
        return "\\Big(w_" + n + "^2+\\frac{c_" + n + "\\,\\overline{c}_" + n + "(" + qi + "+" + qi + "^{-1}-1)^2}{" +
               qi + "+" + qi + "^{-1}-2}\\Big)";
    }
    return "?";
}

std::string Constraint::to_string() const {
    std::string s;
    for (auto& a : atoms) s += (s.empty() ? "" : "*") + a.to_string();
    if (!rest.is_constant()) s += (s.empty() ? "" : "*") + ("(" + rest.to_string() + ")");
    if (s.empty()) s = poly.is_zero() ? "0" : "1";
    return s + " = 0";
}

std::string Constraint::to_latex() const {
    std::string s;
    for (auto& a : atoms) s += (s.empty() ? "" : "\\,") + a.to_latex();
    if (!rest.is_constant()) s += (s.empty() ? "" : "\\,") + ("\\big(" + rest.to_latex() + "\\big)");
    if (s.empty()) s = poly.is_zero() ? "0" : "1";
    return s + "=0";
}

namespace {

std::vector<Symbol> pair_vars(int i, int j) { return {Symbol::w(std::min(i, j)), Symbol::w(std::max(i, j))}; }

int var_node(const Symbol& s) { return s.a(); }

} // namespace

Constraint factor_constraint(const WPoly& p, const CartanData& cd) {
    Constraint c;
    c.poly = p.monic();
    WPoly cur = c.poly;
    for (const auto& v : p.vars())
        for (AtomKind k : {AtomKind::Zero, AtomKind::Root1, AtomKind::Root2}) {
            const Atom a{k, var_node(v)};
            const WPoly d = a.poly(cd, p.vars());
            while (!cur.is_constant()) {
                auto q = divide_exact(cur, d);
                if (!q) break;
                cur = *q;
                c.atoms.push_back(a);
            }
        }
    std::sort(c.atoms.begin(), c.atoms.end());
    c.rest = cur.monic();
    return c;
}

std::map<int, NCPoly> realize(const CartanData& cd, Variant v) {
    const int s = v == Variant::Standard ? 1 : -1;
    std::map<int, NCPoly> img;
    for (int n = 0; n < cd.size(); ++n) {
        NCPoly x;
        x.add_term(Monomial{Word{Letter::E(n)}, Monomial::kpow(n, s).k}, RationalFn::symbol(Symbol::c(n)));
        x.add_term(Monomial{Word{Letter::F(n)}, Monomial::kpow(n, s).k}, RationalFn::symbol(Symbol::cbar(n)));
        x.add_term(Monomial::kpow(n, 2 * s), RationalFn::symbol(Symbol::w(n)));
        img[n] = x;
    }
    return img;
}

std::vector<Constraint> reference_constraints(const CartanData& cd, int i, int j) {
    const auto vars = pair_vars(i, j);
    std::vector<Constraint> out;
    for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
        std::vector<Atom> atoms;
        if (cd.a[x][y] == -1) atoms = {{AtomKind::Zero, y}, {AtomKind::Root1, x}};
        else if (cd.a[x][y] == -3) atoms = {{AtomKind::Zero, y}, {AtomKind::Root1, x}, {AtomKind::Root2, x}};
        else continue;
        WPoly p = WPoly::constant(vars, RationalFn(1));
        for (auto& a : atoms) p = p * a.poly(cd, vars);
        out.push_back(factor_constraint(p, cd));
    }
    return out;
}

std::map<Symbol, RationalFn> reference_rho(const CartanData& cd, int i, int j) {
    std::map<Symbol, RationalFn> out;
    const auto Q = [](int e) { return RationalFn::q_power(e); };
    const auto cc = [](int n) { return RationalFn::symbol(Symbol::c(n)) * RationalFn::symbol(Symbol::cbar(n)); };
    for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
        const int a = cd.a[x][y], b = cd.a[y][x];
        if (a == 0) continue;
        const int dx = cd.d[x];
        if (a == -1) out[Symbol::rho(0, x, y)] = cc(x);
        else if (a == -2 && b == -2) out[Symbol::rho(0, x, y)] = cc(x) * (Q(1) + Q(-1)).pow(2);
        else if (a == -2) out[Symbol::rho(0, x, y)] = cc(x) * (Q(dx) + Q(-dx)).pow(2);
        else if (a == -3) {
            out[Symbol::rho(0, x, y)] = cc(x) * (Q(4) + RationalFn(2) * Q(2) + RationalFn(4) + RationalFn(2) * Q(-2) + Q(-4));
            out[Symbol::rho(1, x, y)] = -(cc(x) * cc(x)) * (Q(4) + RationalFn(1) + Q(-4)).pow(2);
        } else if (a == -4) {
            out[Symbol::rho(0, x, y)] = cc(x) * (Q(1) + Q(-1)).pow(2) * (Q(4) + RationalFn(3) + Q(-4));
            out[Symbol::rho(1, x, y)] = -(cc(x) * cc(x)) * (Q(1) + Q(-1)).pow(4) * (Q(2) + Q(-2)).pow(4);
        }
    }
    return out;
}

std::vector<std::vector<Atom>> reference_branches(const std::vector<Constraint>& cs) {
    std::set<std::vector<Atom>> out;
    std::vector<Atom> cur;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cs.size()) {
            std::vector<Atom> b = cur;
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
            for (std::size_t x = 0; x + 1 < b.size(); ++x)
                if (b[x].node == b[x + 1].node) return; // two different atoms on one node: empty
            out.insert(b);
            return;
        }
        std::set<Atom> seen(cs[k].atoms.begin(), cs[k].atoms.end());
        for (const Atom& a : seen) {
            cur.push_back(a);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return {out.begin(), out.end()};
}

bool vanishes_on_branch(const std::vector<WPoly>& polys, const std::vector<Atom>& branch, const CartanData& cd) {
    if (polys.empty()) return true;
    std::vector<WPoly> g;
    for (auto& a : branch) g.push_back(a.poly(cd, polys.front().vars()).monic());
    for (auto& p : polys)
        if (!reduce(p, g).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Gates

GateStatus engine_gates(const RewriteSystem& rs) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, int>, GateStatus> cache;
    const CartanData& cd = rs.cartan();
    const int h = rs.hi(), l = rs.lo();
    const auto key = std::make_tuple(cd.a[h][l], cd.a[l][h], cd.d[h], cd.d[l]);
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    GateStatus g;
    const CorpusReport corpus = ideal_corpus(rs, 50, 0x5eed);
    g.ideal_corpus = corpus.passed();
    g.corpus_instances = corpus.instances;
    g.overlap_degree = rs.longest_lhs() + 2;
    const OverlapReport ov = overlap_check(rs, g.overlap_degree);
    g.overlaps = ov.all_joinable();
    g.overlap_count = ov.entries.size();
    std::lock_guard lock(mu);
    cache.emplace(key, g);
    return g;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

RationalFn subst(const RationalFn& f, const std::map<Symbol, RationalFn>& m) { return substitute(f, m); }

/// Solves the rho unknowns from the w = 0 specialisation of the coefficients.
std::map<Symbol, RationalFn> solve_rho(const std::vector<RationalFn>& coeffs, const std::vector<Symbol>& rhos,
                                       int i, int j) {
    const std::map<Symbol, RationalFn> wzero{{Symbol::w(i), RationalFn(0)}, {Symbol::w(j), RationalFn(0)}};
    std::map<Symbol, RationalFn> all0;
    for (auto s : rhos) all0[s] = RationalFn(0);
    // rows: a_0 + sum a_k rho_k = 0
    std::vector<std::vector<RationalFn>> rows;
    for (const auto& f : coeffs) {
        const RationalFn f0 = subst(f, wzero);
        if (f0.is_zero()) continue;
        std::vector<RationalFn> row(rhos.size() + 1);
        row[0] = subst(f0, all0);
        for (std::size_t k = 0; k < rhos.size(); ++k) {
            auto one = all0, two = all0;
            one[rhos[k]] = RationalFn(1);
            two[rhos[k]] = RationalFn(2);
            row[k + 1] = subst(f0, one) - row[0];
            if (!(subst(f0, two) == row[0] + RationalFn(2) * row[k + 1]))
                throw std::logic_error("coefficient is not linear in " + rhos[k].name());
        }
        RationalFn lin = row[0];
        for (std::size_t k = 0; k < rhos.size(); ++k) lin += RationalFn::symbol(rhos[k]) * row[k + 1];
        if (!(lin == f0)) throw std::logic_error("rho symbols enter with total degree above one");
        rows.push_back(std::move(row));
    }
    // Gaussian elimination on the unknown columns
    const std::size_t n = rhos.size();
    std::vector<std::vector<RationalFn>> m = rows;
    std::vector<std::size_t> pivot_row(n, SIZE_MAX);
    std::size_t r = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = r;
        while (p < m.size() && m[p][col + 1].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const RationalFn inv = m[r][col + 1].inverse();
        for (auto& x : m[r]) x *= inv;
        for (std::size_t q = 0; q < m.size(); ++q) {
            if (q == r || m[q][col + 1].is_zero()) continue;
            const RationalFn f = m[q][col + 1];
            for (std::size_t c = 0; c <= n; ++c) m[q][c] -= f * m[r][c];
        }
        pivot_row[col] = r++;
    }
    std::map<Symbol, RationalFn> sol;
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_row[col] == SIZE_MAX) throw RhoInconsistent("structure constant " + rhos[col].name() + " is not determined");
        sol[rhos[col]] = -m[pivot_row[col]][0];
    }
    for (std::size_t q = r; q < m.size(); ++q)
        if (!m[q][0].is_zero()) throw RhoInconsistent("inconsistent linear system for the structure constants");
    return sol;
}

bool nonzero_at_random_points(const std::vector<WPoly>& polys, int i, int j, std::uint64_t seed) {
    if (polys.empty()) return false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (int trial = 0; trial < 5; ++trial) {
        auto rnd = [&] {
            mpq_class v(num(rng), den(rng));
            v.canonicalize();
            if (v == 0) v = mpq_class(1, 3);
            return v;
        };
        Assignment at;
        at.t = Number(mpq_class(rnd() + 2));
        for (int n : {i, j}) {
            at.values[Symbol::c(n)] = rnd();
            at.values[Symbol::cbar(n)] = rnd();
            at.values[Symbol::w(n)] = rnd();
        }
        for (const auto& p : polys) {
            try {
                const Number v = evaluate(p.to_rational(), at);
                if (std::get<mpq_class>(v) != 0) return true;
            } catch (const std::domain_error&) {
            }
        }
    }
    return false;
}

} // namespace

VerificationReport verify_pair(const CartanData& cd, int i, int j, Variant v) {
    if (i == j) throw std::invalid_argument("verify_pair needs two distinct nodes");
    VerificationReport rep;
    rep.algebra = cd.id;
    rep.i = i;
    rep.j = j;
    rep.variant = v;
    const RewriteSystem rs(cd, i, j);
    rep.gates = engine_gates(rs);
    rep.sufficiency_only = !rep.gates.passed();

    const auto all = realize(cd, v);
    const std::map<int, NCPoly> images{{i, all.at(i)}, {j, all.at(j)}};
    const auto vars = pair_vars(i, j);
    std::vector<WPoly> residual;
    for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
        const OnsagerRelation rel = build_relation(cd, x, y);
        const NCPoly reduced = normal_form(substitute(rel.element(), images, cd), rs, &rep.trace);
        std::vector<RationalFn> coeffs;
        for (auto& [m, c] : reduced.terms()) coeffs.push_back(c);
        std::map<Symbol, RationalFn> sol;
        if (!rel.rho_symbols.empty()) sol = solve_rho(coeffs, rel.rho_symbols, i, j);
        rep.rho.insert(sol.begin(), sol.end());
        for (auto& c : coeffs) {
            const RationalFn f = sol.empty() ? c : substitute(c, sol);
            if (f.is_zero()) continue;
            if (f.den().symbols().count(Symbol::w(i)) || f.den().symbols().count(Symbol::w(j)))
                throw std::logic_error("w-dependent denominator in a reduced coefficient");
            residual.push_back(WPoly::from_laurent(f.num(), vars).monic());
        }
    }
    // dedupe
    std::sort(residual.begin(), residual.end(), [](const WPoly& a, const WPoly& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
        return a.to_string() < b.to_string();
    });
    residual.erase(std::unique(residual.begin(), residual.end()), residual.end());
    rep.residual = residual;

    // greedy generating subset, then factor
    std::vector<WPoly> chosen, basis;
    for (const auto& p : residual)
        if (basis.empty() || !reduce(p, basis).is_zero()) {
            chosen.push_back(p);
            basis = groebner(chosen);
        }
    for (auto& p : chosen) rep.constraints.push_back(factor_constraint(p, cd));

    rep.reference = reference_constraints(cd, i, j);
    rep.reference_rho = reference_rho(cd, i, j);
    for (auto& [sym, val] : rep.reference_rho)
        if (rep.rho.count(sym) && rep.rho.at(sym) != val) rep.rho_mismatches.push_back(sym);
    std::vector<WPoly> ref_polys;
    for (auto& c : rep.reference) ref_polys.push_back(c.poly);
    const auto ref_basis = groebner(ref_polys);
    rep.implies_reference = std::all_of(ref_polys.begin(), ref_polys.end(), [&](auto& p) { return in_radical(p, basis); });
    rep.implied_by_reference =
        std::all_of(residual.begin(), residual.end(), [&](auto& p) { return in_radical(p, ref_basis); });
    rep.residual_zero = true;
    for (const auto& b : reference_branches(rep.reference))
        if (!vanishes_on_branch(residual, b, cd)) rep.residual_zero = false;
    rep.generic_nonzero = nonzero_at_random_points(residual, i, j, 0xC0FFEEULL + static_cast<unsigned>(i * 31 + j));
    return rep;
}

bool check_bar_symmetry(const VerificationReport& r1, const VerificationReport& r2) {
    if (r1.i != r2.i || r1.j != r2.j) return false;
    if (r1.rho != r2.rho) return false;
    const auto b1 = groebner(r1.residual), b2 = groebner(r2.residual);
    for (auto& p : r1.residual)
        if (!in_radical(p, b2)) return false;
    for (auto& p : r2.residual)
        if (!in_radical(p, b1)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// 2x2 oracle

namespace {

using Mat2 = std::array<std::array<RationalFn, 2>, 2>;

Mat2 mat(RationalFn a, RationalFn b, RationalFn c, RationalFn d) { return {{{a, b}, {c, d}}}; }
Mat2 mmul(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) r[a][b] = x[a][0] * y[0][b] + x[a][1] * y[1][b];
    return r;
}
Mat2 madd(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) r[a][b] = x[a][b] + y[a][b];
    return r;
}
Mat2 mscale(const RationalFn& s, const Mat2& x) {
    Mat2 r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) r[a][b] = s * x[a][b];
    return r;
}
Mat2 mpow(const Mat2& x, int n) {
    Mat2 r = mat(1, 0, 0, 1);
    for (int k = 0; k < n; ++k) r = mmul(r, x);
    return r;
}
bool mzero(const Mat2& x) {
    for (auto& row : x)
        for (auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

/// sum_r (-1)^r [3;r] X^{3-r} Y X^r
Mat2 serre3(const Mat2& x, const Mat2& y) {
    Mat2 r = mat(0, 0, 0, 0);
    for (int k = 0; k <= 3; ++k)
        r = madd(r, mscale(qbinom(3, k, 1) * RationalFn(k % 2 ? -1 : 1), mmul(mmul(mpow(x, 3 - k), y), mpow(x, k))));
    return r;
}

} // namespace

OracleResult matrix_oracle_sl2() {
    OracleResult res;
    const RationalFn t = RationalFn::t_power(1), ti = RationalFn::t_power(-1);
    const RationalFn z = RationalFn::symbol(Symbol::z()), zi = RationalFn(1) / z;
    std::map<int, Mat2> E, F, K, Kinv;
    E[1] = mat(0, 1, 0, 0);
    F[1] = mat(0, 0, 1, 0);
    K[1] = mat(t, 0, 0, ti);
    E[0] = mat(0, 0, z, 0);
    F[0] = mat(0, zi, 0, 0);
    K[0] = mat(ti, 0, 0, t);
    Kinv[1] = K[0];
    Kinv[0] = K[1];
    const int a[2][2] = {{2, -2}, {-2, 2}};
    auto fail = [&](std::string what) {
        if (res.violated.empty()) res.violated = std::move(what);
    };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const std::string ij = std::to_string(i) + std::to_string(j);
            if (!(mmul(mmul(K[i], E[j]), Kinv[i]) == mscale(RationalFn::t_power(a[i][j]), E[j]))) fail("K" + ij + " E");
            if (!(mmul(mmul(K[i], F[j]), Kinv[i]) == mscale(RationalFn::t_power(-a[i][j]), F[j]))) fail("K" + ij + " F");
            Mat2 comm = madd(mmul(E[i], F[j]), mscale(RationalFn(-1), mmul(F[j], E[i])));
            if (i == j)
                comm = madd(comm, mscale(RationalFn(-1) / (RationalFn::t_power(2) - RationalFn::t_power(-2)),
                                         madd(mpow(K[i], 2), mscale(RationalFn(-1), mpow(Kinv[i], 2)))));
            if (!mzero(comm)) fail("[E" + std::to_string(i) + ",F" + std::to_string(j) + "]");
            if (i != j && !mzero(serre3(E[i], E[j]))) fail("serreE(" + ij + ")");
            if (i != j && !mzero(serre3(F[i], F[j]))) fail("serreF(" + ij + ")");
        }
    res.gate = res.violated.empty();
    if (!res.gate) return res;

    std::map<int, Mat2> A;
    for (int i = 0; i < 2; ++i)
        A[i] = madd(madd(mscale(RationalFn::symbol(Symbol::c(i)), mmul(E[i], K[i])),
                         mscale(RationalFn::symbol(Symbol::cbar(i)), mmul(F[i], K[i]))),
                    mscale(RationalFn::symbol(Symbol::w(i)), mpow(K[i], 2)));
    res.talg = true;
    res.perturbed_fails = true;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
        const RationalFn rho = RationalFn::symbol(Symbol::c(i)) * RationalFn::symbol(Symbol::cbar(i)) *
                               (RationalFn::q_power(1) + RationalFn::q_power(-1)).pow(2);
        const Mat2 comm = madd(mmul(A[i], A[j]), mscale(RationalFn(-1), mmul(A[j], A[i])));
        const Mat2 lhs = serre3(A[i], A[j]);
        if (!mzero(madd(lhs, mscale(-rho, comm)))) res.talg = false;
        if (mzero(madd(lhs, mscale(-(rho + RationalFn(1)), comm)))) res.perturbed_fails = false;
    }
    return res;
}

} // namespace qons
