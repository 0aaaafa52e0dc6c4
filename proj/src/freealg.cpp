#include "qons/freealg.hpp"

#include <stdexcept>

namespace qons {

std::string Letter::to_string() const {
    const char c = kind == LetterKind::E ? 'E' : kind == LetterKind::F ? 'F' : 'A';
    return c + std::to_string(node);
}

std::string Letter::to_latex() const {
    const char c = kind == LetterKind::E ? 'e' : kind == LetterKind::F ? 'f' : 'A';
    return std::string(1, c) + "_{" + std::to_string(node) + "}";
}

void trim_kexp(KExp& k) {
    while (!k.empty() && k.back() == 0) k.pop_back();
}

int kexp_at(const KExp& k, int node) { return node < static_cast<int>(k.size()) ? k[node] : 0; }

Monomial Monomial::kpow(int node, int e) {
    Monomial m;
    if (e != 0) {
        m.k.assign(node + 1, 0);
        m.k[node] = e;
    }
    return m;
}

bool Monomial::has_A() const {
    for (auto l : word)
        if (l.kind == LetterKind::A) return true;
    return false;
}

bool Monomial::has_EF() const {
    for (auto l : word)
        if (l.kind != LetterKind::A) return true;
    return false;
}

std::string Monomial::to_string() const {
    std::string s;
    for (auto l : word) {
        if (!s.empty()) s += ' ';
        s += l.to_string();
    }
    for (std::size_t a = 0; a < k.size(); ++a) {
        if (k[a] == 0) continue;
        if (!s.empty()) s += ' ';
        s += "K" + std::to_string(a);
        if (k[a] != 1) s += "^" + std::to_string(k[a]);
    }
    return s.empty() ? "1" : s;
}

std::string Monomial::to_latex() const {
    std::string s;
    for (auto l : word) s += l.to_latex();
    for (std::size_t a = 0; a < k.size(); ++a) {
        if (k[a] == 0) continue;
        s += "K_{" + std::to_string(a) + "}";
        if (k[a] != 1) s += "^{" + std::to_string(k[a]) + "}";
    }
    return s.empty() ? "1" : s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.word != b.word) return std::lexicographical_compare(a.word.begin(), a.word.end(), b.word.begin(), b.word.end());
    return std::lexicographical_compare(a.k.begin(), a.k.end(), b.k.begin(), b.k.end());
}

int weight_shift(const KExp& k, const Word& w, const CartanData& cd) {
    if (k.empty() || w.empty()) return 0;
    int shift = 0;
    for (std::size_t a = 0; a < k.size(); ++a) {
        if (k[a] == 0) continue;
        int s = 0;
        for (auto l : w) {
            if (l.kind == LetterKind::A)
                throw std::invalid_argument("A-letters carry no K-action: cannot move K past " + l.to_string());
            s += (l.kind == LetterKind::E ? 1 : -1) * cd.a[a][l.node];
        }
        shift += k[a] * cd.d[a] * s;
    }
    return shift;
}

std::pair<Monomial, int> multiply(const Monomial& x, const Monomial& y, const CartanData& cd) {
    if ((x.has_A() && (y.has_EF() || !y.k.empty())) || (y.has_A() && (x.has_EF() || !x.k.empty())))
        throw std::invalid_argument("cannot mix A-letters with E/F letters or K-exponents in one monomial");
    Monomial r;
    r.word.reserve(x.word.size() + y.word.size());
    r.word.insert(r.word.end(), x.word.begin(), x.word.end());
    r.word.insert(r.word.end(), y.word.begin(), y.word.end());
    const int shift = weight_shift(x.k, y.word, cd);
    r.k = x.k;
    if (y.k.size() > r.k.size()) r.k.resize(y.k.size(), 0);
    for (std::size_t a = 0; a < y.k.size(); ++a) r.k[a] += y.k[a];
    trim_kexp(r.k);
    return {std::move(r), shift};
}

// ---------------------------------------------------------------------------

NCPoly::NCPoly(const Monomial& m, RationalFn c) {
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

RationalFn NCPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RationalFn() : it->second;
}

void NCPoly::add_term(const Monomial& m, const RationalFn& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const RationalFn& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

namespace {

std::string coef_prefix(const RationalFn& c, bool first, const std::string& mono, bool latex) {
    std::string body = latex ? c.to_latex() : c.to_string();
    std::string sep = first ? "" : " + ";
    if (mono == "1") return sep + (c.is_polynomial() && c.num().size() == 1 ? body : "(" + body + ")");
    if (c.is_one()) return sep + mono;
    if (c == RationalFn(-1)) return (first ? "-" : " - ") + mono;
    return sep + "(" + body + ")" + (latex ? " " : "*") + mono;
}

} // namespace

std::string NCPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : terms_) {
        s += coef_prefix(c, first, m.to_string(), false);
        first = false;
    }
    return s;
}

std::string NCPoly::to_latex() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : terms_) {
        s += coef_prefix(c, first, m.to_latex(), true);
        first = false;
    }
    return s;
}

NCPoly multiply(const NCPoly& x, const NCPoly& y, const CartanData& cd) {
    NCPoly r;
    for (auto& [mx, cx] : x.terms())
        for (auto& [my, cy] : y.terms()) {
            auto [m, shift] = multiply(mx, my, cd);
            RationalFn c = cx * cy;
            c.mul_t_power(shift);
            r.add_term(m, c);
        }
    return r;
}

NCPoly power(const NCPoly& x, int n, const CartanData& cd) {
    if (n < 0) throw std::invalid_argument("negative power of a noncommutative polynomial");
    NCPoly r = NCPoly::scalar(1);
    for (int k = 0; k < n; ++k) r = multiply(r, x, cd);
    return r;
}

NCPoly substitute(const NCPoly& p, const std::map<int, NCPoly>& images, const CartanData& cd) {
    NCPoly r;
    for (auto& [m, c] : p.terms()) {
        if (!m.k.empty() || m.has_EF()) throw std::invalid_argument("substitute expects an A-polynomial");
        NCPoly prod = NCPoly::scalar(c);
        for (auto l : m.word) {
            auto it = images.find(l.node);
            if (it == images.end()) throw std::invalid_argument("missing image for A" + std::to_string(l.node));
            prod = multiply(prod, it->second, cd);
        }
        r += prod;
    }
    return r;
}

std::size_t substitution_raw_terms(const NCPoly& p, const std::map<int, NCPoly>& images) {
    std::size_t total = 0;
    for (auto& [m, c] : p.terms()) {
        std::size_t n = 1;
        for (auto l : m.word) {
            auto it = images.find(l.node);
            if (it == images.end()) throw std::invalid_argument("missing image for A" + std::to_string(l.node));
            n *= it->second.size();
        }
        total += n;
    }
    return total;
}

// ---------------------------------------------------------------------------

bool TensorPoly::KeyOrder::operator()(const Key& a, const Key& b) const {
    MonomialOrder o;
    if (o(a.second, b.second)) return true;
    if (o(b.second, a.second)) return false;
    return o(a.first, b.first);
}

TensorPoly TensorPoly::pure(const NCPoly& left, const NCPoly& right) {
    TensorPoly r;
    for (auto& [ml, cl] : left.terms())
        for (auto& [mr, cr] : right.terms()) r.add_term(ml, mr, cl * cr);
    return r;
}

void TensorPoly::add_term(const Monomial& l, const Monomial& r, const RationalFn& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{l, r}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    for (auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
    for (auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

TensorPoly& TensorPoly::operator*=(const RationalFn& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, x] : terms_) x *= c;
    return *this;
}

std::string TensorPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [k, c] : terms_) {
        s += coef_prefix(c, first, "[" + k.first.to_string() + " (x) " + k.second.to_string() + "]", false);
        first = false;
    }
    return s;
}

TensorPoly tensor_multiply(const TensorPoly& x, const TensorPoly& y, const CartanData& cd) {
    TensorPoly r;
    for (auto& [kx, cx] : x.terms())
        for (auto& [ky, cy] : y.terms()) {
            auto [left, shift] = multiply(kx.first, ky.first, cd);
            auto [right, rshift] = multiply(kx.second, ky.second, cd);
            RationalFn c = cx * cy;
            c.mul_t_power(shift + rshift);
            r.add_term(left, right, c);
        }
    return r;
}

} // namespace qons
