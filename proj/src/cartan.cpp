#include "qons/cartan.hpp"

#include <cctype>
#include <numeric>
#include <regex>

namespace qons {

std::string AlgebraId::to_string() const {
    return std::string(1, series) + std::to_string(rank) + "^" + std::to_string(twist);
}

std::string AlgebraId::to_latex() const {
    return std::string(1, series) + "_{" + std::to_string(rank) + "}^{(" + std::to_string(twist) + ")}";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void inadmissible(const AlgebraId& id, const std::string& why) {
    throw InadmissibleAlgebra(id.series + std::string("_") + std::to_string(id.rank) + "^(" +
                              std::to_string(id.twist) + ") is not an admissible affine type: " + why);
}

} // namespace

void check_admissible(const AlgebraId& id) {
    const int r = id.rank;
    auto need = [&](int min, const char* family) {
        if (r < min)
            inadmissible(id, "rank below minimum " + std::to_string(min) + " (" + family + " requires n >= " +
                                 std::to_string(min) + ")");
    };
    switch (id.twist) {
    case 1:
        switch (id.series) {
        case 'a': need(1, "a_n^(1)"); return;
        case 'b': need(3, "b_n^(1)"); return;
        case 'c': need(2, "c_n^(1)"); return;
        case 'd': need(4, "d_n^(1)"); return;
        case 'e':
            if (r < 6 || r > 8) inadmissible(id, "e^(1) exists only for rank 6, 7, 8");
            return;
        case 'f':
            if (r != 4) inadmissible(id, "f^(1) exists only for rank 4");
            return;
        case 'g':
            if (r != 2) inadmissible(id, "g^(1) exists only for rank 2");
            return;
        }
        break;
    case 2:
        switch (id.series) {
        case 'a':
            if (r % 2 == 0) {
                need(2, "a_{2n}^(2)");
            } else if (r < 5) {
                inadmissible(id, "rank below minimum 5 (a_{2n-1}^(2) requires n >= 3)");
            }
            return;
        case 'd':
            if (r < 3) inadmissible(id, "rank below minimum 3 (d_{n+1}^(2) requires n >= 2)");
            return;
        case 'e':
            if (r != 6) inadmissible(id, "e^(2) exists only for rank 6");
            return;
        default: inadmissible(id, "no twisted affine algebra of this series with twist 2");
        }
    case 3:
        if (id.series == 'd' && r == 4) return;
        inadmissible(id, "twist 3 exists only for d_4^(3)");
    default: break;
    }
    inadmissible(id, "unknown series/twist combination");
}

AlgebraId parse_algebra_id(std::string_view raw) {
    static const std::regex re("([a-g])([0-9]{1,3})\\^([0-9])");
    const std::string s(trim(raw));
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw AlgebraSyntaxError("malformed algebra id '" + std::string(raw) +
                                 "': expected <series><rank>^<twist>, e.g. g2^1, a4^2, d4^3");
    AlgebraId id;
    id.series = m[1].str()[0];
    id.rank = std::stoi(m[2].str());
    id.twist = std::stoi(m[3].str());
    if (id.twist < 1 || id.twist > 3)
        throw AlgebraSyntaxError("twist must be 1, 2 or 3 in '" + std::string(raw) + "'");
    if (id.rank < 1) throw AlgebraSyntaxError("rank must be positive in '" + std::string(raw) + "'");
    check_admissible(id);
    return id;
}

namespace {

struct Builder {
    CartanData cd;
    explicit Builder(const AlgebraId& id, int nodes) {
        cd.id = id;
        cd.a.assign(nodes, std::vector<int>(nodes, 0));
        for (int k = 0; k < nodes; ++k) cd.a[k][k] = 2;
        cd.d.assign(nodes, 1);
        cd.marks.assign(nodes, 1);
    }
    void link(int i, int j, int aij = -1, int aji = -1) {
        cd.a[i][j] = aij;
        cd.a[j][i] = aji;
    }
    void labels(int node, int d, int mark) {
        cd.d[node] = d;
        cd.marks[node] = mark;
    }
};

void validate(const CartanData& cd) {
    const int n = cd.size();
    int g = 0;
    for (int i = 0; i < n; ++i) {
        g = std::gcd(g, cd.d[i]);
        if (cd.a[i][i] != 2) throw std::logic_error("diagonal entry differs from 2");
        long row = 0;
        for (int j = 0; j < n; ++j) {
            row += static_cast<long>(cd.a[i][j]) * cd.marks[j];
            if (cd.d[i] * cd.a[i][j] != cd.d[j] * cd.a[j][i]) throw std::logic_error("d_i a_ij not symmetric");
            if (i != j && (cd.a[i][j] > 0 || cd.a[i][j] < -4)) throw std::logic_error("bad off-diagonal entry");
        }
        if (row != 0) throw std::logic_error("marks are not a null vector of " + cd.id.to_string());
    }
    if (g != 1) throw std::logic_error("symmetrizers are not coprime");
}

} // namespace

CartanData build(const AlgebraId& id) {
    check_admissible(id);
    const int n = id.rank;
    auto key = std::string(1, id.series) + std::to_string(id.twist);

    if (key == "a1") {
        Builder b(id, n + 1);
        if (n == 1) {
            b.link(0, 1, -2, -2);
        } else {
            for (int k = 0; k < n; ++k) b.link(k, k + 1);
            b.link(n, 0);
        }
        validate(b.cd);
        return b.cd;
    }
    if (key == "b1") {
        Builder b(id, n + 1);
        b.link(0, 2);
        b.link(1, 2);
        for (int k = 2; k < n - 1; ++k) b.link(k, k + 1);
        b.link(n - 1, n, -1, -2);
        for (int k = 0; k < n; ++k) b.labels(k, 2, k < 2 ? 1 : 2);
        b.labels(n, 1, 2);
        validate(b.cd);
        return b.cd;
    }
    if (key == "c1") {
        Builder b(id, n + 1);
        b.link(0, 1, -1, -2);
        for (int k = 1; k < n - 1; ++k) b.link(k, k + 1);
        b.link(n - 1, n, -2, -1);
        b.labels(0, 2, 1);
        for (int k = 1; k < n; ++k) b.labels(k, 1, 2);
        b.labels(n, 2, 1);
        validate(b.cd);
        return b.cd;
    }
    if (key == "d1") {
        Builder b(id, n + 1);
        b.link(0, 2);
        b.link(1, 2);
        for (int k = 2; k < n - 2; ++k) b.link(k, k + 1);
        b.link(n - 2, n - 1);
        b.link(n - 2, n);
        for (int k = 2; k <= n - 2; ++k) b.labels(k, 1, 2);
        validate(b.cd);
        return b.cd;
    }
    if (key == "e1") {
        Builder b(id, n + 1);
        if (n == 6) {
            for (int k = 1; k < 5; ++k) b.link(k, k + 1);
            b.link(3, 6);
            b.link(0, 6);
            const int m[] = {1, 1, 2, 3, 2, 1, 2};
            for (int k = 0; k <= 6; ++k) b.labels(k, 1, m[k]);
        } else if (n == 7) {
            for (int k = 0; k < 6; ++k) b.link(k, k + 1);
            b.link(3, 7);
            const int m[] = {1, 2, 3, 4, 3, 2, 1, 2};
            for (int k = 0; k <= 7; ++k) b.labels(k, 1, m[k]);
        } else {
            for (int k = 1; k < 7; ++k) b.link(k, k + 1);
            b.link(7, 0);
            b.link(3, 8);
            const int m[] = {1, 2, 4, 6, 5, 4, 3, 2, 3};
            for (int k = 0; k <= 8; ++k) b.labels(k, 1, m[k]);
        }
        validate(b.cd);
        return b.cd;
    }
    if (key == "f1") {
        Builder b(id, 5);
        b.link(0, 1);
        b.link(1, 2);
        b.link(2, 3, -1, -2);
        b.link(3, 4);
        const int d[] = {2, 2, 2, 1, 1}, m[] = {1, 2, 3, 4, 2};
        for (int k = 0; k < 5; ++k) b.labels(k, d[k], m[k]);
        validate(b.cd);
        return b.cd;
    }
    if (key == "g1") {
        Builder b(id, 3);
        b.link(0, 1);
        b.link(1, 2, -1, -3);
        const int d[] = {3, 3, 1}, m[] = {1, 2, 3};
        for (int k = 0; k < 3; ++k) b.labels(k, d[k], m[k]);
        validate(b.cd);
        return b.cd;
    }
    if (key == "a2" && n == 2) {
        Builder b(id, 2);
        b.link(0, 1, -1, -4);
        b.labels(0, 4, 1);
        b.labels(1, 1, 2);
        validate(b.cd);
        return b.cd;
    }
    if (key == "a2" && n % 2 == 0) {
        const int m = n / 2;
        Builder b(id, m + 1);
        b.link(0, 1, -2, -1);
        for (int k = 1; k < m - 1; ++k) b.link(k, k + 1);
        b.link(m - 1, m, -2, -1);
        b.labels(0, 1, 2);
        for (int k = 1; k < m; ++k) b.labels(k, 2, 2);
        b.labels(m, 4, 1);
        validate(b.cd);
        return b.cd;
    }
    if (key == "a2") {
        const int m = (n + 1) / 2;
        Builder b(id, m + 1);
        b.link(0, 2);
        b.link(1, 2);
        for (int k = 2; k < m - 1; ++k) b.link(k, k + 1);
        b.link(m - 1, m, -2, -1);
        for (int k = 2; k < m; ++k) b.labels(k, 1, 2);
        b.labels(m, 2, 1);
        validate(b.cd);
        return b.cd;
    }
    if (key == "d2") {
        const int m = n - 1;
        Builder b(id, m + 1);
        b.link(0, 1, -2, -1);
        for (int k = 1; k < m - 1; ++k) b.link(k, k + 1);
        b.link(m - 1, m, -1, -2);
        for (int k = 1; k < m; ++k) b.labels(k, 2, 1);
        validate(b.cd);
        return b.cd;
    }
    if (key == "e2") {
        Builder b(id, 5);
        b.link(0, 1);
        b.link(1, 2);
        b.link(2, 3, -2, -1);
        b.link(3, 4);
        const int d[] = {1, 1, 1, 2, 2}, m[] = {1, 2, 3, 2, 1};
        for (int k = 0; k < 5; ++k) b.labels(k, d[k], m[k]);
        validate(b.cd);
        return b.cd;
    }
    if (key == "d3") {
        Builder b(id, 3);
        b.link(0, 1);
        b.link(1, 2, -3, -1);
        const int d[] = {1, 1, 3}, m[] = {1, 2, 1};
        for (int k = 0; k < 3; ++k) b.labels(k, d[k], m[k]);
        validate(b.cd);
        return b.cd;
    }
    throw InadmissibleAlgebra("no builder for " + id.to_string());
}

std::string to_string(LinkKind k) {
    switch (k) {
    case LinkKind::Simple: return "Simple";
    case LinkKind::Double: return "Double";
    case LinkKind::Triple: return "Triple";
    case LinkKind::Quadruple: return "Quadruple";
    case LinkKind::DoubleBoth: return "DoubleBoth";
    }
    return "?";
}

LinkClass classify_link(const CartanData& cd, int i, int j) {
    if (i > j) std::swap(i, j);
    const int aij = cd.a[i][j], aji = cd.a[j][i];
    LinkClass l;
    l.i = i;
    l.j = j;
    if (aij == -1 && aji == -1) {
        l.kind = LinkKind::Simple;
        return l;
    }
    if (aij == -2 && aji == -2) {
        l.kind = LinkKind::DoubleBoth;
        return l;
    }
    const int other = aij == -1 ? aji : aij;
    if ((aij == -1) == (aji == -1) || other > -2 || other < -4)
        throw std::logic_error("unexpected Cartan pattern {" + std::to_string(aij) + "," + std::to_string(aji) + "}");
    l.kind = other == -2 ? LinkKind::Double : other == -3 ? LinkKind::Triple : LinkKind::Quadruple;
    l.long_node = aij == -1 ? i : j;
    return l;
}

std::vector<LinkClass> links(const CartanData& cd) {
    std::vector<LinkClass> out;
    for (int i = 0; i < cd.size(); ++i)
        for (int j = i + 1; j < cd.size(); ++j)
            if (cd.a[i][j] != 0) out.push_back(classify_link(cd, i, j));
    return out;
}

std::vector<AlgebraId> admissible_ids(int max_rank) {
    std::vector<AlgebraId> out;
    for (char s : std::string("abcdefg"))
        for (int t = 1; t <= 3; ++t)
            for (int r = 1; r <= max_rank; ++r) {
                AlgebraId id{s, r, t};
                try {
                    check_admissible(id);
                    out.push_back(id);
                } catch (const InadmissibleAlgebra&) {
                }
            }
    return out;
}

} // namespace qons
