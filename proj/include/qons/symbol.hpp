#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qons {

/// A commuting parameter of the coefficient field.
///
/// The set of parameters is closed: per-node c_i, c̄_i, w_i, the structure
/// constants rho^k_{ij}, the spectral variable z of the evaluation
/// representation, and anonymous auxiliaries used by tests.  The ordering is
/// intrinsic to the packed key, so canonical term order never depends on the
/// order in which symbols were first touched.
class Symbol {
public:
    enum class Kind : std::uint8_t { C = 0, CBar = 1, W = 2, Rho = 3, Z = 4, Aux = 5 };

    static Symbol c(int node) { return Symbol(Kind::C, node, 0, 0); }
    static Symbol cbar(int node) { return Symbol(Kind::CBar, node, 0, 0); }
    static Symbol w(int node) { return Symbol(Kind::W, node, 0, 0); }
    static Symbol rho(int k, int i, int j) { return Symbol(Kind::Rho, i, j, k); }
    static Symbol z() { return Symbol(Kind::Z, 0, 0, 0); }
    static Symbol aux(int index) { return Symbol(Kind::Aux, index, 0, 0); }

    static Symbol from_key(std::uint32_t key) { Symbol s; s.key_ = key; return s; }

    Kind kind() const { return static_cast<Kind>(key_ >> 24); }
    /// Node for C/CBar/W, first pair index for Rho, index for Aux.
    int a() const { return static_cast<int>((key_ >> 16) & 0xff); }
    /// Second pair index for Rho.
    int b() const { return static_cast<int>((key_ >> 8) & 0xff); }
    /// k for Rho.
    int c_field() const { return static_cast<int>(key_ & 0xff); }
    std::uint32_t key() const { return key_; }

    /// Plain-text name: c0, cb0, w0, rho0_1_2 (rho^0_{12}), z, x3.
    std::string name() const;
    /// LaTeX name: c_{0}, \bar{c}_{0}, w_{0}, \rho^{0}_{12}, z, x_{3}.
    std::string latex() const;
    /// Inverse of name(); throws std::invalid_argument on unknown names.
    static Symbol parse(std::string_view s);

    auto operator<=>(const Symbol&) const = default;

private:
    Symbol() = default;
    Symbol(Kind k, int a, int b, int c);
    std::uint32_t key_ = 0;
};

} // namespace qons
