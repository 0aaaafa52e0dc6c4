#include "qons/symbol.hpp"

#include <charconv>
#include <stdexcept>

namespace qons {

Symbol::Symbol(Kind k, int a, int b, int c) {
    if (a < 0 || a > 255 || b < 0 || b > 255 || c < 0 || c > 255)
        throw std::out_of_range("symbol index out of range");
    key_ = (static_cast<std::uint32_t>(k) << 24) | (static_cast<std::uint32_t>(a) << 16) |
           (static_cast<std::uint32_t>(b) << 8) | static_cast<std::uint32_t>(c);
}

std::string Symbol::name() const {
    switch (kind()) {
    case Kind::C: return "c" + std::to_string(a());
    case Kind::CBar: return "cb" + std::to_string(a());
    case Kind::W: return "w" + std::to_string(a());
    case Kind::Rho:
        return "rho" + std::to_string(c_field()) + "_" + std::to_string(a()) + "_" +
               std::to_string(b());
    case Kind::Z: return "z";
    case Kind::Aux: return "x" + std::to_string(a());
    }
    return "?";
}

std::string Symbol::latex() const {
    switch (kind()) {
    case Kind::C: return "c_{" + std::to_string(a()) + "}";
    case Kind::CBar: return "\\bar{c}_{" + std::to_string(a()) + "}";
    case Kind::W: return "w_{" + std::to_string(a()) + "}";
    case Kind::Rho:
        return "\\rho^{" + std::to_string(c_field()) + "}_{" + std::to_string(a()) + "," +
               std::to_string(b()) + "}";
    case Kind::Z: return "z";
    case Kind::Aux: return "x_{" + std::to_string(a()) + "}";
    }
    return "?";
}

namespace {

int parse_index(std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw std::invalid_argument("bad symbol index");
    return v;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

} // namespace

Symbol Symbol::parse(std::string_view s) {
    try {
        if (s == "z") return z();
        if (starts_with(s, "rho")) {
            auto rest = s.substr(3);
            auto u1 = rest.find('_');
            auto u2 = rest.find('_', u1 + 1);
            if (u1 == std::string_view::npos || u2 == std::string_view::npos)
                throw std::invalid_argument("bad rho");
            return rho(parse_index(rest.substr(0, u1)), parse_index(rest.substr(u1 + 1, u2 - u1 - 1)),
                       parse_index(rest.substr(u2 + 1)));
        }
        if (starts_with(s, "cb")) return cbar(parse_index(s.substr(2)));
        if (starts_with(s, "c")) return c(parse_index(s.substr(1)));
        if (starts_with(s, "w")) return w(parse_index(s.substr(1)));
        if (starts_with(s, "x")) return aux(parse_index(s.substr(1)));
    } catch (const std::out_of_range&) {
    }
    throw std::invalid_argument("unknown symbol name: " + std::string(s));
}

} // namespace qons
