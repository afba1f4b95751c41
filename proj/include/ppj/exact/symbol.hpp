#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ppj {

/// Frame directions. X1 is U (or e), X2 is phiU (or phie), X3 is xi.
enum class Direction : std::uint8_t { X1 = 0, X2 = 1, X3 = 2 };

/// Canonical jet spelling of a direction: "U", "phiU", "xi".
std::string_view direction_name(Direction d);

/// Accepts "U", "phiU", "xi" and the Hopf aliases "e", "phie", "X1".."X3".
std::optional<Direction> parse_direction(std::string_view name);

namespace detail {
struct SymbolEntry;
}

/// Interned symbol: a base name from the closed alphabet, or a jet
/// D_{d_n}(...D_{d_1}(base)) produced by formal differentiation.
///
/// Symbols compare by a deterministic ordering key: base symbols first in
/// alphabet order, then jets by (order, base, directions).
class Symbol {
public:
    /// Throws std::invalid_argument if `name` is not in the base alphabet.
    static Symbol base(std::string_view name);

    /// Resolves a full printed name such as "alpha" or "D_phiU(D_xi(beta))".
    static std::optional<Symbol> lookup(std::string_view full_name);

    /// Base alphabet in canonical order.
    static std::span<const std::string_view> alphabet();

    /// The jet D_d(this). Only the derive layer should need this.
    Symbol derivative(Direction d) const;

    const std::string& name() const;
    Symbol root() const;
    std::span<const Direction> directions() const;
    bool is_jet() const { return !directions().empty(); }

    /// Constants have zero directional derivative: c and the catalog parameters.
    bool is_constant() const;

    friend bool operator==(Symbol a, Symbol b) { return a.entry_ == b.entry_; }
    friend std::strong_ordering operator<=>(Symbol a, Symbol b);

private:
    explicit Symbol(const detail::SymbolEntry* e) : entry_(e) {}
    const detail::SymbolEntry* entry_;
};

}  // namespace ppj

template <>
struct std::hash<ppj::Symbol> {
    std::size_t operator()(ppj::Symbol s) const noexcept
    {
        return std::hash<std::string>{}(s.name());
    }
};
