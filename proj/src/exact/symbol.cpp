#include "ppj/exact/symbol.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ppj {

namespace {

// Paper alphabet followed by the auxiliary symbols used for generic
// operators (a11..a33), perturbations (eps) and property tests (x, y, z).
constexpr std::array<std::string_view, 25> kAlphabet = {
    "c",     "L",     "alpha",  "beta",   "gamma",  "delta", "mu",
    "lambda", "nu",   "kappa1", "kappa2", "kappa3", "t",     "u",
    "s",     "eps",   "x",      "y",      "z",      "a11",   "a12",
    "a13",   "a22",   "a23",    "a33"};

constexpr std::array<std::string_view, 4> kConstants = {"c", "t", "u", "s"};

}  // namespace

namespace detail {

struct SymbolEntry {
    std::string name;
    int base_index = 0;
    std::vector<Direction> dirs;  // innermost derivative first
    const SymbolEntry* root = nullptr;
};

}  // namespace detail

namespace {

using detail::SymbolEntry;

class SymbolTable {
public:
    SymbolTable()
    {
        for (std::size_t i = 0; i < kAlphabet.size(); ++i) {
            auto& e = entries_.emplace_back();
            e.name = std::string(kAlphabet[i]);
            e.base_index = static_cast<int>(i);
            e.root = &e;
            by_name_.emplace(e.name, &e);
        }
    }

    const SymbolEntry* find(std::string_view name)
    {
        std::lock_guard lock(mutex_);
        auto it = by_name_.find(std::string(name));
        return it == by_name_.end() ? nullptr : it->second;
    }

    const SymbolEntry* jet(const SymbolEntry* of, Direction d)
    {
        std::string name = "D_";
        name += direction_name(d);
        name += "(";
        name += of->name;
        name += ")";
        std::lock_guard lock(mutex_);
        if (auto it = by_name_.find(name); it != by_name_.end()) {
            return it->second;
        }
        auto& e = entries_.emplace_back();
        e.name = std::move(name);
        e.base_index = of->base_index;
        e.dirs = of->dirs;
        e.dirs.push_back(d);
        e.root = of->root;
        by_name_.emplace(e.name, &e);
        return &e;
    }

private:
    std::mutex mutex_;
    std::deque<SymbolEntry> entries_;
    std::map<std::string, const SymbolEntry*, std::less<>> by_name_;
};

SymbolTable& table()
{
    static SymbolTable t;
    return t;
}

}  // namespace

std::string_view direction_name(Direction d)
{
    switch (d) {
    case Direction::X1: return "U";
    case Direction::X2: return "phiU";
    case Direction::X3: return "xi";
    }
    return "?";
}

std::optional<Direction> parse_direction(std::string_view name)
{
    if (name == "U" || name == "e" || name == "X1") return Direction::X1;
    if (name == "phiU" || name == "phie" || name == "X2") return Direction::X2;
    if (name == "xi" || name == "X3") return Direction::X3;
    return std::nullopt;
}

Symbol Symbol::base(std::string_view name)
{
    const auto* e = table().find(name);
    if (e == nullptr || !e->dirs.empty()) {
        throw std::invalid_argument("unknown symbol '" + std::string(name) + "'");
    }
    return Symbol(e);
}

std::optional<Symbol> Symbol::lookup(std::string_view full)
{
    if (full.starts_with("D_") && full.ends_with(")")) {
        auto open = full.find('(');
        if (open == std::string_view::npos) return std::nullopt;
        auto dir = parse_direction(full.substr(2, open - 2));
        if (!dir) return std::nullopt;
        auto inner = lookup(full.substr(open + 1, full.size() - open - 2));
        if (!inner) return std::nullopt;
        return inner->derivative(*dir);
    }
    const auto* e = table().find(full);
    if (e == nullptr || !e->dirs.empty()) return std::nullopt;
    return Symbol(e);
}

std::span<const std::string_view> Symbol::alphabet() { return kAlphabet; }

Symbol Symbol::derivative(Direction d) const { return Symbol(table().jet(entry_, d)); }

const std::string& Symbol::name() const { return entry_->name; }

Symbol Symbol::root() const { return Symbol(entry_->root); }

std::span<const Direction> Symbol::directions() const { return entry_->dirs; }

bool Symbol::is_constant() const
{
    return entry_->dirs.empty() &&
           std::find(kConstants.begin(), kConstants.end(), entry_->name) != kConstants.end();
}

std::strong_ordering operator<=>(Symbol a, Symbol b)
{
    if (a.entry_ == b.entry_) return std::strong_ordering::equal;
    const auto& x = *a.entry_;
    const auto& y = *b.entry_;
    if (auto o = x.dirs.size() <=> y.dirs.size(); o != 0) return o;
    if (auto o = x.base_index <=> y.base_index; o != 0) return o;
    return std::lexicographical_compare_three_way(x.dirs.begin(), x.dirs.end(), y.dirs.begin(),
                                                  y.dirs.end());
}

}  // namespace ppj
