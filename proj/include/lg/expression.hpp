#pragma once

#include <vector>

#include "lg/connector.hpp"

namespace lg {

// Formula tree for one word definition. `()` is Kind::Empty; `&` and `or`
// nodes carry at least one child once built. Optional braces `{E}` are
// desugared to `(E or ())` at parse time.
struct Expr {
    enum class Kind : uint8_t { Empty, Leaf, And, Or };

    Kind kind = Kind::Empty;
    Connector leaf;               // Kind::Leaf only
    std::vector<Expr> children;   // Kind::And / Kind::Or

    static Expr empty() { return Expr{}; }
    static Expr make_leaf(Connector c) { return Expr{Kind::Leaf, c, {}}; }
    static Expr make_and(std::vector<Expr> cs) { return Expr{Kind::And, {}, std::move(cs)}; }
    static Expr make_or(std::vector<Expr> cs) { return Expr{Kind::Or, {}, std::move(cs)}; }

    bool operator==(const Expr& other) const;
};

// One linking alternative: ordered connector-name lists, both stored
// nearest-word-first.
struct Disjunct {
    std::vector<ConnectorName> left;
    std::vector<ConnectorName> right;

    friend bool operator==(const Disjunct& a, const Disjunct& b) = default;
    friend auto operator<=>(const Disjunct& a, const Disjunct& b) = default;

    std::string str() const;
};

// Expands a formula into its disjunct list: `or` is exclusive choice, `&`
// forms the cross product with earlier operands' connectors nearer to the
// word. Left-to-right traversal order, duplicates removed.
std::vector<Disjunct> expand_disjuncts(const Expr& tree);

}  // namespace lg
