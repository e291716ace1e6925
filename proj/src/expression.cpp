#include "lg/expression.hpp"

#include <set>

namespace lg {

bool Expr::operator==(const Expr& other) const {
    if (kind != other.kind) return false;
    if (kind == Kind::Leaf) return leaf == other.leaf;
    return children == other.children;
}

std::string Disjunct::str() const {
    std::string s = "((";
    for (size_t i = 0; i < left.size(); ++i) {
        if (i) s += ',';
        s += left[i].str();
    }
    s += ")(";
    for (size_t i = 0; i < right.size(); ++i) {
        if (i) s += ',';
        s += right[i].str();
    }
    s += "))";
    return s;
}

namespace {

std::vector<Disjunct> expand_raw(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Empty:
            return {Disjunct{}};
        case Expr::Kind::Leaf: {
            Disjunct d;
            if (e.leaf.dir == Direction::Left)
                d.left.push_back(e.leaf.name);
            else
                d.right.push_back(e.leaf.name);
            return {d};
        }
        case Expr::Kind::Or: {
            std::vector<Disjunct> out;
            for (const Expr& c : e.children) {
                auto sub = expand_raw(c);
                out.insert(out.end(), sub.begin(), sub.end());
            }
            return out;
        }
        case Expr::Kind::And: {
            std::vector<Disjunct> out{Disjunct{}};
            for (const Expr& c : e.children) {
                auto sub = expand_raw(c);
                std::vector<Disjunct> next;
                next.reserve(out.size() * sub.size());
                // earlier operands' connectors sit nearer to the word
                for (const Disjunct& a : out)
                    for (const Disjunct& b : sub) {
                        Disjunct d = a;
                        d.left.insert(d.left.end(), b.left.begin(), b.left.end());
                        d.right.insert(d.right.end(), b.right.begin(), b.right.end());
                        next.push_back(std::move(d));
                    }
                out = std::move(next);
            }
            return out;
        }
    }
    return {};
}

}  // namespace

std::vector<Disjunct> expand_disjuncts(const Expr& tree) {
    std::vector<Disjunct> raw = expand_raw(tree);
    std::vector<Disjunct> out;
    std::set<Disjunct> seen;
    for (Disjunct& d : raw)
        if (seen.insert(d).second) out.push_back(std::move(d));
    return out;
}

}  // namespace lg
