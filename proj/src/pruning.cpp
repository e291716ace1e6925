#include "lg/pruning.hpp"

#include <algorithm>
#include <cstdlib>

namespace lg {

size_t DisjunctTable::total_disjuncts() const {
    size_t n = 0;
    for (const auto& w : words) n += w.size();
    return n;
}

SentenceExpressions build_sentence_expressions(const Dictionary& dict,
                                               const std::vector<std::string>& tokens,
                                               bool* any_unknown) {
    SentenceExpressions out;
    if (any_unknown) *any_unknown = false;
    for (const std::string& t : tokens) {
        if (const Expr* e = dict.find(t)) {
            out.trees.emplace_back(*e);
            continue;
        }
        if (any_unknown) *any_unknown = true;
        if (const Expr* u = dict.find(kUnknownWord))
            out.trees.emplace_back(*u);
        else
            out.trees.emplace_back(std::nullopt);
    }
    return out;
}

namespace {

size_t count_leaves(const Expr& e) {
    if (e.kind == Expr::Kind::Leaf) return 1;
    size_t n = 0;
    for (const Expr& c : e.children) n += count_leaves(c);
    return n;
}

// Removes leaves of `dir` rejected by `keep`; an & dies with any child, an
// `or` sheds dead children and dies when none remain.
template <class Keep>
std::optional<Expr> prune_tree(const Expr& e, Direction dir, const Keep& keep) {
    switch (e.kind) {
        case Expr::Kind::Empty:
            return e;
        case Expr::Kind::Leaf:
            if (e.leaf.dir == dir && !keep(e.leaf.name)) return std::nullopt;
            return e;
        case Expr::Kind::And: {
            Expr out = Expr::make_and({});
            for (const Expr& c : e.children) {
                auto p = prune_tree(c, dir, keep);
                if (!p) return std::nullopt;
                out.children.push_back(std::move(*p));
            }
            return out;
        }
        case Expr::Kind::Or: {
            Expr out = Expr::make_or({});
            for (const Expr& c : e.children) {
                auto p = prune_tree(c, dir, keep);
                if (p) out.children.push_back(std::move(*p));
            }
            if (out.children.empty()) return std::nullopt;
            return out;
        }
    }
    return std::nullopt;
}

void collect_leaves(const Expr& e, Direction dir, std::vector<ConnectorName>& out) {
    if (e.kind == Expr::Kind::Leaf) {
        if (e.leaf.dir == dir) out.push_back(e.leaf.name);
        return;
    }
    for (const Expr& c : e.children) collect_leaves(c, dir, out);
}

size_t live_leaves(const SentenceExpressions& exprs) {
    size_t n = 0;
    for (const auto& t : exprs.trees)
        if (t) n += count_leaves(*t);
    return n;
}

// One directional expression-pruning pass. In a left-to-right pass the
// running sets hold the surviving right connectors of the words already
// processed, keyed by word position for the link-length bound.
size_t expression_pass(SentenceExpressions& exprs, bool left_to_right,
                       std::optional<int> maxlen) {
    const int n = static_cast<int>(exprs.size());
    size_t before = live_leaves(exprs);
    std::vector<std::vector<ConnectorName>> seen(n);

    for (int step = 0; step < n; ++step) {
        int w = left_to_right ? step : n - 1 - step;
        auto& tree = exprs.trees[w];
        if (!tree) continue;

        Direction check = left_to_right ? Direction::Left : Direction::Right;
        auto keep = [&](const ConnectorName& c) {
            int lo = left_to_right ? (maxlen ? std::max(0, w - *maxlen) : 0) : w + 1;
            int hi = left_to_right ? w - 1 : (maxlen ? std::min(n - 1, w + *maxlen) : n - 1);
            for (int p = lo; p <= hi; ++p)
                for (const ConnectorName& other : seen[p])
                    if (connectors_match(other, c)) return true;
            return false;
        };
        tree = prune_tree(*tree, check, keep);
        if (tree) collect_leaves(*tree, check == Direction::Left ? Direction::Right : Direction::Left,
                                 seen[w]);
    }
    return before - live_leaves(exprs);
}

}  // namespace

size_t expression_prune(SentenceExpressions& exprs, std::optional<int> max_link_length) {
    size_t passes = 0;
    while (true) {
        size_t deleted = expression_pass(exprs, true, max_link_length);
        deleted += expression_pass(exprs, false, max_link_length);
        passes += 2;
        if (deleted == 0) break;
    }
    return passes;
}

DisjunctTable expand_sentence(const SentenceExpressions& exprs) {
    DisjunctTable out;
    for (const auto& t : exprs.trees) {
        if (t)
            out.words.push_back(expand_disjuncts(*t));
        else
            out.words.emplace_back();
    }
    return out;
}

namespace {

// Shared fixpoint loop: a disjunct survives while `supported` accepts every
// connector on both of its lists.
template <class Supported>
void prune_to_fixpoint(DisjunctTable& table, const Supported& supported) {
    const int n = static_cast<int>(table.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int w = 0; w < n; ++w) {
            auto& ds = table.words[w];
            auto dead = [&](const Disjunct& d) {
                for (size_t i = 0; i < d.left.size(); ++i)
                    if (!supported(w, d.left[i], Direction::Left, i)) return true;
                for (size_t i = 0; i < d.right.size(); ++i)
                    if (!supported(w, d.right[i], Direction::Right, i)) return true;
                return false;
            };
            size_t before = ds.size();
            ds.erase(std::remove_if(ds.begin(), ds.end(), dead), ds.end());
            if (ds.size() != before) changed = true;
        }
    }
}

}  // namespace

void power_prune(DisjunctTable& table, bool robust, std::optional<int> max_link_length) {
    const int n = static_cast<int>(table.size());
    auto supported = [&](int w, const ConnectorName& c, Direction dir, size_t pos) {
        // A connector `pos` deep (nearest-first) linking p--w leaves
        // max(pos, partner_pos) words to place strictly between, so the gap
        // must be at least that large.
        for (int p = 0; p < n; ++p) {
            bool on_left = dir == Direction::Left;
            if (on_left ? p >= w : p <= w) continue;
            int gap = std::abs(w - p) - 1;
            if (max_link_length && gap + 1 > *max_link_length) continue;
            const auto& partner_side_words = table.words[p];
            for (const Disjunct& pd : partner_side_words) {
                const auto& list = on_left ? pd.right : pd.left;
                for (size_t j = 0; j < list.size(); ++j) {
                    if (gap < static_cast<int>(std::max(pos, j))) continue;
                    if (!connectors_match(c, list[j])) continue;
                    // Last connectors of both lists cannot bridge a gap when
                    // null links are unavailable.
                    if (!robust && pos == 0 && j == 0 && gap >= 1) continue;
                    return true;
                }
            }
        }
        return false;
    };
    prune_to_fixpoint(table, supported);
}

void match_existence_prune(DisjunctTable& table, std::optional<int> max_link_length) {
    const int n = static_cast<int>(table.size());
    auto supported = [&](int w, const ConnectorName& c, Direction dir, size_t) {
        for (int p = 0; p < n; ++p) {
            bool on_left = dir == Direction::Left;
            if (on_left ? p >= w : p <= w) continue;
            if (max_link_length && std::abs(w - p) > *max_link_length) continue;
            for (const Disjunct& pd : table.words[p])
                for (const ConnectorName& other : on_left ? pd.right : pd.left)
                    if (connectors_match(c, other)) return true;
        }
        return false;
    };
    prune_to_fixpoint(table, supported);
}

FastMatchIndex build_fast_match(const DisjunctTable& table) {
    FastMatchIndex idx;
    idx.words.resize(table.size());
    for (size_t w = 0; w < table.size(); ++w) {
        auto& tabs = idx.words[w];
        const auto& ds = table.words[w];
        for (uint32_t i = 0; i < ds.size(); ++i) {
            if (ds[i].left.empty())
                tabs.nil_left.push_back(i);
            else
                tabs.left[ds[i].left.back().head].push_back(i);
            if (!ds[i].right.empty()) tabs.right[ds[i].right.back().head].push_back(i);
        }
    }
    return idx;
}

std::vector<uint32_t> fast_match_lookup(const FastMatchIndex& idx, const DisjunctTable& table,
                                        size_t w, const ConnectorName* l, const ConnectorName* r) {
    const auto& tabs = idx.words[w];
    if (!l && !r) return tabs.nil_left;
    std::vector<uint32_t> out;
    if (l) {
        auto it = tabs.left.find(l->head);
        if (it != tabs.left.end())
            for (uint32_t i : it->second)
                if (connectors_match(*l, table.words[w][i].left.back())) out.push_back(i);
    }
    if (r) {
        auto it = tabs.right.find(r->head);
        if (it != tabs.right.end())
            for (uint32_t i : it->second)
                if (connectors_match(table.words[w][i].right.back(), *r)) out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PreparedSentence prepare_sentence(const Dictionary& dict, std::vector<std::string> tokens,
                                  const PrepareOptions& opt) {
    PreparedSentence out;
    out.tokens = std::move(tokens);
    SentenceExpressions exprs = build_sentence_expressions(dict, out.tokens, &out.any_unknown);

    size_t leaves = 0;
    for (const auto& t : exprs.trees)
        if (t) leaves += count_leaves(*t);
    out.stats.connectors_before = leaves;

    if (opt.prune) out.stats.expression_passes = expression_prune(exprs, opt.max_link_length);

    leaves = 0;
    for (const auto& t : exprs.trees)
        if (t) leaves += count_leaves(*t);
    out.stats.connectors_after = leaves;

    out.table = expand_sentence(exprs);
    out.stats.disjuncts_before = out.table.total_disjuncts();
    if (opt.prune) {
        power_prune(out.table, opt.robust, opt.max_link_length);
        out.stats.power_passes = 1;
    }
    out.stats.disjuncts_after = out.table.total_disjuncts();
    out.index = build_fast_match(out.table);
    return out;
}

}  // namespace lg
