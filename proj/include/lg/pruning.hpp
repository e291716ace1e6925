#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lg/dictionary.hpp"

namespace lg {

// Per-sentence working copies of the word formulas; a word whose tree has
// become unsatisfiable holds nullopt and expands to no disjuncts.
struct SentenceExpressions {
    std::vector<std::optional<Expr>> trees;

    size_t size() const { return trees.size(); }
};

// Per-word disjunct lists in deterministic expansion order.
struct DisjunctTable {
    std::vector<std::vector<Disjunct>> words;

    size_t size() const { return words.size(); }
    size_t total_disjuncts() const;
};

struct PruneStats {
    size_t connectors_before = 0;   // leaves before expression pruning
    size_t connectors_after = 0;
    size_t disjuncts_before = 0;    // after expansion, before power pruning
    size_t disjuncts_after = 0;
    size_t expression_passes = 0;
    size_t power_passes = 0;
};

// Looks up each token (with <UNKNOWN-WORD> fallback) and copies its tree.
// Tokens missing from the dictionary entirely get an unsatisfiable tree.
SentenceExpressions build_sentence_expressions(const Dictionary& dict,
                                               const std::vector<std::string>& tokens,
                                               bool* any_unknown = nullptr);

// Alternating directional passes deleting connector leaves that have no
// potential partner on their side, together with the &-nodes that depend on
// them; repeats until a full round deletes nothing. Returns pass count.
size_t expression_prune(SentenceExpressions& exprs,
                        std::optional<int> max_link_length = std::nullopt);

DisjunctTable expand_sentence(const SentenceExpressions& exprs);

// Deletes disjuncts that cannot appear in any linkage: every connector needs a
// partner within the sentence bounds (and the link-length bound) reachable
// from its position in its list, and in non-robust mode a pair of
// list-final connectors may not link across a gap. Iterates to fixpoint.
void power_prune(DisjunctTable& table, bool robust,
                 std::optional<int> max_link_length = std::nullopt);

// The plain directional disjunct filter: keep a disjunct only while every
// connector has some matching partner on the correct side. Used as the
// reference fixpoint for the expression pruner and the null-link
// pruning-stability check.
void match_existence_prune(DisjunctTable& table,
                           std::optional<int> max_link_length = std::nullopt);

// Candidate index: per word, disjuncts bucketed by the head name of the
// connector a link would consume first (the far end of each list), plus the
// disjuncts whose left list is empty for the null-link branch.
struct FastMatchIndex {
    struct WordTables {
        std::unordered_map<std::string, std::vector<uint32_t>> left;
        std::unordered_map<std::string, std::vector<uint32_t>> right;
        std::vector<uint32_t> nil_left;
    };
    std::vector<WordTables> words;
};

FastMatchIndex build_fast_match(const DisjunctTable& table);

// Union of left-bucket candidates whose matchable left connector matches `l`
// and right-bucket candidates matching `r`; deduplicated, in table order.
// With neither side present, returns the nil-left list.
std::vector<uint32_t> fast_match_lookup(const FastMatchIndex& idx, const DisjunctTable& table,
                                        size_t w, const ConnectorName* l, const ConnectorName* r);

// Full pre-parse pipeline: expression prune, expand, power prune, index.
struct PreparedSentence {
    std::vector<std::string> tokens;
    DisjunctTable table;
    FastMatchIndex index;
    PruneStats stats;
    bool any_unknown = false;
};

struct PrepareOptions {
    bool prune = true;
    bool robust = true;
    std::optional<int> max_link_length;
};

PreparedSentence prepare_sentence(const Dictionary& dict, std::vector<std::string> tokens,
                                  const PrepareOptions& opt = {});

}  // namespace lg
