#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lg/expression.hpp"

namespace lg {

// Token that supplies the default definition for words missing from the
// dictionary.
inline constexpr const char* kUnknownWord = "<UNKNOWN-WORD>";

// Connector head reserved for the null-link grammar construction; rejected in
// user dictionaries.
inline constexpr const char* kNullHead = "NL";

class DictError : public std::runtime_error {
public:
    DictError(int line, int col, const std::string& what)
        : std::runtime_error("dictionary:" + std::to_string(line) + ":" + std::to_string(col) +
                             ": " + what),
          line(line),
          col(col) {}

    int line;
    int col;
};

struct Dictionary {
    std::map<std::string, Expr> entries;

    // Definition lookup; falls back to the <UNKNOWN-WORD> entry when present.
    const Expr* lookup(const std::string& word) const;
    // Exact entry, no unknown-word fallback.
    const Expr* find(const std::string& word) const;
    bool has_unknown_entry() const { return entries.count(kUnknownWord) != 0; }
};

// Parses dictionary text: `word [word ...] : formula ;` entries, `%` comments.
// Throws DictError with line/column on syntax errors, use of the reserved NL
// head, or duplicate word definitions.
Dictionary parse_dictionary(const std::string& text);

// Renders a dictionary back to entry-per-line text; parse(serialize(d)) == d.
std::string serialize_dictionary(const Dictionary& dict);

// A dictionary held directly as per-word disjunct lists. Produced by the
// null-link grammar construction, which has no formula form.
struct DisjunctDictionary {
    std::map<std::string, std::vector<Disjunct>> entries;

    // Disjuncts for a word; undefined words get the universal NL trio that the
    // construction grants every word.
    std::vector<Disjunct> lookup(const std::string& word) const;
};

// Builds the extended grammar whose legal linkages are exactly the chained
// linkages of `d`: every disjunct gains variants with an NL connector at the
// near end of the left list, the right list, and both, and every word gains
// ((NL)()), (()(NL)), ((NL)(NL)). Duplicates are removed. Test oracle only;
// production parsing never materializes this dictionary.
DisjunctDictionary build_extended_dictionary(const Dictionary& d);

// Per-word extension step of the construction above.
std::vector<Disjunct> extend_disjuncts(const std::vector<Disjunct>& base);

}  // namespace lg
