#pragma once

#include <cstdint>
#include <string>

namespace lg {

// A connector name: an uppercase head ("S", "EV") plus a subscript tail of
// lowercase letters and '*' wildcards ("s", "p*").
struct ConnectorName {
    std::string head;
    std::string tail;

    bool valid() const;
    std::string str() const { return head + tail; }

    friend bool operator==(const ConnectorName& a, const ConnectorName& b) = default;
    friend auto operator<=>(const ConnectorName& a, const ConnectorName& b) = default;
};

enum class Direction : uint8_t { Left, Right };

// One side of a potential link: a name plus the side it faces ('-' or '+').
struct Connector {
    ConnectorName name;
    Direction dir = Direction::Right;

    std::string str() const { return name.str() + (dir == Direction::Right ? '+' : '-'); }

    friend bool operator==(const Connector& a, const Connector& b) = default;
    friend auto operator<=>(const Connector& a, const Connector& b) = default;
};

// Match rule: identical heads, and tails agree position-wise after padding the
// shorter one with '*'. A '*' on either side accepts anything.
bool connectors_match(const ConnectorName& a, const ConnectorName& b);

// Link label for a matched pair: the more specific of the two names. Takes the
// non-'*' character at each tail position; trailing '*'s are dropped.
ConnectorName merge_names(const ConnectorName& a, const ConnectorName& b);

// Parses "Ss" into {head,tail}; returns false on malformed names.
bool parse_connector_name(const std::string& text, ConnectorName& out);

}  // namespace lg
