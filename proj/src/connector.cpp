#include "lg/connector.hpp"

#include <algorithm>
#include <cctype>

namespace lg {

bool ConnectorName::valid() const {
    if (head.empty()) return false;
    for (char c : head)
        if (!std::isupper(static_cast<unsigned char>(c))) return false;
    for (char c : tail)
        if (!std::islower(static_cast<unsigned char>(c)) && c != '*') return false;
    return true;
}

bool connectors_match(const ConnectorName& a, const ConnectorName& b) {
    if (a.head != b.head) return false;
    size_t n = std::max(a.tail.size(), b.tail.size());
    for (size_t i = 0; i < n; ++i) {
        char ca = i < a.tail.size() ? a.tail[i] : '*';
        char cb = i < b.tail.size() ? b.tail[i] : '*';
        if (ca != '*' && cb != '*' && ca != cb) return false;
    }
    return true;
}

ConnectorName merge_names(const ConnectorName& a, const ConnectorName& b) {
    ConnectorName out{a.head, {}};
    size_t n = std::max(a.tail.size(), b.tail.size());
    for (size_t i = 0; i < n; ++i) {
        char ca = i < a.tail.size() ? a.tail[i] : '*';
        char cb = i < b.tail.size() ? b.tail[i] : '*';
        out.tail.push_back(ca != '*' ? ca : cb);
    }
    while (!out.tail.empty() && out.tail.back() == '*') out.tail.pop_back();
    return out;
}

bool parse_connector_name(const std::string& text, ConnectorName& out) {
    size_t i = 0;
    while (i < text.size() && std::isupper(static_cast<unsigned char>(text[i]))) ++i;
    if (i == 0) return false;
    out.head = text.substr(0, i);
    out.tail = text.substr(i);
    return out.valid();
}

}  // namespace lg
