#include "lg/dictionary.hpp"

#include <cctype>
#include <set>

namespace lg {

const Expr* Dictionary::find(const std::string& word) const {
    auto it = entries.find(word);
    return it == entries.end() ? nullptr : &it->second;
}

const Expr* Dictionary::lookup(const std::string& word) const {
    if (const Expr* e = find(word)) return e;
    return find(kUnknownWord);
}

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    int line() const { return line_; }
    int col() const { return col_; }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c, const char* what) {
        if (peek() != c) fail(std::string("expected '") + c + "' " + what);
        advance();
    }

    bool accept(char c) {
        if (peek() != c) return false;
        advance();
        return true;
    }

    // A header word: any run without whitespace, ':', ';' or '%'.
    std::string read_word() {
        skip_space();
        std::string w;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == ';' || c == '%')
                break;
            w.push_back(c);
            advance();
        }
        return w;
    }

    // A formula atom token: connector name + direction, or the keyword "or".
    std::string read_formula_token() {
        skip_space();
        std::string t;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '*' && c != '+' && c != '-')
                break;
            t.push_back(c);
            advance();
            if (c == '+' || c == '-') break;
        }
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) { throw DictError(line_, col_, msg); }

    void advance() {
        if (pos_ < text_.size()) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class FormulaParser {
public:
    explicit FormulaParser(Scanner& sc) : sc_(sc) {}

    // formula := and-term { "or" and-term }
    Expr parse_formula() {
        std::vector<Expr> terms;
        terms.push_back(parse_and());
        while (true) {
            int line = sc_.line(), col = sc_.col();
            char c = sc_.peek();
            if (c != 'o') break;
            std::string kw = sc_.read_formula_token();
            if (kw != "or") throw DictError(line, col, "expected 'or', got '" + kw + "'");
            terms.push_back(parse_and());
        }
        if (terms.size() == 1) return std::move(terms.front());
        return Expr::make_or(std::move(terms));
    }

private:
    // and-term := primary { "&" primary }
    Expr parse_and() {
        std::vector<Expr> parts;
        parts.push_back(parse_primary());
        while (sc_.accept('&')) parts.push_back(parse_primary());
        if (parts.size() == 1) return std::move(parts.front());
        return Expr::make_and(std::move(parts));
    }

    Expr parse_primary() {
        char c = sc_.peek();
        if (c == '(') {
            sc_.advance();
            if (sc_.accept(')')) return Expr::empty();
            Expr e = parse_formula();
            sc_.expect(')', "to close group");
            return e;
        }
        if (c == '{') {
            sc_.advance();
            Expr e = parse_formula();
            sc_.expect('}', "to close optional group");
            return Expr::make_or({std::move(e), Expr::empty()});
        }
        return parse_connector();
    }

    Expr parse_connector() {
        int line = sc_.line(), col = sc_.col();
        std::string tok = sc_.read_formula_token();
        if (tok.empty()) throw DictError(line, col, "expected a connector");
        char dir = tok.back();
        if (dir != '+' && dir != '-')
            throw DictError(line, col, "connector '" + tok + "' lacks a +/- direction");
        ConnectorName name;
        if (!parse_connector_name(tok.substr(0, tok.size() - 1), name))
            throw DictError(line, col, "malformed connector name '" + tok + "'");
        if (name.head == kNullHead)
            throw DictError(line, col, "connector head 'NL' is reserved");
        Connector conn{name, dir == '+' ? Direction::Right : Direction::Left};
        return Expr::make_leaf(conn);
    }

    Scanner& sc_;
};

void render_formula(const Expr& e, bool parenthesize_or, std::string& out) {
    switch (e.kind) {
        case Expr::Kind::Empty:
            out += "()";
            break;
        case Expr::Kind::Leaf:
            out += e.leaf.str();
            break;
        case Expr::Kind::And:
            for (size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += " & ";
                render_formula(e.children[i], true, out);
            }
            break;
        case Expr::Kind::Or:
            if (parenthesize_or) out += '(';
            for (size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += " or ";
                render_formula(e.children[i], true, out);
            }
            if (parenthesize_or) out += ')';
            break;
    }
}

}  // namespace

Dictionary parse_dictionary(const std::string& text) {
    Dictionary dict;
    Scanner sc(text);
    while (!sc.eof()) {
        int line = sc.line(), col = sc.col();
        std::vector<std::string> words;
        while (sc.peek() != ':') {
            if (sc.eof()) throw DictError(line, col, "unterminated entry header");
            std::string w = sc.read_word();
            if (w.empty()) sc.fail("expected a word or ':'");
            words.push_back(std::move(w));
        }
        sc.advance();  // ':'
        if (words.empty()) throw DictError(line, col, "entry defines no words");
        Expr tree = FormulaParser(sc).parse_formula();
        sc.expect(';', "to end entry");
        for (const std::string& w : words) {
            auto [it, inserted] = dict.entries.emplace(w, tree);
            if (!inserted) throw DictError(line, col, "duplicate definition of '" + w + "'");
        }
    }
    return dict;
}

std::string serialize_dictionary(const Dictionary& dict) {
    std::string out;
    for (const auto& [word, tree] : dict.entries) {
        out += word;
        out += ": ";
        render_formula(tree, false, out);
        out += ";\n";
    }
    return out;
}

std::vector<Disjunct> DisjunctDictionary::lookup(const std::string& word) const {
    auto it = entries.find(word);
    if (it != entries.end()) return it->second;
    static const ConnectorName nl{kNullHead, ""};
    return {Disjunct{{nl}, {}}, Disjunct{{}, {nl}}, Disjunct{{nl}, {nl}}};
}

std::vector<Disjunct> extend_disjuncts(const std::vector<Disjunct>& base) {
    const ConnectorName nl{kNullHead, ""};
    std::vector<Disjunct> out;
    std::set<Disjunct> seen;
    auto push = [&](Disjunct d) {
        if (seen.insert(d).second) out.push_back(std::move(d));
    };
    for (const Disjunct& d : base) {
        // NL is the nearest connector of its list: a null link is the last
        // link the traversal makes on that side.
        Disjunct d_r = d, d_l = d, d_b = d;
        d_r.right.insert(d_r.right.begin(), nl);
        d_l.left.insert(d_l.left.begin(), nl);
        d_b.left.insert(d_b.left.begin(), nl);
        d_b.right.insert(d_b.right.begin(), nl);
        push(d);
        push(std::move(d_r));
        push(std::move(d_l));
        push(std::move(d_b));
    }
    push(Disjunct{{nl}, {}});
    push(Disjunct{{}, {nl}});
    push(Disjunct{{nl}, {nl}});
    return out;
}

DisjunctDictionary build_extended_dictionary(const Dictionary& d) {
    DisjunctDictionary out;
    for (const auto& [word, tree] : d.entries)
        out.entries[word] = extend_disjuncts(expand_disjuncts(tree));
    return out;
}

}  // namespace lg
