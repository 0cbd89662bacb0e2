#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "lieact/errors.hpp"

namespace lieact {

// Catalog expression trees.
//
// Grammar (whitespace-insensitive):
//
//   expr := term ('x' term)*
//   term := atom | 'derived(' expr ')'
//   atom := name '(' int (',' field)? ')'
//
// Known atom names are st, nt, sl, abelian, strn. The field is R or C and
// defaults to R; abelian and strn take no field at all, and nt is real only.
// Those are form errors, caught while parsing. Whether a parameter value is
// actually buildable (say sl(1,R)) is a separate question answered by
// build(), so that programmatically constructed trees get the same checks.

struct AlgebraExpr {
    enum class Node { atom, product, derived };

    Node node = Node::atom;

    // Atom payload.
    std::string name;
    int param = 0;
    bool complex_field = false;

    // Product children (exactly two, left-associated) or the single
    // derived() argument.
    std::vector<AlgebraExpr> children;

    static AlgebraExpr atom(std::string name, int param, bool complex_field = false) {
        AlgebraExpr e;
        e.node = Node::atom;
        e.name = std::move(name);
        e.param = param;
        e.complex_field = complex_field;
        return e;
    }

    static AlgebraExpr product(AlgebraExpr left, AlgebraExpr right) {
        AlgebraExpr e;
        e.node = Node::product;
        e.children.push_back(std::move(left));
        e.children.push_back(std::move(right));
        return e;
    }

    static AlgebraExpr derived(AlgebraExpr inner) {
        AlgebraExpr e;
        e.node = Node::derived;
        e.children.push_back(std::move(inner));
        return e;
    }
};

inline bool operator==(const AlgebraExpr& a, const AlgebraExpr& b) {
    return a.node == b.node && a.name == b.name && a.param == b.param &&
           a.complex_field == b.complex_field && a.children == b.children;
}

inline bool operator!=(const AlgebraExpr& a, const AlgebraExpr& b) { return !(a == b); }

namespace detail {

inline bool atom_name_known(const std::string& name) {
    return name == "st" || name == "nt" || name == "sl" || name == "abelian" ||
           name == "strn";
}

inline bool atom_takes_field(const std::string& name) {
    return name == "st" || name == "nt" || name == "sl";
}

class ExprParser {
  public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    AlgebraExpr run() {
        AlgebraExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("expected 'x' or end of input", pos_);
        return e;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void expect(char c, const char* what) {
        skip_ws();
        if (at_end() || peek() != c)
            throw ParseError(std::string("expected ") + what, pos_);
        ++pos_;
    }

    AlgebraExpr parse_expr() {
        AlgebraExpr acc = parse_term();
        for (;;) {
            skip_ws();
            if (at_end() || peek() != 'x') break;
            ++pos_;
            acc = AlgebraExpr::product(std::move(acc), parse_term());
        }
        return acc;
    }

    AlgebraExpr parse_term() {
        skip_ws();
        if (at_end())
            throw ParseError("expected an algebra term", pos_);
        std::size_t name_at = pos_;
        std::string name = read_name();
        if (name.empty())
            throw ParseError("expected an algebra term", pos_);
        if (name == "derived") {
            expect('(', "'(' after derived");
            AlgebraExpr inner = parse_expr();
            expect(')', "')' closing derived(...)");
            return AlgebraExpr::derived(std::move(inner));
        }
        if (!atom_name_known(name))
            throw UnknownNameError("unknown algebra family '" + name + "'", name_at);
        return parse_atom_tail(std::move(name));
    }

    std::string read_name() {
        std::string name;
        while (!at_end() &&
               std::isalpha(static_cast<unsigned char>(peek())) &&
               std::islower(static_cast<unsigned char>(peek()))) {
            name.push_back(peek());
            ++pos_;
        }
        return name;
    }

    AlgebraExpr parse_atom_tail(std::string name) {
        expect('(', "'(' after atom name");
        skip_ws();
        int param = read_int();
        skip_ws();
        bool complex_field = false;
        if (!at_end() && peek() == ',') {
            ++pos_;
            skip_ws();
            std::size_t field_at = pos_;
            char f = at_end() ? '\0' : peek();
            if (f != 'R' && f != 'C')
                throw ParseError("expected field R or C", field_at);
            ++pos_;
            if (!atom_takes_field(name))
                throw ArityError(name + " takes no field argument", field_at);
            if (f == 'C' && name == "nt")
                throw ArityError("nt is defined over R only", field_at);
            complex_field = (f == 'C');
        }
        expect(')', "',' or ')'");
        return AlgebraExpr::atom(std::move(name), param, complex_field);
    }

    int read_int() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a positive integer parameter", pos_);
        long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 1000000)
                throw ParseError("integer parameter out of range", pos_);
            ++pos_;
        }
        return static_cast<int>(value);
    }
};

}  // namespace detail

// Parses a catalog expression. Throws ParseError (with the byte offset of
// the first offending character), UnknownNameError for an unrecognized atom
// name, or ArityError when a known atom is given the wrong argument shape.
inline AlgebraExpr parse_expression(std::string_view text) {
    return detail::ExprParser(text).run();
}

// Canonical rendering: one space around each product sign, explicit field
// for the matrix atoms, none for abelian and strn. parse(print(e)) == e for
// every tree print() accepts, and print(parse(s)) is the canonical form
// of s.
inline std::string print_expression(const AlgebraExpr& e) {
    switch (e.node) {
        case AlgebraExpr::Node::product:
            return print_expression(e.children[0]) + " x " +
                   print_expression(e.children[1]);
        case AlgebraExpr::Node::derived:
            return "derived(" + print_expression(e.children[0]) + ")";
        case AlgebraExpr::Node::atom:
        default: {
            std::string out = e.name + "(" + std::to_string(e.param);
            if (detail::atom_takes_field(e.name))
                out += e.complex_field ? ",C" : ",R";
            out += ")";
            return out;
        }
    }
}

}  // namespace lieact
