#pragma once

#include <cctype>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <symres/ideal.hpp>

namespace symres {

/// Result of evaluating a session: the declared ring, the name bindings in
/// declaration order, the raw statement log, and the value of the last
/// bare expression, if any.
struct Session {
    RingPtr ring;
    std::vector<std::pair<std::string, MonomialIdeal>> bindings;
    std::vector<std::string> log;
    std::optional<MonomialIdeal> last;

    const MonomialIdeal* find(std::string_view name) const {
        for (const auto& [n, v] : bindings)
            if (n == name) return &v;
        return nullptr;
    }
};

namespace detail {

enum class Tok {
    end,
    ident,
    integer,
    caret,
    star,
    plus,
    cap,
    lparen,
    rparen,
    comma,
    semicolon,
    assign,
};

struct Token {
    Tok kind = Tok::end;
    std::string text;
    Exp value = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Hand-rolled lexer with 1-based line/column tracking. `cap` and the
/// UTF-8 intersection sign are the same token.
class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, current_.line, current_.column);
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            step();
        current_ = Token{};
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) return;

        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                step();
            current_.text = std::string(text_.substr(start, pos_ - start));
            current_.kind = current_.text == "cap" ? Tok::cap : Tok::ident;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            __int128 v = 0;
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                if (v > std::numeric_limits<Exp>::max())
                    throw parse_error("integer literal overflows the exponent width", line_,
                                      column_);
                step();
            }
            current_.kind = Tok::integer;
            current_.value = static_cast<Exp>(v);
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        // UTF-8 intersection sign as an alias for `cap`.
        if (text_.substr(pos_).starts_with("\xE2\x88\xA9")) {
            step();
            step();
            step();
            current_.kind = Tok::cap;
            current_.text = "cap";
            return;
        }
        switch (c) {
        case '^': current_.kind = Tok::caret; break;
        case '*': current_.kind = Tok::star; break;
        case '+': current_.kind = Tok::plus; break;
        case '(': current_.kind = Tok::lparen; break;
        case ')': current_.kind = Tok::rparen; break;
        case ',': current_.kind = Tok::comma; break;
        case ';': current_.kind = Tok::semicolon; break;
        case '=': current_.kind = Tok::assign; break;
        default:
            throw parse_error(std::string("unexpected character '") + c + "'", line_, column_);
        }
        current_.text = std::string(1, c);
        step();
    }

    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    Token current_;
};

/// Recursive-descent evaluator for the session grammar. Precedence, from
/// tightest: ^  *  cap  + ; all binary operators left-associative.
class SessionParser {
public:
    explicit SessionParser(std::string_view text) : lexer_(text) {}

    Session run() {
        while (lexer_.peek().kind != Tok::end) {
            if (lexer_.peek().kind == Tok::semicolon) {
                lexer_.take();
                continue;
            }
            statement();
        }
        return std::move(session_);
    }

    /// Parses a single expression against a fixed ring (CLI `--ideal`).
    static MonomialIdeal expression(std::string_view text, RingPtr ring) {
        SessionParser parser(text);
        parser.session_.ring = std::move(ring);
        MonomialIdeal value = parser.expr();
        if (parser.lexer_.peek().kind != Tok::end)
            parser.lexer_.fail("trailing input after expression");
        return value;
    }

    static Monomial monomial_only(std::string_view text, RingPtr ring) {
        SessionParser parser(text);
        parser.session_.ring = std::move(ring);
        Monomial value = parser.monomial();
        if (parser.lexer_.peek().kind != Tok::end)
            parser.lexer_.fail("trailing input after monomial");
        return value;
    }

private:
    void statement() {
        Token start = lexer_.peek();
        if (start.kind == Tok::ident && start.text == "ring") {
            ring_declaration();
            return;
        }
        if (!session_.ring)
            lexer_.fail("a ring declaration must precede any ideal expression");

        if (start.kind == Tok::ident && session_.ring->index_of(start.text) == std::nullopt) {
            // could be `name = expr` or an expression starting with a binding
            Token name = lexer_.take();
            if (lexer_.peek().kind == Tok::assign) {
                lexer_.take();
                MonomialIdeal value = wrap_eval(name, [&] { return expr(); });
                session_.log.push_back(name.text + " = " + value.str());
                bind(name, std::move(value));
                return;
            }
            MonomialIdeal value = wrap_eval(name, [&] { return expr_continue(lookup(name)); });
            session_.log.push_back(value.str());
            session_.last = std::move(value);
            return;
        }
        MonomialIdeal value = wrap_eval(start, [&] { return expr(); });
        session_.log.push_back(value.str());
        session_.last = std::move(value);
    }

    void ring_declaration() {
        Token kw = lexer_.take();
        if (session_.ring) throw parse_error("ring already declared", kw.line, kw.column);
        std::vector<std::string> names;
        for (;;) {
            Token name = expect(Tok::ident, "variable name");
            if (name.text == "ring")
                throw parse_error("'ring' cannot be a variable name", name.line, name.column);
            names.push_back(name.text);
            if (lexer_.peek().kind != Tok::comma) break;
            lexer_.take();
        }
        std::string entry = "ring";
        for (std::size_t i = 0; i < names.size(); ++i) entry += (i ? "," : " ") + names[i];
        try {
            session_.ring = make_ring(std::move(names));
        } catch (const domain_error& e) {
            throw parse_error(e.what(), kw.line, kw.column);
        }
        session_.log.push_back(std::move(entry));
    }

    void bind(const Token& name, MonomialIdeal value) {
        if (name.text == "ring" || name.text == "cap")
            throw parse_error("'" + name.text + "' is reserved", name.line, name.column);
        for (auto& [n, v] : session_.bindings) {
            if (n == name.text) {
                v = std::move(value); // rebinding replaces
                return;
            }
        }
        session_.bindings.emplace_back(name.text, std::move(value));
    }

    MonomialIdeal lookup(const Token& name) {
        if (const MonomialIdeal* bound = session_.find(name.text)) return *bound;
        throw parse_error("unknown name '" + name.text + "'", name.line, name.column);
    }

    // expr := capterm ("+" capterm)*
    MonomialIdeal expr() { return expr_continue(capterm()); }

    MonomialIdeal expr_continue(MonomialIdeal left) {
        left = capterm_continue(std::move(left));
        while (lexer_.peek().kind == Tok::plus) {
            lexer_.take();
            left = add(left, capterm());
        }
        return left;
    }

    // capterm := product ("cap" product)*
    MonomialIdeal capterm() { return capterm_continue(product()); }

    MonomialIdeal capterm_continue(MonomialIdeal left) {
        left = product_continue(std::move(left));
        while (lexer_.peek().kind == Tok::cap) {
            lexer_.take();
            left = intersect(left, product());
        }
        return left;
    }

    // product := postfix ("*" postfix)*
    MonomialIdeal product() { return product_continue(postfix()); }

    MonomialIdeal product_continue(MonomialIdeal left) {
        left = postfix_continue(std::move(left));
        while (lexer_.peek().kind == Tok::star) {
            lexer_.take();
            left = mul(left, postfix());
        }
        return left;
    }

    // postfix := atom ("^" int)*
    MonomialIdeal postfix() { return postfix_continue(atom()); }

    MonomialIdeal postfix_continue(MonomialIdeal left) {
        while (lexer_.peek().kind == Tok::caret) {
            lexer_.take();
            Token n = expect(Tok::integer, "integer exponent");
            left = power(left, static_cast<long>(n.value));
        }
        return left;
    }

    // atom := name | "(" monomial ("," monomial)* ")" | "(" expr ")"
    MonomialIdeal atom() {
        Token t = lexer_.peek();
        if (t.kind == Tok::ident) {
            lexer_.take();
            if (session_.ring->index_of(t.text))
                throw parse_error("variable '" + t.text +
                                      "' can only appear inside an ideal literal (...)",
                                  t.line, t.column);
            return lookup(t);
        }
        if (t.kind != Tok::lparen) lexer_.fail("expected a name or '('");
        lexer_.take();

        // Inside parentheses: a ring variable or `1` starts a generator
        // list, a bound name or '(' starts a nested expression.
        Token inner = lexer_.peek();
        bool literal = inner.kind == Tok::integer ||
                       (inner.kind == Tok::ident && session_.ring->index_of(inner.text));
        MonomialIdeal value = MonomialIdeal::zero(session_.ring);
        if (literal) {
            std::vector<Monomial> gens;
            gens.push_back(monomial());
            while (lexer_.peek().kind == Tok::comma) {
                lexer_.take();
                gens.push_back(monomial());
            }
            value = MonomialIdeal::make(session_.ring, std::move(gens));
        } else {
            value = expr();
        }
        expect(Tok::rparen, "')'");
        return value;
    }

    // monomial := "1" | factor ("*" factor)*
    Monomial monomial() {
        Token t = lexer_.peek();
        if (t.kind == Tok::integer) {
            lexer_.take();
            if (t.value != 1)
                throw parse_error("the only numeric monomial is the unit '1'", t.line, t.column);
            return Monomial::unit(session_.ring);
        }
        Monomial m = factor();
        while (lexer_.peek().kind == Tok::star) {
            lexer_.take();
            m = mul(m, factor());
        }
        return m;
    }

    // factor := name ("^" int)?
    Monomial factor() {
        Token name = expect(Tok::ident, "variable name");
        auto index = session_.ring->index_of(name.text);
        if (!index)
            throw parse_error("unknown variable '" + name.text + "'", name.line, name.column);
        Exp exponent = 1;
        if (lexer_.peek().kind == Tok::caret) {
            lexer_.take();
            Token n = expect(Tok::integer, "integer exponent");
            exponent = n.value;
        }
        return Monomial::variable(session_.ring, *index, exponent);
    }

    Token expect(Tok kind, const std::string& what) {
        if (lexer_.peek().kind != kind) lexer_.fail("expected " + what);
        return lexer_.take();
    }

    /// Eager evaluation means algebra errors (overflow, mismatched rings)
    /// surface while parsing; report them with the statement's position.
    template <class F>
    MonomialIdeal wrap_eval(const Token& at, F&& f) {
        try {
            return f();
        } catch (const parse_error&) {
            throw;
        } catch (const error& e) {
            throw parse_error(e.what(), at.line, at.column);
        }
    }

    Lexer lexer_;
    Session session_;
};

} // namespace detail

/// Parses and eagerly evaluates a whole session:
///   ring x,y,z; I = (x^3, x*y^2, y^3*z); I^2 cap (x, z)
inline Session parse_session(std::string_view text) {
    return detail::SessionParser(text).run();
}

/// `"x,y,z"` (or a full `ring x,y,z` declaration) to a ring context.
inline RingPtr parse_ring(std::string_view text) {
    std::string_view body = text;
    if (body.starts_with("ring") &&
        (body.size() == 4 || std::isspace(static_cast<unsigned char>(body[4]))))
        body.remove_prefix(4);
    return parse_session("ring " + std::string(body)).ring;
}

/// One ideal expression over a fixed ring, e.g. `((x,y))^2 cap (z)`.
inline MonomialIdeal parse_ideal(std::string_view text, RingPtr ring) {
    return detail::SessionParser::expression(text, std::move(ring));
}

/// One monomial over a fixed ring, e.g. `x^3*y^2*z`.
inline Monomial parse_monomial(std::string_view text, RingPtr ring) {
    return detail::SessionParser::monomial_only(text, std::move(ring));
}

} // namespace symres
