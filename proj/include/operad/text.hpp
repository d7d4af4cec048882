#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace operad {

struct Token {
    enum class Kind {
        LParen,
        RParen,
        LBracket,
        RBracket,
        LBrace,
        RBrace,
        Comma,
        Semicolon,
        Colon,
        Equals,
        Arrow,
        Atom,
        End,
    };

    Kind kind = Kind::End;
    std::string text;
    std::size_t offset = 0;
};

std::string_view describe(Token::Kind kind);

/// Tokenizer shared by every textual grammar (codes, values, sequences,
/// terms, workspace lines). Whitespace is insignificant; `#` starts a
/// comment running to end of line. Atoms are runs of [A-Za-z0-9_].
class Lexer {
public:
    explicit Lexer(std::string_view source);

    const Token& peek() const { return current_; }
    Token next();
    /// Consumes a token of the given kind or throws a Parse error.
    Token expect(Token::Kind kind);
    Token expect_atom(std::string_view word);
    bool accept(Token::Kind kind);
    bool accept_atom(std::string_view word);
    bool at_end() const { return current_.kind == Token::Kind::End; }
    /// Throws unless all input has been consumed.
    void expect_end();

    [[noreturn]] void fail(const std::string& message) const;

private:
    void advance();

    std::string_view source_;
    std::size_t pos_ = 0;
    Token current_;
};

}  // namespace operad
