#include "operad/text.hpp"

#include <cctype>

#include "operad/error.hpp"

namespace operad {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::ColorMismatch: return "ColorMismatch";
        case ErrorKind::SignatureMismatch: return "SignatureMismatch";
        case ErrorKind::WitnessUnconstructible: return "WitnessUnconstructible";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::ExponentialBlowup: return "ExponentialBlowup";
        case ErrorKind::UnboundGenerator: return "UnboundGenerator";
        case ErrorKind::InvalidPermutation: return "InvalidPermutation";
        case ErrorKind::OutsideDomain: return "OutsideDomain";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Config: return "ConfigError";
    }
    return "Error";
}

std::string_view describe(Token::Kind kind) {
    switch (kind) {
        case Token::Kind::LParen: return "'('";
        case Token::Kind::RParen: return "')'";
        case Token::Kind::LBracket: return "'['";
        case Token::Kind::RBracket: return "']'";
        case Token::Kind::LBrace: return "'{'";
        case Token::Kind::RBrace: return "'}'";
        case Token::Kind::Comma: return "','";
        case Token::Kind::Semicolon: return "';'";
        case Token::Kind::Colon: return "':'";
        case Token::Kind::Equals: return "'='";
        case Token::Kind::Arrow: return "'->'";
        case Token::Kind::Atom: return "word";
        case Token::Kind::End: return "end of input";
    }
    return "token";
}

Lexer::Lexer(std::string_view source) : source_(source) { advance(); }

Token Lexer::next() {
    Token t = current_;
    advance();
    return t;
}

Token Lexer::expect(Token::Kind kind) {
    if (current_.kind != kind) {
        fail("expected " + std::string(describe(kind)));
    }
    return next();
}

Token Lexer::expect_atom(std::string_view word) {
    if (current_.kind != Token::Kind::Atom || current_.text != word) {
        fail("expected '" + std::string(word) + "'");
    }
    return next();
}

bool Lexer::accept(Token::Kind kind) {
    if (current_.kind != kind) return false;
    advance();
    return true;
}

bool Lexer::accept_atom(std::string_view word) {
    if (current_.kind != Token::Kind::Atom || current_.text != word) return false;
    advance();
    return true;
}

void Lexer::expect_end() {
    if (!at_end()) fail("unexpected trailing input");
}

void Lexer::fail(const std::string& message) const {
    std::string found = current_.kind == Token::Kind::Atom ? "'" + current_.text + "'"
                                                           : std::string(describe(current_.kind));
    throw Error(ErrorKind::Parse,
                message + " at offset " + std::to_string(current_.offset) + ", found " + found);
}

void Lexer::advance() {
    while (pos_ < source_.size()) {
        char ch = source_[pos_];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++pos_;
        } else if (ch == '#') {
            while (pos_ < source_.size() && source_[pos_] != '\n') ++pos_;
        } else {
            break;
        }
    }
    current_ = Token{};
    current_.offset = pos_;
    if (pos_ >= source_.size()) {
        current_.kind = Token::Kind::End;
        return;
    }
    char ch = source_[pos_];
    auto single = [&](Token::Kind kind) {
        current_.kind = kind;
        current_.text = std::string(1, ch);
        ++pos_;
    };
    switch (ch) {
        case '(': return single(Token::Kind::LParen);
        case ')': return single(Token::Kind::RParen);
        case '[': return single(Token::Kind::LBracket);
        case ']': return single(Token::Kind::RBracket);
        case '{': return single(Token::Kind::LBrace);
        case '}': return single(Token::Kind::RBrace);
        case ',': return single(Token::Kind::Comma);
        case ';': return single(Token::Kind::Semicolon);
        case ':': return single(Token::Kind::Colon);
        case '=': return single(Token::Kind::Equals);
        default: break;
    }
    if (ch == '-' && pos_ + 1 < source_.size() && source_[pos_ + 1] == '>') {
        current_.kind = Token::Kind::Arrow;
        current_.text = "->";
        pos_ += 2;
        return;
    }
    std::size_t start = pos_;
    while (pos_ < source_.size()) {
        unsigned char c = static_cast<unsigned char>(source_[pos_]);
        if (!std::isalnum(c) && c != '_') break;
        ++pos_;
    }
    if (pos_ == start) {
        throw Error(ErrorKind::Parse, "unexpected character '" + std::string(1, ch) +
                                          "' at offset " + std::to_string(start));
    }
    current_.kind = Token::Kind::Atom;
    current_.text = std::string(source_.substr(start, pos_ - start));
}

}  // namespace operad
