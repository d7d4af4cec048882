#include "operad/colorseq.hpp"

#include <numeric>

#include "operad/error.hpp"
#include "operad/text.hpp"

namespace operad {

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (std::size_t idx : mapping_) {
        if (idx >= mapping_.size() || seen[idx]) {
            throw Error(ErrorKind::InvalidPermutation, to_string(*this) + " is not a bijection");
        }
        seen[idx] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), std::size_t{0});
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(mapping_.size());
    for (std::size_t k = 0; k < mapping_.size(); ++k) inv[mapping_[k]] = k;
    return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
    if (next.size() != size()) {
        throw Error(ErrorKind::LengthMismatch, "cannot chain permutations of sizes " +
                                                   std::to_string(size()) + " and " + std::to_string(next.size()));
    }
    std::vector<std::size_t> m(size());
    for (std::size_t k = 0; k < size(); ++k) m[k] = mapping_[next.mapping_[k]];
    return Permutation(std::move(m));
}

ColorSeq splice(const ColorSeq& c, std::size_t i, const ColorSeq& b) {
    if (i >= c.size()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "splice index " + std::to_string(i) + " on a sequence of length " + std::to_string(c.size()));
    }
    ColorSeq out;
    out.reserve(c.size() + b.size() - 1);
    out.insert(out.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin() + static_cast<std::ptrdiff_t>(i) + 1, c.end());
    return out;
}

ColorSeq apply_perm(const ColorSeq& c, const Permutation& sigma) {
    if (sigma.size() != c.size()) {
        throw Error(ErrorKind::LengthMismatch, "permutation of length " + std::to_string(sigma.size()) +
                                                   " applied to a sequence of length " + std::to_string(c.size()));
    }
    ColorSeq out;
    out.reserve(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) out.push_back(c[sigma[k]]);
    return out;
}

Code nth_color(const ColorSeq& c, std::size_t i) { return i < c.size() ? c[i] : Code::unit(); }

bool check_horizontal_splice_eq(const ColorSeq& c, const ColorSeq& a, const ColorSeq& b,
                                std::size_t i, std::size_t j) {
    if (c.size() < 2 || i >= j || j >= c.size()) {
        throw Error(ErrorKind::IndexOutOfRange, "horizontal splice needs |c| >= 2 and i < j < |c|");
    }
    const std::size_t l = a.size();
    return splice(splice(c, i, a), l - 1 + j, b) == splice(splice(c, j, b), i, a);
}

bool check_vertical_splice_eq(const ColorSeq& c, const ColorSeq& b, const ColorSeq& a,
                              std::size_t i, std::size_t j) {
    return splice(c, i, splice(b, j, a)) == splice(splice(c, i, b), i + j, a);
}

std::string to_string(const ColorSeq& c) {
    std::string out = "[";
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) out += ',';
        out += to_string(c[k]);
    }
    return out + "]";
}

ColorSeq parse_color_seq(Lexer& lexer) {
    ColorSeq out;
    lexer.expect(Token::Kind::LBracket);
    if (lexer.accept(Token::Kind::RBracket)) return out;
    do {
        out.push_back(parse_code(lexer));
    } while (lexer.accept(Token::Kind::Comma));
    lexer.expect(Token::Kind::RBracket);
    return out;
}

ColorSeq parse_color_seq(std::string_view text) {
    Lexer lexer(text);
    ColorSeq c = parse_color_seq(lexer);
    lexer.expect_end();
    return c;
}

std::string to_string(const Permutation& p) {
    std::string out = "[";
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(p[k]);
    }
    return out + "]";
}

Permutation parse_permutation(std::string_view text) {
    Lexer lexer(text);
    std::vector<std::size_t> m;
    lexer.expect(Token::Kind::LBracket);
    if (!lexer.accept(Token::Kind::RBracket)) {
        do {
            Token t = lexer.expect(Token::Kind::Atom);
            try {
                std::size_t used = 0;
                m.push_back(std::stoul(t.text, &used));
                if (used != t.text.size()) throw std::invalid_argument(t.text);
            } catch (const std::logic_error&) {
                throw Error(ErrorKind::Parse, "bad permutation index '" + t.text + "'");
            }
        } while (lexer.accept(Token::Kind::Comma));
        lexer.expect(Token::Kind::RBracket);
    }
    lexer.expect_end();
    return Permutation(std::move(m));
}

}  // namespace operad
