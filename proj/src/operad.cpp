#include "operad/operad.hpp"

#include "operad/text.hpp"

namespace operad {

Signature::Signature(Code output, ColorSeq inputs) : output_(std::move(output)), inputs_(std::move(inputs)) {
    if (inputs_.empty()) {
        throw Error(ErrorKind::PreconditionViolated, "a signature needs at least one input color");
    }
}

std::string to_string(const Signature& sig) {
    return "(" + to_string(sig.output()) + ", " + to_string(sig.inputs()) + ")";
}

Signature parse_signature(Lexer& lexer) {
    lexer.expect(Token::Kind::LParen);
    Code out = parse_code(lexer);
    lexer.expect(Token::Kind::Comma);
    ColorSeq in = parse_color_seq(lexer);
    lexer.expect(Token::Kind::RParen);
    if (in.empty()) lexer.fail("a signature needs at least one input color");
    return Signature(std::move(out), std::move(in));
}

Signature parse_signature(std::string_view text) {
    Lexer lexer(text);
    Signature s = parse_signature(lexer);
    lexer.expect_end();
    return s;
}

}  // namespace operad
