#include "operad/universe.hpp"

#include <algorithm>
#include <limits>

#include "operad/error.hpp"
#include "operad/text.hpp"

namespace operad {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_mul(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

std::size_t sat_pow(std::size_t base, std::size_t exp) {
    std::size_t result = 1;
    for (std::size_t k = 0; k < exp; ++k) {
        result = sat_mul(result, base);
        if (result == kSaturated) break;
    }
    return result;
}

std::string_view sigil_name(Sigil s) {
    switch (s) {
        case Sigil::N: return "N";
        case Sigil::U: return "U";
        case Sigil::B: return "B";
    }
    return "?";
}

}  // namespace

// ---------------------------------------------------------------------------
// Code

struct Code::Children {
    Code left;
    Code right;
    std::size_t depth;
};

Code Code::ty(Sigil sigil) {
    Code c;
    c.kind_ = Kind::Ty;
    c.sigil_ = sigil;
    return c;
}

Code Code::prod(Code left, Code right) {
    Code c;
    c.kind_ = Kind::Prod;
    std::size_t d = 1 + std::max(left.depth(), right.depth());
    c.children_ = std::make_shared<const Children>(Children{std::move(left), std::move(right), d});
    return c;
}

Code Code::fn(Code dom, Code cod) {
    Code c;
    c.kind_ = Kind::Fn;
    std::size_t d = 1 + std::max(dom.depth(), cod.depth());
    c.children_ = std::make_shared<const Children>(Children{std::move(dom), std::move(cod), d});
    return c;
}

const Code& Code::left() const {
    if (!children_) throw std::logic_error("base code has no left component");
    return children_->left;
}

const Code& Code::right() const {
    if (!children_) throw std::logic_error("base code has no right component");
    return children_->right;
}

std::size_t Code::depth() const noexcept { return children_ ? children_->depth : 0; }

bool operator==(const Code& a, const Code& b) noexcept { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Code& a, const Code& b) noexcept {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (a.kind_ == Code::Kind::Ty) return a.sigil_ <=> b.sigil_;
    if (a.children_ == b.children_) return std::strong_ordering::equal;
    if (auto c = a.children_->left <=> b.children_->left; c != 0) return c;
    return a.children_->right <=> b.children_->right;
}

std::string to_string(const Code& code) {
    switch (code.kind()) {
        case Code::Kind::Ty: return std::string(sigil_name(code.sigil()));
        case Code::Kind::Prod: return "(p " + to_string(code.left()) + " " + to_string(code.right()) + ")";
        case Code::Kind::Fn: return "(fn " + to_string(code.left()) + " " + to_string(code.right()) + ")";
    }
    return "?";
}

std::string interp_doc(const Code& code) {
    switch (code.kind()) {
        case Code::Kind::Ty:
            switch (code.sigil()) {
                case Sigil::N: return "ℕ";
                case Sigil::U: return "𝟙";
                case Sigil::B: return "𝔹";
            }
            break;
        case Code::Kind::Prod: return "(" + interp_doc(code.left()) + " × " + interp_doc(code.right()) + ")";
        case Code::Kind::Fn: return "(" + interp_doc(code.left()) + " → " + interp_doc(code.right()) + ")";
    }
    return "?";
}

Code parse_code(Lexer& lexer) {
    if (lexer.accept(Token::Kind::LParen)) {
        Token head = lexer.expect(Token::Kind::Atom);
        if (head.text != "p" && head.text != "fn") {
            throw Error(ErrorKind::Parse, "unknown code constructor '" + head.text + "' at offset " +
                                              std::to_string(head.offset));
        }
        Code left = parse_code(lexer);
        Code right = parse_code(lexer);
        lexer.expect(Token::Kind::RParen);
        return head.text == "p" ? Code::prod(std::move(left), std::move(right))
                                : Code::fn(std::move(left), std::move(right));
    }
    if (lexer.peek().kind != Token::Kind::Atom) lexer.fail("expected a code");
    Token t = lexer.next();
    if (t.text == "N") return Code::nat();
    if (t.text == "U") return Code::unit();
    if (t.text == "B") return Code::boolean();
    throw Error(ErrorKind::Parse, "unknown sigil '" + t.text + "' at offset " + std::to_string(t.offset));
}

Code parse_code(std::string_view text) {
    Lexer lexer(text);
    Code c = parse_code(lexer);
    lexer.expect_end();
    return c;
}

std::vector<Code> codes_up_to_depth(std::size_t max_depth) {
    std::vector<Code> all = {Code::nat(), Code::unit(), Code::boolean()};
    std::size_t prev_end = 0;
    for (std::size_t d = 1; d <= max_depth; ++d) {
        std::size_t end = all.size();
        std::vector<Code> fresh;
        for (std::size_t a = 0; a < end; ++a) {
            for (std::size_t b = 0; b < end; ++b) {
                // at least one side must be from the previous layer
                if (a < prev_end && b < prev_end) continue;
                fresh.push_back(Code::prod(all[a], all[b]));
                fresh.push_back(Code::fn(all[a], all[b]));
            }
        }
        prev_end = end;
        all.insert(all.end(), fresh.begin(), fresh.end());
    }
    return all;
}

// ---------------------------------------------------------------------------
// Value

struct Value::Composite {
    Value first;
    Value second;
    Code dom;
    Code cod;
    TableEntries entries;
};

Value Value::nat(std::uint64_t n) {
    Value v;
    v.kind_ = Kind::Nat;
    v.scalar_ = n;
    return v;
}

Value Value::unit() { return Value{}; }

Value Value::boolean(bool b) {
    Value v;
    v.kind_ = Kind::Bool;
    v.scalar_ = b ? 1 : 0;
    return v;
}

Value Value::pair(Value first, Value second) {
    Value v;
    v.kind_ = Kind::Pair;
    v.composite_ = std::make_shared<const Composite>(Composite{std::move(first), std::move(second), {}, {}, {}});
    return v;
}

Value Value::table(Code dom, Code cod, TableEntries entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    auto dup = std::adjacent_find(entries.begin(), entries.end(),
                                  [](const auto& a, const auto& b) { return a.first == b.first; });
    if (dup != entries.end()) {
        throw Error(ErrorKind::Parse, "duplicate table key " + to_string(dup->first));
    }
    Value v;
    v.kind_ = Kind::Table;
    v.composite_ = std::make_shared<const Composite>(
        Composite{{}, {}, std::move(dom), std::move(cod), std::move(entries)});
    return v;
}

std::uint64_t Value::as_nat() const {
    if (kind_ != Kind::Nat) throw std::logic_error("value is not a natural");
    return scalar_;
}

bool Value::as_bool() const {
    if (kind_ != Kind::Bool) throw std::logic_error("value is not a boolean");
    return scalar_ != 0;
}

const Value& Value::first() const {
    if (kind_ != Kind::Pair) throw std::logic_error("value is not a pair");
    return composite_->first;
}

const Value& Value::second() const {
    if (kind_ != Kind::Pair) throw std::logic_error("value is not a pair");
    return composite_->second;
}

const Code& Value::table_dom() const {
    if (kind_ != Kind::Table) throw std::logic_error("value is not a table");
    return composite_->dom;
}

const Code& Value::table_cod() const {
    if (kind_ != Kind::Table) throw std::logic_error("value is not a table");
    return composite_->cod;
}

const Value::TableEntries& Value::table_entries() const {
    if (kind_ != Kind::Table) throw std::logic_error("value is not a table");
    return composite_->entries;
}

const Value& Value::lookup(const Value& key) const {
    const auto& entries = table_entries();
    auto it = std::lower_bound(entries.begin(), entries.end(), key,
                               [](const auto& entry, const Value& k) { return entry.first < k; });
    if (it == entries.end() || it->first != key) {
        throw Error(ErrorKind::OutsideDomain, "table has no entry for " + to_string(key));
    }
    return it->second;
}

bool operator==(const Value& a, const Value& b) noexcept { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Value& a, const Value& b) noexcept {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    switch (a.kind_) {
        case Value::Kind::Nat:
        case Value::Kind::Bool:
        case Value::Kind::Unit:
            return a.scalar_ <=> b.scalar_;
        case Value::Kind::Pair:
            if (a.composite_ == b.composite_) return std::strong_ordering::equal;
            if (auto c = a.composite_->first <=> b.composite_->first; c != 0) return c;
            return a.composite_->second <=> b.composite_->second;
        case Value::Kind::Table: {
            if (a.composite_ == b.composite_) return std::strong_ordering::equal;
            if (auto c = a.composite_->dom <=> b.composite_->dom; c != 0) return c;
            if (auto c = a.composite_->cod <=> b.composite_->cod; c != 0) return c;
            const auto& ea = a.composite_->entries;
            const auto& eb = b.composite_->entries;
            std::size_t n = std::min(ea.size(), eb.size());
            for (std::size_t k = 0; k < n; ++k) {
                if (auto c = ea[k].first <=> eb[k].first; c != 0) return c;
                if (auto c = ea[k].second <=> eb[k].second; c != 0) return c;
            }
            return ea.size() <=> eb.size();
        }
    }
    return std::strong_ordering::equal;
}

std::string to_string(const Value& value) {
    switch (value.kind()) {
        case Value::Kind::Nat: return std::to_string(value.as_nat());
        case Value::Kind::Unit: return "unit";
        case Value::Kind::Bool: return value.as_bool() ? "true" : "false";
        case Value::Kind::Pair:
            return "(pair " + to_string(value.first()) + " " + to_string(value.second()) + ")";
        case Value::Kind::Table: {
            std::string out = "(table (";
            bool first = true;
            for (const auto& [k, v] : value.table_entries()) {
                if (!first) out += ' ';
                first = false;
                out += "(" + to_string(k) + " " + to_string(v) + ")";
            }
            return out + "))";
        }
    }
    return "?";
}

bool inhabits(const Value& value, const Code& code) {
    switch (code.kind()) {
        case Code::Kind::Ty:
            switch (code.sigil()) {
                case Sigil::N: return value.kind() == Value::Kind::Nat;
                case Sigil::U: return value.kind() == Value::Kind::Unit;
                case Sigil::B: return value.kind() == Value::Kind::Bool;
            }
            return false;
        case Code::Kind::Prod:
            return value.kind() == Value::Kind::Pair && inhabits(value.first(), code.left()) &&
                   inhabits(value.second(), code.right());
        case Code::Kind::Fn:
            if (value.kind() != Value::Kind::Table) return false;
            if (value.table_dom() != code.left() || value.table_cod() != code.right()) return false;
            return std::all_of(value.table_entries().begin(), value.table_entries().end(),
                               [&](const auto& e) {
                                   return inhabits(e.first, code.left()) && inhabits(e.second, code.right());
                               });
    }
    return false;
}

std::size_t cardinality(const Code& code, std::size_t nat_bound) {
    switch (code.kind()) {
        case Code::Kind::Ty:
            switch (code.sigil()) {
                case Sigil::N: return nat_bound;
                case Sigil::U: return 1;
                case Sigil::B: return 2;
            }
            return 0;
        case Code::Kind::Prod:
            return sat_mul(cardinality(code.left(), nat_bound), cardinality(code.right(), nat_bound));
        case Code::Kind::Fn: {
            std::size_t dom = cardinality(code.left(), nat_bound);
            std::size_t cod = cardinality(code.right(), nat_bound);
            if (dom == kSaturated) return cod <= 1 ? cod : kSaturated;
            return sat_pow(cod, dom);
        }
    }
    return 0;
}

std::vector<Value> enumerate(const Code& code, std::size_t nat_bound, std::size_t ceiling) {
    if (nat_bound == 0) throw Error(ErrorKind::PreconditionViolated, "nat_bound must be at least 1");
    std::size_t count = cardinality(code, nat_bound);
    if (count > ceiling) {
        throw Error(ErrorKind::ExponentialBlowup, "enumerating " + to_string(code) + " needs " +
                                                      (count == kSaturated ? "too many" : std::to_string(count)) +
                                                      " values, ceiling is " + std::to_string(ceiling));
    }
    std::vector<Value> out;
    out.reserve(count);
    switch (code.kind()) {
        case Code::Kind::Ty:
            switch (code.sigil()) {
                case Sigil::N:
                    for (std::size_t n = 0; n < nat_bound; ++n) out.push_back(Value::nat(n));
                    break;
                case Sigil::U: out.push_back(Value::unit()); break;
                case Sigil::B:
                    out.push_back(Value::boolean(false));
                    out.push_back(Value::boolean(true));
                    break;
            }
            break;
        case Code::Kind::Prod: {
            auto lefts = enumerate(code.left(), nat_bound, ceiling);
            auto rights = enumerate(code.right(), nat_bound, ceiling);
            for (const auto& l : lefts)
                for (const auto& r : rights) out.push_back(Value::pair(l, r));
            break;
        }
        case Code::Kind::Fn: {
            auto keys = enumerate(code.left(), nat_bound, ceiling);
            auto outs = enumerate(code.right(), nat_bound, ceiling);
            if (outs.empty()) break;
            // odometer over output choices, first key most significant
            std::vector<std::size_t> digits(keys.size(), 0);
            while (true) {
                Value::TableEntries entries;
                entries.reserve(keys.size());
                for (std::size_t k = 0; k < keys.size(); ++k) entries.emplace_back(keys[k], outs[digits[k]]);
                out.push_back(Value::table(code.left(), code.right(), std::move(entries)));
                std::size_t pos = keys.size();
                while (pos > 0) {
                    --pos;
                    if (++digits[pos] < outs.size()) break;
                    digits[pos] = 0;
                    if (pos == 0) return out;
                }
                if (keys.empty()) break;
            }
            break;
        }
    }
    return out;
}

std::size_t rank(const Value& value, const Code& code, std::size_t nat_bound) {
    auto outside = [&]() -> Error {
        return Error(ErrorKind::OutsideDomain,
                     to_string(value) + " is not an enumerated inhabitant of " + to_string(code) +
                         " at nat bound " + std::to_string(nat_bound));
    };
    switch (code.kind()) {
        case Code::Kind::Ty:
            switch (code.sigil()) {
                case Sigil::N:
                    if (value.kind() != Value::Kind::Nat || value.as_nat() >= nat_bound) throw outside();
                    return static_cast<std::size_t>(value.as_nat());
                case Sigil::U:
                    if (value.kind() != Value::Kind::Unit) throw outside();
                    return 0;
                case Sigil::B:
                    if (value.kind() != Value::Kind::Bool) throw outside();
                    return value.as_bool() ? 1 : 0;
            }
            break;
        case Code::Kind::Prod:
            if (value.kind() != Value::Kind::Pair) throw outside();
            return rank(value.first(), code.left(), nat_bound) * cardinality(code.right(), nat_bound) +
                   rank(value.second(), code.right(), nat_bound);
        case Code::Kind::Fn: {
            if (value.kind() != Value::Kind::Table || value.table_dom() != code.left() ||
                value.table_cod() != code.right()) {
                throw outside();
            }
            const auto& entries = value.table_entries();
            if (entries.size() != cardinality(code.left(), nat_bound)) throw outside();
            std::size_t radix = cardinality(code.right(), nat_bound);
            std::size_t r = 0;
            for (std::size_t k = 0; k < entries.size(); ++k) {
                if (rank(entries[k].first, code.left(), nat_bound) != k) throw outside();
                r = r * radix + rank(entries[k].second, code.right(), nat_bound);
            }
            return r;
        }
    }
    throw outside();
}

Value parse_value(Lexer& lexer, const Code& code, std::size_t nat_bound) {
    switch (code.kind()) {
        case Code::Kind::Ty: {
            if (lexer.peek().kind != Token::Kind::Atom) lexer.fail("expected a value of " + to_string(code));
            Token t = lexer.peek();
            if (code.is(Sigil::U) && t.text == "unit") {
                lexer.next();
                return Value::unit();
            }
            if (code.is(Sigil::B) && (t.text == "true" || t.text == "false")) {
                lexer.next();
                return Value::boolean(t.text == "true");
            }
            if (code.is(Sigil::N) && std::all_of(t.text.begin(), t.text.end(), [](char c) {
                    return c >= '0' && c <= '9';
                })) {
                lexer.next();
                try {
                    return Value::nat(std::stoull(t.text));
                } catch (const std::out_of_range&) {
                    lexer.fail("natural literal too large");
                }
            }
            lexer.fail("expected a value of " + to_string(code));
        }
        case Code::Kind::Prod: {
            lexer.expect(Token::Kind::LParen);
            lexer.expect_atom("pair");
            Value a = parse_value(lexer, code.left(), nat_bound);
            Value b = parse_value(lexer, code.right(), nat_bound);
            lexer.expect(Token::Kind::RParen);
            return Value::pair(std::move(a), std::move(b));
        }
        case Code::Kind::Fn: {
            lexer.expect(Token::Kind::LParen);
            lexer.expect_atom("table");
            lexer.expect(Token::Kind::LParen);
            Value::TableEntries entries;
            while (lexer.accept(Token::Kind::LParen)) {
                Value k = parse_value(lexer, code.left(), nat_bound);
                Value v = parse_value(lexer, code.right(), nat_bound);
                lexer.expect(Token::Kind::RParen);
                entries.emplace_back(std::move(k), std::move(v));
            }
            lexer.expect(Token::Kind::RParen);
            lexer.expect(Token::Kind::RParen);
            Value table = Value::table(code.left(), code.right(), std::move(entries));
            auto keys = enumerate(code.left(), nat_bound);
            const auto& parsed = table.table_entries();
            bool complete = parsed.size() == keys.size() &&
                            std::equal(keys.begin(), keys.end(), parsed.begin(),
                                       [](const Value& k, const auto& e) { return k == e.first; });
            if (!complete) {
                lexer.fail("table keys must be exactly the enumeration of " + to_string(code.left()) +
                           " at nat bound " + std::to_string(nat_bound));
            }
            return table;
        }
    }
    lexer.fail("unreachable");
}

Value parse_value(std::string_view text, const Code& code, std::size_t nat_bound) {
    Lexer lexer(text);
    Value v = parse_value(lexer, code, nat_bound);
    lexer.expect_end();
    return v;
}

}  // namespace operad
