#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace operad {

class Lexer;

/// Base type sigils. The set is closed: N (naturals), U (unit), B (booleans).
enum class Sigil : std::uint8_t { N, U, B };

/// A code in the type universe: a base sigil, a product of two codes, or a
/// function space between two codes. Codes are immutable and compared
/// structurally. A default-constructed code is the unit code, which doubles
/// as the default color for out-of-range sequence access.
class Code {
public:
    enum class Kind : std::uint8_t { Ty, Prod, Fn };

    Code() = default;

    static Code ty(Sigil sigil);
    static Code prod(Code left, Code right);
    static Code fn(Code dom, Code cod);

    static Code nat() { return ty(Sigil::N); }
    static Code unit() { return ty(Sigil::U); }
    static Code boolean() { return ty(Sigil::B); }

    Kind kind() const noexcept { return kind_; }
    Sigil sigil() const noexcept { return sigil_; }
    bool is(Sigil s) const noexcept { return kind_ == Kind::Ty && sigil_ == s; }

    /// Left factor of a product, or domain of a function code.
    const Code& left() const;
    /// Right factor of a product, or codomain of a function code.
    const Code& right() const;

    /// Base codes have depth 0.
    std::size_t depth() const noexcept;

    friend bool operator==(const Code& a, const Code& b) noexcept;
    friend std::strong_ordering operator<=>(const Code& a, const Code& b) noexcept;

private:
    struct Children;

    Kind kind_ = Kind::Ty;
    Sigil sigil_ = Sigil::U;
    std::shared_ptr<const Children> children_;
};

/// Canonical text form: "N", "(p N B)", "(fn B U)".
std::string to_string(const Code& code);

/// Renders the denotation of a code, e.g. "(ℕ × ℕ)" or "(𝔹 → 𝟙)".
std::string interp_doc(const Code& code);

Code parse_code(Lexer& lexer);
Code parse_code(std::string_view text);

/// Every code of depth at most `max_depth`, shallowest first.
std::vector<Code> codes_up_to_depth(std::size_t max_depth);

inline constexpr std::size_t kDefaultEnumCeiling = 100000;

/// A runtime inhabitant of an interpreted code. Function values are finite
/// tables keyed by the full enumeration of their domain.
class Value {
public:
    enum class Kind : std::uint8_t { Nat, Unit, Bool, Pair, Table };
    using TableEntries = std::vector<std::pair<Value, Value>>;

    Value() = default;

    static Value nat(std::uint64_t n);
    static Value unit();
    static Value boolean(bool b);
    static Value pair(Value first, Value second);
    /// Entries are sorted by key; duplicate keys are rejected.
    static Value table(Code dom, Code cod, TableEntries entries);

    Kind kind() const noexcept { return kind_; }
    std::uint64_t as_nat() const;
    bool as_bool() const;
    const Value& first() const;
    const Value& second() const;
    const Code& table_dom() const;
    const Code& table_cod() const;
    const TableEntries& table_entries() const;
    /// Applies a table value to an argument.
    const Value& lookup(const Value& key) const;

    friend bool operator==(const Value& a, const Value& b) noexcept;
    friend std::strong_ordering operator<=>(const Value& a, const Value& b) noexcept;

private:
    struct Composite;

    Kind kind_ = Kind::Unit;
    std::uint64_t scalar_ = 0;
    std::shared_ptr<const Composite> composite_;
};

/// Canonical text form: "3", "unit", "true", "(pair 1 true)",
/// "(table ((false true) (true false)))".
std::string to_string(const Value& value);

bool inhabits(const Value& value, const Code& code);

/// Number of inhabitants of `code` with naturals below `nat_bound`.
/// Saturates at SIZE_MAX.
std::size_t cardinality(const Code& code, std::size_t nat_bound);

/// Every inhabitant of `code` with naturals in [0, nat_bound), in a
/// deterministic order that coincides with Value ordering. Throws
/// ExponentialBlowup when the count would exceed `ceiling`.
std::vector<Value> enumerate(const Code& code, std::size_t nat_bound,
                             std::size_t ceiling = kDefaultEnumCeiling);

/// Position of `value` inside enumerate(code, nat_bound). Throws
/// OutsideDomain if the value is not such an inhabitant.
std::size_t rank(const Value& value, const Code& code, std::size_t nat_bound);

/// Parses a value literal of the given code. Table literals must list every
/// key of the domain enumeration at `nat_bound`.
Value parse_value(Lexer& lexer, const Code& code, std::size_t nat_bound);
Value parse_value(std::string_view text, const Code& code, std::size_t nat_bound);

}  // namespace operad
