#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "operad/operad.hpp"

namespace operad {

/// An element of Type(d; c): a total map from input tuples (one value per
/// input color) to a value of the output color. The map is either a table
/// over the enumerated domain or a closed-form rule; equality is always
/// decided pointwise.
class FnEntry {
public:
    using Rule = std::function<Value(std::span<const Value>)>;

    FnEntry(Signature sig, Rule rule, std::string label = {});

    const Signature& signature() const noexcept { return sig_; }
    std::size_t arity() const noexcept { return sig_.arity(); }
    const std::string& label() const noexcept { return label_; }

    /// Evaluates without inhabitation checks. Throws LengthMismatch on the
    /// wrong number of arguments.
    Value operator()(std::span<const Value> args) const;
    Value operator()(std::initializer_list<Value> args) const {
        return (*this)(std::span<const Value>(args.begin(), args.size()));
    }

    /// Evaluates after checking each argument inhabits its input color, and
    /// checks the result inhabits the output color. Throws SignatureMismatch.
    Value apply(std::span<const Value> args) const;

    FnEntry relabeled(std::string label) const;

    /// Same rule under another signature tag.
    FnEntry retagged(Signature sig) const;

    /// True when both entries share the same underlying rule object.
    bool same_rule(const FnEntry& other) const noexcept { return rule_ == other.rule_; }

private:
    Signature sig_;
    std::shared_ptr<const Rule> rule_;
    std::string label_;
};

/// Identity on c, with signature (c, [c]).
FnEntry fn_unit(const Code& c);

/// (f o_i g)(x_0..x_{i-1}, y, x_{i+1}..) = f(x_0..x_{i-1}, g(y), x_{i+1}..).
/// Throws IndexOutOfRange or ColorMismatch.
FnEntry fn_comp(const FnEntry& f, std::size_t i, const FnEntry& g);

/// f' with signature (d, c sigma): f'(y) = f(z) where z[sigma[k]] = y[k].
FnEntry fn_perm(const FnEntry& f, const Permutation& sigma);
/// Inverse of fn_perm(., sigma).
FnEntry fn_unperm(const FnEntry& f, const Permutation& sigma);

/// Every tuple of the cartesian product of enumerate(c_k) in lexicographic
/// order. Throws ExponentialBlowup past the ceiling.
std::vector<std::vector<Value>> enumerate_tuples(const ColorSeq& inputs, const Budget& budget);
/// Number of such tuples, saturating.
std::size_t tuple_count(const ColorSeq& inputs, std::size_t nat_bound);

/// Pointwise equality over enumerate_tuples; false when signatures differ.
bool fn_entry_eq(const FnEntry& f, const FnEntry& g, const Budget& budget);

// Table-backed entries. Outputs are listed in enumerate_tuples order.
FnEntry fn_table(Signature sig, std::vector<Value> outputs, const Budget& budget, std::string label = {});
FnEntry fn_random_table(const Signature& sig, std::mt19937_64& rng, const Budget& budget);
/// Every entry of Type(d; c) as a table. Throws ExponentialBlowup.
std::vector<FnEntry> fn_all_entries(const Signature& sig, const Budget& budget);

// Closed-form fixtures.
FnEntry fn_sum(std::size_t arity);
FnEntry fn_prod(std::size_t arity);
/// Truncated subtraction on naturals: max(a - b, 0).
FnEntry fn_sub();
FnEntry fn_neg();
/// Projection onto slot k of `inputs`; output color inputs[k].
FnEntry fn_proj(const ColorSeq& inputs, std::size_t k);

/// The function operad over the code universe, as an OperadInstance.
class FnOperad {
public:
    using Entry = FnEntry;

    struct Options {
        /// Test hook: composites keep the outer entry's signature instead of
        /// being retagged to the spliced one.
        bool break_cast = false;
    };

    explicit FnOperad(Budget budget = {}) : budget_(budget) {}
    FnOperad(Budget budget, Options options) : budget_(budget), options_(options) {}

    const Budget& budget() const noexcept { return budget_; }

    Signature signature(const FnEntry& e) const { return e.signature(); }
    FnEntry unit(const Code& c) const { return fn_unit(c); }
    FnEntry compose(const FnEntry& f, std::size_t i, const FnEntry& g) const;
    FnEntry permute(const FnEntry& f, const Permutation& sigma) const { return fn_perm(f, sigma); }
    FnEntry unpermute(const FnEntry& f, const Permutation& sigma) const { return fn_unperm(f, sigma); }
    bool equal(const FnEntry& a, const FnEntry& b) const { return fn_entry_eq(a, b, budget_); }
    FnEntry retag(const FnEntry& e, const Signature& sig) const { return e.retagged(sig); }
    bool admissible(const Signature& sig) const;
    FnEntry sample(const Signature& sig, std::mt19937_64& rng) const { return fn_random_table(sig, rng, budget_); }
    std::vector<FnEntry> all_entries(const Signature& sig) const { return fn_all_entries(sig, budget_); }
    std::string describe(const FnEntry& e) const;

private:
    Budget budget_;
    Options options_;
};

FnOperad as_operad_instance(Budget budget, FnOperad::Options options = {});

}  // namespace operad
