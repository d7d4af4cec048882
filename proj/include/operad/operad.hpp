#pragma once

#include <concepts>
#include <cstddef>
#include <random>
#include <string>
#include <utility>

#include "operad/colorseq.hpp"
#include "operad/error.hpp"
#include "operad/universe.hpp"

namespace operad {

/// Enumeration limits for extensional equality and sampling.
struct Budget {
    std::size_t nat_bound = 3;
    std::size_t enum_ceiling = kDefaultEnumCeiling;
};

/// Output color plus a non-empty sequence of input colors; indexes every
/// entry set O(d; c).
class Signature {
public:
    /// Throws PreconditionViolated when `inputs` is empty.
    Signature(Code output, ColorSeq inputs);

    const Code& output() const noexcept { return output_; }
    const ColorSeq& inputs() const noexcept { return inputs_; }
    std::size_t arity() const noexcept { return inputs_.size(); }

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    Code output_;
    ColorSeq inputs_;
};

/// "(N, [N,B])"
std::string to_string(const Signature& sig);
Signature parse_signature(Lexer& lexer);
Signature parse_signature(std::string_view text);

/// A checked equation source == target. The only way to obtain one is
/// make(), which refuses unequal endpoints, so holding a witness is proof
/// that casting along it cannot change what an entry means.
template <typename T>
class Witness {
public:
    static Witness make(T source, T target) {
        if (!(source == target)) {
            throw Error(ErrorKind::WitnessUnconstructible,
                        to_string(source) + " differs from " + to_string(target));
        }
        return Witness(std::move(source), std::move(target));
    }

    static Witness reflexive(const T& value) { return Witness(value, value); }

    const T& source() const noexcept { return source_; }
    const T& target() const noexcept { return target_; }

    /// Chains this witness (A = B) with `next` (B = C) into A = C.
    Witness then(const Witness& next) const { return make(source_, next.target_); }

private:
    Witness(T source, T target) : source_(std::move(source)), target_(std::move(target)) {}

    T source_;
    T target_;
};

using CastWitness = Witness<Signature>;
using SeqWitness = Witness<ColorSeq>;

/// An operad instance: entries indexed by signatures with units, a
/// permutation action in both directions, and slot-wise composition.
/// `equal` decides entry equality (extensionally or structurally, per
/// instance), `retag` moves an entry to an equal signature, `admissible`
/// tells the law harness whether entries of a signature are cheap enough to
/// sample and compare, and `sample` draws an entry of an exact signature.
template <typename O>
concept OperadInstance = requires(const O& o, const typename O::Entry& e, const Code& color,
                                  std::size_t slot, const Permutation& sigma, const Signature& sig,
                                  std::mt19937_64& rng) {
    typename O::Entry;
    { o.signature(e) } -> std::convertible_to<Signature>;
    { o.unit(color) } -> std::same_as<typename O::Entry>;
    { o.compose(e, slot, e) } -> std::same_as<typename O::Entry>;
    { o.permute(e, sigma) } -> std::same_as<typename O::Entry>;
    { o.unpermute(e, sigma) } -> std::same_as<typename O::Entry>;
    { o.equal(e, e) } -> std::same_as<bool>;
    { o.retag(e, sig) } -> std::same_as<typename O::Entry>;
    { o.admissible(sig) } -> std::same_as<bool>;
    { o.sample(sig, rng) } -> std::same_as<typename O::Entry>;
    { o.describe(e) } -> std::convertible_to<std::string>;
};

/// Moves `e` along `w`. The entry data is untouched; only its signature tag
/// changes (and the witness guarantees the tag is equal anyway).
template <OperadInstance O>
typename O::Entry cast(const O& o, const CastWitness& w, const typename O::Entry& e) {
    Signature actual = o.signature(e);
    if (!(actual == w.source())) {
        throw Error(ErrorKind::SignatureMismatch,
                    "cast expects " + to_string(w.source()) + " but entry has " + to_string(actual));
    }
    return o.retag(e, w.target());
}

/// Composition that validates the slot, the slot color, and the signature
/// of the result, which must be (d, c splice_i b).
template <OperadInstance O>
typename O::Entry checked_compose(const O& o, const typename O::Entry& outer, std::size_t slot,
                                  const typename O::Entry& inner) {
    Signature so = o.signature(outer);
    Signature si = o.signature(inner);
    if (slot >= so.arity()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "slot " + std::to_string(slot) + " on an entry of arity " + std::to_string(so.arity()));
    }
    if (!(si.output() == nth_color(so.inputs(), slot))) {
        throw Error(ErrorKind::ColorMismatch, "slot " + std::to_string(slot) + " has color " +
                                                  to_string(nth_color(so.inputs(), slot)) +
                                                  " but the inner entry outputs " + to_string(si.output()));
    }
    auto result = o.compose(outer, slot, inner);
    Signature expected(so.output(), splice(so.inputs(), slot, si.inputs()));
    Signature actual = o.signature(result);
    if (!(actual == expected)) {
        throw Error(ErrorKind::SignatureMismatch, "composite tagged " + to_string(actual) + ", expected " +
                                                      to_string(expected));
    }
    return result;
}

}  // namespace operad
