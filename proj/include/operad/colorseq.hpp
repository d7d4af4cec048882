#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "operad/universe.hpp"

namespace operad {

class Lexer;

/// An ordered sequence of colors (codes). Operad input sequences are
/// required to be non-empty; that is enforced by Signature, not here.
using ColorSeq = std::vector<Code>;

/// A bijection on {0, ..., n-1}. Position k of a permuted sequence holds
/// the entry at index mapping()[k] of the original.
class Permutation {
public:
    /// Throws InvalidPermutation unless `mapping` is a bijection.
    explicit Permutation(std::vector<std::size_t> mapping);
    Permutation(std::initializer_list<std::size_t> mapping)
        : Permutation(std::vector<std::size_t>(mapping)) {}

    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return mapping_.size(); }
    std::size_t operator[](std::size_t k) const { return mapping_[k]; }
    const std::vector<std::size_t>& mapping() const noexcept { return mapping_; }

    Permutation inverse() const;
    /// (p.then(q))[k] == p[q[k]]: applying p and then q to a sequence.
    Permutation then(const Permutation& next) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> mapping_;
};

/// First i entries of c, then all of b, then the last |c| - i - 1 entries of c.
ColorSeq splice(const ColorSeq& c, std::size_t i, const ColorSeq& b);

/// Result position k holds c[sigma[k]].
ColorSeq apply_perm(const ColorSeq& c, const Permutation& sigma);

/// Entry i of c, or the unit code when i is out of range.
Code nth_color(const ColorSeq& c, std::size_t i);

/// (c splice_i a) splice_{l-1+j} b  ==  (c splice_j b) splice_i a, with l = |a|.
/// Requires |c| >= 2 and i < j < |c|.
bool check_horizontal_splice_eq(const ColorSeq& c, const ColorSeq& a, const ColorSeq& b,
                                std::size_t i, std::size_t j);

/// c splice_i (b splice_j a)  ==  (c splice_i b) splice_{i+j} a.
bool check_vertical_splice_eq(const ColorSeq& c, const ColorSeq& b, const ColorSeq& a,
                              std::size_t i, std::size_t j);

/// "[N,(p N N),B]". Parsing accepts any whitespace.
std::string to_string(const ColorSeq& c);
ColorSeq parse_color_seq(Lexer& lexer);
ColorSeq parse_color_seq(std::string_view text);

std::string to_string(const Permutation& p);
Permutation parse_permutation(std::string_view text);

}  // namespace operad
