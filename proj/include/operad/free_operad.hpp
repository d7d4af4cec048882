#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "operad/fn_operad.hpp"
#include "operad/operad.hpp"

namespace operad {

struct Generator {
    std::string name;
    Signature sig;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// "gen g : ([N,B]) -> N"
std::string to_string(const Generator& g);

/// A planar colored tree over generators. Leaf(c) is the c-colored unit;
/// a node's k-th child outputs the generator's k-th input color.
class Tree {
public:
    static Tree leaf(Code color);
    /// Throws LengthMismatch on a wrong child count, ColorMismatch when a
    /// child's output color differs from the generator's input color.
    static Tree node(Generator gen, std::vector<Tree> children);

    bool is_leaf() const noexcept;
    /// Root output color.
    const Code& color() const noexcept;
    const Generator& generator() const;
    const std::vector<Tree>& children() const;

    std::size_t leaf_count() const noexcept;
    std::size_t depth() const noexcept;
    /// Leaf colors, left to right.
    ColorSeq leaves() const;
    Signature signature() const;

    friend bool operator==(const Tree& a, const Tree& b);

private:
    struct Node;
    explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// "(g leaf N (h leaf N))"
std::string to_string(const Tree& t);

/// Replaces the i-th leaf (left to right) of t with s.
/// Throws IndexOutOfRange or ColorMismatch.
Tree graft(const Tree& t, std::size_t i, const Tree& s);

/// A tree with its leaves reindexed by a permutation: slot k of the view is
/// leaf perm[k] of the tree, so the view's inputs are apply_perm(leaves, perm).
struct TreeView {
    Tree tree;
    Permutation perm;

    explicit TreeView(Tree t);
    TreeView(Tree t, Permutation p);

    Signature signature() const;

    friend bool operator==(const TreeView&, const TreeView&) = default;
};

std::string to_string(const TreeView& v);

/// View whose inputs are apply_perm(view inputs, sigma).
TreeView tree_perm(const TreeView& v, const Permutation& sigma);
/// Inverse of tree_perm(., sigma).
TreeView tree_unperm(const TreeView& v, const Permutation& sigma);
/// Grafts s into slot i of t, composing the leaf reindexings.
TreeView graft_view(const TreeView& t, std::size_t i, const TreeView& s);

using Environment = std::map<std::string, FnEntry>;

/// Interprets a tree in the function operad: leaves become units, and a node
/// becomes its generator's entry with each child's interpretation grafted in,
/// from the last slot to the first. Throws UnboundGenerator or
/// SignatureMismatch.
FnEntry eval_hom(const Tree& t, const Environment& env);

/// Tree parser. `term := "(" name term* ")" | "leaf" code`.
Tree parse_term(Lexer& lexer, const std::map<std::string, Generator>& generators);
Tree parse_term(std::string_view text, const std::map<std::string, Generator>& generators);

/// "gen <name> : ([<codes>]) -> <code>"
Generator parse_generator(Lexer& lexer);

/// The free operad on an implicit generator family: for every signature and
/// each variant index below `variants` there is one generator. Entries are
/// tree views compared structurally.
class FreeOperad {
public:
    using Entry = TreeView;

    explicit FreeOperad(std::size_t max_depth = 3, std::size_t variants = 2)
        : max_depth_(max_depth), variants_(variants) {}

    Signature signature(const TreeView& v) const { return v.signature(); }
    TreeView unit(const Code& c) const { return TreeView(Tree::leaf(c)); }
    TreeView compose(const TreeView& t, std::size_t i, const TreeView& s) const { return graft_view(t, i, s); }
    TreeView permute(const TreeView& v, const Permutation& sigma) const { return tree_perm(v, sigma); }
    TreeView unpermute(const TreeView& v, const Permutation& sigma) const { return tree_unperm(v, sigma); }
    bool equal(const TreeView& a, const TreeView& b) const { return a == b; }
    TreeView retag(const TreeView& v, const Signature& sig) const;
    bool admissible(const Signature&) const { return true; }
    /// A random view of exactly this signature.
    TreeView sample(const Signature& sig, std::mt19937_64& rng) const;
    std::string describe(const TreeView& v) const { return to_string(v); }

    /// The generator with this signature and variant index.
    Generator generator(const Signature& sig, std::size_t variant) const;
    /// A random tree whose leaves are exactly `inputs` and root outputs `output`.
    Tree sample_tree(const Code& output, const ColorSeq& inputs, std::size_t depth, std::mt19937_64& rng) const;

private:
    std::size_t max_depth_;
    std::size_t variants_;
};

}  // namespace operad
