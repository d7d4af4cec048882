#include "operad/free_operad.hpp"

#include <algorithm>
#include <optional>

#include "operad/text.hpp"

namespace operad {

struct Tree::Node {
    Code color;
    std::optional<Generator> gen;
    std::vector<Tree> children;
    std::size_t leaf_count;
    std::size_t depth;
};

std::string to_string(const Generator& g) {
    return "gen " + g.name + " : (" + to_string(g.sig.inputs()) + ") -> " + to_string(g.sig.output());
}

Tree Tree::leaf(Code color) {
    return Tree(std::make_shared<const Node>(Node{std::move(color), std::nullopt, {}, 1, 0}));
}

Tree Tree::node(Generator gen, std::vector<Tree> children) {
    const ColorSeq& in = gen.sig.inputs();
    if (children.size() != in.size()) {
        throw Error(ErrorKind::LengthMismatch, "generator " + gen.name + " takes " + std::to_string(in.size()) +
                                                   " children, got " + std::to_string(children.size()));
    }
    std::size_t leaves = 0;
    std::size_t depth = 0;
    for (std::size_t k = 0; k < children.size(); ++k) {
        if (!(children[k].color() == in[k])) {
            throw Error(ErrorKind::ColorMismatch, "child " + std::to_string(k) + " of " + gen.name + " outputs " +
                                                      to_string(children[k].color()) + " but the slot expects " +
                                                      to_string(in[k]));
        }
        leaves += children[k].leaf_count();
        depth = std::max(depth, children[k].depth());
    }
    Code color = gen.sig.output();
    return Tree(std::make_shared<const Node>(
        Node{std::move(color), std::move(gen), std::move(children), leaves, depth + 1}));
}

bool Tree::is_leaf() const noexcept { return !node_->gen.has_value(); }
const Code& Tree::color() const noexcept { return node_->color; }

const Generator& Tree::generator() const {
    if (is_leaf()) throw std::logic_error("a leaf has no generator");
    return *node_->gen;
}

const std::vector<Tree>& Tree::children() const { return node_->children; }
std::size_t Tree::leaf_count() const noexcept { return node_->leaf_count; }
std::size_t Tree::depth() const noexcept { return node_->depth; }

namespace {

void collect_leaves(const Tree& t, ColorSeq& out) {
    if (t.is_leaf()) {
        out.push_back(t.color());
        return;
    }
    for (const auto& child : t.children()) collect_leaves(child, out);
}

}  // namespace

ColorSeq Tree::leaves() const {
    ColorSeq out;
    out.reserve(leaf_count());
    collect_leaves(*this, out);
    return out;
}

Signature Tree::signature() const { return Signature(color(), leaves()); }

bool operator==(const Tree& a, const Tree& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_leaf() != b.is_leaf() || !(a.color() == b.color())) return false;
    if (a.is_leaf()) return true;
    return a.node_->leaf_count == b.node_->leaf_count && a.generator() == b.generator() &&
           a.children() == b.children();
}

std::string to_string(const Tree& t) {
    if (t.is_leaf()) return "leaf " + to_string(t.color());
    std::string out = "(" + t.generator().name;
    for (const auto& child : t.children()) out += " " + to_string(child);
    return out + ")";
}

Tree graft(const Tree& t, std::size_t i, const Tree& s) {
    if (i >= t.leaf_count()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "leaf " + std::to_string(i) + " of a tree with " + std::to_string(t.leaf_count()) + " leaves");
    }
    if (t.is_leaf()) {
        if (!(s.color() == t.color())) {
            throw Error(ErrorKind::ColorMismatch,
                        "leaf has color " + to_string(t.color()) + " but the grafted tree outputs " + to_string(s.color()));
        }
        return s;
    }
    std::vector<Tree> children = t.children();
    for (auto& child : children) {
        if (i < child.leaf_count()) {
            child = graft(child, i, s);
            return Tree::node(t.generator(), std::move(children));
        }
        i -= child.leaf_count();
    }
    throw std::logic_error("leaf count out of sync");
}

TreeView::TreeView(Tree t) : tree(std::move(t)), perm(Permutation::identity(tree.leaf_count())) {}

TreeView::TreeView(Tree t, Permutation p) : tree(std::move(t)), perm(std::move(p)) {
    if (perm.size() != tree.leaf_count()) {
        throw Error(ErrorKind::LengthMismatch, "view permutation of length " + std::to_string(perm.size()) +
                                                   " on a tree with " + std::to_string(tree.leaf_count()) + " leaves");
    }
}

Signature TreeView::signature() const { return Signature(tree.color(), apply_perm(tree.leaves(), perm)); }

std::string to_string(const TreeView& v) { return to_string(v.tree) + " @" + to_string(v.perm); }

TreeView tree_perm(const TreeView& v, const Permutation& sigma) {
    if (sigma.size() != v.perm.size()) {
        throw Error(ErrorKind::LengthMismatch, "permutation of length " + std::to_string(sigma.size()) +
                                                   " on a view with " + std::to_string(v.perm.size()) + " slots");
    }
    return TreeView(v.tree, v.perm.then(sigma));
}

TreeView tree_unperm(const TreeView& v, const Permutation& sigma) { return tree_perm(v, sigma.inverse()); }

TreeView graft_view(const TreeView& t, std::size_t i, const TreeView& s) {
    const std::size_t n = t.perm.size();
    const std::size_t m = s.perm.size();
    if (i >= n) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "slot " + std::to_string(i) + " of a view with " + std::to_string(n) + " slots");
    }
    const std::size_t anchor = t.perm[i];
    Tree grafted = graft(t.tree, anchor, s.tree);
    auto shift = [&](std::size_t p) { return p < anchor ? p : p + m - 1; };
    std::vector<std::size_t> mapping;
    mapping.reserve(n + m - 1);
    for (std::size_t k = 0; k < i; ++k) mapping.push_back(shift(t.perm[k]));
    for (std::size_t k = 0; k < m; ++k) mapping.push_back(anchor + s.perm[k]);
    for (std::size_t k = i + 1; k < n; ++k) mapping.push_back(shift(t.perm[k]));
    return TreeView(std::move(grafted), Permutation(std::move(mapping)));
}

FnEntry eval_hom(const Tree& t, const Environment& env) {
    if (t.is_leaf()) return fn_unit(t.color());
    const Generator& g = t.generator();
    auto it = env.find(g.name);
    if (it == env.end()) throw Error(ErrorKind::UnboundGenerator, "generator '" + g.name + "' has no entry");
    if (!(it->second.signature() == g.sig)) {
        throw Error(ErrorKind::SignatureMismatch, "generator '" + g.name + "' has signature " + to_string(g.sig) +
                                                      " but its entry has " + to_string(it->second.signature()));
    }
    FnEntry result = it->second;
    const auto& children = t.children();
    for (std::size_t k = children.size(); k > 0; --k) {
        result = fn_comp(result, k - 1, eval_hom(children[k - 1], env));
    }
    return result;
}

Tree parse_term(Lexer& lexer, const std::map<std::string, Generator>& generators) {
    if (lexer.accept_atom("leaf")) return Tree::leaf(parse_code(lexer));
    lexer.expect(Token::Kind::LParen);
    Token name = lexer.expect(Token::Kind::Atom);
    auto it = generators.find(name.text);
    if (it == generators.end()) {
        throw Error(ErrorKind::Parse,
                    "unknown generator '" + name.text + "' at offset " + std::to_string(name.offset));
    }
    std::vector<Tree> children;
    while (!lexer.accept(Token::Kind::RParen)) {
        if (lexer.at_end()) lexer.fail("unterminated term");
        children.push_back(parse_term(lexer, generators));
    }
    return Tree::node(it->second, std::move(children));
}

Tree parse_term(std::string_view text, const std::map<std::string, Generator>& generators) {
    Lexer lexer(text);
    Tree t = parse_term(lexer, generators);
    lexer.expect_end();
    return t;
}

Generator parse_generator(Lexer& lexer) {
    lexer.expect_atom("gen");
    std::string name = lexer.expect(Token::Kind::Atom).text;
    lexer.expect(Token::Kind::Colon);
    lexer.expect(Token::Kind::LParen);
    ColorSeq inputs = parse_color_seq(lexer);
    lexer.expect(Token::Kind::RParen);
    lexer.expect(Token::Kind::Arrow);
    Code output = parse_code(lexer);
    if (inputs.empty()) lexer.fail("generator '" + name + "' needs at least one input");
    return Generator{std::move(name), Signature(std::move(output), std::move(inputs))};
}

TreeView FreeOperad::retag(const TreeView& v, const Signature& sig) const {
    if (!(v.signature() == sig)) {
        throw Error(ErrorKind::SignatureMismatch,
                    "view has signature " + to_string(v.signature()) + ", cannot be tagged " + to_string(sig));
    }
    return v;
}

Generator FreeOperad::generator(const Signature& sig, std::size_t variant) const {
    return Generator{"g" + std::to_string(variant), sig};
}

Tree FreeOperad::sample_tree(const Code& output, const ColorSeq& inputs, std::size_t depth,
                             std::mt19937_64& rng) const {
    auto uniform = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    if (inputs.size() == 1 && inputs[0] == output && uniform(0, 2) == 0) return Tree::leaf(output);
    const std::size_t variant = uniform(0, variants_ - 1);
    if (depth == 0) {
        std::vector<Tree> leaves;
        for (const auto& c : inputs) leaves.push_back(Tree::leaf(c));
        return Tree::node(generator(Signature(output, inputs), variant), std::move(leaves));
    }
    // split the inputs into contiguous non-empty blocks, one per child
    const std::size_t n = inputs.size();
    const std::size_t blocks = uniform(1, n);
    std::vector<std::size_t> cuts;
    for (std::size_t k = 1; k < n; ++k) cuts.push_back(k);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(blocks - 1);
    cuts.push_back(0);
    cuts.push_back(n);
    std::sort(cuts.begin(), cuts.end());

    ColorSeq palette = inputs;
    palette.push_back(output);
    ColorSeq mids;
    std::vector<Tree> children;
    for (std::size_t b = 0; b + 1 < cuts.size(); ++b) {
        ColorSeq block(inputs.begin() + static_cast<std::ptrdiff_t>(cuts[b]),
                       inputs.begin() + static_cast<std::ptrdiff_t>(cuts[b + 1]));
        Code mid = palette[uniform(0, palette.size() - 1)];
        children.push_back(sample_tree(mid, block, uniform(0, depth - 1), rng));
        mids.push_back(mid);
    }
    return Tree::node(generator(Signature(output, mids), variant), std::move(children));
}

TreeView FreeOperad::sample(const Signature& sig, std::mt19937_64& rng) const {
    const std::size_t n = sig.arity();
    std::vector<std::size_t> m(n);
    for (std::size_t k = 0; k < n; ++k) m[k] = k;
    std::shuffle(m.begin(), m.end(), rng);
    Permutation perm(std::move(m));
    ColorSeq leaves(n);
    for (std::size_t k = 0; k < n; ++k) leaves[perm[k]] = sig.inputs()[k];
    std::size_t depth = std::uniform_int_distribution<std::size_t>(0, max_depth_)(rng);
    return TreeView(sample_tree(sig.output(), leaves, depth, rng), std::move(perm));
}

}  // namespace operad
