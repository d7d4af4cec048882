#pragma once

#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "operad/fn_operad.hpp"
#include "operad/free_operad.hpp"

namespace operad::support {

inline std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// A small generator family over N and B, each bound to a random table.
struct Fixture {
    std::map<std::string, Generator> generators;
    Environment env;
    Budget budget{3, kDefaultEnumCeiling};

    explicit Fixture(std::mt19937_64& rng) {
        const Code N = Code::nat(), B = Code::boolean();
        add("a", Signature(N, {N, N}), rng);
        add("b", Signature(N, {N}), rng);
        add("c", Signature(B, {N, B}), rng);
        add("d", Signature(N, {B, N}), rng);
        add("e", Signature(B, {B}), rng);
        add("f", Signature(N, {B}), rng);
    }

    void add(const std::string& name, const Signature& sig, std::mt19937_64& rng) {
        generators.emplace(name, Generator{name, sig});
        env.emplace(name, fn_random_table(sig, rng, budget).relabeled(name));
    }

    /// Random tree with the given output color and depth at most `depth`.
    Tree tree(const Code& out, std::size_t depth, std::mt19937_64& rng) const {
        std::vector<const Generator*> fitting;
        for (const auto& [name, g] : generators)
            if (g.sig.output() == out) fitting.push_back(&g);
        if (depth == 0 || draw(rng, 0, 3) == 0) return Tree::leaf(out);
        const Generator& g = *fitting[draw(rng, 0, fitting.size() - 1)];
        std::vector<Tree> children;
        for (const auto& c : g.sig.inputs()) children.push_back(tree(c, depth - 1, rng));
        return Tree::node(g, std::move(children));
    }
};

/// Evaluates a tree directly on a leaf tuple, consuming arguments left to
/// right. Independent of fn_comp.
inline Value direct_eval(const Tree& t, const Environment& env, std::span<const Value> args, std::size_t& pos) {
    if (t.is_leaf()) return args[pos++];
    std::vector<Value> inner;
    for (const auto& child : t.children()) inner.push_back(direct_eval(child, env, args, pos));
    return env.at(t.generator().name)(inner);
}

inline Value direct_eval(const Tree& t, const Environment& env, std::span<const Value> args) {
    std::size_t pos = 0;
    return direct_eval(t, env, args, pos);
}

/// eval_hom(graft(t, i, s)) against the direct evaluation of t with slot i
/// fed by s. Returns false on the first disagreement.
inline bool homomorphism_holds(const Tree& t, std::size_t i, const Tree& s, const Environment& env,
                               const Budget& budget) {
    FnEntry grafted = eval_hom(graft(t, i, s), env);
    FnEntry composed = fn_comp(eval_hom(t, env), i, eval_hom(s, env));
    const std::size_t m = s.leaf_count();
    for (const auto& x : enumerate_tuples(grafted.signature().inputs(), budget)) {
        std::vector<Value> outer(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
        outer.push_back(direct_eval(s, env, std::span<const Value>(x).subspan(i, m)));
        outer.insert(outer.end(), x.begin() + static_cast<std::ptrdiff_t>(i + m), x.end());
        Value want = direct_eval(t, env, outer);
        if (grafted(x) != want || composed(x) != want) return false;
    }
    return true;
}

}  // namespace operad::support
