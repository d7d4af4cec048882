#include <gtest/gtest.h>

#include <random>

#include "operad/laws.hpp"
#include "support.hpp"

using namespace operad;
using operad::support::draw;

namespace {

const Code N = Code::nat();
const Code B = Code::boolean();

const Generator g{"g", Signature(N, {N, B})};
const Generator h{"h", Signature(B, {N})};

}  // namespace

TEST(Tree, NodeValidation) {
    EXPECT_THROW(Tree::node(g, {Tree::leaf(N)}), Error);
    EXPECT_THROW(Tree::node(g, {Tree::leaf(N), Tree::leaf(N)}), Error);
    Tree t = Tree::node(g, {Tree::leaf(N), Tree::leaf(B)});
    EXPECT_EQ(t.signature(), Signature(N, {N, B}));
    EXPECT_EQ(t.depth(), 1u);
    EXPECT_EQ(to_string(t), "(g leaf N leaf B)");
}

TEST(Graft, Examples) {
    Tree t = Tree::node(g, {Tree::leaf(N), Tree::leaf(B)});
    Tree s = Tree::node(h, {Tree::leaf(N)});
    Tree r = graft(t, 1, s);
    EXPECT_EQ(r, Tree::node(g, {Tree::leaf(N), s}));
    EXPECT_EQ(r.leaves(), (ColorSeq{N, N}));
    EXPECT_EQ(graft(Tree::leaf(N), 0, t), t);
    EXPECT_EQ(graft(t, 0, Tree::leaf(N)), t);
    EXPECT_EQ(graft(t, 1, Tree::leaf(B)), t);
    EXPECT_THROW(graft(t, 2, s), Error);
    EXPECT_THROW(graft(t, 0, s), Error);
}

TEST(Graft, LeavesAreSpliced) {
    std::mt19937_64 rng(21);
    support::Fixture fx(rng);
    for (int trial = 0; trial < 2000; ++trial) {
        Tree t = fx.tree(draw(rng, 0, 1) ? N : B, 4, rng);
        std::size_t i = draw(rng, 0, t.leaf_count() - 1);
        Tree s = fx.tree(t.leaves()[i], 3, rng);
        Tree r = graft(t, i, s);
        ASSERT_EQ(r.leaves(), splice(t.leaves(), i, s.leaves()));
        ASSERT_EQ(r.color(), t.color());
    }
}

TEST(TreeView, PermExamples) {
    Tree t = Tree::node(g, {Tree::leaf(N), Tree::leaf(B)});
    TreeView v(t);
    EXPECT_EQ(tree_perm(v, Permutation::identity(2)), v);
    TreeView swapped = tree_perm(v, Permutation{1, 0});
    EXPECT_EQ(swapped.signature(), Signature(N, {B, N}));
    EXPECT_EQ(tree_unperm(swapped, Permutation{1, 0}), v);
}

TEST(TreeView, GraftViewMatchesSplice) {
    FreeOperad o;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        Signature st(N, {N, B, N});
        TreeView t = o.sample(st, rng);
        std::size_t i = draw(rng, 0, 2);
        TreeView s = o.sample(Signature(st.inputs()[i], {B, B}), rng);
        TreeView r = o.compose(t, i, s);
        ASSERT_EQ(r.signature(), Signature(N, splice(st.inputs(), i, s.signature().inputs())));
        ASSERT_EQ(t.signature(), st);
    }
}

TEST(EvalHom, UnitAndSingleNode) {
    Budget budget;
    EXPECT_TRUE(fn_entry_eq(eval_hom(Tree::leaf(N), {}), fn_unit(N), budget));
    Generator sum2{"sum2", Signature(N, {N, N})};
    Environment env{{"sum2", fn_sum(2)}};
    EXPECT_TRUE(fn_entry_eq(eval_hom(Tree::node(sum2, {Tree::leaf(N), Tree::leaf(N)}), env), fn_sum(2), budget));
    EXPECT_THROW(eval_hom(Tree::node(sum2, {Tree::leaf(N), Tree::leaf(N)}), {}), Error);
    Environment wrong{{"sum2", fn_sum(3)}};
    EXPECT_THROW(eval_hom(Tree::node(sum2, {Tree::leaf(N), Tree::leaf(N)}), wrong), Error);
}

TEST(EvalHom, CommutesWithGraft) {
    std::mt19937_64 rng(8);
    support::Fixture fx(rng);
    int checked = 0;
    while (checked < 200) {
        Tree t = fx.tree(draw(rng, 0, 1) ? N : B, 3, rng);
        std::size_t i = draw(rng, 0, t.leaf_count() - 1);
        Tree s = fx.tree(t.leaves()[i], 2, rng);
        if (tuple_count(splice(t.leaves(), i, s.leaves()), 3) > 3000) continue;
        ASSERT_TRUE(support::homomorphism_holds(t, i, s, fx.env, fx.budget)) << to_string(t) << " / " << to_string(s);
        ++checked;
    }
}

TEST(TermText, RoundTrip) {
    std::map<std::string, Generator> gens{{"g", g}, {"h", h}};
    Tree t = parse_term("(g leaf N (h leaf N))", gens);
    EXPECT_EQ(t, Tree::node(g, {Tree::leaf(N), Tree::node(h, {Tree::leaf(N)})}));
    EXPECT_EQ(parse_term(to_string(t), gens), t);
    EXPECT_THROW(parse_term("(zz leaf N)", gens), Error);
    EXPECT_THROW(parse_term("(g leaf N leaf N)", gens), Error);
    EXPECT_EQ(to_string(g), "gen g : ([N,B]) -> N");
}

TEST(FreeOperad, LawSuitePasses) {
    LawConfig cfg;
    cfg.trials = 100;
    LawReport r = run_law_suite(FreeOperad{}, cfg);
    EXPECT_TRUE(r.ok()) << r.to_text("free");
}

TEST(FreeOperad, LawExamples) {
    FreeOperad o;
    std::mt19937_64 rng(3);
    TreeView alpha(Tree::node(g, {Tree::leaf(N), Tree::leaf(B)}));
    EXPECT_TRUE(check_left_unity(o, alpha));
    EXPECT_TRUE(check_right_unity(o, alpha, 1));
    TreeView beta = o.sample(Signature(N, {B, N}), rng);
    TreeView gamma = o.sample(Signature(B, {N}), rng);
    EXPECT_TRUE(check_horizontal_assoc(o, alpha, beta, gamma, 0, 1));
    EXPECT_TRUE(check_vertical_assoc(o, alpha, beta, o.sample(Signature(B, {B, B}), rng), 0, 0));
}
