#include <gtest/gtest.h>

#include <random>

#include "operad/fn_operad.hpp"
#include "operad/free_operad.hpp"
#include "operad/laws.hpp"

using namespace operad;

static_assert(OperadInstance<FnOperad>);
static_assert(OperadInstance<FreeOperad>);

namespace {

const Code N = Code::nat();
const Code B = Code::boolean();

ErrorKind kind_of(auto&& thunk) {
    try {
        thunk();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::Parse;
}

FnEntry succ() {
    return FnEntry(Signature(N, {N}), [](std::span<const Value> a) { return Value::nat(a[0].as_nat() + 1); },
                   "succ");
}

}  // namespace

TEST(Signature, RejectsEmptyInputs) {
    EXPECT_EQ(kind_of([] { Signature(N, {}); }), ErrorKind::PreconditionViolated);
    EXPECT_EQ(to_string(Signature(N, {N, B})), "(N, [N,B])");
    EXPECT_EQ(parse_signature("(N, [N, B])"), Signature(N, {N, B}));
}

TEST(Witness, OnlyBetweenEqualSignatures) {
    Signature s(N, {N});
    EXPECT_NO_THROW(CastWitness::make(s, Signature(N, {N})));
    EXPECT_EQ(kind_of([&] { CastWitness::make(s, Signature(B, {N})); }), ErrorKind::WitnessUnconstructible);
    EXPECT_EQ(kind_of([&] { SeqWitness::make({N}, {N, N}); }), ErrorKind::WitnessUnconstructible);
}

TEST(Cast, IdentityCompositionAndIrrelevance) {
    FnOperad o;
    FnEntry f = fn_sum(2);
    Signature s = f.signature();
    auto w1 = CastWitness::make(s, s);
    auto w2 = CastWitness::make(s, Signature(N, {N, N}));
    auto w3 = w1.then(w2);
    EXPECT_TRUE(o.equal(cast(o, CastWitness::reflexive(s), f), f));
    EXPECT_TRUE(o.equal(cast(o, w2, cast(o, w1, f)), cast(o, w3, f)));
    EXPECT_TRUE(o.equal(cast(o, w1, f), cast(o, w2, f)));
    EXPECT_EQ(kind_of([&] { cast(o, CastWitness::reflexive(Signature(N, {N})), f); }),
              ErrorKind::SignatureMismatch);
}

TEST(Cast, ApplyCommutesWithCast) {
    FnOperad o;
    FnEntry f = fn_sub();
    auto w = CastWitness::make(f.signature(), Signature(N, {N, N}));
    auto sw = SeqWitness::make(f.signature().inputs(), w.target().inputs());
    for (const auto& x : enumerate_tuples(sw.source(), o.budget())) {
        EXPECT_EQ(cast(o, w, f)(x), f(x));
    }
}

TEST(CheckedCompose, Errors) {
    FnOperad o;
    EXPECT_EQ(kind_of([&] { checked_compose(o, fn_sum(2), 2, fn_sum(2)); }), ErrorKind::IndexOutOfRange);
    EXPECT_EQ(kind_of([&] { checked_compose(o, fn_sum(2), 0, fn_neg()); }), ErrorKind::ColorMismatch);
    FnOperad broken(Budget{}, FnOperad::Options{true});
    EXPECT_EQ(kind_of([&] { checked_compose(broken, fn_sum(2), 0, fn_sum(3)); }), ErrorKind::SignatureMismatch);
}

TEST(HorizontalAssoc, SumMulSuccExample) {
    FnOperad o;
    FnEntry f = fn_sum(3), g = fn_prod(2), h = succ();
    EXPECT_TRUE(check_horizontal_assoc(o, f, g, h, 0, 2));
    // Both sides computed by hand: (x0*x1) + x2 + (x3 + 1).
    FnEntry lhs = checked_compose(o, checked_compose(o, f, 0, g), 3, h);
    FnEntry rhs = checked_compose(o, checked_compose(o, f, 2, h), 0, g);
    for (const auto& x : enumerate_tuples({N, N, N, N}, o.budget())) {
        std::uint64_t want = x[0].as_nat() * x[1].as_nat() + x[2].as_nat() + x[3].as_nat() + 1;
        ASSERT_EQ(lhs(x), Value::nat(want));
        ASSERT_EQ(rhs(x), Value::nat(want));
    }
    EXPECT_EQ(lhs({Value::nat(2), Value::nat(3), Value::nat(4), Value::nat(5)}), Value::nat(16));
    EXPECT_EQ(kind_of([&] { check_horizontal_assoc(o, f, g, h, 1, 1); }), ErrorKind::PreconditionViolated);
    EXPECT_EQ(kind_of([&] { check_horizontal_assoc(o, f, g, h, 0, 3); }), ErrorKind::PreconditionViolated);
    EXPECT_EQ(kind_of([&] { check_horizontal_assoc(o, f, fn_neg(), h, 0, 2); }),
              ErrorKind::PreconditionViolated);
}

TEST(VerticalAssoc, Examples) {
    FnOperad o;
    EXPECT_TRUE(check_vertical_assoc(o, fn_sum(3), fn_prod(2), succ(), 1, 0));
    EXPECT_TRUE(check_vertical_assoc(o, fn_sub(), fn_unit(N), fn_prod(2), 0, 0));
    EXPECT_EQ(kind_of([&] { check_vertical_assoc(o, fn_sum(3), fn_prod(2), succ(), 1, 2); }),
              ErrorKind::PreconditionViolated);
}

TEST(Unity, Examples) {
    FnOperad o;
    EXPECT_TRUE(check_left_unity(o, fn_neg()));
    EXPECT_TRUE(check_left_unity(o, fn_sum(3)));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(check_right_unity(o, fn_sum(3), i));
    EXPECT_TRUE(check_right_unity(o, fn_unit(B), 0));
    EXPECT_TRUE(check_right_unity(o, fn_sub(), 1));
    EXPECT_EQ(kind_of([&] { check_right_unity(o, fn_sub(), 2); }), ErrorKind::PreconditionViolated);
}

TEST(PermBijection, Examples) {
    FnOperad o;
    EXPECT_TRUE(check_perm_bijection(o, fn_sub(), Permutation::identity(2)));
    EXPECT_TRUE(o.equal(o.permute(fn_sub(), Permutation::identity(2)), fn_sub()));
    EXPECT_TRUE(check_perm_bijection(o, fn_sub(), Permutation{1, 0}));
    FnEntry swapped = o.permute(fn_sub(), Permutation{1, 0});
    EXPECT_EQ(swapped({Value::nat(2), Value::nat(5)}), Value::nat(3));
    EXPECT_EQ(kind_of([&] { check_perm_bijection(o, fn_sub(), Permutation{0, 1, 2}); }),
              ErrorKind::LengthMismatch);
}

TEST(LawConfig, ParseAndValidate) {
    LawConfig c = parse_law_config("# comment\ntrials = 20\nseed=9\n\nmax_arity = 3\n");
    EXPECT_EQ(c.trials, 20u);
    EXPECT_EQ(c.seed, 9u);
    EXPECT_EQ(c.max_arity, 3u);
    EXPECT_EQ(c.nat_bound, 3u);
    EXPECT_EQ(kind_of([] { parse_law_config("bogus = 1"); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { parse_law_config("trials = x"); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { parse_law_config("nat_bound = 0"); }), ErrorKind::Config);
    EXPECT_EQ(parse_law_config(to_string(c)).trials, c.trials);
}

TEST(LawSuite, DeterministicPerSeed) {
    LawConfig cfg;
    cfg.trials = 40;
    cfg.seed = 5;
    FnOperad o(cfg.budget());
    LawReport a = run_law_suite(o, cfg);
    LawReport b = run_law_suite(o, cfg);
    EXPECT_TRUE(a.ok());
    EXPECT_EQ(a.to_text("fn"), b.to_text("fn"));
    EXPECT_EQ(a.summary_line(), "PASS 40");
    EXPECT_NE(trial_seed(1, Axiom::LeftUnity, 0), trial_seed(1, Axiom::RightUnity, 0));
}

TEST(LawSuite, BrokenCastIsDetected) {
    LawConfig cfg;
    cfg.trials = 100;
    FnOperad broken(cfg.budget(), FnOperad::Options{true});
    LawReport r = run_law_suite(broken, cfg);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.summary_line().substr(0, 5), "FAIL ");
    EXPECT_NE(r.failures.front().detail.find("SignatureMismatch"), std::string::npos);
}
