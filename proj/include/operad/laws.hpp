#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "operad/operad.hpp"

namespace operad {

// ---------------------------------------------------------------------------
// Single-instance axiom checks. Each validates its parameter set first and
// throws PreconditionViolated naming the condition that failed. Inside the
// check every composition goes through checked_compose, so a composite with
// the wrong signature surfaces as SignatureMismatch.

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::PreconditionViolated, what);
}

}  // namespace detail

/// (alpha o_i beta) o_{l-1+j} gamma  ==  (alpha o_j gamma) o_i beta
template <OperadInstance O>
bool check_horizontal_assoc(const O& o, const typename O::Entry& alpha, const typename O::Entry& beta,
                            const typename O::Entry& gamma, std::size_t i, std::size_t j) {
    const Signature sa = o.signature(alpha);
    const Signature sb = o.signature(beta);
    const Signature sg = o.signature(gamma);
    const ColorSeq& c = sa.inputs();
    detail::require(c.size() >= 2, "2 <= n (alpha has arity " + std::to_string(c.size()) + ")");
    detail::require(i < j, "i < j (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
    detail::require(j < c.size(), "j < n (j=" + std::to_string(j) + ", n=" + std::to_string(c.size()) + ")");
    detail::require(sb.output() == nth_color(c, i), "entry i of c is the output color of beta");
    detail::require(sg.output() == nth_color(c, j), "entry j of c is the output color of gamma");

    const std::size_t l = sb.arity();
    auto lhs = checked_compose(o, checked_compose(o, alpha, i, beta), l - 1 + j, gamma);
    auto rhs = checked_compose(o, checked_compose(o, alpha, j, gamma), i, beta);
    auto w = CastWitness::make(Signature(sa.output(), splice(splice(c, i, sb.inputs()), l - 1 + j, sg.inputs())),
                               Signature(sa.output(), splice(splice(c, j, sg.inputs()), i, sb.inputs())));
    return o.equal(cast(o, w, lhs), rhs);
}

/// (alpha o_i beta) o_{i+j} gamma  ==  alpha o_i (beta o_j gamma)
template <OperadInstance O>
bool check_vertical_assoc(const O& o, const typename O::Entry& alpha, const typename O::Entry& beta,
                          const typename O::Entry& gamma, std::size_t i, std::size_t j) {
    const Signature sa = o.signature(alpha);
    const Signature sb = o.signature(beta);
    const Signature sg = o.signature(gamma);
    const ColorSeq& c = sa.inputs();
    const ColorSeq& b = sb.inputs();
    detail::require(i < c.size(), "i <= n-1 (i=" + std::to_string(i) + ", n=" + std::to_string(c.size()) + ")");
    detail::require(j < b.size(), "j <= m-1 (j=" + std::to_string(j) + ", m=" + std::to_string(b.size()) + ")");
    detail::require(sb.output() == nth_color(c, i), "entry i of c is the output color of beta");
    detail::require(sg.output() == nth_color(b, j), "entry j of b is the output color of gamma");

    auto lhs = checked_compose(o, checked_compose(o, alpha, i, beta), i + j, gamma);
    auto rhs = checked_compose(o, alpha, i, checked_compose(o, beta, j, gamma));
    auto w = CastWitness::make(Signature(sa.output(), splice(splice(c, i, b), i + j, sg.inputs())),
                               Signature(sa.output(), splice(c, i, splice(b, j, sg.inputs()))));
    return o.equal(cast(o, w, lhs), rhs);
}

/// 1_d o_0 alpha == alpha
template <OperadInstance O>
bool check_left_unity(const O& o, const typename O::Entry& alpha) {
    const Signature sa = o.signature(alpha);
    auto lhs = checked_compose(o, o.unit(sa.output()), 0, alpha);
    auto w = CastWitness::make(Signature(sa.output(), splice(ColorSeq{sa.output()}, 0, sa.inputs())), sa);
    return o.equal(cast(o, w, lhs), alpha);
}

/// alpha o_i 1_{c_i} == alpha
template <OperadInstance O>
bool check_right_unity(const O& o, const typename O::Entry& alpha, std::size_t i) {
    const Signature sa = o.signature(alpha);
    detail::require(i < sa.arity(), "i <= n-1 (i=" + std::to_string(i) + ", n=" + std::to_string(sa.arity()) + ")");
    const Code ci = nth_color(sa.inputs(), i);
    auto lhs = checked_compose(o, alpha, i, o.unit(ci));
    auto w = CastWitness::make(Signature(sa.output(), splice(sa.inputs(), i, ColorSeq{ci})), sa);
    return o.equal(cast(o, w, lhs), alpha);
}

/// permute and unpermute are two-sided inverses between O(d; c) and
/// O(d; c sigma). `other` is an entry of the permuted signature; when absent
/// the forward image of `e` is used.
template <OperadInstance O>
bool check_perm_bijection(const O& o, const typename O::Entry& e, const Permutation& sigma,
                          const std::optional<typename O::Entry>& other = std::nullopt) {
    const Signature se = o.signature(e);
    if (sigma.size() != se.arity()) {
        throw Error(ErrorKind::LengthMismatch, "permutation of length " + std::to_string(sigma.size()) +
                                                   " on an entry of arity " + std::to_string(se.arity()));
    }
    const Signature permuted(se.output(), apply_perm(se.inputs(), sigma));
    auto fwd = o.permute(e, sigma);
    if (!(o.signature(fwd) == permuted)) {
        throw Error(ErrorKind::SignatureMismatch, "permuted entry tagged " + to_string(o.signature(fwd)) +
                                                      ", expected " + to_string(permuted));
    }
    auto back = o.unpermute(fwd, sigma);
    if (!(o.signature(back) == se) || !o.equal(back, e)) return false;

    const auto& e2 = other ? *other : fwd;
    if (!(o.signature(e2) == permuted)) {
        throw Error(ErrorKind::PreconditionViolated, "second entry must have signature " + to_string(permuted));
    }
    auto round = o.permute(o.unpermute(e2, sigma), sigma);
    return o.signature(round) == permuted && o.equal(round, e2);
}

// ---------------------------------------------------------------------------
// Randomized law suite.

struct LawConfig {
    std::size_t trials = 500;
    std::uint64_t seed = 0;
    std::size_t nat_bound = 3;
    std::size_t enum_ceiling = kDefaultEnumCeiling;
    std::size_t max_arity = 4;
    std::size_t max_code_depth = 1;

    Budget budget() const { return Budget{nat_bound, enum_ceiling}; }
};

/// Applies `key=value` lines (blank lines and `#` comments allowed) on top
/// of `base`. Throws Error(Config) on unknown keys or malformed values.
LawConfig parse_law_config(std::string_view text, LawConfig base = {});
/// Sets one key; the same validation as parse_law_config.
void set_law_config_key(LawConfig& config, std::string_view key, std::string_view value);
std::string to_string(const LawConfig& config);

enum class Axiom : std::size_t { HorizontalAssoc, VerticalAssoc, LeftUnity, RightUnity, PermBijection };
inline constexpr std::size_t kAxiomCount = 5;
inline constexpr std::array<Axiom, kAxiomCount> kAllAxioms = {
    Axiom::HorizontalAssoc, Axiom::VerticalAssoc, Axiom::LeftUnity, Axiom::RightUnity, Axiom::PermBijection};

std::string_view to_string(Axiom axiom);

struct LawFailure {
    Axiom axiom;
    std::size_t trial;
    std::uint64_t trial_seed;
    std::string detail;
};

struct AxiomTally {
    std::size_t trials = 0;
    std::size_t passes = 0;
    std::size_t failures = 0;
    /// Shape draws rejected because the instance could not afford them.
    std::size_t resamples = 0;
};

struct LawReport {
    LawConfig config;
    std::array<AxiomTally, kAxiomCount> tallies{};
    std::vector<LawFailure> failures;

    std::size_t failure_count() const { return failures.size(); }
    bool ok() const { return failures.empty(); }
    /// "PASS <trials>" or "FAIL <failures> <seed>".
    std::string summary_line() const;
    /// Human-readable report ending with the summary line.
    std::string to_text(std::string_view instance_name) const;
};

/// Seed of one trial; depends only on (seed, axiom, trial index).
std::uint64_t trial_seed(std::uint64_t seed, Axiom axiom, std::size_t trial);

namespace detail {

inline constexpr std::size_t kMaxShapeDraws = 10000;

/// Random colors and sequences drawn from codes up to a depth, picking the
/// depth layer uniformly first so deep codes do not dominate.
class ColorSampler {
public:
    explicit ColorSampler(std::size_t max_code_depth);

    Code color(std::mt19937_64& rng) const;
    ColorSeq sequence(std::mt19937_64& rng, std::size_t length) const;

private:
    std::vector<std::vector<Code>> layers_;
};

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Permutation random_permutation(std::mt19937_64& rng, std::size_t n);

std::string indices(std::size_t i, std::size_t j);

template <OperadInstance O>
bool all_admissible(const O& o, std::initializer_list<Signature> sigs) {
    for (const auto& s : sigs)
        if (!o.admissible(s)) return false;
    return true;
}

/// Runs one trial of `axiom`. Returns nullopt when no affordable shape was
/// found; otherwise a pass flag and a description of the inputs.
template <OperadInstance O>
std::pair<bool, std::string> run_trial(const O& o, const LawConfig& cfg, const ColorSampler& colors,
                                       Axiom axiom, std::mt19937_64& rng, std::size_t& resamples) {
    const std::size_t max_arity = std::max<std::size_t>(cfg.max_arity, 1);
    auto arity = [&](std::size_t lo) { return uniform(rng, lo, std::max(lo, max_arity)); };
    auto sig_text = [&](const typename O::Entry& e) { return o.describe(e); };

    for (std::size_t draw = 0; draw < kMaxShapeDraws; ++draw) {
        switch (axiom) {
            case Axiom::HorizontalAssoc: {
                const std::size_t n = arity(2);
                ColorSeq c = colors.sequence(rng, n);
                Code d = colors.color(rng);
                std::size_t i = uniform(rng, 0, n - 2);
                std::size_t j = uniform(rng, i + 1, n - 1);
                ColorSeq a = colors.sequence(rng, arity(1));
                ColorSeq b = colors.sequence(rng, arity(1));
                Signature sa(d, c), sb(c[i], a), sg(c[j], b);
                Signature composite(d, splice(splice(c, i, a), a.size() - 1 + j, b));
                if (!all_admissible(o, {sa, sb, sg, composite})) {
                    ++resamples;
                    continue;
                }
                auto alpha = o.sample(sa, rng);
                auto beta = o.sample(sb, rng);
                auto gamma = o.sample(sg, rng);
                std::string what = "alpha=" + sig_text(alpha) + " beta=" + sig_text(beta) +
                                   " gamma=" + sig_text(gamma) + " " + indices(i, j);
                try {
                    return {check_horizontal_assoc(o, alpha, beta, gamma, i, j), what};
                } catch (const Error& err) {
                    return {false, what + " error: " + err.what()};
                }
            }
            case Axiom::VerticalAssoc: {
                const std::size_t n = arity(1);
                ColorSeq c = colors.sequence(rng, n);
                Code d = colors.color(rng);
                std::size_t i = uniform(rng, 0, n - 1);
                const std::size_t m = arity(1);
                ColorSeq b = colors.sequence(rng, m);
                std::size_t j = uniform(rng, 0, m - 1);
                ColorSeq a = colors.sequence(rng, arity(1));
                Signature sa(d, c), sb(c[i], b), sg(b[j], a);
                Signature composite(d, splice(c, i, splice(b, j, a)));
                if (!all_admissible(o, {sa, sb, sg, composite})) {
                    ++resamples;
                    continue;
                }
                auto alpha = o.sample(sa, rng);
                auto beta = o.sample(sb, rng);
                auto gamma = o.sample(sg, rng);
                std::string what = "alpha=" + sig_text(alpha) + " beta=" + sig_text(beta) +
                                   " gamma=" + sig_text(gamma) + " " + indices(i, j);
                try {
                    return {check_vertical_assoc(o, alpha, beta, gamma, i, j), what};
                } catch (const Error& err) {
                    return {false, what + " error: " + err.what()};
                }
            }
            case Axiom::LeftUnity: {
                Signature sa(colors.color(rng), colors.sequence(rng, arity(1)));
                if (!o.admissible(sa)) {
                    ++resamples;
                    continue;
                }
                auto alpha = o.sample(sa, rng);
                std::string what = "alpha=" + sig_text(alpha);
                try {
                    return {check_left_unity(o, alpha), what};
                } catch (const Error& err) {
                    return {false, what + " error: " + err.what()};
                }
            }
            case Axiom::RightUnity: {
                const std::size_t n = arity(1);
                Signature sa(colors.color(rng), colors.sequence(rng, n));
                std::size_t i = uniform(rng, 0, n - 1);
                if (!o.admissible(sa)) {
                    ++resamples;
                    continue;
                }
                auto alpha = o.sample(sa, rng);
                std::string what = "alpha=" + sig_text(alpha) + " i=" + std::to_string(i);
                try {
                    return {check_right_unity(o, alpha, i), what};
                } catch (const Error& err) {
                    return {false, what + " error: " + err.what()};
                }
            }
            case Axiom::PermBijection: {
                const std::size_t n = arity(1);
                Signature se(colors.color(rng), colors.sequence(rng, n));
                if (!o.admissible(se)) {
                    ++resamples;
                    continue;
                }
                Permutation sigma = random_permutation(rng, n);
                auto e = o.sample(se, rng);
                auto other = o.sample(Signature(se.output(), apply_perm(se.inputs(), sigma)), rng);
                std::string what = "e=" + sig_text(e) + " sigma=" + to_string(sigma);
                try {
                    return {check_perm_bijection(o, e, sigma, std::optional(other)), what};
                } catch (const Error& err) {
                    return {false, what + " error: " + err.what()};
                }
            }
        }
    }
    return {false, "no admissible shape after " + std::to_string(kMaxShapeDraws) + " draws"};
}

template <OperadInstance O>
std::pair<AxiomTally, std::vector<LawFailure>> run_axiom(const O& o, const LawConfig& cfg, Axiom axiom) {
    ColorSampler colors(cfg.max_code_depth);
    AxiomTally tally;
    std::vector<LawFailure> failures;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::uint64_t ts = trial_seed(cfg.seed, axiom, t);
        std::mt19937_64 rng(ts);
        auto [ok, what] = run_trial(o, cfg, colors, axiom, rng, tally.resamples);
        ++tally.trials;
        if (ok) {
            ++tally.passes;
        } else {
            ++tally.failures;
            failures.push_back(LawFailure{axiom, t, ts, std::move(what)});
        }
    }
    return {tally, std::move(failures)};
}

}  // namespace detail

/// Runs every axiom check `config.trials` times on freshly sampled inputs.
/// Axioms run concurrently; each trial is seeded from (seed, axiom, index)
/// alone, so the report does not depend on scheduling.
template <OperadInstance O>
LawReport run_law_suite(const O& o, const LawConfig& config) {
    LawReport report;
    report.config = config;
    std::array<std::future<std::pair<AxiomTally, std::vector<LawFailure>>>, kAxiomCount> jobs;
    for (std::size_t k = 0; k < kAxiomCount; ++k) {
        jobs[k] = std::async(std::launch::async, [&o, &config, k] {
            return detail::run_axiom(o, config, kAllAxioms[k]);
        });
    }
    for (std::size_t k = 0; k < kAxiomCount; ++k) {
        auto [tally, failures] = jobs[k].get();
        report.tallies[k] = tally;
        for (auto& f : failures) report.failures.push_back(std::move(f));
    }
    return report;
}

}  // namespace operad
