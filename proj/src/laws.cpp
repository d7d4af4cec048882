#include "operad/laws.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "operad/text.hpp"

namespace operad {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_uint(std::string_view key, std::string_view value) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
        throw Error(ErrorKind::Config, "config key '" + std::string(key) + "' needs a non-negative integer, got '" +
                                          std::string(value) + "'");
    }
    return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

void set_law_config_key(LawConfig& config, std::string_view key, std::string_view value) {
    std::uint64_t v = parse_uint(key, value);
    auto positive = [&] {
        if (v == 0) throw Error(ErrorKind::Config, "config key '" + std::string(key) + "' must be at least 1");
        return static_cast<std::size_t>(v);
    };
    if (key == "trials") {
        config.trials = positive();
    } else if (key == "seed") {
        config.seed = v;
    } else if (key == "nat_bound") {
        config.nat_bound = positive();
    } else if (key == "enum_ceiling") {
        config.enum_ceiling = positive();
    } else if (key == "max_arity") {
        config.max_arity = positive();
    } else if (key == "max_code_depth") {
        if (v > 2) throw Error(ErrorKind::Config, "config key 'max_code_depth' must be at most 2");
        config.max_code_depth = static_cast<std::size_t>(v);
    } else {
        throw Error(ErrorKind::Config, "unknown config key '" + std::string(key) + "'");
    }
}

LawConfig parse_law_config(std::string_view text, LawConfig base) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::Config, "config line " + std::to_string(line_no) + " is not key=value");
        }
        set_law_config_key(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return base;
}

std::string to_string(const LawConfig& c) {
    std::ostringstream out;
    out << "trials=" << c.trials << "\nseed=" << c.seed << "\nnat_bound=" << c.nat_bound
        << "\nenum_ceiling=" << c.enum_ceiling << "\nmax_arity=" << c.max_arity
        << "\nmax_code_depth=" << c.max_code_depth << "\n";
    return out.str();
}

std::string_view to_string(Axiom axiom) {
    switch (axiom) {
        case Axiom::HorizontalAssoc: return "horizontal_assoc";
        case Axiom::VerticalAssoc: return "vertical_assoc";
        case Axiom::LeftUnity: return "left_unity";
        case Axiom::RightUnity: return "right_unity";
        case Axiom::PermBijection: return "perm_bijection";
    }
    return "?";
}

std::uint64_t trial_seed(std::uint64_t seed, Axiom axiom, std::size_t trial) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ (static_cast<std::uint64_t>(axiom) + 1) * 0x632be59bd9b4e019ULL);
    return splitmix64(h + trial);
}

std::string LawReport::summary_line() const {
    if (ok()) return "PASS " + std::to_string(config.trials);
    return "FAIL " + std::to_string(failure_count()) + " " + std::to_string(config.seed);
}

std::string LawReport::to_text(std::string_view instance_name) const {
    std::ostringstream out;
    out << "law suite: " << instance_name << " (trials=" << config.trials << " seed=" << config.seed
        << " nat_bound=" << config.nat_bound << " enum_ceiling=" << config.enum_ceiling
        << " max_arity=" << config.max_arity << " max_code_depth=" << config.max_code_depth << ")\n";
    for (std::size_t k = 0; k < kAxiomCount; ++k) {
        const auto& t = tallies[k];
        out << "  " << to_string(kAllAxioms[k]) << ": " << t.passes << "/" << t.trials << " passed";
        if (t.resamples) out << " (" << t.resamples << " shapes resampled)";
        out << "\n";
    }
    for (const auto& f : failures) {
        out << "failure " << to_string(f.axiom) << " trial=" << f.trial << " trial_seed=" << f.trial_seed << "\n"
            << "  " << f.detail << "\n";
    }
    out << summary_line() << "\n";
    return out.str();
}

namespace detail {

ColorSampler::ColorSampler(std::size_t max_code_depth) {
    layers_.resize(max_code_depth + 1);
    for (auto& code : codes_up_to_depth(max_code_depth)) layers_[code.depth()].push_back(code);
}

Code ColorSampler::color(std::mt19937_64& rng) const {
    const auto& layer = layers_[uniform(rng, 0, layers_.size() - 1)];
    return layer[uniform(rng, 0, layer.size() - 1)];
}

ColorSeq ColorSampler::sequence(std::mt19937_64& rng, std::size_t length) const {
    ColorSeq out;
    out.reserve(length);
    for (std::size_t k = 0; k < length; ++k) out.push_back(color(rng));
    return out;
}

Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> m(n);
    for (std::size_t k = 0; k < n; ++k) m[k] = k;
    for (std::size_t k = n; k > 1; --k) std::swap(m[k - 1], m[uniform(rng, 0, k - 1)]);
    return Permutation(std::move(m));
}

std::string indices(std::size_t i, std::size_t j) {
    return "i=" + std::to_string(i) + " j=" + std::to_string(j);
}

}  // namespace detail

}  // namespace operad
