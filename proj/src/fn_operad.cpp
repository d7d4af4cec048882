#include "operad/fn_operad.hpp"

#include <limits>

namespace operad {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

void check_arity(const Signature& sig, std::size_t given) {
    if (given != sig.arity()) {
        throw Error(ErrorKind::LengthMismatch, "entry " + to_string(sig) + " takes " + std::to_string(sig.arity()) +
                                                   " arguments, got " + std::to_string(given));
    }
}

ColorSeq repeat(const Code& c, std::size_t n) { return ColorSeq(n, c); }

}  // namespace

FnEntry::FnEntry(Signature sig, Rule rule, std::string label)
    : sig_(std::move(sig)), rule_(std::make_shared<const Rule>(std::move(rule))), label_(std::move(label)) {}

Value FnEntry::operator()(std::span<const Value> args) const {
    check_arity(sig_, args.size());
    return (*rule_)(args);
}

Value FnEntry::apply(std::span<const Value> args) const {
    check_arity(sig_, args.size());
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (!inhabits(args[k], sig_.inputs()[k])) {
            throw Error(ErrorKind::SignatureMismatch, "argument " + std::to_string(k) + " = " + to_string(args[k]) +
                                                          " does not inhabit " + to_string(sig_.inputs()[k]));
        }
    }
    Value out = (*rule_)(args);
    if (!inhabits(out, sig_.output())) {
        throw Error(ErrorKind::SignatureMismatch,
                    "result " + to_string(out) + " does not inhabit " + to_string(sig_.output()));
    }
    return out;
}

FnEntry FnEntry::retagged(Signature sig) const {
    FnEntry copy = *this;
    copy.sig_ = std::move(sig);
    return copy;
}

FnEntry FnEntry::relabeled(std::string label) const {
    FnEntry copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

FnEntry fn_unit(const Code& c) {
    return FnEntry(Signature(c, {c}), [](std::span<const Value> args) { return args[0]; }, "id");
}

FnEntry fn_comp(const FnEntry& f, std::size_t i, const FnEntry& g) {
    const Signature& sf = f.signature();
    const Signature& sg = g.signature();
    if (i >= sf.arity()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "slot " + std::to_string(i) + " on an entry of arity " + std::to_string(sf.arity()));
    }
    if (!(sg.output() == sf.inputs()[i])) {
        throw Error(ErrorKind::ColorMismatch, "slot " + std::to_string(i) + " has color " +
                                                  to_string(sf.inputs()[i]) + " but the inner entry outputs " +
                                                  to_string(sg.output()));
    }
    const std::size_t n = sf.arity();
    const std::size_t m = sg.arity();
    auto rule = [f, g, i, n, m](std::span<const Value> args) {
        Value inner = g(args.subspan(i, m));
        std::vector<Value> outer;
        outer.reserve(n);
        outer.insert(outer.end(), args.begin(), args.begin() + static_cast<std::ptrdiff_t>(i));
        outer.push_back(std::move(inner));
        outer.insert(outer.end(), args.begin() + static_cast<std::ptrdiff_t>(i + m), args.end());
        return f(outer);
    };
    std::string label;
    if (!f.label().empty() && !g.label().empty()) {
        label = "(" + f.label() + " o" + std::to_string(i) + " " + g.label() + ")";
    }
    return FnEntry(Signature(sf.output(), splice(sf.inputs(), i, sg.inputs())), std::move(rule), std::move(label));
}

FnEntry fn_perm(const FnEntry& f, const Permutation& sigma) {
    const Signature& sf = f.signature();
    Signature permuted(sf.output(), apply_perm(sf.inputs(), sigma));
    auto rule = [f, sigma](std::span<const Value> ys) {
        std::vector<Value> zs(ys.size());
        for (std::size_t k = 0; k < ys.size(); ++k) zs[sigma[k]] = ys[k];
        return f(zs);
    };
    std::string label = f.label().empty() ? std::string{} : f.label() + to_string(sigma);
    return FnEntry(std::move(permuted), std::move(rule), std::move(label));
}

FnEntry fn_unperm(const FnEntry& f, const Permutation& sigma) { return fn_perm(f, sigma.inverse()); }

std::size_t tuple_count(const ColorSeq& inputs, std::size_t nat_bound) {
    std::size_t total = 1;
    for (const auto& c : inputs) {
        std::size_t k = cardinality(c, nat_bound);
        if (k != 0 && total > kSaturated / k) return kSaturated;
        total *= k;
    }
    return total;
}

std::vector<std::vector<Value>> enumerate_tuples(const ColorSeq& inputs, const Budget& budget) {
    std::size_t count = tuple_count(inputs, budget.nat_bound);
    if (count > budget.enum_ceiling) {
        throw Error(ErrorKind::ExponentialBlowup,
                    "tuple space of " + to_string(inputs) + " exceeds ceiling " + std::to_string(budget.enum_ceiling));
    }
    std::vector<std::vector<Value>> domains;
    domains.reserve(inputs.size());
    for (const auto& c : inputs) domains.push_back(enumerate(c, budget.nat_bound, budget.enum_ceiling));

    std::vector<std::vector<Value>> out;
    out.reserve(count);
    std::vector<std::size_t> digits(inputs.size(), 0);
    while (true) {
        std::vector<Value> tuple;
        tuple.reserve(inputs.size());
        for (std::size_t k = 0; k < inputs.size(); ++k) tuple.push_back(domains[k][digits[k]]);
        out.push_back(std::move(tuple));
        std::size_t pos = inputs.size();
        while (true) {
            if (pos == 0) return out;
            --pos;
            if (++digits[pos] < domains[pos].size()) break;
            digits[pos] = 0;
        }
    }
}

bool fn_entry_eq(const FnEntry& f, const FnEntry& g, const Budget& budget) {
    if (!(f.signature() == g.signature())) return false;
    if (f.same_rule(g)) return true;
    for (const auto& tuple : enumerate_tuples(f.signature().inputs(), budget)) {
        if (f(tuple) != g(tuple)) return false;
    }
    return true;
}

FnEntry fn_table(Signature sig, std::vector<Value> outputs, const Budget& budget, std::string label) {
    const std::size_t count = tuple_count(sig.inputs(), budget.nat_bound);
    if (count > budget.enum_ceiling) {
        throw Error(ErrorKind::ExponentialBlowup, "table for " + to_string(sig) + " exceeds ceiling " +
                                                      std::to_string(budget.enum_ceiling));
    }
    if (outputs.size() != count) {
        throw Error(ErrorKind::LengthMismatch, "table for " + to_string(sig) + " needs " + std::to_string(count) +
                                                   " outputs, got " + std::to_string(outputs.size()));
    }
    for (const auto& v : outputs) {
        if (!inhabits(v, sig.output())) {
            throw Error(ErrorKind::SignatureMismatch,
                        "table output " + to_string(v) + " does not inhabit " + to_string(sig.output()));
        }
    }
    std::vector<std::size_t> radices;
    for (const auto& c : sig.inputs()) radices.push_back(cardinality(c, budget.nat_bound));
    auto rule = [inputs = sig.inputs(), radices = std::move(radices), outputs = std::move(outputs),
                 bound = budget.nat_bound](std::span<const Value> args) {
        std::size_t index = 0;
        for (std::size_t k = 0; k < args.size(); ++k) index = index * radices[k] + rank(args[k], inputs[k], bound);
        return outputs[index];
    };
    return FnEntry(std::move(sig), std::move(rule), std::move(label));
}

FnEntry fn_random_table(const Signature& sig, std::mt19937_64& rng, const Budget& budget) {
    const std::size_t count = tuple_count(sig.inputs(), budget.nat_bound);
    if (count > budget.enum_ceiling) {
        throw Error(ErrorKind::ExponentialBlowup, "table for " + to_string(sig) + " exceeds ceiling " +
                                                      std::to_string(budget.enum_ceiling));
    }
    auto codomain = enumerate(sig.output(), budget.nat_bound, budget.enum_ceiling);
    std::uniform_int_distribution<std::size_t> pick(0, codomain.size() - 1);
    std::vector<Value> outputs;
    outputs.reserve(count);
    for (std::size_t k = 0; k < count; ++k) outputs.push_back(codomain[pick(rng)]);
    return fn_table(sig, std::move(outputs), budget);
}

std::vector<FnEntry> fn_all_entries(const Signature& sig, const Budget& budget) {
    const std::size_t count = tuple_count(sig.inputs(), budget.nat_bound);
    auto codomain = enumerate(sig.output(), budget.nat_bound, budget.enum_ceiling);
    std::size_t total = 1;
    for (std::size_t k = 0; k < count; ++k) {
        if (total > budget.enum_ceiling / codomain.size()) {
            throw Error(ErrorKind::ExponentialBlowup,
                        "entry set " + to_string(sig) + " exceeds ceiling " + std::to_string(budget.enum_ceiling));
        }
        total *= codomain.size();
    }
    std::vector<FnEntry> out;
    out.reserve(total);
    std::vector<std::size_t> digits(count, 0);
    for (std::size_t e = 0; e < total; ++e) {
        std::vector<Value> outputs;
        outputs.reserve(count);
        for (std::size_t d : digits) outputs.push_back(codomain[d]);
        out.push_back(fn_table(sig, std::move(outputs), budget));
        for (std::size_t pos = count; pos > 0; --pos) {
            if (++digits[pos - 1] < codomain.size()) break;
            digits[pos - 1] = 0;
        }
    }
    return out;
}

FnEntry fn_sum(std::size_t arity) {
    return FnEntry(Signature(Code::nat(), repeat(Code::nat(), arity)),
                   [](std::span<const Value> args) {
                       std::uint64_t s = 0;
                       for (const auto& v : args) s += v.as_nat();
                       return Value::nat(s);
                   },
                   "sum" + std::to_string(arity));
}

FnEntry fn_prod(std::size_t arity) {
    return FnEntry(Signature(Code::nat(), repeat(Code::nat(), arity)),
                   [](std::span<const Value> args) {
                       std::uint64_t p = 1;
                       for (const auto& v : args) p *= v.as_nat();
                       return Value::nat(p);
                   },
                   "prod" + std::to_string(arity));
}

FnEntry fn_sub() {
    return FnEntry(Signature(Code::nat(), {Code::nat(), Code::nat()}),
                   [](std::span<const Value> args) {
                       std::uint64_t a = args[0].as_nat();
                       std::uint64_t b = args[1].as_nat();
                       return Value::nat(a > b ? a - b : 0);
                   },
                   "sub");
}

FnEntry fn_neg() {
    return FnEntry(Signature(Code::boolean(), {Code::boolean()}),
                   [](std::span<const Value> args) { return Value::boolean(!args[0].as_bool()); }, "neg");
}

FnEntry fn_proj(const ColorSeq& inputs, std::size_t k) {
    if (k >= inputs.size()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "projection " + std::to_string(k) + " out of " + std::to_string(inputs.size()) + " inputs");
    }
    return FnEntry(Signature(inputs[k], inputs), [k](std::span<const Value> args) { return args[k]; },
                   "proj" + std::to_string(k));
}

FnEntry FnOperad::compose(const FnEntry& f, std::size_t i, const FnEntry& g) const {
    FnEntry composite = fn_comp(f, i, g);
    if (options_.break_cast) return composite.retagged(f.signature());
    return composite;
}

bool FnOperad::admissible(const Signature& sig) const {
    return tuple_count(sig.inputs(), budget_.nat_bound) <= budget_.enum_ceiling &&
           cardinality(sig.output(), budget_.nat_bound) <= budget_.enum_ceiling;
}

std::string FnOperad::describe(const FnEntry& e) const {
    std::string out = to_string(e.signature());
    if (!e.label().empty()) out += " " + e.label();
    return out;
}

FnOperad as_operad_instance(Budget budget, FnOperad::Options options) { return FnOperad(budget, options); }

}  // namespace operad
