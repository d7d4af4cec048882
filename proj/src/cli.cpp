#include "operad/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "operad/fn_operad.hpp"
#include "operad/free_operad.hpp"
#include "operad/laws.hpp"
#include "operad/workspace.hpp"

namespace operad {

namespace {

/// Raised inside command handlers to leave with a specific exit code.
struct Exit {
    int code;
    std::string message;
};

std::string read_file(const std::string& path, int code_on_failure) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Exit{code_on_failure, "cannot read '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Workspace load_workspace(const std::string& path) {
    if (path.empty()) throw Exit{kExitUserError, "this command needs --workspace <path>"};
    return parse_workspace(read_file(path, kExitUserError));
}

std::size_t parse_index(const std::string& text) {
    std::size_t used = 0;
    std::size_t value = 0;
    try {
        value = std::stoul(text, &used);
    } catch (const std::logic_error&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || text.front() == '-') {
        throw Exit{kExitUserError, "'" + text + "' is not a slot index"};
    }
    return value;
}

struct LawFlags {
    std::optional<std::string> trials, seed, nat_bound, enum_ceiling, max_arity, max_code_depth;
    std::string config_path;
    bool break_cast = false;
};

void add_law_flags(CLI::App& cmd, LawFlags& f) {
    cmd.add_option("--config", f.config_path, "law-suite config file (key=value lines)");
    cmd.add_option("--trials", f.trials, "trials per axiom");
    cmd.add_option("--seed", f.seed, "base random seed");
    cmd.add_option("--nat-bound", f.nat_bound, "naturals range over [0, nat-bound)");
    cmd.add_option("--enum-ceiling", f.enum_ceiling, "largest enumeration or tuple space allowed");
    cmd.add_option("--max-arity", f.max_arity, "largest sampled arity");
    cmd.add_option("--max-code-depth", f.max_code_depth, "deepest sampled color code");
    cmd.add_flag("--break-cast", f.break_cast, "test hook: composites keep the outer signature");
}

LawConfig resolve_config(const LawFlags& f, const std::string& workspace_path) {
    LawConfig config;
    if (!workspace_path.empty()) config = load_workspace(workspace_path).config;
    if (!f.config_path.empty()) config = parse_law_config(read_file(f.config_path, kExitConfigError), config);
    auto apply = [&](const std::optional<std::string>& v, std::string_view key) {
        if (v) set_law_config_key(config, key, *v);
    };
    apply(f.trials, "trials");
    apply(f.seed, "seed");
    apply(f.nat_bound, "nat_bound");
    apply(f.enum_ceiling, "enum_ceiling");
    apply(f.max_arity, "max_arity");
    apply(f.max_code_depth, "max_code_depth");
    return config;
}

int cmd_splice(const std::string& outer, const std::string& slot, const std::string& inner, std::ostream& out) {
    ColorSeq c = parse_color_seq(outer);
    ColorSeq b = parse_color_seq(inner);
    if (b.empty()) throw Exit{kExitUserError, "the spliced-in sequence must be non-empty"};
    out << to_string(splice(c, parse_index(slot), b)) << "\n";
    return kExitOk;
}

const Tree& find_term(const Workspace& ws, const std::string& name) {
    auto it = ws.terms.find(name);
    if (it == ws.terms.end()) throw Exit{kExitUserError, "no term named '" + name + "'"};
    return it->second;
}

int cmd_compose(const std::string& path, const std::string& outer, const std::string& slot,
                const std::string& inner, const std::string& as_name, std::ostream& out) {
    Workspace ws = load_workspace(path);
    Tree composite = graft(find_term(ws, outer), parse_index(slot), find_term(ws, inner));
    out << to_string(composite.signature()) << "\n";
    if (!as_name.empty()) {
        ws.add_term(as_name, composite);
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        file << to_string(ws);
        if (!file) throw Exit{kExitUserError, "cannot write '" + path + "'"};
    }
    return kExitOk;
}

int cmd_eval(const std::string& path, const std::string& name, const std::vector<std::string>& args,
             std::ostream& out) {
    Workspace ws = load_workspace(path);
    std::optional<FnEntry> fn;
    if (auto t = ws.terms.find(name); t != ws.terms.end()) {
        fn = eval_hom(t->second, ws.environment());
    } else if (auto e = ws.entries.find(name); e != ws.entries.end()) {
        fn = e->second.entry;
    } else {
        throw Exit{kExitUserError, "no term or entry named '" + name + "'"};
    }
    const ColorSeq& inputs = fn->signature().inputs();
    if (args.size() != inputs.size()) {
        throw Exit{kExitUserError, "'" + name + "' has signature " + to_string(fn->signature()) + " and takes " +
                                       std::to_string(inputs.size()) + " arguments, got " +
                                       std::to_string(args.size())};
    }
    std::vector<Value> values;
    for (std::size_t k = 0; k < args.size(); ++k) {
        try {
            values.push_back(parse_value(args[k], inputs[k], ws.config.nat_bound));
        } catch (const Error& err) {
            throw Exit{kExitUserError, "argument " + std::to_string(k) + " does not inhabit " +
                                           to_string(inputs[k]) + ": " + err.what()};
        }
    }
    out << to_string(fn->apply(values)) << "\n";
    return kExitOk;
}

int cmd_check_laws(const std::string& instance, const LawFlags& flags, const std::string& workspace_path,
                   std::ostream& out) {
    LawConfig config = resolve_config(flags, workspace_path);
    LawReport report;
    if (instance == "fn") {
        FnOperad o = as_operad_instance(config.budget(), FnOperad::Options{flags.break_cast});
        report = run_law_suite(o, config);
    } else if (instance == "free") {
        if (flags.break_cast) throw Exit{kExitUserError, "--break-cast only applies to the fn instance"};
        report = run_law_suite(FreeOperad{}, config);
    } else {
        throw Exit{kExitUserError, "unknown instance '" + instance + "' (expected fn or free)"};
    }
    out << report.to_text(instance);
    return report.ok() ? kExitOk : kExitLawFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Colored operad composition engine"};
    app.require_subcommand(1);

    std::string splice_outer, splice_slot, splice_inner;
    auto* splice_cmd = app.add_subcommand("splice", "splice a color sequence into slot i of another");
    splice_cmd->add_option("outer", splice_outer, "sequence, e.g. \"[N,N,N]\"")->required();
    splice_cmd->add_option("slot", splice_slot, "0-based slot")->required();
    splice_cmd->add_option("inner", splice_inner, "sequence spliced in")->required();

    std::string ws_path, outer, slot, inner, as_name;
    auto* compose_cmd = app.add_subcommand("compose", "graft one workspace term into a slot of another");
    compose_cmd->add_option("--workspace", ws_path, "workspace file");
    compose_cmd->add_option("outer", outer, "outer term")->required();
    compose_cmd->add_option("slot", slot, "0-based slot")->required();
    compose_cmd->add_option("inner", inner, "inner term")->required();
    compose_cmd->add_option("--as", as_name, "store the composite under this name");

    std::string eval_name;
    std::vector<std::string> eval_args;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a term or entry on argument values");
    eval_cmd->add_option("--workspace", ws_path, "workspace file");
    eval_cmd->add_option("name", eval_name, "term or entry")->required();
    eval_cmd->add_option("values", eval_args, "argument values");

    std::string instance;
    LawFlags law_flags;
    auto* laws_cmd = app.add_subcommand("check-laws", "run the randomized operad law suite");
    laws_cmd->add_option("instance", instance, "fn or free")->required();
    laws_cmd->add_option("--workspace", ws_path, "take config lines from this workspace");
    add_law_flags(*laws_cmd, law_flags);

    auto* show_cmd = app.add_subcommand("show", "print a workspace in canonical form");
    show_cmd->add_option("--workspace", ws_path, "workspace file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUserError;
    }

    try {
        if (*splice_cmd) return cmd_splice(splice_outer, splice_slot, splice_inner, out);
        if (*compose_cmd) return cmd_compose(ws_path, outer, slot, inner, as_name, out);
        if (*eval_cmd) return cmd_eval(ws_path, eval_name, eval_args, out);
        if (*laws_cmd) return cmd_check_laws(instance, law_flags, ws_path, out);
        if (*show_cmd) {
            out << to_string(load_workspace(ws_path));
            return kExitOk;
        }
    } catch (const Exit& e) {
        err << "error: " << e.message << "\n";
        return e.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Config ? kExitConfigError : kExitUserError;
    }
    return kExitUserError;
}

}  // namespace operad
