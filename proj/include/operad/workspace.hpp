#pragma once

#include <map>
#include <string>
#include <string_view>

#include "operad/free_operad.hpp"
#include "operad/laws.hpp"

namespace operad {

/// A named function entry together with the definition it was declared by,
/// kept so a workspace prints back exactly.
struct EntryDecl {
    std::string name;
    FnEntry entry;
    /// Canonical definition text: "builtin sum" or "table {(1, 2) -> 3; ...}".
    std::string definition;
};

/// Everything a workspace file declares. One statement per line:
///
///   config <key> = <value>
///   gen <name> : ([<codes>]) -> <code>
///   entry <name> : (<code>, [<codes>]) = builtin <sum|prod|sub|neg|id|proj k>
///   entry <name> : (<code>, [<codes>]) = table {(v, ...) -> v; ...}
///   bind <generator> = <entry>
///   term <name> = <term>
///
/// Generators without an explicit bind use the entry of the same name.
struct Workspace {
    std::map<std::string, std::string> config_lines;
    std::map<std::string, Generator> generators;
    std::map<std::string, EntryDecl> entries;
    std::map<std::string, std::string> bindings;
    std::map<std::string, Tree> terms;
    LawConfig config;

    Budget budget() const { return config.budget(); }
    /// Generator name to bound entry, for eval_hom.
    Environment environment() const;
    /// Throws Parse if the name is taken.
    void add_term(const std::string& name, Tree term);
};

/// Throws Error(Parse) (prefixed with the line number) or the structural
/// error raised while building a term or entry.
Workspace parse_workspace(std::string_view text);

/// Canonical form: sections in the order config, gen, entry, bind, term,
/// names sorted within each section.
std::string to_string(const Workspace& ws);

}  // namespace operad
