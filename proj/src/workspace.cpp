#include "operad/workspace.hpp"

#include <functional>
#include <vector>

#include "operad/text.hpp"

namespace operad {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
    std::string keyword;
};

/// Runs `body`, prefixing any library error with the line number.
template <typename F>
void at_line(std::size_t line, F&& body) {
    try {
        body();
    } catch (const Error& err) {
        throw Error(err.kind(), "line " + std::to_string(line) + ": " + err.what());
    }
}

std::string join_values(const std::vector<Value>& values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += ", ";
        out += to_string(values[k]);
    }
    return out;
}

std::pair<FnEntry, std::string> builtin_entry(Lexer& lexer, const Signature& sig) {
    Token which = lexer.expect(Token::Kind::Atom);
    const ColorSeq& in = sig.inputs();
    auto all_nat = [&] {
        if (!sig.output().is(Sigil::N)) return false;
        for (const auto& c : in)
            if (!c.is(Sigil::N)) return false;
        return true;
    };
    auto mismatch = [&](const std::string& shape) -> Error {
        return Error(ErrorKind::SignatureMismatch,
                     "builtin " + which.text + " needs " + shape + ", declared " + to_string(sig));
    };
    if (which.text == "sum" || which.text == "prod") {
        if (!all_nat()) throw mismatch("naturals only");
        return {which.text == "sum" ? fn_sum(in.size()) : fn_prod(in.size()), "builtin " + which.text};
    }
    if (which.text == "sub") {
        if (!all_nat() || in.size() != 2) throw mismatch("(N, [N,N])");
        return {fn_sub(), "builtin sub"};
    }
    if (which.text == "neg") {
        if (!(sig == Signature(Code::boolean(), {Code::boolean()}))) throw mismatch("(B, [B])");
        return {fn_neg(), "builtin neg"};
    }
    if (which.text == "id") {
        if (in.size() != 1 || !(in[0] == sig.output())) throw mismatch("(c, [c])");
        return {fn_unit(sig.output()), "builtin id"};
    }
    if (which.text == "proj") {
        Token k = lexer.expect(Token::Kind::Atom);
        std::size_t slot = 0;
        try {
            std::size_t used = 0;
            slot = std::stoul(k.text, &used);
            if (used != k.text.size()) throw std::invalid_argument(k.text);
        } catch (const std::logic_error&) {
            lexer.fail("proj needs a slot number");
        }
        if (slot >= in.size() || !(in[slot] == sig.output())) throw mismatch("output equal to input " + k.text);
        return {fn_proj(in, slot), "builtin proj " + std::to_string(slot)};
    }
    throw Error(ErrorKind::Parse, "unknown builtin '" + which.text + "'");
}

EntryDecl table_entry(Lexer& lexer, std::string name, const Signature& sig, const Budget& budget) {
    auto tuples = enumerate_tuples(sig.inputs(), budget);
    std::map<std::vector<Value>, Value> rows;
    lexer.expect(Token::Kind::LBrace);
    while (!lexer.accept(Token::Kind::RBrace)) {
        lexer.expect(Token::Kind::LParen);
        std::vector<Value> args;
        for (std::size_t k = 0; k < sig.arity(); ++k) {
            if (k) lexer.expect(Token::Kind::Comma);
            args.push_back(parse_value(lexer, sig.inputs()[k], budget.nat_bound));
        }
        lexer.expect(Token::Kind::RParen);
        lexer.expect(Token::Kind::Arrow);
        Value out = parse_value(lexer, sig.output(), budget.nat_bound);
        std::string shown = join_values(args);
        if (!rows.emplace(std::move(args), std::move(out)).second) {
            lexer.fail("duplicate table row (" + shown + ")");
        }
        if (!lexer.accept(Token::Kind::Semicolon)) {
            lexer.expect(Token::Kind::RBrace);
            break;
        }
    }
    std::vector<Value> outputs;
    outputs.reserve(tuples.size());
    std::string definition = "table {";
    for (const auto& tuple : tuples) {
        auto it = rows.find(tuple);
        if (it == rows.end()) {
            throw Error(ErrorKind::Parse, "table for '" + name + "' has no row for (" + join_values(tuple) + ")");
        }
        if (outputs.size()) definition += "; ";
        definition += "(" + join_values(tuple) + ") -> " + to_string(it->second);
        outputs.push_back(it->second);
    }
    if (rows.size() != tuples.size()) {
        throw Error(ErrorKind::Parse, "table for '" + name + "' has rows outside the domain at nat bound " +
                                          std::to_string(budget.nat_bound));
    }
    definition += "}";
    FnEntry entry = fn_table(sig, std::move(outputs), budget, name);
    return EntryDecl{std::move(name), std::move(entry), std::move(definition)};
}

template <typename Map>
void require_fresh(const Map& map, const std::string& name, std::string_view what) {
    if (map.count(name)) throw Error(ErrorKind::Parse, "duplicate " + std::string(what) + " '" + name + "'");
}

}  // namespace

Environment Workspace::environment() const {
    Environment env;
    for (const auto& [gen_name, gen] : generators) {
        auto bound = bindings.find(gen_name);
        const std::string& entry_name = bound != bindings.end() ? bound->second : gen_name;
        auto it = entries.find(entry_name);
        if (it != entries.end()) env.emplace(gen_name, it->second.entry);
    }
    return env;
}

void Workspace::add_term(const std::string& name, Tree term) {
    require_fresh(terms, name, "term");
    terms.emplace(name, std::move(term));
}

Workspace parse_workspace(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        at_line(number, [&] {
            Lexer lexer(line);
            if (lexer.at_end()) return;
            if (lexer.peek().kind != Token::Kind::Atom) lexer.fail("expected a statement keyword");
            std::string keyword = lexer.peek().text;
            if (keyword != "config" && keyword != "gen" && keyword != "entry" && keyword != "bind" &&
                keyword != "term") {
                lexer.fail("unknown statement");
            }
            lines.push_back(Line{number, line, keyword});
        });
    }

    Workspace ws;
    auto pass = [&](std::string_view keyword, const std::function<void(Lexer&)>& handle) {
        for (const auto& line : lines) {
            if (line.keyword != keyword) continue;
            at_line(line.number, [&] {
                Lexer lexer(line.text);
                handle(lexer);
                lexer.expect_end();
            });
        }
    };

    pass("config", [&](Lexer& lexer) {
        lexer.next();
        std::string key = lexer.expect(Token::Kind::Atom).text;
        lexer.expect(Token::Kind::Equals);
        std::string value = lexer.expect(Token::Kind::Atom).text;
        set_law_config_key(ws.config, key, value);
        ws.config_lines[key] = value;
    });
    pass("gen", [&](Lexer& lexer) {
        Generator g = parse_generator(lexer);
        require_fresh(ws.generators, g.name, "generator");
        ws.generators.emplace(g.name, std::move(g));
    });
    pass("entry", [&](Lexer& lexer) {
        lexer.next();
        std::string name = lexer.expect(Token::Kind::Atom).text;
        lexer.expect(Token::Kind::Colon);
        Signature sig = parse_signature(lexer);
        lexer.expect(Token::Kind::Equals);
        require_fresh(ws.entries, name, "entry");
        if (lexer.accept_atom("builtin")) {
            auto [entry, definition] = builtin_entry(lexer, sig);
            ws.entries.emplace(name, EntryDecl{name, entry.relabeled(name), std::move(definition)});
        } else if (lexer.accept_atom("table")) {
            ws.entries.emplace(name, table_entry(lexer, name, sig, ws.budget()));
        } else {
            lexer.fail("expected 'builtin' or 'table'");
        }
    });
    pass("bind", [&](Lexer& lexer) {
        lexer.next();
        std::string gen = lexer.expect(Token::Kind::Atom).text;
        lexer.expect(Token::Kind::Equals);
        std::string entry = lexer.expect(Token::Kind::Atom).text;
        if (!ws.generators.count(gen)) throw Error(ErrorKind::Parse, "bind names unknown generator '" + gen + "'");
        if (!ws.entries.count(entry)) throw Error(ErrorKind::Parse, "bind names unknown entry '" + entry + "'");
        require_fresh(ws.bindings, gen, "binding");
        ws.bindings.emplace(gen, entry);
    });
    pass("term", [&](Lexer& lexer) {
        lexer.next();
        std::string name = lexer.expect(Token::Kind::Atom).text;
        lexer.expect(Token::Kind::Equals);
        ws.add_term(name, parse_term(lexer, ws.generators));
    });
    return ws;
}

std::string to_string(const Workspace& ws) {
    std::vector<std::string> sections;
    auto section = [&](auto&& emit) {
        std::string s;
        emit(s);
        if (!s.empty()) sections.push_back(std::move(s));
    };
    section([&](std::string& s) {
        for (const auto& [k, v] : ws.config_lines) s += "config " + k + " = " + v + "\n";
    });
    section([&](std::string& s) {
        for (const auto& [name, g] : ws.generators) s += to_string(g) + "\n";
    });
    section([&](std::string& s) {
        for (const auto& [name, e] : ws.entries) {
            s += "entry " + name + " : " + to_string(e.entry.signature()) + " = " + e.definition + "\n";
        }
    });
    section([&](std::string& s) {
        for (const auto& [gen, entry] : ws.bindings) s += "bind " + gen + " = " + entry + "\n";
    });
    section([&](std::string& s) {
        for (const auto& [name, t] : ws.terms) s += "term " + name + " = " + to_string(t) + "\n";
    });
    std::string out;
    for (std::size_t k = 0; k < sections.size(); ++k) {
        if (k) out += "\n";
        out += sections[k];
    }
    return out;
}

}  // namespace operad
