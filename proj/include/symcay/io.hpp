#pragma once

// Text input formats.
//
// Generator / spec files:
//   degree N                       required once, before any perm line
//   perm NAME = (a,b,...)(...)     1-based cycles, product in listed order
//   group NAME = <n1, n2, ...>     members are previously defined perm names
//   coset G H g                    at most one task directive per file
//   cayley R S = {n1, n2, ...}
//   quotient GRAPHFILE X N         GRAPHFILE is relative to the spec file
//   search G H [valency]
// Names match [A-Za-z0-9_]+; `#` starts a comment (whole line or trailing);
// blank lines are ignored.
//
// Edge lists:
//   vertices N
//   u v                            one 1-based pair per line
//
// Errors are ParseError; for file input position() carries the 1-based line
// number of the offending line.

#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "perm.hpp"

namespace symcay {

enum class DirectiveKind { none, coset, cayley, quotient, search };

/// The single task a spec file requests, with all operands by name.
struct Directive {
    DirectiveKind kind = DirectiveKind::none;
    std::string group_a;               // coset/search: G; cayley: R; quotient: X
    std::string group_b;               // coset/search: H; quotient: N
    std::string perm;                  // coset: g
    std::string set_name;              // cayley: the label left of '='
    std::vector<std::string> set;      // cayley: connection-set member names
    std::string graph_file;            // quotient: edge-list path as written
    std::optional<long long> valency;  // search: optional target valency
};

/// A fully parsed spec file: every name resolved, at most one directive.
struct SpecFile {
    int degree = 0;
    std::vector<std::pair<std::string, Permutation>> perms;  // file order
    std::vector<std::string> group_names;                    // file order
    Directive directive;

    const Permutation& perm(const std::string& name) const {
        auto it = perm_index_.find(name);
        if (it == perm_index_.end())
            throw InvalidParameter("unknown permutation name '" + name + "'");
        return perms[it->second].second;
    }

    const GeneratedGroup& group(const std::string& name) const {
        auto it = groups_.find(name);
        if (it == groups_.end()) throw InvalidParameter("unknown group name '" + name + "'");
        return it->second;
    }

    bool has_perm(const std::string& name) const { return perm_index_.count(name) != 0; }
    bool has_group(const std::string& name) const { return groups_.count(name) != 0; }

    // populated by the parser
    std::map<std::string, std::size_t> perm_index_;
    std::map<std::string, GeneratedGroup> groups_;
};

namespace detail_io {

inline ParseError at_line(const std::string& msg, std::size_t line) {
    return ParseError("line " + std::to_string(line) + ": " + msg, line);
}

inline std::string strip(const std::string& raw) {
    std::string s = raw;
    if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline std::vector<std::string> split_names(const std::string& body, std::size_t line) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : body) {
        if (c == ',') {
            names.push_back(strip(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    names.push_back(strip(cur));
    for (const auto& n : names)
        if (!valid_name(n)) throw at_line("bad name '" + n + "' in list", line);
    return names;
}

inline long long parse_count(const std::string& tok, std::size_t line, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size() || v <= 0) throw std::invalid_argument("range");
        return v;
    } catch (const std::exception&) {
        throw at_line(std::string("expected a positive integer ") + what + ", got '" + tok + "'",
                      line);
    }
}

}  // namespace detail_io

/// Parses the generator / spec format from a stream.  `source` only labels
/// error messages.
inline SpecFile parse_spec(std::istream& in) {
    using detail_io::at_line;
    SpecFile out;
    bool have_degree = false;
    std::string raw;
    std::size_t line_no = 0;

    auto require_new_name = [&](const std::string& name, std::size_t line) {
        if (!detail_io::valid_name(name)) throw at_line("bad name '" + name + "'", line);
        if (out.perm_index_.count(name) || out.groups_.count(name))
            throw at_line("duplicate name '" + name + "'", line);
    };
    auto need_group = [&](const std::string& name, std::size_t line) {
        if (!out.groups_.count(name)) throw at_line("unknown group '" + name + "'", line);
    };
    auto need_perm = [&](const std::string& name, std::size_t line) {
        if (!out.perm_index_.count(name)) throw at_line("unknown permutation '" + name + "'", line);
    };
    auto one_directive = [&](std::size_t line) {
        if (out.directive.kind != DirectiveKind::none)
            throw at_line("a spec file may hold at most one task directive", line);
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = detail_io::strip(raw);
        if (line.empty()) continue;

        std::istringstream words(line);
        std::string keyword;
        words >> keyword;

        if (keyword == "degree") {
            if (have_degree) throw at_line("duplicate degree line", line_no);
            std::string tok;
            words >> tok;
            std::string extra;
            if (words >> extra) throw at_line("trailing text after degree", line_no);
            out.degree = static_cast<int>(detail_io::parse_count(tok, line_no, "degree"));
            have_degree = true;
        } else if (keyword == "perm") {
            if (!have_degree) throw at_line("degree must precede perm lines", line_no);
            auto eq = line.find('=');
            if (eq == std::string::npos) throw at_line("perm line needs '='", line_no);
            std::string name = detail_io::strip(line.substr(4, eq - 4));
            require_new_name(name, line_no);
            std::string cycles = detail_io::strip(line.substr(eq + 1));
            if (cycles.empty()) throw at_line("perm line needs cycle notation", line_no);
            Permutation p = [&] {
                try {
                    return parse_cycle_word(cycles, out.degree);
                } catch (const Error& e) {
                    throw at_line(std::string("bad cycles for '" + name + "': ") + e.what(),
                                  line_no);
                }
            }();
            out.perm_index_[name] = out.perms.size();
            out.perms.emplace_back(name, std::move(p));
        } else if (keyword == "group") {
            if (!have_degree) throw at_line("degree must precede group lines", line_no);
            auto eq = line.find('=');
            if (eq == std::string::npos) throw at_line("group line needs '='", line_no);
            std::string name = detail_io::strip(line.substr(5, eq - 5));
            require_new_name(name, line_no);
            std::string body = detail_io::strip(line.substr(eq + 1));
            if (body.size() < 2 || body.front() != '<' || body.back() != '>')
                throw at_line("group members belong in <...>", line_no);
            auto members = detail_io::split_names(body.substr(1, body.size() - 2), line_no);
            std::vector<Permutation> gens;
            gens.reserve(members.size());
            for (const auto& m : members) {
                need_perm(m, line_no);
                gens.push_back(out.perm(m));
            }
            out.group_names.push_back(name);
            out.groups_.emplace(name, GeneratedGroup(out.degree, gens));
        } else if (keyword == "coset") {
            one_directive(line_no);
            std::string g, h, j, extra;
            if (!(words >> g >> h >> j) || (words >> extra))
                throw at_line("usage: coset G H g", line_no);
            need_group(g, line_no);
            need_group(h, line_no);
            need_perm(j, line_no);
            out.directive.kind = DirectiveKind::coset;
            out.directive.group_a = g;
            out.directive.group_b = h;
            out.directive.perm = j;
        } else if (keyword == "cayley") {
            one_directive(line_no);
            auto eq = line.find('=');
            if (eq == std::string::npos) throw at_line("usage: cayley R S = {n1, ...}", line_no);
            std::istringstream head(line.substr(6, eq - 6));
            std::string r, label, extra;
            if (!(head >> r >> label) || (head >> extra))
                throw at_line("usage: cayley R S = {n1, ...}", line_no);
            need_group(r, line_no);
            if (!detail_io::valid_name(label)) throw at_line("bad name '" + label + "'", line_no);
            std::string body = detail_io::strip(line.substr(eq + 1));
            if (body.size() < 2 || body.front() != '{' || body.back() != '}')
                throw at_line("connection set belongs in {...}", line_no);
            auto members = detail_io::split_names(body.substr(1, body.size() - 2), line_no);
            for (const auto& m : members) need_perm(m, line_no);
            out.directive.kind = DirectiveKind::cayley;
            out.directive.group_a = r;
            out.directive.set_name = label;
            out.directive.set = members;
        } else if (keyword == "quotient") {
            one_directive(line_no);
            std::string file, x, n, extra;
            if (!(words >> file >> x >> n) || (words >> extra))
                throw at_line("usage: quotient GRAPHFILE X N", line_no);
            need_group(x, line_no);
            need_group(n, line_no);
            out.directive.kind = DirectiveKind::quotient;
            out.directive.graph_file = file;
            out.directive.group_a = x;
            out.directive.group_b = n;
        } else if (keyword == "search") {
            one_directive(line_no);
            std::string g, h;
            if (!(words >> g >> h)) throw at_line("usage: search G H [valency]", line_no);
            need_group(g, line_no);
            need_group(h, line_no);
            out.directive.kind = DirectiveKind::search;
            out.directive.group_a = g;
            out.directive.group_b = h;
            std::string tok;
            if (words >> tok) {
                out.directive.valency = detail_io::parse_count(tok, line_no, "valency");
                std::string extra;
                if (words >> extra) throw at_line("trailing text after valency", line_no);
            }
        } else {
            throw at_line("unknown keyword '" + keyword + "'", line_no);
        }
    }
    if (!have_degree) throw ParseError("spec file has no degree line", 0);
    return out;
}

inline SpecFile load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open spec file '" + path + "'");
    return parse_spec(in);
}

/// Parses the `vertices N` + 1-based pair format.
inline SimpleGraph parse_edge_list(std::istream& in) {
    using detail_io::at_line;
    std::string raw;
    std::size_t line_no = 0;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = detail_io::strip(raw);
        if (line.empty()) continue;
        std::istringstream words(line);
        if (n < 0) {
            std::string keyword, tok, extra;
            words >> keyword;
            if (keyword != "vertices" || !(words >> tok) || (words >> extra))
                throw at_line("expected 'vertices N'", line_no);
            n = detail_io::parse_count(tok, line_no, "vertex count");
            if (n > (1 << 30)) throw at_line("vertex count out of range", line_no);
            continue;
        }
        std::string a, b, extra;
        if (!(words >> a >> b) || (words >> extra))
            throw at_line("expected an edge 'u v'", line_no);
        long long u = detail_io::parse_count(a, line_no, "vertex");
        long long v = detail_io::parse_count(b, line_no, "vertex");
        if (u > n || v > n) throw at_line("vertex outside 1.." + std::to_string(n), line_no);
        if (u == v) throw at_line("loops are not allowed", line_no);
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    if (n < 0) throw ParseError("edge list has no vertices line", 0);
    return SimpleGraph(static_cast<int>(n), edges);
}

inline SimpleGraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open edge list '" + path + "'");
    return parse_edge_list(in);
}

/// Resolves `rel` against the directory holding `base_file`, leaving
/// absolute paths untouched.
inline std::string resolve_relative(const std::string& base_file, const std::string& rel) {
    if (!rel.empty() && rel.front() == '/') return rel;
    auto slash = base_file.find_last_of('/');
    if (slash == std::string::npos) return rel;
    return base_file.substr(0, slash + 1) + rel;
}

}  // namespace symcay
