#include "vnum/io.hpp"

#include "vnum/errors.hpp"
#include "vnum/graph_invariants.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace vnum {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream ss{std::string(raw)};
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (!tokens.empty()) out.push_back({number, std::move(tokens)});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

long long parse_small_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error(line, "expected an integer, got '" + tok + "'");
    }
}

} // namespace

ParsedGraph parse_graph_text(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw parse_error(1, "empty graph description");
    const Line& head = lines[0];
    if (head.tokens[0] != "vertices" || head.tokens.size() != 2)
        throw parse_error(head.number, "expected 'vertices <n>'");
    long long n = parse_small_int(head.tokens[1], head.number);
    if (n < 1 || n > 64)
        throw validation_error("line " + std::to_string(head.number) +
                               ": vertex count must be between 1 and 64");

    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> warnings;
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (ln.tokens[0] != "edge" || ln.tokens.size() != 3)
            throw parse_error(ln.number, "expected 'edge <u> <v>'");
        long long u = parse_small_int(ln.tokens[1], ln.number);
        long long v = parse_small_int(ln.tokens[2], ln.number);
        if (u < 1 || u > n || v < 1 || v > n)
            throw validation_error("line " + std::to_string(ln.number) +
                                   ": edge endpoint out of range");
        if (u == v)
            throw validation_error("line " + std::to_string(ln.number) + ": loop edge at vertex " +
                                   std::to_string(u));
        int uu = static_cast<int>(u), vv = static_cast<int>(v);
        if (uu > vv) std::swap(uu, vv);
        if (!seen.emplace(uu, vv).second) {
            warnings.push_back("line " + std::to_string(ln.number) + ": duplicate edge " +
                               std::to_string(uu) + "-" + std::to_string(vv) + " collapsed");
            continue;
        }
        edges.emplace_back(uu, vv);
    }
    return {Graph(static_cast<int>(n), std::move(edges)), std::move(warnings)};
}

MonomialIdeal parse_ideal_text(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw parse_error(1, "empty ideal description");
    const Line& head = lines[0];
    if (head.tokens[0] != "vars" || head.tokens.size() != 2)
        throw parse_error(head.number, "expected 'vars <s>'");
    long long s = parse_small_int(head.tokens[1], head.number);
    if (s < 1) throw validation_error("line " + std::to_string(head.number) +
                                      ": variable count must be positive");

    std::vector<Monomial> gens;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (static_cast<long long>(ln.tokens.size()) != s)
            throw parse_error(ln.number, "expected " + std::to_string(s) +
                                             " exponents, got " +
                                             std::to_string(ln.tokens.size()));
        std::vector<BigInt> exps;
        exps.reserve(ln.tokens.size());
        for (const auto& tok : ln.tokens) {
            BigInt e;
            try {
                e = BigInt::parse(tok);
            } catch (const error&) {
                throw parse_error(ln.number, "bad exponent '" + tok + "'");
            }
            if (e.sign() < 0)
                throw validation_error("line " + std::to_string(ln.number) +
                                       ": negative exponent");
            exps.push_back(std::move(e));
        }
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(static_cast<int>(s), std::move(gens));
}

std::string serialize_graph(const Graph& g) {
    std::string out = "vertices " + std::to_string(g.num_vertices()) + "\n";
    for (auto [u, v] : g.edges())
        out += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string serialize_ideal(const MonomialIdeal& I) {
    std::string out = "vars " + std::to_string(I.num_vars()) + "\n";
    for (const auto& g : I.generators()) {
        for (int i = 1; i <= I.num_vars(); ++i) {
            if (i > 1) out += " ";
            out += g.exp(i).to_string();
        }
        out += "\n";
    }
    return out;
}

Graph cycle_graph(int s) {
    if (s < 3) throw precondition_error("cycle_graph: need s >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < s; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(s, 1);
    return Graph(s, std::move(edges));
}

Graph path_graph(int s) {
    if (s < 1) throw precondition_error("path_graph: need s >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < s; ++i) edges.emplace_back(i, i + 1);
    return Graph(s, std::move(edges));
}

Graph complete_graph(int s) {
    if (s < 1) throw precondition_error("complete_graph: need s >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j) edges.emplace_back(i, j);
    return Graph(s, std::move(edges));
}

Graph t10_graph() {
    std::vector<std::pair<int, int>> edges = {{1, 2}, {2, 3}, {3, 4},  {4, 5},
                                              {5, 6}, {6, 7}, {7, 1},  {1, 8},
                                              {8, 9}, {9, 10}, {5, 10}, {4, 10}};
    return Graph(10, std::move(edges));
}

Graph example52_graph() {
    std::vector<std::pair<int, int>> edges = {{1, 2}, {2, 3}, {3, 4}, {1, 4},
                                              {1, 5}, {2, 5}, {3, 5}, {4, 5},
                                              {1, 6}, {2, 6}, {3, 6}, {4, 6}};
    return Graph(6, std::move(edges));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GraphSpecResult resolve_graph_spec(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw error("missing graph argument");
    const std::string& head = tokens[0];

    auto need_count = [&](const char* what) {
        if (tokens.size() != 2) throw error(std::string(what) + " takes one size argument");
        return static_cast<int>(parse_small_int(tokens[1], 1));
    };

    if (head == "cycle") {
        int s = need_count("cycle");
        return {cycle_graph(s), "cycle " + std::to_string(s), {}};
    }
    if (head == "path") {
        int s = need_count("path");
        return {path_graph(s), "path " + std::to_string(s), {}};
    }
    if (head == "complete") {
        int s = need_count("complete");
        return {complete_graph(s), "complete " + std::to_string(s), {}};
    }
    if (head == "T10") {
        if (tokens.size() != 1) throw error("T10 takes no arguments");
        return {t10_graph(), "T10", {}};
    }
    if (head == "example52") {
        if (tokens.size() != 1) throw error("example52 takes no arguments");
        return {example52_graph(), "example52", {}};
    }
    if (head == "whisker") {
        if (tokens.size() < 2) throw error("whisker needs a graph argument");
        GraphSpecResult inner =
            resolve_graph_spec(std::vector<std::string>(tokens.begin() + 1, tokens.end()));
        return {whisker(inner.graph), "whisker " + inner.description,
                std::move(inner.warnings)};
    }
    if (tokens.size() == 1) {
        ParsedGraph parsed = parse_graph_text(read_file(head));
        return {std::move(parsed.graph), head, std::move(parsed.warnings)};
    }
    throw error("unrecognized graph spec: '" + head + "'");
}

} // namespace vnum
