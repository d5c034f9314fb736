#pragma once

// Graph-triple text format:
//   line 1:            n <int>
//   subsequent lines:  <c> <u> <v>   with c in {1,2,3}, 0 <= u < v < n
// '#' begins a comment line; duplicate edge lines are idempotent.
// The writer emits the canonical serialization: sorted (c,u,v) lines.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rainbow/bitgraph.hpp"

namespace rainbow {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

inline GraphTriple read_triple(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    GraphBuilder* builders[3] = {nullptr, nullptr, nullptr};
    std::vector<GraphBuilder> storage;

    auto is_blank = [](const std::string& s) {
        for (char ch : s)
            if (!std::isspace(static_cast<unsigned char>(ch))) return false;
        return true;
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (is_blank(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag >> n) || tag != "n" || n < 0 || n > kMaxVertices)
                throw ParseError(lineno, "expected header 'n <count>'");
            std::string rest;
            if (ls >> rest) throw ParseError(lineno, "trailing tokens after header");
            storage.reserve(3);
            for (int c = 0; c < 3; ++c) storage.emplace_back(n);
            for (int c = 0; c < 3; ++c) builders[c] = &storage[c];
            continue;
        }
        int c, u, v;
        if (!(ls >> c >> u >> v)) throw ParseError(lineno, "expected '<c> <u> <v>'");
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "trailing tokens after edge");
        if (c < 1 || c > 3) throw ParseError(lineno, "color must be 1, 2 or 3");
        if (u < 0 || v < 0 || u >= v || v >= n)
            throw ParseError(lineno, "edge must satisfy 0 <= u < v < n");
        builders[c - 1]->add_edge(u, v);
    }
    if (n < 0) throw ParseError(lineno, "missing 'n <count>' header");
    return GraphTriple(storage[0].build(), storage[1].build(), storage[2].build());
}

inline void write_triple(std::ostream& out, const GraphTriple& t) {
    out << "n " << t.n() << "\n";
    for (int c = 0; c < 3; ++c) {
        const SimpleGraph& g = t.graph(c);
        for (int u = 0; u < t.n(); ++u)
            for (int v = u + 1; v < t.n(); ++v)
                if (g.has_edge(u, v)) out << (c + 1) << " " << u << " " << v << "\n";
    }
}

}  // namespace rainbow
