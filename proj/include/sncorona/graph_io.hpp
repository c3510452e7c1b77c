// graph_io.hpp - signed edge-list text format.
//
//   # comment
//   4            <- vertex count, first non-comment line
//   0 1 +        <- "u v s", 0-based, s in {+, -, +1, -1}
//   0 3 -
//
// Blank lines are ignored. Writing always emits "+" / "-".
#pragma once

#include <sncorona/error.hpp>
#include <sncorona/signed_graph.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace sncorona {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::optional<std::size_t> parse_index(std::string_view tok) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return v;
}

inline std::optional<int> parse_sign(std::string_view tok) {
    if (tok == "+" || tok == "+1" || tok == "1") return 1;
    if (tok == "-" || tok == "-1") return -1;
    return std::nullopt;
}

}  // namespace detail

inline SignedGraph parse_graph(std::istream& in) {
    std::optional<std::size_t> n;
    std::vector<EdgeTriple> triples;
    std::vector<std::size_t> line_of;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto tok = detail::split_ws(line);
        if (!n) {
            if (tok.size() != 1) throw ParseError(line_no, ErrorCode::ParseError, "expected vertex count");
            n = detail::parse_index(tok[0]);
            if (!n) throw ParseError(line_no, ErrorCode::ParseError, "bad vertex count '" + std::string(tok[0]) + "'");
            continue;
        }
        if (tok.size() != 3) throw ParseError(line_no, ErrorCode::ParseError, "expected 'u v s'");
        const auto u = detail::parse_index(tok[0]);
        const auto v = detail::parse_index(tok[1]);
        const auto s = detail::parse_sign(tok[2]);
        if (!u || !v) throw ParseError(line_no, ErrorCode::ParseError, "bad vertex index");
        if (!s) throw ParseError(line_no, ErrorCode::ParseError, "bad sign '" + std::string(tok[2]) + "'");
        if (*u >= *n || *v >= *n) throw ParseError(line_no, ErrorCode::IndexOutOfRange, "index >= n");
        if (*u == *v) throw ParseError(line_no, ErrorCode::SelfLoop, "loop at vertex " + std::to_string(*u));
        triples.push_back({*u, *v, *s});
        line_of.push_back(line_no);
    }
    if (!n) throw ParseError(line_no, ErrorCode::ParseError, "missing vertex count");
    try {
        return from_edge_list(*n, triples);
    } catch (const Error& e) {
        // Only duplicates can get here; report the later of the two lines.
        std::vector<std::pair<Vertex, Vertex>> seen;
        for (std::size_t i = 0; i < triples.size(); ++i) {
            std::pair key{std::min(triples[i].u, triples[i].v), std::max(triples[i].u, triples[i].v)};
            if (std::find(seen.begin(), seen.end(), key) != seen.end())
                throw ParseError(line_of[i], e.code(),
                                 "edge {" + std::to_string(key.first) + ", " + std::to_string(key.second) +
                                     "} listed twice");
            seen.push_back(key);
        }
        throw;
    }
}

inline SignedGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

inline std::string format_graph(const SignedGraph& s) {
    std::ostringstream out;
    out << s.order() << '\n';
    for (const auto& e : s.edges()) out << e.u << ' ' << e.v << ' ' << (e.sign == Sign::Positive ? '+' : '-') << '\n';
    return out.str();
}

inline SignedGraph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
    return parse_graph(in);
}

inline void write_graph(const SignedGraph& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    out << format_graph(s);
    if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

}  // namespace sncorona
