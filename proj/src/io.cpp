#include "fragile/io.hpp"

#include "fragile/error.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

namespace fragile {

namespace {

constexpr std::string_view graph6_header = ">>graph6<<";
constexpr long long max_vertices = 68719476735LL;  // 2^36 - 1, graph6 limit

struct Line {
    std::string_view text;
    std::size_t number;  // 1-based
    std::size_t offset;  // byte offset of the line start
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t start = 0, number = 1;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({line, number++, start});
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

struct Token {
    std::string_view text;
    std::size_t offset;
};

std::vector<Token> tokens(const Line& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto& s = line.text;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        if (i >= s.size()) break;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        out.push_back({s.substr(i, j - i), line.offset + i});
        i = j;
    }
    return out;
}

long long to_int(const Token& t, const Line& line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError("expected an integer, got '" + std::string(t.text) + "'", line.number,
                         t.offset);
    return value;
}

std::string_view strip_comment(std::string_view s) {
    auto hash = s.find('#');
    return hash == std::string_view::npos ? s : s.substr(0, hash);
}

}  // namespace

std::optional<Format> format_from_name(std::string_view name) {
    if (name == "edgelist" || name == "el" || name == "txt") return Format::edgelist;
    if (name == "graph6" || name == "g6") return Format::graph6;
    if (name == "dimacs" || name == "col") return Format::dimacs;
    return std::nullopt;
}

const char* format_name(Format f) noexcept {
    switch (f) {
    case Format::edgelist: return "edgelist";
    case Format::graph6: return "graph6";
    case Format::dimacs: return "dimacs";
    }
    return "?";
}

Graph parse_edgelist(std::string_view text) {
    std::vector<Edge> edges;
    long long n = 0;
    for (const auto& raw : split_lines(text)) {
        Line line{strip_comment(raw.text), raw.number, raw.offset};
        auto toks = tokens(line);
        if (toks.empty()) continue;
        if (toks.size() > 2)
            throw ParseError("expected 'u v'", line.number, toks[2].offset);
        long long u = to_int(toks[0], line);
        long long v = toks.size() == 2 ? to_int(toks[1], line) : u;
        if (u < 0 || v < 0 || u >= max_vertices || v >= max_vertices)
            throw ParseError("vertex id out of range", line.number, toks[0].offset);
        if (toks.size() == 2) {
            if (u == v)
                throw ParseError("self-loop at vertex " + std::to_string(u), line.number,
                                 toks[0].offset);
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        n = std::max({n, u + 1, v + 1});
    }
    return build_graph(static_cast<int>(n), edges);
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    int last_covered = -1;
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
        last_covered = std::max(last_covered, v);
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0 && v > last_covered) out << v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, graph6_header.size()) == graph6_header) pos = graph6_header.size();
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view body = text.substr(pos, end - pos);
    if (!body.empty() && body.back() == '\r') body.remove_suffix(1);

    std::size_t i = 0;
    auto next = [&]() -> int {
        if (i >= body.size()) throw ParseError("truncated graph6 data", 1, pos + i);
        int c = static_cast<unsigned char>(body[i]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", 1, pos + i);
        ++i;
        return c - 63;
    };

    long long n = 0;
    if (body.empty()) throw ParseError("empty graph6 string", 1, pos);
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        int second = next();
        if (second < 63) {
            n = second;
            for (int k = 0; k < 2; ++k) n = (n << 6) | next();
        } else {
            for (int k = 0; k < 6; ++k) n = (n << 6) | next();
        }
    }
    if (n > 100'000'000) throw ParseError("graph6 order too large", 1, pos);

    std::vector<Edge> edges;
    int bits = 0, word = 0;
    for (long long v = 1; v < n; ++v)
        for (long long u = 0; u < v; ++u) {
            if (bits == 0) {
                word = next();
                bits = 6;
            }
            --bits;
            if ((word >> bits) & 1) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    if (i != body.size()) throw ParseError("trailing graph6 data", 1, pos + i);
    return build_graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    long long n = g.order();
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int bits = 0, word = 0;
    for (Vertex v = 1; v < g.order(); ++v)
        for (Vertex u = 0; u < v; ++u) {
            word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + word));
                bits = word = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>(63 + (word << (6 - bits))));
    out.push_back('\n');
    return out;
}

Graph parse_dimacs(std::string_view text) {
    long long n = -1;
    std::vector<Edge> edges;
    for (const auto& line : split_lines(text)) {
        auto toks = tokens(line);
        if (toks.empty() || toks[0].text == "c") continue;
        if (toks[0].text == "p") {
            if (n >= 0) throw ParseError("duplicate 'p' line", line.number, line.offset);
            if (toks.size() != 4 || (toks[1].text != "edge" && toks[1].text != "col"))
                throw ParseError("expected 'p edge n m'", line.number, line.offset);
            n = to_int(toks[2], line);
            if (n < 0 || n > 100'000'000)
                throw ParseError("vertex count out of range", line.number, toks[2].offset);
        } else if (toks[0].text == "e") {
            if (n < 0) throw ParseError("edge before 'p' line", line.number, line.offset);
            if (toks.size() != 3) throw ParseError("expected 'e u v'", line.number, line.offset);
            long long u = to_int(toks[1], line), v = to_int(toks[2], line);
            if (u < 1 || u > n) throw ParseError("vertex id out of range", line.number, toks[1].offset);
            if (v < 1 || v > n) throw ParseError("vertex id out of range", line.number, toks[2].offset);
            if (u == v) throw ParseError("self-loop", line.number, toks[1].offset);
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw ParseError("unknown DIMACS line type '" + std::string(toks[0].text) + "'",
                             line.number, toks[0].offset);
        }
    }
    if (n < 0) throw ParseError("missing 'p edge n m' line", 1, 0);
    return build_graph(static_cast<int>(n), edges);
}

std::string emit_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph parse(std::string_view text, Format f) {
    switch (f) {
    case Format::edgelist: return parse_edgelist(text);
    case Format::graph6: return parse_graph6(text);
    case Format::dimacs: return parse_dimacs(text);
    }
    throw Error(Errc::parse_error, "unknown format");
}

std::string emit(const Graph& g, Format f) {
    switch (f) {
    case Format::edgelist: return emit_edgelist(g);
    case Format::graph6: return emit_graph6(g);
    case Format::dimacs: return emit_dimacs(g);
    }
    return {};
}

std::string emit_colouring(const Colouring& c) {
    std::ostringstream out;
    for (Vertex v = 0; v < c.size(); ++v) out << v << ' ' << c[v] << '\n';
    return out.str();
}

}  // namespace fragile
