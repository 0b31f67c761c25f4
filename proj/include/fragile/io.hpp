#pragma once

#include "fragile/graph.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace fragile {

enum class Format { edgelist, graph6, dimacs };

std::optional<Format> format_from_name(std::string_view name);
const char* format_name(Format f) noexcept;

/// Edge list: one "u v" pair per line (0-based), '#' starts a comment, blank
/// lines are ignored. A line holding a single id declares a vertex, which is
/// how isolated vertices survive a round trip.
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

/// graph6, with or without the ">>graph6<<" header; all three size encodings.
/// A trailing newline is accepted. Only the first graph in the input is read.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// DIMACS: "c" comments, one "p edge n m" header, "e u v" edges (1-based).
Graph parse_dimacs(std::string_view text);
std::string emit_dimacs(const Graph& g);

Graph parse(std::string_view text, Format f);
std::string emit(const Graph& g, Format f);

/// "v c" per line, 0-based vertices, 1-based colours.
std::string emit_colouring(const Colouring& c);

}  // namespace fragile
