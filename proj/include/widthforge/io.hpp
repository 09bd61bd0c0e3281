#pragma once

#include <iosfwd>
#include <string>

#include "widthforge/decomposition.hpp"
#include "widthforge/graph.hpp"
#include "widthforge/special.hpp"

namespace widthforge::io {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// PACE-style graph files: "p tw <n> <m>" header, one "u v" line per edge with
// 1-based ids, "c" comment lines anywhere. Vertices are 0-based in memory.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);  // relabels ids to 1..n in id order

// PACE-style decompositions: "s td <bags> <maxbag> <n>", "b <i> <v...>" bag
// lines, then tree edges. Serialization relabels bag vertices exactly like
// serialize_graph does, so a written (graph, certificate) pair stays
// consistent even when the in-memory ids are sparse.
TreeDecomposition parse_tree_decomposition(const std::string& text);
std::string serialize_tree_decomposition(const TreeDecomposition& td, const Graph& g);
std::string serialize_path_decomposition(const PathDecomposition& pd, const Graph& g);

// One 1-based vertex id per line.
LinearOrdering parse_ordering(const std::string& text);
std::string serialize_ordering(const LinearOrdering& f);

// One "id x y z" line per vertex, ids 1-based.
std::string serialize_embedding(const special::GridEmbedding& emb);

std::string to_dot(const Graph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace widthforge::io
