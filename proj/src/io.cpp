#include "widthforge/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace widthforge::io {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c') continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing header line");
  std::istringstream head(lines[0]);
  std::string p, tw;
  int n = -1, m = -1;
  head >> p >> tw >> n >> m;
  if (p != "p" || tw != "tw" || n < 0 || m < 0 || !head)
    throw ParseError("malformed header: " + lines[0]);
  if (static_cast<int>(lines.size()) - 1 != m)
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                     std::to_string(lines.size() - 1));
  Graph g = Graph::with_vertex_count(n);
  for (int i = 1; i <= m; ++i) {
    std::istringstream es(lines[i]);
    int u = 0, v = 0;
    if (!(es >> u >> v)) throw ParseError("malformed edge line: " + lines[i]);
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError("vertex id out of range: " + lines[i]);
    if (u == v) throw ParseError("self-loop: " + lines[i]);
    if (g.has_edge(u - 1, v - 1)) throw ParseError("duplicate edge: " + lines[i]);
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::map<int, int> label;
  int next = 1;
  for (int v : g.vertices()) label[v] = next++;
  std::ostringstream out;
  out << "p tw " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << label[u] << ' ' << label[v] << '\n';
  return out.str();
}

TreeDecomposition parse_tree_decomposition(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing header line");
  std::istringstream head(lines[0]);
  std::string s, td;
  int bags = -1, maxbag = -1, n = -1;
  head >> s >> td >> bags >> maxbag >> n;
  if (s != "s" || td != "td" || bags < 0 || !head)
    throw ParseError("malformed header: " + lines[0]);

  TreeDecomposition out;
  size_t i = 1;
  for (; i < lines.size() && lines[i][0] == 'b'; ++i) {
    std::istringstream bs(lines[i]);
    char b;
    int node = 0;
    bs >> b >> node;
    if (!bs || node < 1 || node > bags) throw ParseError("malformed bag line: " + lines[i]);
    std::vector<int> bag;
    int v;
    while (bs >> v) {
      if (v < 1 || v > n) throw ParseError("vertex id out of range: " + lines[i]);
      bag.push_back(v - 1);
    }
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    if (out.bags.count(node - 1)) throw ParseError("duplicate bag id: " + lines[i]);
    out.tree.add_vertex(node - 1);
    out.bags[node - 1] = std::move(bag);
  }
  if (static_cast<int>(out.bags.size()) != bags)
    throw ParseError("expected " + std::to_string(bags) + " bag lines");
  for (; i < lines.size(); ++i) {
    std::istringstream es(lines[i]);
    int a = 0, b = 0;
    if (!(es >> a >> b)) throw ParseError("malformed tree edge line: " + lines[i]);
    if (a < 1 || a > bags || b < 1 || b > bags)
      throw ParseError("node id out of range: " + lines[i]);
    out.tree.add_edge(a - 1, b - 1);
  }
  return out;
}

std::string serialize_tree_decomposition(const TreeDecomposition& td, const Graph& g) {
  std::map<int, int> node_label, vertex_label;
  int next = 1;
  for (int node : td.tree.vertices()) node_label[node] = next++;
  next = 1;
  for (int v : g.vertices()) vertex_label[v] = next++;
  size_t maxbag = 0;
  for (const auto& [_, bag] : td.bags) maxbag = std::max(maxbag, bag.size());
  std::ostringstream out;
  out << "s td " << td.tree.vertex_count() << ' ' << maxbag << ' ' << g.vertex_count() << '\n';
  for (const auto& [node, bag] : td.bags) {
    out << "b " << node_label[node];
    for (int v : bag) out << ' ' << vertex_label.at(v);
    out << '\n';
  }
  for (auto [a, b] : td.tree.edges()) out << node_label[a] << ' ' << node_label[b] << '\n';
  return out.str();
}

std::string serialize_path_decomposition(const PathDecomposition& pd, const Graph& g) {
  return serialize_tree_decomposition(pd.to_tree(), g);
}

LinearOrdering parse_ordering(const std::string& text) {
  LinearOrdering f;
  for (const auto& line : content_lines(text)) {
    std::istringstream in(line);
    int v = 0;
    if (!(in >> v) || v < 1) throw ParseError("malformed ordering line: " + line);
    f.order.push_back(v - 1);
  }
  return f;
}

std::string serialize_ordering(const LinearOrdering& f) {
  std::ostringstream out;
  for (int v : f.order) out << v + 1 << '\n';
  return out.str();
}

std::string serialize_embedding(const special::GridEmbedding& emb) {
  std::ostringstream out;
  for (const auto& [v, c] : emb.coords)
    out << v + 1 << ' ' << c.x << ' ' << c.y << ' ' << c.z << '\n';
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (int v : g.vertices())
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace widthforge::io
