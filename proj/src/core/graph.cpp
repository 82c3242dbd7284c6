#include "graph.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace mpex {

MultipartiteGraph MultipartiteGraph::edgeless(std::span<const Int> part_sizes) {
  Wide total = 0;
  for (Int s : part_sizes) {
    if (s < 1) {
      throw Error(ErrorCode::InvalidSize, "part sizes must be positive, got " + std::to_string(s));
    }
    total += s;
  }
  if (total > kMaxVertices) {
    throw Error(ErrorCode::InvalidSize,
                "graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  MultipartiteGraph g;
  g.part_sizes_.assign(part_sizes.begin(), part_sizes.end());
  g.part_begin_.push_back(0);
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    for (Int i = 0; i < part_sizes[p]; ++i) g.part_of_.push_back(static_cast<int>(p));
    g.part_begin_.push_back(static_cast<int>(g.part_of_.size()));
  }
  g.adj_.assign(g.part_of_.size(), VertexSet{});
  g.all_ = VertexSet::range(0, g.vertex_count());
  return g;
}

MultipartiteGraph MultipartiteGraph::complete(const SizeMultiset& ns) {
  if (ns.empty()) throw Error(ErrorCode::InvalidSize, "host needs at least one part");
  auto g = edgeless(ns.values());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int p = g.part_of_[v];
    g.adj_[v] = g.all_ - VertexSet::range(g.part_begin(p), g.part_end(p));
  }
  return g;
}

std::size_t MultipartiteGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& a : adj_) twice += static_cast<std::size_t>(a.count());
  return twice / 2;
}

std::vector<Edge> MultipartiteGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < vertex_count(); ++u) {
    adj_[u].above(u).for_each([&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

void MultipartiteGraph::add_edge(int u, int v) {
  const int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range: " +
                                                std::to_string(u) + " " + std::to_string(v));
  }
  if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loop at " + std::to_string(u));
  if (part_of_[u] == part_of_[v]) {
    throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(u) + " " +
                                                std::to_string(v) + " lies inside one part");
  }
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void MultipartiteGraph::join(const VertexSet& a, const VertexSet& b) {
  a.for_each([&](int u) {
    b.for_each([&](int v) {
      if (part_of_[u] != part_of_[v]) add_edge(u, v);
    });
  });
}

void MultipartiteGraph::erase_edge(int u, int v) noexcept {
  adj_[u].erase(v);
  adj_[v].erase(u);
}

MultipartiteGraph MultipartiteGraph::remove_edges(std::span<const Edge> edges) const {
  MultipartiteGraph out = *this;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= vertex_count() || !out.adjacent(e.u, e.v)) {
      throw Error(ErrorCode::NotAnEdge, "(" + std::to_string(e.u) + ", " +
                                            std::to_string(e.v) + ") is not an edge");
    }
    out.erase_edge(e.u, e.v);
  }
  return out;
}

std::string write_edge_list(const MultipartiteGraph& g) {
  std::ostringstream os;
  os << "parts: ";
  const auto sizes = g.part_sizes();
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) os << ',';
    os << sizes[i];
  }
  os << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, "edge list line " + std::to_string(line) + ": " + what);
}

Int parse_int(std::string_view s, std::size_t line) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    parse_error(line, "expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

MultipartiteGraph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  if (lines.empty()) parse_error(1, "missing 'parts:' header");

  constexpr std::string_view kHeader = "parts: ";
  if (!lines[0].starts_with(kHeader)) parse_error(1, "missing 'parts:' header");
  std::vector<Int> sizes;
  std::string_view list = lines[0].substr(kHeader.size());
  while (true) {
    const auto comma = list.find(',');
    sizes.push_back(parse_int(list.substr(0, comma), 1));
    if (comma == std::string_view::npos) break;
    list = list.substr(comma + 1);
  }
  MultipartiteGraph g;
  try {
    g = MultipartiteGraph::edgeless(sizes);
  } catch (const Error& e) {
    parse_error(1, e.what());
  }

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto line = lines[i];
    if (line.empty()) continue;
    const auto space = line.find(' ');
    if (space == std::string_view::npos) parse_error(i + 1, "expected 'u v'");
    const Int u = parse_int(line.substr(0, space), i + 1);
    const Int v = parse_int(line.substr(space + 1), i + 1);
    if (u >= v) parse_error(i + 1, "edges must be written with u < v");
    if (u < 0 || v >= g.vertex_count()) parse_error(i + 1, "vertex id out of range");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) {
      parse_error(i + 1, "duplicate edge");
    }
    try {
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    } catch (const Error& e) {
      parse_error(i + 1, e.what());
    }
  }
  return g;
}

MultipartiteGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list_file(const MultipartiteGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << write_edge_list(g);
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

}  // namespace mpex
