#include "mixgeo/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace mixgeo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopRejected: return "LoopRejected";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DigonConflict: return "DigonConflict";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::DegenerateRoot: return "DegenerateRoot";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::FixtureSelfCheckFailed: return "FixtureSelfCheckFailed";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotBijection: return "NotBijection";
    case ErrorKind::InvalidParam: return "InvalidParam";
    case ErrorKind::CatalogIncomplete: return "CatalogIncomplete";
    case ErrorKind::IdentityInS: return "IdentityInS";
  }
  return "Unknown";
}

namespace {

std::string pair_text(Vertex a, Vertex b, bool directed) {
  std::ostringstream os;
  if (directed)
    os << "(" << a << "," << b << ")";
  else
    os << "{" << a << "," << b << "}";
  return os.str();
}

bool contains_sorted(const std::vector<Vertex>& v, Vertex x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

MixedGraph build_graph(int n, std::span<const VertexPair> edge_list, std::span<const VertexPair> arc_list) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "vertex count must be at least 1, got " + std::to_string(n));

  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error(ErrorKind::OutOfRange, "edge " + pair_text(a, b, false) + " outside [0," + std::to_string(n) + ")");
    if (a == b) throw Error(ErrorKind::LoopRejected, "edge " + pair_text(a, b, false));
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<Arc> arcs;
  arcs.reserve(arc_list.size());
  for (auto [a, b] : arc_list) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error(ErrorKind::OutOfRange, "arc " + pair_text(a, b, true) + " outside [0," + std::to_string(n) + ")");
    if (a == b) throw Error(ErrorKind::LoopRejected, "arc " + pair_text(a, b, true));
    arcs.push_back({a, b});
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  MixedGraph g;
  g.n_ = n;
  g.nbr_.assign(n, {});
  g.out_.assign(n, {});
  g.in_.assign(n, {});
  for (const Edge& e : edges) {
    g.nbr_[e.u].push_back(e.v);
    g.nbr_[e.v].push_back(e.u);
  }
  for (auto& l : g.nbr_) std::sort(l.begin(), l.end());
  for (const Arc& a : arcs) {
    g.out_[a.tail].push_back(a.head);
    g.in_[a.head].push_back(a.tail);
  }
  for (auto& l : g.out_) std::sort(l.begin(), l.end());
  for (auto& l : g.in_) std::sort(l.begin(), l.end());

  for (const Arc& a : arcs) {
    if (contains_sorted(g.nbr_[a.tail], a.head))
      throw Error(ErrorKind::DigonConflict,
                  "arc " + pair_text(a.tail, a.head, true) + " parallel to edge " + pair_text(a.tail, a.head, false));
    if (contains_sorted(g.out_[a.head], a.tail))
      throw Error(ErrorKind::DigonConflict, "arcs " + pair_text(a.tail, a.head, true) + " and " +
                                                pair_text(a.head, a.tail, true) + " form a digon");
  }

  g.edges_ = std::move(edges);
  g.arcs_ = std::move(arcs);
  return g;
}

bool MixedGraph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_) return false;
  return contains_sorted(nbr_[u], v);
}

bool MixedGraph::has_arc(Vertex tail, Vertex head) const {
  if (tail < 0 || tail >= n_) return false;
  return contains_sorted(out_[tail], head);
}

bool MixedGraph::adjacent(Vertex u, Vertex v) const {
  return has_edge(u, v) || has_arc(u, v) || has_arc(v, u);
}

std::vector<VertexPair> MixedGraph::edge_pairs() const {
  std::vector<VertexPair> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<VertexPair> MixedGraph::arc_pairs() const {
  std::vector<VertexPair> out;
  out.reserve(arcs_.size());
  for (const Arc& a : arcs_) out.emplace_back(a.tail, a.head);
  return out;
}

MixedGraph MixedGraph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw Error(ErrorKind::InvalidParam, "relabeling has wrong length");
  std::vector<char> seen(n_, 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= n_ || seen[p]) throw Error(ErrorKind::NotBijection, "relabeling is not a permutation");
    seen[p] = 1;
  }
  std::vector<VertexPair> e, a;
  e.reserve(edges_.size());
  a.reserve(arcs_.size());
  for (const Edge& x : edges_) e.emplace_back(perm[x.u], perm[x.v]);
  for (const Arc& x : arcs_) a.emplace_back(perm[x.tail], perm[x.head]);
  return build_graph(n_, e, a);
}

DegreeProfile degree_profile(const MixedGraph& g) {
  DegreeProfile p;
  const int n = g.order();
  p.undirected.resize(n);
  p.out.resize(n);
  p.in.resize(n);
  for (Vertex u = 0; u < n; ++u) {
    p.undirected[u] = g.undirected_degree(u);
    p.out[u] = g.out_degree(u);
    p.in[u] = g.in_degree(u);
  }
  if (n > 0) {
    auto [mnu, mxu] = std::minmax_element(p.undirected.begin(), p.undirected.end());
    auto [mno, mxo] = std::minmax_element(p.out.begin(), p.out.end());
    auto [mni, mxi] = std::minmax_element(p.in.begin(), p.in.end());
    p.min_undirected = *mnu;
    p.max_undirected = *mxu;
    p.min_out = *mno;
    p.max_out = *mxo;
    p.min_in = *mni;
    p.max_in = *mxi;
  }
  return p;
}

RegularityReport regularity_report(const MixedGraph& g, int r, int z) {
  RegularityReport rep;
  rep.out_regular = true;
  bool in_regular = true;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.undirected_degree(u) != r || g.out_degree(u) != z) rep.out_regular = false;
    const int din = g.in_degree(u);
    if (din < z) {
      rep.deficient.push_back(u);
      rep.sigma += z - din;
      in_regular = false;
    } else if (din > z) {
      rep.surplus.push_back(u);
      rep.surplus_total += din - z;
      in_regular = false;
    }
  }
  rep.totally_regular = rep.out_regular && in_regular;
  return rep;
}

namespace {

[[noreturn]] void syntax(int line, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> split_tokens(std::string_view s, int line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(' ', pos);
    if (next == std::string_view::npos) next = s.size();
    if (next == pos) syntax(line, "empty token (tokens are separated by single spaces)");
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

long long parse_int(std::string_view tok, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
    syntax(line, "expected a decimal integer, got '" + std::string(tok) + "'");
  if (v < 0) syntax(line, "negative index '" + std::string(tok) + "'");
  return v;
}

}  // namespace

MixedGraph parse_mgf(std::string_view text) {
  std::vector<VertexPair> edges, arcs;
  long long n = -1;
  bool header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && line.back() == ' ') line.remove_suffix(1);
    if (!header) {
      if (line != "mgf 1") syntax(line_no, "expected header 'mgf 1'");
      header = true;
      continue;
    }
    if (line.empty()) continue;

    auto tok = split_tokens(line, line_no);
    if (tok[0] == "n") {
      if (tok.size() != 2) syntax(line_no, "'n' takes one argument");
      if (n >= 0) syntax(line_no, "duplicate 'n' line");
      n = parse_int(tok[1], line_no);
      if (n < 1 || n > (1LL << 30)) syntax(line_no, "vertex count out of range");
    } else if (tok[0] == "e" || tok[0] == "a") {
      if (n < 0) syntax(line_no, "'" + std::string(tok[0]) + "' before 'n'");
      if (tok.size() != 3) syntax(line_no, "'" + std::string(tok[0]) + "' takes two arguments");
      long long a = parse_int(tok[1], line_no), b = parse_int(tok[2], line_no);
      if (a >= n || b >= n)
        throw Error(ErrorKind::OutOfRange, "line " + std::to_string(line_no) + ": index outside [0," +
                                               std::to_string(n) + ")");
      (tok[0] == "e" ? edges : arcs).emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    } else {
      syntax(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  if (!header) syntax(1, "empty input");
  if (n < 0) syntax(line_no, "missing 'n' line");
  return build_graph(static_cast<int>(n), edges, arcs);
}

std::string write_mgf(const MixedGraph& g) {
  std::ostringstream os;
  os << "mgf 1\nn " << g.order() << "\n";
  for (const Edge& e : g.edges()) os << "e " << e.u << " " << e.v << "\n";
  for (const Arc& a : g.arcs()) os << "a " << a.tail << " " << a.head << "\n";
  return os.str();
}

MixedGraph read_mgf_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidParam, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_mgf(ss.str());
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidParam, "cannot write '" + path + "'");
  out << text;
}

std::string write_dot(const MixedGraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (Vertex u = 0; u < g.order(); ++u) os << "  " << u << " [label=\"" << u << "\"];\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -> " << e.v << " [dir=none];\n";
  for (const Arc& a : g.arcs()) os << "  " << a.tail << " -> " << a.head << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mixgeo
