#include "mixgeo/groups.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <sstream>

namespace mixgeo {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::InvalidParam, msg); }

bool is_permutation_of_range(const int* p, int n, int stride) {
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    const int v = p[i * stride];
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

GroupTable::GroupTable(MulTable table, std::string name) : table_(std::move(table)), name_(std::move(name)) {
  const int n = static_cast<int>(table_.rows());
  if (n < 1 || table_.cols() != n) invalid("multiplication table must be square and nonempty");
  for (int a = 0; a < n; ++a) {
    if (!is_permutation_of_range(&table_(a, 0), n, 1)) invalid("row " + std::to_string(a) + " is not a permutation");
    if (!is_permutation_of_range(&table_(0, a), n, n))
      invalid("column " + std::to_string(a) + " is not a permutation");
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_(e, a) == a && table_(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) invalid("no identity element");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_(a, b) == identity_) inverse_[a] = b;
    if (table_(inverse_[a], a) != identity_) invalid("element " + std::to_string(a) + " has no two-sided inverse");
  }
  auto assoc = [&](int a, int b, int c) { return table_(table_(a, b), c) == table_(a, table_(b, c)); };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c)) invalid("associativity fails");
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 20000; ++i)
      if (!assoc(pick(rng), pick(rng), pick(rng))) invalid("associativity fails");
  }
}

int GroupTable::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

int GroupTable::power(int a, long long e) const {
  const int ord = element_order(a);
  e %= ord;
  if (e < 0) e += ord;
  int x = identity_;
  for (long long i = 0; i < e; ++i) x = mul(x, a);
  return x;
}

GroupTable GroupTable::renamed(std::string name) const {
  GroupTable g = *this;
  g.name_ = std::move(name);
  return g;
}

GroupTable closure_from_generators(const std::vector<Permutation>& gens, std::size_t cap, std::string name) {
  const std::size_t m = gens.empty() ? 0 : gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != m) invalid("generators act on different point counts");
    if (!is_permutation_of_range(g.data(), static_cast<int>(m), 1)) throw Error(ErrorKind::NotBijection, "generator is not a bijection");
  }
  Permutation id(m);
  for (std::size_t i = 0; i < m; ++i) id[i] = static_cast<int>(i);
  std::vector<Permutation> elems{id};
  std::map<Permutation, int> index{{id, 0}};
  auto compose = [m](const Permutation& a, const Permutation& b) {
    Permutation c(m);
    for (std::size_t x = 0; x < m; ++x) c[x] = b[a[x]];
    return c;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Permutation p = compose(elems[head], g);
      if (index.count(p)) continue;
      if (elems.size() >= cap) throw Error(ErrorKind::CapExceeded, "closure exceeds " + std::to_string(cap) + " elements");
      index.emplace(p, static_cast<int>(elems.size()));
      elems.push_back(std::move(p));
    }
  }
  const int n = static_cast<int>(elems.size());
  MulTable t(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t(a, b) = index.at(compose(elems[a], elems[b]));
  return GroupTable(std::move(t), name.empty() ? "G" + std::to_string(n) : std::move(name));
}

GroupTable cyclic(int n) {
  if (n < 1) invalid("cyclic group needs n >= 1");
  MulTable t(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t(a, b) = (a + b) % n;
  return GroupTable(std::move(t), "Z" + std::to_string(n));
}

GroupTable metacyclic(int m, int n, int a, int s, std::string name) {
  if (m < 1 || n < 1) invalid("metacyclic group needs m, n >= 1");
  std::vector<int> apow(n, 1 % m);
  for (int j = 1; j < n; ++j) apow[j] = static_cast<int>((1LL * apow[j - 1] * a) % m);
  const int order = m * n;
  MulTable t(order, order);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      for (int j2 = 0; j2 < n; ++j2)
        for (int i2 = 0; i2 < m; ++i2) {
          long long x = i + 1LL * apow[j] * i2 + (j + j2 >= n ? s : 0);
          t(i + m * j, i2 + m * j2) = static_cast<int>(x % m) + m * ((j + j2) % n);
        }
  return GroupTable(std::move(t), std::move(name));
}

GroupTable dihedral(int order) {
  if (order < 2 || order % 2) invalid("dihedral group order must be even and positive");
  const int n = order / 2;
  return metacyclic(n, 2, n - 1, 0, "D" + std::to_string(order));
}

GroupTable dicyclic(int order) {
  if (order < 4 || order % 4) invalid("dicyclic group order must be a positive multiple of 4");
  const int m = order / 4;
  return metacyclic(2 * m, 2, 2 * m - 1, m, "Dic" + std::to_string(order));
}

GroupTable symmetric(int n) {
  if (n < 1) invalid("symmetric group needs n >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation swap(n), rot(n);
    for (int i = 0; i < n; ++i) {
      swap[i] = i;
      rot[i] = (i + 1) % n;
    }
    std::swap(swap[0], swap[1]);
    gens = {swap, rot};
  } else {
    gens = {Permutation{0}};
  }
  return closure_from_generators(gens, 2000, "S" + std::to_string(n));
}

GroupTable alternating(int n) {
  if (n < 1) invalid("alternating group needs n >= 1");
  std::vector<Permutation> gens;
  for (int i = 0; i + 2 < n; ++i) {
    Permutation p(n);
    for (int x = 0; x < n; ++x) p[x] = x;
    p[i] = i + 1;
    p[i + 1] = i + 2;
    p[i + 2] = i;
    gens.push_back(p);
  }
  if (gens.empty()) gens = {Permutation(1, 0)};
  return closure_from_generators(gens, 2000, "A" + std::to_string(n));
}

GroupTable affine(int p) {
  if (p < 2) invalid("affine group needs a prime p");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) invalid("affine group needs a prime, got " + std::to_string(p));
  int root = 1;
  for (int g = 1; g < p; ++g) {
    int x = 1, ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) {
      root = g;
      break;
    }
  }
  Permutation shift(p), scale(p);
  for (int x = 0; x < p; ++x) {
    shift[x] = (x + 1) % p;
    scale[x] = x * root % p;
  }
  return closure_from_generators({shift, scale}, 2000, "AGL(1," + std::to_string(p) + ")");
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const int na = a.order(), nb = b.order();
  MulTable t(na * nb, na * nb);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2) t(x * nb + y, x2 * nb + y2) = a.mul(x, x2) * nb + b.mul(y, y2);
  return GroupTable(std::move(t), a.name() + "x" + b.name());
}

namespace {

/// Breadth-first extension of gens[i] -> images[i] over g, with `combine`
/// computing the image of x*gen from the image of x and of gen.
template <typename Image, typename Combine>
std::vector<Image> extend_from_generators(const GroupTable& g, const std::vector<int>& gens,
                                          const std::vector<Image>& images, const Image& identity_image,
                                          Combine combine) {
  if (gens.size() != images.size()) invalid("generator and image counts differ");
  std::vector<Image> img(g.order());
  std::vector<char> known(g.order(), 0);
  std::vector<int> queue{g.identity()};
  img[g.identity()] = identity_image;
  known[g.identity()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int y = g.mul(x, gens[i]);
      Image v = combine(img[x], images[i]);
      if (known[y]) {
        if (!(img[y] == v)) invalid("generator images do not define a homomorphism");
        continue;
      }
      known[y] = 1;
      img[y] = std::move(v);
      queue.push_back(y);
    }
  }
  if (static_cast<int>(queue.size()) != g.order()) invalid("elements do not generate the group");
  return img;
}

}  // namespace

std::vector<int> hom_from_generators(const GroupTable& g, const std::vector<int>& gens, const GroupTable& h,
                                     const std::vector<int>& images) {
  return extend_from_generators<int>(g, gens, images, h.identity(), [&h](int a, int b) { return h.mul(a, b); });
}

GroupTable semidirect(const GroupTable& N, const GroupTable& H, const std::vector<int>& hgens,
                      const std::vector<std::vector<int>>& actions, std::string name) {
  const int nn = N.order(), nh = H.order();
  for (const auto& act : actions) {
    if (static_cast<int>(act.size()) != nn || !is_permutation_of_range(act.data(), nn, 1))
      invalid("action is not a permutation of N");
    for (int x = 0; x < nn; ++x)
      for (int y = 0; y < nn; ++y)
        if (act[N.mul(x, y)] != N.mul(act[x], act[y])) invalid("action is not an automorphism of N");
  }
  std::vector<int> id(nn);
  for (int i = 0; i < nn; ++i) id[i] = i;
  // psi(x*g)(n) = psi(x)(psi(g)(n))
  const auto psi = extend_from_generators<std::vector<int>>(
      H, hgens, actions, id, [nn](const std::vector<int>& px, const std::vector<int>& pg) {
        std::vector<int> out(nn);
        for (int v = 0; v < nn; ++v) out[v] = px[pg[v]];
        return out;
      });
  MulTable t(nn * nh, nn * nh);
  for (int h1 = 0; h1 < nh; ++h1)
    for (int n1 = 0; n1 < nn; ++n1)
      for (int h2 = 0; h2 < nh; ++h2)
        for (int n2 = 0; n2 < nn; ++n2)
          t(n1 + nn * h1, n2 + nn * h2) = N.mul(n1, psi[h1][n2]) + nn * H.mul(h1, h2);
  return GroupTable(std::move(t), std::move(name));
}

namespace {

int parse_positive(std::string_view s, std::string_view token) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 1)
    invalid("bad number in group token '" + std::string(token) + "'");
  return v;
}

}  // namespace

GroupTable preset(std::string_view token) {
  const auto colon = token.find(':');
  if (colon == std::string_view::npos) invalid("group token needs kind:parameter, got '" + std::string(token) + "'");
  const std::string_view kind = token.substr(0, colon), rest = token.substr(colon + 1);
  if (kind == "product") {
    std::vector<GroupTable> parts;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      if (comma == std::string_view::npos) comma = rest.size();
      parts.push_back(preset(rest.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    if (parts.size() < 2) invalid("product needs at least two factors");
    GroupTable g = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, parts[i]);
    return g;
  }
  if (kind == "small") {
    const auto c2 = rest.find(':');
    if (c2 == std::string_view::npos) invalid("small group token is small:<order>:<index>");
    const int order = parse_positive(rest.substr(0, c2), token);
    const int idx = parse_positive(rest.substr(c2 + 1), token);
    auto groups = catalog(order);
    if (idx > static_cast<int>(groups.size())) invalid("no small group " + std::string(token));
    return groups[idx - 1];
  }
  const int n = parse_positive(rest, token);
  if (kind == "cyclic") return cyclic(n);
  if (kind == "dihedral") return dihedral(n);
  if (kind == "dicyclic") return dicyclic(n);
  if (kind == "sym") return symmetric(n);
  if (kind == "alt") return alternating(n);
  if (kind == "affine") return affine(n);
  invalid("unknown group kind '" + std::string(kind) + "'");
}

GroupTable parse_group_table(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto syntax = [&](const std::string& msg) {
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line_no) + ": " + msg);
  };
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next_line() || line != "grp 1") syntax("expected header 'grp 1'");
  if (!next_line() || line.rfind("n ", 0) != 0) syntax("expected 'n <N>'");
  int n = 0;
  try {
    n = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    syntax("bad order");
  }
  if (n < 1 || n > 5000) syntax("order out of range");
  MulTable t(n, n);
  for (int a = 0; a < n; ++a) {
    if (!next_line()) syntax("missing table row");
    std::istringstream row(line);
    for (int b = 0; b < n; ++b) {
      long long v;
      if (!(row >> v)) syntax("row has fewer than " + std::to_string(n) + " entries");
      if (v < 0 || v >= n) syntax("entry out of range");
      t(a, b) = static_cast<int>(v);
    }
    std::string extra;
    if (row >> extra) syntax("row has extra entries");
  }
  if (next_line()) syntax("trailing content");
  return GroupTable(std::move(t), std::move(name));
}

std::string write_group_table(const GroupTable& g) {
  std::ostringstream os;
  os << "grp 1\nn " << g.order() << "\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) os << (b ? " " : "") << g.mul(a, b);
    os << "\n";
  }
  return os.str();
}

ConnectionSet make_connection_set(const GroupTable& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  ConnectionSet s;
  for (int x : elements) {
    if (x < 0 || x >= g.order()) throw Error(ErrorKind::OutOfRange, "connection set element out of range");
    if (x == g.identity()) throw Error(ErrorKind::IdentityInS, "identity in connection set");
    if (std::binary_search(elements.begin(), elements.end(), g.inverse(x)))
      ++s.r;
    else
      ++s.z;
  }
  s.elements = std::move(elements);
  return s;
}

bool generates(const GroupTable& g, const std::vector<int>& elements) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> queue{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (int s : elements) {
      const int y = g.mul(queue[h], s);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  return static_cast<int>(queue.size()) == g.order();
}

MixedGraph cayley_mixed(const GroupTable& g, const ConnectionSet& s) {
  std::vector<VertexPair> edges, arcs;
  for (int x : s.elements)
    if (x == g.identity()) throw Error(ErrorKind::IdentityInS, "identity in connection set");
  for (int x : s.elements) {
    const bool undirected = std::binary_search(s.elements.begin(), s.elements.end(), g.inverse(x));
    for (int v = 0; v < g.order(); ++v) (undirected ? edges : arcs).emplace_back(v, g.mul(v, x));
  }
  return build_graph(g.order(), edges, arcs);
}

void for_each_connection_set(const GroupTable& g, int r, int z, bool reduce_inner,
                             const std::function<bool(const ConnectionSet&)>& fn) {
  if (r < 0 || z < 0 || r + z < 1) invalid("connection sets need r, z >= 0 and r + z >= 1");
  std::vector<int> involutions;
  std::vector<std::pair<int, int>> classes;
  for (int x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    const int inv = g.inverse(x);
    if (inv == x)
      involutions.push_back(x);
    else if (x < inv)
      classes.emplace_back(x, inv);
  }

  std::vector<std::vector<int>> found;
  std::vector<int> cur;
  auto keep = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    if (!generates(g, s)) return;
    if (reduce_inner) {
      for (int h = 0; h < g.order(); ++h) {
        std::vector<int> conj;
        conj.reserve(s.size());
        for (int x : s) conj.push_back(g.mul(g.mul(g.inverse(h), x), h));
        std::sort(conj.begin(), conj.end());
        if (conj < s) return;
      }
    }
    found.push_back(std::move(s));
  };
  // Units: involutions first, then inverse classes.
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t unit, int rr, int zz) {
    if (rr == 0 && zz == 0) {
      keep(cur);
      return;
    }
    const std::size_t units = involutions.size() + classes.size();
    if (unit == units) return;
    if (unit < involutions.size()) {
      if (rr >= 1) {
        cur.push_back(involutions[unit]);
        rec(unit + 1, rr - 1, zz);
        cur.pop_back();
      }
      rec(unit + 1, rr, zz);
      return;
    }
    auto [a, b] = classes[unit - involutions.size()];
    if (rr >= 2) {
      cur.push_back(a);
      cur.push_back(b);
      rec(unit + 1, rr - 2, zz);
      cur.resize(cur.size() - 2);
    }
    if (zz >= 1) {
      for (int x : {a, b}) {
        cur.push_back(x);
        rec(unit + 1, rr, zz - 1);
        cur.pop_back();
      }
    }
    rec(unit + 1, rr, zz);
  };
  rec(0, r, z);
  std::sort(found.begin(), found.end());
  for (auto& s : found) {
    ConnectionSet cs{std::move(s), r, z};
    if (!fn(cs)) return;
  }
}

std::vector<ConnectionSet> connection_sets(const GroupTable& g, int r, int z, bool reduce_inner) {
  std::vector<ConnectionSet> out;
  for_each_connection_set(g, r, z, reduce_inner, [&](const ConnectionSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace mixgeo
