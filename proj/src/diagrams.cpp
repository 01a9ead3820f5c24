#include "downest/diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace downest {

namespace {

std::string plain_symbol(const std::shared_ptr<const NameTable>& names,
                         Letter a) {
  if (names && a >= 1 && a <= static_cast<Letter>(names->size()))
    return (*names)[static_cast<std::size_t>(a - 1)];
  return std::to_string(a);
}

}  // namespace

ChordDiagram::ChordDiagram(int length, std::vector<Chord> chords,
                           std::shared_ptr<const NameTable> names)
    : length_(length), chords_(std::move(chords)), names_(std::move(names)) {
  std::sort(chords_.begin(), chords_.end(),
            [](const Chord& a, const Chord& b) { return a.letter < b.letter; });
}

const Chord* ChordDiagram::find(Letter a) const {
  auto it = std::lower_bound(
      chords_.begin(), chords_.end(), a,
      [](const Chord& c, Letter x) { return c.letter < x; });
  if (it == chords_.end() || it->letter != a) return nullptr;
  return &*it;
}

std::string ChordDiagram::symbol(Letter a) const {
  return plain_symbol(names_, a);
}

CircleGraph::CircleGraph(std::vector<Letter> vertices,
                         std::vector<std::pair<Letter, Letter>> edges,
                         std::shared_ptr<const NameTable> names)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      names_(std::move(names)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (auto& [a, b] : edges_) {
    if (a == b) throw std::invalid_argument("CircleGraph: loop edge");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool CircleGraph::has_edge(Letter a, Letter b) const {
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair(a, b));
}

int CircleGraph::degree(Letter a) const {
  int d = 0;
  for (const auto& [x, y] : edges_)
    if (x == a || y == a) ++d;
  return d;
}

std::string CircleGraph::symbol(Letter a) const {
  return plain_symbol(names_, a);
}

bool chords_cross(const Chord& c1, const Chord& c2) {
  auto [a1, a2] = std::minmax(c1.first, c1.second);
  int inside = 0;
  for (int p : {c2.first, c2.second})
    if (a1 < p && p < a2) ++inside;
  return inside == 1;
}

ChordDiagram chord_diagram(const Word& w) {
  if (!validate_dow(w))
    throw std::invalid_argument("chord_diagram: not a double occurrence word");
  std::map<Letter, Chord> by_letter;
  for (int i = 0; i < w.length(); ++i) {
    Letter a = w[i];
    auto [it, fresh] = by_letter.try_emplace(a, Chord{a, i, i});
    if (!fresh) it->second.second = i;
  }
  std::vector<Chord> chords;
  chords.reserve(by_letter.size());
  for (auto& [a, c] : by_letter) chords.push_back(c);
  return ChordDiagram(w.length(), std::move(chords), w.names());
}

CircleGraph circle_graph(const Word& w) {
  ChordDiagram d = chord_diagram(w);
  std::vector<Letter> vertices;
  vertices.reserve(d.chords().size());
  for (const Chord& c : d.chords()) vertices.push_back(c.letter);
  std::vector<std::pair<Letter, Letter>> edges;
  for (std::size_t i = 0; i < d.chords().size(); ++i)
    for (std::size_t j = i + 1; j < d.chords().size(); ++j)
      if (chords_cross(d.chords()[i], d.chords()[j]))
        edges.emplace_back(d.chords()[i].letter, d.chords()[j].letter);
  return CircleGraph(std::move(vertices), std::move(edges), w.names());
}

std::optional<C12Witness> contains_c12(const Word& w) {
  CircleGraph g = circle_graph(w);
  const auto& vs = g.vertices();
  for (Letter y : vs) {
    std::vector<Letter> nbrs;
    for (Letter v : vs)
      if (g.has_edge(y, v)) nbrs.push_back(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (!g.has_edge(nbrs[i], nbrs[j]))
          return C12Witness{nbrs[i], y, nbrs[j]};
  }
  return std::nullopt;
}

namespace {

// Extends acc to an independent set of size k drawn from pool[start..],
// lexicographically first. Adjacency comes from the circle graph: an
// independent set is a family of pairwise non-crossing chords.
bool grow_independent(const CircleGraph& g, const std::vector<Letter>& pool,
                      std::size_t start, int k, std::vector<Letter>& acc) {
  if (k == 0) return true;
  for (std::size_t i = start; i + static_cast<std::size_t>(k) <= pool.size();
       ++i) {
    Letter v = pool[i];
    bool ok = true;
    for (Letter u : acc)
      if (g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    acc.push_back(v);
    if (grow_independent(g, pool, i + 1, k - 1, acc)) return true;
    acc.pop_back();
  }
  return false;
}

bool grow_c_side(const CircleGraph& g, const std::vector<Letter>& pool,
                 std::size_t start, int n, int m, std::vector<Letter>& c_side,
                 std::vector<Letter>& d_side) {
  if (static_cast<int>(c_side.size()) == n) {
    // Candidates for the other side cross every chosen chord and still
    // need degree at least n themselves.
    std::vector<Letter> candidates;
    for (Letter v : pool) {
      if (std::find(c_side.begin(), c_side.end(), v) != c_side.end()) continue;
      bool crosses_all = true;
      for (Letter u : c_side)
        if (!g.has_edge(u, v)) {
          crosses_all = false;
          break;
        }
      if (crosses_all) candidates.push_back(v);
    }
    d_side.clear();
    return grow_independent(g, candidates, 0, m, d_side);
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    Letter v = pool[i];
    if (g.degree(v) < m) continue;
    bool ok = true;
    for (Letter u : c_side)
      if (g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    c_side.push_back(v);
    if (grow_c_side(g, pool, i + 1, n, m, c_side, d_side)) return true;
    c_side.pop_back();
  }
  return false;
}

}  // namespace

std::optional<CnmWitness> contains_cnm(const Word& w, int n, int m) {
  if (n < 2 || n > m)
    throw std::invalid_argument("contains_cnm: need 2 <= n <= m");
  if (n + m > static_cast<int>(w.size()))
    throw std::invalid_argument("contains_cnm: n + m exceeds word size");
  if (n + m > 12)
    throw std::invalid_argument("contains_cnm: n + m > 12 not supported");
  CircleGraph g = circle_graph(w);
  std::vector<Letter> pool;
  for (Letter v : g.vertices())
    if (g.degree(v) >= std::min(n, m)) pool.push_back(v);
  CnmWitness witness;
  if (grow_c_side(g, pool, 0, n, m, witness.c_side, witness.d_side))
    return witness;
  return std::nullopt;
}

bool is_cluster_graph(const CircleGraph& g) {
  // Union the components, then demand each one is a clique.
  const auto& vs = g.vertices();
  std::map<Letter, std::size_t> index;
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = i;
  std::vector<std::size_t> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : g.edges())
    parent[root(index[a])] = root(index[b]);
  std::map<std::size_t, std::vector<Letter>> components;
  for (Letter v : vs) components[root(index[v])].push_back(v);
  for (const auto& [r, members] : components)
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!g.has_edge(members[i], members[j])) return false;
  return true;
}

namespace {

bool extend_isomorphism(const CircleGraph& g1, const CircleGraph& g2,
                        const std::vector<Letter>& v1,
                        const std::vector<Letter>& v2, std::size_t next,
                        std::vector<int>& image, std::vector<bool>& used) {
  if (next == v1.size()) return true;
  for (std::size_t j = 0; j < v2.size(); ++j) {
    if (used[j]) continue;
    if (g1.degree(v1[next]) != g2.degree(v2[j])) continue;
    bool ok = true;
    for (std::size_t k = 0; k < next; ++k) {
      bool e1 = g1.has_edge(v1[next], v1[k]);
      bool e2 = g2.has_edge(v2[j], v2[static_cast<std::size_t>(image[k])]);
      if (e1 != e2) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    image[next] = static_cast<int>(j);
    used[j] = true;
    if (extend_isomorphism(g1, g2, v1, v2, next + 1, image, used)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool graphs_isomorphic(const CircleGraph& g1, const CircleGraph& g2) {
  if (g1.vertices().size() > 24 || g2.vertices().size() > 24)
    throw std::invalid_argument("graphs_isomorphic: more than 24 vertices");
  if (g1.vertices().size() != g2.vertices().size()) return false;
  if (g1.edges().size() != g2.edges().size()) return false;
  auto degree_sequence = [](const CircleGraph& g) {
    std::vector<int> ds;
    ds.reserve(g.vertices().size());
    for (Letter v : g.vertices()) ds.push_back(g.degree(v));
    std::sort(ds.begin(), ds.end());
    return ds;
  };
  if (degree_sequence(g1) != degree_sequence(g2)) return false;
  std::vector<int> image(g1.vertices().size(), -1);
  std::vector<bool> used(g2.vertices().size(), false);
  return extend_isomorphism(g1, g2, g1.vertices(), g2.vertices(), 0, image,
                            used);
}

namespace {

void require_positive(int n, const char* who) {
  if (n < 1)
    throw std::invalid_argument(std::string(who) + ": n must be at least 1");
}

}  // namespace

Word make_repeat(int n) {
  require_positive(n, "make_repeat");
  std::vector<Letter> v;
  v.reserve(2 * static_cast<std::size_t>(n));
  for (int pass = 0; pass < 2; ++pass)
    for (Letter a = 1; a <= n; ++a) v.push_back(a);
  return Word(std::move(v));
}

Word make_return(int n) {
  require_positive(n, "make_return");
  std::vector<Letter> v;
  v.reserve(2 * static_cast<std::size_t>(n));
  for (Letter a = 1; a <= n; ++a) v.push_back(a);
  for (Letter a = n; a >= 1; --a) v.push_back(a);
  return Word(std::move(v));
}

Word make_grid(int n, int m) {
  require_positive(n, "make_grid");
  if (m < n)
    throw std::invalid_argument("make_grid: need m >= n");
  // c₁…c_n d₁…d_m c_n…c₁ d_m…d₁ — every c crosses every d, each side
  // internally nested (non-crossing).
  std::vector<Letter> v;
  v.reserve(2 * static_cast<std::size_t>(n + m));
  for (Letter a = 1; a <= n; ++a) v.push_back(a);
  for (Letter b = n + 1; b <= n + m; ++b) v.push_back(b);
  for (Letter a = n; a >= 1; --a) v.push_back(a);
  for (Letter b = n + m; b >= n + 1; --b) v.push_back(b);
  return Word(std::move(v));
}

Word make_w1(int n) {
  require_positive(n, "make_w1");
  // 1 2 3 4 … (2n−1)(2n) (2n−1)(2n) … 3 4 1 2 — crossing pairs, nested
  // outermost-first.
  std::vector<Letter> v;
  v.reserve(4 * static_cast<std::size_t>(n));
  for (Letter a = 1; a <= 2 * n; ++a) v.push_back(a);
  for (Letter k = n; k >= 1; --k) {
    v.push_back(2 * k - 1);
    v.push_back(2 * k);
  }
  return Word(std::move(v));
}

Word make_w2(int n) {
  require_positive(n, "make_w2");
  // 1212 3434 … — disjoint crossing pairs side by side.
  std::vector<Letter> v;
  v.reserve(4 * static_cast<std::size_t>(n));
  for (Letter k = 1; k <= n; ++k) {
    v.push_back(2 * k - 1);
    v.push_back(2 * k);
    v.push_back(2 * k - 1);
    v.push_back(2 * k);
  }
  return Word(std::move(v));
}

std::string to_dot(const CircleGraph& g) {
  std::ostringstream out;
  out << "graph circle_graph {\n";
  for (Letter v : g.vertices()) out << "  \"" << g.symbol(v) << "\";\n";
  for (const auto& [a, b] : g.edges())
    out << "  \"" << g.symbol(a) << "\" -- \"" << g.symbol(b) << "\";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const ChordDiagram& d) {
  std::ostringstream out;
  out << "graph chord_diagram {\n";
  out << "  layout=circo;\n";
  std::vector<std::string> labels(static_cast<std::size_t>(d.length()));
  for (const Chord& c : d.chords()) {
    labels[static_cast<std::size_t>(c.first)] = d.symbol(c.letter);
    labels[static_cast<std::size_t>(c.second)] = d.symbol(c.letter);
  }
  for (int i = 0; i < d.length(); ++i)
    out << "  p" << i << " [label=\"" << labels[static_cast<std::size_t>(i)]
        << "\"];\n";
  // The circle itself, dotted; then the chords.
  for (int i = 0; i < d.length(); ++i)
    out << "  p" << i << " -- p" << (i + 1) % d.length()
        << " [style=dotted];\n";
  for (const Chord& c : d.chords())
    out << "  p" << c.first << " -- p" << c.second << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace downest
