#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "downest/word.hpp"

namespace downest {

// One chord of a diagram: the letter and its two circle positions,
// 0-based along the word with the base point at position 0.
struct Chord {
  Letter letter = 0;
  int first = 0;   // smaller position
  int second = 0;  // larger position

  friend bool operator==(const Chord&, const Chord&) = default;
};

// 2n points on a circle, one chord per letter joining its two occurrence
// positions. Keeps the word's display names for exports.
class ChordDiagram {
 public:
  ChordDiagram() = default;
  ChordDiagram(int length, std::vector<Chord> chords,
               std::shared_ptr<const NameTable> names = nullptr);

  int length() const { return length_; }
  bool empty() const { return chords_.empty(); }
  const std::vector<Chord>& chords() const { return chords_; }  // by letter
  const Chord* find(Letter a) const;
  std::string symbol(Letter a) const;
  const std::shared_ptr<const NameTable>& names() const { return names_; }

 private:
  int length_ = 0;              // number of circle positions (2n)
  std::vector<Chord> chords_;   // sorted by letter
  std::shared_ptr<const NameTable> names_;
};

// Intersection graph of a chord diagram: a vertex per letter, an edge per
// crossing pair of chords.
class CircleGraph {
 public:
  CircleGraph() = default;
  CircleGraph(std::vector<Letter> vertices,
              std::vector<std::pair<Letter, Letter>> edges,
              std::shared_ptr<const NameTable> names = nullptr);

  const std::vector<Letter>& vertices() const { return vertices_; }
  const std::vector<std::pair<Letter, Letter>>& edges() const {
    return edges_;
  }
  bool empty() const { return vertices_.empty(); }
  bool has_edge(Letter a, Letter b) const;
  int degree(Letter a) const;
  std::string symbol(Letter a) const;
  const std::shared_ptr<const NameTable>& names() const { return names_; }

  friend bool operator==(const CircleGraph& a, const CircleGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Letter> vertices_;                 // sorted
  std::vector<std::pair<Letter, Letter>> edges_; // a < b, sorted
  std::shared_ptr<const NameTable> names_;
};

// True iff exactly one endpoint of c2 lies strictly between the endpoints
// of c1 (the chords interleave around the circle). The four positions must
// be distinct.
bool chords_cross(const Chord& c1, const Chord& c2);

ChordDiagram chord_diagram(const Word& w);
CircleGraph circle_graph(const Word& w);

// Three letters x, y, z whose chords form the forbidden configuration:
// y crosses both x and z while x and z do not cross (an induced path on
// three vertices of the circle graph, centered at y).
struct C12Witness {
  Letter x = 0;
  Letter y = 0;
  Letter z = 0;

  friend bool operator==(const C12Witness&, const C12Witness&) = default;
};

std::optional<C12Witness> contains_c12(const Word& w);

// Disjoint letter sets realizing the complete-bipartite crossing pattern:
// every chord of c_side crosses every chord of d_side, and neither side
// has an internal crossing.
struct CnmWitness {
  std::vector<Letter> c_side;
  std::vector<Letter> d_side;

  friend bool operator==(const CnmWitness&, const CnmWitness&) = default;
};

// Smallest witness in lexicographic order, or absent. Requires
// 2 <= n <= m, n + m <= size(w), and n + m <= 12 (backtracking search).
std::optional<CnmWitness> contains_cnm(const Word& w, int n, int m);

// True iff the graph is a disjoint union of cliques (equivalently, has no
// induced path on three vertices).
bool is_cluster_graph(const CircleGraph& g);

// Edge-preserving vertex bijection test by backtracking; both graphs must
// have at most 24 vertices.
bool graphs_isomorphic(const CircleGraph& g1, const CircleGraph& g2);

// Word families. Letters are 1..n (and n+1..n+m for the grid family).
Word make_repeat(int n);            // 1…n 1…n, chords pairwise crossing
Word make_return(int n);            // 1…n n…1, chords pairwise non-crossing
Word make_grid(int n, int m);       // c's and d's crossing bipartitely
Word make_w1(int n);                // nested crossing pairs, 2n letters
Word make_w2(int n);                // concatenated crossing pairs, 2n letters

std::string to_dot(const CircleGraph& g);
std::string to_dot(const ChordDiagram& d);

}  // namespace downest
