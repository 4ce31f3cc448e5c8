#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kzlab/alphabet.hpp"
#include "kzlab/errors.hpp"

namespace kzlab {

/// Pair of bijections A_d -> {1..d}; entry idx refers to letter Alphabet(d).letter(idx).
struct PermutationPair {
  int d = 2;
  std::vector<int> top;     // position of each letter in the top row
  std::vector<int> bottom;  // position of each letter in the bottom row

  int pos_t(int letter) const { return top[Alphabet(d).index(letter)]; }
  int pos_b(int letter) const { return bottom[Alphabet(d).index(letter)]; }

  /// Letters in the order they appear in the row.
  std::vector<int> top_row() const { return row(top); }
  std::vector<int> bottom_row() const { return row(bottom); }

  static PermutationPair from_rows(int d, const std::vector<int>& top_row, const std::vector<int>& bottom_row) {
    PermutationPair p{d, std::vector<int>(static_cast<std::size_t>(d)), std::vector<int>(static_cast<std::size_t>(d))};
    Alphabet A(d);
    for (std::size_t i = 0; i < top_row.size(); ++i) p.top[A.index(top_row[i])] = static_cast<int>(i) + 1;
    for (std::size_t i = 0; i < bottom_row.size(); ++i) p.bottom[A.index(bottom_row[i])] = static_cast<int>(i) + 1;
    return p;
  }

  static PermutationPair central(int d) {
    PermutationPair p{d, std::vector<int>(static_cast<std::size_t>(d)), std::vector<int>(static_cast<std::size_t>(d))};
    Alphabet A(d);
    for (int k : A.letters()) {
      p.top[A.index(k)] = (d + 1 + k) / 2;
      p.bottom[A.index(k)] = (d + 1 - k) / 2;
    }
    return p;
  }

  bool is_bijective() const {
    auto ok = [&](const std::vector<int>& v) {
      std::vector<int> s = v;
      std::sort(s.begin(), s.end());
      for (int i = 0; i < d; ++i)
        if (s[static_cast<std::size_t>(i)] != i + 1) return false;
      return true;
    };
    return static_cast<int>(top.size()) == d && static_cast<int>(bottom.size()) == d && ok(top) && ok(bottom);
  }

  std::string to_string() const {
    std::ostringstream os;
    auto t = top_row(), b = bottom_row();
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? " " : "") << t[i];
    os << " / ";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
    os << ")";
    return os.str();
  }

  friend bool operator==(const PermutationPair&, const PermutationPair&) = default;
  friend auto operator<=>(const PermutationPair&, const PermutationPair&) = default;

 private:
  std::vector<int> row(const std::vector<int>& pos) const {
    std::vector<int> r(static_cast<std::size_t>(d));
    Alphabet A(d);
    for (std::size_t idx = 0; idx < pos.size(); ++idx) r[static_cast<std::size_t>(pos[idx] - 1)] = A.letter(idx);
    return r;
  }
};

/// The inclusion j_t : R_d -> R_{d+1}.
inline PermutationPair j_t(const PermutationPair& pi) {
  const int d = pi.d;
  PermutationPair out{d + 1, std::vector<int>(static_cast<std::size_t>(d + 1)), std::vector<int>(static_cast<std::size_t>(d + 1))};
  Alphabet B(d + 1);
  const int pivot = pi.pos_b(d - 3);
  out.top[B.index(-d)] = 1;
  out.bottom[B.index(-d)] = pivot;
  for (int k = 2 - d; k <= d; k += 2) {
    out.top[B.index(k)] = 1 + pi.pos_t(k - 1);
    const int pb = pi.pos_b(k - 1);
    out.bottom[B.index(k)] = pb < pivot ? pb : pb + 1;
  }
  return out;
}

/// The inclusion j_b : R_d -> R_{d+1}.
inline PermutationPair j_b(const PermutationPair& pi) {
  const int d = pi.d;
  PermutationPair out{d + 1, std::vector<int>(static_cast<std::size_t>(d + 1)), std::vector<int>(static_cast<std::size_t>(d + 1))};
  Alphabet B(d + 1);
  const int pivot = pi.pos_t(3 - d);
  out.bottom[B.index(d)] = 1;
  out.top[B.index(d)] = pivot;
  for (int k = -d; k <= d - 2; k += 2) {
    out.bottom[B.index(k)] = 1 + pi.pos_b(k + 1);
    const int pt = pi.pos_t(k + 1);
    out.top[B.index(k)] = pt < pivot ? pt : pt + 1;
  }
  return out;
}

/// Standard Rauzy-Veech move of the given type ('t' or 'b'): the last letter
/// of that row wins; the last letter of the other row is reinserted right
/// after the winner in the other row.
inline PermutationPair rauzy_move(const PermutationPair& pi, char type) {
  auto top = pi.top_row(), bottom = pi.bottom_row();
  auto& win_row = type == 't' ? top : bottom;
  auto& lose_row = type == 't' ? bottom : top;
  const int winner = win_row.back();
  const int loser = lose_row.back();
  lose_row.pop_back();
  auto it = std::find(lose_row.begin(), lose_row.end(), winner);
  lose_row.insert(it + 1, loser);
  return PermutationPair::from_rows(pi.d, top, bottom);
}

struct ElementaryLoop {
  char type = 't';
  int base_vertex = 0;                 // vertex id of minimal word length
  std::vector<int> vertices;           // in arrow order, starting at base_vertex
  int length = 0;
  int winner = 0;
  bool winner_constant = true;
};

class RauzyDiagram {
 public:
  int d = 2;
  std::vector<std::string> words;             // vertex id -> word
  std::vector<PermutationPair> vertices;      // vertex id -> permutation pair
  std::vector<int> R_t, R_b;                  // arrows
  std::map<std::string, int> id_of_word;
  static constexpr int central = 0;

  std::size_t size() const { return words.size(); }

  int find(const std::string& word) const {
    auto it = id_of_word.find(word);
    if (it == id_of_word.end()) throw VertexNotFound("no vertex with word '" + word + "' in D_" + std::to_string(d));
    return it->second;
  }

  int find(const PermutationPair& p) const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (vertices[v] == p) return static_cast<int>(v);
    throw VertexNotFound("permutation pair " + p.to_string() + " is not in D_" + std::to_string(d));
  }

  const std::string& word_of(int v) const {
    check(v);
    return words[static_cast<std::size_t>(v)];
  }

  /// (top winner, bottom winner) = (d-1-2 w_b, 1-d+2 w_t).
  std::pair<int, int> winners(int v) const {
    const auto& w = word_of(v);
    const int wt = static_cast<int>(std::count(w.begin(), w.end(), 't'));
    const int wb = static_cast<int>(std::count(w.begin(), w.end(), 'b'));
    return {d - 1 - 2 * wb, 1 - d + 2 * wt};
  }

  int arrow(int v, char type) const {
    check(v);
    return type == 't' ? R_t[static_cast<std::size_t>(v)] : R_b[static_cast<std::size_t>(v)];
  }

  void check(int v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= words.size())
      throw VertexNotFound("vertex id " + std::to_string(v) + " out of range");
  }
};

namespace detail {

inline RauzyDiagram extend_diagram(const RauzyDiagram& D) {
  RauzyDiagram E;
  E.d = D.d + 1;
  auto add = [&](const std::string& w, PermutationPair p) {
    E.id_of_word[w] = static_cast<int>(E.words.size());
    E.words.push_back(w);
    E.vertices.push_back(std::move(p));
  };
  add("", PermutationPair::central(E.d));
  for (std::size_t v = 0; v < D.size(); ++v) add("t" + D.words[v], j_t(D.vertices[v]));
  for (std::size_t v = 0; v < D.size(); ++v) add("b" + D.words[v], j_b(D.vertices[v]));
  const int n = static_cast<int>(D.size());
  auto jt = [&](int v) { return 1 + v; };
  auto jb = [&](int v) { return 1 + n + v; };
  E.R_t.assign(E.words.size(), -1);
  E.R_b.assign(E.words.size(), -1);
  E.R_t[0] = jt(RauzyDiagram::central);
  E.R_b[0] = jb(RauzyDiagram::central);
  for (int v = 0; v < n; ++v) {
    const int rt = D.R_t[static_cast<std::size_t>(v)];
    const int rb = D.R_b[static_cast<std::size_t>(v)];
    // R_t j_b = j_b R_t ; R_t j_t = j_t R_t except where R_t hits the centre
    E.R_t[static_cast<std::size_t>(jb(v))] = jb(rt);
    E.R_t[static_cast<std::size_t>(jt(v))] = rt == RauzyDiagram::central ? 0 : jt(rt);
    E.R_b[static_cast<std::size_t>(jt(v))] = jt(rb);
    E.R_b[static_cast<std::size_t>(jb(v))] = rb == RauzyDiagram::central ? 0 : jb(rb);
  }
  return E;
}

}  // namespace detail

/// Builds D_d by the inductive construction from D_2 (one vertex, two self-loops).
inline RauzyDiagram build_diagram(int d) {
  if (d < 2) throw InvalidArgument("Rauzy diagram needs d >= 2");
  RauzyDiagram D;
  D.d = 2;
  D.words = {""};
  D.vertices = {PermutationPair::central(2)};
  D.R_t = {0};
  D.R_b = {0};
  D.id_of_word[""] = 0;
  while (D.d < d) D = detail::extend_diagram(D);
  return D;
}

inline const std::string& word_of(const RauzyDiagram& D, const PermutationPair& p) { return D.word_of(D.find(p)); }

inline std::pair<int, int> winners(const RauzyDiagram& D, int v) { return D.winners(v); }

/// Arrows (type, target) along the BFS path from the central vertex.
inline std::vector<std::pair<char, int>> gamma_star(const RauzyDiagram& D, int target) {
  D.check(target);
  std::vector<int> parent(D.size(), -2);
  std::vector<char> via(D.size(), 0);
  std::deque<int> queue{RauzyDiagram::central};
  parent[0] = -1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (char type : {'t', 'b'}) {
      int w = D.arrow(v, type);
      if (parent[static_cast<std::size_t>(w)] != -2) continue;
      parent[static_cast<std::size_t>(w)] = v;
      via[static_cast<std::size_t>(w)] = type;
      queue.push_back(w);
    }
  }
  if (parent[static_cast<std::size_t>(target)] == -2) throw VertexNotFound("vertex unreachable from the centre");
  std::vector<std::pair<char, int>> path;
  for (int v = target; v != RauzyDiagram::central; v = parent[static_cast<std::size_t>(v)])
    path.emplace_back(via[static_cast<std::size_t>(v)], v);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Number of oriented simple paths from the centre to each vertex, capped at `cap`.
inline std::vector<int> simple_path_counts(const RauzyDiagram& D, int cap = 2) {
  std::vector<int> counts(D.size(), 0);
  std::vector<bool> on_path(D.size(), false);
  auto dfs = [&](auto&& self, int v) -> void {
    if (counts[static_cast<std::size_t>(v)] >= cap) return;
    ++counts[static_cast<std::size_t>(v)];
    on_path[static_cast<std::size_t>(v)] = true;
    for (char type : {'t', 'b'}) {
      int w = D.arrow(v, type);
      if (!on_path[static_cast<std::size_t>(w)]) self(self, w);
    }
    on_path[static_cast<std::size_t>(v)] = false;
  };
  dfs(dfs, RauzyDiagram::central);
  return counts;
}

/// Cycles of R_t and R_b, each rooted at its vertex of shortest word.
inline std::vector<ElementaryLoop> elementary_loops(const RauzyDiagram& D) {
  std::vector<ElementaryLoop> loops;
  for (char type : {'t', 'b'}) {
    std::vector<bool> seen(D.size(), false);
    for (std::size_t start = 0; start < D.size(); ++start) {
      if (seen[start]) continue;
      std::vector<int> cyc;
      int v = static_cast<int>(start);
      while (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        cyc.push_back(v);
        v = D.arrow(v, type);
      }
      auto base_it = std::min_element(cyc.begin(), cyc.end(), [&](int a, int b) {
        return D.words[static_cast<std::size_t>(a)].size() < D.words[static_cast<std::size_t>(b)].size();
      });
      std::rotate(cyc.begin(), base_it, cyc.end());
      ElementaryLoop loop;
      loop.type = type;
      loop.base_vertex = cyc.front();
      loop.vertices = cyc;
      loop.length = static_cast<int>(cyc.size());
      auto win = [&](int u) { return type == 't' ? D.winners(u).first : D.winners(u).second; };
      loop.winner = win(loop.base_vertex);
      for (int u : cyc)
        if (win(u) != loop.winner) loop.winner_constant = false;
      loops.push_back(std::move(loop));
    }
  }
  return loops;
}

/// Elementary loops grouped by (type, winner). Loops sharing a class induce the
/// same Dehn twist at the central vertex, so each class yields one generator.
struct LoopClass {
  char type = 't';
  int winner = 0;
  std::vector<std::size_t> members;  // indices into elementary_loops()
};

inline std::vector<LoopClass> loop_classes(const std::vector<ElementaryLoop>& loops) {
  std::map<std::pair<char, int>, std::vector<std::size_t>> by_key;
  for (std::size_t i = 0; i < loops.size(); ++i) by_key[{loops[i].type, loops[i].winner}].push_back(i);
  std::vector<LoopClass> out;
  for (auto& [key, members] : by_key) out.push_back({key.first, key.second, std::move(members)});
  return out;
}

/// Graphviz digraph with t/b edge labels and winners on the nodes.
inline void write_dot(const RauzyDiagram& D, std::ostream& os) {
  os << "digraph D" << D.d << " {\n";
  for (std::size_t v = 0; v < D.size(); ++v) {
    auto [wt, wb] = D.winners(static_cast<int>(v));
    const std::string w = D.words[v].empty() ? "*" : D.words[v];
    os << "  v" << v << " [label=\"" << w << "\\n" << D.vertices[v].to_string() << "\\nwin t:" << wt << " b:" << wb
       << "\"];\n";
  }
  for (std::size_t v = 0; v < D.size(); ++v) {
    os << "  v" << v << " -> v" << D.R_t[v] << " [label=\"t\"];\n";
    os << "  v" << v << " -> v" << D.R_b[v] << " [label=\"b\"];\n";
  }
  os << "}\n";
}

}  // namespace kzlab
