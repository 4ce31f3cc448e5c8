#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "kzlab/rauzy/rauzy.hpp"

using namespace kzlab;

TEST(Rauzy, SmallDiagrams) {
  auto d2 = build_diagram(2);
  EXPECT_EQ(d2.size(), 1u);
  EXPECT_EQ(d2.R_t[0], 0);
  EXPECT_EQ(d2.R_b[0], 0);
  EXPECT_EQ(build_diagram(3).size(), 3u);
  auto d6 = build_diagram(6);
  EXPECT_EQ(d6.size(), 31u);
  std::set<int> image(d6.R_t.begin(), d6.R_t.end());
  EXPECT_EQ(image.size(), 31u);
}

TEST(Rauzy, CentralVertexAndHandExample) {
  auto D = build_diagram(3);
  EXPECT_EQ(D.vertices[0].top_row(), (std::vector<int>{-2, 0, 2}));
  EXPECT_EQ(D.vertices[0].bottom_row(), (std::vector<int>{2, 0, -2}));
  const auto& t = D.vertices[static_cast<std::size_t>(D.find("t"))];
  EXPECT_EQ(t.top_row(), (std::vector<int>{-2, 0, 2}));
  EXPECT_EQ(t.bottom_row(), (std::vector<int>{2, -2, 0}));
}

TEST(Rauzy, VertexCountsAndWordBijection) {
  for (int d = 2; d <= 12; ++d) {
    auto D = build_diagram(d);
    ASSERT_EQ(D.size(), (1u << (d - 1)) - 1);
    std::set<std::string> words(D.words.begin(), D.words.end());
    EXPECT_EQ(words.size(), D.size());
    for (const auto& w : D.words) EXPECT_LT(static_cast<int>(w.size()), d - 1);
    std::set<PermutationPair> perms(D.vertices.begin(), D.vertices.end());
    EXPECT_EQ(perms.size(), D.size());
    for (const auto& p : D.vertices) EXPECT_TRUE(p.is_bijective());
    std::set<int> it(D.R_t.begin(), D.R_t.end()), ib(D.R_b.begin(), D.R_b.end());
    EXPECT_EQ(it.size(), D.size());
    EXPECT_EQ(ib.size(), D.size());
  }
}

TEST(Rauzy, ArrowsMatchStandardMoves) {
  for (int d = 2; d <= 8; ++d) {
    auto D = build_diagram(d);
    for (std::size_t v = 0; v < D.size(); ++v) {
      for (char type : {'t', 'b'}) {
        auto moved = rauzy_move(D.vertices[v], type);
        EXPECT_EQ(moved, D.vertices[static_cast<std::size_t>(D.arrow(static_cast<int>(v), type))])
            << "d=" << d << " word=" << D.words[v] << " type=" << type;
      }
    }
  }
}

TEST(Rauzy, WinnersFromWordsMatchMoves) {
  for (int d = 2; d <= 8; ++d) {
    auto D = build_diagram(d);
    for (std::size_t v = 0; v < D.size(); ++v) {
      auto [top, bottom] = D.winners(static_cast<int>(v));
      EXPECT_GT(top, bottom);
      EXPECT_EQ(top, D.vertices[v].top_row().back());
      EXPECT_EQ(bottom, D.vertices[v].bottom_row().back());
    }
  }
}

TEST(Rauzy, WinnerExamples) {
  auto D4 = build_diagram(4);
  EXPECT_EQ(D4.winners(RauzyDiagram::central), std::make_pair(3, -3));
  EXPECT_EQ(D4.winners(D4.find("b")).first, 1);
  EXPECT_EQ(D4.winners(D4.find("tt")).second, 1);
}

TEST(Rauzy, WordsOfInclusions) {
  auto D3 = build_diagram(3);
  EXPECT_EQ(word_of(D3, PermutationPair::central(3)), "");
  EXPECT_EQ(word_of(D3, j_t(PermutationPair::central(2))), "t");
  auto D4 = build_diagram(4);
  EXPECT_EQ(word_of(D4, j_b(j_t(PermutationPair::central(2)))), "bt");
  EXPECT_THROW(D4.find("ttt"), VertexNotFound);
  EXPECT_THROW(word_of(D4, PermutationPair::central(4).d == 4 ? j_t(PermutationPair::central(4)) : PermutationPair{}),
               VertexNotFound);
}

TEST(Rauzy, ConjugationRulesHoldVerbatim) {
  for (int d = 2; d <= 7; ++d) {
    auto D = build_diagram(d), E = build_diagram(d + 1);
    auto jt = [&](int v) { return E.find("t" + D.words[static_cast<std::size_t>(v)]); };
    auto jb = [&](int v) { return E.find("b" + D.words[static_cast<std::size_t>(v)]); };
    EXPECT_EQ(E.R_t[0], jt(0));
    EXPECT_EQ(E.R_b[0], jb(0));
    for (int y = 0; y < static_cast<int>(D.size()); ++y) {
      EXPECT_EQ(E.arrow(jb(y), 't'), jb(D.arrow(y, 't')));
      EXPECT_EQ(E.arrow(jt(y), 'b'), jt(D.arrow(y, 'b')));
      if (D.arrow(y, 't') != 0) EXPECT_EQ(E.arrow(jt(y), 't'), jt(D.arrow(y, 't')));
      else EXPECT_EQ(E.arrow(jt(y), 't'), 0);
      if (D.arrow(y, 'b') != 0) EXPECT_EQ(E.arrow(jb(y), 'b'), jb(D.arrow(y, 'b')));
      else EXPECT_EQ(E.arrow(jb(y), 'b'), 0);
    }
  }
}

TEST(Rauzy, UniqueSimplePaths) {
  for (int d = 2; d <= 9; ++d) {
    auto D = build_diagram(d);
    auto counts = simple_path_counts(D);
    for (std::size_t v = 0; v < D.size(); ++v) {
      EXPECT_EQ(counts[v], 1) << "d=" << d << " vertex " << D.words[v];
      auto path = gamma_star(D, static_cast<int>(v));
      int cur = 0;
      for (auto [type, next] : path) {
        EXPECT_EQ(D.arrow(cur, type), next);
        cur = next;
      }
      EXPECT_EQ(cur, static_cast<int>(v));
    }
  }
}

TEST(Rauzy, ElementaryLoops) {
  auto l2 = elementary_loops(build_diagram(2));
  ASSERT_EQ(l2.size(), 2u);
  for (const auto& l : l2) EXPECT_EQ(l.length, 1);

  auto D3 = build_diagram(3);
  std::multiset<std::pair<int, std::string>> top3;
  for (const auto& l : elementary_loops(D3))
    if (l.type == 't') top3.insert({l.length, D3.words[static_cast<std::size_t>(l.base_vertex)]});
  EXPECT_EQ(top3, (std::multiset<std::pair<int, std::string>>{{2, ""}, {1, "b"}}));

  for (int d = 2; d <= 10; ++d) {
    auto D = build_diagram(d);
    auto loops = elementary_loops(D);
    // every cycle of R_t or R_b is a simple loop: 2^{d-2} per type
    EXPECT_EQ(loops.size(), std::size_t{1} << (d - 1));
    auto classes = loop_classes(loops);
    EXPECT_EQ(static_cast<int>(classes.size()), 2 * (d - 1));
    std::set<std::pair<char, int>> labels;
    for (const auto& l : loops) {
      const auto& w = D.words[static_cast<std::size_t>(l.base_vertex)];
      EXPECT_EQ(l.length + static_cast<int>(w.size()), d - 1);
      EXPECT_TRUE(l.winner_constant);
      labels.insert({l.type, l.winner});
      // gamma*(base) shares no arrow with the loop
      std::set<std::pair<int, int>> loop_arrows;
      for (std::size_t i = 0; i < l.vertices.size(); ++i)
        loop_arrows.insert({l.vertices[i], l.vertices[(i + 1) % l.vertices.size()]});
      int cur = 0;
      for (auto [type, next] : gamma_star(D, l.base_vertex)) {
        if (type == l.type) {
          EXPECT_FALSE(loop_arrows.count({cur, next}));
        }
        cur = next;
      }
    }
    // each loop's base vertex is the unique vertex of minimal word length on it
    for (const auto& l : loops) {
      const auto base_len = D.words[static_cast<std::size_t>(l.base_vertex)].size();
      int at_min = 0;
      for (int u : l.vertices) at_min += D.words[static_cast<std::size_t>(u)].size() == base_len;
      EXPECT_EQ(at_min, 1);
    }
    for (int w = 0; w <= d - 2; ++w) {
      EXPECT_TRUE(labels.count({'t', d - 1 - 2 * w}));
      EXPECT_TRUE(labels.count({'b', 1 - d + 2 * w}));
    }
  }
}

TEST(Rauzy, DotExport) {
  std::ostringstream os;
  write_dot(build_diagram(3), os);
  auto s = os.str();
  std::size_t nodes = 0, arrows = 0, pos = 0;
  while ((pos = s.find("[label=\"", pos)) != std::string::npos) {
    ++pos;
    if (s.compare(pos + 7, 3, "t\"]") == 0 || s.compare(pos + 7, 3, "b\"]") == 0) ++arrows;
    else ++nodes;
  }
  EXPECT_EQ(nodes, 3u);
  EXPECT_EQ(arrows, 6u);
}
