#include <gtest/gtest.h>

#include <random>

#include "ddgen/blocklists.hpp"
#include "ddgen/canonical.hpp"
#include "ddgen/generator.hpp"
#include "ddgen/oracle.hpp"
#include "support.hpp"

using namespace ddgen;
using test::assemble;

namespace {

std::set<Permutation> as_set(const std::vector<Permutation>& v) { return {v.begin(), v.end()}; }

std::vector<int> deficient_of(const Pregraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.open_slots(v) > 0) out.push_back(v);
  }
  return out;
}

struct Partial {
  Pregraph graph;
  Colouring marking;
};

// Every partial graph the generator passes through for orders up to max_n.
std::vector<Partial> generator_partials(int max_n) {
  std::vector<Partial> out;
  GeneratorOptions opts;
  opts.on_extend = [&](const Pregraph& g, const Colouring& m, std::span<const int>) { out.push_back({g, m}); };
  for (int n = 1; n <= max_n; ++n) generate_marked(n, [](const Pregraph&, const Colouring&) {}, opts);
  return out;
}

// Small marked and unmarked complete graphs plus partials made by reopening
// the colour-1 ends of a few vertices.
std::vector<Partial> sample_graphs(int max_n, std::mt19937& rng) {
  std::vector<Partial> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& g : oracle::all_cubic_pregraphs(n)) {
      out.push_back({g, {}});
      for (const auto& m : oracle::all_cq_markings(g)) {
        out.push_back({g, m});
        Pregraph h = g;
        for (int v = 0; v < n; ++v) {
          if (rng() % 3 != 0) continue;
          for (int i = 0; i < kSlotsPerVertex; ++i) {
            SlotId s = slot_id(v, i);
            if (m.at(s) == kLinkColour && !h.is_open(s)) h.reopen(s);
          }
        }
        out.push_back({h, m});
      }
    }
  }
  return out;
}

std::vector<std::vector<std::pair<int, int>>> brute_pair_orbits(const std::set<Permutation>& group,
                                                                  const std::vector<int>& deficient,
                                                                  const std::vector<int>& orbit) {
  std::set<std::pair<int, int>> todo;
  std::set<int> in_orbit(orbit.begin(), orbit.end());
  for (std::size_t i = 0; i < deficient.size(); ++i) {
    for (std::size_t j = i + 1; j < deficient.size(); ++j) {
      if (in_orbit.count(deficient[i]) || in_orbit.count(deficient[j])) todo.emplace(deficient[i], deficient[j]);
    }
  }
  std::vector<std::vector<std::pair<int, int>>> out;
  while (!todo.empty()) {
    auto [x, y] = *todo.begin();
    std::set<std::pair<int, int>> cls;
    for (const auto& p : group) cls.emplace(std::min(p[x], p[y]), std::max(p[x], p[y]));
    for (const auto& e : cls) todo.erase(e);
    out.emplace_back(cls.begin(), cls.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

AutInfo symmetric_group(int n) {
  AutInfo a;
  Permutation swap = test::identity(n);
  std::swap(swap[0], swap[1]);
  Permutation cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  a.generators = {swap, cycle};
  a.vertex_orbits.assign(n, 0);
  a.canonical_labelling = test::identity(n);
  return a;
}

AutInfo trivial_group(int n) {
  AutInfo a;
  a.vertex_orbits = test::identity(n);
  a.canonical_labelling = test::identity(n);
  return a;
}

}  // namespace

TEST(Encode, TripleEdgeWithMarkedDigon) {
  auto m = assemble(2, {{0, 1, 0}, {0, 1, 0}, {0, 1, 1}}, {});
  EncodedGraph e = encode(m.graph, m.colouring);
  EXPECT_EQ(e.original, 2);
  ASSERT_EQ(e.node_colour.size(), 5u);
  std::multiset<std::uint32_t> aux(e.node_colour.begin() + 2, e.node_colour.end());
  EXPECT_EQ(aux, (std::multiset<std::uint32_t>{EncodedGraph::kEdgeBase, EncodedGraph::kEdgeBase,
                                               EncodedGraph::kEdgeBase + 1}));
  EXPECT_EQ(e.edges.size(), 6u);
}

TEST(Encode, Q4WithOpenSlot) {
  auto m = assemble(1, {}, {{0, 0}, {0, 0}});
  EncodedGraph e = encode(m.graph, m.colouring);
  EXPECT_EQ(e.original, 1);
  std::multiset<std::uint32_t> aux(e.node_colour.begin() + 1, e.node_colour.end());
  EXPECT_EQ(aux, (std::multiset<std::uint32_t>{EncodedGraph::kSemiBase, EncodedGraph::kSemiBase,
                                               EncodedGraph::kOpenSlot}));
  for (auto [a, b] : e.edges) EXPECT_TRUE(a == 0 || b == 0);
}

TEST(Encode, MarkedFourCycleWithOpenSlotsHasDihedralGroup) {
  auto m = assemble(4, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 0, 0}}, {});
  EXPECT_EQ(test::brute_automorphisms(m.graph, m.colouring).size(), 8u);
  AutInfo a = automorphisms(m.graph, m.colouring);
  EXPECT_EQ(test::group_closure(a.generators, 4).size(), 8u);
  ColouredGraph enc = to_coloured_graph(encode(m.graph, m.colouring));
  auto c = canonicalize(enc);
  std::set<Permutation> restricted;
  for (const auto& p : test::group_closure(c.aut.generators, enc.n)) restricted.insert(Permutation(p.begin(), p.begin() + 4));
  EXPECT_EQ(restricted.size(), 8u);
}

TEST(Encode, RestrictionMatchesMarkedAutomorphisms) {
  std::mt19937 rng(5);
  int checked = 0;
  for (const auto& p : sample_graphs(5, rng)) {
    const int n = p.graph.order();
    EncodedGraph e = encode(p.graph, p.marking);
    ColouredGraph enc = to_coloured_graph(e);
    auto c = canonicalize(enc);
    std::set<Permutation> restricted;
    for (const auto& gen : c.aut.generators) {
      EXPECT_TRUE(is_automorphism(enc, gen));
      Permutation r(gen.begin(), gen.begin() + n);
      EXPECT_TRUE(test::preserves(p.graph, p.marking, r));
    }
    for (const auto& q : test::group_closure(c.aut.generators, enc.n)) restricted.insert(Permutation(q.begin(), q.begin() + n));
    EXPECT_EQ(restricted, as_set(test::brute_automorphisms(p.graph, p.marking)));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Encode, FormsAgreeWithVertexLevelView) {
  std::mt19937 rng(9);
  auto graphs = sample_graphs(4, rng);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i; j < graphs.size(); ++j) {
      const auto& a = graphs[i];
      const auto& b = graphs[j];
      if (a.graph.order() != b.graph.order()) continue;
      bool direct = canonical_form(a.graph, a.marking) == canonical_form(b.graph, b.marking);
      bool encoded = canonicalize(to_coloured_graph(encode(a.graph, a.marking))).form ==
                     canonicalize(to_coloured_graph(encode(b.graph, b.marking))).form;
      EXPECT_EQ(direct, encoded);
    }
  }
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  std::mt19937 rng(1);
  std::vector<Partial> graphs;
  for (const auto& p : sample_graphs(6, rng)) {
    if (p.graph.order() == 6 && rng() % 8 == 0) graphs.push_back(p);
  }
  graphs.push_back({test::prism(4), {}});
  graphs.push_back({test::mobius_ladder(3), {}});
  graphs.push_back({test::barbed_path(7), {}});
  ASSERT_GT(graphs.size(), 20u);
  for (const auto& p : graphs) {
    const CanonicalForm f = canonical_form(p.graph, p.marking);
    for (int rep = 0; rep < 100; ++rep) {
      Permutation pi = test::random_permutation(p.graph.order(), rng);
      ASSERT_EQ(canonical_form(relabel(p.graph, pi), relabel(p.graph, p.marking, pi)), f);
    }
  }
}

TEST(CanonicalForm, SeparatesNonIsomorphicGraphs) {
  // Two connected graphs are isomorphic iff their disjoint union has an
  // automorphism moving vertex 0 into the second copy.
  for (int n = 1; n <= 5; ++n) {
    auto graphs = oracle::all_cubic_pregraphs(n);
    std::set<std::string> bytes;
    for (const auto& g : graphs) bytes.insert(canonical_form(g).bytes());
    EXPECT_EQ(bytes.size(), graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (std::size_t j = i + 1; j < graphs.size(); ++j) {
        Pregraph u = disjoint_union(graphs[i], graphs[j]);
        bool swapped = false;
        for (const auto& p : test::brute_automorphisms(u, {})) swapped = swapped || p[0] >= n;
        EXPECT_FALSE(swapped);
      }
    }
  }
}

TEST(CanonicalForm, LabellingIsAnIsomorphismToTheForm) {
  std::mt19937 rng(4);
  for (const auto& p : sample_graphs(5, rng)) {
    auto c = canonicalize(p.graph, p.marking);
    const auto& lab = c.aut.canonical_labelling;
    ASSERT_EQ(static_cast<int>(lab.size()), p.graph.order());
    Pregraph h = relabel(p.graph, lab);
    Colouring hc = relabel(p.graph, p.marking, lab);
    EXPECT_EQ(canonical_form(h, hc), c.form);
    // A relabelled copy put into its own canonical labelling is the same graph.
    Permutation pi = test::random_permutation(p.graph.order(), rng);
    Pregraph g2 = relabel(p.graph, pi);
    Colouring c2 = relabel(p.graph, p.marking, pi);
    const auto& lab2 = canonicalize(g2, c2).aut.canonical_labelling;
    Pregraph h2 = relabel(g2, lab2);
    Colouring hc2 = relabel(g2, c2, lab2);
    const Permutation id = test::identity(p.graph.order());
    for (int v = 0; v < p.graph.order(); ++v) {
      ASSERT_EQ(test::profile(h, hc, v, id), test::profile(h2, hc2, v, id));
    }
  }
}

TEST(Automorphisms, BarbedPathWithEndQ4s) {
  auto m = assemble(4, {{0, 1, 1}, {1, 2, 0}, {2, 3, 1}}, {{0, 0}, {0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 0}});
  EXPECT_EQ(test::brute_automorphisms(m.graph, m.colouring).size(), 2u);
  AutInfo a = automorphisms(m.graph, m.colouring);
  EXPECT_EQ(test::group_closure(a.generators, 4).size(), 2u);
  EXPECT_EQ(a.vertex_orbits, (std::vector<int>{0, 1, 1, 0}));
}

TEST(Automorphisms, NamedFamilies) {
  EXPECT_EQ(test::group_closure(automorphisms(test::prism(4)).generators, 8).size(), 48u);
  EXPECT_EQ(test::group_closure(automorphisms(test::mobius_ladder(2)).generators, 4).size(), 24u);
  EXPECT_EQ(test::group_closure(automorphisms(test::crown(5)).generators, 5).size(), 10u);
  EXPECT_EQ(test::group_closure(automorphisms(test::barbed_path(5)).generators, 5).size(), 2u);
}

TEST(Automorphisms, GroupMatchesBruteForceOnGeneratorPartials) {
  auto partials = generator_partials(8);
  ASSERT_GT(partials.size(), 300u);
  for (const auto& p : partials) {
    AutInfo a = automorphisms(p.graph, p.marking);
    for (const auto& gen : a.generators) ASSERT_TRUE(test::preserves(p.graph, p.marking, gen));
    auto brute = as_set(test::brute_automorphisms(p.graph, p.marking));
    ASSERT_EQ(test::group_closure(a.generators, p.graph.order()), brute);
    EXPECT_EQ(a.vertex_orbits, orbits_of(a.generators, p.graph.order()));
  }
}

TEST(Automorphisms, GroupMatchesBruteForceOnSmallGraphs) {
  std::mt19937 rng(2);
  for (const auto& p : sample_graphs(6, rng)) {
    AutInfo a = automorphisms(p.graph, p.marking);
    ASSERT_EQ(test::group_closure(a.generators, p.graph.order()),
              as_set(test::brute_automorphisms(p.graph, p.marking)))
        << p.graph.order();
  }
}

TEST(PairOrbits, TrivialGroup) {
  std::vector<int> deficient{0, 1, 2};
  std::vector<int> orbit{0};
  auto orbits = pair_orbits(trivial_group(3), deficient, orbit);
  ASSERT_EQ(orbits.size(), 2u);
  EXPECT_EQ(orbits[0].members, (std::vector<std::pair<int, int>>{{0, 1}}));
  EXPECT_EQ(orbits[1].members, (std::vector<std::pair<int, int>>{{0, 2}}));
}

TEST(PairOrbits, SymmetricGroupOnFour) {
  std::vector<int> all{0, 1, 2, 3};
  auto orbits = pair_orbits(symmetric_group(4), all, all);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].members.size(), 6u);
  EXPECT_EQ(orbits[0].representative, (std::pair<int, int>{0, 1}));
}

TEST(PairOrbits, MatchBruteForceOnGeneratorPartials) {
  auto partials = generator_partials(8);
  int checked = 0;
  for (const auto& p : partials) {
    std::vector<int> deficient = deficient_of(p.graph);
    if (deficient.size() < 2) continue;
    AutInfo a = automorphisms(p.graph, p.marking);
    auto group = test::group_closure(a.generators, p.graph.order());
    std::map<int, std::vector<int>> orbits;
    for (int v : deficient) orbits[a.vertex_orbits[v]].push_back(v);
    for (const auto& [id, orbit] : orbits) {
      auto got = pair_orbits(a, deficient, orbit);
      std::vector<std::vector<std::pair<int, int>>> members;
      for (const auto& o : got) {
        members.push_back(o.members);
        std::sort(members.back().begin(), members.back().end());
        // The representative is a member with the smallest pair of labels.
        auto key = [&](std::pair<int, int> e) {
          int x = a.canonical_labelling[e.first];
          int y = a.canonical_labelling[e.second];
          return std::make_pair(std::min(x, y), std::max(x, y));
        };
        ASSERT_NE(std::find(o.members.begin(), o.members.end(), o.representative), o.members.end());
        for (const auto& e : o.members) EXPECT_LE(key(o.representative), key(e));
      }
      std::sort(members.begin(), members.end());
      ASSERT_EQ(members, brute_pair_orbits(group, deficient, orbit));
      ++checked;
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(ActsTrivially, Examples) {
  std::vector<int> deficient{0, 1};
  EXPECT_TRUE(acts_trivially(trivial_group(3), deficient));
  AutInfo swap = trivial_group(3);
  swap.generators.push_back({1, 0, 2});
  EXPECT_FALSE(acts_trivially(swap, deficient));
  std::vector<int> only_last{2};
  EXPECT_TRUE(acts_trivially(swap, only_last));
}

TEST(ActsTrivially, AgreesWithGeneratorInspection) {
  for (const auto& p : generator_partials(6)) {
    auto deficient = deficient_of(p.graph);
    AutInfo a = automorphisms(p.graph, p.marking);
    bool fixed = true;
    for (const auto& g : test::group_closure(a.generators, p.graph.order())) {
      for (int v : deficient) fixed = fixed && g[v] == v;
    }
    EXPECT_EQ(acts_trivially(a, deficient), fixed);
  }
}

TEST(Permutations, ComposeAndInverse) {
  std::mt19937 rng(8);
  for (int rep = 0; rep < 50; ++rep) {
    Permutation a = test::random_permutation(7, rng);
    Permutation b = test::random_permutation(7, rng);
    Permutation ab = compose(a, b);
    for (int i = 0; i < 7; ++i) EXPECT_EQ(ab[i], b[a[i]]);
    EXPECT_EQ(compose(a, inverse(a)), test::identity(7));
  }
}

TEST(SeedGroup, Examples) {
  auto order_of = [](const std::vector<std::string>& codes) {
    BlockList list;
    for (const auto& c : codes) list.blocks.push_back(BlockDescriptor::parse(c));
    InitialPartial p = realize_list(list);
    return test::group_closure(seed_group(list, p).generators, p.graph.order()).size();
  };
  EXPECT_EQ(order_of({"Q4:k=1:e=c", "Q4:k=1:e=c"}), 2u);
  EXPECT_EQ(order_of({"Q1:k=1:e=cccc"}), 8u);
  EXPECT_EQ(order_of({"Q2:k=1:e=cc", "Q4:k=1:e=c"}), 2u);
}

TEST(SeedGroup, EqualsAutomorphismGroupOfInitialPartial) {
  int checked = 0;
  for (int n = 1; n <= 9; ++n) {
    for (const auto& list : enumerate_lists(n)) {
      InitialPartial p = realize_list(list);
      AutInfo seed = seed_group(list, p);
      for (const auto& g : seed.generators) ASSERT_TRUE(test::preserves(p.graph, p.marking, g));
      auto expected = test::group_closure(automorphisms(p.graph, p.marking).generators, n);
      if (n <= 7) ASSERT_EQ(expected, as_set(test::brute_automorphisms(p.graph, p.marking)));
      ASSERT_EQ(test::group_closure(seed.generators, n), expected);
      EXPECT_EQ(seed.vertex_orbits, orbits_of(seed.generators, n));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 1 + 5 + 2 + 13 + 7 + 31 + 25 + 103 + 86);
}
