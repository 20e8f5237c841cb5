#pragma once

// Helpers shared by the test suites. The automorphism and connectivity
// checks do not use the canonical engine, so they stay independent of it.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "ddgen/blocklists.hpp"
#include "ddgen/partition.hpp"
#include "ddgen/pregraph.hpp"

namespace ddgen::test {

struct Marked {
  Pregraph graph;
  Colouring colouring;
};

// Edges (u, v, colour) and semi-edges (v, colour) take the next free slot of
// their vertices; colour -1 leaves the element uncoloured. Unused slots stay
// open.
inline Marked assemble(int n, const std::vector<std::tuple<int, int, int>>& edges,
                       const std::vector<std::pair<int, int>>& semis) {
  Marked m{Pregraph(n), Colouring(n)};
  std::vector<int> next(n, 0);
  auto take = [&](int v) { return slot_id(v, next[v]++); };
  for (auto [u, v, c] : edges) {
    SlotId a = take(u);
    SlotId b = take(v);
    m.graph.connect(a, b);
    if (c >= 0) m.colouring.set(m.graph, a, static_cast<std::uint8_t>(c));
  }
  for (auto [v, c] : semis) {
    SlotId s = take(v);
    m.graph.set_semi(s);
    if (c >= 0) m.colouring.set_slot(s, static_cast<std::uint8_t>(c));
  }
  return m;
}

inline Pregraph assemble_plain(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& semis) {
  std::vector<std::tuple<int, int, int>> e;
  for (auto [u, v] : edges) e.emplace_back(u, v, -1);
  std::vector<std::pair<int, int>> s;
  for (int v : semis) s.emplace_back(v, -1);
  return assemble(n, e, s).graph;
}

inline Pregraph barbed_path(int n) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> semis;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  for (int v = 0; v < n; ++v) {
    int free = 3 - (v > 0) - (v + 1 < n);
    for (int i = 0; i < free; ++i) semis.push_back(v);
  }
  return assemble_plain(n, edges, semis);
}

inline Pregraph crown(int n) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> semis;
  for (int v = 0; v < n; ++v) {
    edges.emplace_back(v, (v + 1) % n);
    semis.push_back(v);
  }
  return assemble_plain(n, edges, semis);
}

// K2 x C_m on 2m vertices: outer cycle 0..m-1, inner cycle m..2m-1.
inline Pregraph prism(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(i, (i + 1) % m);
    edges.emplace_back(m + i, m + (i + 1) % m);
    edges.emplace_back(i, m + i);
  }
  return assemble_plain(2 * m, edges, {});
}

inline Pregraph mobius_ladder(int half) {
  const int n = 2 * half;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < half; ++i) edges.emplace_back(i, i + half);
  return assemble_plain(n, edges, {});
}

// K2 x P_m with rails 0..m-1 and m..2m-1; each end either closed by a second
// rung or left open with a semi-edge on both end vertices.
inline Pregraph ladder(int m, bool first_closed, bool last_closed) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> semis;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, m + i);
  for (int i = 0; i + 1 < m; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(m + i, m + i + 1);
  }
  auto close = [&](int i, bool closed) {
    if (closed) {
      edges.emplace_back(i, m + i);
    } else {
      semis.push_back(i);
      semis.push_back(m + i);
    }
  };
  close(0, first_closed);
  close(m - 1, last_closed);
  return assemble_plain(2 * m, edges, semis);
}

inline Permutation random_permutation(int n, std::mt19937& rng) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// What vertex v looks like after applying p: its elements as (kind,
// neighbour image, colour), sorted. Kind 0 is an edge end, 1 a semi-edge,
// 2 an open slot.
inline std::vector<std::array<int, 3>> profile(const Pregraph& g, const Colouring& c, int v, const Permutation& p) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < kSlotsPerVertex; ++i) {
    SlotId s = slot_id(v, i);
    int colour = c.at(s);
    if (g.is_paired(s)) out.push_back({0, p[g.neighbour(s)], colour});
    else if (g.is_semi(s)) out.push_back({1, -1, colour});
    else out.push_back({2, -1, 0});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Permutation identity(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Does the vertex permutation p map (g, c) onto itself, preserving colours,
// semi-edges and open slots?
inline bool preserves(const Pregraph& g, const Colouring& c, const Permutation& p) {
  const Permutation id = identity(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (profile(g, c, v, p) != profile(g, c, p[v], id)) return false;
  }
  return true;
}

// Every automorphism, by backtracking over vertex images.
inline std::vector<Permutation> brute_automorphisms(const Pregraph& g, const Colouring& c) {
  const int n = g.order();
  std::vector<std::vector<std::array<int, 2>>> local(n);  // (kind, colour) multiset per vertex
  std::map<std::pair<int, int>, std::vector<int>> between;  // colours of the edges u-w
  for (int v = 0; v < n; ++v) {
    for (auto& e : profile(g, c, v, identity(n))) local[v].push_back({e[0], e[2]});
    std::sort(local[v].begin(), local[v].end());
    for (int i = 0; i < kSlotsPerVertex; ++i) {
      SlotId s = slot_id(v, i);
      if (g.is_paired(s)) between[{v, g.neighbour(s)}].push_back(c.at(s));
    }
  }
  for (auto& [k, cols] : between) std::sort(cols.begin(), cols.end());
  auto edges = [&](int a, int b) {
    auto it = between.find({a, b});
    return it == between.end() ? std::vector<int>{} : it->second;
  };
  std::vector<Permutation> out;
  Permutation p(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (preserves(g, c, p)) out.push_back(p);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || local[v] != local[w]) continue;
      p[v] = w;
      bool ok = true;
      for (int u = 0; u <= v && ok; ++u) ok = edges(v, u) == edges(w, p[u]);
      if (ok) {
        used[w] = true;
        self(self, v + 1);
        used[w] = false;
      }
      p[v] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

// All elements of the group generated by gens.
inline std::set<Permutation> group_closure(const std::vector<Permutation>& gens, int n) {
  std::set<Permutation> seen{identity(n)};
  std::vector<Permutation> frontier{identity(n)};
  while (!frontier.empty()) {
    Permutation p = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      Permutation q(n);
      for (int i = 0; i < n; ++i) q[i] = g[p[i]];
      if (seen.insert(q).second) frontier.push_back(std::move(q));
    }
  }
  return seen;
}

// Connected components by breadth-first search over paired slots.
inline int count_components(const Pregraph& g) {
  std::vector<int> seen(g.order(), 0);
  int comps = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<int> queue{s};
    seen[s] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (int i = 0; i < kSlotsPerVertex; ++i) {
        SlotId x = slot_id(queue[h], i);
        if (!g.is_paired(x)) continue;
        int w = g.neighbour(x);
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return comps;
}

// The sorted descriptor list of a marked graph's blocks.
inline BlockList list_of(const Pregraph& g, const Colouring& m) {
  BlockList l;
  for (const auto& b : block_partition(g, m).blocks) {
    auto d = identify_block(g, m, b);
    if (!d) throw std::runtime_error("unidentified block");
    l.blocks.push_back(*d);
  }
  std::sort(l.blocks.begin(), l.blocks.end());
  return l;
}

}  // namespace ddgen::test
