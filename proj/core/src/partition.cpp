#include "ddgen/partition.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

namespace ddgen {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

bool is_factor_end(const Pregraph& g, const Colouring& m, SlotId s) {
  return !g.is_open(s) && m.at(s) == kFactorColour;
}

/// The unique slot of v that is not a colour-0 end.
SlotId link_slot(const Pregraph& g, const Colouring& m, int v) {
  for (int i = 0; i < kSlotsPerVertex; ++i) {
    SlotId s = slot_id(v, i);
    if (!is_factor_end(g, m, s)) return s;
  }
  return -1;
}

[[noreturn]] void bad_component(const std::vector<int>& vertices, const char* why) {
  throw MarkingError(std::string("colour-0 component at vertex ") + std::to_string(vertices.front()) +
                     " is not a quotient of C4: " + why);
}

}  // namespace

std::vector<QuotientComponent> quotient_components(const Pregraph& g, const Colouring& m) {
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    int ends = 0;
    for (int i = 0; i < kSlotsPerVertex; ++i) ends += is_factor_end(g, m, slot_id(v, i));
    if (ends != 2) {
      throw MarkingError("vertex " + std::to_string(v) + " has " + std::to_string(ends) + " colour-0 ends");
    }
  }

  std::vector<int> seen(n, 0);
  std::vector<QuotientComponent> out;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> verts{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < verts.size(); ++head) {
      for (int i = 0; i < kSlotsPerVertex; ++i) {
        SlotId s = slot_id(verts[head], i);
        if (!is_factor_end(g, m, s) || !g.is_paired(s)) continue;
        int w = g.neighbour(s);
        if (!seen[w]) {
          seen[w] = 1;
          verts.push_back(w);
        }
      }
    }
    std::sort(verts.begin(), verts.end());

    std::vector<SlotId> elements;
    int semis = 0;
    int edges = 0;
    for (int v : verts) {
      for (int i = 0; i < kSlotsPerVertex; ++i) {
        SlotId s = slot_id(v, i);
        if (!is_factor_end(g, m, s)) continue;
        if (g.is_semi(s)) {
          elements.push_back(s);
          ++semis;
        } else if (g.is_loop(s)) {
          bad_component(verts, "loop");
        } else if (s < g.mate(s)) {
          elements.push_back(s);
          ++edges;
        }
      }
    }
    std::sort(elements.begin(), elements.end());

    QuotientComponent q{QuotientKind::Q4, verts, elements};
    switch (verts.size()) {
      case 1:
        if (semis != 2) bad_component(verts, "single vertex without two semi-edges");
        q.kind = QuotientKind::Q4;
        break;
      case 2:
        if (edges == 2 && semis == 0) {
          q.kind = QuotientKind::Q2;
        } else if (edges == 1 && semis == 2 && g.semi_count(verts[0]) >= 1 && g.semi_count(verts[1]) >= 1) {
          q.kind = QuotientKind::Q3;
        } else {
          bad_component(verts, "two vertices");
        }
        break;
      case 4: {
        if (edges != 4 || semis != 0) bad_component(verts, "four vertices");
        // Every vertex has two distinct colour-0 neighbours, so this is a 4-cycle.
        std::vector<std::array<int, 2>> nb(n);
        for (int v : verts) {
          int k = 0;
          for (int i = 0; i < kSlotsPerVertex; ++i) {
            SlotId s = slot_id(v, i);
            if (is_factor_end(g, m, s)) nb[v][k++] = g.neighbour(s);
          }
          if (nb[v][0] == nb[v][1]) bad_component(verts, "parallel edges");
        }
        std::vector<int> cycle{verts[0]};
        int prev = verts[0];
        int cur = std::min(nb[verts[0]][0], nb[verts[0]][1]);
        while (cur != verts[0]) {
          cycle.push_back(cur);
          int next = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
          prev = cur;
          cur = next;
        }
        q.kind = QuotientKind::Q1;
        q.vertices = cycle;
        break;
      }
      default:
        bad_component(verts, "wrong size");
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<int> quotient_index(const std::vector<QuotientComponent>& quotients, int order) {
  std::vector<int> idx(order, -1);
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    for (int v : quotients[i].vertices) idx[v] = static_cast<int>(i);
  }
  return idx;
}

BlockPartitionResult block_partition(const Pregraph& g, const Colouring& m) {
  BlockPartitionResult res;
  res.quotients = quotient_components(g, m);
  const int n = g.order();
  const auto qidx = quotient_index(res.quotients, n);
  const int nq = static_cast<int>(res.quotients.size());
  auto kind = [&](int v) { return res.quotients[qidx[v]].kind; };

  std::vector<SlotId> link(n);
  for (int v = 0; v < n; ++v) link[v] = link_slot(g, m, v);
  auto factor_adjacent = [&](int a, int b) {
    for (int i = 0; i < kSlotsPerVertex; ++i) {
      SlotId s = slot_id(a, i);
      if (is_factor_end(g, m, s) && g.is_paired(s) && g.neighbour(s) == b) return true;
    }
    return false;
  };

  UnionFind uf(nq);
  for (int x = 0; x < n; ++x) {
    SlotId s = link[x];
    if (!g.is_paired(s)) continue;
    int xp = g.neighbour(s);
    QuotientKind kx = kind(x);
    if (kx != kind(xp)) continue;
    if (kx == QuotientKind::Q2 || kx == QuotientKind::Q3) {
      uf.unite(qidx[x], qidx[xp]);
    } else if (kx == QuotientKind::Q1) {
      // A ladder rung pair: x-y and x'-y' are colour-0 edges joined by two colour-1 edges.
      for (int i = 0; i < kSlotsPerVertex; ++i) {
        SlotId t = slot_id(x, i);
        if (!is_factor_end(g, m, t)) continue;
        int y = g.neighbour(t);
        SlotId ys = link[y];
        if (!g.is_paired(ys)) continue;
        int yp = g.neighbour(ys);
        if (yp != x && yp != xp && factor_adjacent(xp, yp)) uf.unite(qidx[x], qidx[xp]);
      }
    }
  }

  std::vector<int> root_block(nq, -1);
  res.block_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int r = uf.find(qidx[v]);
    if (root_block[r] < 0) {
      root_block[r] = static_cast<int>(res.blocks.size());
      res.blocks.push_back(Block{static_cast<BlockKind>(kind(v)), {}, {}, {}, {}});
    }
    res.block_of[v] = root_block[r];
    res.blocks[root_block[r]].vertices.push_back(v);
  }
  for (int q = 0; q < nq; ++q) res.blocks[root_block[uf.find(q)]].quotients.push_back(q);
  for (int v = 0; v < n; ++v) {
    SlotId s = link[v];
    Block& b = res.blocks[res.block_of[v]];
    if (g.is_open(s)) {
      b.boundary.push_back(s);
    } else if (g.is_paired(s)) {
      if (res.block_of[g.neighbour(s)] != res.block_of[v]) b.boundary.push_back(s);
      else if (s < g.mate(s)) b.internal.push_back(s);
    }
  }
  return res;
}

std::vector<UnmarkedPart> unmarked_partition(const Pregraph& g) {
  const int n = g.order();
  std::vector<std::set<int>> adj(n);
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (SlotId s = 0; s < g.slot_count(); ++s) {
    if (!g.is_paired(s) || g.is_loop(s)) continue;
    int a = slot_vertex(s);
    int b = g.neighbour(s);
    adj[a].insert(b);
    ++mult[a][b];
  }

  UnionFind uf(n);
  std::vector<char> in_ladder(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b : adj[a]) {
      for (int c : adj[a]) {
        if (c <= b) continue;
        for (int d : adj[b]) {
          if (d == a || d == c || !adj[c].count(d)) continue;
          for (int v : {a, b, c, d}) in_ladder[v] = 1;
          uf.unite(a, b);
          uf.unite(a, c);
          uf.unite(a, d);
        }
      }
    }
  }

  std::vector<UnmarkedPart> parts;
  std::vector<char> placed(n, 0);
  std::vector<int> part_of_root(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!in_ladder[v]) continue;
    int r = uf.find(v);
    if (part_of_root[r] < 0) {
      part_of_root[r] = static_cast<int>(parts.size());
      parts.push_back({UnmarkedPartKind::Ladder, {}});
    }
    parts[part_of_root[r]].vertices.push_back(v);
    placed[v] = 1;
  }
  for (int a = 0; a < n; ++a) {
    if (placed[a]) continue;
    for (int b : adj[a]) {
      if (b > a && !placed[b] && mult[a][b] >= 2) {
        parts.push_back({UnmarkedPartKind::Digon, {a, b}});
        placed[a] = placed[b] = 1;
        break;
      }
    }
  }
  for (int start = 0; start < n; ++start) {
    if (placed[start]) continue;
    UnmarkedPart part{UnmarkedPartKind::Remainder, {start}};
    placed[start] = 1;
    for (std::size_t head = 0; head < part.vertices.size(); ++head) {
      for (int w : adj[part.vertices[head]]) {
        if (!placed[w]) {
          placed[w] = 1;
          part.vertices.push_back(w);
        }
      }
    }
    std::sort(part.vertices.begin(), part.vertices.end());
    parts.push_back(std::move(part));
  }
  std::sort(parts.begin(), parts.end(),
            [](const UnmarkedPart& x, const UnmarkedPart& y) { return x.vertices.front() < y.vertices.front(); });
  return parts;
}

}  // namespace ddgen
