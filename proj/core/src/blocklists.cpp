#include "ddgen/blocklists.hpp"

#include <algorithm>
#include <numeric>

namespace ddgen {

int BlockList::order() const {
  int n = 0;
  for (const auto& d : blocks) n += d.order();
  return n;
}

std::vector<int> BlockList::degrees() const {
  std::vector<int> out;
  for (const auto& d : blocks) out.push_back(d.connector_count());
  return out;
}

int BlockList::connectors() const {
  int c = 0;
  for (const auto& d : blocks) c += d.connector_count();
  return c;
}

int BlockList::connectors_in(Family f) const {
  int c = 0;
  for (const auto& d : blocks) {
    if (d.family == f) c += d.connector_count();
  }
  return c;
}

bool is_multigraphic(std::vector<int> degrees) {
  long sum = std::accumulate(degrees.begin(), degrees.end(), 0L);
  if (sum % 2 != 0) return false;
  if (degrees.empty()) return true;
  long top = *std::max_element(degrees.begin(), degrees.end());
  return top <= sum - top;
}

bool is_acceptable(const BlockList& list) {
  const int total = list.connectors();
  const int count = static_cast<int>(list.blocks.size());
  if (total == 0) return count == 1;
  if (!is_multigraphic(list.degrees())) return false;
  if (2 * list.connectors_in(Family::Q2) > total) return false;
  if (2 * list.connectors_in(Family::Q3) > total) return false;
  if (count > 1) {
    for (const auto& d : list.blocks) {
      if (d.connector_count() == 0) return false;
    }
    if (total < 2 * (count - 1)) return false;
  }
  return true;
}

namespace {

void extend_list(const Catalogue& cat, std::size_t from, int remaining, BlockList& cur,
                 const std::function<void(const BlockList&)>& sink) {
  if (remaining == 0) {
    if (is_acceptable(cur)) sink(cur);
    return;
  }
  for (std::size_t i = from; i < cat.descriptors.size(); ++i) {
    const auto& d = cat.descriptors[i];
    if (d.order() > remaining) continue;
    cur.blocks.push_back(d);
    extend_list(cat, i, remaining - d.order(), cur, sink);
    cur.blocks.pop_back();
  }
}

}  // namespace

void enumerate_lists(int n, const std::function<void(const BlockList&)>& sink) {
  if (n < 1) return;
  auto cat = catalogue(n);
  BlockList cur;
  extend_list(*cat, 0, n, cur, sink);
}

std::vector<BlockList> enumerate_lists(int n) {
  std::vector<BlockList> out;
  enumerate_lists(n, [&](const BlockList& l) { out.push_back(l); });
  return out;
}

InitialPartial realize_list(const BlockList& list) {
  InitialPartial p;
  p.graph = Pregraph(0);
  p.marking = Colouring(0);
  for (std::size_t i = 0; i < list.blocks.size(); ++i) {
    RealizedBlock r = realize_fragment(list.blocks[i]);
    const int start = p.graph.order();
    p.block_start.push_back(start);
    p.marking = disjoint_union(p.marking, start, r.marking, r.graph.order());
    p.graph = disjoint_union(p.graph, r.graph);
    p.block_of.insert(p.block_of.end(), r.graph.order(), static_cast<int>(i));
  }
  return p;
}

AutInfo seed_group(const BlockList& list, const InitialPartial& partial) {
  const int n = partial.graph.order();
  AutInfo aut;
  for (std::size_t i = 0; i < list.blocks.size(); ++i) {
    const int start = partial.block_start[i];
    const int size = list.blocks[i].order();
    for (const auto& gen : realize(list.blocks[i]).aut_generators) {
      Permutation p(n);
      std::iota(p.begin(), p.end(), 0);
      for (int v = 0; v < size; ++v) p[start + v] = start + gen[v];
      aut.generators.push_back(std::move(p));
    }
    if (i + 1 < list.blocks.size() && list.blocks[i] == list.blocks[i + 1]) {
      Permutation p(n);
      std::iota(p.begin(), p.end(), 0);
      for (int v = 0; v < size; ++v) {
        p[start + v] = start + size + v;
        p[start + size + v] = start + v;
      }
      aut.generators.push_back(std::move(p));
    }
  }
  aut.vertex_orbits = orbits_of(aut.generators, n);
  return aut;
}

}  // namespace ddgen
