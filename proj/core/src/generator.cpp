#include "ddgen/generator.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "ddgen/canonical.hpp"
#include "ddgen/partition.hpp"

namespace ddgen {

namespace {

constexpr int kLinkSlot = 2;

SlotId link_of(int v) { return slot_id(v, kLinkSlot); }

/// Component sizes and open slot counts after joining u and v.
bool closes_short_component(const Pregraph& g, int u, int v) {
  std::vector<char> seen(g.order(), 0);
  int size = 0;
  int open = 0;
  auto visit = [&](int start) {
    if (seen[start]) return;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++size;
      for (int i = 0; i < kSlotsPerVertex; ++i) {
        SlotId s = slot_id(x, i);
        if (g.is_open(s)) ++open;
        if (!g.is_paired(s)) continue;
        int w = g.neighbour(s);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  };
  visit(u);
  visit(v);
  return open - 2 == 0 && size < g.order();
}

class Engine {
 public:
  Engine(PartialGraph p, const MarkedSink& sink, const GeneratorOptions& opts, GeneratorStats& stats)
      : p_(std::move(p)), sink_(sink), opts_(opts), stats_(stats) {}

  void run() { extend(); }
  void run_complete() { complete(); }

 private:
  bool valid(int u, int v) {
    bool ok = is_valid_connection(p_, u, v);
    if (opts_.debug_validate && ok != is_valid_connection_full(p_, u, v)) {
      throw std::logic_error("local validity rule disagrees with the block partition for edge " +
                             std::to_string(u) + "-" + std::to_string(v));
    }
    if (!ok) ++stats_.rejected_connections;
    return ok;
  }

  void connect(int u, int v, std::uint8_t colour) {
    p_.graph.connect(link_of(u), link_of(v));
    p_.marking.set(p_.graph, link_of(u), colour);
  }

  void disconnect(int u, int v) {
    p_.graph.reopen(link_of(u));
    p_.marking.set_slot(link_of(u), kLinkColour);
    p_.marking.set_slot(link_of(v), kLinkColour);
  }

  void recolour(const std::vector<std::pair<int, int>>& edges, std::uint8_t colour) {
    for (auto [u, v] : edges) p_.marking.set(p_.graph, link_of(u), colour);
  }

  void emit() {
    ++stats_.graphs;
    sink_(p_.graph, p_.marking);
  }

  void extend() {
    ++stats_.partials;
    const auto deficient = p_.deficient();
    if (deficient.empty()) {
      if (opts_.on_extend) opts_.on_extend(p_.graph, p_.marking, {});
      emit();
      return;
    }
    Canonical c = canonicalize(p_.graph, p_.marking);
    if (acts_trivially(c.aut, deficient)) {
      if (opts_.on_extend) opts_.on_extend(p_.graph, p_.marking, {});
      complete();
      return;
    }
    // Smallest orbit of deficient vertices; ties by smallest canonical label.
    std::map<int, std::vector<int>> orbits;
    for (int v : deficient) orbits[c.aut.vertex_orbits[v]].push_back(v);
    const std::vector<int>* chosen = nullptr;
    std::pair<std::size_t, int> best_key{0, 0};
    for (const auto& [id, members] : orbits) {
      int min_label = c.aut.canonical_labelling[members.front()];
      for (int v : members) min_label = std::min(min_label, c.aut.canonical_labelling[v]);
      std::pair<std::size_t, int> key{members.size(), min_label};
      if (!chosen || key < best_key) {
        chosen = &members;
        best_key = key;
      }
    }
    const std::vector<int> orbit = *chosen;
    if (opts_.on_extend) opts_.on_extend(p_.graph, p_.marking, orbit);
    std::vector<std::pair<int, int>> added;
    saturate(orbit, c.aut, added);
  }

  /// Adds edges meeting `orbit` until every vertex of it is saturated. The
  /// states are generated up to automorphisms of the partial graph the step
  /// started from: the edges of this step carry their own colour, so an
  /// isomorphism between two states maps the old graph onto itself.
  void saturate(const std::vector<int>& orbit, const AutInfo& aut, std::vector<std::pair<int, int>>& added) {
    const auto deficient = p_.deficient();
    std::vector<int> open_members;
    for (int v : orbit) {
      if (p_.graph.is_open(link_of(v))) open_members.push_back(v);
    }
    if (open_members.empty()) {
      recolour(added, kLinkColour);
      extend();
      recolour(added, kStepColour);
      return;
    }
    for (int x : open_members) {
      bool any = std::any_of(deficient.begin(), deficient.end(),
                             [&](int y) { return y != x && is_valid_connection(p_, x, y); });
      if (!any) return;
    }
    for (const auto& po : pair_orbits(aut, deficient, open_members)) {
      auto [x, y] = po.representative;
      if (!valid(x, y)) continue;
      connect(x, y, kStepColour);
      added.emplace_back(x, y);
      Canonical c = canonicalize(p_.graph, p_.marking);
      if (is_canonical_extension(c.aut, added)) saturate(orbit, c.aut, added);
      else ++stats_.rejected_noncanonical;
      added.pop_back();
      disconnect(x, y);
    }
  }

  void complete() {
    int u = -1;
    for (int v = 0; v < p_.graph.order(); ++v) {
      if (p_.graph.is_open(link_of(v))) {
        u = v;
        break;
      }
    }
    if (u < 0) {
      emit();
      return;
    }
    for (int v = u + 1; v < p_.graph.order(); ++v) {
      if (!p_.graph.is_open(link_of(v)) || !valid(u, v)) continue;
      connect(u, v, kLinkColour);
      complete();
      disconnect(u, v);
    }
  }

  PartialGraph p_;
  const MarkedSink& sink_;
  const GeneratorOptions& opts_;
  GeneratorStats& stats_;
};

Pregraph barbed_path(int n) {
  Pregraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.connect(slot_id(i, 0), slot_id(i + 1, 1));
  for (SlotId s = 0; s < g.slot_count(); ++s) {
    if (g.is_open(s)) g.set_semi(s);
  }
  return g;
}

/// K2 x P_m with rung i on vertices 2i, 2i+1; `closed` ends get a second
/// rung, open ends a semi-edge at both vertices.
Pregraph ladder(int m, bool first_closed, bool last_closed) {
  const int n = 2 * m;
  Pregraph g(n);
  auto free_slot = [&](int v) {
    for (int i = 0; i < kSlotsPerVertex; ++i) {
      if (g.is_open(slot_id(v, i))) return slot_id(v, i);
    }
    throw std::logic_error("vertex is saturated");
  };
  auto edge = [&](int a, int b) {
    SlotId s = free_slot(a);
    SlotId t = free_slot(b);
    g.connect(s, t);
  };
  for (int i = 0; i < m; ++i) edge(2 * i, 2 * i + 1);
  for (int i = 0; i + 1 < m; ++i) {
    edge(2 * i, 2 * i + 2);
    edge(2 * i + 1, 2 * i + 3);
  }
  auto finish = [&](int rung, bool closed) {
    if (closed) {
      edge(2 * rung, 2 * rung + 1);
    } else {
      g.set_semi(free_slot(2 * rung));
      g.set_semi(free_slot(2 * rung + 1));
    }
  };
  finish(0, first_closed);
  if (m > 1) {
    finish(m - 1, last_closed);
  } else if (!last_closed) {
    // A single rung: the open end shares the vertices of the closed one.
    for (int v = 0; v < 2; ++v) {
      if (g.open_slots(v) > 0) g.set_semi(free_slot(v));
    }
  }
  return g;
}

struct FamilyModel {
  MultiFactorFamily family;
  int semis;
  CanonicalForm form;
};

int semi_total(const Pregraph& g) {
  int s = 0;
  for (int v = 0; v < g.order(); ++v) s += g.semi_count(v);
  return s;
}

const std::vector<FamilyModel>& models(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<FamilyModel>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<FamilyModel> out;
  auto add = [&](MultiFactorFamily f, const Pregraph& g) { out.push_back({f, semi_total(g), canonical_form(g)}); };
  if (n % 2 == 0) {
    add(MultiFactorFamily::BarbedPath, barbed_path(n));
    add(MultiFactorFamily::OpenClosedLadder, ladder(n / 2, true, false));
  }
  if (n % 4 == 0) {
    add(MultiFactorFamily::DoubleClosedLadder, ladder(n / 2, true, true));
    add(MultiFactorFamily::DoubleOpenLadder, ladder(n / 2, false, false));
  }
  return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace

void GeneratorStats::merge(const GeneratorStats& other) {
  graphs += other.graphs;
  lists += other.lists;
  partials += other.partials;
  rejected_connections += other.rejected_connections;
  rejected_noncanonical += other.rejected_noncanonical;
  per_list.insert(per_list.end(), other.per_list.begin(), other.per_list.end());
}

PartialGraph PartialGraph::from_list(const BlockList& list) {
  InitialPartial init = realize_list(list);
  PartialGraph p{std::move(init.graph), std::move(init.marking), std::move(init.block_of), {}};
  for (const auto& d : list.blocks) p.family_of_block.push_back(d.family);
  return p;
}

std::vector<int> PartialGraph::deficient() const {
  std::vector<int> out;
  for (int v = 0; v < graph.order(); ++v) {
    if (graph.open_slots(v) > 0) out.push_back(v);
  }
  return out;
}

bool is_valid_connection(const PartialGraph& p, int u, int v) {
  const Pregraph& g = p.graph;
  if (u == v || !g.is_open(link_of(u)) || !g.is_open(link_of(v))) return false;
  const int bu = p.block_of[u];
  const int bv = p.block_of[v];
  if (bu == bv) return false;
  const Family fu = p.family_of_block[bu];
  const Family fv = p.family_of_block[bv];
  if (fu == fv && (fu == Family::Q2 || fu == Family::Q3)) return false;
  if (fu == Family::Q1 && fv == Family::Q1) {
    // A second rung next to an existing one would merge the two ladders.
    for (int i = 0; i < 2; ++i) {
      SlotId across = link_of(g.neighbour(slot_id(u, i)));
      if (!g.is_paired(across)) continue;
      int w = g.neighbour(across);
      for (int j = 0; j < 2; ++j) {
        if (g.neighbour(slot_id(v, j)) == w) return false;
      }
    }
  }
  return !closes_short_component(g, u, v);
}

bool is_valid_connection_full(const PartialGraph& p, int u, int v) {
  const Pregraph& g = p.graph;
  if (u == v || !g.is_open(link_of(u)) || !g.is_open(link_of(v))) return false;
  if (p.block_of[u] == p.block_of[v]) return false;
  Pregraph h = g;
  Colouring m = p.marking;
  h.connect(link_of(u), link_of(v));
  m.set(h, link_of(u), kLinkColour);
  for (SlotId s = 0; s < h.slot_count(); ++s) {
    if (!h.is_open(s) && m.at(s) == kStepColour) m.set_slot(s, kLinkColour);
  }
  BlockPartitionResult bp = block_partition(h, m);
  if (bp.blocks.size() != p.family_of_block.size()) return false;
  // Blocks are ordered by smallest vertex; map each to the prescribed block.
  for (const Block& b : bp.blocks) {
    const int expected = p.block_of[b.vertices.front()];
    for (int x : b.vertices) {
      if (p.block_of[x] != expected) return false;
    }
    if (static_cast<int>(b.kind) != static_cast<int>(p.family_of_block[expected])) return false;
  }
  return !closes_short_component(g, u, v);
}

bool is_canonical_extension(const AutInfo& aut, std::span<const std::pair<int, int>> added) {
  if (added.empty()) return false;
  const auto& lab = aut.canonical_labelling;
  auto norm = [](std::pair<int, int> e) {
    return std::make_pair(std::min(e.first, e.second), std::max(e.first, e.second));
  };
  auto key = [&](std::pair<int, int> e) {
    return norm({lab[e.first], lab[e.second]});
  };
  std::pair<int, int> best = added.front();
  for (auto e : added) {
    if (key(e) < key(best)) best = e;
  }
  const auto last = norm(added.back());
  if (norm(best) == last) return true;
  std::vector<std::pair<int, int>> orbit{norm(best)};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& gen : aut.generators) {
      auto img = norm({gen[orbit[head].first], gen[orbit[head].second]});
      if (img == last) return true;
      if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(img);
    }
  }
  return false;
}

std::int64_t complete_all_ways(const PartialGraph& p, const MarkedSink& sink) {
  GeneratorStats stats;
  GeneratorOptions opts;
  Engine(p, sink, opts, stats).run_complete();
  return stats.graphs;
}

GeneratorStats generate_for_list(const BlockList& list, const MarkedSink& sink, const GeneratorOptions& opts) {
  GeneratorStats stats;
  stats.lists = 1;
  Engine(PartialGraph::from_list(list), sink, opts, stats).run();
  stats.per_list.push_back(stats.graphs);
  return stats;
}

GeneratorStats generate_marked(int n, const MarkedSink& sink, const GeneratorOptions& opts) {
  GeneratorStats total;
  enumerate_lists(n, [&](const BlockList& list) { total.merge(generate_for_list(list, sink, opts)); });
  return total;
}

const char* to_string(MultiFactorFamily f) {
  switch (f) {
    case MultiFactorFamily::BarbedPath:
      return "barbed-path";
    case MultiFactorFamily::DoubleClosedLadder:
      return "double-closed-ladder";
    case MultiFactorFamily::DoubleOpenLadder:
      return "double-open-ladder";
    case MultiFactorFamily::OpenClosedLadder:
      return "open-closed-ladder";
  }
  return "?";
}

std::optional<MultiFactorFamily> detect_multifactor_family(const Pregraph& g) {
  const int n = g.order();
  if (n % 2 != 0) return std::nullopt;
  const auto& ms = models(n);
  const int semis = semi_total(g);
  std::optional<CanonicalForm> form;
  for (const auto& model : ms) {
    if (model.semis != semis) continue;
    if (!form) form = canonical_form(g);
    if (*form == model.form) return model.family;
  }
  return std::nullopt;
}

bool is_representative_marking(const Pregraph& g, const Colouring& marking) {
  auto family = detect_multifactor_family(g);
  if (!family) return true;
  switch (*family) {
    case MultiFactorFamily::BarbedPath:
      // Both ends carry a marked q4.
      for (int v = 0; v < g.order(); ++v) {
        if (g.semi_count(v) != 2) continue;
        for (int i = 0; i < kSlotsPerVertex; ++i) {
          SlotId s = slot_id(v, i);
          if (g.is_semi(s) && marking.at(s) != kFactorColour) return false;
        }
      }
      return true;
    case MultiFactorFamily::OpenClosedLadder:
    case MultiFactorFamily::DoubleClosedLadder:
      // Every end digon is a marked q2.
      for (SlotId s = 0; s < g.slot_count(); ++s) {
        if (!g.is_paired(s) || g.is_loop(s)) continue;
        int a = slot_vertex(s);
        int b = g.neighbour(s);
        int parallel = 0;
        for (int i = 0; i < kSlotsPerVertex; ++i) parallel += g.is_paired(slot_id(a, i)) && g.neighbour(slot_id(a, i)) == b;
        if (parallel >= 2 && marking.at(s) != kFactorColour) return false;
      }
      return true;
    case MultiFactorFamily::DoubleOpenLadder:
      // The marking made of 4-cycles only: every semi-edge has the link colour.
      for (SlotId s = 0; s < g.slot_count(); ++s) {
        if (g.is_semi(s) && marking.at(s) != kLinkColour) return false;
      }
      return true;
  }
  return true;
}

GeneratorStats generate_markable(int n, const MarkedSink& sink, const GeneratorOptions& opts) {
  std::int64_t kept = 0;
  GeneratorStats stats = generate_marked(
      n,
      [&](const Pregraph& g, const Colouring& m) {
        if (!is_representative_marking(g, m)) return;
        ++kept;
        sink(g, m);
      },
      opts);
  stats.graphs = kept;
  return stats;
}

}  // namespace ddgen
