#include "ddgen/pregraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace ddgen {

Pregraph::Pregraph(int n) : n_(n), mate_(static_cast<std::size_t>(n) * kSlotsPerVertex, kOpen) {
  if (n < 0) throw GraphError("negative vertex count");
}

void Pregraph::check_slot(SlotId s) const {
  if (s < 0 || s >= slot_count()) throw GraphError("slot out of range: " + std::to_string(s));
}

Pregraph Pregraph::build(int n, std::span<const SlotPair> edges, std::span<const Slot> semis) {
  if (n <= 0) throw GraphError("vertex count must be positive");
  Pregraph g(n);
  auto checked = [&](const Slot& s) {
    if (s.vertex < 0 || s.vertex >= n || s.index < 0 || s.index >= kSlotsPerVertex) {
      throw GraphError("slot (" + std::to_string(s.vertex) + "," + std::to_string(s.index) +
                       ") out of range");
    }
    SlotId id = s.id();
    if (!g.is_open(id)) {
      throw GraphError("slot (" + std::to_string(s.vertex) + "," + std::to_string(s.index) +
                       ") used twice");
    }
    return id;
  };
  for (const auto& e : edges) {
    SlotId a = checked(e.a);
    if (e.a == e.b) throw GraphError("slot paired with itself");
    SlotId b = checked(e.b);
    g.connect(a, b);
  }
  for (const auto& s : semis) g.set_semi(checked(s));
  return g;
}

void Pregraph::connect(SlotId a, SlotId b) {
  check_slot(a);
  check_slot(b);
  if (a == b) throw GraphError("slot paired with itself");
  if (!is_open(a) || !is_open(b)) throw GraphError("connect on a used slot");
  mate_[a] = b;
  mate_[b] = a;
}

void Pregraph::set_semi(SlotId s) {
  check_slot(s);
  if (!is_open(s)) throw GraphError("semi-edge on a used slot");
  mate_[s] = kSemi;
}

void Pregraph::reopen(SlotId s) {
  check_slot(s);
  if (is_paired(s)) mate_[mate_[s]] = kOpen;
  mate_[s] = kOpen;
}

int Pregraph::open_slots(int v) const {
  int c = 0;
  for (int i = 0; i < kSlotsPerVertex; ++i) c += is_open(slot_id(v, i));
  return c;
}

int Pregraph::semi_count(int v) const {
  int c = 0;
  for (int i = 0; i < kSlotsPerVertex; ++i) c += is_semi(slot_id(v, i));
  return c;
}

bool Pregraph::is_complete() const {
  return std::none_of(mate_.begin(), mate_.end(), [](SlotId m) { return m == kOpen; });
}

void Colouring::set(const Pregraph& g, SlotId s, std::uint8_t c) {
  colour_[s] = c;
  if (g.is_paired(s)) colour_[g.mate(s)] = c;
}

std::vector<std::vector<int>> components(const Pregraph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> members{start};
    comp[start] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < members.size(); ++head) {
      int v = members[head];
      for (int i = 0; i < kSlotsPerVertex; ++i) {
        SlotId s = slot_id(v, i);
        if (!g.is_paired(s)) continue;
        int w = g.neighbour(s);
        if (comp[w] < 0) {
          comp[w] = comp[start];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Pregraph& g) { return g.order() > 0 && components(g).size() == 1; }

Pregraph relabel(const Pregraph& g, const Permutation& perm) {
  Pregraph out(g.order());
  for (SlotId s = 0; s < g.slot_count(); ++s) {
    SlotId t = slot_id(perm[slot_vertex(s)], slot_index(s));
    if (g.is_semi(s)) {
      out.set_semi(t);
    } else if (g.is_paired(s) && s < g.mate(s)) {
      SlotId m = g.mate(s);
      out.connect(t, slot_id(perm[slot_vertex(m)], slot_index(m)));
    }
  }
  return out;
}

Colouring relabel(const Pregraph& g, const Colouring& c, const Permutation& perm) {
  if (c.empty()) return c;
  Colouring out(g.order());
  for (SlotId s = 0; s < g.slot_count(); ++s) {
    out.set_slot(slot_id(perm[slot_vertex(s)], slot_index(s)), c.at(s));
  }
  return out;
}

bool same_structure(const Pregraph& a, const Colouring& ca, const Pregraph& b, const Colouring& cb) {
  if (a.order() != b.order()) return false;
  if (ca.empty() != cb.empty()) return false;
  for (SlotId s = 0; s < a.slot_count(); ++s) {
    SlotId ma = a.mate(s);
    SlotId mb = b.mate(s);
    if ((ma < 0 || mb < 0) ? ma != mb : slot_vertex(ma) != slot_vertex(mb)) return false;
    if (!a.is_open(s) && ca.at(s) != cb.at(s)) return false;
  }
  return true;
}

Pregraph disjoint_union(const Pregraph& a, const Pregraph& b) {
  Pregraph out(a.order() + b.order());
  const int shift = a.slot_count();
  auto copy = [&out](const Pregraph& g, int offset) {
    for (SlotId s = 0; s < g.slot_count(); ++s) {
      if (g.is_semi(s)) out.set_semi(s + offset);
      else if (g.is_paired(s) && s < g.mate(s)) out.connect(s + offset, g.mate(s) + offset);
    }
  };
  copy(a, 0);
  copy(b, shift);
  return out;
}

Colouring disjoint_union(const Colouring& a, int order_a, const Colouring& b, int order_b) {
  Colouring out(order_a + order_b);
  for (SlotId s = 0; s < order_a * kSlotsPerVertex; ++s) out.set_slot(s, a.raw().empty() ? 0 : a.raw()[s]);
  for (SlotId s = 0; s < order_b * kSlotsPerVertex; ++s) {
    out.set_slot(s + order_a * kSlotsPerVertex, b.raw().empty() ? 0 : b.raw()[s]);
  }
  return out;
}

}  // namespace ddgen
