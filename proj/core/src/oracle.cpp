#include "ddgen/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "ddgen/ddcolour.hpp"
#include "ddgen/partition.hpp"

namespace ddgen::oracle {

namespace {

/// True if some component without open slots misses vertices.
bool has_short_closed_component(const Pregraph& g) {
  for (const auto& comp : components(g)) {
    if (static_cast<int>(comp.size()) == g.order()) continue;
    bool closed = std::none_of(comp.begin(), comp.end(), [&](int v) { return g.open_slots(v) > 0; });
    if (closed) return true;
  }
  return false;
}

constexpr std::array<std::array<int, 3>, 6> kPerms{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

SlotId first_open(const Pregraph& g, int v, SlotId after = -1) {
  for (int i = 0; i < kSlotsPerVertex; ++i) {
    SlotId s = slot_id(v, i);
    if (s > after && g.is_open(s)) return s;
  }
  return -1;
}

}  // namespace

std::vector<Pregraph> all_cubic_pregraphs(int n) {
  if (n < 1 || n > kMaxOrder) throw OracleError("oracle order must be in 1.." + std::to_string(kMaxOrder));
  std::map<CanonicalForm, Pregraph> level{{canonical_form(Pregraph(n)), Pregraph(n)}};
  std::vector<Pregraph> done;
  while (!level.empty()) {
    std::map<CanonicalForm, Pregraph> next;
    auto offer = [&](const Pregraph& g) {
      if (has_short_closed_component(g)) return;
      if (g.is_complete()) {
        if (is_connected(g)) next.emplace(canonical_form(g), g);
        return;
      }
      next.emplace(canonical_form(g), g);
    };
    for (auto& [form, g] : level) {
      if (g.is_complete()) {
        done.push_back(g);
        continue;
      }
      int v = 0;
      while (g.open_slots(v) == 0) ++v;
      SlotId s = first_open(g, v);
      {
        Pregraph h = g;
        h.set_semi(s);
        offer(h);
      }
      if (SlotId t = first_open(g, v, s); t >= 0) {
        Pregraph h = g;
        h.connect(s, t);
        offer(h);
      }
      for (int w = 0; w < n; ++w) {
        if (w == v || g.open_slots(w) == 0) continue;
        Pregraph h = g;
        h.connect(s, first_open(g, w));
        offer(h);
      }
    }
    level = std::move(next);
  }
  return done;
}

std::vector<Colouring> all_cq_markings(const Pregraph& g) {
  const int n = g.order();
  std::vector<int> choice(n, -1);  // slot index carrying colour 1
  std::vector<Colouring> out;
  auto chosen = [&](SlotId s) { return choice[slot_vertex(s)] == slot_index(s); };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      Colouring m(n);
      for (SlotId s = 0; s < g.slot_count(); ++s) m.set_slot(s, chosen(s) ? 1 : 0);
      try {
        quotient_components(g, m);
      } catch (const MarkingError&) {
        return;
      }
      out.push_back(std::move(m));
      return;
    }
    for (int i = 0; i < kSlotsPerVertex; ++i) {
      choice[v] = i;
      bool ok = true;
      for (int j = 0; j < kSlotsPerVertex && ok; ++j) {
        SlotId s = slot_id(v, j);
        if (!g.is_paired(s)) continue;
        SlotId t = g.mate(s);
        if (slot_vertex(t) > v) continue;
        ok = chosen(s) == chosen(t);
      }
      if (ok) self(self, v + 1);
    }
    choice[v] = -1;
  };
  rec(rec, 0);
  return out;
}

bool has_cq_factor(const Pregraph& g) { return !all_cq_markings(g).empty(); }

std::vector<Colouring> all_cq_factors_up_to_iso(const Pregraph& g) {
  std::map<CanonicalForm, Colouring> classes;
  for (auto& m : all_cq_markings(g)) classes.emplace(canonical_form(g, m), std::move(m));
  std::vector<Colouring> out;
  for (auto& [form, m] : classes) out.push_back(std::move(m));
  return out;
}

bool is_3_edge_colourable(const Pregraph& g) {
  const int n = g.order();
  std::vector<int> colour(g.slot_count(), -1);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (const auto& perm : kPerms) {
      bool ok = true;
      for (int i = 0; i < kSlotsPerVertex && ok; ++i) {
        SlotId s = slot_id(v, i);
        if (!g.is_paired(s)) continue;
        SlotId t = g.mate(s);
        if (slot_vertex(t) == v) ok = false;  // a loop puts one colour twice at v
        else if (slot_vertex(t) < v) ok = colour[t] == perm[i];
      }
      if (!ok) continue;
      for (int i = 0; i < kSlotsPerVertex; ++i) colour[slot_id(v, i)] = perm[i];
      if (self(self, v + 1)) return true;
    }
    for (int i = 0; i < kSlotsPerVertex; ++i) colour[slot_id(v, i)] = -1;
    return false;
  };
  return rec(rec, 0);
}

namespace {

std::map<CanonicalForm, Colouring> brute_dd(const Pregraph& g, const Colouring& marking) {
  std::vector<SlotId> elements;
  for (SlotId s = 0; s < g.slot_count(); ++s) {
    if (marking.at(s) != 0) continue;
    if (g.is_semi(s) || (g.is_paired(s) && s < g.mate(s))) elements.push_back(s);
  }
  std::map<CanonicalForm, Colouring> classes;
  const std::uint64_t total = std::uint64_t{1} << elements.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Colouring c(g.order());
    for (SlotId s = 0; s < g.slot_count(); ++s) c.set_slot(s, marking.at(s));
    for (std::size_t i = 0; i < elements.size(); ++i) c.set(g, elements[i], (mask >> i) & 1 ? 2 : 0);
    if (verify_dd(g, c)) classes.emplace(canonical_form(g, c), std::move(c));
  }
  return classes;
}

}  // namespace

std::set<CanonicalForm> brute_dd_forms(const Pregraph& g, const Colouring& marking) {
  std::set<CanonicalForm> forms;
  for (auto& [form, c] : brute_dd(g, marking)) forms.insert(form);
  return forms;
}

std::vector<Colouring> brute_dd_colourings(const Pregraph& g, const Colouring& marking) {
  std::vector<Colouring> out;
  for (auto& [form, c] : brute_dd(g, marking)) out.push_back(std::move(c));
  return out;
}

std::int64_t brute_dd_classes(const Pregraph& g, const Colouring& marking) {
  return static_cast<std::int64_t>(brute_dd_forms(g, marking).size());
}

}  // namespace ddgen::oracle
