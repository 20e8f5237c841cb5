#include "ddgen/ddcolour.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ddgen {

namespace {

constexpr std::uint8_t kOtherColour = 2;

std::pair<int, int> edge_vertices(const Pregraph& g, SlotId s) {
  int a = slot_vertex(s);
  int b = g.neighbour(s);
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace

UndeterminedSet undetermined_set(const Pregraph& g, const Colouring& marking) {
  UndeterminedSet u;
  u.quotients = quotient_components(g, marking);
  u.quotient_of_vertex = quotient_index(u.quotients, g.order());
  u.member_of_quotient.assign(u.quotients.size(), -1);
  for (std::size_t q = 0; q < u.quotients.size(); ++q) {
    const auto& qc = u.quotients[q];
    UndeterminedQuotient m{static_cast<int>(q), qc.kind, {}};
    if (qc.kind == QuotientKind::Q1) {
      // elements are sorted by smaller slot; the first edge is the smallest.
      SlotId first = qc.elements[0];
      auto [a, b] = edge_vertices(g, first);
      SlotId opposite = -1;
      for (SlotId e : qc.elements) {
        auto [c, d] = edge_vertices(g, e);
        if (c != a && c != b && d != a && d != b) opposite = e;
      }
      m.elements = {first, opposite};
      for (SlotId e : qc.elements) {
        if (e != first && e != opposite) m.elements.push_back(e);
      }
    } else if (qc.kind == QuotientKind::Q3) {
      for (SlotId e : qc.elements) {
        if (g.is_paired(e)) m.elements.insert(m.elements.begin(), e);
        else m.elements.push_back(e);
      }
    } else {
      continue;
    }
    u.member_of_quotient[q] = static_cast<int>(u.members.size());
    u.members.push_back(std::move(m));
  }
  return u;
}

Colouring vector_to_colouring(const Pregraph& g, const Colouring& marking, const UndeterminedSet& u,
                              ColourVector v) {
  if (u.members.size() < 32 && (v >> u.members.size()) != 0) {
    throw DDError("colour vector has bits beyond |U| = " + std::to_string(u.members.size()));
  }
  Colouring dd(g.order());
  for (SlotId s = 0; s < g.slot_count(); ++s) dd.set_slot(s, marking.at(s));
  auto paint = [&](SlotId s, std::uint8_t c) { dd.set(g, s, c); };
  for (std::size_t q = 0; q < u.quotients.size(); ++q) {
    const auto& qc = u.quotients[q];
    const int member = u.member_of_quotient[q];
    if (member < 0) {
      // q2 and q4: fixed rule, the smaller element gets colour 0.
      paint(qc.elements[0], kFactorColour);
      paint(qc.elements[1], kOtherColour);
      continue;
    }
    const bool bit = (v >> member) & 1U;
    const auto& el = u.members[member].elements;
    const std::uint8_t first = bit ? kOtherColour : kFactorColour;
    const std::uint8_t second = bit ? kFactorColour : kOtherColour;
    if (qc.kind == QuotientKind::Q1) {
      paint(el[0], first);
      paint(el[1], first);
      paint(el[2], second);
      paint(el[3], second);
    } else {
      // q3: the semi-edges take the bit's colour, the middle edge the other.
      paint(el[1], first);
      paint(el[2], first);
      paint(el[0], second);
    }
  }
  return dd;
}

ColourVector colouring_to_vector(const Pregraph& g, const UndeterminedSet& u, const Colouring& dd) {
  (void)g;
  ColourVector v = 0;
  for (std::size_t i = 0; i < u.members.size(); ++i) {
    const auto& m = u.members[i];
    // q1: bit 0 iff the designated matching is coloured 0;
    // q3: bit 0 iff the semi-edges are coloured 0.
    SlotId probe = m.kind == QuotientKind::Q1 ? m.elements[0] : m.elements[1];
    if (dd.at(probe) != kFactorColour) v |= ColourVector{1} << i;
  }
  return v;
}

ColourVector VectorAction::apply(ColourVector v) const {
  ColourVector out = 0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if ((v >> i) & 1U) out |= ColourVector{1} << target[i];
  }
  return out ^ flip;
}

VectorAction vector_action(const Pregraph& g, const UndeterminedSet& u, const Permutation& sigma) {
  VectorAction a;
  a.target.resize(u.members.size());
  for (std::size_t i = 0; i < u.members.size(); ++i) {
    const auto& m = u.members[i];
    const int q = m.quotient;
    const int image_q = u.quotient_of_vertex[sigma[u.quotients[q].vertices.front()]];
    const int j = u.member_of_quotient[image_q];
    if (j < 0 || u.members[j].kind != m.kind) throw DDError("permutation does not preserve the marking");
    a.target[i] = j;
    if (m.kind != QuotientKind::Q1) continue;
    // One edge image decides whether the matchings correspond.
    auto [x, y] = edge_vertices(g, m.elements[0]);
    std::pair<int, int> img{std::min(sigma[x], sigma[y]), std::max(sigma[x], sigma[y])};
    const auto& target_el = u.members[j].elements;
    if (img != edge_vertices(g, target_el[0]) && img != edge_vertices(g, target_el[1])) {
      a.flip |= ColourVector{1} << j;
    }
  }
  return a;
}

ColourVector act(const Pregraph& g, const UndeterminedSet& u, const Permutation& sigma, ColourVector v) {
  return vector_action(g, u, sigma).apply(v);
}

std::int64_t enumerate_dd(const Pregraph& g, const Colouring& marking, const DDSink& sink) {
  const UndeterminedSet u = undetermined_set(g, marking);
  const int size = static_cast<int>(u.members.size());
  if (size > kMaxUndetermined) {
    throw DDError("undetermined set of size " + std::to_string(size) + " exceeds the limit of " +
                  std::to_string(kMaxUndetermined));
  }
  const AutInfo aut = automorphisms(g, marking);
  std::vector<VectorAction> actions;
  for (const auto& gen : aut.generators) actions.push_back(vector_action(g, u, gen));

  const std::uint64_t total = std::uint64_t{1} << size;
  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : actions) {
    for (std::uint64_t v = 0; v < total; ++v) {
      std::uint32_t r1 = find(static_cast<std::uint32_t>(v));
      std::uint32_t r2 = find(a.apply(static_cast<ColourVector>(v)));
      if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
  }
  std::int64_t classes = 0;
  for (std::uint64_t v = 0; v < total; ++v) {
    if (find(static_cast<std::uint32_t>(v)) != v) continue;
    ++classes;
    if (sink) sink(vector_to_colouring(g, marking, u, static_cast<ColourVector>(v)));
  }
  return classes;
}

bool verify_dd(const Pregraph& g, const Colouring& dd) {
  if (!g.is_complete() || dd.empty()) return false;
  Colouring factor(g.order());
  for (int v = 0; v < g.order(); ++v) {
    int seen[3] = {0, 0, 0};
    for (int i = 0; i < kSlotsPerVertex; ++i) {
      SlotId s = slot_id(v, i);
      std::uint8_t c = dd.at(s);
      if (c > 2) return false;
      if (g.is_paired(s) && dd.at(g.mate(s)) != c) return false;
      ++seen[c];
      factor.set_slot(s, c == 1 ? kLinkColour : kFactorColour);
    }
    if (seen[0] != 1 || seen[1] != 1 || seen[2] != 1) return false;
  }
  try {
    quotient_components(g, factor);
  } catch (const MarkingError&) {
    return false;
  }
  return true;
}

}  // namespace ddgen
