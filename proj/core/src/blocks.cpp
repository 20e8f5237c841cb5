#include "ddgen/blocks.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>
#include <stdexcept>

namespace ddgen {

namespace {

int boundary_count(Family f) {
  switch (f) {
    case Family::Q1:
      return 4;
    case Family::Q2:
    case Family::Q3:
      return 2;
    case Family::Q4:
      return 1;
  }
  return 0;
}

std::vector<SlotId> boundary_slots(Family f, int k) {
  switch (f) {
    case Family::Q1:
      return {slot_id(0, 2), slot_id(2, 2), slot_id(4 * (k - 1) + 1, 2), slot_id(4 * (k - 1) + 3, 2)};
    case Family::Q2:
    case Family::Q3:
      return {slot_id(0, 2), slot_id(2 * k - 1, 2)};
    case Family::Q4:
      return {slot_id(0, 2)};
  }
  return {};
}

void factor_edge(Pregraph& g, Colouring& m, int u, int i, int v, int j) {
  g.connect(slot_id(u, i), slot_id(v, j));
  m.set(g, slot_id(u, i), kFactorColour);
}

void link_edge(Pregraph& g, Colouring& m, int u, int v) {
  g.connect(slot_id(u, 2), slot_id(v, 2));
  m.set(g, slot_id(u, 2), kLinkColour);
}

void semi(Pregraph& g, Colouring& m, SlotId s, std::uint8_t colour) {
  g.set_semi(s);
  m.set_slot(s, colour);
}

/// All end codes for a family, before filtering and deduplication.
std::vector<std::string> candidate_ends(Family f) {
  switch (f) {
    case Family::Q4:
      return {"c", "s"};
    case Family::Q2:
    case Family::Q3:
      return {"10", "cc", "cs", "sc", "ss"};
    case Family::Q1:
      break;
  }
  std::vector<std::string> out;
  // Every partial matching of the four boundary slots; unmatched slots are
  // connectors or semi-edges.
  std::vector<std::vector<std::pair<int, int>>> matchings{{}};
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) matchings.push_back({{a, b}});
  }
  matchings.push_back({{0, 1}, {2, 3}});
  matchings.push_back({{0, 2}, {1, 3}});
  matchings.push_back({{0, 3}, {1, 2}});
  for (const auto& mt : matchings) {
    std::string base(4, '?');
    for (auto [a, b] : mt) {
      base[a] = static_cast<char>('0' + b);
      base[b] = static_cast<char>('0' + a);
    }
    std::vector<int> free;
    for (int i = 0; i < 4; ++i) {
      if (base[i] == '?') free.push_back(i);
    }
    for (int mask = 0; mask < (1 << free.size()); ++mask) {
      std::string code = base;
      for (std::size_t j = 0; j < free.size(); ++j) code[free[j]] = (mask >> j) & 1 ? 's' : 'c';
      out.push_back(code);
    }
  }
  return out;
}

}  // namespace

int BlockDescriptor::order() const {
  switch (family) {
    case Family::Q1:
      return 4 * units;
    case Family::Q2:
    case Family::Q3:
      return 2 * units;
    case Family::Q4:
      return 1;
  }
  return 0;
}

int BlockDescriptor::connector_count() const {
  return static_cast<int>(std::count(ends.begin(), ends.end(), 'c'));
}

std::string BlockDescriptor::code() const {
  return "Q" + std::to_string(static_cast<int>(family)) + ":k=" + std::to_string(units) + ":e=" + ends;
}

namespace {

// Each end is 'c', 's' or the index of its partner end, and partners agree.
void check_ends(const BlockDescriptor& d) {
  for (std::size_t i = 0; i < d.ends.size(); ++i) {
    char e = d.ends[i];
    if (e == 'c' || e == 's') continue;
    std::size_t j = static_cast<std::size_t>(e - '0');
    if (e < '0' || j >= d.ends.size() || j == i || d.ends[j] != static_cast<char>('0' + i)) {
      throw std::invalid_argument("bad end pairing: " + d.code());
    }
  }
}

}  // namespace

BlockDescriptor BlockDescriptor::parse(const std::string& code) {
  BlockDescriptor d;
  int f = 0;
  int k = 0;
  char ends[8] = {0};
  if (std::sscanf(code.c_str(), "Q%d:k=%d:e=%7s", &f, &k, ends) != 3 || f < 1 || f > 4 || k < 1) {
    throw std::invalid_argument("bad block descriptor: " + code);
  }
  d.family = static_cast<Family>(f);
  d.units = k;
  d.ends = ends;
  if (static_cast<int>(d.ends.size()) != boundary_count(d.family)) {
    throw std::invalid_argument("bad end code length: " + code);
  }
  check_ends(d);
  return d;
}

RealizedBlock realize_fragment(const BlockDescriptor& d) {
  const int k = d.units;
  const int n = d.order();
  RealizedBlock r{Pregraph(n), Colouring(n), {}, {}};
  Pregraph& g = r.graph;
  Colouring& m = r.marking;
  switch (d.family) {
    case Family::Q1:
      for (int i = 0; i < k; ++i) {
        int a = 4 * i, b = a + 1, c = a + 2, e = a + 3;
        factor_edge(g, m, a, 0, b, 0);
        factor_edge(g, m, a, 1, c, 0);
        factor_edge(g, m, b, 1, e, 0);
        factor_edge(g, m, c, 1, e, 1);
        if (i + 1 < k) {
          link_edge(g, m, b, a + 4);
          link_edge(g, m, e, c + 4);
        }
      }
      break;
    case Family::Q2:
    case Family::Q3:
      for (int i = 0; i < k; ++i) {
        int u = 2 * i, v = u + 1;
        factor_edge(g, m, u, 0, v, 0);
        if (d.family == Family::Q2) {
          factor_edge(g, m, u, 1, v, 1);
        } else {
          semi(g, m, slot_id(u, 1), kFactorColour);
          semi(g, m, slot_id(v, 1), kFactorColour);
        }
        if (i + 1 < k) link_edge(g, m, v, v + 1);
      }
      break;
    case Family::Q4:
      semi(g, m, slot_id(0, 0), kFactorColour);
      semi(g, m, slot_id(0, 1), kFactorColour);
      break;
  }
  const auto boundary = boundary_slots(d.family, k);
  if (d.ends.size() != boundary.size()) throw std::invalid_argument("bad end code: " + d.code());
  check_ends(d);
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    SlotId s = boundary[i];
    char e = d.ends[i];
    if (e == 'c') {
      m.set_slot(s, kLinkColour);
      r.connectors.push_back(s);
    } else if (e == 's') {
      semi(g, m, s, kLinkColour);
    } else {
      std::size_t j = static_cast<std::size_t>(e - '0');
      if (i < j) {
        g.connect(s, boundary[j]);
        m.set(g, s, kLinkColour);
      }
    }
  }
  std::sort(r.connectors.begin(), r.connectors.end());
  return r;
}

bool self_partition_ok(const BlockDescriptor& d, const RealizedBlock& r) {
  BlockPartitionResult bp;
  try {
    bp = block_partition(r.graph, r.marking);
  } catch (const MarkingError&) {
    return false;
  }
  if (bp.blocks.size() != 1) return false;
  const Block& b = bp.blocks.front();
  if (static_cast<int>(b.kind) != static_cast<int>(d.family)) return false;
  const int expected_quotients = d.family == Family::Q4 ? 1 : d.units;
  if (static_cast<int>(b.quotients.size()) != expected_quotients) return false;
  auto boundary = b.boundary;
  std::sort(boundary.begin(), boundary.end());
  return boundary == r.connectors;
}

std::vector<BlockDescriptor> enumerate_descriptors(int max_order) {
  std::vector<BlockDescriptor> out;
  for (Family f : {Family::Q1, Family::Q2, Family::Q3, Family::Q4}) {
    for (int k = 1;; ++k) {
      BlockDescriptor probe{f, k, std::string(boundary_count(f), 'c')};
      if (probe.order() > max_order || (f == Family::Q4 && k > 1)) break;
      std::map<CanonicalForm, std::string> seen;
      for (const auto& ends : candidate_ends(f)) {
        BlockDescriptor d{f, k, ends};
        RealizedBlock r = realize_fragment(d);
        if (!self_partition_ok(d, r)) continue;
        auto form = canonical_form(r.graph, r.marking);
        auto it = seen.find(form);
        if (it == seen.end()) seen.emplace(form, ends);
        else it->second = std::min(it->second, ends);
      }
      std::vector<std::string> codes;
      for (const auto& [form, ends] : seen) codes.push_back(ends);
      std::sort(codes.begin(), codes.end());
      for (const auto& ends : codes) out.push_back({f, k, ends});
    }
  }
  return out;
}

namespace {

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

RealizedBlock realize(const BlockDescriptor& d) {
  static std::map<BlockDescriptor, std::vector<Permutation>> cache;
  RealizedBlock r = realize_fragment(d);
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(d);
    if (it != cache.end()) {
      r.aut_generators = it->second;
      return r;
    }
  }
  r.aut_generators = automorphisms(r.graph, r.marking).generators;
  std::lock_guard<std::mutex> lock(cache_mutex());
  cache.emplace(d, r.aut_generators);
  return r;
}

std::shared_ptr<const Catalogue> catalogue(int max_order) {
  static std::map<int, std::shared_ptr<const Catalogue>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(max_order);
    if (it != cache.end()) return it->second;
  }
  auto cat = std::make_shared<Catalogue>();
  cat->descriptors = enumerate_descriptors(max_order);
  for (std::size_t i = 0; i < cat->descriptors.size(); ++i) {
    cat->blocks.push_back(realize(cat->descriptors[i]));
    const auto& b = cat->blocks.back();
    cat->index_of_form.emplace(canonical_form(b.graph, b.marking), static_cast<int>(i));
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache.emplace(max_order, std::move(cat)).first->second;
}

std::optional<BlockDescriptor> identify_block(const Pregraph& g, const Colouring& m, const Block& b) {
  const int k = static_cast<int>(b.vertices.size());
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < k; ++i) local[b.vertices[i]] = i;
  Pregraph frag(k);
  Colouring colours(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < kSlotsPerVertex; ++j) {
      SlotId s = slot_id(b.vertices[i], j);
      SlotId t = slot_id(i, j);
      colours.set_slot(t, g.is_open(s) ? kLinkColour : m.at(s));
      if (g.is_semi(s)) {
        frag.set_semi(t);
      } else if (g.is_paired(s) && s < g.mate(s) && local[g.neighbour(s)] >= 0) {
        frag.connect(t, slot_id(local[g.neighbour(s)], slot_index(g.mate(s))));
      }
    }
  }
  auto cat = catalogue(k);
  auto it = cat->index_of_form.find(canonical_form(frag, colours));
  if (it == cat->index_of_form.end()) return std::nullopt;
  return cat->descriptors[it->second];
}

}  // namespace ddgen
