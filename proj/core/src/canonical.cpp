#include "ddgen/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace ddgen {

namespace {

constexpr std::uint32_t kColourCount = 3;

std::uint32_t vertex_key(const Pregraph& g, const Colouring& c, int v) {
  std::uint32_t open = 0;
  std::uint32_t semis[kColourCount] = {0, 0, 0};
  std::uint32_t loops[kColourCount] = {0, 0, 0};
  for (int i = 0; i < kSlotsPerVertex; ++i) {
    SlotId s = slot_id(v, i);
    if (g.is_open(s)) ++open;
    else if (g.is_semi(s)) ++semis[c.at(s)];
    else if (g.is_loop(s)) ++loops[c.at(s)];  // counted at both ends
  }
  std::uint32_t key = open;
  for (std::uint32_t k = 0; k < kColourCount; ++k) key |= semis[k] << (2 + 2 * k);
  for (std::uint32_t k = 0; k < kColourCount; ++k) key |= loops[k] << (8 + 2 * k);
  return key;
}

class Search {
 public:
  explicit Search(const ColouredGraph& g) : g_(g), n_(g.n) {
    offset_.resize(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + static_cast<int>(g.adj[v].size());
    codes_.resize(offset_[n_]);
    order_.resize(n_);
    scratch_.resize(n_);
  }

  Canonical run() {
    std::vector<int> cells(n_);
    std::vector<int> idx(n_);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return g_.key[a] < g_.key[b]; });
    for (int i = 0; i < n_; ++i) {
      cells[idx[i]] = (i > 0 && g_.key[idx[i]] == g_.key[idx[i - 1]]) ? cells[idx[i - 1]] : i;
    }
    if (n_ > 0) explore(cells);

    Canonical out;
    out.form = CanonicalForm(best_cert_);
    out.aut.generators = generators_;
    out.aut.vertex_orbits = orbits_of(generators_, n_);
    out.aut.canonical_labelling = best_lab_;
    return out;
  }

 private:
  /// Refines to an equitable ordered partition. Cells are identified by
  /// their start position. Returns an invariant of the result.
  std::uint64_t refine(std::vector<int>& cells) {
    int count = distinct(cells);
    std::uint64_t hash = 0;
    for (;;) {
      for (int v = 0; v < n_; ++v) {
        auto first = codes_.begin() + offset_[v];
        int k = 0;
        for (auto [w, col] : g_.adj[v]) first[k++] = cells[w] * 4 + col;
        std::sort(first, first + k);
      }
      std::iota(order_.begin(), order_.end(), 0);
      auto less = [&](int a, int b) {
        if (cells[a] != cells[b]) return cells[a] < cells[b];
        return std::lexicographical_compare(codes_.begin() + offset_[a], codes_.begin() + offset_[a + 1],
                                            codes_.begin() + offset_[b], codes_.begin() + offset_[b + 1]);
      };
      std::sort(order_.begin(), order_.end(), less);
      hash = 1469598103934665603ULL;
      int next_count = 0;
      for (int i = 0; i < n_; ++i) {
        int v = order_[i];
        bool same = i > 0 && !less(order_[i - 1], v);
        scratch_[v] = same ? scratch_[order_[i - 1]] : i;
        next_count += !same;
        if (!same) {
          hash = (hash ^ static_cast<std::uint64_t>(i)) * 1099511628211ULL;
          for (int p = offset_[v]; p < offset_[v + 1]; ++p) {
            hash = (hash ^ static_cast<std::uint64_t>(codes_[p])) * 1099511628211ULL;
          }
        }
      }
      for (int v = 0; v < n_; ++v) cells[v] = scratch_[v];
      if (next_count == count) break;
      count = next_count;
    }
    return hash;
  }

  static int distinct(const std::vector<int>& cells) {
    std::vector<char> seen(cells.size(), 0);
    int c = 0;
    for (int x : cells) {
      if (!seen[x]) {
        seen[x] = 1;
        ++c;
      }
    }
    return c;
  }

  std::vector<std::uint32_t> certificate(const std::vector<int>& lab) const {
    std::vector<int> at(n_);
    for (int v = 0; v < n_; ++v) at[lab[v]] = v;
    std::vector<std::uint32_t> words;
    words.reserve(2 + static_cast<std::size_t>(n_) * 5);
    words.push_back(static_cast<std::uint32_t>(n_));
    std::vector<std::uint32_t> nb;
    for (int p = 0; p < n_; ++p) {
      int v = at[p];
      words.push_back(g_.key[v]);
      nb.clear();
      for (auto [w, col] : g_.adj[v]) nb.push_back(static_cast<std::uint32_t>(lab[w]) * 4 + col);
      std::sort(nb.begin(), nb.end());
      words.push_back(static_cast<std::uint32_t>(nb.size()));
      words.insert(words.end(), nb.begin(), nb.end());
    }
    return words;
  }

  /// Returns the depth to jump back to, or -1 to continue normally.
  int explore(std::vector<int>& cells) {
    const int depth = static_cast<int>(path_.size());
    invariants_.push_back(refine(cells));
    struct Pop {
      std::vector<std::uint64_t>& v;
      ~Pop() { v.pop_back(); }
    } pop{invariants_};

    bool eq_first = false;
    if (have_first_) {
      eq_first = std::equal(invariants_.begin(), invariants_.end(), first_inv_.begin(),
                            first_inv_.begin() + std::min(first_inv_.size(), invariants_.size())) &&
                 invariants_.size() <= first_inv_.size();
      int cmp = compare_prefix(invariants_, best_inv_);
      if (!eq_first && cmp > 0) return -1;
    }

    // Target cell: the non-singleton cell with the smallest start.
    std::vector<int> size(n_, 0);
    for (int v = 0; v < n_; ++v) ++size[cells[v]];
    int target = -1;
    for (int s = 0; s < n_; ++s) {
      if (size[s] > 1) {
        target = s;
        break;
      }
    }
    if (target < 0) return leaf(cells, eq_first);

    std::vector<int> members;
    for (int v = 0; v < n_; ++v) {
      if (cells[v] == target) members.push_back(v);
    }
    std::vector<int> explored;
    for (int w : members) {
      if (!explored.empty() && equivalent_to_explored(w, explored)) continue;
      explored.push_back(w);
      std::vector<int> child = cells;
      for (int v : members) {
        if (v != w) child[v] = target + 1;
      }
      path_.push_back(w);
      int r = explore(child);
      path_.pop_back();
      if (r >= 0 && r < depth) return r;
    }
    return -1;
  }

  static int compare_prefix(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  bool equivalent_to_explored(int w, const std::vector<int>& explored) {
    // Orbits of the generators that fix the current path pointwise.
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gen : generators_) {
      bool fixes = std::all_of(path_.begin(), path_.end(), [&](int p) { return gen[p] == p; });
      if (!fixes) continue;
      any = true;
      for (int v = 0; v < n_; ++v) {
        int a = find(v);
        int b = find(gen[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    if (!any) return false;
    int rw = find(w);
    return std::any_of(explored.begin(), explored.end(), [&](int x) { return find(x) == rw; });
  }

  void add_generator(const std::vector<int>& from_lab, const std::vector<int>& to_lab) {
    // Both labellings give the same labelled graph; map through positions.
    std::vector<int> at(n_);
    for (int v = 0; v < n_; ++v) at[to_lab[v]] = v;
    Permutation gen(n_);
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gen[v] = at[from_lab[v]];
      identity &= gen[v] == v;
    }
    if (!identity) generators_.push_back(std::move(gen));
  }

  int leaf(const std::vector<int>& lab, bool eq_first) {
    auto cert = certificate(lab);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = lab;
      first_cert_ = best_cert_ = cert;
      first_inv_ = best_inv_ = invariants_;
      first_path_ = path_;
      return -1;
    }
    if (eq_first && cert == first_cert_) {
      add_generator(lab, first_lab_);
      std::size_t k = 0;
      while (k < path_.size() && k < first_path_.size() && path_[k] == first_path_[k]) ++k;
      return static_cast<int>(k);
    }
    int cmp = compare_prefix(invariants_, best_inv_);
    if (cmp == 0 && invariants_.size() != best_inv_.size()) cmp = invariants_.size() < best_inv_.size() ? -1 : 1;
    if (cmp == 0) cmp = cert < best_cert_ ? -1 : (cert == best_cert_ ? 0 : 1);
    if (cmp == 0) {
      add_generator(lab, best_lab_);
    } else if (cmp < 0) {
      best_lab_ = lab;
      best_cert_ = std::move(cert);
      best_inv_ = invariants_;
    }
    return -1;
  }

  const ColouredGraph& g_;
  const int n_;
  std::vector<int> offset_;
  std::vector<int> codes_;
  std::vector<int> order_;
  std::vector<int> scratch_;

  std::vector<int> path_;
  std::vector<std::uint64_t> invariants_;
  bool have_first_ = false;
  std::vector<int> first_lab_, best_lab_, first_path_;
  std::vector<std::uint32_t> first_cert_, best_cert_;
  std::vector<std::uint64_t> first_inv_, best_inv_;
  std::vector<Permutation> generators_;
};

}  // namespace

std::string CanonicalForm::bytes() const {
  std::string out;
  out.reserve(words_.size() * 4);
  for (std::uint32_t w : words_) {
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((w >> (8 * b)) & 0xFF));
  }
  return out;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint32_t w : f.words()) h = (h ^ w) * 1099511628211ULL;
  return static_cast<std::size_t>(h);
}

ColouredGraph to_coloured_graph(const Pregraph& g, const Colouring& c, std::span<const std::uint32_t> extra) {
  ColouredGraph out;
  out.n = g.order();
  out.key.resize(out.n);
  out.adj.resize(out.n);
  for (int v = 0; v < out.n; ++v) {
    out.key[v] = vertex_key(g, c, v) | (extra.empty() ? 0u : extra[v] << 16);
    for (int i = 0; i < kSlotsPerVertex; ++i) {
      SlotId s = slot_id(v, i);
      if (g.is_paired(s) && !g.is_loop(s)) out.adj[v].emplace_back(g.neighbour(s), c.at(s));
    }
  }
  return out;
}

Canonical canonicalize(const ColouredGraph& g) { return Search(g).run(); }

Canonical canonicalize(const Pregraph& g, const Colouring& c) { return canonicalize(to_coloured_graph(g, c)); }

CanonicalForm canonical_form(const Pregraph& g, const Colouring& c) { return canonicalize(g, c).form; }

AutInfo automorphisms(const Pregraph& g, const Colouring& c) { return canonicalize(g, c).aut; }

bool is_automorphism(const ColouredGraph& g, const Permutation& perm) {
  if (static_cast<int>(perm.size()) != g.n) return false;
  std::vector<char> hit(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    if (perm[v] < 0 || perm[v] >= g.n || hit[perm[v]]) return false;
    hit[perm[v]] = 1;
  }
  for (int v = 0; v < g.n; ++v) {
    int w = perm[v];
    if (g.key[v] != g.key[w]) return false;
    std::vector<std::pair<int, int>> mapped;
    for (auto [x, col] : g.adj[v]) mapped.emplace_back(perm[x], col);
    auto target = g.adj[w];
    std::sort(mapped.begin(), mapped.end());
    std::sort(target.begin(), target.end());
    if (mapped != target) return false;
  }
  return true;
}

std::vector<int> orbits_of(std::span<const Permutation> generators, int n) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gen : generators) {
    for (int v = 0; v < n; ++v) {
      int a = find(v);
      int b = find(gen[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) out[v] = find(v);
  return out;
}

EncodedGraph encode(const Pregraph& g, const Colouring& c) {
  EncodedGraph e;
  e.original = g.order();
  e.node_colour.assign(e.original, EncodedGraph::kOriginal);
  auto aux = [&](std::uint32_t colour) {
    e.node_colour.push_back(colour);
    return static_cast<int>(e.node_colour.size()) - 1;
  };
  for (SlotId s = 0; s < g.slot_count(); ++s) {
    int v = slot_vertex(s);
    if (g.is_open(s)) {
      e.edges.emplace_back(v, aux(EncodedGraph::kOpenSlot));
    } else if (g.is_semi(s)) {
      e.edges.emplace_back(v, aux(EncodedGraph::kSemiBase + c.at(s)));
    } else if (s < g.mate(s)) {
      if (g.is_loop(s)) {
        e.edges.emplace_back(v, aux(EncodedGraph::kLoopBase + c.at(s)));
      } else {
        int x = aux(EncodedGraph::kEdgeBase + c.at(s));
        e.edges.emplace_back(v, x);
        e.edges.emplace_back(g.neighbour(s), x);
      }
    }
  }
  return e;
}

ColouredGraph to_coloured_graph(const EncodedGraph& e) {
  ColouredGraph out;
  out.n = static_cast<int>(e.node_colour.size());
  out.key = e.node_colour;
  out.adj.resize(out.n);
  for (auto [a, b] : e.edges) {
    out.adj[a].emplace_back(b, 0);
    out.adj[b].emplace_back(a, 0);
  }
  return out;
}

std::vector<PairOrbit> pair_orbits(const AutInfo& aut, std::span<const int> deficient, std::span<const int> orbit) {
  std::vector<char> in_orbit(aut.canonical_labelling.size(), 0);
  for (int v : orbit) in_orbit[v] = 1;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < deficient.size(); ++i) {
    for (std::size_t j = i + 1; j < deficient.size(); ++j) {
      int x = std::min(deficient[i], deficient[j]);
      int y = std::max(deficient[i], deficient[j]);
      if (in_orbit[x] || in_orbit[y]) pairs.emplace_back(x, y);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  const int m = static_cast<int>(pairs.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto index = [&](int a, int b) {
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto it = std::lower_bound(pairs.begin(), pairs.end(), key);
    return static_cast<int>(it - pairs.begin());
  };
  for (const auto& gen : aut.generators) {
    for (int i = 0; i < m; ++i) {
      int j = index(gen[pairs[i].first], gen[pairs[i].second]);
      int a = find(i);
      int b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  const auto& lab = aut.canonical_labelling;
  auto label_key = [&](const std::pair<int, int>& p) {
    int a = lab[p.first];
    int b = lab[p.second];
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  std::vector<int> slot_of(m, -1);
  std::vector<PairOrbit> out;
  for (int i = 0; i < m; ++i) {
    int r = find(i);
    if (slot_of[r] < 0) {
      slot_of[r] = static_cast<int>(out.size());
      out.push_back({pairs[i], {}});
    }
    PairOrbit& o = out[slot_of[r]];
    o.members.push_back(pairs[i]);
    if (label_key(pairs[i]) < label_key(o.representative)) o.representative = pairs[i];
  }
  return out;
}

bool acts_trivially(const AutInfo& aut, std::span<const int> deficient) {
  for (const auto& gen : aut.generators) {
    for (int v : deficient) {
      if (gen[v] != v) return false;
    }
  }
  return true;
}

Permutation compose(const Permutation& first, const Permutation& second) {
  Permutation out(first.size());
  for (std::size_t v = 0; v < first.size(); ++v) out[v] = second[first[v]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) out[p[v]] = static_cast<int>(v);
  return out;
}

}  // namespace ddgen
