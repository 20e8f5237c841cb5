#pragma once

/// \file canonical.hpp
/// Canonical forms and automorphism groups of (partial) coloured pregraphs.
///
/// The engine works on a vertex-level view: every vertex carries a key that
/// summarises its semi-edges, loops and open slots by colour, and an
/// adjacency list of (neighbour, edge colour) pairs with multiplicity. Two
/// pregraphs are isomorphic (preserving colours, semi-edges and open slots)
/// iff their vertex-level views are. The search is individualisation and
/// refinement with automorphism pruning.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ddgen/pregraph.hpp"

namespace ddgen {

struct ColouredGraph {
  int n = 0;
  std::vector<std::uint32_t> key;                     // vertex colour
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, edge colour), loops excluded
};

/// Vertex-level view. `extra` (optional, one value per vertex) is folded into
/// the vertex key, which restricts isomorphisms to those preserving it.
ColouredGraph to_coloured_graph(const Pregraph& g, const Colouring& c,
                                std::span<const std::uint32_t> extra = {});

class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::vector<std::uint32_t> words) : words_(std::move(words)) {}

  const std::vector<std::uint32_t>& words() const { return words_; }
  /// Little-endian serialisation of the words.
  std::string bytes() const;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;

 private:
  std::vector<std::uint32_t> words_;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

struct AutInfo {
  std::vector<Permutation> generators;
  /// Orbit id per vertex: the smallest vertex of its orbit.
  std::vector<int> vertex_orbits;
  /// vertex -> position in the canonical labelling.
  std::vector<int> canonical_labelling;
};

struct Canonical {
  CanonicalForm form;
  AutInfo aut;
};

Canonical canonicalize(const ColouredGraph& g);
Canonical canonicalize(const Pregraph& g, const Colouring& c = {});
CanonicalForm canonical_form(const Pregraph& g, const Colouring& c = {});
AutInfo automorphisms(const Pregraph& g, const Colouring& c = {});

bool is_automorphism(const ColouredGraph& g, const Permutation& perm);

/// Orbit ids (smallest member) of the group generated by `generators` on n points.
std::vector<int> orbits_of(std::span<const Permutation> generators, int n);

/// Subdivided simple graph: every edge and loop gets an auxiliary node coloured
/// by its edge colour, every semi-edge and open slot a pendant auxiliary node.
struct EncodedGraph {
  enum NodeColour : std::uint32_t {
    kOriginal = 0,
    kEdgeBase = 1,  // + edge colour
    kSemiBase = 4,  // + semi-edge colour
    kOpenSlot = 7,
    kLoopBase = 8,  // + loop colour
  };
  int original = 0;
  std::vector<std::uint32_t> node_colour;
  std::vector<std::pair<int, int>> edges;
};

EncodedGraph encode(const Pregraph& g, const Colouring& c = {});
ColouredGraph to_coloured_graph(const EncodedGraph& e);

struct PairOrbit {
  std::pair<int, int> representative;
  std::vector<std::pair<int, int>> members;  // each pair (x, y) with x < y
};

/// Orbits of unordered pairs {x, y} of distinct deficient vertices meeting
/// `orbit`, under the group generated by aut.generators. The representative
/// is the member that is smallest by canonical labels.
std::vector<PairOrbit> pair_orbits(const AutInfo& aut, std::span<const int> deficient,
                                   std::span<const int> orbit);

/// True iff every generator fixes every deficient vertex.
bool acts_trivially(const AutInfo& aut, std::span<const int> deficient);

Permutation compose(const Permutation& first, const Permutation& second);  // second after first
Permutation inverse(const Permutation& p);

}  // namespace ddgen
