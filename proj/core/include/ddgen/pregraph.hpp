#pragma once

/// \file pregraph.hpp
/// Cubic pregraphs stored as a pairing of half-edge slots.
///
/// Every vertex owns exactly three slots. A slot is either paired with
/// another slot (an edge; a loop when both slots belong to the same vertex),
/// a semi-edge, or still open (an unassigned connector in a partial graph).
/// Parallel edges and semi-edges are therefore first-class and each edge has
/// a stable identity: the pair of slots it joins.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ddgen {

using SlotId = int;
using Permutation = std::vector<int>;

inline constexpr int kSlotsPerVertex = 3;
inline constexpr SlotId kSemi = -1;
inline constexpr SlotId kOpen = -2;

constexpr SlotId slot_id(int vertex, int index) { return vertex * kSlotsPerVertex + index; }
constexpr int slot_vertex(SlotId s) { return s / kSlotsPerVertex; }
constexpr int slot_index(SlotId s) { return s % kSlotsPerVertex; }

struct Slot {
  int vertex = 0;
  int index = 0;

  SlotId id() const { return slot_id(vertex, index); }
  auto operator<=>(const Slot&) const = default;
};

struct SlotPair {
  Slot a;
  Slot b;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Pregraph {
 public:
  Pregraph() = default;
  /// n vertices, every slot open.
  explicit Pregraph(int n);

  /// Throws GraphError on out-of-range or repeated slots.
  static Pregraph build(int n, std::span<const SlotPair> edges, std::span<const Slot> semis);

  int order() const { return n_; }
  int slot_count() const { return n_ * kSlotsPerVertex; }

  SlotId mate(SlotId s) const { return mate_[s]; }
  bool is_semi(SlotId s) const { return mate_[s] == kSemi; }
  bool is_open(SlotId s) const { return mate_[s] == kOpen; }
  bool is_paired(SlotId s) const { return mate_[s] >= 0; }
  bool is_loop(SlotId s) const { return is_paired(s) && slot_vertex(mate_[s]) == slot_vertex(s); }
  /// Vertex at the other end of a paired slot.
  int neighbour(SlotId s) const { return slot_vertex(mate_[s]); }

  void connect(SlotId a, SlotId b);
  void set_semi(SlotId s);
  /// Reopens s, and its partner if it was paired.
  void reopen(SlotId s);

  int open_slots(int v) const;
  int semi_count(int v) const;
  bool is_complete() const;

  bool operator==(const Pregraph&) const = default;

 private:
  void check_slot(SlotId s) const;

  int n_ = 0;
  std::vector<SlotId> mate_;
};

/// Per-slot edge colour. Both ends of an edge carry the same colour.
/// An empty colouring means "uncoloured": every slot reads as colour 0.
class Colouring {
 public:
  static constexpr std::uint8_t kNone = 0xFF;

  Colouring() = default;
  explicit Colouring(int n) : colour_(static_cast<std::size_t>(n) * kSlotsPerVertex, kNone) {}

  bool empty() const { return colour_.empty(); }
  std::uint8_t at(SlotId s) const { return colour_.empty() ? 0 : colour_[s]; }
  void set_slot(SlotId s, std::uint8_t c) { colour_[s] = c; }
  /// Colours s and, when paired, its partner.
  void set(const Pregraph& g, SlotId s, std::uint8_t c);

  std::span<const std::uint8_t> raw() const { return colour_; }
  bool operator==(const Colouring&) const = default;

 private:
  std::vector<std::uint8_t> colour_;
};

/// Breadth-first connectivity over paired edges; semi-edges and open slots
/// do not connect anything.
bool is_connected(const Pregraph& g);

/// Connected components (by paired edges), each sorted, ordered by minimum vertex.
std::vector<std::vector<int>> components(const Pregraph& g);

/// Applies a vertex permutation (old vertex -> new vertex), keeping slot indices.
Pregraph relabel(const Pregraph& g, const Permutation& perm);
Colouring relabel(const Pregraph& g, const Colouring& c, const Permutation& perm);

/// True when both graphs show the same neighbour and colour at every slot.
/// Parallel edges of one colour are interchangeable, so this is the natural
/// notion of equality for the text format.
bool same_structure(const Pregraph& a, const Colouring& ca, const Pregraph& b, const Colouring& cb);

/// Disjoint union; vertices of b are shifted by a.order().
Pregraph disjoint_union(const Pregraph& a, const Pregraph& b);
Colouring disjoint_union(const Colouring& a, int order_a, const Colouring& b, int order_b);

}  // namespace ddgen
