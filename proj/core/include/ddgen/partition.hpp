#pragma once

/// \file partition.hpp
/// Decompositions of (partial) marked pregraphs: the colour-0 quotient
/// components, the block partition, and the unmarked ladder partition.

#include <stdexcept>
#include <vector>

#include "ddgen/pregraph.hpp"

namespace ddgen {

/// Marking colours.
inline constexpr std::uint8_t kFactorColour = 0;
inline constexpr std::uint8_t kLinkColour = 1;

/// The four quotients of C4: the 4-cycle, the digon, an edge with a semi-edge
/// at each end, and a vertex with two semi-edges.
enum class QuotientKind : std::uint8_t { Q1 = 1, Q2 = 2, Q3 = 3, Q4 = 4 };

struct QuotientComponent {
  QuotientKind kind;
  /// For q1 the vertices are in cycle order starting at the smallest;
  /// otherwise ascending.
  std::vector<int> vertices;
  /// Colour-0 slots of the component. Each edge appears once, by its smaller
  /// slot; semi-edges appear by their slot. Sorted ascending.
  std::vector<SlotId> elements;
};

class MarkingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Components of the colour-0 subgraph, ordered by smallest vertex.
/// Throws MarkingError when a vertex does not carry exactly two colour-0 ends
/// or a component is not a quotient of C4.
std::vector<QuotientComponent> quotient_components(const Pregraph& g, const Colouring& m);

/// Index into the result of quotient_components for every vertex.
std::vector<int> quotient_index(const std::vector<QuotientComponent>& quotients, int order);

enum class BlockKind : std::uint8_t { Q1Ladder = 1, Q2 = 2, Q3 = 3, Q4 = 4 };

struct Block {
  BlockKind kind;
  std::vector<int> vertices;        // ascending
  std::vector<int> quotients;       // indices into the quotient list
  std::vector<SlotId> internal;     // colour-1 edges inside the block, by smaller slot
  std::vector<SlotId> boundary;     // slots of the block whose colour-1 end leaves it or is open
};

struct BlockPartitionResult {
  std::vector<QuotientComponent> quotients;
  std::vector<Block> blocks;        // ordered by smallest vertex
  std::vector<int> block_of;        // vertex -> block index
};

/// The unique block partition: maximal ladders of marked q1 quotients,
/// maximal connected unions of q2 quotients, the same for q3, and single q4.
BlockPartitionResult block_partition(const Pregraph& g, const Colouring& m);

enum class UnmarkedPartKind : std::uint8_t { Ladder, Digon, Remainder };

struct UnmarkedPart {
  UnmarkedPartKind kind;
  std::vector<int> vertices;
};

/// Partition of a cubic pregraph into ladders, digons outside ladders and the
/// components of what is left. Ladders are found first, so a digon whose
/// vertices both lie on a ladder belongs to that ladder.
std::vector<UnmarkedPart> unmarked_partition(const Pregraph& g);

}  // namespace ddgen
