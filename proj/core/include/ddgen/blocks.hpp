#pragma once

/// \file blocks.hpp
/// The catalogue of blocks: maximal pieces of a marked pregraph built from a
/// single quotient type, with their open colour-1 connector slots.
///
/// Vertex layout of a realised block:
///   Q1: unit i has vertices a=4i, b=4i+1, c=4i+2, d=4i+3 with the colour-0
///       4-cycle a-b-d-c; rungs join b_i to a_{i+1} and d_i to c_{i+1} on
///       slot 2. Boundary slots, in end-code order: a_0, c_0, b_{k-1}, d_{k-1}.
///   Q2: unit i is the digon 2i=2i+1 on slots 0 and 1.
///   Q3: unit i is the edge 2i-2i+1 on slot 0 with semi-edges on slot 1.
///   Q2 and Q3 units are chained by 2i+1 -- 2i+2 on slot 2; boundary slots
///   are slot 2 of vertex 0 and of vertex 2k-1.
///   Q4: vertex 0 with semi-edges on slots 0 and 1.
///
/// End codes give one character per boundary slot: 'c' for a connector, 's'
/// for a colour-1 semi-edge, or the digit of the boundary slot it is joined to.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ddgen/canonical.hpp"
#include "ddgen/partition.hpp"
#include "ddgen/pregraph.hpp"

namespace ddgen {

enum class Family : std::uint8_t { Q1 = 1, Q2 = 2, Q3 = 3, Q4 = 4 };

struct BlockDescriptor {
  Family family = Family::Q4;
  int units = 1;
  std::string ends = "c";

  int order() const;
  int connector_count() const;
  /// "Q<f>:k=<k>:e=<ends>"
  std::string code() const;
  static BlockDescriptor parse(const std::string& code);

  auto operator<=>(const BlockDescriptor&) const = default;
  bool operator==(const BlockDescriptor&) const = default;
};

inline int block_order(const BlockDescriptor& d) { return d.order(); }
inline int connector_count(const BlockDescriptor& d) { return d.connector_count(); }

struct RealizedBlock {
  Pregraph graph;
  Colouring marking;                      // open connector slots carry colour 1
  std::vector<SlotId> connectors;         // ascending
  std::vector<Permutation> aut_generators;
};

/// Realisation without automorphism generators.
RealizedBlock realize_fragment(const BlockDescriptor& d);
/// Realisation including automorphism generators (cached per descriptor).
RealizedBlock realize(const BlockDescriptor& d);

/// True iff the realisation forms exactly one block of the descriptor's kind
/// whose boundary is exactly the connector slots.
bool self_partition_ok(const BlockDescriptor& d, const RealizedBlock& r);

/// All pairwise non-isomorphic blocks of order at most max_order, in
/// catalogue order (family, units, end code).
std::vector<BlockDescriptor> enumerate_descriptors(int max_order);

struct Catalogue {
  std::vector<BlockDescriptor> descriptors;
  std::vector<RealizedBlock> blocks;
  std::map<CanonicalForm, int> index_of_form;
};

/// Shared, immutable catalogue up to max_order. Thread-safe.
std::shared_ptr<const Catalogue> catalogue(int max_order);

/// The descriptor of a block of a marked pregraph, found by isomorphism with
/// the catalogue; nullopt if it does not match any entry.
std::optional<BlockDescriptor> identify_block(const Pregraph& g, const Colouring& m, const Block& b);

}  // namespace ddgen
