#pragma once

/// \file blocklists.hpp
/// Orderly enumeration of the block lists whose orders sum to n, and the
/// initial partial pregraph of a list.

#include <functional>
#include <vector>

#include "ddgen/blocks.hpp"
#include "ddgen/canonical.hpp"

namespace ddgen {

struct BlockList {
  std::vector<BlockDescriptor> blocks;  // non-decreasing in catalogue order

  int order() const;
  /// One connector count per block, in list order.
  std::vector<int> degrees() const;
  int connectors() const;
  int connectors_in(Family f) const;

  bool operator==(const BlockList&) const = default;
};

/// Loopless multigraph realisability: even sum and max <= sum of the others.
bool is_multigraphic(std::vector<int> degrees);

/// Multigraphic connector degrees, at most half the connectors in Q2 blocks
/// and at most half in Q3 blocks, plus the connectivity requirements: a
/// list without connectors has one block; otherwise every block has a
/// connector and there are at least 2(blocks-1) connectors.
bool is_acceptable(const BlockList& list);

/// Streams every acceptable list of total order n exactly once, in
/// lexicographic order of descriptor sequences.
void enumerate_lists(int n, const std::function<void(const BlockList&)>& sink);
std::vector<BlockList> enumerate_lists(int n);

struct InitialPartial {
  Pregraph graph;
  Colouring marking;
  std::vector<int> block_of;     // vertex -> index in the list
  std::vector<int> block_start;  // first vertex of each block
};

/// Disjoint union of the realised blocks in list order.
InitialPartial realize_list(const BlockList& list);

/// Automorphism generators of the initial partial assembled from the block
/// automorphisms and swaps of identical blocks. canonical_labelling is left
/// empty.
AutInfo seed_group(const BlockList& list, const InitialPartial& partial);

}  // namespace ddgen
