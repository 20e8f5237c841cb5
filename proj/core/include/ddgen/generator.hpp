#pragma once

/// \file generator.hpp
/// Isomorphism-free generation of CQ-marked pregraphs from block lists, and
/// their projection to CQ-markable pregraphs.
///
/// Each block list is realised as a partial graph whose deficient vertices
/// carry one open colour-1 slot. A partial graph is extended by saturating
/// one orbit of deficient vertices at a time; the saturations are produced
/// up to automorphisms of the partial graph by a nested canonical
/// augmentation in which the edges added during the current step carry a
/// private colour. Once the group fixes every deficient vertex the remaining
/// connections are added in all valid ways without further checks.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ddgen/blocklists.hpp"
#include "ddgen/canonical.hpp"
#include "ddgen/pregraph.hpp"

namespace ddgen {

/// Colour of the edges added during the current saturation step; they are
/// recoloured to the link colour before the next step.
inline constexpr std::uint8_t kStepColour = 3;

using MarkedSink = std::function<void(const Pregraph& g, const Colouring& marking)>;

struct GeneratorStats {
  std::int64_t graphs = 0;
  std::int64_t lists = 0;
  std::int64_t partials = 0;              // extend calls
  std::int64_t rejected_connections = 0;  // invalid candidate edges
  std::int64_t rejected_noncanonical = 0;
  std::vector<std::int64_t> per_list;     // graphs per list, in list order

  void merge(const GeneratorStats& other);
};

struct GeneratorOptions {
  /// Recompute the full block partition for every candidate connection and
  /// throw std::logic_error if it disagrees with the local validity rules.
  bool debug_validate = false;
  /// Called for every partial graph entering the extension step, with the
  /// orbit that is about to be saturated (empty when the partial graph is
  /// complete or is completed directly).
  std::function<void(const Pregraph&, const Colouring&, std::span<const int> orbit)> on_extend;
};

/// A partial CQ-marked pregraph together with the block of each vertex.
struct PartialGraph {
  Pregraph graph;
  Colouring marking;
  std::vector<int> block_of;
  std::vector<Family> family_of_block;

  static PartialGraph from_list(const BlockList& list);
  std::vector<int> deficient() const;
};

/// Whether adding the colour-1 edge u-v keeps the prescribed block partition
/// and leaves no closed component that misses vertices.
bool is_valid_connection(const PartialGraph& p, int u, int v);

/// The same decision made by recomputing the block partition from scratch.
bool is_valid_connection_full(const PartialGraph& p, int u, int v);

/// Canonicity of the last edge of `added` (the edges of the current
/// saturation step, all present in the child): it must lie in the orbit,
/// under the child's automorphism group, of the added edge whose pair of
/// canonical labels is smallest. `aut` is the child's AutInfo computed with
/// the added edges in their own colour.
bool is_canonical_extension(const AutInfo& aut, std::span<const std::pair<int, int>> added);

/// Emits every valid way of pairing the remaining open slots, without
/// isomorphism checks. Returns the number of completions.
std::int64_t complete_all_ways(const PartialGraph& p, const MarkedSink& sink);

/// Generates all CQ-marked pregraphs for one list.
GeneratorStats generate_for_list(const BlockList& list, const MarkedSink& sink, const GeneratorOptions& opts = {});

/// All CQ-marked pregraphs on n vertices, one per isomorphism class.
GeneratorStats generate_marked(int n, const MarkedSink& sink, const GeneratorOptions& opts = {});

enum class MultiFactorFamily { BarbedPath, DoubleClosedLadder, DoubleOpenLadder, OpenClosedLadder };

const char* to_string(MultiFactorFamily f);

/// The family of pregraphs with two non-isomorphic CQ-factors that g belongs
/// to, if any. Barbed paths and open-closed ladders qualify for even n, the
/// double-closed and double-open ladders for n divisible by four.
std::optional<MultiFactorFamily> detect_multifactor_family(const Pregraph& g);

/// For graphs of a multi-factor family: whether this marking is the one
/// that represents the underlying pregraph. True for all other graphs.
bool is_representative_marking(const Pregraph& g, const Colouring& marking);

/// All CQ-markable pregraphs on n vertices. The sink receives the graph and
/// the marking it was generated with.
GeneratorStats generate_markable(int n, const MarkedSink& sink, const GeneratorOptions& opts = {});

}  // namespace ddgen
