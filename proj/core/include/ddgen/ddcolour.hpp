#pragma once

/// \file ddcolour.hpp
/// Delaney-Dress colourings of a CQ-marked pregraph: every colour-0 element
/// of the marking becomes colour 0 or 2 so that each vertex sees each of the
/// colours 0, 1, 2 exactly once.
///
/// q2 and q4 quotients are coloured by a fixed rule (the edge with the
/// smaller slot pair, resp. the semi-edge on the smaller slot, gets colour 0)
/// because swapping their colours always gives an isomorphic graph. The
/// remaining q1 and q3 quotients form the undetermined set U, and colourings
/// correspond to bit vectors over U.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ddgen/canonical.hpp"
#include "ddgen/partition.hpp"
#include "ddgen/pregraph.hpp"

namespace ddgen {

using ColourVector = std::uint32_t;

struct UndeterminedQuotient {
  int quotient = 0;  // index into quotient_components
  QuotientKind kind = QuotientKind::Q1;
  /// q1: the two edges (by smaller slot) of the designated matching, the one
  /// holding the smallest edge, followed by the other two edges.
  /// q3: the middle edge followed by the two semi-edges.
  std::vector<SlotId> elements;
};

struct UndeterminedSet {
  std::vector<QuotientComponent> quotients;
  std::vector<int> quotient_of_vertex;
  std::vector<UndeterminedQuotient> members;  // in quotient order
  std::vector<int> member_of_quotient;        // -1 for q2/q4
};

UndeterminedSet undetermined_set(const Pregraph& g, const Colouring& marking);

class DDError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest |U| enumerate_dd accepts.
inline constexpr int kMaxUndetermined = 28;

Colouring vector_to_colouring(const Pregraph& g, const Colouring& marking, const UndeterminedSet& u,
                              ColourVector v);
ColourVector colouring_to_vector(const Pregraph& g, const UndeterminedSet& u, const Colouring& dd);

/// The action of a marking-preserving automorphism on colour vectors:
/// bit i moves to the position of the image quotient and is flipped when a
/// q1 quotient's designated matching is sent to the other matching.
struct VectorAction {
  std::vector<int> target;
  ColourVector flip = 0;

  ColourVector apply(ColourVector v) const;
};

VectorAction vector_action(const Pregraph& g, const UndeterminedSet& u, const Permutation& sigma);
ColourVector act(const Pregraph& g, const UndeterminedSet& u, const Permutation& sigma, ColourVector v);

using DDSink = std::function<void(const Colouring& dd)>;

/// Emits one Delaney-Dress colouring per orbit of colour vectors under the
/// automorphism group of the marked graph (the smallest vector of each
/// orbit) and returns the number of orbits. Throws DDError if |U| exceeds
/// kMaxUndetermined.
std::int64_t enumerate_dd(const Pregraph& g, const Colouring& marking, const DDSink& sink);

/// Complete proper 3-edge-colouring whose colour-0/2 subgraph is a CQ-factor.
bool verify_dd(const Pregraph& g, const Colouring& dd);

}  // namespace ddgen
