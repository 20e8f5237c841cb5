#pragma once

/// \file oracle.hpp
/// Brute-force reference implementations, independent of the block-based
/// generator: exhaustive slot pairing, exhaustive marking search and
/// exhaustive edge colouring. Only practical for small orders.

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "ddgen/canonical.hpp"
#include "ddgen/pregraph.hpp"

namespace ddgen::oracle {

inline constexpr int kMaxOrder = 8;

class OracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One representative of every connected cubic pregraph on n vertices
/// (loops, parallel edges and semi-edges allowed). Throws for n > kMaxOrder.
std::vector<Pregraph> all_cubic_pregraphs(int n);

/// Every marking of g whose colour-0 components are quotients of C4.
std::vector<Colouring> all_cq_markings(const Pregraph& g);
bool has_cq_factor(const Pregraph& g);
/// One marking per isomorphism class of marked graphs on g.
std::vector<Colouring> all_cq_factors_up_to_iso(const Pregraph& g);

/// Proper 3-edge-colouring search; a semi-edge needs a colour at its one end,
/// a loop can never be coloured properly.
bool is_3_edge_colourable(const Pregraph& g);

/// Canonical forms of all Delaney-Dress graphs extending the marking, found
/// by trying every assignment of colours 0 and 2 to the colour-0 elements.
std::set<CanonicalForm> brute_dd_forms(const Pregraph& g, const Colouring& marking);
/// One such colouring per isomorphism class.
std::vector<Colouring> brute_dd_colourings(const Pregraph& g, const Colouring& marking);
std::int64_t brute_dd_classes(const Pregraph& g, const Colouring& marking);

}  // namespace ddgen::oracle
