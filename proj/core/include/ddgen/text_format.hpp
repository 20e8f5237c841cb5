#pragma once

// One graph per line:
//
//   <n> | <v>: <entry> <entry> <entry> | ...
//
// An entry is the neighbour index for an edge end (own index for a loop),
// `*` for a semi-edge or `?` for an open connector, optionally followed by
// `/<c>` with the colour of that edge end. Entries are in slot order.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ddgen/pregraph.hpp"

namespace ddgen {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct DecodedGraph {
  Pregraph graph;
  Colouring colouring;  // empty when the line carried no colours
};

/// No trailing newline. Open slots never carry a colour suffix.
std::string encode_text(const Pregraph& g, const Colouring& c = {});

/// Parallel edges of the same colour are paired in order of appearance,
/// consecutive own-index entries form a loop.
DecodedGraph decode_text(std::string_view line);

}  // namespace ddgen
