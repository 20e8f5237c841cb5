#include "ddgen/text_format.hpp"

#include <cctype>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace ddgen {

std::string encode_text(const Pregraph& g, const Colouring& c) {
  std::string out = std::to_string(g.order());
  for (int v = 0; v < g.order(); ++v) {
    out += " | ";
    out += std::to_string(v);
    out += ':';
    for (int i = 0; i < kSlotsPerVertex; ++i) {
      SlotId s = slot_id(v, i);
      out += ' ';
      if (g.is_open(s)) {
        out += '?';
        continue;
      }
      if (g.is_semi(s)) out += '*';
      else out += std::to_string(g.neighbour(s));
      if (!c.empty()) {
        out += '/';
        out += std::to_string(c.at(s));
      }
    }
  }
  return out;
}

namespace {

struct Entry {
  enum Kind { kEdge, kSemiEdge, kOpenSlot } kind = kEdge;
  int neighbour = -1;
  int colour = -1;
  std::size_t position = 0;
};

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_spaces() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  void expect(char ch) {
    skip_spaces();
    if (peek() != ch) throw ParseError(std::string("expected '") + ch + "'", pos_);
    ++pos_;
  }

  int number() {
    skip_spaces();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected a number", pos_);
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (s_[pos_++] - '0');
      if (value > 1'000'000) throw ParseError("number too large", pos_);
    }
    return static_cast<int>(value);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

DecodedGraph decode_text(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  Cursor cur(line);
  const int n = cur.number();
  if (n <= 0) throw ParseError("vertex count must be positive", 0);

  std::vector<std::vector<Entry>> entries(n);
  bool any_colour = false;
  bool any_uncoloured = false;
  for (int v = 0; v < n; ++v) {
    cur.expect('|');
    const std::size_t at = cur.pos();
    if (cur.number() != v) throw ParseError("vertices must be listed in order", at);
    cur.expect(':');
    for (int i = 0; i < kSlotsPerVertex; ++i) {
      cur.skip_spaces();
      Entry e;
      e.position = cur.pos();
      if (cur.peek() == '*') {
        e.kind = Entry::kSemiEdge;
        cur.expect('*');
      } else if (cur.peek() == '?') {
        e.kind = Entry::kOpenSlot;
        cur.expect('?');
      } else {
        e.neighbour = cur.number();
        if (e.neighbour >= n) throw ParseError("neighbour out of range", e.position);
      }
      if (cur.peek() == '/') {
        cur.expect('/');
        const std::size_t cpos = cur.pos();
        e.colour = cur.number();
        if (e.colour > 2) throw ParseError("colour out of range", cpos);
        any_colour = true;
      } else if (e.kind != Entry::kOpenSlot) {
        any_uncoloured = true;
      }
      entries[v].push_back(e);
    }
  }
  cur.skip_spaces();
  if (!cur.at_end()) throw ParseError("trailing characters", cur.pos());
  if (any_colour && any_uncoloured) throw ParseError("colour suffix missing on some entries", 0);

  DecodedGraph out{Pregraph(n), any_colour ? Colouring(n) : Colouring{}};
  Pregraph& g = out.graph;
  // Pending ends at vertex w waiting for a partner from u, keyed by (w, u, colour).
  std::map<std::tuple<int, int, int>, std::vector<SlotId>> waiting;
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < kSlotsPerVertex; ++i) {
      const Entry& e = entries[v][i];
      SlotId s = slot_id(v, i);
      if (e.kind == Entry::kSemiEdge) {
        g.set_semi(s);
      } else if (e.kind == Entry::kEdge) {
        auto key = std::make_tuple(e.neighbour, v, e.colour);
        auto it = waiting.find(key);
        if (it != waiting.end() && !it->second.empty()) {
          SlotId partner = it->second.front();
          it->second.erase(it->second.begin());
          g.connect(partner, s);
        } else {
          waiting[std::make_tuple(v, e.neighbour, e.colour)].push_back(s);
        }
      }
      if (any_colour && e.kind != Entry::kOpenSlot) out.colouring.set_slot(s, static_cast<std::uint8_t>(e.colour));
    }
  }
  for (const auto& [key, slots] : waiting) {
    if (!slots.empty()) {
      const int v = slot_vertex(slots.front());
      throw ParseError("unmatched edge end", entries[v][slot_index(slots.front())].position);
    }
  }
  return out;
}

}  // namespace ddgen
