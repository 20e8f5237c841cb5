#include "ddgen/cli.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ddgen/blocklists.hpp"
#include "ddgen/blocks.hpp"
#include "ddgen/ddcolour.hpp"
#include "ddgen/generator.hpp"
#include "ddgen/oracle.hpp"
#include "ddgen/text_format.hpp"

namespace ddgen::cli {

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Lists:
      return "lists";
    case Mode::Marked:
      return "marked";
    case Mode::Markable:
      return "markable";
    case Mode::DD:
      return "dd";
    case Mode::Oracle:
      return "oracle";
    case Mode::Blocks:
      return "blocks";
  }
  return "?";
}

namespace {

void parse_part(const std::string& text, RunConfig& cfg) {
  int i = 0;
  int m = 0;
  char slash = 0;
  std::istringstream in(text);
  if (!(in >> i >> slash >> m) || slash != '/' || !in.eof()) {
    throw UsageError("--part expects i/m, got '" + text + "'");
  }
  if (m < 1 || i < 0 || i >= m) throw UsageError("--part needs 0 <= i < m, got '" + text + "'");
  cfg.part_index = i;
  cfg.part_count = m;
}

// A unit of work: returns its count and appends output lines to `lines`
// unless it is null.
using Item = std::function<std::int64_t(std::string* lines)>;

void append(std::string* lines, const std::string& line) {
  if (!lines) return;
  lines->append(line);
  lines->push_back('\n');
}

std::string list_line(const BlockList& list) {
  std::string line;
  for (const auto& d : list.blocks) {
    if (!line.empty()) line.push_back(' ');
    line += d.code();
  }
  return line;
}

std::vector<Item> list_items(const RunConfig& cfg) {
  GeneratorOptions opts;
  opts.debug_validate = cfg.debug_validate;
  std::vector<Item> items;
  for (auto& list : enumerate_lists(cfg.n)) {
    switch (cfg.mode) {
      case Mode::Lists:
        items.push_back([list](std::string* lines) {
          append(lines, list_line(list));
          return std::int64_t{1};
        });
        break;
      case Mode::Marked:
        items.push_back([list, opts](std::string* lines) {
          return generate_for_list(list, [&](const Pregraph& g, const Colouring& m) { append(lines, encode_text(g, m)); },
                                   opts)
              .graphs;
        });
        break;
      case Mode::Markable:
        items.push_back([list, opts](std::string* lines) {
          std::int64_t kept = 0;
          generate_for_list(
              list,
              [&](const Pregraph& g, const Colouring& m) {
                if (!is_representative_marking(g, m)) return;
                ++kept;
                append(lines, encode_text(g, m));
              },
              opts);
          return kept;
        });
        break;
      case Mode::DD:
        items.push_back([list, opts](std::string* lines) {
          std::int64_t total = 0;
          generate_for_list(
              list,
              [&](const Pregraph& g, const Colouring& m) {
                DDSink sink;
                if (lines) sink = [&](const Colouring& dd) { append(lines, encode_text(g, dd)); };
                total += enumerate_dd(g, m, sink);
              },
              opts);
          return total;
        });
        break;
      default:
        break;
    }
  }
  return items;
}

std::vector<Item> block_items(const RunConfig& cfg) {
  auto cat = catalogue(cfg.n);
  std::vector<Item> items;
  for (std::size_t i = 0; i < cat->descriptors.size(); ++i) {
    items.push_back([cat, i](std::string* lines) {
      const auto& b = cat->blocks[i];
      append(lines, cat->descriptors[i].code() + " " + encode_text(b.graph, b.marking));
      return std::int64_t{1};
    });
  }
  return items;
}

std::vector<Item> oracle_items(const RunConfig& cfg) {
  const std::string what = cfg.oracle_what;
  std::vector<Item> items;
  for (auto& g : oracle::all_cubic_pregraphs(cfg.n)) {
    items.push_back([g, what](std::string* lines) -> std::int64_t {
      if (what == "all") {
        append(lines, encode_text(g));
        return 1;
      }
      if (what == "cq" || what == "colourable") {
        bool keep = what == "cq" ? oracle::has_cq_factor(g) : oracle::is_3_edge_colourable(g);
        if (keep) append(lines, encode_text(g));
        return keep ? 1 : 0;
      }
      std::int64_t total = 0;
      for (const auto& m : oracle::all_cq_factors_up_to_iso(g)) {
        if (what == "marked") {
          append(lines, encode_text(g, m));
          ++total;
          continue;
        }
        for (const auto& dd : oracle::brute_dd_colourings(g, m)) {
          append(lines, encode_text(g, dd));
          ++total;
        }
      }
      return total;
    });
  }
  return items;
}

std::vector<Item> make_items(const RunConfig& cfg) {
  switch (cfg.mode) {
    case Mode::Blocks:
      return block_items(cfg);
    case Mode::Oracle:
      return oracle_items(cfg);
    default:
      return list_items(cfg);
  }
}

// Runs the items of this part on a pool of cfg.jobs threads. Output is
// written in item order whatever the number of threads; finished items wait
// in `pending` until their predecessors are out.
std::int64_t execute(const RunConfig& cfg, std::ostream* out) {
  std::vector<Item> all = make_items(cfg);
  std::vector<Item> mine;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (static_cast<int>(i % static_cast<std::size_t>(cfg.part_count)) == cfg.part_index) {
      mine.push_back(std::move(all[i]));
    }
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::int64_t total = 0;
  std::exception_ptr failure;
  std::map<std::size_t, std::string> pending;
  std::size_t written = 0;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= mine.size()) return;
      std::string buffer;
      std::int64_t c = 0;
      try {
        c = mine[i](out ? &buffer : nullptr);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        next = mine.size();
        return;
      }
      std::lock_guard<std::mutex> lock(mu);
      total += c;
      if (!out) continue;
      pending.emplace(i, std::move(buffer));
      for (auto it = pending.begin(); it != pending.end() && it->first == written; it = pending.erase(it), ++written) {
        out->write(it->second.data(), static_cast<std::streamsize>(it->second.size()));
      }
    }
  };
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return total;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"Isomorphism-free generation of CQ-marked pregraphs, CQ-markable pregraphs and Delaney-Dress graphs",
               "ddgen"};
  app.require_subcommand(1);

  std::string part;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-n", cfg.n, "number of vertices")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--counts-only,--count", cfg.counts_only, "only report the count");
    sub->add_option("--output,-o", cfg.output, "write graphs to this file instead of standard output");
    sub->add_option("--part", part, "only process work items with index i modulo m");
    sub->add_option("--jobs,-j", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--debug-validate", cfg.debug_validate, "recompute the block partition for every connection");
  };

  struct Sub {
    Mode mode;
    const char* help;
  };
  const Sub subs[] = {
      {Mode::Lists, "acceptable block lists"},
      {Mode::Marked, "CQ-marked pregraphs"},
      {Mode::Markable, "CQ-markable pregraphs"},
      {Mode::DD, "Delaney-Dress graphs"},
      {Mode::Oracle, "brute-force reference enumeration (small n)"},
      {Mode::Blocks, "block catalogue up to order n"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(to_string(s.mode), s.help);
    add_common(sub);
    sub->callback([&cfg, mode = s.mode] { cfg.mode = mode; });
    if (s.mode == Mode::Oracle) {
      sub->group("");
      sub->add_option("--what", cfg.oracle_what, "all, cq, marked, colourable or dd")
          ->check(CLI::IsMember({"all", "cq", "marked", "colourable", "dd"}));
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  if (!part.empty()) parse_part(part, cfg);
  if (cfg.mode == Mode::Oracle && cfg.n > oracle::kMaxOrder) {
    throw UsageError("oracle supports n <= " + std::to_string(oracle::kMaxOrder));
  }
  return cfg;
}

std::string summary_line(const RunConfig& cfg, std::int64_t count) {
  return std::string(to_string(cfg.mode)) + " n=" + std::to_string(cfg.n) + " part=" + std::to_string(cfg.part_index) +
         "/" + std::to_string(cfg.part_count) + " count=" + std::to_string(count);
}

std::int64_t count(const RunConfig& cfg) { return execute(cfg, nullptr); }

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = nullptr;
  if (!cfg.counts_only) {
    if (cfg.output.empty()) {
      sink = &out;
    } else {
      file.open(cfg.output);
      if (!file) {
        err << "ddgen: cannot open " << cfg.output << " for writing\n";
        return 1;
      }
      sink = &file;
    }
  }
  std::int64_t total = 0;
  try {
    total = execute(cfg, sink);
  } catch (const std::exception& e) {
    err << "ddgen: " << e.what() << "\n";
    return 1;
  }
  if (sink) {
    sink->flush();
    if (!*sink) {
      err << "ddgen: write error" << (cfg.output.empty() ? "" : " on " + cfg.output) << "\n";
      return 1;
    }
  }
  err << summary_line(cfg, total) << "\n";
  return 0;
}

}  // namespace ddgen::cli
