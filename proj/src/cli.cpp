#include "secantq/cli.hpp"

#include "secantq/errors.hpp"
#include "secantq/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace secantq {

namespace {

struct CommonOpts {
  std::uint64_t seed = 0;
  int retries = 5;
  bool porcelain = false;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--seed", opts.seed, "layout seed (default 0)");
  cmd->add_option("--retries", opts.retries, "genericity retries (default 5)");
  cmd->add_flag("--porcelain", opts.porcelain, "machine output only");
  cmd->add_option("--jobs", opts.jobs, "internal parallelism");
}

std::string read_stream_or_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw SqError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_trace(const std::string& word_text, const CommonOpts& opts,
              std::ostream& out) {
  BraidWord w = parse_braid_word(word_text);
  Realized realized = realize_generic(w, opts.seed, opts.retries);
  for (const TrisecantEvent& e : realized.events) out << format_event(e) << "\n";
  if (!opts.porcelain)
    out << "# events=" << realized.events.size()
        << " attempts=" << realized.attempts << "\n";
  return 0;
}

int cmd_sq(const std::string& word_text, const CommonOpts& opts,
           std::ostream& out) {
  BraidWord w = parse_braid_word(word_text);
  Pipeline p = run_pipeline(w, opts.seed, opts.retries);
  BraidSQ sq = build_braid_sq(p.trace, p.realized.events);
  for (int i = 1; i <= w.strands; ++i)
    for (int j = 1; j <= w.strands; ++j) {
      if (i == j) continue;
      out << "TOP (" << i << "," << j << ") = "
          << to_string(sq.top_map[p.trace.pair_index(i, j)]) << "\n";
    }
  if (!opts.porcelain)
    out << "# events=" << p.realized.events.size()
        << " attempts=" << p.realized.attempts << "\n";
  return 0;
}

int cmd_plat(const std::string& word_text, const CommonOpts& opts,
             bool simplify_flag, std::ostream& out) {
  BraidWord w = parse_braid_word(word_text);
  Pipeline p = run_pipeline(w, opts.seed, opts.retries);
  QuandlePresentation pres =
      build_plat_presentation(p.trace, p.realized.events, plat_structure(w));
  if (simplify_flag) pres = simplify(pres);
  out << presentation_text(pres);
  if (!opts.porcelain)
    out << "# events=" << p.realized.events.size()
        << " attempts=" << p.realized.attempts << "\n";
  return 0;
}

int cmd_color(const std::string& word_text,
              const std::vector<std::string>& quandle_specs,
              const CommonOpts& opts, std::ostream& out) {
  BraidWord w = parse_braid_word(word_text);
  Pipeline p = run_pipeline(w, opts.seed, opts.retries);
  QuandlePresentation pres =
      build_plat_presentation(p.trace, p.realized.events, plat_structure(w));
  for (const std::string& spec : quandle_specs) {
    FiniteQuandle q = parse_quandle_spec(spec);
    ColoringReport report = count_colorings(pres, q);
    out << spec << " " << report.count << "\n";
    if (!opts.porcelain)
      out << "# nodes=" << report.search_nodes << " elapsed_ms="
          << report.elapsed_ms << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& config_path, const CommonOpts& opts,
               std::ostream& out) {
  HarnessConfig config;
  if (!config_path.empty())
    config = parse_harness_config(read_stream_or_file(config_path));
  std::vector<VerifyRow> rows = run_verify(config, opts.jobs);
  bool all_pass = true;
  for (const VerifyRow& row : rows) {
    out << row.name << " " << (row.pass ? "PASS" : "FAIL");
    if (!row.detail.empty()) out << " " << row.detail;
    out << "\n";
    all_pass = all_pass && row.pass;
  }
  if (!opts.porcelain)
    out << "# " << rows.size() << " checks, "
        << (all_pass ? "all passed" : "FAILURES PRESENT") << "\n";
  return all_pass ? 0 : 1;
}

int cmd_moves(const std::string& word_text, const std::string& script_path,
              std::ostream& out) {
  BraidWord w = parse_braid_word(word_text);
  std::vector<Move> moves = parse_move_script(read_stream_or_file(script_path));
  for (const Move& m : moves) w = apply_move(w, m);
  out << format_braid_word(w) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"secant-quandle invariants of braids and plat closures"};
  app.require_subcommand(1);

  std::string word_text, config_path, script_path;
  std::vector<std::string> quandle_specs;
  bool simplify_flag = false;
  CommonOpts opts;

  CLI::App* trace = app.add_subcommand("trace", "print the trisecant events");
  trace->add_option("word", word_text, "braid word \"n: g1 g2 ...\"")
      ->required();
  add_common(trace, opts);

  CLI::App* sq = app.add_subcommand("sq", "print the braid top-map");
  sq->add_option("word", word_text)->required();
  add_common(sq, opts);

  CLI::App* plat = app.add_subcommand("plat", "print the plat presentation");
  plat->add_option("word", word_text)->required();
  plat->add_flag("--simplify", simplify_flag, "Tietze-reduce first");
  add_common(plat, opts);

  CLI::App* color = app.add_subcommand("color", "count colorings per target");
  color->add_option("word", word_text)->required();
  color->add_option("--quandle", quandle_specs,
                    "dihedral:m | trivial:m | table file (repeatable)")
      ->required()
      ->type_size(1)
      ->allow_extra_args(false);
  add_common(color, opts);

  CLI::App* verify = app.add_subcommand("verify", "run the invariance harness");
  verify->add_option("--config", config_path, "key=value config file");
  add_common(verify, opts);

  CLI::App* moves = app.add_subcommand("moves", "apply a move script");
  moves->add_option("word", word_text)->required();
  moves->add_option("script", script_path, "move script file or '-'")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (trace->parsed()) return cmd_trace(word_text, opts, out);
    if (sq->parsed()) return cmd_sq(word_text, opts, out);
    if (plat->parsed()) return cmd_plat(word_text, opts, simplify_flag, out);
    if (color->parsed()) return cmd_color(word_text, quandle_specs, opts, out);
    if (verify->parsed()) return cmd_verify(config_path, opts, out);
    if (moves->parsed()) return cmd_moves(word_text, script_path, out);
  } catch (const GenericityExhausted& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const SqError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace secantq
