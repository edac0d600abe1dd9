#include "secantq/harness.hpp"

#include "secantq/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <random>
#include <sstream>

namespace secantq {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Pipeline run_pipeline(const BraidWord& w, std::uint64_t seed, int retries) {
  Pipeline p;
  p.word = w;
  p.realized = realize_generic(w, seed, retries);
  p.trace = build_secant_trace(p.realized.events, w.strands);
  return p;
}

ComparisonResult compare_braids(const BraidWord& w1, const BraidWord& w2,
                                std::uint64_t seed, int retries) {
  if (w1.strands != w2.strands)
    throw SqError("compare_braids: different strand counts");
  if (braid_permutation(w1) != braid_permutation(w2))
    throw SqError("compare_braids: different induced permutations");
  Pipeline p1 = run_pipeline(w1, mix_seed(seed, 1), retries);
  Pipeline p2 = run_pipeline(w2, mix_seed(seed, 2), retries);
  BraidSQ sq1 = build_braid_sq(p1.trace, p1.realized.events);
  BraidSQ sq2 = build_braid_sq(p2.trace, p2.realized.events);

  ComparisonResult result;
  result.left = w1;
  result.right = w2;
  result.kind = ComparisonResult::Kind::TopMap;
  result.left_events = static_cast<int>(p1.realized.events.size());
  result.right_events = static_cast<int>(p2.realized.events.size());
  result.left_attempts = p1.realized.attempts;
  result.right_attempts = p2.realized.attempts;
  result.equal = true;
  for (int i = 1; i <= w1.strands && result.equal; ++i)
    for (int j = 1; j <= w1.strands && result.equal; ++j) {
      if (i == j) continue;
      int idx = p1.trace.pair_index(i, j);
      if (!(sq1.top_map[idx] == sq2.top_map[idx])) {
        result.equal = false;
        std::ostringstream os;
        os << "pair (" << i << "," << j << "): " << to_string(sq1.top_map[idx])
           << " vs " << to_string(sq2.top_map[idx]);
        result.witness = os.str();
      }
    }
  return result;
}

ComparisonResult compare_plats(const BraidWord& w1, const BraidWord& w2,
                               const std::vector<FiniteQuandle>& targets,
                               std::uint64_t seed, int retries) {
  Pipeline p1 = run_pipeline(w1, mix_seed(seed, 3), retries);
  Pipeline p2 = run_pipeline(w2, mix_seed(seed, 4), retries);
  QuandlePresentation q1 =
      build_plat_presentation(p1.trace, p1.realized.events, plat_structure(w1));
  QuandlePresentation q2 =
      build_plat_presentation(p2.trace, p2.realized.events, plat_structure(w2));

  ComparisonResult result;
  result.left = w1;
  result.right = w2;
  result.kind = ComparisonResult::Kind::ColoringCounts;
  result.left_events = static_cast<int>(p1.realized.events.size());
  result.right_events = static_cast<int>(p2.realized.events.size());
  result.left_attempts = p1.realized.attempts;
  result.right_attempts = p2.realized.attempts;
  result.equal = true;
  for (const FiniteQuandle& q : targets) {
    ColoringReport r1 = count_colorings(q1, q);
    ColoringReport r2 = count_colorings(q2, q);
    if (r1.count != r2.count) {
      result.equal = false;
      std::ostringstream os;
      os << q.name << ": " << r1.count << " vs " << r2.count;
      result.witness = os.str();
      break;
    }
  }
  return result;
}

std::tuple<BraidWord, BraidWord, std::vector<Move>> random_equivalent_pair(
    const BraidWord& w, WalkKind kind, int steps, std::uint64_t seed) {
  if (kind == WalkKind::Plat && w.strands % 2 != 0)
    throw ParityError("plat walk needs an even strand count");
  std::mt19937_64 rng(mix_seed(seed, 7));
  BraidWord cur = w;
  std::vector<Move> log;
  for (int step = 0; step < steps; ++step) {
    std::vector<Move> applicable;
    int len = static_cast<int>(cur.letters.size());
    for (int pos = 0; pos + 1 < len; ++pos) {
      if (cur.letters[pos] == -cur.letters[pos + 1])
        applicable.push_back({MoveKind::FreeCancel, pos});
      if (std::abs(std::abs(cur.letters[pos]) -
                   std::abs(cur.letters[pos + 1])) >= 2)
        applicable.push_back({MoveKind::FarCommute, pos});
    }
    for (int pos = 0; pos + 2 < len; ++pos) {
      int a = cur.letters[pos], b = cur.letters[pos + 1];
      if (cur.letters[pos + 2] == a &&
          std::abs(std::abs(a) - std::abs(b)) == 1 && (a > 0) == (b > 0))
        applicable.push_back({MoveKind::Coxeter, pos});
    }
    for (int pos = 0; pos <= len; ++pos)
      for (int g = 1; g <= cur.strands - 1; ++g) {
        applicable.push_back({MoveKind::FreeCancel, pos, 0, g, true});
        applicable.push_back({MoveKind::FreeCancel, pos, 0, -g, true});
      }
    if (kind == WalkKind::Plat) {
      int gens = static_cast<int>(k_generators(cur.strands).size());
      for (int id = 0; id < gens; ++id)
        for (bool inverted : {false, true}) {
          applicable.push_back({MoveKind::KLeft, 0, id, 0, inverted});
          applicable.push_back({MoveKind::KRight, 0, id, 0, inverted});
        }
      applicable.push_back({MoveKind::PlatStabilize, 0, 0, 0, false});
      if (cur.strands >= 4 && !cur.letters.empty() &&
          cur.letters.back() == cur.strands - 2) {
        bool clean = true;
        for (size_t i = 0; i + 1 < cur.letters.size(); ++i)
          if (std::abs(cur.letters[i]) > cur.strands - 3) clean = false;
        if (clean)
          applicable.push_back({MoveKind::PlatStabilize, 0, 0, 0, true});
      }
    }
    const Move& m = applicable[rng() % applicable.size()];
    cur = apply_move(cur, m);
    log.push_back(m);
  }
  return {w, cur, log};
}

namespace {

// Valuation of every class as a reduced free-quandle word. Braids: base
// generators are pair indices. Plats: base generators are the t=0 classes
// modulo the top identifications.
std::vector<FreeQuandleWord> plat_valuation(const SecantTrace& trace,
                                            const QuandlePresentation& p) {
  UnionFind top(trace.class_count);
  for (const auto& [a, b] : p.top_idents) top.merge(a, b);
  std::vector<std::pair<int, FreeQuandleWord>> base;
  for (int i = 1; i <= trace.strands; ++i)
    for (int j = 1; j <= trace.strands; ++j)
      if (i != j) {
        int cls = trace.first_class(i, j);
        base.emplace_back(cls, fq_generator(top.find(cls)));
      }
  return propagate_words(trace.class_count, base, p.relations);
}

struct LemmaContext {
  const std::vector<TrisecantEvent>& events;
  const SecantTrace& trace;
  const std::vector<Relation>& relations;
  const std::vector<FreeQuandleWord>& values;
  const std::vector<TrivialityMark>& marks;
  const QuandlePresentation* plat;  // null for braids
};

const Relation* relation_for(const LemmaContext& ctx, int event, int from,
                             int to) {
  for (const Relation& r : ctx.relations) {
    if (r.event_index != event) continue;
    const SecantTrace::ClassInfo& info = ctx.trace.class_info[r.target];
    if (info.from == from && info.to == to) return &r;
  }
  return nullptr;
}

void check_type1(const LemmaContext& ctx, LemmaReport& report) {
  for (const TrivialityMark& mark : ctx.marks) {
    if (mark.kind != TrivialKind::Type1) continue;
    report.type1_checked++;
    for (const Relation& r : ctx.relations) {
      if (r.event_index != mark.event0) continue;
      bool ok = ctx.values[r.target] == ctx.values[r.left];
      if (!ok && ctx.plat) {
        int rep_t = ctx.plat->canonical(r.target);
        int rep_l = ctx.plat->canonical(r.left);
        int rep_o = ctx.plat->canonical(r.right);
        // Identification routes: the operand collapses the relation to
        // idempotence (o = pre or o = post), the operand is an e-class, or
        // pre and post are themselves glued.
        ok = rep_t == rep_l || rep_o == rep_l || rep_o == rep_t ||
             ctx.plat->canonical_in_e(r.right);
      }
      if (!ok)
        report.violations.push_back(
            "Type-1 event " + std::to_string(mark.event0) + " (" +
            format_event(ctx.events[mark.event0]) +
            "): split pair changed: " + to_string(ctx.values[r.left]) +
            " -> " + to_string(ctx.values[r.target]));
    }
  }
}

void check_type2(const LemmaContext& ctx, LemmaReport& report) {
  for (const TrivialityMark& mark : ctx.marks) {
    if (mark.kind != TrivialKind::Type2Pair) continue;
    report.type2_checked++;
    const SecantTrace::EventClasses& ec0 = ctx.trace.event_classes[mark.event0];
    const SecantTrace::EventClasses& ec1 = ctx.trace.event_classes[mark.event1];
    bool word_exact = ctx.values[ec1.post_ac] == ctx.values[ec0.pre_ac] &&
                      ctx.values[ec1.post_ca] == ctx.values[ec0.pre_ca];
    if (word_exact) {
      report.type2_word_exact++;
      continue;
    }
    bool ok = false;
    if (ctx.plat) {
      ok = ctx.plat->canonical(ec1.post_ac) == ctx.plat->canonical(ec0.pre_ac) &&
           ctx.plat->canonical(ec1.post_ca) == ctx.plat->canonical(ec0.pre_ca);
    }
    if (!ok)
      report.violations.push_back(
          "Type-2 pair (" + std::to_string(mark.event0) + "," +
          std::to_string(mark.event1) + ") does not cancel: " +
          to_string(ctx.values[ec0.pre_ac]) + " -> " +
          to_string(ctx.values[ec1.post_ac]));
  }
}

void check_case1(const LemmaContext& ctx, LemmaReport& report) {
  int count = static_cast<int>(ctx.events.size());
  auto surface = [&](int k) {
    return std::pair<int, int>(ctx.events[k].outer_a, ctx.events[k].outer_c);
  };
  auto middle = [&](int k) { return ctx.events[k].middle; };
  for (int w = 0; w + 3 < count; ++w) {
    for (bool forward : {true, false}) {
      int e0 = forward ? w : w + 3;
      int e1 = forward ? w + 1 : w + 2;
      int e2 = forward ? w + 2 : w + 1;
      int e3 = forward ? w + 3 : w;
      // Pattern ijl, ijk, jkl, ikl read along e0..e3: surfaces {i,l}, {i,k},
      // {j,l}, {i,l}; middles j, j, k, k.
      if (surface(e0) != surface(e3)) continue;
      if (middle(e0) != middle(e1) || middle(e2) != middle(e3)) continue;
      int j = middle(e0), k = middle(e2);
      if (j == k) continue;
      auto [s1a, s1b] = surface(e1);
      int i = (s1a == k) ? s1b : (s1b == k ? s1a : -1);
      if (i < 0 || i == j) continue;
      auto [s0a, s0b] = surface(e0);
      int l = (s0a == i) ? s0b : (s0b == i ? s0a : -1);
      if (l < 0 || l == j || l == k) continue;
      if (surface(e2) != std::make_pair(std::min(j, l), std::max(j, l)))
        continue;
      if (surface(e1) != std::make_pair(std::min(i, k), std::max(i, k)))
        continue;

      const Relation* il0 = relation_for(ctx, e0, i, l);
      const Relation* ik1 = relation_for(ctx, e1, i, k);
      const Relation* jl2 = relation_for(ctx, e2, j, l);
      const Relation* il3 = relation_for(ctx, e3, i, l);
      if (!il0 || !ik1 || !jl2 || !il3) continue;
      // The j-middle events share one operation, the k-middle events the
      // other pairing; mixed windows are a different local case.
      if (il0->op != ik1->op || jl2->op != il3->op) continue;
      report.case1_checked++;

      // Operand (i,j) is untouched inside the window.
      const FreeQuandleWord& ij = ctx.values[il0->right];
      if (!(ctx.values[ik1->right] == ij)) {
        report.violations.push_back("Case-1 window at event " +
                                    std::to_string(w) +
                                    ": ij operand drifted");
        continue;
      }
      const Relation* il_early = forward ? il0 : il3;
      const Relation* il_late = forward ? il3 : il0;
      FreeQuandleWord il_initial = ctx.values[il_early->left];
      FreeQuandleWord ik_initial = ctx.values[ik1->left];
      FreeQuandleWord expected =
          fq_op(fq_op(il_initial, ik_initial, il3->op), ij, il0->op);
      if (!(ctx.values[il_late->target] == expected))
        report.violations.push_back(
            "Case-1 window at event " + std::to_string(w) +
            ": il identity fails: " + to_string(ctx.values[il_late->target]) +
            " != " + to_string(expected));
      FreeQuandleWord jl_expected =
          fq_op(ctx.values[jl2->left], ctx.values[jl2->right], jl2->op);
      if (!(ctx.values[jl2->target] == jl_expected))
        report.violations.push_back("Case-1 window at event " +
                                    std::to_string(w) + ": jl identity fails");
    }
  }
}

LemmaReport run_lemma_checks(const LemmaContext& ctx) {
  LemmaReport report;
  check_type1(ctx, report);
  check_type2(ctx, report);
  check_case1(ctx, report);
  return report;
}

}  // namespace

LemmaReport check_lemma_properties(const std::vector<TrisecantEvent>& events,
                                   const SecantTrace& trace,
                                   const BraidSQ& sq) {
  std::vector<TrivialityMark> marks = classify_trivial(events, trace, {});
  LemmaContext ctx{events, trace, sq.relations, sq.values, marks, nullptr};
  return run_lemma_checks(ctx);
}

LemmaReport check_lemma_properties(const std::vector<TrisecantEvent>& events,
                                   const SecantTrace& trace,
                                   const QuandlePresentation& p) {
  std::vector<FreeQuandleWord> values = plat_valuation(trace, p);
  LemmaContext ctx{events, trace, p.relations, values, p.trivial_marks, &p};
  return run_lemma_checks(ctx);
}

BraidWord random_braid_word(int strands, int max_len, std::uint64_t seed) {
  std::mt19937_64 rng(mix_seed(seed, 11));
  BraidWord w;
  w.strands = strands;
  int len = max_len > 0 ? static_cast<int>(rng() % (max_len + 1)) : 0;
  for (int i = 0; i < len; ++i) {
    int g = 1 + static_cast<int>(rng() % (strands - 1));
    w.letters.push_back(rng() % 2 == 0 ? g : -g);
  }
  return w;
}

HarnessConfig parse_harness_config(const std::string& text) {
  HarnessConfig config;
  std::istringstream lines(text);
  std::string line;
  auto split_list = [](const std::string& v) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(v);
    while (std::getline(is, item, ',')) {
      // trim spaces
      size_t b = item.find_first_not_of(" \t");
      size_t e = item.find_last_not_of(" \t");
      if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
  };
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw SyntaxError("config line without '=': " + line);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "seeds") {
      config.seeds.clear();
      for (const std::string& s : split_list(value))
        config.seeds.push_back(std::stoull(s));
      if (config.seeds.empty()) throw SyntaxError("empty seeds list");
    } else if (key == "steps") {
      config.steps = std::stoi(value);
    } else if (key == "targets") {
      config.targets = split_list(value);
    } else if (key == "max_strands") {
      config.max_strands = std::stoi(value);
    } else if (key == "max_word_len") {
      config.max_word_len = std::stoi(value);
    } else if (key == "retries") {
      config.retries = std::stoi(value);
    } else {
      throw SyntaxError("unknown config key '" + key + "'");
    }
  }
  return config;
}

std::vector<VerifyRow> run_verify(const HarnessConfig& config, int jobs) {
  std::vector<FiniteQuandle> targets;
  for (const std::string& spec : config.targets)
    targets.push_back(parse_quandle_spec(spec));

  struct Task {
    std::string name;
    std::function<VerifyRow()> run;
  };
  std::vector<Task> tasks;

  for (std::uint64_t seed : config.seeds) {
    for (int n = 3; n <= config.max_strands; ++n) {
      BraidWord w = random_braid_word(n, config.max_word_len,
                                      mix_seed(seed, 100 + n));
      tasks.push_back(
          {"braid-invariance n=" + std::to_string(n) + " seed=" +
               std::to_string(seed),
           [w, seed, &config]() {
             auto [a, b, log] = random_equivalent_pair(
                 w, WalkKind::Braid, config.steps, mix_seed(seed, 21));
             ComparisonResult r = compare_braids(a, b, seed, config.retries);
             return VerifyRow{"", r.equal,
                              r.equal ? format_braid_word(b) : r.witness};
           }});
      tasks.push_back({"realization-independence n=" + std::to_string(n) +
                           " seed=" + std::to_string(seed),
                       [w, seed, &config]() {
                         ComparisonResult r = compare_braids(
                             w, w, mix_seed(seed, 31), config.retries);
                         return VerifyRow{"", r.equal,
                                          r.equal ? "" : r.witness};
                       }});
      tasks.push_back(
          {"lemma-checks n=" + std::to_string(n) + " seed=" +
               std::to_string(seed),
           [w, seed, &config]() {
             Pipeline p = run_pipeline(w, mix_seed(seed, 41), config.retries);
             BraidSQ sq = build_braid_sq(p.trace, p.realized.events);
             LemmaReport report =
                 check_lemma_properties(p.realized.events, p.trace, sq);
             std::string detail = report.pass()
                                      ? std::to_string(report.type2_checked) +
                                            " type2, " +
                                            std::to_string(report.case1_checked) +
                                            " case1"
                                      : report.violations.front();
             return VerifyRow{"", report.pass(), detail};
           }});
      if (n % 2 == 0)
        tasks.push_back(
            {"plat-invariance n=" + std::to_string(n) + " seed=" +
                 std::to_string(seed),
             [w, seed, &config, &targets]() {
               auto [a, b, log] = random_equivalent_pair(
                   w, WalkKind::Plat, config.steps, mix_seed(seed, 51));
               ComparisonResult r =
                   compare_plats(a, b, targets, seed, config.retries);
               return VerifyRow{"", r.equal, r.equal ? "" : r.witness};
             }});
    }
  }

  std::vector<VerifyRow> rows(tasks.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) {
      rows[i] = tasks[i].run();
      rows[i].name = tasks[i].name;
    }
    return rows;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        rows[i] = tasks[i].run();
      } catch (const std::exception& e) {
        rows[i] = VerifyRow{"", false, e.what()};
      }
      rows[i].name = tasks[i].name;
    }
  };
  std::vector<std::future<void>> pool;
  for (int t = 0; t < jobs; ++t)
    pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return rows;
}

}  // namespace secantq
