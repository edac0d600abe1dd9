#pragma once

#include "secantq/finite_quandle.hpp"
#include "secantq/presentation.hpp"

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace secantq {

// One braid/plat taken through realization, trace, and presentation.
struct Pipeline {
  BraidWord word;
  Realized realized;
  SecantTrace trace;
};

Pipeline run_pipeline(const BraidWord& w, std::uint64_t seed, int retries = 5);

struct ComparisonResult {
  BraidWord left, right;
  enum class Kind { TopMap, ColoringCounts } kind = Kind::TopMap;
  bool equal = false;
  std::string witness;  // set when unequal
  int left_events = 0, right_events = 0;
  int left_attempts = 0, right_attempts = 0;
};

// Equality of the braid invariant: both words are realized independently and
// all n(n-1) top-map words are compared over the shared pair-indexed base
// generators. Requires equal strand counts and equal induced permutations.
ComparisonResult compare_braids(const BraidWord& w1, const BraidWord& w2,
                                std::uint64_t seed = 0, int retries = 5);

// Equality of plat coloring counts over every target quandle.
ComparisonResult compare_plats(const BraidWord& w1, const BraidWord& w2,
                               const std::vector<FiniteQuandle>& targets,
                               std::uint64_t seed = 0, int retries = 5);

enum class WalkKind { Braid, Plat };

// Applies `steps` seeded applicable moves (braid: cancel/insert, Coxeter,
// far commutation; plat: additionally the K moves and stabilization) and
// returns (w, moved word, replayable move log).
std::tuple<BraidWord, BraidWord, std::vector<Move>> random_equivalent_pair(
    const BraidWord& w, WalkKind kind, int steps, std::uint64_t seed);

struct LemmaReport {
  int type1_checked = 0;
  int type2_checked = 0;
  int type2_word_exact = 0;  // pairs canceled at reduced-word level
  int case1_checked = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

// Verifies, on one pipeline output: every Type-1 event leaves the split pair
// unchanged (word equality, identification, or an e-operand); every Type-2
// pair cancels; every four-event window matching the surface/middle pattern
// of the quadrisecant move satisfies the expected word identities.
LemmaReport check_lemma_properties(const std::vector<TrisecantEvent>& events,
                                   const SecantTrace& trace,
                                   const BraidSQ& sq);
LemmaReport check_lemma_properties(const std::vector<TrisecantEvent>& events,
                                   const SecantTrace& trace,
                                   const QuandlePresentation& p);

struct HarnessConfig {
  std::vector<std::uint64_t> seeds{0};
  int steps = 4;
  std::vector<std::string> targets{"dihedral:3", "dihedral:5", "trivial:2"};
  int max_strands = 5;
  int max_word_len = 6;
  int retries = 5;
};

HarnessConfig parse_harness_config(const std::string& text);

struct VerifyRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<VerifyRow> run_verify(const HarnessConfig& config, int jobs = 1);

// Deterministic word generator for harness corpora.
BraidWord random_braid_word(int strands, int max_len, std::uint64_t seed);

}  // namespace secantq
