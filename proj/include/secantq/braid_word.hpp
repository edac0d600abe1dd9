#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace secantq {

// A braid group element given as a word: `strands` = n, each letter g is a
// signed generator, |g| in [1, n-1], sign(g) the exponent of sigma_|g|.
// sigma_i swaps the strands in slots i, i+1; words compose left to right,
// top (t = 0) to bottom (t = 1).
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

void validate(const BraidWord& w);

// Text format: "n: g1 g2 ... gk".
BraidWord parse_braid_word(std::string_view text);
std::string format_braid_word(const BraidWord& w);

// perm[s-1] = slot occupied by strand s at t = 1 (1-based slots).
std::vector<int> braid_permutation(const BraidWord& w);

enum class MoveKind {
  FreeCancel,     // delete [g, -g] at pos; inverted: insert [g, -g]
  Coxeter,        // [a, b, a] -> [b, a, b] at pos, |a|,|b| adjacent, same sign
  FarCommute,     // swap letters at pos, pos+1 when ||a|-|b|| >= 2
  KLeft,          // prepend a K_2n generator (inverted: its inverse)
  KRight,         // append a K_2n generator (inverted: its inverse)
  PlatStabilize,  // B_2n -> B_2n+2, append sigma_2n; inverted: undo
};

struct Move {
  MoveKind kind;
  int pos = 0;         // letter index for FreeCancel/Coxeter/FarCommute
  int gen_id = 0;      // K generator id for KLeft/KRight
  int insert_gen = 0;  // letter inserted by inverted FreeCancel
  bool inverted = false;
};

// Generators of Birman's subgroup K_2n as words: id 0 = sigma_1,
// id 1 = sigma_2 sigma_1^2 sigma_2, id k+1 = sigma_2k sigma_2k-1
// sigma_2k+1 sigma_2k for 1 <= k <= n-1.
std::vector<std::vector<int>> k_generators(int strands);

BraidWord apply_move(const BraidWord& w, const Move& m);

// The move undoing `m` when applied right after it.
Move inverse_move(const Move& m, const BraidWord& before);

// One move per line: COXETER <pos>, FARCOMM <pos>, CANCEL <pos>,
// INSERT <pos> <g>, KLEFT <gen-id>, KRIGHT <gen-id>, STAB.
std::vector<Move> parse_move_script(std::string_view text);
std::string format_move(const Move& m);

enum class StrandDir { Up, Down };

// Plat closure bookkeeping for an even-strand braid: caps at positions
// (2j-1, 2j) on both ends, link components, and per-strand orientations
// obtained by traversing each component once, seeded at its lowest strand
// pointing up.
struct PlatStructure {
  int strands = 0;
  std::vector<std::pair<int, int>> top_pairs;
  std::vector<std::pair<int, int>> bottom_pairs;  // positions at t = 1
  std::vector<int> strand_at_bottom;              // [pos-1] = strand label
  std::vector<StrandDir> orientation;             // per strand, 0-indexed
  std::vector<int> component;                     // per strand, 0-indexed ids
  int component_count = 0;
};

PlatStructure plat_structure(const BraidWord& w);

}  // namespace secantq
