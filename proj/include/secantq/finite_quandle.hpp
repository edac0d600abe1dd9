#pragma once

#include "secantq/presentation.hpp"

#include <string>
#include <vector>

namespace secantq {

// Operation tables of a finite quandle on {0, ..., size-1}. `inv` is the
// right inverse of `op` (column-wise), derived for loaded tables.
struct FiniteQuandle {
  int size = 0;
  std::vector<int> op;   // op[a*size + b] = a o b
  std::vector<int> inv;  // inv[a*size + b] = a / b
  std::string name;

  int at(int a, int b) const { return op[a * size + b]; }
  int div(int a, int b) const { return inv[a * size + b]; }
};

// a o b = (2b - a) mod m; involutory, so / coincides with o.
FiniteQuandle dihedral_quandle(int m);

// a o b = a for all a, b.
FiniteQuandle trivial_quandle(int m);

// Build from an explicit o-table; derives / by inverting columns, throws
// AxiomError when a column is not a bijection.
FiniteQuandle quandle_from_table(int m, std::vector<int> op, std::string name);

// File format: first line m, then m lines of m integers (0-based) for o.
FiniteQuandle load_quandle_file(const std::string& path);

// "dihedral:m", "trivial:m", or a table file path.
FiniteQuandle parse_quandle_spec(const std::string& spec);

struct AxiomReport {
  bool pass = true;
  std::string violation;
};

// Exhaustive check: idempotence, column bijectivity with / as inverse,
// self-distributivity. First violation is reported with witnesses.
AxiomReport verify_axioms(const FiniteQuandle& q);

struct ColoringReport {
  std::string quandle;
  long long count = 0;
  double elapsed_ms = 0.0;
  long long search_nodes = 0;
};

// Counts assignments of quandle elements to the presentation's base
// generators that propagate consistently through every relation, satisfy all
// identifications, and obey a o e = a for every generator a and e in E.
// Depth-first with immediate propagation and pruning.
ColoringReport count_colorings(const QuandlePresentation& p,
                               const FiniteQuandle& q);

}  // namespace secantq
