#include "secantq/finite_quandle.hpp"

#include "secantq/errors.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

namespace secantq {

namespace {

std::vector<int> derive_inverse(int m, const std::vector<int>& op,
                                const std::string& name) {
  std::vector<int> inv(m * m, -1);
  for (int b = 0; b < m; ++b) {
    for (int a = 0; a < m; ++a) {
      int r = op[a * m + b];
      if (r < 0 || r >= m)
        throw AxiomError(name + ": table entry out of range");
      if (inv[r * m + b] != -1)
        throw AxiomError(name + ": column " + std::to_string(b) +
                         " is not a bijection");
      inv[r * m + b] = a;
    }
  }
  return inv;
}

}  // namespace

FiniteQuandle dihedral_quandle(int m) {
  if (m < 1) throw AxiomError("dihedral quandle needs m >= 1");
  FiniteQuandle q;
  q.size = m;
  q.name = "dihedral:" + std::to_string(m);
  q.op.resize(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) q.op[a * m + b] = ((2 * b - a) % m + m) % m;
  q.inv = q.op;  // involutory
  return q;
}

FiniteQuandle trivial_quandle(int m) {
  if (m < 1) throw AxiomError("trivial quandle needs m >= 1");
  FiniteQuandle q;
  q.size = m;
  q.name = "trivial:" + std::to_string(m);
  q.op.resize(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) q.op[a * m + b] = a;
  q.inv = q.op;
  return q;
}

FiniteQuandle quandle_from_table(int m, std::vector<int> op,
                                 std::string name) {
  if (m < 1 || static_cast<int>(op.size()) != m * m)
    throw AxiomError(name + ": bad table size");
  FiniteQuandle q;
  q.size = m;
  q.name = std::move(name);
  q.inv = derive_inverse(m, op, q.name);
  q.op = std::move(op);
  return q;
}

FiniteQuandle load_quandle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SqError("cannot open quandle file '" + path + "'");
  int m = 0;
  if (!(in >> m) || m < 1)
    throw AxiomError(path + ": bad size line");
  std::vector<int> op(m * m);
  for (int& v : op)
    if (!(in >> v)) throw AxiomError(path + ": truncated table");
  return quandle_from_table(m, std::move(op), path);
}

FiniteQuandle parse_quandle_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string head = spec.substr(0, colon);
    if (head == "dihedral" || head == "trivial") {
      int m = 0;
      try {
        m = std::stoi(spec.substr(colon + 1));
      } catch (const std::exception&) {
        throw SqError("bad quandle spec '" + spec + "'");
      }
      return head == "dihedral" ? dihedral_quandle(m) : trivial_quandle(m);
    }
  }
  return load_quandle_file(spec);
}

AxiomReport verify_axioms(const FiniteQuandle& q) {
  AxiomReport report;
  int m = q.size;
  auto fail = [&report](std::string msg) {
    report.pass = false;
    report.violation = std::move(msg);
    return report;
  };
  for (int a = 0; a < m; ++a)
    if (q.at(a, a) != a)
      return fail("idempotence fails at a=" + std::to_string(a));
  for (int b = 0; b < m; ++b) {
    std::vector<char> hit(m, 0);
    for (int a = 0; a < m; ++a) {
      int r = q.at(a, b);
      if (r < 0 || r >= m || hit[r])
        return fail("column b=" + std::to_string(b) + " is not a bijection");
      hit[r] = 1;
      if (q.div(r, b) != a)
        return fail("div is not the inverse at a=" + std::to_string(a) +
                    " b=" + std::to_string(b));
    }
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (q.at(q.at(a, b), c) != q.at(q.at(a, c), q.at(b, c)))
          return fail("self-distributivity fails at (" + std::to_string(a) +
                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
  return report;
}

namespace {

struct ColoringSearch {
  const FiniteQuandle& q;
  std::map<int, int> rep_slot;      // canonical rep -> dense slot
  std::vector<int> e_slots;         // slots of canonical E members
  struct DenseRel {
    int target, left, right;
    bool conj;
  };
  std::vector<DenseRel> rels;
  std::vector<int> base_slots;      // assignment order
  std::vector<int> color;           // per slot, -1 unset
  long long count = 0;
  long long nodes = 0;

  explicit ColoringSearch(const QuandlePresentation& p, const FiniteQuandle& q)
      : q(q) {
    for (int rep : p.generators())
      rep_slot.emplace(rep, static_cast<int>(rep_slot.size()));
    for (const Relation& r : p.relations)
      rels.push_back({rep_slot.at(p.canonical(r.target)),
                      rep_slot.at(p.canonical(r.left)),
                      rep_slot.at(p.canonical(r.right)), r.op == QOp::Conj});
    std::map<int, int> degree;
    for (const DenseRel& r : rels) {
      degree[r.left]++;
      degree[r.right]++;
    }
    std::vector<char> in_e(rep_slot.size(), 0);
    for (int e : p.e_set) {
      int slot = rep_slot.at(p.canonical(e));
      if (!in_e[slot]) {
        in_e[slot] = 1;
        e_slots.push_back(slot);
        degree[slot] += 8;  // e-constraints prune hardest; assign early
      }
    }
    for (int rep : p.base_generators()) base_slots.push_back(rep_slot.at(rep));
    std::stable_sort(base_slots.begin(), base_slots.end(),
                     [&degree](int a, int b) { return degree[a] > degree[b]; });
    color.assign(rep_slot.size(), -1);
  }

  bool e_ok(int slot) {
    // a o e = a for every generator a; check the pairs this slot completes.
    for (int e : e_slots) {
      if (color[e] < 0) continue;
      if (q.at(color[slot], color[e]) != color[slot]) return false;
    }
    if (std::find(e_slots.begin(), e_slots.end(), slot) != e_slots.end())
      for (size_t s = 0; s < color.size(); ++s)
        if (color[s] >= 0 && q.at(color[s], color[slot]) != color[s])
          return false;
    return true;
  }

  // Fire relations until stable; returns the slots newly colored, or
  // nullopt on conflict.
  bool propagate(std::vector<int>& touched) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (const DenseRel& r : rels) {
        if (color[r.left] < 0 || color[r.right] < 0) continue;
        int v = r.conj ? q.at(color[r.left], color[r.right])
                       : q.div(color[r.left], color[r.right]);
        if (color[r.target] < 0) {
          color[r.target] = v;
          if (!e_ok(r.target)) return false;
          touched.push_back(r.target);
          progress = true;
        } else if (color[r.target] != v) {
          return false;
        }
      }
    }
    return true;
  }

  // Next branch variable: unassigned base generators first, then any class
  // still uncolored (identifications can close definition cycles, so
  // propagation alone need not reach everything).
  int pick_slot() const {
    for (int base : base_slots)
      if (color[base] < 0) return base;
    for (size_t s = 0; s < color.size(); ++s)
      if (color[s] < 0) return static_cast<int>(s);
    return -1;
  }

  void dfs(size_t depth) {
    int slot = pick_slot(depth);
    if (slot < 0) {
      count++;
      return;
    }
    for (int v = 0; v < q.size; ++v) {
      nodes++;
      color[slot] = v;
      std::vector<int> touched;
      if (e_ok(slot) && propagate(touched)) dfs(depth + 1);
      for (int t : touched) color[t] = -1;
      color[slot] = -1;
    }
  }
};

}  // namespace

ColoringReport count_colorings(const QuandlePresentation& p,
                               const FiniteQuandle& q) {
  AxiomReport axioms = verify_axioms(q);
  if (!axioms.pass)
    throw AxiomError(q.name + ": " + axioms.violation);
  auto start = std::chrono::steady_clock::now();
  ColoringSearch search(p, q);
  search.dfs(0);
  auto stop = std::chrono::steady_clock::now();
  ColoringReport report;
  report.quandle = q.name;
  report.count = search.count;
  report.search_nodes = search.nodes;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

}  // namespace secantq
