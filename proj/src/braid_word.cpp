#include "secantq/braid_word.hpp"

#include "secantq/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace secantq {

void validate(const BraidWord& w) {
  if (w.strands < 1) throw OutOfRangeError("strand count must be positive");
  for (int g : w.letters) {
    if (g == 0) throw OutOfRangeError("generator 0 does not exist");
    if (std::abs(g) > w.strands - 1)
      throw OutOfRangeError("generator " + std::to_string(g) +
                            " out of range for " + std::to_string(w.strands) +
                            " strands");
  }
}

BraidWord parse_braid_word(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw SyntaxError("expected 'n: g1 g2 ...'");
  BraidWord w;
  {
    std::istringstream head{std::string(text.substr(0, colon))};
    if (!(head >> w.strands)) throw SyntaxError("bad strand count");
    std::string rest;
    if (head >> rest) throw SyntaxError("junk before ':'");
  }
  std::istringstream body{std::string(text.substr(colon + 1))};
  std::string tok;
  while (body >> tok) {
    size_t used = 0;
    int g = 0;
    try {
      g = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw SyntaxError("bad generator '" + tok + "'");
    }
    if (used != tok.size()) throw SyntaxError("bad generator '" + tok + "'");
    w.letters.push_back(g);
  }
  validate(w);
  return w;
}

std::string format_braid_word(const BraidWord& w) {
  std::ostringstream os;
  os << w.strands << ":";
  for (int g : w.letters) os << " " << g;
  return os.str();
}

std::vector<int> braid_permutation(const BraidWord& w) {
  std::vector<int> slot_of(w.strands);
  std::iota(slot_of.begin(), slot_of.end(), 1);
  // slot_of is indexed by strand-1; swap occupants of slots i, i+1.
  std::vector<int> strand_at(w.strands);
  std::iota(strand_at.begin(), strand_at.end(), 1);
  for (int g : w.letters) {
    int i = std::abs(g);
    std::swap(strand_at[i - 1], strand_at[i]);
  }
  std::vector<int> perm(w.strands);
  for (int slot = 1; slot <= w.strands; ++slot)
    perm[strand_at[slot - 1] - 1] = slot;
  return perm;
}

std::vector<std::vector<int>> k_generators(int strands) {
  if (strands % 2 != 0)
    throw ParityError("K generators need an even strand count");
  std::vector<std::vector<int>> gens;
  gens.push_back({1});
  if (strands >= 4) gens.push_back({2, 1, 1, 2});
  for (int k = 1; 2 * k + 1 <= strands - 1; ++k)
    gens.push_back({2 * k, 2 * k - 1, 2 * k + 1, 2 * k});
  return gens;
}

namespace {

std::vector<int> inverse_word(const std::vector<int>& word) {
  std::vector<int> out(word.rbegin(), word.rend());
  for (int& g : out) g = -g;
  return out;
}

void check_pos(const BraidWord& w, int pos, int span) {
  if (pos < 0 || pos + span > static_cast<int>(w.letters.size()))
    throw NotApplicableError("position " + std::to_string(pos) +
                             " out of range");
}

}  // namespace

BraidWord apply_move(const BraidWord& w, const Move& m) {
  validate(w);
  BraidWord out = w;
  switch (m.kind) {
    case MoveKind::FreeCancel: {
      if (m.inverted) {
        if (m.pos < 0 || m.pos > static_cast<int>(w.letters.size()))
          throw NotApplicableError("insertion position out of range");
        if (m.insert_gen == 0 || std::abs(m.insert_gen) > w.strands - 1)
          throw NotApplicableError("insertion generator out of range");
        out.letters.insert(out.letters.begin() + m.pos, {m.insert_gen,
                                                         -m.insert_gen});
      } else {
        check_pos(w, m.pos, 2);
        if (w.letters[m.pos] != -w.letters[m.pos + 1])
          throw NotApplicableError("no canceling pair at position");
        out.letters.erase(out.letters.begin() + m.pos,
                          out.letters.begin() + m.pos + 2);
      }
      return out;
    }
    case MoveKind::Coxeter: {
      check_pos(w, m.pos, 3);
      int a = w.letters[m.pos], b = w.letters[m.pos + 1],
          c = w.letters[m.pos + 2];
      bool adjacent = std::abs(std::abs(a) - std::abs(b)) == 1;
      bool same_sign = (a > 0) == (b > 0);
      if (a != c || !adjacent || !same_sign)
        throw NotApplicableError("no Coxeter pattern at position");
      out.letters[m.pos] = b;
      out.letters[m.pos + 1] = a;
      out.letters[m.pos + 2] = b;
      return out;
    }
    case MoveKind::FarCommute: {
      check_pos(w, m.pos, 2);
      int a = w.letters[m.pos], b = w.letters[m.pos + 1];
      if (std::abs(std::abs(a) - std::abs(b)) < 2)
        throw NotApplicableError("letters are not far apart");
      std::swap(out.letters[m.pos], out.letters[m.pos + 1]);
      return out;
    }
    case MoveKind::KLeft:
    case MoveKind::KRight: {
      auto gens = k_generators(w.strands);  // throws ParityError when odd
      if (m.gen_id < 0 || m.gen_id >= static_cast<int>(gens.size()))
        throw NotApplicableError("K generator id out of range");
      std::vector<int> word = gens[m.gen_id];
      if (m.inverted) word = inverse_word(word);
      if (m.kind == MoveKind::KLeft)
        out.letters.insert(out.letters.begin(), word.begin(), word.end());
      else
        out.letters.insert(out.letters.end(), word.begin(), word.end());
      return out;
    }
    case MoveKind::PlatStabilize: {
      if (w.strands % 2 != 0)
        throw ParityError("plat stabilization needs an even strand count");
      if (!m.inverted) {
        out.strands = w.strands + 2;
        out.letters.push_back(w.strands);
        return out;
      }
      if (w.strands < 4 || w.letters.empty() ||
          w.letters.back() != w.strands - 2)
        throw NotApplicableError("word does not end in sigma_{2n}");
      for (size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (std::abs(w.letters[i]) > w.strands - 3)
          throw NotApplicableError("letters touch the last two strands");
      out.letters.pop_back();
      out.strands = w.strands - 2;
      return out;
    }
  }
  throw NotApplicableError("unknown move kind");
}

Move inverse_move(const Move& m, const BraidWord& before) {
  Move inv = m;
  switch (m.kind) {
    case MoveKind::Coxeter:
    case MoveKind::FarCommute:
      return inv;  // involutions
    case MoveKind::FreeCancel:
      inv.inverted = !m.inverted;
      if (!m.inverted) {
        check_pos(before, m.pos, 2);
        inv.insert_gen = before.letters[m.pos];
      }
      return inv;
    case MoveKind::KLeft:
    case MoveKind::KRight:
    case MoveKind::PlatStabilize:
      inv.inverted = !m.inverted;
      return inv;
  }
  throw NotApplicableError("unknown move kind");
}

std::vector<Move> parse_move_script(std::string_view text) {
  std::vector<Move> moves;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;  // blank line
    Move m{};
    if (op == "COXETER") {
      m.kind = MoveKind::Coxeter;
      if (!(ls >> m.pos)) throw SyntaxError("COXETER needs a position");
    } else if (op == "FARCOMM") {
      m.kind = MoveKind::FarCommute;
      if (!(ls >> m.pos)) throw SyntaxError("FARCOMM needs a position");
    } else if (op == "CANCEL") {
      m.kind = MoveKind::FreeCancel;
      if (!(ls >> m.pos)) throw SyntaxError("CANCEL needs a position");
    } else if (op == "INSERT") {
      m.kind = MoveKind::FreeCancel;
      m.inverted = true;
      if (!(ls >> m.pos >> m.insert_gen))
        throw SyntaxError("INSERT needs a position and a generator");
    } else if (op == "KLEFT") {
      m.kind = MoveKind::KLeft;
      if (!(ls >> m.gen_id)) throw SyntaxError("KLEFT needs a generator id");
    } else if (op == "KRIGHT") {
      m.kind = MoveKind::KRight;
      if (!(ls >> m.gen_id)) throw SyntaxError("KRIGHT needs a generator id");
    } else if (op == "STAB") {
      m.kind = MoveKind::PlatStabilize;
    } else {
      throw SyntaxError("unknown move '" + op + "'");
    }
    std::string rest;
    if (ls >> rest) throw SyntaxError("trailing junk on move line");
    moves.push_back(m);
  }
  return moves;
}

std::string format_move(const Move& m) {
  std::ostringstream os;
  switch (m.kind) {
    case MoveKind::Coxeter:
      os << "COXETER " << m.pos;
      break;
    case MoveKind::FarCommute:
      os << "FARCOMM " << m.pos;
      break;
    case MoveKind::FreeCancel:
      if (m.inverted)
        os << "INSERT " << m.pos << " " << m.insert_gen;
      else
        os << "CANCEL " << m.pos;
      break;
    case MoveKind::KLeft:
      os << "KLEFT " << m.gen_id << (m.inverted ? " (inverse)" : "");
      break;
    case MoveKind::KRight:
      os << "KRIGHT " << m.gen_id << (m.inverted ? " (inverse)" : "");
      break;
    case MoveKind::PlatStabilize:
      os << (m.inverted ? "STAB (inverse)" : "STAB");
      break;
  }
  return os.str();
}

PlatStructure plat_structure(const BraidWord& w) {
  validate(w);
  if (w.strands % 2 != 0)
    throw ParityError("plat closure needs an even strand count");
  PlatStructure plat;
  plat.strands = w.strands;
  int caps = w.strands / 2;
  for (int j = 1; j <= caps; ++j) {
    plat.top_pairs.emplace_back(2 * j - 1, 2 * j);
    plat.bottom_pairs.emplace_back(2 * j - 1, 2 * j);
  }
  std::vector<int> perm = braid_permutation(w);  // strand -> bottom position
  plat.strand_at_bottom.assign(w.strands, 0);
  for (int s = 1; s <= w.strands; ++s) plat.strand_at_bottom[perm[s - 1] - 1] = s;
  const std::vector<int>& strand_at_bottom = plat.strand_at_bottom;

  auto cap_partner = [](int pos) { return pos % 2 == 1 ? pos + 1 : pos - 1; };

  plat.orientation.assign(w.strands, StrandDir::Up);
  plat.component.assign(w.strands, -1);
  for (int seed = 1; seed <= w.strands; ++seed) {
    if (plat.component[seed - 1] >= 0) continue;
    int comp = plat.component_count++;
    int strand = seed;
    StrandDir dir = StrandDir::Up;
    do {
      plat.component[strand - 1] = comp;
      plat.orientation[strand - 1] = dir;
      if (dir == StrandDir::Up) {
        // Exits at the bottom; cross the bottom cap, come back up as Down.
        int pos = cap_partner(perm[strand - 1]);
        strand = strand_at_bottom[pos - 1];
      } else {
        // Exits at the top; strand label equals its top position.
        strand = cap_partner(strand);
      }
      dir = dir == StrandDir::Up ? StrandDir::Down : StrandDir::Up;
    } while (strand != seed || dir != StrandDir::Up);
  }
  return plat;
}

}  // namespace secantq
