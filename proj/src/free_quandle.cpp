#include "secantq/free_quandle.hpp"

#include "secantq/errors.hpp"

#include <sstream>

namespace secantq {

GroupWord reduced_concat(const GroupWord& u, const GroupWord& v) {
  GroupWord out = u;
  for (const GroupLetter& l : v) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

GroupWord group_inverse(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (GroupLetter& l : out) l.sign = -l.sign;
  return out;
}

namespace {

void strip_base_prefix(FreeQuandleWord& w) {
  size_t skip = 0;
  while (skip < w.conjugator.size() && w.conjugator[skip].gen == w.base)
    ++skip;
  if (skip > 0)
    w.conjugator.erase(w.conjugator.begin(), w.conjugator.begin() + skip);
}

}  // namespace

FreeQuandleWord fq_generator(int id) { return {id, {}}; }

FreeQuandleWord fq_op(const FreeQuandleWord& a, const FreeQuandleWord& b,
                      QOp op) {
  // elt(b) = v^-1 y v; extend a's conjugator by elt(b) or its inverse.
  GroupWord elt = reduced_concat(
      group_inverse(b.conjugator),
      reduced_concat({{b.base, op == QOp::Conj ? 1 : -1}}, b.conjugator));
  FreeQuandleWord out;
  out.base = a.base;
  out.conjugator = reduced_concat(a.conjugator, elt);
  strip_base_prefix(out);
  return out;
}

GroupWord to_group_word(const FreeQuandleWord& w) {
  return reduced_concat(group_inverse(w.conjugator),
                        reduced_concat({{w.base, 1}}, w.conjugator));
}

std::string to_string(const FreeQuandleWord& w) {
  std::ostringstream os;
  os << "g" << w.base;
  for (const GroupLetter& l : w.conjugator)
    os << " g" << l.gen << (l.sign > 0 ? "+" : "-");
  return os.str();
}

FreeQuandleWord parse_fq_word(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tok;
  FreeQuandleWord w;
  bool first = true;
  while (is >> tok) {
    if (tok.size() < 2 || tok[0] != 'g')
      throw SyntaxError("bad quandle word token '" + tok + "'");
    if (first) {
      w.base = std::stoi(tok.substr(1));
      first = false;
      continue;
    }
    char suffix = tok.back();
    if (suffix != '+' && suffix != '-')
      throw SyntaxError("conjugator letter needs +/-: '" + tok + "'");
    int gen = std::stoi(tok.substr(1, tok.size() - 2));
    w.conjugator.push_back({gen, suffix == '+' ? 1 : -1});
  }
  if (first) throw SyntaxError("empty quandle word");
  w.conjugator = reduced_concat({}, w.conjugator);
  strip_base_prefix(w);
  return w;
}

}  // namespace secantq
