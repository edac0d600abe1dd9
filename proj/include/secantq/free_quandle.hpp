#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace secantq {

struct GroupLetter {
  int gen = 0;
  int sign = 1;  // +1 or -1
  bool operator==(const GroupLetter&) const = default;
};

// Freely reduced word in the free group on generator ids.
using GroupWord = std::vector<GroupLetter>;

GroupWord reduced_concat(const GroupWord& u, const GroupWord& v);
GroupWord group_inverse(const GroupWord& w);

enum class QOp { Conj, ConjInv };  // the two quandle operations

inline QOp opposite(QOp op) { return op == QOp::Conj ? QOp::ConjInv : QOp::Conj; }

// Element u^-1 x u of the conjugation quandle of the free group: `base` = x,
// `conjugator` = u, freely reduced and not starting with x^+-1 (that prefix
// commutes past the base). Equal elements have equal normal forms.
struct FreeQuandleWord {
  int base = 0;
  GroupWord conjugator;

  bool operator==(const FreeQuandleWord&) const = default;
};

FreeQuandleWord fq_generator(int id);

// a o b conjugates a's group element by b's; a / b by its inverse.
FreeQuandleWord fq_op(const FreeQuandleWord& a, const FreeQuandleWord& b,
                      QOp op);

// Full group word u^-1 x u, freely reduced.
GroupWord to_group_word(const FreeQuandleWord& w);

// "g<base>" followed by postfix conjugating letters "g<id>+" / "g<id>-".
std::string to_string(const FreeQuandleWord& w);
FreeQuandleWord parse_fq_word(std::string_view text);

}  // namespace secantq
