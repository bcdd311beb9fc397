#pragma once

#include <string>
#include <vector>

#include "ykm/errors.hpp"

namespace ykm {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A simple Lie type in the classical series A,B,C,D or exceptional E6..G2.
// Rank constraints: A >= 1, B,C >= 2, D >= 3; low-rank orthogonal/symplectic
// algebras are resolved to their classical aliases at parse time
// (so3 -> a1, so4 is not simple, sp2 -> a1).
struct LieType {
  Series series;
  int rank;

  bool operator==(const LieType& o) const { return series == o.series && rank == o.rank; }
  bool operator!=(const LieType& o) const { return !(*this == o); }
  bool operator<(const LieType& o) const {
    if (series != o.series) return series < o.series;
    return rank < o.rank;
  }
};

LieType make_type(Series s, int rank);  // validates rank
LieType parse_type(const std::string& s);  // "a5", "so10", "sp6", "e6", "f4", "g2", "d5", ...
std::string type_name(const LieType& t);   // canonical short form: "a5", "b4", ..., "e6"
std::string type_display(const LieType& t);  // "su6", "so9", "sp8", "e6", ...

long type_dim(const LieType& t);       // dimension of the algebra
long dual_coxeter(const LieType& t);   // h^vee

}  // namespace ykm
