#include "ykm/lietype.hpp"

#include <cctype>
#include <cstdlib>

namespace ykm {

LieType make_type(Series s, int rank) {
  switch (s) {
    case Series::A:
      if (rank < 1) fail(errc::unsupported_rank, "a-series rank must be >= 1");
      break;
    case Series::B:
      if (rank < 2) fail(errc::unsupported_rank, "b-series rank must be >= 2 (so3 = a1)");
      break;
    case Series::C:
      if (rank < 2) fail(errc::unsupported_rank, "c-series rank must be >= 2 (sp2 = a1)");
      break;
    case Series::D:
      if (rank < 3) fail(errc::unsupported_rank, "d-series rank must be >= 3 (so4 is not simple)");
      break;
    case Series::E:
      if (rank < 6 || rank > 8) fail(errc::unsupported_rank, "e-series rank must be 6, 7 or 8");
      break;
    case Series::F:
      if (rank != 4) fail(errc::unsupported_rank, "f-series rank must be 4");
      break;
    case Series::G:
      if (rank != 2) fail(errc::unsupported_rank, "g-series rank must be 2");
      break;
  }
  return LieType{s, rank};
}

LieType parse_type(const std::string& s) {
  if (s.size() < 2) fail(errc::parse_error, "bad Lie type: " + s);
  std::string head;
  size_t i = 0;
  while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) head += static_cast<char>(std::tolower(s[i])), ++i;
  if (i == s.size()) fail(errc::parse_error, "bad Lie type: " + s);
  long n = std::strtol(s.c_str() + i, nullptr, 10);
  if (n <= 0) fail(errc::parse_error, "bad Lie type: " + s);

  if (head == "a") return make_type(Series::A, static_cast<int>(n));
  if (head == "b") return make_type(Series::B, static_cast<int>(n));
  if (head == "c") return make_type(Series::C, static_cast<int>(n));
  if (head == "d") return make_type(Series::D, static_cast<int>(n));
  if (head == "e") return make_type(Series::E, static_cast<int>(n));
  if (head == "f") return make_type(Series::F, static_cast<int>(n));
  if (head == "g") return make_type(Series::G, static_cast<int>(n));
  if (head == "su") {
    if (n < 2) fail(errc::unsupported_rank, "su(N) needs N >= 2");
    return make_type(Series::A, static_cast<int>(n - 1));
  }
  if (head == "sp") {
    if (n < 2 || n % 2 != 0) fail(errc::unsupported_rank, "sp(N) needs even N >= 2");
    if (n == 2) return make_type(Series::A, 1);
    return make_type(Series::C, static_cast<int>(n / 2));
  }
  if (head == "so") {
    if (n == 3) return make_type(Series::A, 1);
    if (n < 5) fail(errc::unsupported_rank, "so(N) is not simple for N < 5 except so(3)");
    if (n % 2 == 1) return make_type(Series::B, static_cast<int>((n - 1) / 2));
    return make_type(Series::D, static_cast<int>(n / 2));
  }
  fail(errc::parse_error, "bad Lie type: " + s);
}

std::string type_name(const LieType& t) {
  std::string s(1, static_cast<char>(std::tolower(static_cast<char>(t.series))));
  return s + std::to_string(t.rank);
}

std::string type_display(const LieType& t) {
  switch (t.series) {
    case Series::A: return "su" + std::to_string(t.rank + 1);
    case Series::B: return "so" + std::to_string(2 * t.rank + 1);
    case Series::C: return "sp" + std::to_string(2 * t.rank);
    case Series::D: return "so" + std::to_string(2 * t.rank);
    default: return type_name(t);
  }
}

long type_dim(const LieType& t) {
  long n = t.rank;
  switch (t.series) {
    case Series::A: return n * (n + 2);
    case Series::B: return n * (2 * n + 1);
    case Series::C: return n * (2 * n + 1);
    case Series::D: return n * (2 * n - 1);
    case Series::E: return t.rank == 6 ? 78 : (t.rank == 7 ? 133 : 248);
    case Series::F: return 52;
    case Series::G: return 14;
  }
  return 0;
}

long dual_coxeter(const LieType& t) {
  long n = t.rank;
  switch (t.series) {
    case Series::A: return n + 1;
    case Series::B: return 2 * n - 1;
    case Series::C: return n + 1;
    case Series::D: return 2 * n - 2;
    case Series::E: return t.rank == 6 ? 12 : (t.rank == 7 ? 18 : 30);
    case Series::F: return 9;
    case Series::G: return 4;
  }
  return 0;
}

}  // namespace ykm
