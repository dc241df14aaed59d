#pragma once

#include <gmpxx.h>

#include <string>

#include "qinterp/errors.hpp"

namespace qinterp {

// Exact arithmetic everywhere. Rat is always kept canonical by gmp:
// reduced, denominator positive.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Canonical "p/q" text, "p" when the denominator is 1.
std::string rat_str(const Rat& q);

// Strict parse of rat_str output plus optional '+' sign. Throws SyntaxError.
Rat parse_rat(const std::string& text);

// The rational line completed by the two endpoints.
struct ExtRat {
  enum class Kind { NegInf, Finite, PosInf };

  Kind kind = Kind::Finite;
  Rat value;  // meaningful only when finite

  ExtRat() = default;
  ExtRat(const Rat& v) : kind(Kind::Finite), value(v) {}

  static ExtRat neg_inf() {
    ExtRat e;
    e.kind = Kind::NegInf;
    return e;
  }
  static ExtRat pos_inf() {
    ExtRat e;
    e.kind = Kind::PosInf;
    return e;
  }

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_neg_inf() const { return kind == Kind::NegInf; }
  bool is_pos_inf() const { return kind == Kind::PosInf; }

  const Rat& finite() const {
    if (!is_finite()) fail(ErrorKind::Internal, "ExtRat not finite");
    return value;
  }
};

int cmp(const ExtRat& a, const ExtRat& b);

inline bool operator==(const ExtRat& a, const ExtRat& b) { return cmp(a, b) == 0; }
inline bool operator!=(const ExtRat& a, const ExtRat& b) { return cmp(a, b) != 0; }
inline bool operator<(const ExtRat& a, const ExtRat& b) { return cmp(a, b) < 0; }
inline bool operator<=(const ExtRat& a, const ExtRat& b) { return cmp(a, b) <= 0; }
inline bool operator>(const ExtRat& a, const ExtRat& b) { return cmp(a, b) > 0; }
inline bool operator>=(const ExtRat& a, const ExtRat& b) { return cmp(a, b) >= 0; }

std::string ext_str(const ExtRat& e);

}  // namespace qinterp
