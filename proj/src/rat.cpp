#include "qinterp/rat.hpp"

#include <cctype>

namespace qinterp {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotEmbedding: return "NotEmbedding";
    case ErrorKind::NotEpimorphism: return "NotEpimorphism";
    case ErrorKind::NotBump: return "NotBump";
    case ErrorKind::NotCofinal: return "NotCofinal";
    case ErrorKind::NotConjugate: return "NotConjugate";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::PinInconsistent: return "PinInconsistent";
    case ErrorKind::ActionMismatch: return "ActionMismatch";
    case ErrorKind::IterationBudgetExceeded: return "IterationBudgetExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NormalizationFailed: return "NormalizationFailed";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Int floor_rat(const Rat& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Int ceil_rat(const Rat& q) {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat parse_rat(const std::string& text) {
  // [+-]digits[/digits], denominator positive and nonzero
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto bad = [&](const std::string& why) {
    fail(ErrorKind::SyntaxError, "invalid rational '" + text + "': " + why);
  };
  if (n == 0) bad("empty");
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t num_start = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) bad("missing digits");
  std::string num = text.substr(0, i);
  std::string den = "1";
  if (i < n) {
    if (text[i] != '/') bad("unexpected character");
    ++i;
    std::size_t den_start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != n) bad("bad denominator");
    den = text.substr(den_start);
  }
  Int num_z(num), den_z(den);
  if (den_z == 0) bad("zero denominator");
  Rat r(num_z, den_z);
  r.canonicalize();
  return r;
}

int cmp(const ExtRat& a, const ExtRat& b) {
  auto rank = [](const ExtRat& e) {
    switch (e.kind) {
      case ExtRat::Kind::NegInf: return -1;
      case ExtRat::Kind::Finite: return 0;
      case ExtRat::Kind::PosInf: return 1;
    }
    return 0;
  };
  int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  if (ra != 0) return 0;
  return ::cmp(a.value, b.value);
}

std::string ext_str(const ExtRat& e) {
  switch (e.kind) {
    case ExtRat::Kind::NegInf: return "-inf";
    case ExtRat::Kind::PosInf: return "inf";
    case ExtRat::Kind::Finite: return rat_str(e.value);
  }
  return "?";
}

}  // namespace qinterp
