#include "wreath/rational.hpp"

#include <cctype>

#include "wreath/error.hpp"

namespace wreath {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroEvaluationPoint: return "ZeroEvaluationPoint";
    case ErrorKind::WrongGrading: return "WrongGrading";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NoRadical: return "NoRadical";
    case ErrorKind::NotEulerian: return "NotEulerian";
    case ErrorKind::NotRadical: return "NotRadical";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::BadDenominator: return "BadDenominator";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (s.starts_with(kUnicodeMinus)) {
    negative = true;
    s.remove_prefix(kUnicodeMinus.size());
  } else if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::InvalidInput, "not a rational: '" + std::string(text) + "'");

  Integer n{std::string(num)}, dd{std::string(den)};
  if (dd == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, dd);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer floor_div(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace wreath
