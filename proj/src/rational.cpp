#include "chull/rational.hpp"

#include <cctype>
#include <cmath>

#include "chull/error.hpp"

namespace chull {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::DegenerateSpec: return "DegenerateSpec";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotInInvariantRing: return "NotInInvariantRing";
    case ErrorCode::ZeroDeterminant: return "ZeroDeterminant";
    case ErrorCode::NonPrincipal: return "NonPrincipal";
    case ErrorCode::DegeneratePencil: return "DegeneratePencil";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ChartFailure: return "ChartFailure";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
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
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'", 1, 1);
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 1, 1);
  Rational q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_double_exact(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite double");
  Rational q(v);
  q.canonicalize();
  return q;
}

}  // namespace chull
