#include "primecert/certify.hpp"

#include <algorithm>

namespace primecert {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::less: return "<";
    case Relation::less_equal: return "<=";
    case Relation::greater: return ">";
    case Relation::greater_equal: return ">=";
  }
  return "?";
}

std::string_view to_string(CertStatus s) {
  switch (s) {
    case CertStatus::proved: return "proved";
    case CertStatus::refuted: return "refuted";
    case CertStatus::undecided: return "undecided";
  }
  return "?";
}

CertStatus classify(Relation rel, const Enclosure& margin) {
  const bool strict = rel == Relation::less || rel == Relation::greater;
  if (strict) {
    if (margin.lo().sign() > 0) return CertStatus::proved;
    if (margin.hi().sign() <= 0) return CertStatus::refuted;
  } else {
    if (margin.lo().sign() >= 0) return CertStatus::proved;
    if (margin.hi().sign() < 0) return CertStatus::refuted;
  }
  return CertStatus::undecided;
}

Certificate certify(const Expr& lhs, Relation rel, const Expr& rhs, long max_precision) {
  Certificate cert;
  cert.claim = lhs.str() + " " + std::string(to_string(rel)) + " " + rhs.str();
  const bool lhs_is_smaller = rel == Relation::less || rel == Relation::less_equal;

  long precision = std::min(64L, std::max(max_precision, 1L));
  for (;;) {
    Enclosure l = eval(lhs, precision);
    Enclosure r = eval(rhs, precision);
    const long bits = precision + 32;
    cert.margin = lhs_is_smaller ? interval::sub(r, l, bits) : interval::sub(l, r, bits);
    cert.precision_used = precision;
    cert.status = classify(rel, cert.margin);
    if (cert.status != CertStatus::undecided || precision >= max_precision) break;
    precision = std::min(precision * 2, max_precision);
  }
  return cert;
}

}  // namespace primecert
