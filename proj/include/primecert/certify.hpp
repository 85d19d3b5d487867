#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "primecert/expr.hpp"

namespace primecert {

enum class Relation { less, less_equal, greater, greater_equal };
enum class CertStatus { proved, refuted, undecided };

std::string_view to_string(Relation r);
std::string_view to_string(CertStatus s);

/// Verdict on `lhs rel rhs`. The margin encloses rhs - lhs for < and <=,
/// lhs - rhs for > and >=, so a positive margin always means "holds".
struct Certificate {
  std::string claim;
  CertStatus status = CertStatus::undecided;
  Enclosure margin;
  long precision_used = 0;
  std::vector<std::string> notes;

  bool proved() const { return status == CertStatus::proved; }
  bool refuted() const { return status == CertStatus::refuted; }
};

inline constexpr long kDefaultMaxPrecision = 512;

/// Status of a relation given an enclosure of its margin.
///
/// Strict relations are proved by a margin certified > 0 and refuted by one
/// certified <= 0 (a point margin of exactly 0 refutes). Non-strict relations
/// are proved by a margin certified >= 0, which includes exact equality, and
/// refuted by one certified < 0. Anything else is undecided.
CertStatus classify(Relation rel, const Enclosure& margin);

/// Evaluates both sides at precisions 64, 128, 256, ... up to max_precision
/// until the margin's sign is certified. Never reports proved on overlap.
Certificate certify(const Expr& lhs, Relation rel, const Expr& rhs,
                    long max_precision = kDefaultMaxPrecision);

}  // namespace primecert
