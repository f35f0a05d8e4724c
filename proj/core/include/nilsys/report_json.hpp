#pragma once

#include "nilsys/bounds.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilsys {

/// Plain-data view of a BoundReport as it appears in JSON. Rationals travel
/// as "p" or "p/q" strings.
struct ReportData {
  struct ConstraintRow {
    Vector lhs;
    Rational rhs;
    std::string provenance;
  };
  struct Witness {
    Integer r;
    std::vector<Vector> basis;
    std::string systole;
    Rational covolume;
  };

  std::string name;
  std::size_t dim = 0;
  std::size_t nilpotency_class = 0;
  std::size_t D = 0;
  Rational k_c;
  Rational residual_girth;
  Rational kc_bound;
  Rational h_lower;
  Rational h_upper;
  Vector theta;
  std::vector<std::string> variables;
  std::vector<ConstraintRow> constraints;
  Vector dual;
  std::optional<Witness> lattice_witness;
  std::string carnot_verdict;
};

ReportData make_report_data(const BoundReport &r);

/// Canonical rendering: sorted keys, two-space indent, trailing newline.
std::string render_json(const ReportData &d);
/// Throws ParseError on malformed input.
ReportData parse_report_json(const std::string &text);

} // namespace nilsys
