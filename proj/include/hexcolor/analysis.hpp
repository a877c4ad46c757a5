#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hexcolor/geometry.hpp"
#include "hexcolor/optimizer.hpp"
#include "hexcolor/rational.hpp"

namespace hexcolor {

/// One row of the reference table.
struct ReferenceRow {
  int k = 0;
  int i1 = 0;
  int j1 = 0;
  int i2 = 0;
  int j2 = 0;
  HexClass class_of_best = HexClass::regular;
  std::optional<Fraction> dsq_rational;
  std::optional<Fraction> r_rational;
  double d_approx = 0.0;
  bool record = false;
};

inline constexpr std::string_view kReferenceHeader = "k,i1,j1,i2,j2,class,dsq_num,dsq_den,r_num,r_den,d_approx,record";

/// Rows ordered by k.  Throws ReferenceFormatError on a bad header, a
/// malformed field, a duplicate k, k != i1 j2 - i2 j1, or a rational d^2
/// whose root differs from d_approx by more than 5e-6.
std::vector<ReferenceRow> parse_reference(std::istream& in);
std::vector<ReferenceRow> parse_reference(std::string_view text);
std::vector<ReferenceRow> load_reference(const std::string& path);

/// The bundled table, k = 3..175.
const std::vector<ReferenceRow>& embedded_reference();
/// Raw CSV text of the bundled table.
std::string_view embedded_reference_csv();

const ReferenceRow* find_row(const std::vector<ReferenceRow>& table, int k);

enum class Classification { rational, cubic_f, quartic, unknown };
std::string_view to_string(Classification c);

/// cubic_f and quartic are checked first (within 1e-7), then an exact
/// rational d^2 is sought; anything else is unknown.
Classification classify(const SolveResult& result);
Classification classify(int k, double dsq);

enum class ComparisonStatus { match, below_reference, above_reference };
std::string_view to_string(ComparisonStatus s);

struct ComparisonEntry {
  int k = 0;
  double d = 0.0;
  double reference = 0.0;
  double delta = 0.0;
  ComparisonStatus status = ComparisonStatus::match;
};

struct ComparisonReport {
  std::vector<ComparisonEntry> entries;
  double worst_abs_delta = 0.0;

  int count(ComparisonStatus s) const;
  bool all_match() const { return count(ComparisonStatus::match) == static_cast<int>(entries.size()); }
};

inline constexpr double kReferenceTolerance = 1e-4;

/// Compares each result's d with the reference row of the same k.  Throws
/// MissingRowError when a k has no row.
ComparisonReport compare_reference(const std::vector<SolveResult>& results, const std::vector<ReferenceRow>& table,
                                   double tol = kReferenceTolerance);

struct MonotonicityViolation {
  int k = 0;
  int n = 0;
  double d_k = 0.0;
  double d_prev = 0.0;

  friend bool operator==(const MonotonicityViolation&, const MonotonicityViolation&) = default;
};

/// Every (k, n) with n in {1, 2, 3} and d(k) < d(k - n) - 1e-9, followed by
/// (k, n) for the largest such n whenever it exceeds 3.  Ordered by k, then n.
std::vector<MonotonicityViolation> monotonicity_report(const std::map<int, double>& d);

std::map<int, double> reference_distances(const std::vector<ReferenceRow>& table);

}  // namespace hexcolor
