#include "hexcolor/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "hexcolor/errors.hpp"
#include "hexcolor/evaluator.hpp"

namespace hexcolor {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw ReferenceFormatError("reference line " + std::to_string(line_no) + ": " + msg);
}

template <typename T>
T parse_number(std::string_view field, int line_no, const char* name) {
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || field.empty()) fail(line_no, std::string("bad ") + name);
  return value;
}

std::optional<Fraction> parse_fraction(std::string_view num, std::string_view den, int line_no, const char* name) {
  if (num.empty() && den.empty()) return std::nullopt;
  if (num.empty() || den.empty()) fail(line_no, std::string("incomplete ") + name);
  const auto n = parse_number<std::int64_t>(num, line_no, name);
  const auto d = parse_number<std::int64_t>(den, line_no, name);
  if (d <= 0) fail(line_no, std::string("nonpositive denominator in ") + name);
  return Fraction(n, d);
}

ReferenceRow parse_row(std::string_view line, int line_no) {
  const auto f = split(line, ',');
  if (f.size() != 12) fail(line_no, "expected 12 fields");
  std::array<std::string_view, 12> v;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = trim(f[i]);

  ReferenceRow row;
  row.k = parse_number<int>(v[0], line_no, "k");
  row.i1 = parse_number<int>(v[1], line_no, "i1");
  row.j1 = parse_number<int>(v[2], line_no, "j1");
  row.i2 = parse_number<int>(v[3], line_no, "i2");
  row.j2 = parse_number<int>(v[4], line_no, "j2");
  try {
    row.class_of_best = hex_class_from_string(v[5]);
  } catch (const DomainError&) {
    fail(line_no, "unknown class");
  }
  row.dsq_rational = parse_fraction(v[6], v[7], line_no, "dsq");
  row.r_rational = parse_fraction(v[8], v[9], line_no, "r");
  row.d_approx = parse_number<double>(v[10], line_no, "d_approx");
  if (v[11] != "0" && v[11] != "1") fail(line_no, "record must be 0 or 1");
  row.record = v[11] == "1";

  if (row.k < 1) fail(line_no, "k must be positive");
  const long long det = static_cast<long long>(row.i1) * row.j2 - static_cast<long long>(row.i2) * row.j1;
  if (det != row.k) fail(line_no, "determinant does not equal k");
  if (row.dsq_rational && std::abs(std::sqrt(row.dsq_rational->value()) - row.d_approx) > 5e-6) {
    fail(line_no, "d_approx disagrees with dsq");
  }
  return row;
}

}  // namespace

std::vector<ReferenceRow> parse_reference(std::istream& in) {
  std::vector<ReferenceRow> rows;
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty()) continue;
    if (!header) {
      if (t != kReferenceHeader) fail(line_no, "unexpected header");
      header = true;
      continue;
    }
    rows.push_back(parse_row(t, line_no));
  }
  if (!header) throw ReferenceFormatError("reference is empty");
  std::stable_sort(rows.begin(), rows.end(), [](const ReferenceRow& a, const ReferenceRow& b) { return a.k < b.k; });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].k == rows[i - 1].k) throw ReferenceFormatError("duplicate row for k=" + std::to_string(rows[i].k));
  }
  return rows;
}

std::vector<ReferenceRow> parse_reference(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_reference(in);
}

std::vector<ReferenceRow> load_reference(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open reference file: " + path);
  return parse_reference(in);
}

const std::vector<ReferenceRow>& embedded_reference() {
  static const std::vector<ReferenceRow> rows = parse_reference(embedded_reference_csv());
  return rows;
}

const ReferenceRow* find_row(const std::vector<ReferenceRow>& table, int k) {
  const auto it = std::lower_bound(table.begin(), table.end(), k, [](const ReferenceRow& r, int key) { return r.k < key; });
  return it != table.end() && it->k == k ? &*it : nullptr;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::rational: return "rational";
    case Classification::cubic_f: return "cubic_f";
    case Classification::quartic: return "quartic";
    case Classification::unknown: return "unknown";
  }
  return "unknown";
}

Classification classify(int k, double dsq) {
  constexpr double tol = 1e-7;
  if (pronic_index(k).value_or(0) >= 2) {
    try {
      if (std::abs(cubic_f(k).dsq - dsq) < tol) return Classification::cubic_f;
    } catch (const DomainError&) {
    }
  }
  if (has_quartic(k) && std::abs(quartic_dsq(k) - dsq) < tol) return Classification::quartic;
  if (recover_exact_rational(dsq)) return Classification::rational;
  return Classification::unknown;
}

Classification classify(const SolveResult& result) { return classify(result.k, result.dsq); }

std::string_view to_string(ComparisonStatus s) {
  switch (s) {
    case ComparisonStatus::match: return "match";
    case ComparisonStatus::below_reference: return "below_reference";
    case ComparisonStatus::above_reference: return "above_reference";
  }
  return "match";
}

int ComparisonReport::count(ComparisonStatus s) const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [s](const ComparisonEntry& e) { return e.status == s; }));
}

ComparisonReport compare_reference(const std::vector<SolveResult>& results, const std::vector<ReferenceRow>& table,
                                   double tol) {
  ComparisonReport report;
  for (const auto& res : results) {
    const ReferenceRow* row = find_row(table, res.k);
    if (row == nullptr) throw MissingRowError("no reference row for k=" + std::to_string(res.k));
    ComparisonEntry e;
    e.k = res.k;
    e.d = res.d;
    e.reference = row->d_approx;
    e.delta = res.d - row->d_approx;
    if (e.delta < -tol) {
      e.status = ComparisonStatus::below_reference;
    } else if (e.delta > tol) {
      e.status = ComparisonStatus::above_reference;
    }
    report.worst_abs_delta = std::max(report.worst_abs_delta, std::abs(e.delta));
    report.entries.push_back(e);
  }
  return report;
}

std::vector<MonotonicityViolation> monotonicity_report(const std::map<int, double>& d) {
  constexpr double eps = 1e-9;
  std::vector<MonotonicityViolation> out;
  for (const auto& [k, dk] : d) {
    for (int n = 1; n <= 3; ++n) {
      const auto prev = d.find(k - n);
      if (prev != d.end() && dk < prev->second - eps) out.push_back({k, n, dk, prev->second});
    }
    for (auto it = d.begin(); it != d.end() && it->first < k - 3; ++it) {
      if (dk < it->second - eps) {
        out.push_back({k, k - it->first, dk, it->second});
        break;
      }
    }
  }
  return out;
}

std::map<int, double> reference_distances(const std::vector<ReferenceRow>& table) {
  std::map<int, double> out;
  for (const auto& row : table) out.emplace(row.k, row.d_approx);
  return out;
}

}  // namespace hexcolor
