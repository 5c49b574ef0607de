#include "gfano/mathieu.hpp"

#include "gfano/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace gfano {

namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError("bad Frame shape token in '" + std::string(whole) + "'");
  }
  return v;
}

ShapeTableEntry entry(std::string_view text, long order, long level, Rational weight) {
  return {parse_frame_shape(text), order, level, std::move(weight)};
}

}  // namespace

FrameShape::FrameShape(std::map<int, int> cycles) {
  for (const auto& [length, mult] : cycles) {
    if (length < 1) throw ParseError("cycle lengths must be positive");
    if (mult != 0) cycles_.emplace(length, mult);
  }
  if (cycles_.empty()) throw ParseError("empty Frame shape");
}

long FrameShape::order() const {
  long l = 1;
  for (const auto& [length, mult] : cycles_) l = std::lcm(l, static_cast<long>(length));
  return l;
}

int FrameShape::fixed_points() const {
  const auto it = cycles_.find(1);
  return it == cycles_.end() ? 0 : it->second;
}

Rational FrameShape::weight() const { return fraction(cycle_count(), 2); }

long FrameShape::level() const {
  long g = 0;
  for (const auto& [length, mult] : cycles_) g = std::gcd(g, static_cast<long>(length));
  return g * order();
}

int FrameShape::cycle_count() const {
  int s = 0;
  for (const auto& [length, mult] : cycles_) s += mult;
  return s;
}

long FrameShape::degree() const { return sigma1(cycles_); }

std::string FrameShape::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [length, mult] : cycles_) {
    if (!first) out << ' ';
    first = false;
    out << length << '^' << mult;
  }
  return out.str();
}

FrameShape parse_frame_shape(std::string_view text, ShapeKind kind) {
  std::map<int, int> cycles;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto caret = token.find('^');
    const std::string_view tv = token;
    const int length = parse_int(tv.substr(0, caret), text);
    const int mult = caret == std::string::npos ? 1 : parse_int(tv.substr(caret + 1), text);
    if (length < 1) throw ParseError("cycle lengths must be positive in '" + std::string(text) + "'");
    if (kind == ShapeKind::Permutation && mult < 1) {
      throw ParseError("permutation shapes need positive multiplicities: '" + std::string(text) + "'");
    }
    if (!cycles.emplace(length, mult).second) {
      throw ParseError("repeated cycle length " + std::to_string(length) + " in '" + std::string(text) + "'");
    }
  }
  if (cycles.empty()) throw ParseError("empty Frame shape");
  FrameShape shape(std::move(cycles));
  if (kind == ShapeKind::Permutation && shape.degree() != 24) {
    throw SumNot24("'" + std::string(text) + "' permutes " + std::to_string(shape.degree()) + " points, not 24");
  }
  return shape;
}

const std::vector<ShapeTableEntry>& m23_shapes() {
  static const std::vector<ShapeTableEntry> table{
      entry("1^24", 1, 1, 12),           entry("1^8 2^8", 2, 2, 8),        entry("1^6 3^6", 3, 3, 6),
      entry("1^4 2^2 4^4", 4, 4, 5),     entry("1^4 5^4", 5, 5, 4),        entry("1^2 2^2 3^2 6^2", 6, 6, 4),
      entry("1^3 7^3", 7, 7, 3),         entry("1^2 2^1 4^1 8^2", 8, 8, 3), entry("1^2 11^2", 11, 11, 2),
      entry("1^1 2^1 7^1 14^1", 14, 14, 2), entry("1^1 3^1 5^1 15^1", 15, 15, 2), entry("1^1 23^1", 23, 23, 1),
  };
  return table;
}

const std::vector<ShapeTableEntry>& m24_extra_shapes() {
  static const std::vector<ShapeTableEntry> table{
      entry("2^12", 2, 4, 6),       entry("3^8", 3, 9, 4),    entry("2^4 4^4", 4, 8, 4),
      entry("4^6", 4, 16, 3),       entry("6^4", 6, 36, 2),   entry("2^2 10^2", 10, 20, 2),
      entry("2^1 4^1 6^1 12^1", 12, 24, 2), entry("12^2", 12, 144, 1), entry("3^1 21^1", 21, 63, 1),
  };
  return table;
}

const std::vector<ShapeTableEntry>& s24_extra_shapes() {
  static const std::vector<ShapeTableEntry> table{
      entry("3^2 9^2", 9, 27, 2),   entry("4^2 8^2", 8, 32, 2),   entry("2^3 6^3", 6, 12, 3),
      entry("2^1 22^1", 22, 44, 1), entry("4^1 20^1", 20, 80, 1), entry("6^1 18^1", 18, 108, 1),
      entry("8^1 16^1", 16, 128, 1),
  };
  return table;
}

std::vector<ShapeTableEntry> m24_shapes() {
  std::vector<ShapeTableEntry> all = m23_shapes();
  const auto& extra = m24_extra_shapes();
  all.insert(all.end(), extra.begin(), extra.end());
  return all;
}

Rational phi(long n) {
  Rational r = n;
  for (long p : prime_factors(n)) r *= Rational(p - 1, p);
  return r;
}

Rational psi(long n) {
  Rational r = n;
  for (long p : prime_factors(n)) r *= Rational(p + 1, p);
  return r;
}

Rational epsilon(long n) { return 24 / psi(n); }

Rational iota_undivided(long n) {
  Rational s = 0;
  for (long m = 1; m <= n; ++m) {
    if (n % m == 0) s += phi(m) * epsilon(m);
  }
  return s;
}

Rational iota(long n) { return iota_undivided(n) / n; }

bool rational_type(long n) { return epsilon(n) >= 2; }

std::vector<long> integral_epsilon_values(long limit) {
  std::vector<long> out;
  for (long n = 1; n <= limit; ++n) {
    if (is_integer(epsilon(n))) out.push_back(n);
  }
  return out;
}

const std::vector<ModularityRow>& modularity_table() {
  using enum FamilyKey;
  using std::nullopt;
  static const std::vector<ModularityRow> table{
      {1, 24, 24, false, 120, 744, 0, "1A", 1, X6},
      {2, 8, 16, false, 24, 104, 0, "2A", 1, nullopt},
      {3, 6, 12, false, 12, 42, 0, "3A", 1, nullopt},
      {4, 4, 10, false, 8, 24, 0, "4A", 1, nullopt},
      {5, 4, 8, false, 6, 16, 0, "5A", 1, nullopt},
      {6, 2, 8, false, 6, 14, 0, "6A", 3, Y12_3},
      {6, 2, 8, false, 5, 12, 0, "6B", 1, nullopt},
      {6, 2, 8, false, 4, 10, 0, "6A", 2, Y12_2},
      {7, 3, 6, false, 4, 9, 0, "7A", 1, nullopt},
      {8, 2, 6, false, 4, 8, 0, "8A", 1, nullopt},
      {9, 2, 4, false, 3, 6, 0, "9A", 1, nullopt},
      {10, Rational(4, 3), 8, true, 2, 4, 0, "10A", 2, Y20},
      {11, 2, 4, false, nullopt, nullopt, 2, "11A", 1, nullopt},
      {12, 1, 5, true, 4, 6, 0, "12A", 4, Y24},
      {14, 1, 4, false, nullopt, nullopt, 1, "14A", 2, Y28},
      {15, 1, 4, false, nullopt, nullopt, 1, "15A", 3, Y30},
  };
  return table;
}

std::vector<IotaComparison> iota_table_check() {
  std::vector<IotaComparison> out;
  for (const auto& row : modularity_table()) {
    if (!out.empty() && out.back().n == row.n) continue;
    out.push_back({row.n, row.printed_iota, row.iota_starred, iota(row.n), iota_undivided(row.n)});
  }
  return out;
}

bool FrobeniusMukaiReport::holds() const {
  return std::all_of(m23.begin(), m23.end(),
                     [](const auto& e) { return e.fixed_points_match() && e.cycle_count_match(); });
}

FrobeniusMukaiReport frobenius_mukai_check() {
  auto printed_iota = [](long n) -> std::optional<ModularityRow> {
    for (const auto& row : modularity_table()) {
      if (row.n == n) return row;
    }
    return std::nullopt;
  };
  auto make = [&](const ShapeTableEntry& e) {
    const long n = e.shape.order();
    const auto row = printed_iota(n);
    return FrobeniusMukaiEntry{e.shape,           n, e.shape.fixed_points(), epsilon(n), e.shape.cycle_count(),
                               row ? row->printed_iota : iota(n), row.has_value()};
  };
  FrobeniusMukaiReport report;
  for (const auto& e : m23_shapes()) report.m23.push_back(make(e));
  for (const auto& e : m24_extra_shapes()) {
    const auto row = printed_iota(e.shape.order());
    if (row && row->iota_starred) report.flagged.push_back(make(e));
  }
  return report;
}

QExpansion mason_eta(const FrameShape& shape, int order) { return eta_product(shape.eta_exponents(), order); }

HeckeReport hecke_eigenform_check(const FrameShape& shape, int bound, int prime_bound) {
  HeckeReport report;
  report.shape = shape.to_string();
  report.weight = shape.weight();
  report.level = shape.level();
  report.bound = bound;
  report.prime_bound = prime_bound;
  if (!is_integer(report.weight)) throw std::invalid_argument("Hecke check needs integer weight: " + report.shape);
  if (shape.degree() % 24 != 0) throw std::invalid_argument("eta-product has fractional leading exponent");
  const long lead = shape.degree() / 24;
  const long max_n = std::max<long>(static_cast<long>(bound) * std::max(bound - 1, 1), prime_bound);
  const auto body = eta_product_coefficients(shape.eta_exponents(), static_cast<int>(max_n - lead));
  auto a = [&](long n) -> Integer { return n < lead ? Integer(0) : body[static_cast<std::size_t>(n - lead)]; };

  for (long m = 1; m <= bound; ++m) {
    for (long n = m + 1; n <= bound; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ++report.multiplicativity_checks;
      if (a(m) * a(n) != a(m * n)) {
        report.violations.push_back("a(" + std::to_string(m) + ")a(" + std::to_string(n) + ") != a(" +
                                    std::to_string(m * n) + ")");
      }
    }
  }

  const long w = report.weight.get_num().get_si();
  if (w % 2 != 0) {
    report.note = "odd weight: character route not checked";
    return report;
  }
  report.prime_power_checked = true;
  for (long p = 2; p <= prime_bound; ++p) {
    if (!is_prime(p) || report.level % p == 0) continue;
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(w - 1));
    for (long prev = 1, cur = p; cur <= max_n / p; prev = cur, cur *= p) {
      ++report.prime_power_checks;
      if (a(cur * p) != a(p) * a(cur) - pw * a(prev)) {
        report.violations.push_back("prime-power recursion fails at " + std::to_string(cur * p));
      }
    }
  }
  return report;
}

std::vector<CorrespondenceRow> correspondence_report() {
  std::vector<CorrespondenceRow> out;
  for (const auto& row : modularity_table()) {
    std::optional<FrameShape> shape;
    for (const auto& e : m23_shapes()) {
      if (e.order == row.n) shape = e.shape;
    }
    out.push_back({row, epsilon(row.n), iota(row.n), shape, rational_type(row.n)});
  }
  return out;
}

}  // namespace gfano
