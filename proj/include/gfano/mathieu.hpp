#pragma once

#include "gfano/eta.hpp"
#include "gfano/periods.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gfano {

/// Cycle type prod i^a_i. Permutation shapes have a_i > 0 and
/// sum i a_i = 24; eta-quotient shapes may carry negative a_i.
class FrameShape {
 public:
  explicit FrameShape(std::map<int, int> cycles);

  const std::map<int, int>& cycles() const { return cycles_; }
  /// lcm of the cycle lengths present.
  long order() const;
  int fixed_points() const;
  /// (sum a_i) / 2.
  Rational weight() const;
  /// gcd * lcm of the cycle lengths present.
  long level() const;
  /// sum a_i.
  int cycle_count() const;
  /// sum i a_i.
  long degree() const;
  EtaExponentMap eta_exponents() const { return cycles_; }
  std::string to_string() const;

  friend bool operator==(const FrameShape&, const FrameShape&) = default;

 private:
  std::map<int, int> cycles_;
};

enum class ShapeKind { Permutation, EtaQuotient };

/// Tokens "i^a" or bare "i", whitespace separated. Throws ParseError, and
/// SumNot24 for permutation shapes whose degree is not 24.
FrameShape parse_frame_shape(std::string_view text, ShapeKind kind = ShapeKind::Permutation);

/// A Frame shape with the order, level and weight printed beside it.
struct ShapeTableEntry {
  FrameShape shape;
  long order;
  long level;
  Rational weight;
};

const std::vector<ShapeTableEntry>& m23_shapes();        // 12 entries
const std::vector<ShapeTableEntry>& m24_extra_shapes();  // 9 entries
const std::vector<ShapeTableEntry>& s24_extra_shapes();  // 7 integer-weight entries
/// The 21 shapes of M24 (M23 ones first).
std::vector<ShapeTableEntry> m24_shapes();

Rational phi(long n);
Rational psi(long n);
/// 24 / psi(n).
Rational epsilon(long n);
/// (sum over M | n of phi(M) epsilon(M)) / n.
Rational iota(long n);
/// The same sum without the 1/n factor.
Rational iota_undivided(long n);

/// rational type iff epsilon(N) >= 2.
bool rational_type(long n);

/// n in [1, limit] with epsilon(n) an integer.
std::vector<long> integral_epsilon_values(long limit);

/// One column of the modularity table for index-one G-Fano threefolds.
struct ModularityRow {
  long n;
  Rational printed_epsilon;
  Rational printed_iota;
  bool iota_starred;
  std::optional<int> s;  // nullopt: any s works
  std::optional<int> c;  // nullopt: c = s + c_minus_s
  int c_minus_s;
  std::string_view g;
  int rho;
  std::optional<FamilyKey> family;
};

/// All 16 columns in printed order.
const std::vector<ModularityRow>& modularity_table();

struct IotaComparison {
  long n;
  Rational printed;
  bool starred;
  Rational divided;
  Rational undivided;
  bool matches() const { return divided == printed; }
};

/// Printed iota against both forms of the formula, one entry per distinct N.
std::vector<IotaComparison> iota_table_check();

struct FrobeniusMukaiEntry {
  FrameShape shape;
  long order;
  int fixed_points;
  Rational epsilon;
  int cycle_count;
  Rational iota;  // printed value when the table has one, computed otherwise
  bool iota_printed;
  bool fixed_points_match() const { return Rational(fixed_points) == epsilon; }
  bool cycle_count_match() const { return Rational(cycle_count) == iota; }
};

struct FrobeniusMukaiReport {
  std::vector<FrobeniusMukaiEntry> m23;
  /// M24-only shapes whose order carries a starred iota; reported, not failed.
  std::vector<FrobeniusMukaiEntry> flagged;
  bool holds() const;
};

FrobeniusMukaiReport frobenius_mukai_check();

/// prod eta(q^i)^a_i with body through q^order.
QExpansion mason_eta(const FrameShape& shape, int order);

struct HeckeReport {
  std::string shape;
  Rational weight;
  long level = 0;
  int bound = 0;
  int prime_bound = 0;
  long multiplicativity_checks = 0;
  long prime_power_checks = 0;
  bool prime_power_checked = false;
  std::string note;
  std::vector<std::string> violations;
  bool holds() const { return violations.empty(); }
};

/// a(m) a(n) = a(mn) for coprime m, n <= bound, and for even weight the
/// prime-power recursion a(p^(r+1)) = a(p) a(p^r) - p^(w-1) a(p^(r-1)) for
/// primes p <= prime_bound not dividing the level.
/// Requires integer weight and integer leading exponent.
HeckeReport hecke_eigenform_check(const FrameShape& shape, int bound, int prime_bound);

struct CorrespondenceRow {
  ModularityRow row;
  Rational epsilon;
  Rational iota;
  std::optional<FrameShape> m23_shape;
  bool rational_type;
};

std::vector<CorrespondenceRow> correspondence_report();

}  // namespace gfano
