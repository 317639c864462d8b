#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace trilinear {

/// n L - Σ a_i E_i on the blow-up of P² in six points.
struct DivisorClass {
  long n = 0;
  std::array<long, 6> a{};

  /// "(4;3,1,1,1,0,0)"
  std::string to_string() const;
  /// Parses "n:a1,a2,a3,a4,a5,a6".
  static DivisorClass parse(const std::string& text);
  DivisorClass sorted() const;

  friend bool operator==(const DivisorClass& x, const DivisorClass& y) { return x.n == y.n && x.a == y.a; }
  friend bool operator<(const DivisorClass& x, const DivisorClass& y) {
    return x.n != y.n ? x.n < y.n : x.a < y.a;
  }
};

/// H = 3L - Σ E_i.
DivisorClass hyperplane_class();

long pairing(const DivisorClass& x, const DivisorClass& y);

/// The 27 classes E_i, L - E_i - E_j and 2L - Σ_{k≠i} E_k.
const std::vector<DivisorClass>& exceptional_curves();

/// Nonnegative against every exceptional curve.
bool is_nef(const DivisorClass& c);

/// n² = Σ a_i² + 4 and 3n = Σ a_i + 6.
bool satisfies_nn2(const DivisorClass& c);

using Triple = std::array<std::size_t, 3>;

/// Standard Cremona transformation centred at the (0-based) points i, j, k.
DivisorClass cremona(const DivisorClass& c, const Triple& t);

struct ReductionStep {
  DivisorClass before;  // sorted descending
  Triple triple;
  DivisorClass after;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  DivisorClass terminal;  // sorted
  /// Steps that produced a negative entry.
  std::vector<std::string> negative_entries;
  /// Steps where n failed to drop (n ≥ 6) or failed to drop or terminate (n = 4, 5).
  std::vector<std::string> stalls;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonTermination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorts descending and applies the Cremona transformation at the three
/// largest entries (lowest index on ties) until n ≤ 3.
ReductionTrace reduce(const DivisorClass& c, std::size_t max_steps = 100);

/// Every sorted nonnegative solution of (nn2) with n ≤ n_max, by n then a.
std::vector<DivisorClass> enumerate_nn2(long n_max);

struct DCheck {
  DivisorClass d;
  long dh = 0;
  long dd = 0;
  bool ok() const { return dh == 3 && dd == -5; }
};

/// D = c - H with (D·H, D²), which must be (3, -5).
DCheck dcheck(const DivisorClass& c);

}  // namespace trilinear
