#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hallfrac/rational.hpp"

namespace hallfrac {

/// Nonnegative filling factor nu (numerically equal to f).
class FillingFactor {
 public:
  /// Throws Error(NegativeFilling) for nu < 0.
  explicit FillingFactor(Fraction nu);

  const Fraction& value() const noexcept { return value_; }

  friend bool operator==(const FillingFactor&, const FillingFactor&) = default;

 private:
  Fraction value_;
};

/// Hausdorff dimension label h in [1, 2].
class HausdorffLabel {
 public:
  /// Throws Error(InvalidLabel) outside [1, 2].
  explicit HausdorffLabel(Fraction h);

  const Fraction& value() const noexcept { return value_; }

  friend bool operator==(const HausdorffLabel&, const HausdorffLabel&) = default;
  friend auto operator<=>(const HausdorffLabel& a, const HausdorffLabel& b) {
    return a.value_ <=> b.value_;
  }

 private:
  Fraction value_;
};

/// h = 1 + |nu - nearest odd integer|. Even integers map to 2, odd
/// integers to 1.
HausdorffLabel classify_h(const FillingFactor& nu);

/// 3 - h.
HausdorffLabel dual_h(const HausdorffLabel& h);

/// Dual filling factor: reflection of nu about the centre of its unit
/// interval, (2*floor(nu) + 1) - nu. Integers pair as 0<->1, 2<->3, ...
/// In all cases classify_h(dual_nu(nu)) == 3 - classify_h(nu).
FillingFactor dual_nu(const FillingFactor& nu);

/// Ascending stream over {2k+1 -/+ (h-1) : k >= 0}, duplicates merged.
/// The h = 2 class starts at 0.
class FractalClass {
 public:
  explicit FractalClass(HausdorffLabel label);

  const HausdorffLabel& label() const noexcept { return label_; }

  /// Next member; the stream is unbounded.
  Fraction next();

 private:
  HausdorffLabel label_;
  Fraction offset_;      // h - 1
  BigInt centre_ = 1;    // current odd integer 2k+1
  bool upper_ = false;   // false: emit centre - offset next
  bool have_last_ = false;
  Fraction last_;
};

/// First `count` members of the class labelled h. Throws
/// Error(InvalidArgument) when count == 0.
std::vector<Fraction> class_members(const HausdorffLabel& h, std::size_t count);

struct TheoremEntry {
  Fraction f;
  HausdorffLabel h;
  Fraction second_member;
  bool holds;
};

struct TheoremReport {
  std::uint32_t order = 0;
  std::vector<TheoremEntry> entries;

  bool all_hold() const noexcept;
};

/// For every interior f of F_n, checks that the second member of the class
/// of f is exactly classify_h(f). Throws Error(InvalidOrder) for n < 2.
TheoremReport verify_theorem(std::uint32_t n);

/// Rows (r, r+1) for r = 0..max_row-1 against the columns
/// {classify_h(f) : f interior to F_order} and {1, 2}, descending.
struct FractalTable {
  struct Row {
    std::uint64_t lower = 0;
    std::vector<Fraction> cells;  // one per column

    std::string interval_label() const;  // "r<nu<r+1"
  };

  std::uint32_t order = 0;
  std::vector<HausdorffLabel> columns;
  std::vector<Row> rows;
};

/// Member of class h lying in [r, r+1]. For the integer classes the even
/// endpoint goes to h = 2 and the odd endpoint to h = 1.
Fraction class_member_in_row(const HausdorffLabel& h, std::uint64_t r);

/// Throws Error(InvalidOrder) for order == 0 and Error(InvalidArgument) for
/// max_row == 0.
FractalTable fractal_table(std::uint32_t order, std::uint64_t max_row);

/// f = N * phi0 / phi. Throws Error(InvalidArgument) unless all positive.
double filling_factor(std::uint64_t electrons, double flux_quantum, double flux);

/// nu = 2s. Throws Error(InvalidArgument) for s < 0.
Fraction nu_from_spin(const Fraction& spin);

}  // namespace hallfrac
