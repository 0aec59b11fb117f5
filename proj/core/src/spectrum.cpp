#include "hallfrac/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hallfrac/error.hpp"
#include "hallfrac/farey.hpp"

namespace hallfrac {

namespace {

bool is_even(const BigInt& v) { return (v & 1) == 0; }

Fraction as_fraction(const BigInt& v) { return Fraction(v, BigInt(1)); }

}  // namespace

FillingFactor::FillingFactor(Fraction nu) : value_(std::move(nu)) {
  if (value_.is_negative()) {
    throw Error(ErrorKind::NegativeFilling, "filling factor " + format(value_) + " is negative");
  }
}

HausdorffLabel::HausdorffLabel(Fraction h) : value_(std::move(h)) {
  if (value_ < Fraction(1) || value_ > Fraction(2)) {
    throw Error(ErrorKind::InvalidLabel, "h = " + format(value_) + " is outside [1, 2]");
  }
}

HausdorffLabel classify_h(const FillingFactor& nu) {
  const Fraction& v = nu.value();
  const BigInt m = v.floor();
  if (v.is_integer()) return HausdorffLabel(is_even(m) ? 2 : 1);
  if (is_even(m)) return HausdorffLabel(as_fraction(m + 2) - v);
  return HausdorffLabel(v - as_fraction(m) + Fraction(1));
}

HausdorffLabel dual_h(const HausdorffLabel& h) { return HausdorffLabel(Fraction(3) - h.value()); }

FillingFactor dual_nu(const FillingFactor& nu) {
  const Fraction& v = nu.value();
  const BigInt m = v.floor();
  if (v.is_integer()) {
    return FillingFactor(as_fraction(is_even(m) ? m + 1 : m - 1));
  }
  return FillingFactor(as_fraction(2 * m + 1) - v);
}

FractalClass::FractalClass(HausdorffLabel label)
    : label_(std::move(label)), offset_(label_.value() - Fraction(1)) {}

Fraction FractalClass::next() {
  for (;;) {
    Fraction candidate = upper_ ? as_fraction(centre_) + offset_ : as_fraction(centre_) - offset_;
    if (upper_) centre_ += 2;
    upper_ = !upper_;
    if (have_last_ && candidate == last_) continue;
    have_last_ = true;
    last_ = candidate;
    return candidate;
  }
}

std::vector<Fraction> class_members(const HausdorffLabel& h, std::size_t count) {
  if (count == 0) throw Error(ErrorKind::InvalidArgument, "member count must be >= 1");
  FractalClass stream(h);
  std::vector<Fraction> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next());
  return out;
}

bool TheoremReport::all_hold() const noexcept {
  return std::all_of(entries.begin(), entries.end(), [](const TheoremEntry& e) { return e.holds; });
}

TheoremReport verify_theorem(std::uint32_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidOrder, "theorem check needs order >= 2");
  TheoremReport report;
  report.order = n;
  const FareySequence seq = generate_farey(n);
  for (std::size_t i = 1; i + 1 < seq.elements.size(); ++i) {
    const Fraction& f = seq.elements[i];
    HausdorffLabel h = classify_h(FillingFactor(f));
    const auto members = class_members(h, 2);
    const bool holds = members[1] == h.value();
    report.entries.push_back(TheoremEntry{f, h, members[1], holds});
  }
  return report;
}

std::string FractalTable::Row::interval_label() const {
  return std::to_string(lower) + "<nu<" + std::to_string(lower + 1);
}

Fraction class_member_in_row(const HausdorffLabel& h, std::uint64_t r) {
  const BigInt lower = r;
  const bool even_row = (r % 2) == 0;
  const Fraction& hv = h.value();
  if (hv == Fraction(2)) return as_fraction(even_row ? lower : lower + 1);
  if (hv == Fraction(1)) return as_fraction(even_row ? lower + 1 : lower);
  // even r: h = r + 2 - nu;  odd r: h = nu - r + 1
  if (even_row) return as_fraction(lower + 2) - hv;
  return as_fraction(lower - 1) + hv;
}

FractalTable fractal_table(std::uint32_t order, std::uint64_t max_row) {
  if (max_row == 0) throw Error(ErrorKind::InvalidArgument, "table needs at least one row");
  const FareySequence seq = generate_farey(order);

  std::set<HausdorffLabel, std::greater<>> labels{HausdorffLabel(2), HausdorffLabel(1)};
  for (std::size_t i = 1; i + 1 < seq.elements.size(); ++i) {
    labels.insert(classify_h(FillingFactor(seq.elements[i])));
  }

  FractalTable table;
  table.order = order;
  table.columns.assign(labels.begin(), labels.end());
  table.rows.reserve(max_row);
  for (std::uint64_t r = 0; r < max_row; ++r) {
    FractalTable::Row row;
    row.lower = r;
    row.cells.reserve(table.columns.size());
    for (const auto& h : table.columns) row.cells.push_back(class_member_in_row(h, r));
    table.rows.push_back(std::move(row));
  }
  return table;
}

double filling_factor(std::uint64_t electrons, double flux_quantum, double flux) {
  if (electrons == 0 || !(flux_quantum > 0.0) || !(flux > 0.0) || !std::isfinite(flux_quantum) ||
      !std::isfinite(flux)) {
    throw Error(ErrorKind::InvalidArgument, "N, phi0 and phi must all be positive");
  }
  return static_cast<double>(electrons) * flux_quantum / flux;
}

Fraction nu_from_spin(const Fraction& spin) {
  if (spin.is_negative()) {
    throw Error(ErrorKind::InvalidArgument, "spin " + format(spin) + " is negative");
  }
  return Fraction(2) * spin;
}

}  // namespace hallfrac
