#include "hallfrac/farey.hpp"

#include <algorithm>
#include <string>

#include "hallfrac/error.hpp"

namespace hallfrac {

FareySequence generate_farey(std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidOrder, "Farey order must be >= 1");

  FareySequence seq;
  seq.order = n;
  const std::int64_t order = n;
  std::int64_t p1 = 0, q1 = 1;
  std::int64_t p2 = 1, q2 = order;
  seq.elements.emplace_back(BigInt(p1), BigInt(q1));
  seq.elements.emplace_back(BigInt(p2), BigInt(q2));
  while (!(p2 == 1 && q2 == 1)) {
    const std::int64_t k = (order + q1) / q2;
    const std::int64_t p3 = k * p2 - p1;
    const std::int64_t q3 = k * q2 - q1;
    p1 = p2;
    q1 = q2;
    p2 = p3;
    q2 = q3;
    seq.elements.emplace_back(BigInt(p2), BigInt(q2));
  }
  return seq;
}

PropertyCheck verify_p1(std::span<const Fraction> seq) {
  PropertyCheck check;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const Fraction& a = seq[i];
    const Fraction& b = seq[i + 1];
    BigInt det = b.numerator() * a.denominator() - b.denominator() * a.numerator();
    if (det < 0) det = -det;
    ++check.checked;
    if (det != 1) {
      ++check.violations;
      if (!check.first) check.first = Violation{i, {a, b}};
    }
  }
  check.holds = check.violations == 0;
  return check;
}

PropertyCheck verify_p2(std::span<const Fraction> seq) {
  PropertyCheck check;
  for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
    ++check.checked;
    if (mediant(seq[i], seq[i + 2]) != seq[i + 1]) {
      ++check.violations;
      if (!check.first) check.first = Violation{i, {seq[i], seq[i + 1], seq[i + 2]}};
    }
  }
  check.holds = check.violations == 0;
  return check;
}

Fraction verify_p3(const FareySequence& seq, const Fraction& a, const Fraction& b) {
  const Fraction& lo = a < b ? a : b;
  const Fraction& hi = a < b ? b : a;
  const auto& el = seq.elements;
  auto it = std::lower_bound(el.begin(), el.end(), lo);
  if (it == el.end() || *it != lo || std::next(it) == el.end() || *std::next(it) != hi) {
    throw Error(ErrorKind::NotAdjacent,
                format(a) + " and " + format(b) + " are not neighbours in F_" +
                    std::to_string(seq.order));
  }

  const Fraction m = mediant(lo, hi);
  const BigInt limit = lo.denominator() + hi.denominator();
  for (BigInt q = 1; q <= limit; ++q) {
    // Smallest p with p/q > lo, then every candidate up to hi.
    const BigInt start = (lo * Fraction(q, BigInt(1))).floor() + 1;
    for (BigInt p = start; Fraction(p, q) < hi; ++p) {
      const Fraction between(p, q);
      if (between.denominator() != q) continue;  // counted at its reduced denominator
      if (q < limit || between != m) {
        throw Error(ErrorKind::NotAdjacent, format(between) + " lies between " + format(lo) +
                                                " and " + format(hi) +
                                                " with denominator <= " + limit.str());
      }
    }
  }
  return m;
}

}  // namespace hallfrac
