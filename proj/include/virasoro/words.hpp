#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "virasoro/linear.hpp"
#include "virasoro/rational.hpp"

namespace vir {

// L_{-i_n} ... L_{-i_1} with i_n >= ... >= i_1 > 0, stored as parts = [i_n, ..., i_1].
// Ordering within a level is lexicographic on the parts, so L_{-1}^N comes first.
struct PBWMonomial {
  std::vector<int> parts;

  PBWMonomial() = default;
  explicit PBWMonomial(std::vector<int> p);

  int level() const;
  bool empty() const { return parts.empty(); }
  // Monomial with the first (largest) part removed.
  PBWMonomial rest() const;
  std::string str() const;

  // Orders by level first, then lexicographically.
  friend std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b);
  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

// All partitions of N in the module's basis order.
std::vector<PBWMonomial> partitions_of(int N);
std::size_t partition_count(int N);

using UNegElement = LinearCombination<PBWMonomial>;

// Word L_{a} L_{b} ... as indices [a, b, ...]; the rightmost factor acts first.
struct GenWord {
  std::vector<int> indices;
  int degree() const;  // sum of indices
  std::string str() const;
  friend auto operator<=>(const GenWord&, const GenWord&) = default;
};

using WordSum = LinearCombination<GenWord>;

// [L_n, L_m] = coefficient * L_{n+m} + central * c.
struct Bracket {
  Rational coefficient;
  int index;
  Rational central;
};
Bracket bracket(int n, int m, const Rational& c);

// Term of a normal-ordered product: L_{-neg} L_0^{l0_power} L_{pos}, where pos is
// ascending positive indices (the rightmost acts first on a module).
struct OrderedWord {
  PBWMonomial negative;
  int l0_power = 0;
  std::vector<int> positive;
  friend auto operator<=>(const OrderedWord&, const OrderedWord&) = default;
  GenWord word() const;
  std::string str() const;
};
using OrderedSum = LinearCombination<OrderedWord>;

OrderedSum normal_order(const GenWord& w, const Rational& c);
OrderedSum normal_order(const WordSum& w, const Rational& c);

WordSum to_words(const OrderedSum& s);
// PBW element viewed as a word sum.
WordSum to_words(const UNegElement& u);
// Inverse of to_words; throws UserError if a word is not a PBW monomial.
UNegElement to_pbw(const WordSum& w);

// Parses sums like "L-2*L-2 - 3/5*L-4" or "L-1^2 - 2/5*L-2"; whitespace-insensitive.
// A term that is only a coefficient denotes the identity word.
WordSum parse_words(std::string_view text);
UNegElement parse_pbw(std::string_view text);

// Word syntax with explicit coefficients, e.g. "1*L-1^2 - 2/5*L-2".
std::string format_words(const WordSum& w);
std::string format_pbw(const UNegElement& u);

// Smallest integer multiple with coprime coefficients, first coefficient positive.
UNegElement primitive_integral(const UNegElement& u);

}  // namespace vir
