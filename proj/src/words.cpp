#include "virasoro/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "virasoro/errors.hpp"

namespace vir {

PBWMonomial::PBWMonomial(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1 || (i > 0 && parts[i] > parts[i - 1])) {
      throw InternalError("PBW monomial parts must be positive and weakly decreasing");
    }
  }
}

int PBWMonomial::level() const { return std::accumulate(parts.begin(), parts.end(), 0); }

PBWMonomial PBWMonomial::rest() const {
  PBWMonomial r;
  r.parts.assign(parts.begin() + 1, parts.end());
  return r;
}

std::string PBWMonomial::str() const {
  GenWord w;
  for (int p : parts) w.indices.push_back(-p);
  return w.str();
}

std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b) {
  if (auto c = a.level() <=> b.level(); c != 0) return c;
  return a.parts <=> b.parts;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<PBWMonomial>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = 1; p <= std::min(remaining, max_part); ++p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PBWMonomial> partitions_of(int N) {
  std::vector<PBWMonomial> out;
  if (N < 0) return out;
  std::vector<int> cur;
  partitions_rec(N, N, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t partition_count(int N) { return partitions_of(N).size(); }

int GenWord::degree() const { return std::accumulate(indices.begin(), indices.end(), 0); }

std::string GenWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < indices.size();) {
    std::size_t j = i;
    while (j < indices.size() && indices[j] == indices[i]) ++j;
    if (!out.empty()) out += "*";
    out += "L" + std::to_string(indices[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Bracket bracket(int n, int m, const Rational& c) {
  Bracket b{Rational(n - m), n + m, Rational(0)};
  if (m == -n) {
    const long nn = n;
    b.central = Rational(nn * nn * nn - nn, 12) * c;
  }
  return b;
}

GenWord OrderedWord::word() const {
  GenWord w;
  for (int p : negative.parts) w.indices.push_back(-p);
  for (int i = 0; i < l0_power; ++i) w.indices.push_back(0);
  w.indices.insert(w.indices.end(), positive.begin(), positive.end());
  return w;
}

std::string OrderedWord::str() const { return word().str(); }

WordSum to_words(const OrderedSum& s) {
  WordSum out;
  for (const auto& [ow, a] : s) out.add(ow.word(), a);
  return out;
}

OrderedSum normal_order(const WordSum& input, const Rational& c) {
  OrderedSum out;
  // Straighten by adjacent transpositions: L_a L_b = L_b L_a + [L_a, L_b] for a > b.
  std::map<GenWord, Rational> pending(input.begin(), input.end());
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const GenWord& w = node.key();
    const Rational coef = node.mapped();
    if (coef.is_zero()) continue;
    auto push = [&](GenWord nw, const Rational& k) {
      auto [it, ins] = pending.try_emplace(std::move(nw), k);
      if (!ins) it->second += k;
    };
    std::size_t i = 0;
    while (i + 1 < w.indices.size() && w.indices[i] <= w.indices[i + 1]) ++i;
    if (i + 1 >= w.indices.size()) {
      OrderedWord ow;
      std::vector<int> neg;
      for (int k : w.indices) {
        if (k < 0) neg.push_back(-k);
        else if (k == 0) ++ow.l0_power;
        else ow.positive.push_back(k);
      }
      ow.negative = PBWMonomial(neg);
      out.add(ow, coef);
      continue;
    }
    const int a = w.indices[i], b = w.indices[i + 1];
    GenWord swapped = w;
    std::swap(swapped.indices[i], swapped.indices[i + 1]);
    push(swapped, coef);
    const Bracket br = bracket(a, b, c);
    GenWord merged;
    merged.indices.assign(w.indices.begin(), w.indices.begin() + i);
    merged.indices.push_back(br.index);
    merged.indices.insert(merged.indices.end(), w.indices.begin() + i + 2, w.indices.end());
    push(merged, coef * br.coefficient);
    if (!br.central.is_zero()) {
      GenWord dropped;
      dropped.indices.assign(w.indices.begin(), w.indices.begin() + i);
      dropped.indices.insert(dropped.indices.end(), w.indices.begin() + i + 2, w.indices.end());
      push(dropped, coef * br.central);
    }
  }
  return out;
}

OrderedSum normal_order(const GenWord& w, const Rational& c) { return normal_order(WordSum(w), c); }

WordSum to_words(const UNegElement& u) {
  WordSum out;
  for (const auto& [m, a] : u) {
    GenWord w;
    for (int p : m.parts) w.indices.push_back(-p);
    out.add(w, a);
  }
  return out;
}

UNegElement to_pbw(const WordSum& w) {
  UNegElement out;
  for (const auto& [word, a] : w) {
    std::vector<int> parts;
    for (int k : word.indices) {
      if (k >= 0) throw UserError("word '" + word.str() + "' is not a product of lowering operators");
      parts.push_back(-k);
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
      throw UserError("word '" + word.str() + "' is not in PBW order (parts must weakly decrease)");
    }
    out.add(PBWMonomial(parts), a);
  }
  return out;
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : original_(text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
  }

  WordSum parse() {
    if (s_.empty()) fail("empty expression");
    WordSum out;
    bool first = true;
    while (pos_ < s_.size()) {
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? Rational(-1) : Rational(1);
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, word] = term();
      out.add(word, sign * coef);
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw UserError("cannot parse word '" + std::string(original_) + "': " + why + " at offset " +
                    std::to_string(pos_));
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(s_[pos_++]);
    return d;
  }

  std::pair<Rational, GenWord> term() {
    Rational coef(1);
    GenWord w;
    bool any = false;
    do {
      if (any) ++pos_;  // consume '*'
      any = true;
      if (peek() == 'L') {
        ++pos_;
        std::string idx;
        if (peek() == '-' || peek() == '+') idx.push_back(s_[pos_++]);
        const std::string d = digits();
        if (d.empty()) fail("expected generator index");
        const int k = std::stoi(idx + d);
        int power = 1;
        if (peek() == '^') {
          ++pos_;
          const std::string e = digits();
          if (e.empty()) fail("expected exponent");
          power = std::stoi(e);
        }
        for (int i = 0; i < power; ++i) w.indices.push_back(k);
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::string num = digits();
        if (peek() == '/') {
          ++pos_;
          const std::string den = digits();
          if (den.empty()) fail("expected denominator");
          num += "/" + den;
        }
        coef *= Rational::parse(num);
      } else {
        fail("expected a coefficient or an L<k> factor");
      }
    } while (peek() == '*');
    return {coef, w};
  }

  std::string_view original_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

WordSum parse_words(std::string_view text) { return WordParser(text).parse(); }

UNegElement parse_pbw(std::string_view text) { return to_pbw(parse_words(text)); }

std::string format_words(const WordSum& w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (const auto& [word, a] : w) {
    const bool neg = a.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += a.abs().str();
    if (!word.indices.empty()) out += "*" + word.str();
  }
  return out;
}

std::string format_pbw(const UNegElement& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [m, a] : u) {
    const bool neg = a.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += a.abs().str();
    if (!m.empty()) out += "*" + m.str();
  }
  return out;
}

UNegElement primitive_integral(const UNegElement& u) {
  if (u.is_zero()) return u;
  mpz_class l = 1, g = 0;
  for (const auto& [m, a] : u) l = lcm(l, a.denominator());
  for (const auto& [m, a] : u) g = gcd(g, mpz_class(a.numerator() * (l / a.denominator())));
  Rational scale(mpq_class(l, g));
  if (u.begin()->second.sign() < 0) scale = -scale;
  return u * scale;
}

}  // namespace vir
