#include "nilsys/bch.hpp"
#include "nilsys/error.hpp"
#include "nilsys/frame.hpp"

#include <array>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace nilsys {

namespace {

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

// Σ_k (-1)^{k-1}/k Σ [x^{r_1} y^{s_1} ... x^{r_k} y^{s_k}] / (n Π r_i! s_i!)
std::vector<DynkinTerm> build_terms(int n) {
  std::map<std::vector<std::uint8_t>, Rational> acc;
  std::vector<std::pair<int, int>> blocks;
  auto emit = [&]() {
    const int k = static_cast<int>(blocks.size());
    Rational coef = Rational(k % 2 == 1 ? 1 : -1) / k / n;
    std::vector<std::uint8_t> word;
    for (auto [r, s] : blocks) {
      coef /= factorial(r) * factorial(s);
      word.insert(word.end(), static_cast<std::size_t>(r), 0);
      word.insert(word.end(), static_cast<std::size_t>(s), 1);
    }
    acc[word] += coef;
  };
  auto rec = [&](auto &&self, int remaining) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int part = 1; part <= remaining; ++part)
      for (int r = 0; r <= part; ++r) {
        blocks.emplace_back(r, part - r);
        self(self, remaining - part);
        blocks.pop_back();
      }
  };
  rec(rec, n);
  std::vector<DynkinTerm> out;
  for (auto &[word, coef] : acc) {
    if (sgn(coef) == 0)
      continue;
    if (word.size() >= 2 && word[word.size() - 1] == word[word.size() - 2])
      continue;
    out.push_back({word, coef});
  }
  return out;
}

const std::array<std::vector<DynkinTerm>, kMaxBchDegree + 1> &all_terms() {
  static const auto table = [] {
    std::array<std::vector<DynkinTerm>, kMaxBchDegree + 1> t;
    for (int n = 1; n <= kMaxBchDegree; ++n)
      t[static_cast<std::size_t>(n)] = build_terms(n);
    return t;
  }();
  return table;
}

// Key of a word suffix: length in the high byte, letters as bits.
std::uint32_t suffix_key(const std::vector<std::uint8_t> &w, std::size_t start) {
  std::uint32_t bits = 0;
  for (std::size_t i = start; i < w.size(); ++i)
    bits = (bits << 1) | w[i];
  return (static_cast<std::uint32_t>(w.size() - start) << 16) | bits;
}

class WordEvaluator {
public:
  WordEvaluator(const LieAlgebra &a, const Vector &x, const Vector &y) : a_(a), x_(x), y_(y) {}

  const Vector &eval(const std::vector<std::uint8_t> &w, std::size_t start) {
    auto key = suffix_key(w, start);
    auto it = memo_.find(key);
    if (it != memo_.end())
      return it->second;
    const Vector &letter = w[start] == 0 ? x_ : y_;
    Vector v = start + 1 == w.size() ? letter : a_.bracket(letter, eval(w, start + 1));
    return memo_.emplace(key, std::move(v)).first->second;
  }

private:
  const LieAlgebra &a_;
  const Vector &x_, &y_;
  std::unordered_map<std::uint32_t, Vector> memo_;
};

// Homogeneous element of the free associative algebra on {x, y}: coefficient
// per word, word bits read with the first letter most significant.
using Assoc = std::vector<Integer>;

Assoc expand_right_normed(const std::vector<std::uint8_t> &w) {
  const std::size_t n = w.size();
  Assoc p(2, 0);
  p[w[n - 1]] = 1;
  std::size_t len = 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    Assoc q(std::size_t{1} << (len + 1), 0);
    std::size_t a = w[i];
    for (std::size_t idx = 0; idx < p.size(); ++idx) {
      if (sgn(p[idx]) == 0)
        continue;
      q[(a << len) | idx] += p[idx];
      q[(idx << 1) | a] -= p[idx];
    }
    p = std::move(q);
    ++len;
  }
  return p;
}

std::vector<std::uint8_t> word_from_bits(std::size_t bits, std::size_t n) {
  std::vector<std::uint8_t> w(n);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = static_cast<std::uint8_t>((bits >> (n - 1 - i)) & 1U);
  return w;
}

} // namespace

const std::vector<DynkinTerm> &dynkin_terms(int degree) {
  if (degree < 1 || degree > kMaxBchDegree)
    throw UnsupportedDegree(degree);
  return all_terms()[static_cast<std::size_t>(degree)];
}

Vector evaluate_word(const LieAlgebra &a, const std::vector<std::uint8_t> &word,
                     const Vector &x, const Vector &y) {
  WordEvaluator ev(a, x, y);
  return ev.eval(word, 0);
}

Vector bch_product(const LieAlgebra &a, const Vector &x, const Vector &y) {
  return bch_product(a, x, y, static_cast<int>(nilpotency_class(a)));
}

Vector bch_product(const LieAlgebra &a, const Vector &x, const Vector &y, int c) {
  if (c > kMaxBchDegree)
    throw UnsupportedDegree(c);
  Vector out = x + y;
  WordEvaluator ev(a, x, y);
  for (int n = 2; n <= c; ++n)
    for (const auto &t : dynkin_terms(n)) {
      const Vector &v = ev.eval(t.word, 0);
      for (std::size_t k = 0; k < out.size(); ++k)
        if (sgn(v[k]) != 0)
          out[k] += t.coef * v[k];
    }
  return out;
}

std::vector<Integer> bch_denominators(int c) {
  if (c > kMaxBchDegree)
    throw UnsupportedDegree(c);
  std::vector<Integer> out;
  for (int n = 1; n <= c; ++n) {
    const std::size_t len = static_cast<std::size_t>(n);
    const std::size_t words = std::size_t{1} << len;
    // The free Lie ring in degree n is the Z-span of right-normed brackets.
    IntMatrix lie;
    for (std::size_t b = 0; b < words; ++b) {
      auto e = expand_right_normed(word_from_bits(b, len));
      bool nonzero = false;
      for (const auto &v : e)
        nonzero = nonzero || sgn(v) != 0;
      if (nonzero)
        lie.push_back(std::move(e));
    }
    HermiteForm h = hermite_normal_form(std::move(lie), words);

    Vector target = zero_vector(words);
    for (const auto &t : dynkin_terms(n)) {
      auto e = expand_right_normed(t.word);
      for (std::size_t i = 0; i < words; ++i)
        if (sgn(e[i]) != 0)
          target[i] += t.coef * e[i];
    }
    Integer m = 1;
    for (std::size_t r = 0; r < h.rows.size(); ++r) {
      std::size_t p = h.pivots[r];
      Rational coef = target[p] / Rational(h.rows[r][p]);
      if (sgn(coef) == 0)
        continue;
      m = lcm(m, coef.get_den());
      for (std::size_t i = p; i < words; ++i)
        if (sgn(h.rows[r][i]) != 0)
          target[i] -= coef * h.rows[r][i];
    }
    if (!is_zero(target))
      throw std::logic_error("BCH term outside the free Lie algebra");
    out.push_back(m);
  }
  return out;
}

AdditiveLattice strong_subring(const LieAlgebra &a, const std::vector<Vector> &generators) {
  const std::size_t d = a.dim();
  const int c = static_cast<int>(nilpotency_class(a));
  auto m = bch_denominators(c);
  AdditiveLattice l = AdditiveLattice::span(d, generators);
  for (;;) {
    auto base = l.basis();
    std::vector<Vector> extra;
    AdditiveLattice layer = l;
    for (int n = 2; n <= c; ++n) {
      std::vector<Vector> next;
      for (const auto &b : base)
        for (const auto &v : layer.basis()) {
          Vector br = a.bracket(b, v);
          if (!is_zero(br))
            next.push_back(std::move(br));
        }
      layer = AdditiveLattice::span(d, next);
      if (layer.rank() == 0)
        break;
      Rational inv = Rational(1) / Rational(m[static_cast<std::size_t>(n - 1)]);
      for (const auto &v : layer.basis())
        extra.push_back(inv * v);
    }
    AdditiveLattice grown = l + AdditiveLattice::span(d, extra);
    if (grown == l)
      return l;
    l = std::move(grown);
  }
}

bool is_strong_subring(const LieAlgebra &a, const AdditiveLattice &l) {
  return strong_subring(a, l.basis()) == l;
}

IndexPair group_additive_index(const LieAlgebra &a, const AdditiveLattice &sub,
                               const AdditiveLattice &super, std::size_t cap) {
  if (!sub.full_rank())
    throw RankDeficient(sub.rank(), sub.ambient_dim());
  if (!super.full_rank())
    throw RankDeficient(super.rank(), super.ambient_dim());
  if (!super.contains(sub))
    throw NotContained();
  if (!is_strong_subring(a, sub) || !is_strong_subring(a, super))
    throw NotSubring("lattice is not a strong subring");

  IndexPair out;
  Rational ratio = covolume(sub) / covolume(super);
  out.additive = ratio.get_num();

  // Work in a frame adapted to the lower central series: multiplying by an
  // element whose first nonzero coordinate is p leaves coordinates before p
  // alone and shifts coordinate p additively.
  CompatibleFrame frame = compatible_frame(a);
  LieAlgebra fa = frame_algebra(a, frame);
  AdditiveLattice fsub = sub.transformed(frame.inverse);
  AdditiveLattice fsuper = super.transformed(frame.inverse);
  auto hsub = fsub.basis();
  const int c = static_cast<int>(nilpotency_class(a));
  const auto &pivots = fsub.pivots();

  auto canonical = [&](Vector x) {
    for (std::size_t t = 0; t < hsub.size(); ++t) {
      std::size_t p = pivots[t];
      Integer k = floor(x[p] / hsub[t][p]);
      if (sgn(k) != 0)
        x = bch_product(fa, x, Rational(-k) * hsub[t], c);
    }
    return x;
  };

  std::vector<Vector> gens;
  for (const auto &v : fsuper.basis()) {
    gens.push_back(v);
    gens.push_back(-v);
  }
  std::set<Vector> seen;
  std::deque<Vector> queue;
  Vector start = zero_vector(a.dim());
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    Vector x = std::move(queue.front());
    queue.pop_front();
    for (const auto &s : gens) {
      Vector y = canonical(bch_product(fa, s, x, c));
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          return out;
        queue.push_back(std::move(y));
      }
    }
  }
  out.group = Integer(seen.size());
  return out;
}

} // namespace nilsys
