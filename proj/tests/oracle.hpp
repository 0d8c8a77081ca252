#pragma once

// Slow, direct transcriptions of the boundary formulas over word -> coefficient
// maps. They share nothing with the library builders except the input
// structure constants, and are compared against them in the tests.

#include <functional>
#include <map>
#include <vector>

#include "leibniz/lie_algebra.hpp"
#include "leibniz/rational.hpp"
#include "leibniz/reference.hpp"
#include "leibniz/sparse.hpp"

namespace oracle {

using leibniz::Rational;
using leibniz::SparseMatrix;
using Word = std::vector<int>;
using Chain = std::map<Word, Rational>;
using Vec = std::map<int, Rational>;
using Bracket = std::function<Vec(int, int)>;

inline Bracket bracket_of(const leibniz::LieAlgebra& g) {
  return [g](int i, int j) {
    Vec out;
    for (const auto& e : g.bracket(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).entries())
      out[static_cast<int>(e.index)] = e.value;
    return out;
  };
}

// sl2 with basis e, f, h written out by hand.
inline Vec sl2_bracket(int i, int j) {
  auto sgn = [](int s, Vec v) {
    for (auto& [k, c] : v) c *= Rational(s);
    return v;
  };
  if (i == j) return {};
  if (i > j) return sgn(-1, sl2_bracket(j, i));
  if (i == 0 && j == 1) return {{2, Rational(1)}};   // [e,f] = h
  if (i == 0 && j == 2) return {{0, Rational(-2)}};  // [e,h] = -2e
  return {{1, Rational(2)}};                         // [f,h] = 2f
}

inline void add(Chain& c, const Word& w, const Rational& v) {
  auto& x = c[w];
  x += v;
  if (x.is_zero()) c.erase(w);
}

// Sorts by adjacent swaps; 0 if a letter repeats.
inline int sort_sign(Word& w) {
  int s = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j) {
      if (w[j] == w[j + 1]) return 0;
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        s = -s;
      }
    }
  for (std::size_t j = 0; j + 1 < w.size(); ++j)
    if (w[j] == w[j + 1]) return 0;
  return s;
}

inline std::vector<Word> tensor_words(int d, int k) {
  std::vector<Word> out{Word{}};
  for (int p = 0; p < k; ++p) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (int a = 0; a < d; ++a) {
        auto v = w;
        v.push_back(a);
        next.push_back(v);
      }
    out = next;
  }
  return out;
}

inline std::vector<Word> wedge_words(int d, int k) {
  std::vector<Word> out;
  for (const auto& w : tensor_words(d, k)) {
    bool inc = true;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) inc = inc && w[i] < w[i + 1];
    if (inc) out.push_back(w);
  }
  return out;
}

// Σ_{i<j} (-1)^j (..., [g_i, g_j] at i, ..., g_j omitted, ...), positions 1-based.
inline Chain tensor_d(const Bracket& br, const Word& w) {
  Chain out;
  const int n = static_cast<int>(w.size());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Rational s(j % 2 == 0 ? 1 : -1);
      for (const auto& [k, c] : br(w[i - 1], w[j - 1])) {
        Word v;
        for (int p = 1; p <= n; ++p) {
          if (p == j) continue;
          v.push_back(p == i ? k : w[p - 1]);
        }
        add(out, v, s * c);
      }
    }
  return out;
}

inline Chain wedge_d(const Bracket& br, const Word& w) {
  Chain out;
  for (const auto& [t, c] : tensor_d(br, w)) {
    Word v = t;
    const int s = sort_sign(v);
    if (s != 0) add(out, v, c * Rational(s));
  }
  return out;
}

// m ⊗ a_2 ∧ ... ∧ a_{n+1}: Σ_i (-1)^i [m, a_i] ⊗ ... + Σ_{2<=i<j} (-1)^j m ⊗ (... [a_i,a_j] ...),
// with [m, a] = -act(a) m. Words are (m, a_2, ..., a_{n+1}).
inline Chain coeff_d(const Bracket& br, const std::function<Vec(int, int)>& act, const Word& w) {
  Chain out;
  const int n1 = static_cast<int>(w.size());
  for (int i = 2; i <= n1; ++i) {
    const Rational s(i % 2 == 0 ? 1 : -1);
    for (const auto& [k, c] : act(w[i - 1], w[0])) {
      Word v{k};
      for (int p = 2; p <= n1; ++p)
        if (p != i) v.push_back(w[p - 1]);
      add(out, v, -s * c);
    }
  }
  Word tail(w.begin() + 1, w.end());
  for (auto& [t, c] : wedge_d(br, tail)) {
    // wedge_d numbers positions from 1 within the tail; in the full word j is one more
    Word v{w[0]};
    v.insert(v.end(), t.begin(), t.end());
    add(out, v, -c);
  }
  return out;
}

// Matrix of a map between enumerated word bases.
inline SparseMatrix matrix(const std::vector<Word>& dom, const std::vector<Word>& cod,
                           const std::function<Chain(const Word&)>& f) {
  std::map<Word, std::size_t> pos;
  for (std::size_t i = 0; i < cod.size(); ++i) pos[cod[i]] = i;
  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t c = 0; c < dom.size(); ++c)
    for (const auto& [w, v] : f(dom[c])) t.emplace_back(pos.at(w), c, v);
  return SparseMatrix::from_triplets(cod.size(), dom.size(), t);
}

inline SparseMatrix wedge_boundary(const Bracket& br, int d, int k) {
  if (k == 0) return SparseMatrix(0, 1);
  if (k == 1) return SparseMatrix(1, static_cast<std::size_t>(d));
  return matrix(wedge_words(d, k), wedge_words(d, k - 1), [&](const Word& w) { return wedge_d(br, w); });
}

inline SparseMatrix tensor_boundary(const Bracket& br, int d, int k) {
  if (k == 0) return SparseMatrix(0, 1);
  if (k == 1) return SparseMatrix(1, static_cast<std::size_t>(d));
  return matrix(tensor_words(d, k), tensor_words(d, k - 1), [&](const Word& w) { return tensor_d(br, w); });
}

// Betti numbers 0..N from oracle boundaries and the dense reference rank.
inline std::vector<std::size_t> betti(const std::function<SparseMatrix(int)>& d, int N) {
  std::vector<std::size_t> r(static_cast<std::size_t>(N) + 2, 0);
  for (int k = 1; k <= N + 1; ++k) r[static_cast<std::size_t>(k)] = leibniz::reference::rank(d(k));
  std::vector<std::size_t> out;
  for (int n = 0; n <= N; ++n) out.push_back(d(n).cols() - r[static_cast<std::size_t>(n)] - r[static_cast<std::size_t>(n) + 1]);
  return out;
}

inline std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
