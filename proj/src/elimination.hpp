#pragma once

// Fraction-free sparse elimination over the integers, used for exact rank.
// Internal header.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

namespace leibniz::detail {

struct Overflow {};

// Arithmetic policy for int64 entries; any overflow aborts the block so it
// can be redone with GMP integers.
struct Int64Ops {
  using Int = std::int64_t;
  static Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Int abs(Int a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
  }
  static Int gcd(Int a, Int b) { return std::gcd(abs(a), abs(b)); }
  static bool is_zero(Int a) { return a == 0; }
  static bool is_one(Int a) { return a == 1; }
  static Int div(Int a, Int b) { return a / b; }
  static bool abs_less(Int a, Int b) { return abs(a) < abs(b); }
  static Int neg(Int a) {
    if (a == INT64_MIN) throw Overflow{};
    return -a;
  }
};

struct MpzOps {
  using Int = mpz_class;
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static Int abs(const Int& a) { return ::abs(a); }
  static Int gcd(const Int& a, const Int& b) { return ::gcd(a, b); }
  static bool is_zero(const Int& a) { return sgn(a) == 0; }
  static bool is_one(const Int& a) { return a == 1; }
  static Int div(const Int& a, const Int& b) { return a / b; }
  static bool abs_less(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  static Int neg(const Int& a) { return -a; }
};

template <class Ops>
using IntVector = std::vector<std::pair<std::uint32_t, typename Ops::Int>>;

// Rank of the span of `vectors`, each sorted by coordinate in [0, dim).
// Pivot rows are only reduced against earlier pivots, so a vector is reduced
// by walking the pivots it touches in insertion order.
template <class Ops>
std::size_t integer_rank(std::vector<IntVector<Ops>> vectors, std::size_t dim) {
  using Int = typename Ops::Int;
  std::sort(vectors.begin(), vectors.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });

  struct Pivot {
    std::uint32_t col;
    Int lead;
    IntVector<Ops> row;
  };
  std::vector<Pivot> pivots;
  std::vector<std::int64_t> pivot_of(dim, -1);
  std::vector<Int> acc(dim, Int(0));
  std::vector<char> live(dim, 0);
  std::vector<std::uint32_t> touched;
  std::vector<char> queued;

  for (auto& vec : vectors) {
    if (pivots.size() == dim) break;
    touched.clear();
    queued.assign(pivots.size(), 0);
    std::priority_queue<std::int64_t, std::vector<std::int64_t>, std::greater<>> heap;
    for (auto& [c, v] : vec) {
      acc[c] = v;
      live[c] = 1;
      touched.push_back(c);
      if (pivot_of[c] >= 0) {
        heap.push(pivot_of[c]);
        queued[pivot_of[c]] = 1;
      }
    }
    try {
      while (!heap.empty()) {
        const auto k = heap.top();
        heap.pop();
        const Pivot& p = pivots[k];
        if (Ops::is_zero(acc[p.col])) continue;
        const Int g = Ops::gcd(p.lead, acc[p.col]);
        const Int fa = Ops::div(p.lead, g);
        const Int fv = Ops::div(acc[p.col], g);
        if (!Ops::is_one(fa))
          for (auto t : touched)
            if (!Ops::is_zero(acc[t])) acc[t] = Ops::mul(acc[t], fa);
        for (const auto& [c, pv] : p.row) {
          acc[c] = Ops::sub(acc[c], Ops::mul(fv, pv));
          if (!live[c]) {
            live[c] = 1;
            touched.push_back(c);
          }
          const auto pc = pivot_of[c];
          if (pc > k && !queued[pc] && !Ops::is_zero(acc[c])) {
            heap.push(pc);
            queued[pc] = 1;
          }
        }
      }
    } catch (...) {
      for (auto t : touched) {
        acc[t] = Int(0);
        live[t] = 0;
      }
      throw;
    }

    IntVector<Ops> residual;
    for (auto t : touched) {
      if (!Ops::is_zero(acc[t])) residual.emplace_back(t, acc[t]);
      acc[t] = Int(0);
      live[t] = 0;
    }
    if (residual.empty()) continue;
    std::sort(residual.begin(), residual.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Int content = Ops::abs(residual.front().second);
    for (const auto& e : residual) content = Ops::gcd(content, e.second);
    std::size_t best = 0;
    for (std::size_t i = 0; i < residual.size(); ++i) {
      if (!Ops::is_one(content)) residual[i].second = Ops::div(residual[i].second, content);
      if (Ops::abs_less(residual[i].second, residual[best].second)) best = i;
    }
    if (residual[best].second < Int(0))
      for (auto& e : residual) e.second = Ops::neg(e.second);
    const auto col = residual[best].first;
    pivot_of[col] = static_cast<std::int64_t>(pivots.size());
    Int lead = residual[best].second;
    pivots.push_back({col, std::move(lead), std::move(residual)});
  }
  return pivots.size();
}

}  // namespace leibniz::detail
