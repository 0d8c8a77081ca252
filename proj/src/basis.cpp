#include "leibniz/basis.hpp"

#include <stdexcept>

namespace leibniz {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int wedge_normalize(Word& word) {
  int sign = 1;
  // insertion sort; words are short
  for (std::size_t i = 1; i < word.size(); ++i) {
    auto x = word[i];
    std::size_t j = i;
    while (j > 0 && word[j - 1] > x) {
      word[j] = word[j - 1];
      --j;
      sign = -sign;
    }
    word[j] = x;
    if (j > 0 && word[j - 1] == x) return 0;
  }
  return sign;
}

BasisIndexer::BasisIndexer(Kind kind, std::size_t m, std::size_t d, std::size_t k)
    : kind_(kind), m_(m), d_(d), k_(k) {
  wedge_size_ = binomial(d, k);
  switch (kind) {
    case Kind::wedge:
      size_ = wedge_size_;
      break;
    case Kind::tensor: {
      size_ = 1;
      for (std::size_t i = 0; i < k; ++i) size_ *= d;
      break;
    }
    case Kind::coeff:
      size_ = m * wedge_size_;
      break;
  }
}

BasisIndexer BasisIndexer::wedge(std::size_t space_dim, std::size_t k) {
  return BasisIndexer(Kind::wedge, 1, space_dim, k);
}

BasisIndexer BasisIndexer::tensor(std::size_t space_dim, std::size_t k) {
  return BasisIndexer(Kind::tensor, 1, space_dim, k);
}

BasisIndexer BasisIndexer::coeff(std::size_t module_dim, std::size_t space_dim, std::size_t k) {
  return BasisIndexer(Kind::coeff, module_dim, space_dim, k);
}

// Lexicographic rank of a strictly increasing word.
std::size_t BasisIndexer::wedge_rank(std::span<const std::uint32_t> w) const {
  std::size_t r = 0;
  std::uint32_t prev = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::uint32_t c = (i == 0 ? 0 : prev + 1); c < w[i]; ++c) r += binomial(d_ - 1 - c, k_ - 1 - i);
    prev = w[i];
  }
  return r;
}

Word BasisIndexer::wedge_unrank(std::size_t r) const {
  Word w;
  w.reserve(k_);
  std::uint32_t c = 0;
  for (std::size_t i = 0; i < k_; ++i) {
    while (true) {
      const auto block = binomial(d_ - 1 - c, k_ - 1 - i);
      if (r < block) break;
      r -= block;
      ++c;
    }
    w.push_back(c);
    ++c;
  }
  return w;
}

Word BasisIndexer::word(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("basis index out of range");
  switch (kind_) {
    case Kind::wedge:
      return wedge_unrank(index);
    case Kind::tensor: {
      Word w(k_);
      for (std::size_t i = k_; i-- > 0;) {
        w[i] = static_cast<std::uint32_t>(index % d_);
        index /= d_;
      }
      return w;
    }
    case Kind::coeff: {
      Word w;
      w.reserve(k_ + 1);
      w.push_back(static_cast<std::uint32_t>(index / wedge_size_));
      auto rest = wedge_unrank(index % wedge_size_);
      w.insert(w.end(), rest.begin(), rest.end());
      return w;
    }
  }
  return {};
}

std::optional<std::size_t> BasisIndexer::index(std::span<const std::uint32_t> w) const {
  const std::size_t expected = kind_ == Kind::coeff ? k_ + 1 : k_;
  if (w.size() != expected) return std::nullopt;
  auto increasing = [&](std::span<const std::uint32_t> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= d_) return false;
      if (i > 0 && s[i - 1] >= s[i]) return false;
    }
    return true;
  };
  switch (kind_) {
    case Kind::wedge:
      if (!increasing(w)) return std::nullopt;
      return wedge_rank(w);
    case Kind::tensor: {
      std::size_t r = 0;
      for (auto c : w) {
        if (c >= d_) return std::nullopt;
        r = r * d_ + c;
      }
      return r;
    }
    case Kind::coeff: {
      if (w[0] >= m_) return std::nullopt;
      auto rest = w.subspan(1);
      if (!increasing(rest)) return std::nullopt;
      return w[0] * wedge_size_ + wedge_rank(rest);
    }
  }
  return std::nullopt;
}

}  // namespace leibniz
