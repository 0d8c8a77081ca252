#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace leibniz {

using Word = std::vector<std::uint32_t>;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Sorts `word` into increasing order and returns the sign of the sorting
/// permutation, or 0 when a letter repeats (the wedge vanishes).
int wedge_normalize(Word& word);

/// Enumerates the canonical basis words of one chain group.
///
///   wedge(d, k)     strictly increasing k-tuples, lexicographic order
///   tensor(d, k)    all k-tuples, base-d numeric order (first letter most
///                   significant)
///   coeff(m, d, k)  module index followed by a wedge word, module-major
class BasisIndexer {
 public:
  enum class Kind { wedge, tensor, coeff };

  static BasisIndexer wedge(std::size_t space_dim, std::size_t k);
  static BasisIndexer tensor(std::size_t space_dim, std::size_t k);
  static BasisIndexer coeff(std::size_t module_dim, std::size_t space_dim, std::size_t k);

  Kind kind() const { return kind_; }
  std::size_t size() const { return size_; }
  std::size_t degree() const { return k_; }
  std::size_t space_dim() const { return d_; }
  std::size_t module_dim() const { return m_; }

  /// For coeff bases the first letter is the module index.
  Word word(std::size_t index) const;
  /// Index of a canonical word; nullopt if the word is not canonical or out
  /// of range.
  std::optional<std::size_t> index(std::span<const std::uint32_t> word) const;

  friend bool operator==(const BasisIndexer&, const BasisIndexer&) = default;

 private:
  BasisIndexer(Kind kind, std::size_t m, std::size_t d, std::size_t k);
  std::size_t wedge_rank(std::span<const std::uint32_t> w) const;
  Word wedge_unrank(std::size_t r) const;

  Kind kind_;
  std::size_t m_;
  std::size_t d_;
  std::size_t k_;
  std::size_t wedge_size_;
  std::size_t size_;
};

}  // namespace leibniz
