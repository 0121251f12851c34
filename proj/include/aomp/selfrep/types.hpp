#pragma once

#include <cstdint>
#include <vector>

#include "aomp/error.hpp"

namespace aomp {

/// Indices currently available as dictionary atoms.
class DictionaryMask {
 public:
  explicit DictionaryMask(std::size_t n, bool all_active = true)
      : active_(n, all_active ? 1 : 0), count_(all_active ? n : 0) {}

  std::size_t size() const noexcept { return active_.size(); }
  std::size_t count() const noexcept { return count_; }
  bool active(std::size_t j) const { return active_[j] != 0; }

  /// Active atoms other than `i`.
  std::size_t count_excluding(std::size_t i) const { return count_ - (i < size() && active(i) ? 1 : 0); }

  void deactivate(std::size_t j) {
    if (active_[j]) {
      active_[j] = 0;
      --count_;
    }
  }
  void activate(std::size_t j) {
    if (!active_[j]) {
      active_[j] = 1;
      ++count_;
    }
  }

  friend bool operator==(const DictionaryMask&, const DictionaryMask&) = default;

 private:
  std::vector<std::uint8_t> active_;
  std::size_t count_;
};

/// Column i of the coefficient matrix C, stored by support. The owner index
/// never appears in `indices`.
struct SparseColumn {
  std::size_t owner = 0;
  std::vector<std::size_t> indices;
  std::vector<double> values;
  bool trivial = false;         // no atom was available (empty dictionary)
  bool rank_deficient = false;  // solver hit a numerically dependent atom

  std::size_t nnz() const { return indices.size(); }
  friend bool operator==(const SparseColumn&, const SparseColumn&) = default;
};

/// Work counters. inner_products counts length-D dot products against
/// dictionary atoms; flops_estimate adds the remaining arithmetic.
struct OpCounter {
  std::uint64_t inner_products = 0;
  std::uint64_t flops_estimate = 0;

  void add_inner_products(std::uint64_t count, std::size_t dim) {
    inner_products += count;
    flops_estimate += 2 * count * dim;
  }
  void add_flops(std::uint64_t f) { flops_estimate += f; }

  OpCounter& operator+=(const OpCounter& o) {
    inner_products += o.inner_products;
    flops_estimate += o.flops_estimate;
    return *this;
  }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

}  // namespace aomp
