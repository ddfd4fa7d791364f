#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace mac {

using Rational = mpq_class;

/// Sparse vector over Q with strictly ascending indices and no stored zeros.
class SparseVector {
 public:
  struct Entry {
    std::size_t index;
    Rational value;
  };

  SparseVector() = default;

  /// Appends an entry; indices must arrive in ascending order. Zeros are skipped.
  void push_back(std::size_t index, Rational value);
  /// Adds `value` at `index`, keeping the representation sorted.
  void add(std::size_t index, const Rational& value);

  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] std::size_t nonzeros() const noexcept { return entries_.size(); }
  [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
  [[nodiscard]] const Entry& leading() const { return entries_.front(); }
  /// Value at index (zero if absent).
  [[nodiscard]] Rational at(std::size_t index) const;

  /// *this - factor * other
  [[nodiscard]] SparseVector minus_scaled(const SparseVector& other, const Rational& factor) const;
  void scale(const Rational& factor);

  friend bool operator==(const SparseVector& a, const SparseVector& b);

 private:
  std::vector<Entry> entries_;
};

/// Incrementally built row-echelon basis over Q.
///
/// Each inserted vector may carry a source id. Every stored row r satisfies
/// r ≡ Σ T_r[k]·source_k modulo the span of the untracked insertions, which
/// lets callers read off kernel relations (insertions that reduce to zero)
/// and coordinates of vectors in the span.
class EchelonBasis {
 public:
  struct Reduction {
    SparseVector residual;     ///< zero iff the input lies in the span
    SparseVector combination;  ///< coefficients over tracked source ids
  };

  /// Inserts an untracked vector; returns true if it was independent.
  bool insert(const SparseVector& v);

  /// Inserts a vector tracked under `source_id`. When it is dependent nothing
  /// is stored and `relation` holds Σ c_k·source_k ≡ 0 (with c_{source_id} = 1).
  struct InsertResult {
    bool independent;
    SparseVector relation;  ///< meaningful when !independent
  };
  InsertResult insert_tracked(const SparseVector& v, std::size_t source_id);

  /// Reduces v against the stored rows (leading-entry elimination).
  [[nodiscard]] Reduction reduce(const SparseVector& v) const;

  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }

 private:
  struct Row {
    SparseVector vector;
    SparseVector tags;
  };

  Reduction reduce_impl(SparseVector v, SparseVector tags) const;

  std::vector<Row> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

}  // namespace mac
