#include "mac/exact_linalg.hpp"

#include <algorithm>
#include <cassert>

namespace mac {

void SparseVector::push_back(std::size_t index, Rational value) {
  assert(entries_.empty() || entries_.back().index < index);
  if (sgn(value) != 0) entries_.push_back({index, std::move(value)});
}

void SparseVector::add(std::size_t index, const Rational& value) {
  if (sgn(value) == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) {
    it->value += value;
    if (sgn(it->value) == 0) entries_.erase(it);
  } else {
    entries_.insert(it, Entry{index, value});
  }
}

Rational SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->value;
  return Rational(0);
}

SparseVector SparseVector::minus_scaled(const SparseVector& other, const Rational& factor) const {
  if (sgn(factor) == 0) return *this;
  SparseVector out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->index < a->index) {
      out.entries_.push_back({b->index, -factor * b->value});
      ++b;
    } else {
      Rational v = a->value - factor * b->value;
      if (sgn(v) != 0) out.entries_.push_back({a->index, std::move(v)});
      ++a;
      ++b;
    }
  }
  return out;
}

void SparseVector::scale(const Rational& factor) {
  if (sgn(factor) == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.value *= factor;
}

bool operator==(const SparseVector& a, const SparseVector& b) {
  return std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
                    [](const auto& x, const auto& y) { return x.index == y.index && x.value == y.value; });
}

EchelonBasis::Reduction EchelonBasis::reduce_impl(SparseVector v, SparseVector tags) const {
  while (!v.empty()) {
    auto it = pivot_row_.find(v.leading().index);
    if (it == pivot_row_.end()) break;
    const Row& row = rows_[it->second];
    const Rational factor = v.leading().value;  // rows are normalized to leading 1
    v = v.minus_scaled(row.vector, factor);
    if (!row.tags.empty()) tags = tags.minus_scaled(row.tags, factor);
  }
  return {std::move(v), std::move(tags)};
}

EchelonBasis::Reduction EchelonBasis::reduce(const SparseVector& v) const {
  Reduction r = reduce_impl(v, SparseVector{});
  // reduce_impl tracks v - Σλ·row; the coordinates of v are the negation.
  r.combination.scale(Rational(-1));
  return r;
}

bool EchelonBasis::insert(const SparseVector& v) {
  Reduction r = reduce_impl(v, SparseVector{});
  if (r.residual.empty()) return false;
  const Rational inv = 1 / r.residual.leading().value;
  r.residual.scale(inv);
  r.combination.scale(inv);
  pivot_row_.emplace(r.residual.leading().index, rows_.size());
  rows_.push_back({std::move(r.residual), std::move(r.combination)});
  return true;
}

EchelonBasis::InsertResult EchelonBasis::insert_tracked(const SparseVector& v, std::size_t source_id) {
  SparseVector tags;
  tags.push_back(source_id, Rational(1));
  Reduction r = reduce_impl(v, std::move(tags));
  if (r.residual.empty()) return {false, std::move(r.combination)};
  const Rational inv = 1 / r.residual.leading().value;
  r.residual.scale(inv);
  r.combination.scale(inv);
  pivot_row_.emplace(r.residual.leading().index, rows_.size());
  rows_.push_back({std::move(r.residual), std::move(r.combination)});
  return {true, {}};
}

}  // namespace mac
