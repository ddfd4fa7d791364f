#include "mac/cohomology.hpp"

#include <algorithm>
#include <string>

#include "mac/errors.hpp"

namespace mac {

namespace {

std::uint64_t below(int v) { return (std::uint64_t{1} << (v - 1)) - 1; }

int parity_sign(int count) { return (count % 2 == 0) ? 1 : -1; }

std::vector<std::size_t> reduced_dimensions(const CochainComplex& c) {
  const int top = c.max_degree();
  // ranks[j+1] = rank of d_j : C^j -> C^(j+1)
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int j = -1; j < top; ++j) {
    EchelonBasis basis;
    for (std::size_t i = 0; i < c.rank(j); ++i) basis.insert(c.coboundary_of_basis(j, i));
    ranks[static_cast<std::size_t>(j + 1)] = basis.rank();
  }
  std::vector<std::size_t> dims(ranks.size(), 0);
  for (int j = -1; j <= top; ++j) {
    const std::size_t slot = static_cast<std::size_t>(j + 1);
    const std::size_t kernel = c.rank(j) - ranks[slot];
    const std::size_t image = j > -1 ? ranks[slot - 1] : 0;
    dims[slot] = kernel - image;
  }
  return dims;
}

std::vector<VertexSet> faces_within(const std::vector<VertexSet>& faces, VertexSet subset) {
  std::vector<VertexSet> out;
  for (VertexSet f : faces) {
    if (f.subset_of(subset)) out.push_back(f);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// CochainComplex

CochainComplex::CochainComplex(std::vector<VertexSet> faces) {
  int top = -1;
  for (VertexSet f : faces) top = std::max(top, f.size() - 1);
  by_degree_.resize(static_cast<std::size_t>(top + 2));
  for (VertexSet f : faces) {
    by_degree_[static_cast<std::size_t>(f.size())].push_back(f);
    vertices_ = vertices_ | f;
  }
  for (auto& level : by_degree_) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  if (by_degree_.empty() || by_degree_[0].empty()) {
    throw InputError("cochain complex needs the empty face");
  }
}

const std::vector<VertexSet>& CochainComplex::basis(int degree) const {
  const int slot = degree + 1;
  if (slot < 0 || slot >= static_cast<int>(by_degree_.size())) return empty_;
  return by_degree_[static_cast<std::size_t>(slot)];
}

std::size_t CochainComplex::index_of(VertexSet sigma) const {
  const auto& level = basis(sigma.size() - 1);
  auto it = std::lower_bound(level.begin(), level.end(), sigma);
  if (it == level.end() || *it != sigma) return npos;
  return static_cast<std::size_t>(it - level.begin());
}

SparseVector CochainComplex::coboundary_of_basis(int degree, std::size_t index) const {
  const VertexSet sigma = basis(degree).at(index);
  std::vector<std::pair<std::size_t, int>> terms;
  for_each_vertex(vertices_ - sigma, [&](int added) {
    const std::size_t tau = index_of(VertexSet(sigma).insert(added));
    if (tau == npos) return;
    const int position = std::popcount(sigma.bits() & below(added));
    terms.emplace_back(tau, parity_sign(position));
  });
  std::sort(terms.begin(), terms.end());
  SparseVector out;
  for (const auto& [i, s] : terms) out.push_back(i, Rational(s));
  return out;
}

SparseVector CochainComplex::coboundary(int degree, const SparseVector& cochain) const {
  SparseVector out;
  for (const auto& e : cochain.entries()) {
    const SparseVector column = coboundary_of_basis(degree, e.index);
    for (const auto& t : column.entries()) {
      out.add(t.index, e.value * t.value);
    }
  }
  return out;
}

bool CochainComplex::coboundary_squares_to_zero() const {
  for (int j = -1; j + 2 <= max_degree(); ++j) {
    for (std::size_t i = 0; i < rank(j); ++i) {
      if (!coboundary(j + 1, coboundary_of_basis(j, i)).empty()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// ReducedCohomology

ReducedCohomology::ReducedCohomology(CochainComplex cochains) : cochains_(std::move(cochains)) {
  const int top = cochains_.max_degree();
  degrees_.resize(static_cast<std::size_t>(top + 2));
  for (int j = -1; j <= top; ++j) {
    Degree& slot = degrees_[static_cast<std::size_t>(j + 1)];
    std::vector<SparseVector> kernel;
    EchelonBasis images;
    for (std::size_t i = 0; i < cochains_.rank(j); ++i) {
      auto result = images.insert_tracked(cochains_.coboundary_of_basis(j, i), i);
      if (!result.independent) kernel.push_back(std::move(result.relation));
    }
    for (std::size_t i = 0; i < cochains_.rank(j - 1); ++i) {
      slot.reducer.insert(cochains_.coboundary_of_basis(j - 1, i));
    }
    for (auto& z : kernel) {
      if (slot.reducer.insert_tracked(z, slot.representatives.size()).independent) {
        slot.representatives.push_back(std::move(z));
      }
    }
  }
}

std::size_t ReducedCohomology::dimension(int degree) const {
  return representatives(degree).size();
}

bool ReducedCohomology::is_zero() const {
  return std::all_of(degrees_.begin(), degrees_.end(),
                     [](const Degree& d) { return d.representatives.empty(); });
}

const std::vector<SparseVector>& ReducedCohomology::representatives(int degree) const {
  static const std::vector<SparseVector> none;
  const int slot = degree + 1;
  if (slot < 0 || slot >= static_cast<int>(degrees_.size())) return none;
  return degrees_[static_cast<std::size_t>(slot)].representatives;
}

std::vector<Rational> ReducedCohomology::coordinates(int degree, const SparseVector& cocycle) const {
  const std::size_t dim = dimension(degree);
  std::vector<Rational> coords(dim);
  if (cocycle.empty()) return coords;
  if (!cochains_.coboundary(degree, cocycle).empty()) {
    throw InputError("cochain of degree " + std::to_string(degree) + " is not a cocycle");
  }
  const auto& reducer = degrees_.at(static_cast<std::size_t>(degree + 1)).reducer;
  const auto reduced = reducer.reduce(cocycle);
  for (const auto& e : reduced.combination.entries()) coords.at(e.index) = e.value;
  return coords;
}

ReducedCohomology reduced_cohomology(const SimplicialComplex& k) {
  return ReducedCohomology(CochainComplex(k.faces()));
}

// ---------------------------------------------------------------------------
// Hochster decomposition

HochsterTable HochsterTable::build(const SimplicialComplex& k, const Limits& limits) {
  const int n = k.vertex_count();
  if (n > limits.max_vertices) {
    throw ResourceError("Hochster table enumerates 2^" + std::to_string(n) +
                        " subsets; limit is n <= " + std::to_string(limits.max_vertices));
  }
  const auto faces = k.faces();
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::shared_ptr<const ReducedCohomology>> groups(subsets);
  parallel_for(subsets, limits.threads, [&](std::size_t bits) {
    const VertexSet subset(bits);
    // A full subcomplex on a face is a simplex, hence acyclic.
    if (!subset.empty() && k.is_face(subset)) return;
    auto group = std::make_shared<const ReducedCohomology>(CochainComplex(faces_within(faces, subset)));
    if (!group->is_zero()) groups[bits] = std::move(group);
  });

  HochsterTable table;
  table.n_ = n;
  for (std::size_t bits = 0; bits < subsets; ++bits) {
    if (!groups[bits]) continue;
    const VertexSet subset(bits);
    for (int j = -1; j <= groups[bits]->max_degree(); ++j) {
      const std::size_t dim = groups[bits]->dimension(j);
      if (dim == 0) continue;
      const HochsterEntry entry{subset, j, dim};
      table.entries_.push_back(entry);
      const auto total = static_cast<std::size_t>(entry.total_degree());
      if (table.betti_.size() <= total) table.betti_.resize(total + 1, 0);
      table.betti_[total] += static_cast<std::int64_t>(dim);
    }
    table.groups_.emplace(subset, std::move(groups[bits]));
  }
  return table;
}

const ReducedCohomology* HochsterTable::cohomology(VertexSet subset) const {
  auto it = groups_.find(subset);
  return it == groups_.end() ? nullptr : it->second.get();
}

std::vector<ClassRef> HochsterTable::basis_classes() const {
  std::vector<ClassRef> out;
  for (const auto& e : entries_) {
    for (std::size_t i = 0; i < e.dimension; ++i) out.push_back({e.subset, e.degree, i});
  }
  return out;
}

std::vector<std::int64_t> hochster_betti(const SimplicialComplex& k, const Limits& limits) {
  const int n = k.vertex_count();
  if (n > limits.max_vertices) {
    throw ResourceError("Hochster sum enumerates 2^" + std::to_string(n) +
                        " subsets; limit is n <= " + std::to_string(limits.max_vertices));
  }
  const auto faces = k.faces();
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::vector<std::size_t>> dims(subsets);
  parallel_for(subsets, limits.threads, [&](std::size_t bits) {
    const VertexSet subset(bits);
    if (!subset.empty() && k.is_face(subset)) return;
    dims[bits] = reduced_dimensions(CochainComplex(faces_within(faces, subset)));
  });
  std::vector<std::int64_t> betti;
  for (std::size_t bits = 0; bits < subsets; ++bits) {
    const int size = VertexSet(bits).size();
    for (std::size_t slot = 0; slot < dims[bits].size(); ++slot) {
      if (dims[bits][slot] == 0) continue;
      // slot = j + 1, total degree j + |I| + 1
      const auto total = slot + static_cast<std::size_t>(size);
      if (betti.size() <= total) betti.resize(total + 1, 0);
      betti[total] += static_cast<std::int64_t>(dims[bits][slot]);
    }
  }
  return betti;
}

// ---------------------------------------------------------------------------
// Star product

bool TableClass::is_zero() const {
  return std::all_of(coordinates.begin(), coordinates.end(),
                     [](const Rational& r) { return sgn(r) == 0; });
}

SparseVector cross_cochain(const CochainComplex& left, VertexSet left_subset, int left_degree,
                           const SparseVector& alpha, const CochainComplex& right,
                           VertexSet right_subset, int right_degree, const SparseVector& beta,
                           const CochainComplex& target) {
  const int degree = left_degree + right_degree + 1;
  const int degree_sign = parity_sign((left_degree + 1) * right_degree);
  SparseVector out;
  const auto& basis = target.basis(degree);
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const VertexSet sigma = basis[idx];
    const VertexSet a = sigma & left_subset;
    const VertexSet b = sigma & right_subset;
    if ((a | b) != sigma || a.size() != left_degree + 1 || b.size() != right_degree + 1) continue;
    const std::size_t ia = left.index_of(a);
    const std::size_t ib = right.index_of(b);
    if (ia == CochainComplex::npos || ib == CochainComplex::npos) continue;
    const Rational va = alpha.at(ia);
    if (sgn(va) == 0) continue;
    const Rational vb = beta.at(ib);
    if (sgn(vb) == 0) continue;
    int inversions = 0;
    for_each_vertex(b, [&](int y) { inversions += std::popcount(a.bits() & ~below(y + 1)); });
    out.push_back(idx, Rational(parity_sign(inversions) * degree_sign) * va * vb);
  }
  return out;
}

namespace {

const SparseVector& lookup(const ClassRef& ref, const HochsterTable& table) {
  const ReducedCohomology* group = table.cohomology(ref.subset);
  if (group == nullptr || ref.index >= group->dimension(ref.degree)) {
    throw InputError("class (" + ref.subset.to_string() + ", " + std::to_string(ref.degree) + ", #" +
                     std::to_string(ref.index) + ") is not a basis class of this table");
  }
  return group->representatives(ref.degree)[ref.index];
}

}  // namespace

TableClass star_product(const ClassRef& alpha, const ClassRef& beta, const HochsterTable& table) {
  const SparseVector& a = lookup(alpha, table);
  const SparseVector& b = lookup(beta, table);
  TableClass out{alpha.subset | beta.subset, alpha.degree + beta.degree + 1, {}};
  if (alpha.subset.intersects(beta.subset)) return out;
  const ReducedCohomology* target = table.cohomology(out.subset);
  if (target == nullptr || target->dimension(out.degree) == 0) return out;
  const SparseVector cross = cross_cochain(
      table.cohomology(alpha.subset)->cochains(), alpha.subset, alpha.degree, a,
      table.cohomology(beta.subset)->cochains(), beta.subset, beta.degree, b, target->cochains());
  out.coordinates = target->coordinates(out.degree, cross);
  return out;
}

bool lacks_disjoint_support(const HochsterTable& table) {
  std::vector<VertexSet> supports;
  for (const auto& e : table.entries()) {
    if (!e.subset.empty() && (supports.empty() || supports.back() != e.subset)) {
      supports.push_back(e.subset);
    }
  }
  for (std::size_t i = 0; i < supports.size(); ++i) {
    for (std::size_t j = i + 1; j < supports.size(); ++j) {
      if (!supports[i].intersects(supports[j])) return false;
    }
  }
  return true;
}

std::vector<std::pair<ClassRef, ClassRef>> nonzero_products(const HochsterTable& table) {
  std::vector<ClassRef> positive;
  for (const auto& c : table.basis_classes()) {
    if (!c.subset.empty()) positive.push_back(c);
  }
  std::vector<std::pair<ClassRef, ClassRef>> found;
  for (const auto& a : positive) {
    for (const auto& b : positive) {
      if (!star_product(a, b, table).is_zero()) found.emplace_back(a, b);
    }
  }
  return found;
}

TrivialRingResult is_trivial_ring(const HochsterTable& table) {
  TrivialRingResult result;
  if (lacks_disjoint_support(table)) {
    result.certificate.kind = RingCertificate::Kind::NoDisjointSupport;
    return result;
  }
  std::vector<ClassRef> positive;
  for (const auto& c : table.basis_classes()) {
    if (!c.subset.empty()) positive.push_back(c);
  }
  for (std::size_t i = 0; i < positive.size(); ++i) {
    for (std::size_t j = 0; j < positive.size(); ++j) {
      const auto& a = positive[i];
      const auto& b = positive[j];
      // Products of disjoint supports are graded-commutative; one order suffices.
      if (a.subset.intersects(b.subset) || !(a.subset < b.subset)) continue;
      TableClass product = star_product(a, b, table);
      if (!product.is_zero()) {
        result.trivial = false;
        result.certificate = {RingCertificate::Kind::NonzeroProduct, a, b, std::move(product)};
        return result;
      }
    }
  }
  result.certificate.kind = RingCertificate::Kind::AllProductsVanish;
  return result;
}

TrivialRingResult is_trivial_ring(const SimplicialComplex& k, const Limits& limits) {
  return is_trivial_ring(HochsterTable::build(k, limits));
}

}  // namespace mac
