#include "mac/loopspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mac/cohomology.hpp"
#include "mac/errors.hpp"

namespace mac {

namespace {

// series *= (1 - t^k)^(-count), truncated.
void multiply_even_factor(std::vector<BigInt>& series, int k, const BigInt& count) {
  const int top = static_cast<int>(series.size()) - 1;
  // coefficient of t^(k m) is C(count + m - 1, m)
  std::vector<BigInt> factor(static_cast<std::size_t>(top / k + 1));
  factor[0] = 1;
  for (std::size_t m = 1; m < factor.size(); ++m) {
    factor[m] = factor[m - 1] * (count + static_cast<long>(m) - 1) / static_cast<long>(m);
  }
  std::vector<BigInt> out(series.size(), 0);
  for (int i = 0; i <= top; ++i) {
    if (series[static_cast<std::size_t>(i)] == 0) continue;
    for (std::size_t m = 0; i + static_cast<int>(m) * k <= top; ++m) {
      out[static_cast<std::size_t>(i) + m * static_cast<std::size_t>(k)] +=
          series[static_cast<std::size_t>(i)] * factor[m];
    }
  }
  series = std::move(out);
}

// series *= (1 + t^k)^count, truncated.
void multiply_odd_factor(std::vector<BigInt>& series, int k, const BigInt& count) {
  const int top = static_cast<int>(series.size()) - 1;
  std::vector<BigInt> factor(static_cast<std::size_t>(top / k + 1));
  factor[0] = 1;
  for (std::size_t m = 1; m < factor.size(); ++m) {
    factor[m] = factor[m - 1] * (count - static_cast<long>(m) + 1) / static_cast<long>(m);
  }
  std::vector<BigInt> out(series.size(), 0);
  for (int i = 0; i <= top; ++i) {
    if (series[static_cast<std::size_t>(i)] == 0) continue;
    for (std::size_t m = 0; i + static_cast<int>(m) * k <= top; ++m) {
      out[static_cast<std::size_t>(i) + m * static_cast<std::size_t>(k)] +=
          series[static_cast<std::size_t>(i)] * factor[m];
    }
  }
  series = std::move(out);
}

void multiply_factor(std::vector<BigInt>& series, int k, const BigInt& count) {
  if (count == 0) return;
  if (k % 2 == 0) {
    multiply_even_factor(series, k, count);
  } else {
    multiply_odd_factor(series, k, count);
  }
}

void check_truncation(int truncation) {
  if (truncation < 1) throw InputError("truncation must be >= 1");
}

}  // namespace

BigInt HomotopyRankSeries::rank(int k) const {
  if (k < 1 || k > truncation()) return 0;
  return ranks[static_cast<std::size_t>(k - 1)];
}

BigInt HomotopyRankSeries::partial_sum(int m) const {
  BigInt total = 0;
  for (int k = 1; k <= std::min(m, truncation()); ++k) total += ranks[static_cast<std::size_t>(k - 1)];
  return total;
}

SphereModel product_model(const EllipticModel& model) {
  return {SphereModel::Kind::Product, model.sphere_dims};
}

SphereModel wedge_model(const SimplicialComplex& witness, const Limits& limits) {
  const auto ghosts = witness.ghost_vertices();
  if (!ghosts.empty()) throw GhostVertexError(ghosts.front());
  const HochsterTable table = HochsterTable::build(witness, limits);
  if (!is_trivial_ring(table).trivial) {
    throw NotApplicableError("cohomology of Z(K_I) has a nonzero product; not a wedge of spheres");
  }
  SphereModel model{SphereModel::Kind::Wedge, {}};
  const auto& betti = table.betti();
  for (std::size_t d = 1; d < betti.size(); ++d) {
    for (std::int64_t i = 0; i < betti[d]; ++i) model.dims.push_back(static_cast<int>(d));
  }
  return model;
}

std::vector<BigInt> tensor_algebra_series(const std::vector<int>& dims, int truncation) {
  std::vector<BigInt> a(static_cast<std::size_t>(truncation + 1), 0);
  a[0] = 1;
  for (int k = 1; k <= truncation; ++k) {
    for (int d : dims) {
      const int g = d - 1;
      if (g >= 1 && g <= k) a[static_cast<std::size_t>(k)] += a[static_cast<std::size_t>(k - g)];
    }
  }
  return a;
}

std::vector<BigInt> enveloping_series(const std::vector<BigInt>& ranks, int truncation) {
  std::vector<BigInt> series(static_cast<std::size_t>(truncation + 1), 0);
  series[0] = 1;
  for (std::size_t k = 1; k <= ranks.size() && static_cast<int>(k) <= truncation; ++k) {
    multiply_factor(series, static_cast<int>(k), ranks[k - 1]);
  }
  return series;
}

HomotopyRankSeries free_lie_ranks(const SphereModel& wedge, int truncation) {
  check_truncation(truncation);
  if (wedge.kind != SphereModel::Kind::Wedge) throw InputError("free_lie_ranks needs a wedge model");
  if (wedge.dims.empty()) throw InputError("free_lie_ranks needs at least one sphere");
  for (int d : wedge.dims) {
    if (d < 2) throw InputError("sphere dimension " + std::to_string(d) + " is not simply connected");
  }
  const auto target = tensor_algebra_series(wedge.dims, truncation);
  HomotopyRankSeries out{wedge, {}};
  std::vector<BigInt> product(static_cast<std::size_t>(truncation + 1), 0);
  product[0] = 1;
  for (int k = 1; k <= truncation; ++k) {
    // The new factor contributes l_k·t^k at its lowest order.
    BigInt l = target[static_cast<std::size_t>(k)] - product[static_cast<std::size_t>(k)];
    multiply_factor(product, k, l);
    out.ranks.push_back(std::move(l));
  }
  return out;
}

HomotopyRankSeries product_ranks(const SphereModel& product, int truncation) {
  check_truncation(truncation);
  if (product.kind != SphereModel::Kind::Product) throw InputError("product_ranks needs a product model");
  HomotopyRankSeries out{product, std::vector<BigInt>(static_cast<std::size_t>(truncation), 0)};
  for (int d : product.dims) {
    if (d % 2 == 0 || d < 3) {
      throw InputError("product model sphere S^" + std::to_string(d) + " is not an odd sphere of dimension >= 3");
    }
    if (d - 1 <= truncation) out.ranks[static_cast<std::size_t>(d - 2)] += 1;
  }
  return out;
}

GrowthCertificate growth_certificate(const HomotopyRankSeries& series, double delta) {
  const int n = series.truncation();
  if (n < 12) throw InputError("growth certificate needs truncation >= 12");
  GrowthCertificate cert;
  const bool exponential = series.model.kind == SphereModel::Kind::Wedge && series.model.dims.size() >= 2;
  cert.kind = exponential ? GrowthCertificate::Kind::Exponential : GrowthCertificate::Kind::Finite;

  const BigInt full = series.partial_sum(n);
  const BigInt half = series.partial_sum(n / 2);
  if (half > 0) cert.ratio = std::pow(full.get_d() / half.get_d(), 2.0 / n);

  if (exponential) {
    cert.numeric_agrees = !cert.ratio || *cert.ratio > 1.0 + delta;
  } else {
    int top = 0;
    for (int d : series.model.dims) top = std::max(top, d);
    // Finite: nothing beyond the top sphere degree (for odd spheres, beyond d-1).
    bool quiet = true;
    for (int k = std::max(top, 1); k <= n; ++k) {
      if (series.rank(k) != 0 && !(series.model.kind == SphereModel::Kind::Wedge && k == 2 * top - 2)) {
        quiet = false;
      }
    }
    cert.numeric_agrees = quiet && (!cert.ratio || *cert.ratio <= 1.0 + delta);
  }
  return cert;
}

}  // namespace mac
