#include "pealab/polytope.hpp"

#include <algorithm>
#include <cstdint>

#include "pealab/error.hpp"
#include "pealab/linalg.hpp"

namespace pealab {

namespace {

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

// Scales so that the first nonzero coefficient is ±1 (equalities: +1).
LinearRow canonical(LinearRow row, bool allow_sign_flip) {
  for (const auto& c : row.coeffs) {
    if (sgn(c) == 0) continue;
    Rational scale = 1 / c;
    if (!allow_sign_flip && sgn(scale) < 0) scale = -scale;
    for (auto& x : row.coeffs) x *= scale;
    row.rhs *= scale;
    break;
  }
  return row;
}

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool contains(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((o.words_[i] & ~words_[i]) != 0) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  RationalVector y;
  Bitset zero_set;
};

}  // namespace

void LinearSystem::deduplicate() {
  auto dedup = [&](std::vector<LinearRow>& rows, bool equality) {
    std::vector<LinearRow> out;
    for (auto& r : rows) {
      if (r.coeffs.size() != variables) throw StructuralError("linear row has wrong width");
      if (is_zero(r.coeffs)) {
        const bool trivial = equality ? sgn(r.rhs) == 0 : sgn(r.rhs) >= 0;
        if (trivial) continue;
      }
      LinearRow c = canonical(std::move(r), equality);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
    }
    rows = std::move(out);
  };
  dedup(equalities, true);
  dedup(inequalities, false);
}

bool LinearSystem::satisfied_by(const RationalVector& x) const {
  if (x.size() != variables) return false;
  for (const auto& r : equalities) {
    if (dot(r.coeffs, x) != r.rhs) return false;
  }
  for (const auto& r : inequalities) {
    if (dot(r.coeffs, x) > r.rhs) return false;
  }
  return true;
}

std::vector<std::size_t> LinearSystem::tight(const RationalVector& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < inequalities.size(); ++i) {
    if (dot(inequalities[i].coeffs, x) == inequalities[i].rhs) out.push_back(i);
  }
  return out;
}

RationalVector primitive(RationalVector v) {
  mpz_class den_lcm = 1;
  for (const auto& q : v) {
    if (sgn(q) != 0) den_lcm = lcm(den_lcm, mpz_class(q.get_den()));
  }
  mpz_class num_gcd = 0;
  for (auto& q : v) {
    q *= den_lcm;
    if (sgn(q) != 0) num_gcd = gcd(num_gcd, mpz_class(q.get_num()));
  }
  if (num_gcd == 0) return v;
  for (auto& q : v) {
    if (sgn(q) != 0) q /= num_gcd;
  }
  return v;
}

int affine_dimension(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  linalg::Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalVector d = points[i];
    for (std::size_t j = 0; j < d.size(); ++j) d[j] -= points[0][j];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(linalg::rank(diffs));
}

VertexEnumeration enumerate_vertices(const LinearSystem& input) {
  LinearSystem sys = input;
  sys.deduplicate();
  const std::size_t n = sys.variables;
  VertexEnumeration out;

  linalg::Matrix eq_a;
  RationalVector eq_b;
  for (const auto& r : sys.equalities) {
    eq_a.push_back(r.coeffs);
    eq_b.push_back(r.rhs);
  }
  const auto param = linalg::solve_affine(eq_a, eq_b, n);
  if (!param) return out;
  const std::size_t k = param->kernel.size();

  auto to_x = [&](const RationalVector& t) {
    RationalVector x = param->particular;
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(t[j]) == 0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (sgn(param->kernel[j][i]) != 0) x[i] += t[j] * param->kernel[j][i];
      }
    }
    return x;
  };

  if (k == 0) {
    if (sys.satisfied_by(param->particular)) {
      out.empty = false;
      out.vertices.push_back(param->particular);
      out.affine_dim = 0;
    }
    return out;
  }

  // Homogenized rows h over y = (λ, t): β·λ − α·t ≥ 0.
  const std::size_t d = k + 1;
  std::vector<RationalVector> rows;
  {
    RationalVector lambda_row = zeros(d);
    lambda_row[0] = 1;
    rows.push_back(std::move(lambda_row));
  }
  for (const auto& r : sys.inequalities) {
    RationalVector h(d);
    h[0] = r.rhs - dot(r.coeffs, param->particular);
    bool any = false;
    for (std::size_t j = 0; j < k; ++j) {
      h[j + 1] = -dot(r.coeffs, param->kernel[j]);
      any = any || sgn(h[j + 1]) != 0;
    }
    if (!any) {
      if (sgn(h[0]) < 0) return out;  // 0 ≤ negative: infeasible
      continue;
    }
    h = primitive(std::move(h));
    if (std::find(rows.begin(), rows.end(), h) == rows.end()) rows.push_back(std::move(h));
  }
  auto support = [](const RationalVector& v) {
    return std::count_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const RationalVector& a, const RationalVector& b) {
    const auto sa = support(a);
    const auto sb = support(b);
    if (sa != sb) return sa < sb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  const std::size_t m = rows.size();

  // Initial simplicial cone from the first d independent rows.
  std::vector<std::size_t> basis;
  linalg::Matrix picked;
  for (std::size_t i = 0; i < m && basis.size() < d; ++i) {
    picked.push_back(rows[i]);
    if (linalg::rank(picked) == basis.size() + 1) {
      basis.push_back(i);
    } else {
      picked.pop_back();
    }
  }
  if (basis.size() < d) throw ConsistencyError("state system is unbounded (homogenized cone not pointed)");

  std::vector<Ray> rays;
  for (std::size_t col = 0; col < d; ++col) {
    // Column `col` of the inverse: solve picked·y = e_col.
    RationalVector e = zeros(d);
    e[col] = 1;
    const auto sol = linalg::solve_affine(picked, e, d);
    Ray ray{primitive(sol->particular), Bitset(m)};
    for (std::size_t b = 0; b < d; ++b) {
      if (b != col) ray.zero_set.set(basis[b]);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> processed(m, false);
  for (auto b : basis) processed[b] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    const RationalVector& h = rows[i];

    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(h, rays[r].y);
      const int s = sgn(value[r]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
    }
    if (neg.empty()) {
      for (auto r : zero) rays[r].zero_set.set(i);
      continue;
    }

    std::vector<Ray> next;
    for (auto r : pos) next.push_back(rays[r]);
    for (auto r : zero) {
      next.push_back(rays[r]);
      next.back().zero_set.set(i);
    }
    for (auto p : pos) {
      for (auto q : neg) {
        const Bitset common = rays[p].zero_set & rays[q].zero_set;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && rays[r].zero_set.contains(common)) adjacent = false;
        }
        if (!adjacent) continue;
        RationalVector y(d);
        for (std::size_t j = 0; j < d; ++j) y[j] = value[p] * rays[q].y[j] - value[q] * rays[p].y[j];
        Ray ray{primitive(std::move(y)), common};
        ray.zero_set.set(i);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
  }

  for (const auto& ray : rays) {
    const int s = sgn(ray.y[0]);
    if (s == 0) throw ConsistencyError("state system is unbounded (recession ray found)");
    RationalVector t(k);
    for (std::size_t j = 0; j < k; ++j) t[j] = ray.y[j + 1] / ray.y[0];
    out.vertices.push_back(to_x(t));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  out.empty = out.vertices.empty();
  out.affine_dim = affine_dimension(out.vertices);
  return out;
}

}  // namespace pealab
