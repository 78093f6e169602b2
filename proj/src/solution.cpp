#include "ybsegre/solution.hpp"

#include <algorithm>
#include <numeric>

namespace ybsegre {

void QuadraticSet::validate() const {
  if (n == 0) throw ValidationError("quadratic set must have at least one element");
  if (table.size() != static_cast<std::size_t>(n) * n)
    throw ValidationError("r table has " + std::to_string(table.size()) +
                          " entries, expected " + std::to_string(static_cast<std::size_t>(n) * n));
  for (const auto& [p, q] : table) {
    if (p >= n || q >= n) throw ValidationError("index out of range in r table");
  }
  if (labels.size() != n)
    throw ValidationError("label list has " + std::to_string(labels.size()) +
                          " entries for a set of size " + std::to_string(n));
}

QuadraticSet QuadraticSet::flip(std::uint32_t n) {
  QuadraticSet qs;
  qs.n = n;
  qs.table.resize(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) qs.table[static_cast<std::size_t>(i) * n + j] = {j, i};
  qs.labels = default_labels(n, "x");
  return qs;
}

QuadraticSet QuadraticSet::permutation(const std::vector<std::uint32_t>& sigma) {
  const std::uint32_t n = static_cast<std::uint32_t>(sigma.size());
  std::vector<std::uint32_t> inverse(n, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (sigma[i] >= n || inverse[sigma[i]] != n)
      throw ValidationError("permutation one-line notation is not a bijection");
    inverse[sigma[i]] = i;
  }
  QuadraticSet qs;
  qs.n = n;
  qs.table.resize(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      qs.table[static_cast<std::size_t>(i) * n + j] = {sigma[j], inverse[i]};
  qs.labels = default_labels(n, "x");
  return qs;
}

std::vector<std::string> QuadraticSet::default_labels(std::uint32_t n, const std::string& stem) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

ActionTables ActionTables::from(const QuadraticSet& qs) {
  qs.validate();
  ActionTables t;
  t.left.assign(qs.n, std::vector<std::uint32_t>(qs.n));
  t.right.assign(qs.n, std::vector<std::uint32_t>(qs.n));
  for (std::uint32_t i = 0; i < qs.n; ++i) {
    for (std::uint32_t j = 0; j < qs.n; ++j) {
      auto [p, q] = qs.r(i, j);
      t.left[i][j] = p;  // left action of x_i on x_j
      t.right[j][i] = q; // right action of x_j on x_i
    }
  }
  return t;
}

namespace {

bool is_permutation(const std::vector<std::uint32_t>& row) {
  std::vector<bool> seen(row.size(), false);
  for (std::uint32_t v : row) {
    if (v >= row.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

} // namespace

SolutionClassification classify(const QuadraticSet& qs) {
  qs.validate();
  const std::uint32_t n = qs.n;
  SolutionClassification c;

  // bijectivity of r on pairs
  {
    std::vector<bool> hit(static_cast<std::size_t>(n) * n, false);
    c.is_bijective = true;
    for (const auto& [p, q] : qs.table) {
      std::size_t idx = static_cast<std::size_t>(p) * n + q;
      if (hit[idx]) {
        c.is_bijective = false;
        break;
      }
      hit[idx] = true;
    }
  }

  // involutivity: r(r(i, j)) = (i, j) for every pair
  c.is_involutive = true;
  for (std::uint32_t i = 0; i < n && c.is_involutive; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      auto [p, q] = qs.r(i, j);
      if (qs.r(p, q) != std::make_pair(i, j)) {
        c.is_involutive = false;
        break;
      }
    }

  // braid relation r12 r23 r12 = r23 r12 r23 on every triple
  auto r12 = [&](std::array<std::uint32_t, 3> t) {
    auto [p, q] = qs.r(t[0], t[1]);
    return std::array<std::uint32_t, 3>{p, q, t[2]};
  };
  auto r23 = [&](std::array<std::uint32_t, 3> t) {
    auto [p, q] = qs.r(t[1], t[2]);
    return std::array<std::uint32_t, 3>{t[0], p, q};
  };
  c.is_braided = true;
  for (std::uint32_t i = 0; i < n && c.is_braided; ++i)
    for (std::uint32_t j = 0; j < n && c.is_braided; ++j)
      for (std::uint32_t k = 0; k < n; ++k) {
        std::array<std::uint32_t, 3> t{i, j, k};
        if (r12(r23(r12(t))) != r23(r12(r23(t)))) {
          c.is_braided = false;
          break;
        }
      }

  // nondegeneracy: every left action row and right action row a permutation
  ActionTables act = ActionTables::from(qs);
  c.is_nondegenerate = true;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!is_permutation(act.left[i]) || !is_permutation(act.right[i])) {
      c.is_nondegenerate = false;
      break;
    }
  }

  c.is_square_free = true;
  for (std::uint32_t i = 0; i < n; ++i)
    if (qs.r(i, i) != std::make_pair(i, i)) {
      c.is_square_free = false;
      break;
    }

  c.is_solution = c.is_bijective && c.is_braided && c.is_involutive && c.is_nondegenerate;
  return c;
}

OrbitReport orbit_report(const QuadraticSet& qs) {
  SolutionClassification c = classify(qs);
  if (!c.is_involutive)
    throw PreconditionError("orbit report requires an involutive map");
  OrbitReport rep;
  const std::uint32_t n = qs.n;
  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
  // scan pairs in deg-lex order of the corresponding words x_i x_j
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (seen[static_cast<std::size_t>(i) * n + j]) continue;
      seen[static_cast<std::size_t>(i) * n + j] = true;
      auto [p, q] = qs.r(i, j);
      if (p == i && q == j) {
        rep.fixed_points.push_back({i, j});
        continue;
      }
      seen[static_cast<std::size_t>(p) * n + q] = true;
      // the orbit is {(i,j), (p,q)}; store the deg-lex larger pair first
      if (std::make_pair(i, j) < std::make_pair(p, q))
        rep.nontrivial_orbits.push_back({{p, q}, {i, j}});
      else
        rep.nontrivial_orbits.push_back({{i, j}, {p, q}});
    }
  }
  return rep;
}

namespace {

void require_solution(const QuadraticSet& qs, const char* role) {
  if (!classify(qs).is_solution)
    throw PreconditionError(std::string(role) +
                            " is not a solution (nondegenerate involutive braided)");
}

} // namespace

QuadraticSet cartesian_product(const QuadraticSet& a, const QuadraticSet& b) {
  require_solution(a, "first factor");
  require_solution(b, "second factor");
  const std::uint32_t m = a.n, n = b.n;
  QuadraticSet prod;
  prod.n = m * n;
  prod.table.resize(static_cast<std::size_t>(prod.n) * prod.n);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t av = 0; av < n; ++av)
      for (std::uint32_t j = 0; j < m; ++j)
        for (std::uint32_t bv = 0; bv < n; ++bv) {
          auto [p, q] = a.r(i, j);
          auto [s, t] = b.r(av, bv);
          std::uint32_t lhs = i * n + av, rhs = j * n + bv;
          prod.table[static_cast<std::size_t>(lhs) * prod.n + rhs] = {p * n + s, q * n + t};
        }
  prod.labels.reserve(prod.n);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t av = 0; av < n; ++av)
      prod.labels.push_back("(" + a.labels[i] + "," + b.labels[av] + ")");
  return prod;
}

QuadraticSet z_solution(const QuadraticSet& a, const QuadraticSet& b) {
  QuadraticSet prod = cartesian_product(a, b);
  prod.labels.clear();
  prod.labels.reserve(prod.n);
  for (std::uint32_t i = 1; i <= a.n; ++i)
    for (std::uint32_t av = 1; av <= b.n; ++av)
      prod.labels.push_back("z" + std::to_string(i) + std::to_string(av));
  return prod;
}

QuadraticPresentation yb_presentation(const QuadraticSet& qs) {
  SolutionClassification c = classify(qs);
  if (!c.is_involutive || !c.is_nondegenerate)
    throw PreconditionError(
        "Yang-Baxter presentation requires an involutive nondegenerate quadratic set");
  OrbitReport orbits = orbit_report(qs);
  QuadraticPresentation pres;
  pres.n_gens = qs.n;
  pres.labels = qs.labels;
  pres.relations.reserve(orbits.nontrivial_orbit_count());
  for (const auto& [big, small] : orbits.nontrivial_orbits) {
    NcPoly f(qs.n);
    f.add_term(Word(qs.n, {big.first, big.second}), 1);
    f.add_term(Word(qs.n, {small.first, small.second}), -1);
    pres.relations.push_back(std::move(f));
  }
  pres.validate();
  return pres;
}

} // namespace ybsegre
