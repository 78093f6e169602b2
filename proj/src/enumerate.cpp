#include "ybsegre/solution.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace ybsegre {

namespace {

std::vector<std::vector<std::uint32_t>> all_permutations(std::uint32_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<std::uint32_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::uint32_t> inverse_of(const std::vector<std::uint32_t>& p) {
  std::vector<std::uint32_t> inv(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

} // namespace

// Exhaustive search over left action tables. Any involutive map with
// bijective left actions has the form r(x, y) = (L_x(y), L_u^{-1}(x)) with
// u = L_x(y): involutivity forces the second component once the first is
// chosen. So enumerating all tuples (L_0, .., L_{n-1}) of permutations
// covers every candidate, and only right-nondegeneracy and the braid
// relation remain to be filtered.
std::vector<QuadraticSet> enumerate_solutions(std::uint32_t n) {
  if (n == 0 || n > 4)
    throw PreconditionError("solution enumeration is implemented for orders 1 through 4");
  const auto perms = all_permutations(n);
  std::vector<std::vector<std::uint32_t>> inverses;
  inverses.reserve(perms.size());
  for (const auto& p : perms) inverses.push_back(inverse_of(p));

  std::vector<QuadraticSet> found;
  std::vector<std::size_t> pick(n, 0); // pick[i] = index of L_{x_i} in perms
  std::vector<std::pair<std::uint32_t, std::uint32_t>> table(static_cast<std::size_t>(n) * n);

  while (true) {
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto& li = perms[pick[i]];
      for (std::uint32_t j = 0; j < n; ++j) {
        std::uint32_t u = li[j];
        table[static_cast<std::size_t>(i) * n + j] = {u, inverses[pick[u]][i]};
      }
    }

    // right-nondegeneracy: for each j the map i -> r(i, j).second is a bijection
    bool ok = true;
    for (std::uint32_t j = 0; j < n && ok; ++j) {
      std::uint32_t mask = 0;
      for (std::uint32_t i = 0; i < n; ++i)
        mask |= 1u << table[static_cast<std::size_t>(i) * n + j].second;
      ok = mask == (1u << n) - 1;
    }

    if (ok) {
      // braid relation on all triples
      auto r = [&](std::uint32_t i, std::uint32_t j) {
        return table[static_cast<std::size_t>(i) * n + j];
      };
      for (std::uint32_t i = 0; i < n && ok; ++i)
        for (std::uint32_t j = 0; j < n && ok; ++j)
          for (std::uint32_t k = 0; k < n; ++k) {
            std::array<std::uint32_t, 3> lhs{i, j, k}, rhs{i, j, k};
            // r12 r23 r12
            { auto [p, q] = r(lhs[0], lhs[1]); lhs = {p, q, lhs[2]}; }
            { auto [p, q] = r(lhs[1], lhs[2]); lhs = {lhs[0], p, q}; }
            { auto [p, q] = r(lhs[0], lhs[1]); lhs = {p, q, lhs[2]}; }
            // r23 r12 r23
            { auto [p, q] = r(rhs[1], rhs[2]); rhs = {rhs[0], p, q}; }
            { auto [p, q] = r(rhs[0], rhs[1]); rhs = {p, q, rhs[2]}; }
            { auto [p, q] = r(rhs[1], rhs[2]); rhs = {rhs[0], p, q}; }
            if (lhs != rhs) {
              ok = false;
              break;
            }
          }
    }

    if (ok) {
      QuadraticSet qs;
      qs.n = n;
      qs.table = table;
      qs.labels = QuadraticSet::default_labels(n, "x");
      found.push_back(std::move(qs));
    }

    // advance the odometer over permutation tuples, last coordinate fastest
    std::uint32_t k = n;
    while (k > 0) {
      if (++pick[k - 1] < perms.size()) break;
      pick[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return found;
}

} // namespace ybsegre
