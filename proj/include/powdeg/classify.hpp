#pragma once

#include <cstdint>
#include <vector>

#include "powdeg/group.hpp"
#include "powdeg/number_theory.hpp"

namespace powdeg {

/// Partitions of n as ascending part lists, e.g. 3 -> [1,1,1] [1,2] [3].
inline std::vector<std::vector<unsigned>> partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  auto recurse = [&](auto&& self, unsigned remaining, unsigned min_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = min_part; part <= remaining; ++part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, n, 1);
  return out;
}

/// Every abelian group of order n up to isomorphism: one exponent partition
/// per prime of n.
inline std::vector<CanonicalAbelianGroup> abelian_groups_of_order(std::uint64_t n) {
  std::vector<CanonicalAbelianGroup> out;
  if (n < 2) return out;
  auto primes = factorize(n);
  std::vector<std::vector<std::vector<unsigned>>> choices;
  for (auto const& pp : primes) choices.push_back(partitions(pp.e));

  std::vector<std::size_t> pick(primes.size(), 0);
  for (;;) {
    std::vector<PrimeComponent> comps;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      comps.push_back({primes[i].p, choices[i][pick[i]]});
    }
    out.emplace_back(std::move(comps));

    std::size_t i = pick.size();
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

/// All abelian groups of order 2..max_order, ordered by order.
inline std::vector<CanonicalAbelianGroup> abelian_groups_up_to(std::uint64_t max_order) {
  std::vector<CanonicalAbelianGroup> out;
  for (std::uint64_t n = 2; n <= max_order; ++n) {
    auto groups = abelian_groups_of_order(n);
    out.insert(out.end(), groups.begin(), groups.end());
  }
  return out;
}

}  // namespace powdeg
