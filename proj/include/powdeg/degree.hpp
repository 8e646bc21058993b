#pragma once

// Closed-form degrees in the power graph of a finite abelian group.
//
// For g != e the directed power graph gives
//   out-degree        d+(g)  = |g| - 1
//   bidirectional     d+-(g) = phi(|g|) - 1
//   undirected degree d(g)   = |g| - phi(|g|) + d-(g)
// so everything reduces to the in-degree d-(g). Inside one p-component
// Z_{p^m_1} x ... x Z_{p^m_n} (m ascending) with coordinate order exponents
// t_1..t_n,
//   d-(g) = -1 + phi(p^t_w) * sum_{beta=0}^{B} p^(sum_j min(m_j, beta))
// where t_w = max t, k is the first position with t_k != 0 and
// B = min_{j >= k} (m_j - t_j). Components of coprime order combine through
// (prod (d_i + 1)) - 1, separately for d+, d+- and d-.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "powdeg/bigint.hpp"
#include "powdeg/errors.hpp"
#include "powdeg/group.hpp"
#include "powdeg/number_theory.hpp"

namespace powdeg {

/// Out-degree, in-degree and bidirectional-edge count of one vertex of the
/// directed power graph.
struct DegreeTriple {
  BigInt out_deg;
  BigInt in_deg;
  BigInt bidir;

  /// Degree in the undirected power graph.
  BigInt undirected() const { return out_deg + in_deg - bidir; }

  friend bool operator==(DegreeTriple const&, DegreeTriple const&) = default;

  friend std::ostream& operator<<(std::ostream& os, DegreeTriple const& d) {
    return os << "(out " << d.out_deg << ", in " << d.in_deg << ", bidir "
              << d.bidir << ")";
  }
};

/// Undirected degree -> number of elements with that degree.
using DegreeHistogram = std::map<BigInt, BigInt>;

namespace detail {

inline void check_component_shape(std::span<unsigned const> m,
                                   std::span<unsigned const> t) {
  if (m.size() != t.size() || m.empty()) {
    throw std::invalid_argument("exponent and order-type lengths differ");
  }
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0 || (j > 0 && m[j - 1] > m[j])) {
      throw std::invalid_argument("exponents must be positive and ascending");
    }
    if (t[j] > m[j]) {
      throw std::invalid_argument("order exponent exceeds cyclic factor");
    }
  }
}

}  // namespace detail

/// In-degree of a non-identity element of the abelian p-group with ascending
/// exponents `m`, given its order type `t` in that group.
inline BigInt indegree_p_component(std::uint64_t p, std::span<unsigned const> m,
                                   std::span<unsigned const> t) {
  detail::check_component_shape(m, t);
  auto first = std::find_if(t.begin(), t.end(), [](unsigned x) { return x != 0; });
  if (first == t.end()) {
    throw std::invalid_argument(
        "identity component has no closed-form in-degree; use the group order");
  }
  auto const k = static_cast<std::size_t>(first - t.begin());

  unsigned const t_w = max_exponent(std::vector<unsigned>(t.begin(), t.end()));
  unsigned bound = m[k] - t[k];
  for (std::size_t j = k; j < m.size(); ++j) bound = std::min(bound, m[j] - t[j]);

  BigInt sum = 0;
  for (unsigned beta = 0; beta <= bound; ++beta) {
    unsigned exponent = 0;
    for (unsigned mj : m) exponent += std::min(mj, beta);
    sum += pow(p, exponent);
  }
  BigInt result = phi_prime_power(p, t_w) * sum - 1;
  if (result < 0) throw InvariantViolation("negative in-degree");
  return result;
}

inline BigInt indegree_p_component(std::uint64_t p,
                                   std::vector<unsigned> const& m,
                                   std::vector<unsigned> const& t) {
  return indegree_p_component(p, std::span<unsigned const>(m),
                              std::span<unsigned const>(t));
}

/// The identity is a power of every element.
inline BigInt indegree_identity(CanonicalAbelianGroup const& group) {
  return group.order() - 1;
}

/// (prod (d_i + 1)) - 1: one degree of an element of an internal direct
/// product of coprime-order subgroups from the same degree of its parts.
inline BigInt compose_coprime(std::span<BigInt const> parts) {
  if (parts.empty()) throw std::invalid_argument("compose_coprime of nothing");
  BigInt product = 1;
  for (auto const& d : parts) {
    if (d < 0) throw std::invalid_argument("negative degree");
    product *= d + 1;
  }
  return product - 1;
}

inline BigInt compose_coprime(std::vector<BigInt> const& parts) {
  return compose_coprime(std::span<BigInt const>(parts));
}

/// Componentwise compose_coprime over all three degrees.
inline DegreeTriple compose_coprime(std::span<DegreeTriple const> parts) {
  if (parts.empty()) throw std::invalid_argument("compose_coprime of nothing");
  DegreeTriple out{1, 1, 1};
  for (auto const& part : parts) {
    out.out_deg *= part.out_deg + 1;
    out.in_deg *= part.in_deg + 1;
    out.bidir *= part.bidir + 1;
  }
  out.out_deg -= 1;
  out.in_deg -= 1;
  out.bidir -= 1;
  return out;
}

inline DegreeTriple compose_coprime(std::vector<DegreeTriple> const& parts) {
  return compose_coprime(std::span<DegreeTriple const>(parts));
}

/// Triple of one p-component x_i inside G(p). An identity component has
/// in-degree |G(p)| - 1 and no out-edges.
inline DegreeTriple component_triple(std::uint64_t p,
                                     std::vector<unsigned> const& m,
                                     std::vector<unsigned> const& t,
                                     BigInt const& component_order) {
  unsigned t_w = max_exponent(t);
  if (t_w == 0) return {0, component_order - 1, 0};
  return {pow(p, t_w) - 1, indegree_p_component(p, m, t),
          phi_prime_power(p, t_w) - 1};
}

/// Triple of any element with the given order type. Only the order type
/// matters, which is what makes histograms cheap.
inline DegreeTriple degree_triple(CanonicalAbelianGroup const& group,
                                  OrderType const& type) {
  if (type.t.size() != group.num_components()) {
    throw ElementError("order type does not match group");
  }
  std::vector<DegreeTriple> parts;
  parts.reserve(group.num_components());
  for (std::size_t c = 0; c < group.num_components(); ++c) {
    auto const& comp = group.component(c);
    parts.push_back(component_triple(comp.p, comp.exponents, type.t[c],
                                     group.component_order(c)));
  }
  return compose_coprime(parts);
}

inline DegreeTriple degree_triple(CanonicalAbelianGroup const& group,
                                  Element const& g) {
  return degree_triple(group, order_type(group, g));
}

inline BigInt undirected_degree(CanonicalAbelianGroup const& group,
                                Element const& g) {
  OrderType type = order_type(group, g);
  if (is_identity(g)) return group.order() - 1;
  BigInt order = element_order(group, g);
  BigInt phi = 1;
  for (std::size_t c = 0; c < group.num_components(); ++c) {
    phi *= phi_prime_power(group.component(c).p, max_exponent(type.t[c]));
  }
  return order - phi + degree_triple(group, type).in_deg;
}

namespace detail {

using TripleKey = std::tuple<BigInt, BigInt, BigInt>;  // each degree plus one

// Distinct component triples of G(p) (stored plus one) with the number of
// elements of G(p) producing each.
inline std::map<TripleKey, BigInt> component_triple_counts(
    PrimeComponent const& comp, BigInt const& component_order) {
  std::map<TripleKey, BigInt> counts;
  std::vector<unsigned> t(comp.exponents.size(), 0);
  for (;;) {
    BigInt weight = 1;
    for (unsigned ta : t) weight *= phi_prime_power(comp.p, ta);
    DegreeTriple d = component_triple(comp.p, comp.exponents, t, component_order);
    counts[{d.out_deg + 1, d.in_deg + 1, d.bidir + 1}] += weight;

    std::size_t a = t.size();
    while (a > 0) {
      --a;
      if (++t[a] <= comp.exponents[a]) break;
      t[a] = 0;
      if (a == 0) return counts;
    }
  }
}

}  // namespace detail

/// Exact histogram of undirected degrees over all |G| elements. Cost is
/// driven by the number of order types, never by |G|.
inline DegreeHistogram degree_histogram(CanonicalAbelianGroup const& group) {
  std::map<detail::TripleKey, BigInt> acc{{{1, 1, 1}, 1}};
  for (std::size_t c = 0; c < group.num_components(); ++c) {
    auto comp_counts = detail::component_triple_counts(
        group.component(c), group.component_order(c));
    std::map<detail::TripleKey, BigInt> next;
    for (auto const& [key, count] : acc) {
      for (auto const& [ckey, ccount] : comp_counts) {
        next[{std::get<0>(key) * std::get<0>(ckey),
              std::get<1>(key) * std::get<1>(ckey),
              std::get<2>(key) * std::get<2>(ckey)}] += count * ccount;
      }
    }
    acc = std::move(next);
  }

  DegreeHistogram histogram;
  for (auto const& [key, count] : acc) {
    auto const& [out1, in1, bidir1] = key;
    histogram[out1 + in1 - bidir1 - 1] += count;
  }
  return histogram;
}

inline BigInt edge_count(DegreeHistogram const& histogram) {
  BigInt total = 0;
  for (auto const& [degree, count] : histogram) total += degree * count;
  if (total % 2 != 0) throw InvariantViolation("odd degree sum");
  return total / 2;
}

inline BigInt edge_count(CanonicalAbelianGroup const& group) {
  return edge_count(degree_histogram(group));
}

/// The power graph is complete iff the group is cyclic of prime-power order.
inline bool is_complete(CanonicalAbelianGroup const& group) {
  return group.is_cyclic_p_group();
}

}  // namespace powdeg
