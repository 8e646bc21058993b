#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powdeg/bigint.hpp"
#include "powdeg/errors.hpp"
#include "powdeg/number_theory.hpp"

namespace powdeg {

// ---------------------------------------------------------------------------
// User-facing group specification
// ---------------------------------------------------------------------------

/// Cyclic factor moduli in the order the user wrote them, e.g. Z4xZ2 -> {4, 2}.
struct UserGroupSpec {
  std::vector<std::uint64_t> factors;

  friend bool operator==(UserGroupSpec const&, UserGroupSpec const&) = default;
};

namespace detail {

inline void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() &&
         std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
}

inline std::uint64_t parse_modulus(std::string_view text, std::size_t& pos) {
  std::size_t const start = pos;
  std::uint64_t value = 0;
  bool overflow = false;
  while (pos < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[pos]))) {
    auto digit = static_cast<std::uint64_t>(text[pos] - '0');
    if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
      overflow = true;
    } else {
      value = value * 10 + digit;
    }
    ++pos;
  }
  if (pos == start) throw ParseError("expected digits", start);
  if (overflow) throw ParseError("factor does not fit in 64 bits", start);
  if (value < 2) {
    throw ParseError("trivial factor " + std::to_string(value) +
                         " (every factor must be at least 2)",
                     start);
  }
  return value;
}

}  // namespace detail

/// Parses `Z4xZ2`, `z4 x 2`, `12` or `2,3,5`. The `Z` prefix and the `x`
/// separator are case-insensitive; whitespace between tokens is ignored.
inline UserGroupSpec parse_group_spec(std::string_view text) {
  std::size_t pos = 0;
  detail::skip_space(text, pos);
  if (pos == text.size()) throw ParseError("empty group specification", pos);

  UserGroupSpec spec;
  char separator = 0;
  bool prefixed = false;
  for (;;) {
    detail::skip_space(text, pos);
    if (pos < text.size() && (text[pos] == 'Z' || text[pos] == 'z')) {
      if (separator == ',') {
        throw ParseError("'Z' prefix not allowed in a comma list", pos);
      }
      prefixed = true;
      ++pos;
      detail::skip_space(text, pos);
    }
    spec.factors.push_back(detail::parse_modulus(text, pos));
    detail::skip_space(text, pos);
    if (pos == text.size()) break;

    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[pos])));
    if (c != 'x' && c != ',') {
      throw ParseError(std::string("unexpected character '") + text[pos] + "'",
                       pos);
    }
    if (separator != 0 && c != separator) {
      throw ParseError("mixed 'x' and ',' separators", pos);
    }
    if (c == ',' && prefixed) {
      throw ParseError("'Z' prefix not allowed in a comma list", pos);
    }
    separator = c;
    ++pos;
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Canonical form
// ---------------------------------------------------------------------------

/// All cyclic factors of one prime: Z_{p^m_1} x ... x Z_{p^m_n}, m ascending.
struct PrimeComponent {
  std::uint64_t p = 0;
  std::vector<unsigned> exponents;

  friend bool operator==(PrimeComponent const&, PrimeComponent const&) = default;
};

class CanonicalAbelianGroup {
 public:
  CanonicalAbelianGroup() = default;

  /// Validates and normalizes: primes ascending and distinct, exponents >= 1
  /// and sorted ascending, every p^m fitting 64 bits.
  explicit CanonicalAbelianGroup(std::vector<PrimeComponent> components)
      : components_(std::move(components)) {
    std::sort(components_.begin(), components_.end(),
              [](auto const& a, auto const& b) { return a.p < b.p; });
    order_ = 1;
    for (std::size_t c = 0; c < components_.size(); ++c) {
      auto& comp = components_[c];
      if (!is_prime(comp.p)) {
        throw Error("component modulus base " + std::to_string(comp.p) +
                    " is not prime");
      }
      if (c > 0 && components_[c - 1].p == comp.p) {
        throw Error("duplicate prime component " + std::to_string(comp.p));
      }
      if (comp.exponents.empty()) throw Error("empty prime component");
      std::sort(comp.exponents.begin(), comp.exponents.end());
      if (comp.exponents.front() == 0) throw Error("zero exponent");
      std::vector<std::uint64_t> mods;
      for (unsigned m : comp.exponents) {
        try {
          mods.push_back(checked_pow(comp.p, m));
        } catch (std::overflow_error const&) {
          throw Error("cyclic factor " + std::to_string(comp.p) + "^" +
                      std::to_string(m) + " exceeds 64 bits");
        }
      }
      moduli_.push_back(std::move(mods));
      unsigned total = 0;
      for (unsigned m : comp.exponents) total += m;
      component_orders_.push_back(pow(comp.p, total));
      order_ *= component_orders_.back();
    }
    if (components_.empty()) throw Error("trivial group is not supported");
  }

  std::vector<PrimeComponent> const& components() const { return components_; }
  std::size_t num_components() const { return components_.size(); }
  PrimeComponent const& component(std::size_t c) const { return components_[c]; }

  /// Moduli p^m_alpha of component c, aligned with its exponents.
  std::vector<std::uint64_t> const& moduli(std::size_t c) const {
    return moduli_[c];
  }

  /// |G(p)| for component c.
  BigInt const& component_order(std::size_t c) const {
    return component_orders_[c];
  }

  BigInt const& order() const { return order_; }

  /// True iff the group is cyclic of prime-power order.
  bool is_cyclic_p_group() const {
    return components_.size() == 1 && components_[0].exponents.size() == 1;
  }

  /// e.g. "Z2xZ4xZ3": primes ascending, exponents ascending within a prime.
  std::string to_string() const {
    std::string out;
    for (std::size_t c = 0; c < components_.size(); ++c) {
      for (std::uint64_t mod : moduli_[c]) {
        if (!out.empty()) out += 'x';
        out += 'Z' + std::to_string(mod);
      }
    }
    return out;
  }

  friend bool operator==(CanonicalAbelianGroup const& a,
                         CanonicalAbelianGroup const& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<PrimeComponent> components_;
  std::vector<std::vector<std::uint64_t>> moduli_;
  std::vector<BigInt> component_orders_;
  BigInt order_;
};

/// Residues in canonical coordinates, indexed [component][position].
struct Element {
  std::vector<std::vector<std::uint64_t>> coords;

  friend bool operator==(Element const&, Element const&) = default;
  friend auto operator<=>(Element const&, Element const&) = default;
};

/// Per-coordinate order exponents: the coordinate has order p^t.
struct OrderType {
  std::vector<std::vector<unsigned>> t;

  friend bool operator==(OrderType const&, OrderType const&) = default;
  friend auto operator<=>(OrderType const&, OrderType const&) = default;
};

/// Where one prime-power piece of a user factor lives in canonical coordinates.
struct CoordinateSlot {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::size_t component = 0;
  std::size_t position = 0;
};

/// Bijection between user residue tuples and canonical Elements.
struct CoordinateMap {
  std::vector<std::uint64_t> factors;
  std::vector<std::vector<CoordinateSlot>> slots;  // per user factor
  std::vector<std::size_t> component_sizes;
};

struct Canonicalized {
  CanonicalAbelianGroup group;
  CoordinateMap map;
};

/// Splits each user factor into prime-power cyclic pieces and groups them by
/// prime. Equal exponents of one prime keep user factor order.
inline Canonicalized canonicalize(UserGroupSpec const& spec) {
  if (spec.factors.empty()) throw Error("group specification has no factors");

  struct Piece {
    std::uint64_t p;
    unsigned e;
    std::size_t factor;
    std::size_t index_in_factor;
  };
  std::map<std::uint64_t, std::vector<Piece>> by_prime;
  CoordinateMap map;
  map.factors = spec.factors;
  map.slots.resize(spec.factors.size());
  for (std::size_t j = 0; j < spec.factors.size(); ++j) {
    if (spec.factors[j] < 2) {
      throw Error("trivial factor " + std::to_string(spec.factors[j]));
    }
    auto pps = factorize(spec.factors[j]);
    for (std::size_t k = 0; k < pps.size(); ++k) {
      by_prime[pps[k].p].push_back({pps[k].p, pps[k].e, j, k});
      map.slots[j].push_back({pps[k].p, pps[k].e, 0, 0});
    }
  }

  std::vector<PrimeComponent> components;
  std::size_t c = 0;
  for (auto& [p, pieces] : by_prime) {
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](Piece const& a, Piece const& b) { return a.e < b.e; });
    PrimeComponent comp{p, {}};
    for (std::size_t pos = 0; pos < pieces.size(); ++pos) {
      comp.exponents.push_back(pieces[pos].e);
      auto& slot = map.slots[pieces[pos].factor][pieces[pos].index_in_factor];
      slot.component = c;
      slot.position = pos;
    }
    map.component_sizes.push_back(pieces.size());
    components.push_back(std::move(comp));
    ++c;
  }
  return {CanonicalAbelianGroup(std::move(components)), std::move(map)};
}

inline Canonicalized canonicalize(std::string_view text) {
  return canonicalize(parse_group_spec(text));
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// Parses comma-separated non-negative decimal residues.
inline std::vector<BigInt> parse_residues(std::string_view text) {
  std::vector<BigInt> out;
  std::size_t pos = 0;
  for (;;) {
    detail::skip_space(text, pos);
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      throw ElementError("residues must be non-negative decimal integers");
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start) {
      throw ElementError("expected a residue at position " +
                         std::to_string(start));
    }
    out.emplace_back(std::string(text.substr(start, pos - start)));
    detail::skip_space(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw ElementError("unexpected character in element at position " +
                         std::to_string(pos));
    }
    ++pos;
  }
  return out;
}

/// Projects one residue per user factor onto canonical coordinates.
/// Residues are reduced modulo their factor.
inline Element map_element(CoordinateMap const& map,
                           std::span<BigInt const> residues) {
  if (residues.size() != map.factors.size()) {
    throw ElementError("element has " + std::to_string(residues.size()) +
                       " residues but the group has " +
                       std::to_string(map.factors.size()) + " factors");
  }
  Element g;
  g.coords.resize(map.component_sizes.size());
  for (std::size_t c = 0; c < map.component_sizes.size(); ++c) {
    g.coords[c].assign(map.component_sizes[c], 0);
  }
  for (std::size_t j = 0; j < residues.size(); ++j) {
    if (residues[j] < 0) throw ElementError("negative residue");
    auto reduced =
        static_cast<std::uint64_t>(BigInt(residues[j] % map.factors[j]));
    for (auto const& slot : map.slots[j]) {
      g.coords[slot.component][slot.position] =
          reduced % checked_pow(slot.p, slot.e);
    }
  }
  return g;
}

inline Element map_element(CoordinateMap const& map,
                           std::vector<BigInt> const& residues) {
  return map_element(map, std::span<BigInt const>(residues));
}

/// Inverse of map_element: CRT-recombines each user factor's residue.
inline std::vector<std::uint64_t> inverse_map(CoordinateMap const& map,
                                              Element const& g) {
  std::vector<std::uint64_t> out;
  out.reserve(map.factors.size());
  for (auto const& slots : map.slots) {
    unsigned __int128 residue = 0;
    unsigned __int128 modulus = 1;
    for (auto const& slot : slots) {
      std::uint64_t q = checked_pow(slot.p, slot.e);
      std::uint64_t r = g.coords.at(slot.component).at(slot.position) % q;
      // Solve residue + modulus * k = r (mod q).
      auto m_mod_q = static_cast<std::uint64_t>(modulus % q);
      auto cur = static_cast<std::uint64_t>(residue % q);
      std::uint64_t diff = (r + q - cur) % q;
      std::uint64_t inv = 0;
      {
        // Extended Euclid for m_mod_q^{-1} mod q (coprime by construction).
        __int128 old_r = m_mod_q, rr = q, old_s = 1, s = 0;
        while (rr != 0) {
          __int128 quot = old_r / rr;
          std::swap(old_r, rr);
          rr -= quot * old_r;
          std::swap(old_s, s);
          s -= quot * old_s;
        }
        old_s %= static_cast<__int128>(q);
        if (old_s < 0) old_s += q;
        inv = static_cast<std::uint64_t>(old_s);
      }
      std::uint64_t k = detail::mul_mod(diff, inv, q);
      residue += modulus * k;
      modulus *= q;
    }
    out.push_back(static_cast<std::uint64_t>(residue));
  }
  return out;
}

inline Element identity(CanonicalAbelianGroup const& group) {
  Element e;
  for (auto const& comp : group.components()) {
    e.coords.emplace_back(comp.exponents.size(), 0);
  }
  return e;
}

inline bool is_identity(Element const& g) {
  return std::all_of(g.coords.begin(), g.coords.end(), [](auto const& v) {
    return std::all_of(v.begin(), v.end(), [](auto r) { return r == 0; });
  });
}

/// Throws ElementError unless g has the group's shape with reduced residues.
inline void check_element(CanonicalAbelianGroup const& group, Element const& g) {
  if (g.coords.size() != group.num_components()) {
    throw ElementError("element has wrong number of prime components");
  }
  for (std::size_t c = 0; c < g.coords.size(); ++c) {
    auto const& mods = group.moduli(c);
    if (g.coords[c].size() != mods.size()) {
      throw ElementError("element component has wrong dimension");
    }
    for (std::size_t a = 0; a < mods.size(); ++a) {
      if (g.coords[c][a] >= mods[a]) {
        throw ElementError("element residue out of range");
      }
    }
  }
}

/// Group operation (written additively on residues).
inline Element add(CanonicalAbelianGroup const& group, Element const& a,
                   Element const& b) {
  Element out = a;
  for (std::size_t c = 0; c < out.coords.size(); ++c) {
    auto const& mods = group.moduli(c);
    for (std::size_t i = 0; i < mods.size(); ++i) {
      std::uint64_t x = a.coords[c][i], y = b.coords[c][i];
      out.coords[c][i] = x >= mods[i] - y ? x - (mods[i] - y) : x + y;
    }
  }
  return out;
}

/// Exponent t with p^t = p^m / gcd(p^m, i); zero for i = 0.
inline unsigned order_exponent(std::uint64_t p, unsigned m, std::uint64_t i) {
  if (i == 0) return 0;
  unsigned v = valuation(p, i);
  return v >= m ? 0 : m - v;
}

inline OrderType order_type(CanonicalAbelianGroup const& group,
                            Element const& g) {
  check_element(group, g);
  OrderType type;
  for (std::size_t c = 0; c < group.num_components(); ++c) {
    auto const& comp = group.component(c);
    std::vector<unsigned> t;
    for (std::size_t a = 0; a < comp.exponents.size(); ++a) {
      t.push_back(order_exponent(comp.p, comp.exponents[a], g.coords[c][a]));
    }
    type.t.push_back(std::move(t));
  }
  return type;
}

/// Largest order exponent within each prime component.
inline unsigned max_exponent(std::vector<unsigned> const& t) {
  return t.empty() ? 0 : *std::max_element(t.begin(), t.end());
}

inline BigInt element_order(CanonicalAbelianGroup const& group,
                            Element const& g) {
  OrderType type = order_type(group, g);
  BigInt order = 1;
  for (std::size_t c = 0; c < group.num_components(); ++c) {
    order *= pow(group.component(c).p, max_exponent(type.t[c]));
  }
  return order;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Throws BudgetExceeded when |G| > budget.
inline void check_budget(CanonicalAbelianGroup const& group,
                         std::uint64_t budget) {
  if (group.order() > budget) {
    throw BudgetExceeded("group " + group.to_string() + " has order " +
                         group.order().str() + ", above the budget of " +
                         std::to_string(budget) + " elements");
  }
}

/// Position of g in lexicographic coordinate order (last coordinate fastest).
inline std::size_t element_index(CanonicalAbelianGroup const& group,
                                 Element const& g) {
  std::size_t index = 0;
  for (std::size_t c = 0; c < group.num_components(); ++c) {
    auto const& mods = group.moduli(c);
    for (std::size_t a = 0; a < mods.size(); ++a) {
      index = index * mods[a] + g.coords[c][a];
    }
  }
  return index;
}

/// Lazy range over every element, identity first, lexicographic order.
class ElementRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = Element const*;
    using reference = Element const&;

    iterator() = default;
    iterator(CanonicalAbelianGroup const* group, Element current, bool done)
        : group_(group), current_(std::move(current)), done_(done) {}

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      for (std::size_t c = current_.coords.size(); c-- > 0;) {
        auto const& mods = group_->moduli(c);
        for (std::size_t a = mods.size(); a-- > 0;) {
          if (++current_.coords[c][a] < mods[a]) return *this;
          current_.coords[c][a] = 0;
        }
      }
      done_ = true;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }

    friend bool operator==(iterator const& a, iterator const& b) {
      if (a.done_ || b.done_) return a.done_ == b.done_;
      return a.current_ == b.current_;
    }

   private:
    CanonicalAbelianGroup const* group_ = nullptr;
    Element current_;
    bool done_ = true;
  };

  explicit ElementRange(CanonicalAbelianGroup const& group) : group_(&group) {}

  iterator begin() const { return {group_, identity(*group_), false}; }
  iterator end() const { return {}; }

 private:
  CanonicalAbelianGroup const* group_;
};

inline ElementRange enumerate_elements(CanonicalAbelianGroup const& group,
                                       std::uint64_t budget) {
  check_budget(group, budget);
  return ElementRange(group);
}

// ---------------------------------------------------------------------------
// Coprime direct products
// ---------------------------------------------------------------------------

inline bool coprime(CanonicalAbelianGroup const& a,
                    CanonicalAbelianGroup const& b) {
  for (auto const& ca : a.components()) {
    for (auto const& cb : b.components()) {
      if (ca.p == cb.p) return false;
    }
  }
  return true;
}

/// A x B for groups with disjoint prime sets.
inline CanonicalAbelianGroup direct_product(CanonicalAbelianGroup const& a,
                                            CanonicalAbelianGroup const& b) {
  if (!coprime(a, b)) throw Error("direct_product needs coprime orders");
  auto comps = a.components();
  comps.insert(comps.end(), b.components().begin(), b.components().end());
  return CanonicalAbelianGroup(std::move(comps));
}

/// The element (x, y) of direct_product(a, b).
inline Element combine(CanonicalAbelianGroup const& a,
                       CanonicalAbelianGroup const& b, Element const& x,
                       Element const& y) {
  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> parts;
  for (std::size_t c = 0; c < a.num_components(); ++c) {
    parts.emplace_back(a.component(c).p, x.coords.at(c));
  }
  for (std::size_t c = 0; c < b.num_components(); ++c) {
    parts.emplace_back(b.component(c).p, y.coords.at(c));
  }
  std::sort(parts.begin(), parts.end());
  Element z;
  for (auto& part : parts) z.coords.push_back(std::move(part.second));
  return z;
}

}  // namespace powdeg
