#ifndef DIAGSEMI_TESTS_SUPPORT_HPP_
#define DIAGSEMI_TESTS_SUPPORT_HPP_

// Independent oracles and random element generators shared by the unit
// tests and the acceptance binary.

#include <cstdint>
#include <array>
#include <functional>
#include <map>
#include <type_traits>
#include <random>
#include <set>
#include <variant>
#include <string>
#include <vector>

#include "diagsemi/diagsemi.hpp"

namespace diagsemi::test {

  using Rng = std::mt19937_64;

  // ---------------------------------------------------------------------
  // Alternating walks in the stacked graph, enumerated explicitly.
  //
  // Vertices 0..n-1 are the upper row of x, n..2n-1 the shared middle row,
  // 2n..3n-1 the lower row of y. Every walk of at most max_len edges whose
  // colours alternate is followed; (a, b) is an edge of the product when a
  // walk joins two outer vertices.
  inline Pbr alternating_walk_product(Pbr const& x, Pbr const& y,
                                      std::size_t max_len) {
    std::size_t const n = x.degree();
    // edges[colour][v] lists neighbours of v in the stacked graph
    std::vector<std::vector<std::size_t>> edges[2];
    edges[0].assign(3 * n, {});
    edges[1].assign(3 * n, {});
    for (auto [a, b] : x.edges()) {
      edges[0][a].push_back(b);  // x points already sit at 0..2n-1
    }
    for (auto [a, b] : y.edges()) {
      edges[1][a + n].push_back(b + n);
    }
    auto outer = [n](std::size_t v) { return v < n || v >= 2 * n; };
    auto to_point = [n](std::size_t v) { return v < n ? v : v - n; };

    std::set<std::pair<std::size_t, std::size_t>> found;
    std::function<void(std::size_t, std::size_t, int, std::size_t)> walk
        = [&](std::size_t start, std::size_t v, int last, std::size_t len) {
            if (len > 0 && outer(v)) {
              found.insert({to_point(start), to_point(v)});
            }
            if (len == max_len) {
              return;
            }
            for (int c = 0; c < 2; ++c) {
              if (c == last) {
                continue;
              }
              for (auto w : edges[c][v]) {
                walk(start, w, c, len + 1);
              }
            }
          };
    for (std::size_t v = 0; v < 3 * n; ++v) {
      if (outer(v)) {
        walk(v, v, -1, 0);
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> list(found.begin(),
                                                          found.end());
    return Pbr::from_edges(n, list);
  }

  // ---------------------------------------------------------------------
  // Random elements.

  inline Pbr random_pbr(std::size_t n, Rng& rng) {
    std::vector<Pbr::row_type> rows(2 * n);
    Pbr::row_type const        mask = (Pbr::row_type(1) << (2 * n)) - 1;
    for (auto& r : rows) {
      r = rng() & mask;
    }
    return Pbr(n, rows);
  }

  inline Bipartition random_bipartition(std::size_t n, Rng& rng) {
    std::vector<std::uint32_t> labels(2 * n);
    for (auto& l : labels) {
      l = static_cast<std::uint32_t>(rng() % (2 * n));
    }
    return Bipartition(n, labels);
  }

  inline MapElement random_map(std::size_t n, MapKind kind, Rng& rng) {
    std::vector<std::uint32_t> data(n);
    if (kind == MapKind::binary_relation) {
      for (auto& r : data) {
        r = static_cast<std::uint32_t>(rng() & ((1u << n) - 1));
      }
      return MapElement(kind, data);
    }
    bool const partial = kind == MapKind::partial_transformation
                         || kind == MapKind::partial_permutation;
    bool const injective = kind == MapKind::permutation
                           || kind == MapKind::partial_permutation;
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      perm[i] = i;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i) {
      data[i] = injective ? perm[i] : static_cast<std::uint32_t>(rng() % n);
      if (partial && rng() % 3 == 0) {
        data[i] = MapElement::undefined;
      }
    }
    return MapElement(kind, data);
  }

  // ---------------------------------------------------------------------
  // Green's relations by brute-force divisibility on a product table.

  struct Bitset {
    std::vector<std::uint64_t> words;
    explicit Bitset(std::size_t n = 0) : words((n + 63) / 64, 0) {}
    void set(std::size_t i) {
      words[i / 64] |= std::uint64_t(1) << (i % 64);
    }
    bool test(std::size_t i) const {
      return (words[i / 64] >> (i % 64)) & 1;
    }
    Bitset& operator|=(Bitset const& o) {
      for (std::size_t w = 0; w < words.size(); ++w) {
        words[w] |= o.words[w];
      }
      return *this;
    }
    bool intersects(Bitset const& o) const {
      for (std::size_t w = 0; w < words.size(); ++w) {
        if (words[w] & o.words[w]) {
          return true;
        }
      }
      return false;
    }
    friend bool operator==(Bitset const&, Bitset const&) = default;
    friend auto operator<=>(Bitset const&, Bitset const&) = default;
  };

  struct DivisibilityOracle {
    std::vector<Bitset> right;  // x S^1
    std::vector<Bitset> left;   // S^1 x
    std::vector<Bitset> two;    // S^1 x S^1
  };

  // product(x, y) must return the index of x * y.
  template <typename Product>
  DivisibilityOracle divisibility(std::size_t n, Product&& product) {
    DivisibilityOracle o;
    o.right.assign(n, Bitset(n));
    o.left.assign(n, Bitset(n));
    o.two.assign(n, Bitset(n));
    for (std::size_t x = 0; x < n; ++x) {
      o.right[x].set(x);
      o.left[x].set(x);
      for (std::size_t s = 0; s < n; ++s) {
        o.right[x].set(product(x, s));
        o.left[x].set(product(s, x));
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      o.two[x] = o.left[x];
      for (std::size_t y = 0; y < n; ++y) {
        if (o.left[x].test(y)) {
          o.two[x] |= o.right[y];
        }
      }
    }
    return o;
  }

  // Partition of 0..n-1 given by equal keys, as first-occurrence labels.
  template <typename Key>
  std::vector<std::uint32_t> partition_by(std::vector<Key> const& keys) {
    std::vector<std::uint32_t> labels(keys.size());
    std::map<Key, std::uint32_t> ids;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      auto [it, fresh] = ids.try_emplace(keys[i],
                                         static_cast<std::uint32_t>(ids.size()));
      labels[i] = it->second;
    }
    return labels;
  }

  // Relabels any class assignment by first occurrence.
  inline std::vector<std::uint32_t>
  canonical_partition(std::vector<std::uint32_t> const& ids) {
    return partition_by(ids);
  }

  // D by brute force: x D y iff some z has x L z and z R y.
  inline std::vector<std::uint32_t>
  brute_force_d_classes(DivisibilityOracle const& o) {
    std::size_t const n = o.right.size();
    auto              r = partition_by(o.right);
    auto              l = partition_by(o.left);
    std::size_t       nr = *std::max_element(r.begin(), r.end()) + 1;
    std::size_t       nl = *std::max_element(l.begin(), l.end()) + 1;
    std::vector<Bitset> r_members(nr, Bitset(n)), l_members(nl, Bitset(n));
    for (std::size_t x = 0; x < n; ++x) {
      r_members[r[x]].set(x);
      l_members[l[x]].set(x);
    }
    std::vector<std::uint32_t> d(n, kNoIndex);
    std::uint32_t              next = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (d[x] != kNoIndex) {
        continue;
      }
      for (std::size_t y = x; y < n; ++y) {
        if (d[y] == kNoIndex && l_members[l[x]].intersects(r_members[r[y]])) {
          d[y] = next;
        }
      }
      ++next;
    }
    return d;
  }

  struct GreenCheck {
    bool r_ok = false, l_ok = false, d_ok = false, j_ok = false,
         d_is_j = false;
    bool ok() const {
      return r_ok && l_ok && d_ok && j_ok && d_is_j;
    }
  };

  template <typename Product>
  GreenCheck check_green(GreenStructure const& g, std::size_t n,
                         Product&& product) {
    auto       o = divisibility(n, product);
    GreenCheck c;
    c.r_ok   = canonical_partition(g.r_classes()) == partition_by(o.right);
    c.l_ok   = canonical_partition(g.l_classes()) == partition_by(o.left);
    c.d_ok   = canonical_partition(g.d_classes()) == brute_force_d_classes(o);
    c.j_ok   = canonical_partition(g.j_classes()) == partition_by(o.two);
    c.d_is_j = canonical_partition(g.d_classes()) == partition_by(o.two)
               && g.d_equals_j();
    return c;
  }

  // Product through the elements themselves, not the Cayley graphs.
  template <typename S>
  auto element_product_index(S const& s) {
    return [&s](std::size_t x, std::size_t y) -> std::size_t {
      return *s.index_of(s.at(x) * s.at(y));
    };
  }

  // ---------------------------------------------------------------------
  // Subsemigroups by scanning all 2^n subsets.

  inline std::vector<ElementMask> brute_force_subsemigroups(
      TableSemigroup const& S) {
    std::size_t const        n = S.size();
    std::vector<ElementMask> result;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
      bool closed = true;
      for (std::size_t x = 0; x < n && closed; ++x) {
        if (!((bits >> x) & 1)) {
          continue;
        }
        for (std::size_t y = 0; y < n && closed; ++y) {
          if ((bits >> y) & 1) {
            closed = (bits >> S.product(x, y)) & 1;
          }
        }
      }
      if (closed) {
        ElementMask m;
        for (std::size_t x = 0; x < n; ++x) {
          if ((bits >> x) & 1) {
            m.set(x);
          }
        }
        result.push_back(m);
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  // Number of orbits of closed subsets under G, by explicit orbit sweep.
  inline std::size_t brute_force_orbits(std::vector<ElementMask> const& all,
                                        SymmetryGroup const&            G) {
    std::set<ElementMask> seen;
    std::size_t           orbits = 0;
    for (auto const& m : all) {
      if (seen.count(m)) {
        continue;
      }
      ++orbits;
      for (auto const& a : G.actions) {
        ElementMask img;
        for (auto x : m.indices()) {
          img.set(a[x]);
        }
        seen.insert(img);
      }
    }
    return orbits;
  }

  // Every standard monoid whose order is at most bound.
  struct NamedFamily {
    Family      family;
    std::size_t degree;
    std::string name() const {
      return std::string(short_name(family)) + std::to_string(degree);
    }
  };

  inline std::vector<NamedFamily> standard_monoids_up_to(std::size_t bound) {
    std::vector<NamedFamily> result;
    for (auto f : kAllFamilies) {
      for (std::size_t n = 1; n <= 8; ++n) {
        if (has_standard_generators(f, n) && family_order(f, n) <= bound) {
          result.push_back({f, n});
        }
      }
    }
    return result;
  }


  // ---------------------------------------------------------------------
  // Published values, frozen.

  // Published orders for n = 1..6, as decimal strings.
  struct OrderRow {
    Family                     family;
    std::array<char const*, 6> values;
  };

  std::vector<OrderRow> const& published_orders() {
    static std::vector<OrderRow> const rows = {
        {Family::partitioned_binary_relation,
         {"16", "65536", "68719476736", "18446744073709551616",
          "1267650600228229401496703205376",
          "22300745198530623141535718272648361505980416"}},
        {Family::binary_relation,
         {"2", "16", "512", "65536", "33554432", "68719476736"}},
        {Family::partition, {"2", "15", "203", "4140", "115975", "4213597"}},
        {Family::partial_transformation,
         {"2", "9", "64", "625", "7776", "117649"}},
        {Family::dual_symmetric_inverse, {"1", "3", "25", "339", "6721", "179643"}},
        {Family::transformation, {"1", "4", "27", "256", "3125", "46656"}},
        {Family::partial_permutation, {"2", "7", "34", "209", "1546", "13327"}},
        {Family::brauer, {"1", "3", "15", "105", "945", "10395"}},
        {Family::symmetric_group, {"1", "2", "6", "24", "120", "720"}},
        {Family::temperley_lieb, {"1", "2", "5", "14", "42", "132"}}};
    return rows;
  }


  // Published numbers of subsemigroups up to conjugacy (subgroups for S).
  struct CensusCell {
    Family        family;
    std::size_t   degree;
    std::uint64_t classes;
  };

  inline std::vector<CensusCell> const& published_census_gated() {
    static std::vector<CensusCell> const cells = {
        {Family::temperley_lieb, 1, 2},   {Family::temperley_lieb, 2, 4},
        {Family::temperley_lieb, 3, 12},  {Family::temperley_lieb, 4, 232},
        {Family::brauer, 1, 2},           {Family::brauer, 2, 6},
        {Family::brauer, 3, 42},          {Family::symmetric_group, 1, 1},
        {Family::symmetric_group, 2, 2},  {Family::symmetric_group, 3, 4},
        {Family::symmetric_group, 4, 11}, {Family::transformation, 1, 2},
        {Family::transformation, 2, 8},   {Family::transformation, 3, 283},
        {Family::partial_permutation, 1, 4},
        {Family::partial_permutation, 2, 23},
        {Family::partial_transformation, 1, 4},
        {Family::partial_transformation, 2, 50},
        {Family::partition, 1, 4},        {Family::partition, 2, 272},
        {Family::binary_relation, 1, 4},  {Family::binary_relation, 2, 385},
        {Family::dual_symmetric_inverse, 1, 2},
        {Family::dual_symmetric_inverse, 2, 6},
        {Family::partitioned_binary_relation, 1, 1262}};
    return cells;
  }

  inline std::vector<CensusCell> const& published_census_stretch() {
    static std::vector<CensusCell> const cells = {
        {Family::partial_permutation, 3, 2963},
        {Family::dual_symmetric_inverse, 3, 795},
        {Family::temperley_lieb, 5, 12592},
        {Family::brauer, 4, 10411},
        {Family::partial_transformation, 3, 94232}};
    return cells;
  }

  // Runs the census of a standard monoid; S uses the subgroup census.
  inline CensusResult standard_census(Family f, std::size_t n,
                                      CensusOptions const& opts = {}) {
    return with_standard_monoid(f, n, 1 << 20, [&](auto const& S) {
      auto T = to_table(S);
      auto G = symmetry_group(S);
      return f == Family::symmetric_group ? subgroup_census(T, G, opts)
                                          : census_up_to_conjugacy(T, G, opts);
    });
  }

  inline std::uint64_t standard_raw_count(Family f, std::size_t n) {
    return with_standard_monoid(f, n, 1 << 20, [&](auto const& S) {
      auto T = to_table(S);
      return count_subsemigroups(T) - (f == Family::symmetric_group ? 1 : 0);
    });
  }

  // ---------------------------------------------------------------------
  // Sampling elements of any family.

  class FamilySampler {
   public:
    FamilySampler(Family f, std::size_t n) : family_(f), degree_(n) {
      if (f == Family::dual_symmetric_inverse || f == Family::brauer
          || f == Family::temperley_lieb) {
        pool_ = enumerate(bipartition_generators(f, n).elements).elements();
      }
    }

    AnyElement operator()(Rng& rng) const {
      switch (family_) {
        case Family::partitioned_binary_relation:
          return random_pbr(degree_, rng);
        case Family::partition:
          return random_bipartition(degree_, rng);
        case Family::dual_symmetric_inverse:
        case Family::brauer:
        case Family::temperley_lieb:
          return pool_[rng() % pool_.size()];
        default:
          return random_map(degree_, map_kind_of(family_), rng);
      }
    }

    AnyElement identity() const {
      switch (family_) {
        case Family::partitioned_binary_relation:
          return pbr_identity(degree_);
        case Family::partition:
        case Family::dual_symmetric_inverse:
        case Family::brauer:
        case Family::temperley_lieb:
          return Bipartition::identity(degree_);
        default:
          return MapElement::identity(degree_, map_kind_of(family_));
      }
    }

   private:
    Family                   family_;
    std::size_t              degree_;
    std::vector<Bipartition> pool_;
  };

  inline AnyElement multiply(AnyElement const& x, AnyElement const& y) {
    return std::visit(
        [](auto const& a, auto const& b) -> AnyElement {
          if constexpr (std::is_same_v<std::decay_t<decltype(a)>,
                                       std::decay_t<decltype(b)>>) {
            return a * b;
          } else {
            throw Error("cannot multiply elements of different types");
          }
        },
        x, y);
  }

  inline AnyElement conjugate_any(AnyElement const& x,
                                  PointPermutation const& sigma) {
    return std::visit([&](auto const& a) -> AnyElement { return conjugate(a, sigma); },
                      x);
  }

  inline FamilyFlags classify_any(AnyElement const& x) {
    return std::visit([](auto const& a) { return classify(to_pbr(a)); }, x);
  }

  // ---------------------------------------------------------------------
  // Small ambients for exhaustive census checks.

  // Standard monoids and Rees quotients of at most 12
  // elements.
  inline std::vector<std::pair<std::string, TableSemigroup>> small_ambients() {
    std::vector<std::pair<std::string, TableSemigroup>> result;
    for (auto const& m : standard_monoids_up_to(12)) {
      with_standard_monoid(m.family, m.degree, 12, [&](auto const& S) {
        result.emplace_back(m.name(), to_table(S));
        return 0;
      });
    }
    for (auto const& m : standard_monoids_up_to(40)) {
      with_standard_monoid(m.family, m.degree, 40, [&](auto const& S) {
        auto T = to_table(S);
        for (auto const& I : ideals_of(T)) {
          if (T.size() - I.size() + 1 <= 12 && I.size() > 1) {
            result.emplace_back(m.name() + "/I" + std::to_string(I.size()),
                                rees_quotient(T, I));
          }
        }
        return 0;
      });
    }
    return result;
  }


}  // namespace diagsemi::test

#endif  // DIAGSEMI_TESTS_SUPPORT_HPP_
