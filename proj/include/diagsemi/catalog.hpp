#ifndef DIAGSEMI_CATALOG_HPP_
#define DIAGSEMI_CATALOG_HPP_

// Standard generating sets. Every set starts with the identity of its
// family, so closures are monoids.
//
//   S   transposition (0 1), n-cycle i -> i+1 mod n
//   T   S + rank n-1 idempotent [0, 0, 2, ..., n-1]
//   I   S + partial identity undefined at 0
//   PT  S + partial identity + rank n-1 idempotent
//   B   every binary relation (n <= 3)
//   PB  every PBR (n = 1)
//   TL  hooks e_0, ..., e_{n-2}, e_i = {i, i+1}, {i', (i+1)'}, {j, j'}
//   Br  S + e_0
//   P   S + e_0 + split {0}, {0'}, {j, j'} + join {0, 1, 0', 1'}, {j, j'}
//   IS  S + join + (n >= 3) contraction {0, 1, 0'}, {2, 1', 2'}, {j, j'}

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "bipartition.hpp"
#include "embed.hpp"
#include "family.hpp"
#include "map_element.hpp"
#include "pbr.hpp"

namespace diagsemi {

  template <typename Element>
  struct GeneratorSet {
    Family                   family;
    std::size_t              degree;
    std::vector<Element>     elements;
    std::vector<std::string> labels;

    void add(Element x, std::string label) {
      if (std::find(elements.begin(), elements.end(), x) == elements.end()) {
        elements.push_back(std::move(x));
        labels.push_back(std::move(label));
      }
    }
  };

  using AnyGeneratorSet = std::variant<GeneratorSet<Pbr>,
                                       GeneratorSet<Bipartition>,
                                       GeneratorSet<MapElement>>;

  inline bool has_standard_generators(Family f, std::size_t n) {
    if (n == 0 || n > kMaxDegree) {
      return false;
    }
    switch (f) {
      case Family::partitioned_binary_relation:
        return n == 1;
      case Family::binary_relation:
        return n <= 3;
      case Family::partial_transformation:
        return n < kMaxDegree;
      default:
        return true;
    }
  }

  namespace detail {
    inline void check_supported(Family f, std::size_t n) {
      if (!has_standard_generators(f, n)) {
        throw Error("no standard generating set for "
                    + std::string(short_name(f)) + " of degree "
                    + std::to_string(n));
      }
    }

    inline std::vector<std::uint32_t> iota_image(std::size_t n) {
      std::vector<std::uint32_t> v(n);
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = static_cast<std::uint32_t>(i);
      }
      return v;
    }

    inline std::string cycle_label(std::size_t n) {
      std::string s = "(";
      for (std::size_t i = 0; i < n; ++i) {
        s += (i ? " " : "") + std::to_string(i);
      }
      return s + ")";
    }

    // Transposition (0 1) and the n-cycle, as permutations.
    inline std::vector<std::pair<MapElement, std::string>>
    symmetric_group_generators(std::size_t n) {
      std::vector<std::pair<MapElement, std::string>> result;
      if (n >= 2) {
        auto t = iota_image(n);
        std::swap(t[0], t[1]);
        result.emplace_back(MapElement(MapKind::permutation, t), "(0 1)");
      }
      if (n >= 3) {
        std::vector<std::uint32_t> c(n);
        for (std::size_t i = 0; i < n; ++i) {
          c[i] = static_cast<std::uint32_t>((i + 1) % n);
        }
        result.emplace_back(MapElement(MapKind::permutation, c),
                            cycle_label(n));
      }
      return result;
    }

    inline Bipartition hook(std::size_t n, std::size_t i) {
      std::vector<std::uint32_t> labels(2 * n);
      for (std::size_t j = 0; j < n; ++j) {
        labels[j] = labels[n + j] = static_cast<std::uint32_t>(j);
      }
      labels[i + 1]     = static_cast<std::uint32_t>(i);
      labels[n + i]     = static_cast<std::uint32_t>(n);
      labels[n + i + 1] = static_cast<std::uint32_t>(n);
      return Bipartition(n, labels);
    }

    inline Bipartition split(std::size_t n) {
      std::vector<std::uint32_t> labels(2 * n);
      for (std::size_t j = 0; j < n; ++j) {
        labels[j] = labels[n + j] = static_cast<std::uint32_t>(j);
      }
      labels[n] = static_cast<std::uint32_t>(n);
      return Bipartition(n, labels);
    }

    inline Bipartition join_first_two(std::size_t n) {
      std::vector<std::uint32_t> labels(2 * n);
      for (std::size_t j = 0; j < n; ++j) {
        labels[j] = labels[n + j] = static_cast<std::uint32_t>(j);
      }
      labels[1] = labels[n + 1] = 0;
      return Bipartition(n, labels);
    }

    // {0, 1, 0'}, {2, 1', 2'}, {j, j'} for j >= 3
    inline Bipartition contraction(std::size_t n) {
      std::vector<std::uint32_t> labels(2 * n);
      for (std::size_t j = 0; j < n; ++j) {
        labels[j] = labels[n + j] = static_cast<std::uint32_t>(j);
      }
      labels[1]     = 0;
      labels[n + 1] = 2;
      return Bipartition(n, labels);
    }
  }  // namespace detail

  inline GeneratorSet<MapElement> map_generators(Family f, std::size_t n) {
    detail::check_supported(f, n);
    MapKind const            kind = map_kind_of(f);
    GeneratorSet<MapElement> gens{f, n, {}, {}};
    gens.add(MapElement::identity(n, kind), "id");
    if (f == Family::binary_relation) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << (n * n)); ++bits) {
        std::vector<std::uint32_t> rows(n);
        for (std::size_t i = 0; i < n; ++i) {
          rows[i] = static_cast<std::uint32_t>((bits >> (i * n))
                                               & ((1u << n) - 1));
        }
        gens.add(MapElement(kind, rows), "r" + std::to_string(bits));
      }
      return gens;
    }
    for (auto& [x, label] : detail::symmetric_group_generators(n)) {
      gens.add(x.as_kind(kind), label);
    }
    if ((f == Family::partial_permutation || f == Family::partial_transformation)) {
      auto v = detail::iota_image(n);
      v[0]   = MapElement::undefined;
      gens.add(MapElement(kind, v), "partial-id");
    }
    if ((f == Family::transformation || f == Family::partial_transformation)
        && n >= 2) {
      auto v = detail::iota_image(n);
      v[1]   = 0;
      gens.add(MapElement(kind, v), "rank-drop");
    }
    return gens;
  }

  inline GeneratorSet<Bipartition> bipartition_generators(Family f,
                                                          std::size_t n) {
    detail::check_supported(f, n);
    if (!is_bipartition_family(f)) {
      throw Error(std::string(short_name(f)) + " is not a partition family");
    }
    GeneratorSet<Bipartition> gens{f, n, {}, {}};
    gens.add(Bipartition::identity(n), "id");
    if (f == Family::temperley_lieb) {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        gens.add(detail::hook(n, i), "e" + std::to_string(i));
      }
      return gens;
    }
    for (auto& [x, label] : detail::symmetric_group_generators(n)) {
      gens.add(map_to_bipartition(x), label);
    }
    if ((f == Family::brauer || f == Family::partition) && n >= 2) {
      gens.add(detail::hook(n, 0), "e0");
    }
    if (f == Family::partition) {
      gens.add(detail::split(n), "split");
    }
    if ((f == Family::partition || f == Family::dual_symmetric_inverse)
        && n >= 2) {
      gens.add(detail::join_first_two(n), "join");
    }
    if (f == Family::dual_symmetric_inverse && n >= 3) {
      gens.add(detail::contraction(n), "contraction");
    }
    return gens;
  }

  inline GeneratorSet<Pbr> pbr_generators(std::size_t n) {
    detail::check_supported(Family::partitioned_binary_relation, n);
    GeneratorSet<Pbr> gens{Family::partitioned_binary_relation, n, {}, {}};
    gens.add(Pbr::identity(n), "id");
    std::size_t const bits = 4 * n * n;
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << bits); ++code) {
      std::vector<Pbr::row_type> rows(2 * n);
      for (std::size_t a = 0; a < 2 * n; ++a) {
        rows[a] = (code >> (a * 2 * n)) & ((Pbr::row_type(1) << (2 * n)) - 1);
      }
      gens.add(Pbr(n, rows), "r" + std::to_string(code));
    }
    return gens;
  }

  inline AnyGeneratorSet standard_generators(Family f, std::size_t n) {
    if (f == Family::partitioned_binary_relation) {
      return pbr_generators(n);
    }
    if (is_bipartition_family(f)) {
      return bipartition_generators(f, n);
    }
    return map_generators(f, n);
  }

}  // namespace diagsemi

#endif  // DIAGSEMI_CATALOG_HPP_
