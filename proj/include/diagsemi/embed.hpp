#ifndef DIAGSEMI_EMBED_HPP_
#define DIAGSEMI_EMBED_HPP_

#include <string>
#include <variant>
#include <vector>

#include "bipartition.hpp"
#include "family.hpp"
#include "map_element.hpp"
#include "pbr.hpp"

namespace diagsemi {

  using AnyElement = std::variant<Pbr, Bipartition, MapElement>;

  //! Image of an element in a larger family. #homomorphism is false when
  //! the map only realises elements and does not respect products (partial
  //! transformations inside the partition monoid).
  struct Embedding {
    AnyElement element;
    bool       homomorphism;
  };

  //! Map elements as partitions: block {i : x(i) = j} u {j'} for each image
  //! point j, singletons for undefined upper points and missed lower points.
  inline Bipartition map_to_bipartition(MapElement const& x) {
    if (x.kind() == MapKind::binary_relation) {
      throw Error("binary relations have no partition realisation");
    }
    std::size_t const          n = x.degree();
    std::vector<std::uint32_t> labels(2 * n);
    // lower point j' gets label j; undefined upper points get fresh labels
    for (std::size_t j = 0; j < n; ++j) {
      labels[n + j] = static_cast<std::uint32_t>(j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = x[i] == MapElement::undefined
                      ? static_cast<std::uint32_t>(n + i)
                      : x[i];
    }
    return Bipartition(n, labels);
  }

  //! PT_n -> T_{n+1}: undefined points and the new point n go to n.
  inline MapElement partial_to_total(MapElement const& x) {
    if (x.kind() == MapKind::binary_relation) {
      throw Error("binary relations do not embed in T_{n+1}");
    }
    std::size_t const n = x.degree();
    detail::check_degree(n + 1);
    std::vector<std::uint32_t> image(n + 1, static_cast<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] != MapElement::undefined) {
        image[i] = x[i];
      }
    }
    return MapElement(MapKind::transformation, std::move(image));
  }

  namespace detail {
    inline bool kind_leq(MapKind a, MapKind b) {
      return join(a, b) == b;
    }

    [[noreturn]] inline void unsupported_embedding(std::string const& from,
                                                   Family             to) {
      throw Error("no embedding of " + from + " into "
                  + std::string(short_name(to)));
    }
  }  // namespace detail

  inline Embedding embed(MapElement const& x, Family target) {
    MapKind const k = x.kind();
    std::string   from(to_string(k));
    switch (target) {
      case Family::partitioned_binary_relation:
        return {pbr_from_map(x), true};
      case Family::partition:
        if (k == MapKind::binary_relation) {
          detail::unsupported_embedding(from, target);
        }
        return {map_to_bipartition(x), k != MapKind::partial_transformation};
      case Family::dual_symmetric_inverse:
      case Family::brauer:
        if (k != MapKind::permutation) {
          detail::unsupported_embedding(from, target);
        }
        return {map_to_bipartition(x), true};
      case Family::transformation:
        if (k == MapKind::partial_transformation
            || k == MapKind::partial_permutation) {
          return {partial_to_total(x), true};
        }
        [[fallthrough]];
      case Family::binary_relation:
      case Family::partial_transformation:
      case Family::partial_permutation:
      case Family::symmetric_group: {
        MapKind const to = map_kind_of(target);
        if (!detail::kind_leq(k, to)) {
          detail::unsupported_embedding(from, target);
        }
        return {x.as_kind(to), true};
      }
      case Family::temperley_lieb:
        break;
    }
    detail::unsupported_embedding(from, target);
  }

  inline Embedding embed(Bipartition const& x, Family target) {
    switch (target) {
      case Family::partitioned_binary_relation:
        return {pbr_from_bipartition(x), true};
      case Family::partition:
        return {x, true};
      case Family::dual_symmetric_inverse:
        if (is_block_bijection(x)) {
          return {x, true};
        }
        break;
      case Family::brauer:
        if (is_brauer(x)) {
          return {x, true};
        }
        break;
      case Family::temperley_lieb:
        if (is_temperley_lieb(x)) {
          return {x, true};
        }
        break;
      default:
        break;
    }
    detail::unsupported_embedding("this bipartition", target);
  }

  inline Embedding embed(Pbr const& x, Family target) {
    if (target == Family::partitioned_binary_relation) {
      return {x, true};
    }
    detail::unsupported_embedding("a PBR", target);
  }

  inline std::size_t degree(AnyElement const& x) {
    return std::visit([](auto const& e) { return e.degree(); }, x);
  }

}  // namespace diagsemi

#endif  // DIAGSEMI_EMBED_HPP_
