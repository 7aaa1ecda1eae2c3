#ifndef DIAGSEMI_MAP_ELEMENT_HPP_
#define DIAGSEMI_MAP_ELEMENT_HPP_

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "pbr.hpp"
#include "point_permutation.hpp"

namespace diagsemi {

  //! Kinds of top-to-bottom diagrams. Ordered so that the kind lattice is
  //!
  //!   permutation < transformation, partial-permutation
  //!               < partial-transformation < binary-relation.
  enum class MapKind : std::uint8_t {
    permutation,
    transformation,
    partial_permutation,
    partial_transformation,
    binary_relation
  };

  inline std::string_view to_string(MapKind k) {
    switch (k) {
      case MapKind::permutation:
        return "permutation";
      case MapKind::transformation:
        return "transformation";
      case MapKind::partial_permutation:
        return "partial-permutation";
      case MapKind::partial_transformation:
        return "partial-transformation";
      case MapKind::binary_relation:
        return "binary-relation";
    }
    return "?";
  }

  inline MapKind map_kind_from_string(std::string_view s) {
    for (auto k : {MapKind::permutation,
                   MapKind::transformation,
                   MapKind::partial_permutation,
                   MapKind::partial_transformation,
                   MapKind::binary_relation}) {
      if (to_string(k) == s) {
        return k;
      }
    }
    throw Error("unknown map kind \"" + std::string(s) + "\"");
  }

  //! Least upper bound in the kind lattice.
  inline MapKind join(MapKind a, MapKind b) {
    if (a == b) {
      return a;
    }
    if (a > b) {
      std::swap(a, b);
    }
    if (b == MapKind::binary_relation) {
      return b;
    }
    if (a == MapKind::permutation) {
      return b;
    }
    // transformation with a partial kind
    return MapKind::partial_transformation;
  }

  //! A diagram whose edges all run from the upper row to the lower row.
  //!
  //! For map kinds, entry i is the image of i or #undefined; for the
  //! binary-relation kind, entry i is the bitset of images of i.
  class MapElement {
   public:
    static constexpr std::uint32_t undefined = 0xFFFFFFFF;

    MapElement() = default;

    MapElement(MapKind kind, std::vector<std::uint32_t> data)
        : kind_(kind), data_(std::move(data)) {
      std::size_t const n = data_.size();
      detail::check_degree(n);
      if (kind_ == MapKind::binary_relation) {
        std::uint32_t mask = n == 32 ? 0xFFFFFFFF : (std::uint32_t(1) << n) - 1;
        for (auto r : data_) {
          if (r & ~mask) {
            throw Error("binary relation row references a point >= n");
          }
        }
        return;
      }
      std::vector<bool> hit(n, false);
      bool const total = kind_ == MapKind::permutation
                         || kind_ == MapKind::transformation;
      bool const injective = kind_ == MapKind::permutation
                             || kind_ == MapKind::partial_permutation;
      for (auto x : data_) {
        if (x == undefined) {
          if (total) {
            throw Error(std::string(to_string(kind_))
                        + " must be defined everywhere");
          }
          continue;
        }
        if (x >= n) {
          throw Error("map image outside [0, n)");
        }
        if (injective && hit[x]) {
          throw Error(std::string(to_string(kind_)) + " must be injective");
        }
        hit[x] = true;
      }
    }

    static MapElement identity(std::size_t n, MapKind kind) {
      detail::check_degree(n);
      std::vector<std::uint32_t> data(n);
      for (std::size_t i = 0; i < n; ++i) {
        data[i] = kind == MapKind::binary_relation ? std::uint32_t(1) << i
                                                   : static_cast<std::uint32_t>(i);
      }
      return MapElement(kind, std::move(data));
    }

    std::size_t degree() const noexcept {
      return data_.size();
    }

    MapKind kind() const noexcept {
      return kind_;
    }

    std::vector<std::uint32_t> const& data() const noexcept {
      return data_;
    }

    //! Image of \p i, or #undefined. Map kinds only.
    std::uint32_t operator[](std::size_t i) const {
      return data_[i];
    }

    bool related(std::size_t i, std::size_t j) const {
      if (kind_ == MapKind::binary_relation) {
        return (data_[i] >> j) & 1;
      }
      return data_[i] == j;
    }

    //! Row bitsets of the relation underlying this element.
    std::vector<std::uint32_t> relation_rows() const {
      if (kind_ == MapKind::binary_relation) {
        return data_;
      }
      std::vector<std::uint32_t> rows(data_.size(), 0);
      for (std::size_t i = 0; i < data_.size(); ++i) {
        if (data_[i] != undefined) {
          rows[i] = std::uint32_t(1) << data_[i];
        }
      }
      return rows;
    }

    //! The same diagram reinterpreted as kind \p k; throws if it does not
    //! satisfy the constraints of \p k.
    MapElement as_kind(MapKind k) const {
      if (k == kind_) {
        return *this;
      }
      if (k == MapKind::binary_relation) {
        return MapElement(k, relation_rows());
      }
      if (kind_ != MapKind::binary_relation) {
        return MapElement(k, data_);
      }
      std::vector<std::uint32_t> image(data_.size());
      for (std::size_t i = 0; i < data_.size(); ++i) {
        auto c = std::popcount(data_[i]);
        if (c > 1) {
          throw Error("relation is not functional");
        }
        image[i] = c == 0 ? undefined
                          : static_cast<std::uint32_t>(std::countr_zero(data_[i]));
      }
      return MapElement(k, std::move(image));
    }

    bool is_permutation() const {
      std::uint32_t hit = 0;
      for (auto r : relation_rows()) {
        if (std::popcount(r) != 1 || (hit & r) != 0) {
          return false;
        }
        hit |= r;
      }
      return true;
    }

    bool is_identity() const {
      auto rows = relation_rows();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] != std::uint32_t(1) << i) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(MapElement const&, MapElement const&)  = default;
    friend auto operator<=>(MapElement const&, MapElement const&) = default;

   private:
    MapKind                    kind_ = MapKind::permutation;
    std::vector<std::uint32_t> data_;
  };

  //! \p x then \p y (x stacked above y). The result kind is the join of the
  //! operand kinds.
  inline MapElement element_product(MapElement const& x, MapElement const& y) {
    detail::check_same_degree(x.degree(), y.degree());
    std::size_t const n    = x.degree();
    MapKind const     kind = join(x.kind(), y.kind());
    std::vector<std::uint32_t> out(n);
    if (kind == MapKind::binary_relation) {
      auto xr = x.relation_rows();
      auto yr = y.relation_rows();
      for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t r = 0;
        for (std::uint32_t m = xr[i]; m != 0; m &= m - 1) {
          r |= yr[std::countr_zero(m)];
        }
        out[i] = r;
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = x[i] == MapElement::undefined ? MapElement::undefined : y[x[i]];
      }
    }
    return MapElement(kind, std::move(out));
  }

  inline MapElement operator*(MapElement const& x, MapElement const& y) {
    return element_product(x, y);
  }

  //! Edges i -> j' for each related pair.
  inline Pbr pbr_from_map(MapElement const& x) {
    std::size_t const          n = x.degree();
    std::vector<Pbr::row_type> rows(2 * n, 0);
    auto                       rel = x.relation_rows();
    for (std::size_t i = 0; i < n; ++i) {
      rows[i] = Pbr::row_type(rel[i]) << n;
    }
    return Pbr(n, std::move(rows));
  }

  inline MapElement conjugate(MapElement const&       x,
                              PointPermutation const& sigma) {
    detail::check_same_degree(x.degree(), sigma.degree());
    std::size_t const          n = x.degree();
    std::vector<std::uint32_t> out(n);
    if (x.kind() == MapKind::binary_relation) {
      for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t r = 0;
        for (std::uint32_t m = x.data()[i]; m != 0; m &= m - 1) {
          r |= std::uint32_t(1) << sigma[std::countr_zero(m)];
        }
        out[sigma[i]] = r;
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        out[sigma[i]] = x[i] == MapElement::undefined ? MapElement::undefined
                                                      : sigma[x[i]];
      }
    }
    return MapElement(x.kind(), std::move(out));
  }

}  // namespace diagsemi

template <>
struct std::hash<diagsemi::MapElement> {
  std::size_t operator()(diagsemi::MapElement const& x) const noexcept {
    std::size_t seed = static_cast<std::size_t>(x.kind());
    for (auto v : x.data()) {
      seed = diagsemi::detail::hash_combine(seed, v);
    }
    return seed;
  }
};

#endif  // DIAGSEMI_MAP_ELEMENT_HPP_
