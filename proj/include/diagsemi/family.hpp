#ifndef DIAGSEMI_FAMILY_HPP_
#define DIAGSEMI_FAMILY_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bipartition.hpp"
#include "config.hpp"
#include "map_element.hpp"
#include "pbr.hpp"

namespace diagsemi {

  //! The ten diagram monoid families.
  enum class Family : std::uint8_t {
    partitioned_binary_relation,  // PB
    binary_relation,              // B
    partial_transformation,       // PT
    transformation,               // T
    partial_permutation,          // I  (symmetric inverse monoid)
    dual_symmetric_inverse,       // IS (block bijections)
    partition,                    // P
    brauer,                       // Br
    symmetric_group,              // S
    temperley_lieb                // TL
  };

  inline constexpr std::array<Family, 10> kAllFamilies
      = {Family::partitioned_binary_relation,
         Family::binary_relation,
         Family::partition,
         Family::partial_transformation,
         Family::dual_symmetric_inverse,
         Family::transformation,
         Family::partial_permutation,
         Family::brauer,
         Family::symmetric_group,
         Family::temperley_lieb};

  //! Short names used on the command line and in output files.
  inline std::string_view short_name(Family f) {
    switch (f) {
      case Family::partitioned_binary_relation:
        return "PB";
      case Family::binary_relation:
        return "B";
      case Family::partial_transformation:
        return "PT";
      case Family::transformation:
        return "T";
      case Family::partial_permutation:
        return "I";
      case Family::dual_symmetric_inverse:
        return "IS";
      case Family::partition:
        return "P";
      case Family::brauer:
        return "Br";
      case Family::symmetric_group:
        return "S";
      case Family::temperley_lieb:
        return "TL";
    }
    return "?";
  }

  inline std::string_view long_name(Family f) {
    switch (f) {
      case Family::partitioned_binary_relation:
        return "partitioned binary relations";
      case Family::binary_relation:
        return "binary relations";
      case Family::partial_transformation:
        return "partial transformations";
      case Family::transformation:
        return "full transformations";
      case Family::partial_permutation:
        return "symmetric inverse monoid";
      case Family::dual_symmetric_inverse:
        return "dual symmetric inverse monoid";
      case Family::partition:
        return "partition monoid";
      case Family::brauer:
        return "Brauer monoid";
      case Family::symmetric_group:
        return "symmetric group";
      case Family::temperley_lieb:
        return "Temperley-Lieb monoid";
    }
    return "?";
  }

  inline Family family_from_string(std::string_view s) {
    for (auto f : kAllFamilies) {
      if (short_name(f) == s) {
        return f;
      }
    }
    throw Error("unknown family \"" + std::string(s)
                + "\" (expected one of PB B P PT IS T I Br S TL)");
  }

  //! The kind used for elements of a top-to-bottom family.
  inline MapKind map_kind_of(Family f) {
    switch (f) {
      case Family::binary_relation:
        return MapKind::binary_relation;
      case Family::partial_transformation:
        return MapKind::partial_transformation;
      case Family::transformation:
        return MapKind::transformation;
      case Family::partial_permutation:
        return MapKind::partial_permutation;
      case Family::symmetric_group:
        return MapKind::permutation;
      default:
        throw Error(std::string(short_name(f)) + " is not a map family");
    }
  }

  inline bool is_map_family(Family f) {
    return f == Family::binary_relation || f == Family::partial_transformation
           || f == Family::transformation || f == Family::partial_permutation
           || f == Family::symmetric_group;
  }

  inline bool is_bipartition_family(Family f) {
    return f == Family::partition || f == Family::dual_symmetric_inverse
           || f == Family::brauer || f == Family::temperley_lieb;
  }

  //! A set of families, one bit per Family enumerator.
  class FamilyFlags {
   public:
    constexpr FamilyFlags() = default;

    constexpr void set(Family f) noexcept {
      bits_ |= bit(f);
    }

    constexpr bool has(Family f) const noexcept {
      return (bits_ & bit(f)) != 0;
    }

    //! Every family in \p other is also in this set.
    constexpr bool contains(FamilyFlags other) const noexcept {
      return (other.bits_ & ~bits_) == 0;
    }

    constexpr std::uint16_t bits() const noexcept {
      return bits_;
    }

    std::vector<Family> families() const {
      std::vector<Family> result;
      for (auto f : kAllFamilies) {
        if (has(f)) {
          result.push_back(f);
        }
      }
      return result;
    }

    friend constexpr bool operator==(FamilyFlags, FamilyFlags) = default;

   private:
    static constexpr std::uint16_t bit(Family f) noexcept {
      return static_cast<std::uint16_t>(1u << static_cast<unsigned>(f));
    }

    std::uint16_t bits_ = 0;
  };

  //! Which families the PBR \p x literally belongs to, reading edges as
  //! given: top-to-bottom families use only edges i -> j', the partition
  //! families require an equivalence relation (loops included).
  inline FamilyFlags classify(Pbr const& x) {
    FamilyFlags       flags;
    std::size_t const n = x.degree();
    flags.set(Family::partitioned_binary_relation);

    Pbr::row_type const low = (n == 32) ? 0xFFFFFFFFULL
                                        : (Pbr::row_type(1) << n) - 1;
    bool top_down = true;
    for (std::size_t a = 0; a < 2 * n && top_down; ++a) {
      auto r = x.row(a);
      top_down = a < n ? (r & low) == 0 : r == 0;
    }
    if (top_down) {
      flags.set(Family::binary_relation);
      bool          partial = true, total = true, injective = true;
      Pbr::row_type hit = 0;
      for (std::size_t i = 0; i < n; ++i) {
        auto r = x.row(i);
        auto c = std::popcount(r);
        partial &= c <= 1;
        total &= c == 1;
        injective &= (hit & r) == 0;
        hit |= r;
      }
      if (partial) {
        flags.set(Family::partial_transformation);
        if (total) {
          flags.set(Family::transformation);
        }
        if (injective) {
          flags.set(Family::partial_permutation);
        }
        if (total && injective) {
          flags.set(Family::symmetric_group);
        }
      }
    }

    bool equivalence = true;
    for (std::size_t a = 0; a < 2 * n && equivalence; ++a) {
      equivalence = x.edge(a, a);
      for (std::size_t b = 0; b < 2 * n && equivalence; ++b) {
        if (x.edge(a, b)) {
          equivalence = x.edge(b, a) && (x.row(b) & ~x.row(a)) == 0;
        }
      }
    }
    if (equivalence) {
      flags.set(Family::partition);
      auto b = bipartition_from_pbr(x);
      if (is_block_bijection(b)) {
        flags.set(Family::dual_symmetric_inverse);
      }
      if (is_brauer(b)) {
        flags.set(Family::brauer);
        if (is_planar(b)) {
          flags.set(Family::temperley_lieb);
        }
      }
    }
    return flags;
  }

  inline Pbr to_pbr(Pbr const& x) {
    return x;
  }

  inline Pbr to_pbr(Bipartition const& x) {
    return pbr_from_bipartition(x);
  }

  inline Pbr to_pbr(MapElement const& x) {
    return pbr_from_map(x);
  }

  inline bool is_nontrivial_permutation(MapElement const& x) {
    return x.is_permutation() && !x.is_identity();
  }

  inline bool is_nontrivial_permutation(Bipartition const& x) {
    return is_permutation_diagram(x) && x != Bipartition::identity(x.degree());
  }

  //! Permutations inside the full PBR monoid are the units: the PBRs with
  //! edges exactly {i -> sigma(i)', sigma(i)' -> i}.
  inline bool is_nontrivial_permutation(Pbr const& x) {
    std::size_t const n = x.degree();
    if (x.number_of_edges() != 2 * n || x == Pbr::identity(n)) {
      return false;
    }
    Pbr::row_type hit = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto r = x.row(i);
      if (std::popcount(r) != 1 || r < (Pbr::row_type(1) << n)
          || (hit & r) != 0) {
        return false;
      }
      hit |= r;
      std::size_t j = std::countr_zero(r);
      if (x.row(j) != (Pbr::row_type(1) << i)) {
        return false;
      }
    }
    return true;
  }

}  // namespace diagsemi

#endif  // DIAGSEMI_FAMILY_HPP_
