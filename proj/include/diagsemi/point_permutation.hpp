#ifndef DIAGSEMI_POINT_PERMUTATION_HPP_
#define DIAGSEMI_POINT_PERMUTATION_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "config.hpp"

namespace diagsemi {

  // A permutation of the points {0, ..., n - 1}. Acts on diagrams by
  // relabelling the upper and lower copies of each point identically.
  class PointPermutation {
   public:
    PointPermutation() = default;

    explicit PointPermutation(std::vector<std::uint32_t> images)
        : images_(std::move(images)) {
      detail::check_degree(images_.size());
      std::vector<bool> seen(images_.size(), false);
      for (auto x : images_) {
        if (x >= images_.size() || seen[x]) {
          throw Error("point permutation is not a bijection");
        }
        seen[x] = true;
      }
    }

    static PointPermutation identity(std::size_t n) {
      std::vector<std::uint32_t> v(n);
      std::iota(v.begin(), v.end(), 0);
      return PointPermutation(std::move(v));
    }

    // i -> n - 1 - i
    static PointPermutation reversal(std::size_t n) {
      std::vector<std::uint32_t> v(n);
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = static_cast<std::uint32_t>(n - 1 - i);
      }
      return PointPermutation(std::move(v));
    }

    std::size_t degree() const noexcept {
      return images_.size();
    }

    std::uint32_t operator[](std::size_t i) const {
      return images_[i];
    }

    // Image of a diagram point in [0, 2n).
    std::size_t apply_to_point(std::size_t p) const {
      std::size_t const n = images_.size();
      return p < n ? images_[p] : n + images_[p - n];
    }

    bool is_identity() const noexcept {
      for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
          return false;
        }
      }
      return true;
    }

    // (this then other)
    PointPermutation then(PointPermutation const& other) const {
      detail::check_same_degree(degree(), other.degree());
      std::vector<std::uint32_t> v(images_.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = other.images_[images_[i]];
      }
      return PointPermutation(std::move(v));
    }

    PointPermutation inverse() const {
      std::vector<std::uint32_t> v(images_.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        v[images_[i]] = static_cast<std::uint32_t>(i);
      }
      return PointPermutation(std::move(v));
    }

    std::vector<std::uint32_t> const& images() const noexcept {
      return images_;
    }

    friend bool operator==(PointPermutation const&, PointPermutation const&)
        = default;
    friend auto operator<=>(PointPermutation const&, PointPermutation const&)
        = default;

   private:
    std::vector<std::uint32_t> images_;
  };

  // All n! permutations in lexicographic order of their image arrays.
  inline std::vector<PointPermutation> all_point_permutations(std::size_t n) {
    detail::check_degree(n);
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::vector<PointPermutation> result;
    do {
      result.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return result;
  }

}  // namespace diagsemi

#endif  // DIAGSEMI_POINT_PERMUTATION_HPP_
