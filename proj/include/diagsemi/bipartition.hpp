#ifndef DIAGSEMI_BIPARTITION_HPP_
#define DIAGSEMI_BIPARTITION_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "config.hpp"
#include "pbr.hpp"
#include "point_permutation.hpp"

namespace diagsemi {

  namespace detail {
    struct UnionFind {
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::uint32_t(0));
      }

      std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }

      void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }

      std::vector<std::uint32_t> parent;
    };
  }  // namespace detail

  //! A set partition of the 2n points of a diagram (an element of the
  //! partition monoid). Stored as a lookup from point to block id, with block
  //! ids assigned by first occurrence when scanning points 0..2n-1, so equal
  //! partitions have equal lookups.
  class Bipartition {
   public:
    Bipartition() = default;

    //! Any labelling of points by block; relabelled into canonical form.
    Bipartition(std::size_t n, std::vector<std::uint32_t> const& labels)
        : degree_(n), lookup_(2 * n) {
      detail::check_degree(n);
      if (labels.size() != 2 * n) {
        throw Error("bipartition lookup must have 2 * degree entries");
      }
      std::vector<std::uint32_t> relabel;
      std::vector<std::uint32_t> seen_label;
      for (std::size_t p = 0; p < 2 * n; ++p) {
        auto it = std::find(seen_label.begin(), seen_label.end(), labels[p]);
        if (it == seen_label.end()) {
          seen_label.push_back(labels[p]);
          lookup_[p] = static_cast<std::uint32_t>(seen_label.size() - 1);
        } else {
          lookup_[p]
              = static_cast<std::uint32_t>(std::distance(seen_label.begin(), it));
        }
      }
      number_of_blocks_ = seen_label.size();
    }

    static Bipartition from_blocks(
        std::size_t                                  n,
        std::vector<std::vector<std::size_t>> const& blocks) {
      detail::check_degree(n);
      constexpr auto             unset = std::uint32_t(-1);
      std::vector<std::uint32_t> labels(2 * n, unset);
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
          throw Error("bipartition block is empty");
        }
        for (auto p : blocks[b]) {
          if (p >= 2 * n) {
            throw Error("bipartition point outside [0, 2n)");
          }
          if (labels[p] != unset) {
            throw Error("bipartition point in more than one block");
          }
          labels[p] = static_cast<std::uint32_t>(b);
        }
      }
      if (std::find(labels.begin(), labels.end(), unset) != labels.end()) {
        throw Error("bipartition blocks do not cover every point");
      }
      return Bipartition(n, labels);
    }

    //! Blocks {i, i'}.
    static Bipartition identity(std::size_t n) {
      detail::check_degree(n);
      std::vector<std::uint32_t> labels(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        labels[i] = labels[i + n] = static_cast<std::uint32_t>(i);
      }
      return Bipartition(n, labels);
    }

    std::size_t degree() const noexcept {
      return degree_;
    }

    std::uint32_t block(std::size_t point) const {
      return lookup_[point];
    }

    std::vector<std::uint32_t> const& lookup() const noexcept {
      return lookup_;
    }

    std::size_t number_of_blocks() const noexcept {
      return number_of_blocks_;
    }

    //! Blocks as sorted point lists, in block-id order.
    std::vector<std::vector<std::size_t>> blocks() const {
      std::vector<std::vector<std::size_t>> result(number_of_blocks_);
      for (std::size_t p = 0; p < lookup_.size(); ++p) {
        result[lookup_[p]].push_back(p);
      }
      return result;
    }

    std::vector<std::size_t> block_sizes() const {
      std::vector<std::size_t> result(number_of_blocks_, 0);
      for (auto b : lookup_) {
        ++result[b];
      }
      return result;
    }

    //! Whether each block meets both rows.
    std::vector<bool> transverse_blocks() const {
      std::vector<bool> upper(number_of_blocks_, false),
          lower(number_of_blocks_, false);
      for (std::size_t i = 0; i < degree_; ++i) {
        upper[lookup_[i]]           = true;
        lower[lookup_[i + degree_]] = true;
      }
      std::vector<bool> result(number_of_blocks_);
      for (std::size_t b = 0; b < number_of_blocks_; ++b) {
        result[b] = upper[b] && lower[b];
      }
      return result;
    }

    friend bool operator==(Bipartition const& a, Bipartition const& b) {
      return a.degree_ == b.degree_ && a.lookup_ == b.lookup_;
    }

    friend auto operator<=>(Bipartition const& a, Bipartition const& b) {
      if (auto c = a.degree_ <=> b.degree_; c != 0) {
        return c;
      }
      return a.lookup_ <=> b.lookup_;
    }

   private:
    std::size_t                degree_           = 0;
    std::size_t                number_of_blocks_ = 0;
    std::vector<std::uint32_t> lookup_;
  };

  //! Number of transverse blocks.
  inline std::size_t rank(Bipartition const& x) {
    auto t = x.transverse_blocks();
    return static_cast<std::size_t>(std::count(t.begin(), t.end(), true));
  }

  //! Stack \p x above \p y, join blocks through the identified middle row and
  //! keep the components that meet the outer rows.
  inline Bipartition bipartition_product(Bipartition const& x,
                                         Bipartition const& y) {
    detail::check_same_degree(x.degree(), y.degree());
    std::size_t const n = x.degree();
    // x's blocks are labelled 0..kx-1, y's blocks kx..kx+ky-1
    std::uint32_t const kx = static_cast<std::uint32_t>(x.number_of_blocks());
    detail::UnionFind   uf(kx + y.number_of_blocks());
    for (std::size_t m = 0; m < n; ++m) {
      uf.unite(x.block(n + m), kx + y.block(m));
    }
    std::vector<std::uint32_t> labels(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i]     = uf.find(x.block(i));
      labels[n + i] = uf.find(kx + y.block(n + i));
    }
    return Bipartition(n, labels);
  }

  inline Bipartition operator*(Bipartition const& x, Bipartition const& y) {
    return bipartition_product(x, y);
  }

  //! Non-crossing test in the cyclic boundary order 1, ..., n, n', ..., 1'.
  inline bool is_planar(Bipartition const& x) {
    std::size_t const          n = x.degree();
    std::vector<std::uint32_t> cyclic(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      cyclic[i]             = x.block(i);
      cyclic[2 * n - 1 - i] = x.block(n + i);
    }
    std::size_t const k = x.number_of_blocks();
    for (std::uint32_t a = 0; a < k; ++a) {
      for (std::uint32_t b = a + 1; b < k; ++b) {
        // a and b cross iff the restriction to {a, b} alternates a..b..a..b
        std::size_t   runs = 0;
        std::uint32_t last = std::uint32_t(-1);
        for (auto c : cyclic) {
          if ((c == a || c == b) && c != last) {
            ++runs;
            last = c;
          }
        }
        if (runs >= 4) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_brauer(Bipartition const& x) {
    auto s = x.block_sizes();
    return std::all_of(s.begin(), s.end(), [](auto v) { return v == 2; });
  }

  inline bool is_temperley_lieb(Bipartition const& x) {
    return is_brauer(x) && is_planar(x);
  }

  inline bool is_block_bijection(Bipartition const& x) {
    auto t = x.transverse_blocks();
    return std::all_of(t.begin(), t.end(), [](bool v) { return v; });
  }

  //! Blocks of the form {i, sigma(i)'}.
  inline bool is_permutation_diagram(Bipartition const& x) {
    return x.number_of_blocks() == x.degree() && is_block_bijection(x)
           && is_brauer(x);
  }

  //! The equivalence relation of \p x as a PBR: every ordered pair within a
  //! block, loops included.
  inline Pbr pbr_from_bipartition(Bipartition const& x) {
    std::size_t const          n = x.degree();
    std::vector<Pbr::row_type> block_rows(x.number_of_blocks(), 0);
    for (std::size_t p = 0; p < 2 * n; ++p) {
      block_rows[x.block(p)] |= Pbr::row_type(1) << p;
    }
    std::vector<Pbr::row_type> rows(2 * n);
    for (std::size_t p = 0; p < 2 * n; ++p) {
      rows[p] = block_rows[x.block(p)];
    }
    return Pbr(n, std::move(rows));
  }

  //! Inverse of pbr_from_bipartition. Throws unless the edge set of \p x is
  //! reflexive, symmetric and transitive, naming the first missing edge.
  inline Bipartition bipartition_from_pbr(Pbr const& x) {
    std::size_t const n = x.number_of_points();
    for (std::size_t a = 0; a < n; ++a) {
      if (!x.edge(a, a)) {
        throw Error("not an equivalence relation: missing reflexive edge "
                    + std::to_string(a) + "->" + std::to_string(a));
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (x.edge(a, b) && !x.edge(b, a)) {
          throw Error("not an equivalence relation: missing symmetric edge "
                      + std::to_string(b) + "->" + std::to_string(a));
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!x.edge(a, b)) {
          continue;
        }
        auto missing = x.row(b) & ~x.row(a);
        if (missing != 0) {
          throw Error("not an equivalence relation: missing transitive edge "
                      + std::to_string(a) + "->"
                      + std::to_string(std::countr_zero(missing)));
        }
      }
    }
    std::vector<std::uint32_t> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
      labels[a] = static_cast<std::uint32_t>(std::countr_zero(x.row(a)));
    }
    return Bipartition(x.degree(), labels);
  }

  inline Bipartition conjugate(Bipartition const&      x,
                               PointPermutation const& sigma) {
    detail::check_same_degree(x.degree(), sigma.degree());
    std::vector<std::uint32_t> labels(2 * x.degree());
    for (std::size_t p = 0; p < labels.size(); ++p) {
      labels[sigma.apply_to_point(p)] = x.block(p);
    }
    return Bipartition(x.degree(), labels);
  }

}  // namespace diagsemi

template <>
struct std::hash<diagsemi::Bipartition> {
  std::size_t operator()(diagsemi::Bipartition const& x) const noexcept {
    std::size_t seed = x.degree();
    for (auto b : x.lookup()) {
      seed = diagsemi::detail::hash_combine(seed, b);
    }
    return seed;
  }
};

#endif  // DIAGSEMI_BIPARTITION_HPP_
