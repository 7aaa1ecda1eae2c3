#ifndef DIAGSEMI_PBR_HPP_
#define DIAGSEMI_PBR_HPP_

#include <bit>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "config.hpp"
#include "point_permutation.hpp"

namespace diagsemi {

  //! Partitioned binary relation of degree n: an arbitrary directed graph on
  //! the 2n points of a diagram. Points 0..n-1 are the upper row and points
  //! n..2n-1 the lower row (point n + i is the lower copy of i).
  //!
  //! Row a stores the out-neighbours of a as a bitset over the 2n points.
  class Pbr {
   public:
    using row_type = std::uint64_t;

    Pbr() = default;

    //! The PBR of degree \p n with no edges.
    explicit Pbr(std::size_t n) : degree_(n), rows_(2 * n, 0) {
      detail::check_degree(n);
    }

    Pbr(std::size_t n, std::vector<row_type> rows)
        : degree_(n), rows_(std::move(rows)) {
      detail::check_degree(n);
      if (rows_.size() != 2 * n) {
        throw Error("PBR adjacency must have 2 * degree rows");
      }
      for (auto r : rows_) {
        if (r & ~point_mask()) {
          throw Error("PBR row references a point outside [0, 2n)");
        }
      }
    }

    static Pbr from_edges(std::size_t                                   n,
                          std::vector<std::pair<std::size_t, std::size_t>> const& edges) {
      Pbr result(n);
      for (auto [a, b] : edges) {
        if (a >= 2 * n || b >= 2 * n) {
          throw Error("PBR edge endpoint outside [0, 2n)");
        }
        result.rows_[a] |= row_type(1) << b;
      }
      return result;
    }

    //! Edges i -> i' and i' -> i for every i.
    static Pbr identity(std::size_t n) {
      Pbr result(n);
      for (std::size_t i = 0; i < n; ++i) {
        result.rows_[i] |= row_type(1) << (i + n);
        result.rows_[i + n] |= row_type(1) << i;
      }
      return result;
    }

    std::size_t degree() const noexcept {
      return degree_;
    }

    std::size_t number_of_points() const noexcept {
      return 2 * degree_;
    }

    bool edge(std::size_t a, std::size_t b) const {
      return (rows_[a] >> b) & 1;
    }

    row_type row(std::size_t a) const {
      return rows_[a];
    }

    std::vector<row_type> const& rows() const noexcept {
      return rows_;
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
      std::vector<std::pair<std::size_t, std::size_t>> result;
      for (std::size_t a = 0; a < rows_.size(); ++a) {
        for (row_type r = rows_[a]; r != 0; r &= r - 1) {
          result.emplace_back(a, std::countr_zero(r));
        }
      }
      return result;
    }

    std::size_t number_of_edges() const noexcept {
      std::size_t total = 0;
      for (auto r : rows_) {
        total += std::popcount(r);
      }
      return total;
    }

    row_type point_mask() const noexcept {
      return degree_ == 32 ? ~row_type(0)
                           : (row_type(1) << (2 * degree_)) - 1;
    }

    friend bool operator==(Pbr const&, Pbr const&)  = default;
    friend auto operator<=>(Pbr const&, Pbr const&) = default;

   private:
    std::size_t           degree_ = 0;
    std::vector<row_type> rows_;
  };

  inline Pbr pbr_identity(std::size_t n) {
    return Pbr::identity(n);
  }

  //! Product of \p x stacked above \p y. An edge a -> b is in the result iff
  //! the stacked graph has a path from a to b whose edges alternate between
  //! edges of x and edges of y. Interior vertices of such a path always lie
  //! in the identified middle row, so the search runs over states
  //! (middle point, colour of the next edge) using word-parallel row unions.
  inline Pbr pbr_product(Pbr const& x, Pbr const& y) {
    detail::check_same_degree(x.degree(), y.degree());
    using row_type           = Pbr::row_type;
    std::size_t const n      = x.degree();
    row_type const    low    = (n == 32) ? 0xFFFFFFFFULL : (row_type(1) << n) - 1;
    std::vector<row_type> out(2 * n, 0);

    for (std::size_t a = 0; a < 2 * n; ++a) {
      row_type result = 0;
      // middle points entered by an x-edge (next edge must be from y) and by
      // a y-edge (next edge must be from x)
      row_type need_y = 0, need_x = 0;
      if (a < n) {
        row_type r = x.row(a);
        result |= r & low;
        need_y = r >> n;
      } else {
        row_type r = y.row(a);
        result |= r & (low << n);
        need_x = r & low;
      }
      row_type seen_y = 0, seen_x = 0;
      while ((need_y & ~seen_y) != 0 || (need_x & ~seen_x) != 0) {
        for (row_type todo = need_y & ~seen_y; todo != 0; todo &= todo - 1) {
          std::size_t m = std::countr_zero(todo);
          seen_y |= row_type(1) << m;
          row_type r = y.row(m);
          result |= r & (low << n);
          need_x |= r & low;
        }
        for (row_type todo = need_x & ~seen_x; todo != 0; todo &= todo - 1) {
          std::size_t m = std::countr_zero(todo);
          seen_x |= row_type(1) << m;
          row_type r = x.row(n + m);
          result |= r & low;
          need_y |= r >> n;
        }
      }
      out[a] = result;
    }
    return Pbr(n, std::move(out));
  }

  inline Pbr operator*(Pbr const& x, Pbr const& y) {
    return pbr_product(x, y);
  }

  inline Pbr conjugate(Pbr const& x, PointPermutation const& sigma) {
    detail::check_same_degree(x.degree(), sigma.degree());
    std::vector<Pbr::row_type> rows(x.number_of_points(), 0);
    for (auto [a, b] : x.edges()) {
      rows[sigma.apply_to_point(a)]
          |= Pbr::row_type(1) << sigma.apply_to_point(b);
    }
    return Pbr(x.degree(), std::move(rows));
  }

}  // namespace diagsemi

template <>
struct std::hash<diagsemi::Pbr> {
  std::size_t operator()(diagsemi::Pbr const& x) const noexcept {
    std::size_t seed = x.degree();
    for (auto r : x.rows()) {
      seed = diagsemi::detail::hash_combine(seed, std::hash<std::uint64_t>{}(r));
    }
    return seed;
  }
};

#endif  // DIAGSEMI_PBR_HPP_
