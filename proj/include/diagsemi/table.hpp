#ifndef DIAGSEMI_TABLE_HPP_
#define DIAGSEMI_TABLE_HPP_

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "family.hpp"

namespace diagsemi {

  //! A finite semigroup given by its multiplication table on {0, ..., n-1}.
  class TableSemigroup {
   public:
    TableSemigroup() = default;

    TableSemigroup(std::size_t n, std::vector<std::uint32_t> table)
        : size_(n), table_(std::move(table)), nontrivial_permutation_(n, false) {
      if (table_.size() != n * n) {
        throw Error("multiplication table must have n * n entries");
      }
      for (auto v : table_) {
        if (v >= n) {
          throw Error("multiplication table entry out of range");
        }
      }
    }

    std::size_t size() const noexcept {
      return size_;
    }

    std::uint32_t product(std::size_t x, std::size_t y) const {
      return table_[x * size_ + y];
    }

    std::uint32_t const* row(std::size_t x) const {
      return table_.data() + x * size_;
    }

    std::vector<std::uint32_t> const& table() const noexcept {
      return table_;
    }

    bool is_idempotent(std::size_t x) const {
      return product(x, x) == x;
    }

    //! Marks elements that are permutations other than the identity, for
    //! the census statistics.
    std::vector<bool> const& nontrivial_permutation_flags() const noexcept {
      return nontrivial_permutation_;
    }

    void set_nontrivial_permutation_flags(std::vector<bool> flags) {
      if (flags.size() != size_) {
        throw Error("permutation flags must have one entry per element");
      }
      nontrivial_permutation_ = std::move(flags);
    }

    bool is_associative() const {
      for (std::size_t x = 0; x < size_; ++x) {
        for (std::size_t y = 0; y < size_; ++y) {
          auto xy = product(x, y);
          for (std::size_t z = 0; z < size_; ++z) {
            if (product(xy, z) != product(x, product(y, z))) {
              return false;
            }
          }
        }
      }
      return true;
    }

    std::optional<std::uint32_t> identity() const {
      for (std::uint32_t e = 0; e < size_; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < size_ && ok; ++x) {
          ok = product(e, x) == x && product(x, e) == x;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }

    //! Has an identity and every row and column is a permutation.
    bool is_group() const {
      if (size_ == 0 || !identity()) {
        return false;
      }
      for (std::size_t x = 0; x < size_; ++x) {
        std::vector<bool> row_seen(size_, false), col_seen(size_, false);
        for (std::size_t y = 0; y < size_; ++y) {
          auto a = product(x, y), b = product(y, x);
          if (row_seen[a] || col_seen[b]) {
            return false;
          }
          row_seen[a] = col_seen[b] = true;
        }
      }
      return true;
    }

   private:
    std::size_t                size_ = 0;
    std::vector<std::uint32_t> table_;
    std::vector<bool>          nontrivial_permutation_;
  };

  template <typename Element, typename Hash>
  TableSemigroup to_table(EnumeratedSemigroup<Element, Hash> const& S) {
    TableSemigroup    T(S.size(), S.multiplication_table());
    std::vector<bool> flags(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
      flags[i] = is_nontrivial_permutation(S.at(i));
    }
    T.set_nontrivial_permutation_flags(std::move(flags));
    return T;
  }

  namespace detail {
    inline std::vector<bool> membership(TableSemigroup const&             S,
                                        std::vector<std::uint32_t> const& subset) {
      std::vector<bool> in(S.size(), false);
      for (auto x : subset) {
        if (x >= S.size()) {
          throw Error("element index out of range");
        }
        in[x] = true;
      }
      return in;
    }
  }  // namespace detail

  inline bool is_subsemigroup(TableSemigroup const&             S,
                              std::vector<std::uint32_t> const& subset) {
    auto in = detail::membership(S, subset);
    for (auto x : subset) {
      for (auto y : subset) {
        if (!in[S.product(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  //! Nonempty I with SI and IS contained in I.
  inline bool is_ideal(TableSemigroup const&             S,
                       std::vector<std::uint32_t> const& subset) {
    if (subset.empty()) {
      return false;
    }
    auto in = detail::membership(S, subset);
    for (auto x : subset) {
      for (std::size_t s = 0; s < S.size(); ++s) {
        if (!in[S.product(x, s)] || !in[S.product(s, x)]) {
          return false;
        }
      }
    }
    return true;
  }

  //! S^1 x S^1, sorted.
  inline std::vector<std::uint32_t> principal_ideal(TableSemigroup const& S,
                                                    std::size_t           x) {
    std::vector<bool> in(S.size(), false);
    in[x] = true;
    std::vector<std::uint32_t> left{static_cast<std::uint32_t>(x)};  // S^1 x
    for (std::size_t s = 0; s < S.size(); ++s) {
      auto y = S.product(s, x);
      if (!in[y]) {
        in[y] = true;
        left.push_back(y);
      }
    }
    for (auto y : left) {
      for (std::size_t s = 0; s < S.size(); ++s) {
        in[S.product(y, s)] = true;
      }
    }
    std::vector<std::uint32_t> result;
    for (std::uint32_t i = 0; i < S.size(); ++i) {
      if (in[i]) {
        result.push_back(i);
      }
    }
    return result;
  }

  //! The distinct principal ideals, in order of their generator's index.
  inline std::vector<std::vector<std::uint32_t>>
  principal_ideals(TableSemigroup const& S) {
    std::vector<std::vector<std::uint32_t>> result;
    std::set<std::vector<std::uint32_t>>    seen;
    for (std::size_t x = 0; x < S.size(); ++x) {
      auto I = principal_ideal(S, x);
      if (seen.insert(I).second) {
        result.push_back(std::move(I));
      }
    }
    return result;
  }

  //! Every ideal of S (each is a union of principal ideals), sorted.
  //! Throws LimitExceeded past \p limit ideals.
  inline std::vector<std::vector<std::uint32_t>>
  ideals_of(TableSemigroup const& S, std::size_t limit = 1 << 16) {
    auto principal = principal_ideals(S);
    std::set<std::vector<std::uint32_t>> found(principal.begin(),
                                               principal.end());
    std::vector<std::vector<std::uint32_t>> queue(principal.begin(),
                                                  principal.end());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto const& P : principal) {
        std::vector<std::uint32_t> U;
        std::set_union(queue[i].begin(), queue[i].end(), P.begin(), P.end(),
                       std::back_inserter(U));
        if (found.insert(U).second) {
          if (found.size() > limit) {
            throw LimitExceeded("more than " + std::to_string(limit)
                                + " ideals");
          }
          queue.push_back(std::move(U));
        }
      }
    }
    return {found.begin(), found.end()};
  }

  //! The minimal ideal: the intersection of all principal ideals.
  inline std::vector<std::uint32_t> minimal_ideal(TableSemigroup const& S) {
    std::vector<std::uint32_t> best;
    for (auto const& I : principal_ideals(S)) {
      if (best.empty() || I.size() < best.size()) {
        best = I;
      }
    }
    return best;
  }

  //! S / I: the elements outside \p ideal in their original order, followed
  //! by a zero (the last index) standing for all of I.
  inline TableSemigroup rees_quotient(TableSemigroup const&             S,
                                      std::vector<std::uint32_t> const& ideal) {
    if (!is_ideal(S, ideal)) {
      throw Error("rees_quotient: subset is not an ideal");
    }
    auto                       in = detail::membership(S, ideal);
    std::vector<std::uint32_t> keep;
    std::vector<std::uint32_t> new_index(S.size(), kNoIndex);
    for (std::uint32_t x = 0; x < S.size(); ++x) {
      if (!in[x]) {
        new_index[x] = static_cast<std::uint32_t>(keep.size());
        keep.push_back(x);
      }
    }
    auto const                 zero = static_cast<std::uint32_t>(keep.size());
    std::size_t const          m    = keep.size() + 1;
    std::vector<std::uint32_t> table(m * m, zero);
    std::vector<bool>          flags(m, false);
    for (std::size_t a = 0; a < keep.size(); ++a) {
      flags[a] = S.nontrivial_permutation_flags()[keep[a]];
      for (std::size_t b = 0; b < keep.size(); ++b) {
        auto p = S.product(keep[a], keep[b]);
        if (!in[p]) {
          table[a * m + b] = new_index[p];
        }
      }
    }
    TableSemigroup Q(m, std::move(table));
    Q.set_nontrivial_permutation_flags(std::move(flags));
    return Q;
  }

}  // namespace diagsemi

#endif  // DIAGSEMI_TABLE_HPP_
