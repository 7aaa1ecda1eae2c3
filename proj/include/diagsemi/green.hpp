#ifndef DIAGSEMI_GREEN_HPP_
#define DIAGSEMI_GREEN_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bipartition.hpp"
#include "enumerate.hpp"

namespace diagsemi {

  namespace detail {
    // Iterative Tarjan. Returns the component of each node; components are
    // numbered in the order Tarjan closes them (sinks first).
    template <typename Neighbour>
    std::vector<std::uint32_t> strongly_connected_components(
        std::size_t nodes, std::size_t out_degree, Neighbour&& neighbour,
        std::size_t& number_of_components) {
      constexpr auto             unset = kNoIndex;
      std::vector<std::uint32_t> index(nodes, unset), low(nodes, 0),
          comp(nodes, unset);
      std::vector<std::uint32_t> stack;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> call;  // node, next edge
      std::uint32_t counter = 0;
      number_of_components  = 0;

      for (std::uint32_t root = 0; root < nodes; ++root) {
        if (index[root] != unset) {
          continue;
        }
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        while (!call.empty()) {
          auto& [v, e] = call.back();
          if (e < out_degree) {
            std::uint32_t w = neighbour(v, e++);
            if (index[w] == unset) {
              index[w] = low[w] = counter++;
              stack.push_back(w);
              call.emplace_back(w, 0);
            } else if (comp[w] == unset) {
              low[v] = std::min(low[v], index[w]);
            }
            continue;
          }
          std::uint32_t done = v;
          call.pop_back();
          if (low[done] == index[done]) {
            std::uint32_t w;
            do {
              w = stack.back();
              stack.pop_back();
              comp[w] = static_cast<std::uint32_t>(number_of_components);
            } while (w != done);
            ++number_of_components;
          }
          if (!call.empty()) {
            auto parent = call.back().first;
            low[parent] = std::min(low[parent], low[done]);
          }
        }
      }
      return comp;
    }

    // Renumber class ids by first occurrence over element indices.
    inline std::size_t normalise_classes(std::vector<std::uint32_t>& ids) {
      std::vector<std::uint32_t> map;
      std::uint32_t              next = 0;
      for (auto& id : ids) {
        if (id >= map.size()) {
          map.resize(id + 1, kNoIndex);
        }
        if (map[id] == kNoIndex) {
          map[id] = next++;
        }
        id = map[id];
      }
      return next;
    }
  }  // namespace detail

  //! One D-class drawn as a grid: rows are R-classes, columns L-classes,
  //! both ordered by their first element in enumeration order.
  struct Eggbox {
    std::size_t                             rows = 0;
    std::size_t                             cols = 0;
    std::vector<std::vector<std::uint32_t>> cells;  // row-major H-classes
    std::vector<bool>                       idempotent;

    std::vector<std::uint32_t> const& cell(std::size_t r, std::size_t c) const {
      return cells[r * cols + c];
    }

    bool has_idempotent(std::size_t r, std::size_t c) const {
      return idempotent[r * cols + c];
    }

    std::size_t number_of_idempotent_cells() const {
      return static_cast<std::size_t>(
          std::count(idempotent.begin(), idempotent.end(), true));
    }

    //! Plain PGM (P2), one pixel per H-class, black where the H-class holds
    //! an idempotent.
    void write_pgm(std::ostream& os, std::string_view comment = {}) const {
      os << "P2\n";
      if (!comment.empty()) {
        os << "# " << comment << "\n";
      }
      os << cols << " " << rows << "\n1\n";
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          os << (c ? " " : "") << (has_idempotent(r, c) ? 0 : 1);
        }
        os << "\n";
      }
    }
  };

  //! Green's R-, L-, D- and H-classes of an enumerated semigroup, with the
  //! D-classes ordered top down: a topological order of the two-sided ideal
  //! order, ties broken by smallest element index. So the class of the
  //! identity, when present, is D-class 0.
  class GreenStructure {
   public:
    GreenStructure() = default;

    GreenStructure(ActionGraph const& right, ActionGraph const& left,
                   std::vector<bool> idempotent)
        : idempotent_(std::move(idempotent)) {
      std::size_t const n = right.nodes;
      if (left.nodes != n || idempotent_.size() != n) {
        throw Error("Cayley graphs and idempotent flags disagree on size");
      }
      std::size_t nr = 0, nl = 0, nj = 0;
      r_ = detail::strongly_connected_components(
          n, right.out_degree,
          [&](std::uint32_t v, std::uint32_t e) { return right.target(v, e); },
          nr);
      l_ = detail::strongly_connected_components(
          n, left.out_degree,
          [&](std::uint32_t v, std::uint32_t e) { return left.target(v, e); },
          nl);
      std::size_t const k = right.out_degree;
      j_                  = detail::strongly_connected_components(
          n, k + left.out_degree,
          [&](std::uint32_t v, std::uint32_t e) {
            return e < k ? right.target(v, e) : left.target(v, e - k);
          },
          nj);
      number_of_r_ = detail::normalise_classes(r_);
      number_of_l_ = detail::normalise_classes(l_);

      // D is the join of R and L
      detail::UnionFind uf(n);
      {
        std::vector<std::uint32_t> first_r(number_of_r_, kNoIndex),
            first_l(number_of_l_, kNoIndex);
        for (std::uint32_t x = 0; x < n; ++x) {
          if (first_r[r_[x]] == kNoIndex) {
            first_r[r_[x]] = x;
          } else {
            uf.unite(first_r[r_[x]], x);
          }
          if (first_l[l_[x]] == kNoIndex) {
            first_l[l_[x]] = x;
          } else {
            uf.unite(first_l[l_[x]], x);
          }
        }
      }
      std::vector<std::uint32_t> d(n);
      for (std::uint32_t x = 0; x < n; ++x) {
        d[x] = uf.find(x);
      }
      std::size_t const nd = detail::normalise_classes(d);
      number_of_j_         = detail::normalise_classes(j_);

      // condensation of the two-sided Cayley graph on D-classes
      std::vector<std::vector<std::uint32_t>> below(nd);
      std::vector<std::uint32_t>              indegree(nd, 0);
      for (std::uint32_t x = 0; x < n; ++x) {
        for (std::size_t e = 0; e < k + left.out_degree; ++e) {
          std::uint32_t y = e < k ? right.target(x, e) : left.target(x, e - k);
          if (d[x] != d[y]) {
            below[d[x]].push_back(d[y]);
          }
        }
      }
      for (auto& b : below) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        for (auto c : b) {
          ++indegree[c];
        }
      }
      // class ids are already ordered by first element, so a min-heap on id
      // breaks ties by smallest element
      std::priority_queue<std::uint32_t, std::vector<std::uint32_t>,
                          std::greater<>>
                                 ready;
      std::vector<std::uint32_t> order_of(nd, kNoIndex);
      for (std::uint32_t c = 0; c < nd; ++c) {
        if (indegree[c] == 0) {
          ready.push(c);
        }
      }
      std::uint32_t next = 0;
      while (!ready.empty()) {
        auto c = ready.top();
        ready.pop();
        order_of[c] = next++;
        for (auto b : below[c]) {
          if (--indegree[b] == 0) {
            ready.push(b);
          }
        }
      }
      if (next != nd) {
        throw Error("D-class order is not acyclic; D and J differ");
      }
      d_.resize(n);
      for (std::uint32_t x = 0; x < n; ++x) {
        d_[x] = order_of[d[x]];
      }
      number_of_d_ = nd;

      // reachability on D-classes, processed bottom up
      std::size_t const words = (nd + 63) / 64;
      reach_.assign(nd, std::vector<std::uint64_t>(words, 0));
      std::vector<std::vector<std::uint32_t>> below_new(nd);
      for (std::uint32_t c = 0; c < nd; ++c) {
        for (auto b : below[c]) {
          below_new[order_of[c]].push_back(order_of[b]);
        }
      }
      for (std::size_t c = nd; c-- > 0;) {
        reach_[c][c / 64] |= std::uint64_t(1) << (c % 64);
        for (auto b : below_new[c]) {
          for (std::size_t w = 0; w < words; ++w) {
            reach_[c][w] |= reach_[b][w];
          }
        }
      }

      members_.assign(nd, {});
      for (std::uint32_t x = 0; x < n; ++x) {
        members_[d_[x]].push_back(x);
      }
    }

    std::size_t size() const noexcept {
      return d_.size();
    }

    std::uint32_t r_class(std::size_t x) const {
      return r_[x];
    }
    std::uint32_t l_class(std::size_t x) const {
      return l_[x];
    }
    std::uint32_t d_class(std::size_t x) const {
      return d_[x];
    }
    //! J-class ids computed independently, as strongly connected components
    //! of the two-sided Cayley graph.
    std::uint32_t j_class(std::size_t x) const {
      return j_[x];
    }

    std::vector<std::uint32_t> const& r_classes() const noexcept {
      return r_;
    }
    std::vector<std::uint32_t> const& l_classes() const noexcept {
      return l_;
    }
    std::vector<std::uint32_t> const& d_classes() const noexcept {
      return d_;
    }
    std::vector<std::uint32_t> const& j_classes() const noexcept {
      return j_;
    }

    std::size_t number_of_r_classes() const noexcept {
      return number_of_r_;
    }
    std::size_t number_of_l_classes() const noexcept {
      return number_of_l_;
    }
    std::size_t number_of_d_classes() const noexcept {
      return number_of_d_;
    }
    std::size_t number_of_j_classes() const noexcept {
      return number_of_j_;
    }

    bool is_idempotent(std::size_t x) const {
      return idempotent_[x];
    }

    std::size_t number_of_idempotents() const {
      return static_cast<std::size_t>(
          std::count(idempotent_.begin(), idempotent_.end(), true));
    }

    //! Elements of D-class \p d in enumeration order.
    std::vector<std::uint32_t> const& d_class_elements(std::size_t d) const {
      check_d(d);
      return members_[d];
    }

    std::size_t number_of_idempotents(std::size_t d) const {
      check_d(d);
      return static_cast<std::size_t>(
          std::count_if(members_[d].begin(), members_[d].end(),
                        [this](auto x) { return idempotent_[x]; }));
    }

    //! Whether D-class \p a lies in the ideal generated by D-class \p b.
    bool d_leq(std::size_t a, std::size_t b) const {
      check_d(a);
      check_d(b);
      return (reach_[b][a / 64] >> (a % 64)) & 1;
    }

    //! Every pair of D-classes is comparable.
    bool is_d_order_linear() const {
      for (std::size_t a = 0; a < number_of_d_; ++a) {
        for (std::size_t b = a + 1; b < number_of_d_; ++b) {
          if (!d_leq(a, b) && !d_leq(b, a)) {
            return false;
          }
        }
      }
      return true;
    }

    //! Whether the D-partition and the J-partition coincide.
    bool d_equals_j() const {
      std::vector<std::uint32_t> d_of_j(number_of_j_, kNoIndex);
      if (number_of_j_ != number_of_d_) {
        return false;
      }
      for (std::size_t x = 0; x < d_.size(); ++x) {
        if (d_of_j[j_[x]] == kNoIndex) {
          d_of_j[j_[x]] = d_[x];
        } else if (d_of_j[j_[x]] != d_[x]) {
          return false;
        }
      }
      return true;
    }

    Eggbox eggbox(std::size_t d) const {
      check_d(d);
      std::vector<std::uint32_t> row_of(number_of_r_, kNoIndex),
          col_of(number_of_l_, kNoIndex);
      Eggbox box;
      for (auto x : members_[d]) {
        if (row_of[r_[x]] == kNoIndex) {
          row_of[r_[x]] = static_cast<std::uint32_t>(box.rows++);
        }
        if (col_of[l_[x]] == kNoIndex) {
          col_of[l_[x]] = static_cast<std::uint32_t>(box.cols++);
        }
      }
      box.cells.assign(box.rows * box.cols, {});
      box.idempotent.assign(box.rows * box.cols, false);
      for (auto x : members_[d]) {
        std::size_t c = row_of[r_[x]] * box.cols + col_of[l_[x]];
        box.cells[c].push_back(x);
        if (idempotent_[x]) {
          box.idempotent[c] = true;
        }
      }
      return box;
    }

   private:
    void check_d(std::size_t d) const {
      if (d >= number_of_d_) {
        throw Error("D-class index " + std::to_string(d) + " out of range [0, "
                    + std::to_string(number_of_d_) + ")");
      }
    }

    std::vector<bool>                       idempotent_;
    std::vector<std::uint32_t>              r_, l_, d_, j_;
    std::size_t                             number_of_r_ = 0;
    std::size_t                             number_of_l_ = 0;
    std::size_t                             number_of_d_ = 0;
    std::size_t                             number_of_j_ = 0;
    std::vector<std::vector<std::uint64_t>> reach_;
    std::vector<std::vector<std::uint32_t>> members_;
  };

  template <typename Element, typename Hash>
  GreenStructure green_structure(EnumeratedSemigroup<Element, Hash> const& S) {
    std::vector<bool> idempotent(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
      idempotent[i] = S.is_idempotent(i);
    }
    return GreenStructure(S.right_cayley_graph(), S.left_cayley_graph(),
                          std::move(idempotent));
  }

  inline nlohmann::json to_json(GreenStructure const& g) {
    nlohmann::json classes = nlohmann::json::array();
    for (std::size_t d = 0; d < g.number_of_d_classes(); ++d) {
      auto box = g.eggbox(d);
      classes.push_back({{"index", d},
                         {"size", g.d_class_elements(d).size()},
                         {"rows", box.rows},
                         {"cols", box.cols},
                         {"idempotents", g.number_of_idempotents(d)}});
    }
    return {{"size", g.size()},
            {"r_class", g.r_classes()},
            {"l_class", g.l_classes()},
            {"d_class", g.d_classes()},
            {"d_classes", classes},
            {"d_order_linear", g.is_d_order_linear()}};
  }

}  // namespace diagsemi

#endif  // DIAGSEMI_GREEN_HPP_
