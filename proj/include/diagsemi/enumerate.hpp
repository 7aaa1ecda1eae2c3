#ifndef DIAGSEMI_ENUMERATE_HPP_
#define DIAGSEMI_ENUMERATE_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "config.hpp"

namespace diagsemi {

  inline constexpr std::uint32_t kNoIndex = std::numeric_limits<std::uint32_t>::max();

  //! A deterministic finite automaton style graph: node v has one edge per
  //! label, stored flat.
  struct ActionGraph {
    std::size_t                nodes      = 0;
    std::size_t                out_degree = 0;
    std::vector<std::uint32_t> targets;

    ActionGraph() = default;
    ActionGraph(std::size_t n, std::size_t k)
        : nodes(n), out_degree(k), targets(n * k, kNoIndex) {}

    std::uint32_t target(std::size_t v, std::size_t label) const {
      return targets[v * out_degree + label];
    }

    void set_target(std::size_t v, std::size_t label, std::uint32_t w) {
      targets[v * out_degree + label] = w;
    }
  };

  //! The closure of a set of generators, enumerated breadth first.
  //!
  //! Elements are stored in the order they are discovered: the generators
  //! first, then x * g for each earlier x and generator g in turn. So each
  //! element carries a shortest word over the generators (its parent's word
  //! followed by one letter) and products can be computed by tracing words
  //! through the right Cayley graph, without multiplying diagrams.
  template <typename Element, typename Hash = std::hash<Element>>
  class EnumeratedSemigroup {
   public:
    using element_type = Element;

    static constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

    explicit EnumeratedSemigroup(std::vector<Element> generators,
                                 std::size_t          limit = kUnlimited)
        : generators_(std::move(generators)) {
      if (generators_.empty()) {
        throw Error("cannot enumerate a semigroup with no generators");
      }
      for (auto const& g : generators_) {
        detail::check_same_degree(generators_[0].degree(), g.degree());
      }
      std::size_t const k = generators_.size();
      for (std::size_t g = 0; g < k; ++g) {
        auto [it, inserted] = index_.try_emplace(
            generators_[g], static_cast<std::uint32_t>(elements_.size()));
        if (inserted) {
          push(generators_[g], kNoIndex, static_cast<std::uint32_t>(g), limit);
        }
        generator_index_.push_back(it->second);
      }

      std::vector<std::uint32_t> right;
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        for (std::size_t g = 0; g < k; ++g) {
          Element y = elements_[i] * generators_[g];
          auto [it, inserted]
              = index_.try_emplace(y, static_cast<std::uint32_t>(elements_.size()));
          if (inserted) {
            push(std::move(y), static_cast<std::uint32_t>(i),
                 static_cast<std::uint32_t>(g), limit);
          }
          right.push_back(it->second);
        }
      }
      right_.nodes      = elements_.size();
      right_.out_degree = k;
      right_.targets    = std::move(right);

      // g * x = (g * parent(x)) * letter(x)
      left_ = ActionGraph(elements_.size(), k);
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        for (std::size_t g = 0; g < k; ++g) {
          std::uint32_t v;
          if (parent_[i] == kNoIndex) {
            v = right_.target(generator_index_[g], letter_[i]);
          } else {
            v = right_.target(left_.target(parent_[i], g), letter_[i]);
          }
          left_.set_target(i, g, v);
        }
      }

      for (std::size_t i = 0; i < elements_.size() && !identity_; ++i) {
        bool is_identity = true;
        for (std::size_t g = 0; g < k && is_identity; ++g) {
          is_identity = right_.target(i, g) == generator_index_[g]
                        && left_.target(i, g) == generator_index_[g];
        }
        if (is_identity) {
          identity_ = static_cast<std::uint32_t>(i);
        }
      }
    }

    std::size_t size() const noexcept {
      return elements_.size();
    }

    std::size_t degree() const noexcept {
      return generators_[0].degree();
    }

    Element const& at(std::size_t i) const {
      return elements_.at(i);
    }

    std::vector<Element> const& elements() const noexcept {
      return elements_;
    }

    std::vector<Element> const& generators() const noexcept {
      return generators_;
    }

    std::size_t number_of_generators() const noexcept {
      return generators_.size();
    }

    std::uint32_t generator_index(std::size_t g) const {
      return generator_index_.at(g);
    }

    std::optional<std::uint32_t> index_of(Element const& x) const {
      auto it = index_.find(x);
      if (it == index_.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    bool contains(Element const& x) const {
      return index_.count(x) != 0;
    }

    ActionGraph const& right_cayley_graph() const noexcept {
      return right_;
    }

    ActionGraph const& left_cayley_graph() const noexcept {
      return left_;
    }

    //! Index of a two-sided identity, if the semigroup has one.
    std::optional<std::uint32_t> identity_index() const noexcept {
      return identity_;
    }

    //! Shortest word (generator indices) for element \p i.
    std::vector<std::uint32_t> word(std::size_t i) const {
      std::vector<std::uint32_t> w;
      for (auto v = static_cast<std::uint32_t>(i); v != kNoIndex; v = parent_[v]) {
        w.push_back(letter_[v]);
      }
      return {w.rbegin(), w.rend()};
    }

    std::uint32_t parent(std::size_t i) const {
      return parent_[i];
    }

    std::uint32_t last_letter(std::size_t i) const {
      return letter_[i];
    }

    //! Index of elements[i] * elements[j].
    std::uint32_t product_index(std::size_t i, std::size_t j) const {
      auto v = static_cast<std::uint32_t>(i);
      for (auto letter : word(j)) {
        v = right_.target(v, letter);
      }
      return v;
    }

    bool is_idempotent(std::size_t i) const {
      return product_index(i, i) == i;
    }

    std::vector<std::uint32_t> idempotents() const {
      std::vector<std::uint32_t> result;
      for (std::size_t i = 0; i < size(); ++i) {
        if (is_idempotent(i)) {
          result.push_back(static_cast<std::uint32_t>(i));
        }
      }
      return result;
    }

    //! Full |S| x |S| product table, row-major.
    std::vector<std::uint32_t> multiplication_table() const {
      std::size_t const          n = size();
      std::vector<std::uint32_t> table(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        std::uint32_t* row = table.data() + x * n;
        for (std::size_t y = 0; y < n; ++y) {
          row[y] = parent_[y] == kNoIndex
                       ? right_.target(x, letter_[y])
                       : right_.target(row[parent_[y]], letter_[y]);
        }
      }
      return table;
    }

   private:
    void push(Element x, std::uint32_t parent, std::uint32_t letter,
              std::size_t limit) {
      if (elements_.size() >= limit) {
        throw LimitExceeded("enumeration exceeded the limit of "
                            + std::to_string(limit) + " elements");
      }
      elements_.push_back(std::move(x));
      parent_.push_back(parent);
      letter_.push_back(letter);
    }

    std::vector<Element>                              generators_;
    std::vector<Element>                              elements_;
    std::unordered_map<Element, std::uint32_t, Hash> index_;
    std::vector<std::uint32_t>                        generator_index_;
    std::vector<std::uint32_t>                        parent_;
    std::vector<std::uint32_t>                        letter_;
    ActionGraph                                       right_;
    ActionGraph                                       left_;
    std::optional<std::uint32_t>                      identity_;
  };

  template <typename Element>
  EnumeratedSemigroup<Element> enumerate(std::vector<Element> generators,
                                         std::size_t          limit
                                         = EnumeratedSemigroup<Element>::kUnlimited) {
    return EnumeratedSemigroup<Element>(std::move(generators), limit);
  }

}  // namespace diagsemi

#endif  // DIAGSEMI_ENUMERATE_HPP_
