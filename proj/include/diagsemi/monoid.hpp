#ifndef DIAGSEMI_MONOID_HPP_
#define DIAGSEMI_MONOID_HPP_

#include <variant>

#include "catalog.hpp"
#include "enumerate.hpp"

namespace diagsemi {

  //! Enumerates the standard monoid of family \p f and degree \p n and
  //! passes it to \p fn; \p fn must return the same type for every element
  //! type.
  template <typename Fn>
  decltype(auto) with_standard_monoid(Family f, std::size_t n, std::size_t limit,
                                      Fn&& fn) {
    return std::visit(
        [&](auto const& gens) -> decltype(auto) {
          auto S = enumerate(gens.elements, limit);
          return fn(S);
        },
        standard_generators(f, n));
  }

}  // namespace diagsemi

#endif  // DIAGSEMI_MONOID_HPP_
