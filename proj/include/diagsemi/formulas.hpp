#ifndef DIAGSEMI_FORMULAS_HPP_
#define DIAGSEMI_FORMULAS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "family.hpp"

namespace diagsemi {

  using BigCount = boost::multiprecision::cpp_int;

  inline BigCount factorial(std::size_t n) {
    BigCount r = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      r *= i;
    }
    return r;
  }

  inline BigCount binomial(std::size_t n, std::size_t k) {
    if (k > n) {
      return 0;
    }
    k          = std::min(k, n - k);
    BigCount r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  //! (2n - 1)!! = 1 * 3 * ... * (2n - 1), with (-1)!! = 1 for n = 0.
  inline BigCount double_factorial_odd(std::size_t n) {
    BigCount r = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      r *= 2 * i - 1;
    }
    return r;
  }

  inline BigCount catalan(std::size_t n) {
    return binomial(2 * n, n) / (n + 1);
  }

  //! Row n of the Stirling numbers of the second kind, S(n, 0..n), from
  //! S(n, k) = k S(n - 1, k) + S(n - 1, k - 1).
  inline std::vector<BigCount> stirling2_row(std::size_t n) {
    std::vector<BigCount> row{1};
    for (std::size_t m = 1; m <= n; ++m) {
      std::vector<BigCount> next(m + 1, 0);
      for (std::size_t k = 1; k <= m; ++k) {
        next[k] = (k < m ? k * row[k] : BigCount(0)) + row[k - 1];
      }
      row = std::move(next);
    }
    return row;
  }

  inline BigCount stirling2(std::size_t n, std::size_t k) {
    if (k > n) {
      throw Error("stirling2(n, k) requires k <= n");
    }
    return stirling2_row(n)[k];
  }

  inline BigCount bell(std::size_t n) {
    BigCount r = 0;
    for (auto const& s : stirling2_row(n)) {
      r += s;
    }
    return r;
  }

  inline BigCount power(std::size_t base, std::size_t exponent) {
    return boost::multiprecision::pow(BigCount(base),
                                      static_cast<unsigned>(exponent));
  }

  //! Closed-form order of the degree-n monoid of family \p f.
  inline BigCount family_order(Family f, std::size_t n) {
    if (n == 0) {
      throw Error("family_order requires n >= 1");
    }
    switch (f) {
      case Family::partitioned_binary_relation:
        return power(2, 4 * n * n);
      case Family::binary_relation:
        return power(2, n * n);
      case Family::partition: {
        // sum_{k=1}^{2n} S(2n, k)
        auto     row = stirling2_row(2 * n);
        BigCount r   = 0;
        for (std::size_t k = 1; k <= 2 * n; ++k) {
          r += row[k];
        }
        return r;
      }
      case Family::partial_transformation:
        return power(n + 1, n);
      case Family::dual_symmetric_inverse: {
        // sum_{k=1}^{n} k! S(n, k)^2
        auto     row = stirling2_row(n);
        BigCount r   = 0;
        for (std::size_t k = 1; k <= n; ++k) {
          r += factorial(k) * row[k] * row[k];
        }
        return r;
      }
      case Family::transformation:
        return power(n, n);
      case Family::partial_permutation: {
        // sum_{k=0}^{n} k! C(n, k)^2
        BigCount r = 0;
        for (std::size_t k = 0; k <= n; ++k) {
          auto c = binomial(n, k);
          r += factorial(k) * c * c;
        }
        return r;
      }
      case Family::brauer:
        return double_factorial_odd(n);
      case Family::symmetric_group:
        return factorial(n);
      case Family::temperley_lieb:
        return catalan(n);
    }
    throw Error("unknown family");
  }

  inline std::string to_string(BigCount const& x) {
    return x.str();
  }

}  // namespace diagsemi

#endif  // DIAGSEMI_FORMULAS_HPP_
