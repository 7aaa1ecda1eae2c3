#ifndef DIAGSEMI_CONFIG_HPP_
#define DIAGSEMI_CONFIG_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

#ifndef DIAGSEMI_MAX_DEGREE
#define DIAGSEMI_MAX_DEGREE 32
#endif

namespace diagsemi {

  // A PBR row holds 2n bits in one machine word.
  inline constexpr std::size_t kMaxDegree = DIAGSEMI_MAX_DEGREE;
  static_assert(kMaxDegree >= 1 && kMaxDegree <= 32,
                "DIAGSEMI_MAX_DEGREE must lie in [1, 32]");

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised when an enumeration or census would exceed its configured bound.
  class LimitExceeded : public Error {
   public:
    using Error::Error;
  };

  namespace detail {
    inline void check_degree(std::size_t n) {
      if (n == 0 || n > kMaxDegree) {
        throw Error("degree " + std::to_string(n) + " outside [1, "
                    + std::to_string(kMaxDegree) + "]");
      }
    }

    inline void check_same_degree(std::size_t a, std::size_t b) {
      if (a != b) {
        throw Error("degree mismatch: " + std::to_string(a) + " vs "
                    + std::to_string(b));
      }
    }

    // boost-style hash mixing
    inline std::size_t hash_combine(std::size_t seed, std::size_t v) noexcept {
      return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    }
  }  // namespace detail
}  // namespace diagsemi

#endif  // DIAGSEMI_CONFIG_HPP_
