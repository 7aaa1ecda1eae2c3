#ifndef DIAGSEMI_CENSUS_HPP_
#define DIAGSEMI_CENSUS_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bipartition.hpp"
#include "enumerate.hpp"
#include "point_permutation.hpp"
#include "table.hpp"

namespace diagsemi {

  //! Capacity of an ElementMask; ambient semigroups of a census are limited
  //! to this many elements.
  inline constexpr std::size_t kMaxCensusElements = 256;

  //! Default feasibility bound for a census ambient.
  inline constexpr std::size_t kDefaultCensusBound = 128;

  //! Subset of the elements of an ambient semigroup; bit i is element i.
  //! Masks are ordered as the integers they encode.
  class ElementMask {
   public:
    static constexpr std::size_t kWords = kMaxCensusElements / 64;

    constexpr ElementMask() = default;

    void set(std::size_t i) noexcept {
      words_[i / 64] |= std::uint64_t(1) << (i % 64);
    }

    void reset(std::size_t i) noexcept {
      words_[i / 64] &= ~(std::uint64_t(1) << (i % 64));
    }

    bool test(std::size_t i) const noexcept {
      return (words_[i / 64] >> (i % 64)) & 1;
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : words_) {
        c += std::popcount(w);
      }
      return c;
    }

    bool empty() const noexcept {
      for (auto w : words_) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    //! Indices of set bits, ascending.
    void indices(std::vector<std::uint32_t>& out) const {
      out.clear();
      for (std::size_t k = 0; k < kWords; ++k) {
        for (std::uint64_t w = words_[k]; w != 0; w &= w - 1) {
          out.push_back(static_cast<std::uint32_t>(64 * k + std::countr_zero(w)));
        }
      }
    }

    std::vector<std::uint32_t> indices() const {
      std::vector<std::uint32_t> out;
      indices(out);
      return out;
    }

    static ElementMask from_indices(std::vector<std::uint32_t> const& xs) {
      ElementMask m;
      for (auto x : xs) {
        m.set(x);
      }
      return m;
    }

    //! The first \p n bits set.
    static ElementMask full(std::size_t n) {
      ElementMask m;
      for (std::size_t i = 0; i < n; ++i) {
        m.set(i);
      }
      return m;
    }

    ElementMask operator&(ElementMask const& o) const noexcept {
      ElementMask r;
      for (std::size_t k = 0; k < kWords; ++k) {
        r.words_[k] = words_[k] & o.words_[k];
      }
      return r;
    }

    ElementMask operator|(ElementMask const& o) const noexcept {
      ElementMask r;
      for (std::size_t k = 0; k < kWords; ++k) {
        r.words_[k] = words_[k] | o.words_[k];
      }
      return r;
    }

    //! this minus \p o
    ElementMask minus(ElementMask const& o) const noexcept {
      ElementMask r;
      for (std::size_t k = 0; k < kWords; ++k) {
        r.words_[k] = words_[k] & ~o.words_[k];
      }
      return r;
    }

    //! Fixed-width big-endian hex of the encoded integer, ceil(n / 4) digits.
    std::string to_hex(std::size_t n) const {
      static constexpr char digits[] = "0123456789abcdef";
      std::size_t const     width    = std::max<std::size_t>(1, (n + 3) / 4);
      std::string           s(width, '0');
      for (std::size_t d = 0; d < width; ++d) {
        std::size_t bit    = 4 * d;
        unsigned    nibble = static_cast<unsigned>(
            (words_[bit / 64] >> (bit % 64)) & 0xF);
        s[width - 1 - d] = digits[nibble];
      }
      return s;
    }

    std::array<std::uint64_t, kWords> const& words() const noexcept {
      return words_;
    }

    friend bool operator==(ElementMask const&, ElementMask const&) = default;

    friend std::strong_ordering operator<=>(ElementMask const& a,
                                            ElementMask const& b) {
      for (std::size_t k = kWords; k-- > 0;) {
        if (auto c = a.words_[k] <=> b.words_[k]; c != 0) {
          return c;
        }
      }
      return std::strong_ordering::equal;
    }

   private:
    std::array<std::uint64_t, kWords> words_{};
  };

  struct ElementMaskHash {
    std::size_t operator()(ElementMask const& m) const noexcept {
      std::size_t seed = 0;
      for (auto w : m.words()) {
        seed = detail::hash_combine(seed, std::hash<std::uint64_t>{}(w));
      }
      return seed;
    }
  };

  //! Point permutations preserving an ambient semigroup, each with the
  //! permutation it induces on element indices.
  struct SymmetryGroup {
    std::vector<PointPermutation>           permutations;
    std::vector<std::vector<std::uint32_t>> actions;

    std::size_t size() const noexcept {
      return actions.size();
    }

    //! The group {id} acting on \p elements elements.
    static SymmetryGroup trivial(std::size_t elements, std::size_t degree = 1) {
      std::vector<std::uint32_t> id(elements);
      for (std::size_t i = 0; i < elements; ++i) {
        id[i] = static_cast<std::uint32_t>(i);
      }
      return {{PointPermutation::identity(degree)}, {std::move(id)}};
    }
  };

  inline constexpr std::size_t kDefaultSymmetryDegreeBound = 8;

  //! { sigma in S_n : conjugation by sigma maps S onto S }. Since
  //! conjugation is an automorphism of the full diagram monoid, sigma
  //! preserves S iff it maps each generator into S.
  template <typename Element, typename Hash>
  SymmetryGroup symmetry_group(EnumeratedSemigroup<Element, Hash> const& S,
                               std::size_t max_degree
                               = kDefaultSymmetryDegreeBound) {
    std::size_t const n = S.degree();
    if (n > max_degree) {
      throw LimitExceeded("symmetry group filtering needs degree <= "
                          + std::to_string(max_degree));
    }
    SymmetryGroup G;
    for (auto const& sigma : all_point_permutations(n)) {
      bool preserves = true;
      for (auto const& g : S.generators()) {
        if (!S.contains(conjugate(g, sigma))) {
          preserves = false;
          break;
        }
      }
      if (!preserves) {
        continue;
      }
      std::vector<std::uint32_t> action(S.size());
      for (std::size_t i = 0; i < S.size(); ++i) {
        action[i] = *S.index_of(conjugate(S.at(i), sigma));
      }
      G.permutations.push_back(sigma);
      G.actions.push_back(std::move(action));
    }
    return G;
  }

  //! Image of \p m under an element-index permutation.
  inline ElementMask apply(std::vector<std::uint32_t> const& action,
                           ElementMask const&                m) {
    ElementMask r;
    for (std::size_t k = 0; k < ElementMask::kWords; ++k) {
      for (std::uint64_t w = m.words()[k]; w != 0; w &= w - 1) {
        r.set(action[64 * k + std::countr_zero(w)]);
      }
    }
    return r;
  }

  inline bool is_identity_action(std::vector<std::uint32_t> const& action) {
    for (std::size_t i = 0; i < action.size(); ++i) {
      if (action[i] != i) {
        return false;
      }
    }
    return true;
  }

  //! Least element of the G-orbit of \p m.
  inline ElementMask minimal_image(SymmetryGroup const& G, ElementMask const& m) {
    ElementMask best = m;
    for (auto const& a : G.actions) {
      if (is_identity_action(a)) {
        continue;
      }
      auto img = apply(a, m);
      if (img < best) {
        best = img;
      }
    }
    return best;
  }

  inline std::uint64_t orbit_size(SymmetryGroup const& G, ElementMask const& m) {
    std::vector<ElementMask> images;
    images.reserve(G.size());
    for (auto const& a : G.actions) {
      images.push_back(apply(a, m));
    }
    std::sort(images.begin(), images.end());
    return static_cast<std::uint64_t>(
        std::unique(images.begin(), images.end()) - images.begin());
  }

  //! Smallest subset containing \p closed and \p x that is closed under
  //! products, where products landing in \p drop are discarded (so with
  //! drop = I this is closure in the Rees quotient S / I). \p closed must
  //! already be closed in the same sense.
  inline ElementMask close_with(TableSemigroup const&       S,
                                ElementMask                 closed,
                                std::uint32_t               x,
                                ElementMask const&          drop,
                                std::vector<std::uint32_t>& scratch) {
    if (closed.test(x)) {
      return closed;
    }
    closed.indices(scratch);
    std::size_t const first_new = scratch.size();
    closed.set(x);
    scratch.push_back(x);
    for (std::size_t i = first_new; i < scratch.size(); ++i) {
      std::uint32_t const        y   = scratch[i];
      std::uint32_t const* const row = S.row(y);
      for (std::size_t j = 0; j <= i; ++j) {
        std::uint32_t const z = scratch[j];
        std::uint32_t const p = row[z];
        if (!closed.test(p) && !drop.test(p)) {
          closed.set(p);
          scratch.push_back(p);
        }
        std::uint32_t const q = S.product(z, y);
        if (!closed.test(q) && !drop.test(q)) {
          closed.set(q);
          scratch.push_back(q);
        }
      }
    }
    return closed;
  }

  inline ElementMask close_with(TableSemigroup const& S, ElementMask closed,
                                std::uint32_t x, ElementMask const& drop = {}) {
    std::vector<std::uint32_t> scratch;
    return close_with(S, closed, x, drop, scratch);
  }

  //! Subsemigroup generated by \p xs (empty for no generators).
  inline ElementMask closure(TableSemigroup const&             S,
                             std::vector<std::uint32_t> const& xs) {
    ElementMask m;
    for (auto x : xs) {
      m = close_with(S, m, x);
    }
    return m;
  }

  inline bool is_closed(TableSemigroup const& S, ElementMask const& m) {
    auto xs = m.indices();
    for (auto x : xs) {
      for (auto y : xs) {
        if (!m.test(S.product(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  struct CensusOptions {
    unsigned    jobs         = 1;
    bool        stats        = false;
    std::size_t max_elements = kDefaultCensusBound;
  };

  namespace detail {
    inline void check_census_bound(TableSemigroup const& S,
                                   CensusOptions const&  opts) {
      std::size_t bound = std::min(opts.max_elements, kMaxCensusElements);
      if (S.size() > bound) {
        throw LimitExceeded("census ambient has " + std::to_string(S.size())
                            + " elements, bound is " + std::to_string(bound));
      }
    }

    // Runs body(i) for i in [0, n) on up to jobs threads.
    template <typename Body>
    void parallel_for(std::size_t n, unsigned jobs, Body&& body) {
      if (jobs <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) {
          body(i);
        }
        return;
      }
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      unsigned const           workers
          = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
      for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < n; i = next++) {
            body(i);
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    // All sets T >= seed, T - seed within allowed, closed modulo drop, up to
    // the action of G; one G-minimal representative each, in discovery
    // order. Level-synchronous: each round expands the previous round's new
    // representatives (in parallel) and merges the children serially in
    // order, so the result does not depend on the number of jobs.
    inline std::vector<ElementMask> orbit_search(TableSemigroup const& S,
                                                 SymmetryGroup const&  G,
                                                 ElementMask const&    seed,
                                                 ElementMask const&    allowed,
                                                 ElementMask const&    drop,
                                                 unsigned              jobs) {
      std::unordered_set<ElementMask, ElementMaskHash> visited;
      std::vector<ElementMask>                         found;
      ElementMask const start = minimal_image(G, seed);
      visited.insert(start);
      found.push_back(start);
      std::vector<ElementMask> frontier{start};
      std::vector<std::uint32_t> const candidates = allowed.indices();

      while (!frontier.empty()) {
        std::vector<std::vector<ElementMask>> children(frontier.size());
        parallel_for(frontier.size(), jobs, [&](std::size_t i) {
          std::vector<std::uint32_t> scratch;
          std::vector<ElementMask>&  out = children[i];
          ElementMask const&         R   = frontier[i];
          for (auto x : candidates) {
            if (R.test(x)) {
              continue;
            }
            out.push_back(minimal_image(G, close_with(S, R, x, drop, scratch)));
          }
          std::sort(out.begin(), out.end());
          out.erase(std::unique(out.begin(), out.end()), out.end());
        });
        std::vector<ElementMask> next;
        for (auto const& kids : children) {
          for (auto const& c : kids) {
            if (visited.insert(c).second) {
              found.push_back(c);
              next.push_back(c);
            }
          }
        }
        frontier = std::move(next);
      }
      return found;
    }
  }  // namespace detail

  struct CensusRecord {
    ElementMask   representative;
    std::uint64_t orbit_size          = 1;
    std::size_t   size                = 0;
    std::size_t   d_classes           = 0;
    std::size_t   idempotents         = 0;
    bool          has_nontrivial_perm = false;
    bool          has_stats           = false;
  };

  struct CensusResult {
    std::size_t               ambient_size = 0;
    std::vector<CensusRecord> records;  // ordered by representative
    std::uint64_t             total = 0;  // sum of orbit sizes

    std::size_t classes() const noexcept {
      return records.size();
    }
  };

  //! Number of D-classes of the subsemigroup \p m of \p S. x R y iff
  //! x T^1 = y T^1 and dually for L; D is the join of R and L.
  inline std::size_t number_of_d_classes(TableSemigroup const& S,
                                         ElementMask const&    m) {
    auto const        xs = m.indices();
    std::size_t const k  = xs.size();
    if (k == 0) {
      return 0;
    }
    std::unordered_map<ElementMask, std::uint32_t, ElementMaskHash> r_id, l_id;
    detail::UnionFind uf(k);
    for (std::size_t i = 0; i < k; ++i) {
      ElementMask right, left;
      right.set(xs[i]);
      left.set(xs[i]);
      for (auto t : xs) {
        right.set(S.product(xs[i], t));
        left.set(S.product(t, xs[i]));
      }
      auto [ri, rnew] = r_id.try_emplace(right, static_cast<std::uint32_t>(i));
      if (!rnew) {
        uf.unite(ri->second, static_cast<std::uint32_t>(i));
      }
      auto [li, lnew] = l_id.try_emplace(left, static_cast<std::uint32_t>(i));
      if (!lnew) {
        uf.unite(li->second, static_cast<std::uint32_t>(i));
      }
    }
    std::size_t roots = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      roots += uf.find(i) == i;
    }
    return roots;
  }

  inline void fill_stats(TableSemigroup const& S, CensusRecord& r) {
    auto const xs = r.representative.indices();
    r.size        = xs.size();
    r.d_classes   = number_of_d_classes(S, r.representative);
    r.idempotents = static_cast<std::size_t>(std::count_if(
        xs.begin(), xs.end(), [&](auto x) { return S.is_idempotent(x); }));
    auto const& perm      = S.nontrivial_permutation_flags();
    r.has_nontrivial_perm = std::any_of(xs.begin(), xs.end(),
                                        [&](auto x) { return perm[x]; });
    r.has_stats = true;
  }

  //! One record per G-orbit of subsemigroups of \p S (the empty set
  //! included), each represented by its minimal image.
  inline CensusResult census_up_to_conjugacy(TableSemigroup const& S,
                                             SymmetryGroup const&  G,
                                             CensusOptions const&  opts = {}) {
    detail::check_census_bound(S, opts);
    for (auto const& a : G.actions) {
      if (a.size() != S.size()) {
        throw Error("symmetry group acts on a different number of elements");
      }
    }
    auto reps = detail::orbit_search(S, G, ElementMask{},
                                     ElementMask::full(S.size()),
                                     ElementMask{}, opts.jobs);
    std::sort(reps.begin(), reps.end());
    CensusResult result;
    result.ambient_size = S.size();
    result.records.resize(reps.size());
    detail::parallel_for(reps.size(), opts.jobs, [&](std::size_t i) {
      CensusRecord& r  = result.records[i];
      r.representative = reps[i];
      r.size           = reps[i].count();
      r.orbit_size     = orbit_size(G, reps[i]);
      if (opts.stats) {
        fill_stats(S, r);
      }
    });
    for (auto const& r : result.records) {
      result.total += r.orbit_size;
    }
    return result;
  }

  //! Every subsemigroup (empty set included), one record each.
  inline CensusResult all_subsemigroups(TableSemigroup const& S,
                                        CensusOptions const&  opts = {}) {
    return census_up_to_conjugacy(S, SymmetryGroup::trivial(S.size()), opts);
  }

  inline std::uint64_t count_subsemigroups(TableSemigroup const& S,
                                           CensusOptions const&  opts = {}) {
    detail::check_census_bound(S, opts);
    return detail::orbit_search(S, SymmetryGroup::trivial(S.size()),
                                ElementMask{}, ElementMask::full(S.size()),
                                ElementMask{}, opts.jobs)
        .size();
  }

  //! Calls \p f on every subsemigroup in discovery order, single threaded.
  template <typename Callback>
  void for_each_subsemigroup(TableSemigroup const& S, Callback&& f,
                             CensusOptions const& opts = {}) {
    detail::check_census_bound(S, opts);
    auto all = detail::orbit_search(S, SymmetryGroup::trivial(S.size()),
                                    ElementMask{}, ElementMask::full(S.size()),
                                    ElementMask{}, 1);
    for (auto const& m : all) {
      f(m);
    }
  }

  //! Counts subsemigroups by splitting along an ideal I. A subsemigroup T
  //! either lies in I, or T - I is a nonempty subsemigroup Q of the Rees
  //! quotient S / I; in the latter case T is a closed extension of the
  //! closure of Q by elements of I only (no product involving I leaves I).
  inline std::uint64_t count_subsemigroups_split(
      TableSemigroup const&             S,
      std::vector<std::uint32_t> const& ideal,
      CensusOptions const&              opts = {}) {
    detail::check_census_bound(S, opts);
    if (!is_ideal(S, ideal)) {
      throw Error("count_subsemigroups_split: subset is not an ideal");
    }
    auto const        trivial = SymmetryGroup::trivial(S.size());
    ElementMask const inside  = ElementMask::from_indices(ideal);
    ElementMask const outside = ElementMask::full(S.size()).minus(inside);

    std::uint64_t total
        = detail::orbit_search(S, trivial, {}, inside, {}, opts.jobs).size();
    auto quotient_sets
        = detail::orbit_search(S, trivial, {}, outside, inside, opts.jobs);
    for (auto const& Q : quotient_sets) {
      if (Q.empty()) {
        continue;
      }
      auto seed = closure(S, Q.indices());
      total += detail::orbit_search(S, trivial, seed, inside, {}, opts.jobs)
                   .size();
    }
    return total;
  }

  //! Conjugacy classes of subgroups of a group ambient: the nonempty
  //! subsemigroups up to G (a finite subsemigroup of a group is a subgroup).
  inline CensusResult subgroup_census(TableSemigroup const& S,
                                      SymmetryGroup const&  G,
                                      CensusOptions const&  opts = {}) {
    if (!S.is_group()) {
      throw Error("subgroup_census: ambient is not a group");
    }
    auto result = census_up_to_conjugacy(S, G, opts);
    auto it     = std::find_if(result.records.begin(), result.records.end(),
                           [](auto const& r) { return r.size == 0; });
    if (it != result.records.end()) {
      result.total -= it->orbit_size;
      result.records.erase(it);
    }
    return result;
  }

  using Histogram      = std::map<std::size_t, std::uint64_t>;
  using JointHistogram = std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>;

  enum class CensusMetric { d_classes, idempotents };

  inline std::string_view to_string(CensusMetric m) {
    return m == CensusMetric::d_classes ? "d_classes" : "idempotents";
  }

  //! Number of census classes of each size.
  inline Histogram size_histogram(CensusResult const& c,
                                  bool only_with_nontrivial_perm = false) {
    Histogram h;
    for (auto const& r : c.records) {
      if (only_with_nontrivial_perm && !r.has_nontrivial_perm) {
        continue;
      }
      ++h[r.size];
    }
    return h;
  }

  inline JointHistogram joint_histogram(CensusResult const& c,
                                        CensusMetric        metric,
                                        bool only_with_nontrivial_perm = false) {
    JointHistogram h;
    for (auto const& r : c.records) {
      if (!r.has_stats) {
        throw Error("joint_histogram needs a census run with statistics");
      }
      if (only_with_nontrivial_perm && !r.has_nontrivial_perm) {
        continue;
      }
      ++h[{r.size, metric == CensusMetric::d_classes ? r.d_classes
                                                      : r.idempotents}];
    }
    return h;
  }

  inline void write_csv(std::ostream& os, Histogram const& h,
                        std::string_view header_comment = {}) {
    if (!header_comment.empty()) {
      os << "# " << header_comment << "\n";
    }
    os << "size,count\n";
    for (auto const& [size, count] : h) {
      os << size << "," << count << "\n";
    }
  }

  inline void write_csv(std::ostream& os, JointHistogram const& h,
                        CensusMetric metric, std::string_view header_comment = {}) {
    if (!header_comment.empty()) {
      os << "# " << header_comment << "\n";
    }
    os << "size," << to_string(metric) << ",count\n";
    for (auto const& [key, count] : h) {
      os << key.first << "," << key.second << "," << count << "\n";
    }
  }

  inline nlohmann::json to_json(CensusRecord const& r, std::size_t ambient_size) {
    nlohmann::json j = {{"representative_mask_hex", r.representative.to_hex(ambient_size)},
                        {"orbit_size", r.orbit_size},
                        {"size", r.size}};
    if (r.has_stats) {
      j["d_classes"]           = r.d_classes;
      j["idempotents"]         = r.idempotents;
      j["has_nontrivial_perm"] = r.has_nontrivial_perm;
    } else {
      j["d_classes"] = j["idempotents"] = j["has_nontrivial_perm"] = nullptr;
    }
    return j;
  }

  //! JSON lines, one record per line in representative order.
  inline void write_jsonl(std::ostream& os, CensusResult const& c) {
    for (auto const& r : c.records) {
      os << to_json(r, c.ambient_size).dump() << "\n";
    }
  }

}  // namespace diagsemi

#endif  // DIAGSEMI_CENSUS_HPP_
