#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "support.hpp"

using namespace diagsemi;
using namespace diagsemi::test;

TEST_CASE("enumeration basics", "[enumerate]") {
  auto T3 = enumerate(map_generators(Family::transformation, 3).elements);
  CHECK(T3.size() == 27);
  auto IS3 = enumerate(bipartition_generators(Family::dual_symmetric_inverse, 3).elements);
  CHECK(IS3.size() == 25);
  auto one = enumerate(std::vector<Bipartition>{Bipartition::identity(2)});
  CHECK(one.size() == 1);
  CHECK(one.identity_index() == 0u);

  CHECK_THROWS_AS(enumerate(map_generators(Family::transformation, 3).elements, 10),
                  LimitExceeded);
  CHECK_THROWS_AS(enumerate(std::vector<Pbr>{}), Error);
  CHECK_THROWS_AS(enumerate(std::vector<Pbr>{pbr_identity(1), pbr_identity(2)}), Error);
}

TEST_CASE("enumeration is deterministic and consistent", "[enumerate]") {
  auto gens = bipartition_generators(Family::brauer, 4).elements;
  auto A    = enumerate(gens);
  auto B    = enumerate(gens);
  CHECK(A.elements() == B.elements());
  CHECK(A.right_cayley_graph().targets == B.right_cayley_graph().targets);
  CHECK(A.left_cayley_graph().targets == B.left_cayley_graph().targets);

  auto const& right = A.right_cayley_graph();
  auto const& left  = A.left_cayley_graph();
  for (std::size_t x = 0; x < A.size(); ++x) {
    for (std::size_t g = 0; g < A.number_of_generators(); ++g) {
      CHECK(A.at(right.target(x, g)) == A.at(x) * A.generators()[g]);
      CHECK(A.at(left.target(x, g)) == A.generators()[g] * A.at(x));
    }
    // words evaluate back to the element
    auto w = A.word(x);
    auto y = A.generators()[w[0]];
    for (std::size_t i = 1; i < w.size(); ++i) {
      y = y * A.generators()[w[i]];
    }
    CHECK(y == A.at(x));
  }
  // shortlex: word lengths never decrease along the element order
  for (std::size_t x = 1; x < A.size(); ++x) {
    CHECK(A.word(x - 1).size() <= A.word(x).size());
  }
  auto table = A.multiplication_table();
  for (std::size_t x = 0; x < A.size(); x += 7) {
    for (std::size_t y = 0; y < A.size(); ++y) {
      CHECK(A.at(table[x * A.size() + y]) == A.at(x) * A.at(y));
      CHECK(A.product_index(x, y) == table[x * A.size() + y]);
    }
  }
}

TEST_CASE("Green's structure of small monoids", "[green]") {
  auto S3 = enumerate(map_generators(Family::symmetric_group, 3).elements);
  auto g  = green_structure(S3);
  CHECK(g.number_of_d_classes() == 1);
  CHECK(g.number_of_r_classes() == 1);
  CHECK(g.number_of_l_classes() == 1);
  auto box = g.eggbox(0);
  CHECK(box.rows == 1);
  CHECK(box.cols == 1);
  CHECK(box.has_idempotent(0, 0));

  auto T3 = enumerate(map_generators(Family::transformation, 3).elements);
  auto gt = green_structure(T3);
  CHECK(gt.number_of_d_classes() == 3);
  CHECK(gt.is_d_order_linear());
  // D-classes in descending rank: images of size 3, 2, 1
  for (std::size_t x = 0; x < T3.size(); ++x) {
    std::set<std::uint32_t> image(T3.at(x).data().begin(), T3.at(x).data().end());
    CHECK(gt.d_class(x) == 3 - image.size());
  }
  // constant maps share a kernel and differ in image
  auto oracle = divisibility(T3.size(), element_product_index(T3));
  auto rank1  = gt.eggbox(2);
  std::set<Bitset> rows, cols;
  for (auto x : gt.d_class_elements(2)) {
    rows.insert(oracle.right[x]);
    cols.insert(oracle.left[x]);
  }
  CHECK(rank1.rows == rows.size());
  CHECK(rank1.cols == cols.size());
  CHECK(rank1.rows == 1);
  CHECK(rank1.cols == 3);

  auto TL4 = enumerate(bipartition_generators(Family::temperley_lieb, 4).elements);
  auto gl  = green_structure(TL4);
  CHECK(gl.number_of_d_classes() == 3);
  CHECK(gl.is_d_order_linear());
  CHECK(gl.d_leq(2, 0));
  CHECK_FALSE(gl.d_leq(0, 2));
  CHECK_THROWS_AS(gl.eggbox(3), Error);
}

TEST_CASE("Green's classes match brute-force divisibility", "[green]") {
  for (auto const& m : standard_monoids_up_to(1000)) {
    INFO(m.name());
    with_standard_monoid(m.family, m.degree, 1000, [&](auto const& S) {
      auto g = green_structure(S);
      auto c = check_green(g, S.size(), element_product_index(S));
      CHECK(c.r_ok);
      CHECK(c.l_ok);
      CHECK(c.d_ok);
      CHECK(c.j_ok);
      CHECK(c.d_is_j);
      // H-cells within a D-class have equal size
      for (std::size_t d = 0; d < g.number_of_d_classes(); ++d) {
        auto box = g.eggbox(d);
        for (auto const& cell : box.cells) {
          CHECK(cell.size() == box.cells[0].size());
        }
        CHECK(box.rows * box.cols * box.cells[0].size()
              == g.d_class_elements(d).size());
      }
      return 0;
    });
  }
}

TEST_CASE("D equals J on larger monoids", "[green]") {
  for (auto const& m : standard_monoids_up_to(5000)) {
    if (family_order(m.family, m.degree) <= 1000) {
      continue;
    }
    INFO(m.name());
    with_standard_monoid(m.family, m.degree, 5000, [&](auto const& S) {
      auto       g     = green_structure(S);
      auto       table = S.multiplication_table();
      auto const n     = S.size();
      auto       o     = divisibility(n, [&](std::size_t x, std::size_t y) {
        return table[x * n + y];
      });
      CHECK(canonical_partition(g.d_classes()) == partition_by(o.two));
      CHECK(g.d_equals_j());
      return 0;
    });
  }
}

TEST_CASE("Temperley-Lieb D-classes are indexed by rank", "[green]") {
  for (std::size_t n = 1; n <= 10; ++n) {
    INFO("n=" << n);
    auto S = enumerate(bipartition_generators(Family::temperley_lieb, n).elements);
    auto g = green_structure(S);
    CHECK(g.number_of_d_classes() == n / 2 + 1);
    CHECK(g.is_d_order_linear());
    for (std::size_t x = 0; x < S.size(); ++x) {
      CHECK(rank(S.at(x)) == n - 2 * g.d_class(x));
    }
  }
}

TEST_CASE("idempotents", "[green]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto S = enumerate(map_generators(Family::symmetric_group, n).elements);
    CHECK(S.idempotents().size() == 1);
  }
  auto T2 = enumerate(map_generators(Family::transformation, 2).elements);
  CHECK(T2.idempotents().size() == 3);
  auto TL3 = enumerate(bipartition_generators(Family::temperley_lieb, 3).elements);
  std::size_t brute = 0;
  for (auto const& x : TL3.elements()) {
    brute += x * x == x;
  }
  CHECK(TL3.idempotents().size() == brute);
  CHECK(green_structure(TL3).number_of_idempotents() == brute);
}

TEST_CASE("ideals and Rees quotients", "[ideal]") {
  auto T2    = enumerate(map_generators(Family::transformation, 2).elements);
  auto table = to_table(T2);
  std::vector<std::uint32_t> constants;
  for (std::uint32_t x = 0; x < T2.size(); ++x) {
    auto const& d = T2.at(x).data();
    if (d[0] == d[1]) {
      constants.push_back(x);
    }
  }
  REQUIRE(constants.size() == 2);
  CHECK(is_ideal(table, constants));
  auto Q = rees_quotient(table, constants);
  CHECK(Q.size() == 3);
  CHECK(Q.is_associative());
  auto zero = static_cast<std::uint32_t>(Q.size() - 1);
  for (std::uint32_t x = 0; x < Q.size(); ++x) {
    CHECK(Q.product(x, zero) == zero);
    CHECK(Q.product(zero, x) == zero);
  }
  CHECK_FALSE(is_ideal(table, {*T2.identity_index()}));
  CHECK_THROWS_AS(rees_quotient(table, {*T2.identity_index()}), Error);

  std::vector<std::uint32_t> everything(T2.size());
  std::iota(everything.begin(), everything.end(), 0);
  auto trivial = rees_quotient(table, everything);
  CHECK(trivial.size() == 1);
  CHECK(trivial.product(0, 0) == 0);

  auto T3  = to_table(enumerate(map_generators(Family::transformation, 3).elements));
  auto ids = ideals_of(T3);
  CHECK(ids.size() == 3);  // the chain of ranks
  for (auto const& I : ids) {
    CHECK(is_ideal(T3, I));
    CHECK(rees_quotient(T3, I).is_associative());
  }
  CHECK(minimal_ideal(T3).size() == 3);
  CHECK(principal_ideals(T3).size() == 3);
}

TEST_CASE("eggbox bitmap export", "[green]") {
  auto S = enumerate(bipartition_generators(Family::temperley_lieb, 4).elements);
  auto g = green_structure(S);
  auto box = g.eggbox(1);
  std::ostringstream os;
  box.write_pgm(os, "test");
  std::istringstream in(os.str());
  std::string        magic, hash, comment;
  in >> magic;
  CHECK(magic == "P2");
  std::getline(in, comment);
  std::getline(in, comment);
  CHECK(comment == "# test");
  std::size_t w = 0, h = 0, maxval = 0;
  in >> w >> h >> maxval;
  CHECK(w == box.cols);
  CHECK(h == box.rows);
  std::size_t black = 0, pixels = 0, v = 0;
  while (in >> v) {
    ++pixels;
    black += v == 0;
  }
  CHECK(pixels == w * h);
  CHECK(black == g.number_of_idempotents(1));
  CHECK(black == box.number_of_idempotent_cells());

  auto json = to_json(g);
  CHECK(json.at("d_classes").size() == 3);
}
