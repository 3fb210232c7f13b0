#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "raag/conj.hpp"
#include "raag/nilp.hpp"

using namespace raag;

namespace {

Element E(const GraphPtr& g, const char* w) { return Element::parse(g, w); }

GraphPtr discrete2() { return oracle::graph_from({"a", "b"}, {}); }
GraphPtr edge() { return oracle::graph_from({"a", "b"}, {{"a", "b"}}); }

using Poly = std::map<std::vector<Letter>, long long>;

// Magnus expansion by direct series multiplication, with monomials
// canonicalized by the rewriting oracle.
Poly oracle_magnus(const Element& x, std::size_t d) {
  const Graph& g = x.graph();
  Poly acc{{{}, 1}};
  for (Letter l : x.letters()) {
    Letter v = Letter::make(l.vertex(), false);
    Poly factor{{{}, 1}};
    if (!l.inverse()) {
      factor[{v}] += 1;
    } else {
      std::vector<Letter> power;
      long long sign = 1;
      for (std::size_t k = 1; k <= d; ++k) {
        power.push_back(v);
        sign = -sign;
        factor[power] += sign;
      }
    }
    Poly next;
    for (const auto& [u, cu] : acc)
      for (const auto& [w, cw] : factor) {
        if (u.size() + w.size() > d) continue;
        std::vector<Letter> uw = u;
        uw.insert(uw.end(), w.begin(), w.end());
        next[oracle::rewrite_normal_form(g, uw)] += cu * cw;
      }
    acc.clear();
    for (const auto& [w, c] : next)
      if (c != 0) acc[w] = c;
  }
  return acc;
}

long long residue(long long c, long long q) { return ((c % q) + q) % q; }

Poly reduce(const Poly& x, long long q) {
  Poly out;
  for (const auto& [w, c] : x)
    if (residue(c, q) != 0) out[w] = residue(c, q);
  return out;
}

Poly times(const raag::Graph& g, const Poly& x, const Poly& y, std::size_t d, long long q) {
  Poly out;
  for (const auto& [u, cu] : x)
    for (const auto& [w, cw] : y) {
      if (u.size() + w.size() > d) continue;
      std::vector<Letter> uw = u;
      uw.insert(uw.end(), w.begin(), w.end());
      out[oracle::rewrite_normal_form(g, uw)] += cu * cw;
    }
  return reduce(out, q);
}

// Searches every unit u = 1 + (terms of degree 1..d-1) for M(g) u = u M(h) mod q.
bool oracle_unit_conjugate(const Element& g, const Element& h, std::size_t d, long long q) {
  const raag::Graph& gr = g.graph();
  Poly mg = reduce(oracle_magnus(g, d), q), mh = reduce(oracle_magnus(h, d), q);
  std::vector<std::vector<Letter>> monomials;
  for (std::size_t len = 1; len < d; ++len)
    for (const auto& w : oracle::all_words(gr, len)) {
      bool positive = true;
      for (Letter l : w) positive = positive && !l.inverse();
      auto c = oracle::rewrite_normal_form(gr, w);
      if (positive && c == w) monomials.push_back(w);
    }
  std::vector<long long> coeffs(monomials.size(), 0);
  for (;;) {
    Poly u{{{}, 1}};
    for (std::size_t i = 0; i < monomials.size(); ++i)
      if (coeffs[i]) u[monomials[i]] = coeffs[i];
    if (times(gr, mg, u, d, q) == times(gr, u, mh, d, q)) return true;
    std::size_t k = 0;
    while (k < coeffs.size() && ++coeffs[k] == q) coeffs[k++] = 0;
    if (k == coeffs.size()) return false;
  }
}

}  // namespace

TEST_CASE("algebra multiply") {
  auto d = discrete2();
  auto basis = MonomialBasis::shared(d, 3);
  ModularRing ring(3, 1);
  auto one = ModElement::one(basis, 3, ring);
  auto a = ModElement::monomial(basis, 3, ring, basis->generator(0), 1);
  auto b = ModElement::monomial(basis, 3, ring, basis->generator(1), 1);
  CHECK(algebra_multiply(a, one).terms() == a.terms());
  CHECK((a * b).terms() != (b * a).terms());

  auto e = edge();
  auto eb = MonomialBasis::shared(e, 3);
  auto ea = ModElement::monomial(eb, 3, ring, eb->generator(0), 1);
  auto ebb = ModElement::monomial(eb, 3, ring, eb->generator(1), 1);
  CHECK((ea * ebb).terms() == (ebb * ea).terms());

  auto other = ModElement::one(basis, 2, ring);
  CHECK_THROWS_AS(one * other, AlgebraError);
  CHECK_THROWS_AS(ModElement::one(basis, 4, ring), AlgebraError);
}

TEST_CASE("monomial basis counts trace monomials") {
  auto d = discrete2();
  MonomialBasis b(d, 4);
  CHECK(b.count(0) == 1);
  CHECK(b.count(1) == 2);
  CHECK(b.count(3) == 8);
  MonomialBasis e(edge(), 4);
  CHECK(e.count(4) == 5);
}

TEST_CASE("magnus image") {
  auto d = discrete2();
  CHECK(magnus_image(Element(d), 4, 2, 1).is_one());
  CHECK(magnus_image(E(d, "a") * E(d, "a^-1"), 5, 3, 2).is_one());
  auto x = E(d, "a a^-1");
  CHECK(x.is_identity());
  // v v^-1 computed letter by letter
  auto basis = MonomialBasis::shared(d, 5);
  auto u = ModElement::one(basis, 5, ModularRing(2, 3));
  u.multiply_generator(0, false);
  u.multiply_generator(0, true);
  CHECK(u.is_one());

  auto img = magnus_image(E(d, "a b a^-1 b^-1"), 2, 5, 1);
  const auto& mb = img.basis();
  auto ab = mb.find({Letter::make(0, false), Letter::make(1, false)});
  auto ba = mb.find({Letter::make(1, false), Letter::make(0, false)});
  auto terms = img.terms();
  REQUIRE(terms.size() == 3);
  CHECK(img.coefficient(0) == 1);
  CHECK(img.coefficient(ab) == 1);
  CHECK(img.coefficient(ba) == 4);
}

TEST_CASE("magnus conjugate test") {
  auto d = discrete2();
  Element g = E(d, "a b a^-1 b^-1"), h = E(d, "b a b^-1 a^-1");
  CHECK(magnus_conjugate_test(g, g, 4, 2, 1) == SeparationVerdict::NotSeparatedAtThisLevel);
  CHECK(magnus_conjugate_test(E(d, "a"), E(d, "b"), 1, 2, 1) == SeparationVerdict::Separated);
  bool any = false;
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t deg = 1; deg <= 3; ++deg)
      if (magnus_conjugate_test(g, h, deg, p, 1) == SeparationVerdict::Separated) any = true;
  CHECK(any);
}

TEST_CASE("find separating level") {
  auto d = discrete2();
  auto diff = find_separating_level(E(d, "a"), E(d, "b"), 2, 6, 2);
  REQUIRE(diff.has_value());
  CHECK(diff->d == 1);
  CHECK(diff->m == 1);
  Element g = E(d, "a b a^-1 b^-1"), h = E(d, "b a b^-1 a^-1");
  auto mod3 = find_separating_level(g, h, 3, 6, 2);
  REQUIRE(mod3.has_value());
  CHECK(mod3->d <= 3);
  CHECK(mod3->m == 1);
  // over F_2 the pair stays conjugate through degree 3; Z/4 separates it
  auto mod2 = find_separating_level(g, h, 2, 6, 2);
  REQUIRE(mod2.has_value());
  CHECK(mod2->d <= 3);
  CHECK(mod2->m == 2);
  CHECK(magnus_conjugate_test(g, h, 3, 2, 1) == SeparationVerdict::NotSeparatedAtThisLevel);
  CHECK_FALSE(find_separating_level(E(d, "a b"), E(d, "b a"), 3, 6, 2).has_value());
}

TEST_CASE("lie graded dims") {
  CHECK(lie_graded_dims(Graph::discrete({"a", "b"}), 4).dims == std::vector<std::size_t>{2, 1, 2, 3});
  CHECK(lie_graded_dims(Graph::complete({"a", "b", "c"}), 4).dims == std::vector<std::size_t>{3, 0, 0, 0});
  auto witt = oracle::witt_dims(3, 5);
  CHECK(lie_graded_dims(Graph::discrete({"a", "b", "c"}), 5).dims == witt);
}

TEST_CASE("lie center") {
  CHECK(lie_center_trivial_upto(Graph::discrete({"a", "b"}), 4, 2));
  CHECK_FALSE(lie_center_trivial_upto(Graph::complete({"a", "b"}), 4, 2));
  CHECK_FALSE(lie_center_trivial_upto(Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), 4, 3));
  CHECK(lie_center_trivial_upto(Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}), 4, 2));
}

TEST_CASE("property: magnus image matches direct series expansion") {
  std::mt19937_64 rng(51);
  for (const auto& ng : oracle::small_graphs(3)) {
    if (ng.graph->size() == 0) continue;
    for (int i = 0; i < 15; ++i) {
      Element x = oracle::random_element(ng.graph, 6, rng);
      const std::size_t d = 4;
      auto basis = MonomialBasis::shared(ng.graph, d);
      auto exact = magnus_image_in(x, basis, d, IntegerRing{});
      Poly expected = oracle_magnus(x, d);
      for (std::size_t k = 0; k < exact.dimension(); ++k) {
        auto it = expected.find(basis->word(k));
        long long want = it == expected.end() ? 0 : it->second;
        CHECK(exact.coefficient(k) == want);
      }
      for (const auto& [w, c] : expected) CHECK(basis->find(w) != MonomialBasis::npos);
      auto mod = magnus_image(x, d, 3, 2);
      for (std::size_t k = 0; k < mod.dimension(); ++k) {
        auto it = expected.find(basis->word(k));
        long long want = it == expected.end() ? 0 : it->second;
        CHECK(mod.coefficient(k) == residue(want, 9));
      }
    }
  }
}

TEST_CASE("property: magnus image is a homomorphism") {
  std::mt19937_64 rng(52);
  for (const char* kind : {"discrete", "edge+isolated", "path", "triangle"}) {
    auto g = oracle::rank3(kind).graph;
    for (std::uint32_t p : {2u, 3u})
      for (unsigned m : {1u, 2u})
        for (std::size_t d : {1u, 3u, 5u})
          for (int i = 0; i < 5; ++i) {
            Element x = oracle::random_element(g, 6, rng), y = oracle::random_element(g, 6, rng);
            CHECK((magnus_image(x, d, p, m) * magnus_image(y, d, p, m)).terms() ==
                  magnus_image(x * y, d, p, m).terms());
            CHECK((magnus_image(x, d, p, m) * magnus_image(x.inverse(), d, p, m)).is_one());
          }
  }
}

TEST_CASE("property: nontrivial elements have nontrivial images") {
  for (const auto& ng : oracle::small_graphs(3)) {
    for (std::size_t len = 1; len <= 4; ++len)
      for (const auto& w : oracle::all_words(*ng.graph, len)) {
        Element x = Element::from_letters(ng.graph, w);
        if (x.is_identity()) continue;
        CHECK_FALSE(magnus_image(x, 6, 2, 1).is_one());
      }
  }
}

TEST_CASE("property: separation verdict matches exhaustive unit search") {
  std::mt19937_64 rng(55);
  for (const GraphPtr& g : {discrete2(), edge()}) {
    for (int i = 0; i < 12; ++i) {
      Element x = oracle::random_element(g, 5, rng);
      Element y = oracle::random_element(g, 5, rng);
      for (std::size_t d : {1u, 2u, 3u})
        for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
          long long q = m == 1 ? p : p * p;
          bool separated = magnus_conjugate_test(x, y, d, p, m) == SeparationVerdict::Separated;
          CHECK(separated == !oracle_unit_conjugate(x, y, d, q));
        }
    }
  }
}

TEST_CASE("property: separation is sound against the ball oracle") {
  std::mt19937_64 rng(53);
  for (const char* kind : {"discrete", "edge+isolated", "path", "triangle"}) {
    auto g = oracle::rank3(kind).graph;
    for (int i = 0; i < 25; ++i) {
      Element x = oracle::random_element(g, 5, rng);
      Element y = oracle::random_element(g, 5, rng);
      if (i % 2) {
        Element s = oracle::random_element(g, 3, rng);
        y = s * x * s.inverse();
      }
      for (std::uint32_t p : {2u, 3u}) {
        auto level = find_separating_level(x, y, p, 4, 2);
        if (level) CHECK_FALSE(ball_oracle_conjugate(x, y, 6).found);
      }
    }
  }
}

TEST_CASE("property: PBW identity over the corpus") {
  std::mt19937_64 rng(54);
  std::vector<Graph> corpus;
  for (const auto& ng : oracle::small_graphs(3))
    if (ng.graph->size() > 0) corpus.push_back(*ng.graph);
  corpus.push_back(Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}));
  corpus.push_back(Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}));
  for (const Graph& g : corpus) {
    const std::size_t n = 5;
    auto dims = lie_graded_dims(g, n).dims;
    CHECK(dims[0] == g.size());
    CHECK(oracle::pbw_series(dims, n) == oracle::clique_hilbert_series(g, n));
    CHECK(lie_graded_dims_mod(g, n, 101).dims == dims);
  }
}

TEST_CASE("property: lie center matches the graph center") {
  for (const auto& ng : oracle::small_graphs(3)) {
    if (ng.graph->size() == 0) continue;
    bool trivial = ng.graph->center_vertices().empty();
    CHECK(lie_center_trivial_upto(*ng.graph, 4, 2) == trivial);
  }
}
