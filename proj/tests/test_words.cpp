#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "raag/words.hpp"

using namespace raag;

namespace {

GraphPtr discrete2() { return make_graph(Graph::discrete({"a", "b"})); }
GraphPtr edge() { return make_graph(Graph::complete({"a", "b"})); }
Element E(const GraphPtr& g, const char* w) { return Element::parse(g, w); }

}  // namespace

TEST_CASE("parse and canonicalize") {
  auto d = discrete2();
  CHECK(E(d, "a b^-1").letters() == std::vector<Letter>{Letter::make(0, false), Letter::make(1, true)});
  CHECK(E(edge(), "b a").to_string() == "a b");
  CHECK(E(d, "a a^-1").is_identity());
  CHECK(E(d, "a^3 a^-1").to_string() == "a^2");
  CHECK(E(d, "1").is_identity());
  CHECK(E(d, "").is_identity());
  CHECK(E(d, "a^-2 b").to_string() == "a^-2 b");
}

TEST_CASE("parse errors") {
  auto d = discrete2();
  CHECK_THROWS_AS(E(d, "c"), std::exception);
  CHECK_THROWS_AS(E(d, "a^"), WordError);
  CHECK_THROWS_AS(E(d, "a^x"), WordError);
  CHECK_THROWS_AS(E(d, "a^0b"), WordError);
}

TEST_CASE("multiply") {
  auto e = edge();
  Element x = E(e, "a b");
  CHECK((x * x.inverse()).is_identity());
  CHECK((x * E(e, "a")).to_string() == "a^2 b");
}

TEST_CASE("invert") {
  CHECK(discrete2()->size() == 2);
  CHECK(Element(discrete2()).inverse().is_identity());
  CHECK(E(discrete2(), "a b").inverse().to_string() == "b^-1 a^-1");
  CHECK(E(edge(), "a b").inverse().to_string() == "a^-1 b^-1");
}

TEST_CASE("equality") {
  CHECK(E(discrete2(), "a a^-1").is_identity());
  CHECK(E(edge(), "a b a^-1 b^-1").is_identity());
  CHECK_FALSE(E(discrete2(), "a b a^-1 b^-1").is_identity());
}

TEST_CASE("support") {
  auto e = edge();
  CHECK(Element(e).support().empty());
  CHECK(E(discrete2(), "a b^-1").support() == VertexSet(0b11));
  CHECK(E(e, "a b a^-1").support() == VertexSet::single(1));
  CHECK(Element(e).in_special_subgroup(VertexSet()));
  CHECK_FALSE(E(e, "a").in_special_subgroup(VertexSet::single(1)));
}

TEST_CASE("retract") {
  auto d = discrete2();
  Element x = E(d, "a b a^-2 b");
  CHECK(x.retract(d->all()) == x);
  CHECK(E(d, "a b").retract(VertexSet::single(0)).to_string() == "a");
  CHECK(x.retract(VertexSet::single(1)).to_string() == "b^2");
}

TEST_CASE("cyclic normal form") {
  auto d = discrete2();
  CyclicForm id = cyclic_normal_form(Element(d));
  CHECK(id.conjugator.is_identity());
  CHECK(id.core.is_identity());
  CyclicForm c = cyclic_reduction(E(d, "a b a^-1"));
  CHECK(c.conjugator.to_string() == "a");
  CHECK(c.core.to_string() == "b");
}

TEST_CASE("enumerate ball") {
  auto d = discrete2();
  CHECK(enumerate_ball(d, 0, d->all()).size() == 1);
  CHECK(enumerate_ball(d, 2, d->all()).size() == 1 + 4 + 12);
  CHECK(enumerate_ball(edge(), 2, edge()->all()).size() == 13);
  CHECK(enumerate_ball(d, 3, VertexSet::single(0)).size() == 7);
}

TEST_CASE("property: canonical form agrees with the rewriting oracle") {
  for (const auto& ng : oracle::small_graphs(3)) {
    const Graph& g = *ng.graph;
    for (std::size_t len = 0; len <= 4; ++len)
      for (const auto& w : oracle::all_words(g, len)) {
        Element x = Element::from_letters(ng.graph, w);
        REQUIRE_MESSAGE(x.letters() == oracle::rewrite_normal_form(g, w), ng.name);
      }
  }
}

TEST_CASE("property: group axioms on random elements") {
  std::mt19937_64 rng(1);
  for (const auto& ng : oracle::small_graphs(3)) {
    for (int i = 0; i < 100; ++i) {
      Element x = oracle::random_element(ng.graph, 6, rng);
      Element y = oracle::random_element(ng.graph, 6, rng);
      Element z = oracle::random_element(ng.graph, 6, rng);
      CHECK((x * y) * z == x * (y * z));
      CHECK((x * x.inverse()).is_identity());
      CHECK((x * y).inverse() == y.inverse() * x.inverse());
      CHECK(Element::parse(ng.graph, x.to_string()) == x);
      CHECK(x.pow(3) == x * x * x);
      CHECK(x.pow(-2) == x.inverse() * x.inverse());
    }
  }
}

TEST_CASE("property: retractions are homomorphisms and commute") {
  std::mt19937_64 rng(2);
  for (const auto& ng : oracle::small_graphs(3)) {
    VertexSet all = ng.graph->all();
    for (int i = 0; i < 60; ++i) {
      Element x = oracle::random_element(ng.graph, 6, rng);
      Element y = oracle::random_element(ng.graph, 6, rng);
      VertexSet a(rng() & all.bits()), b(rng() & all.bits());
      CHECK((x * y).retract(a) == x.retract(a) * y.retract(a));
      CHECK(x.retract(a).retract(b) == x.retract(a & b));
      CHECK(x.retract(a).retract(b) == x.retract(b).retract(a));
      CHECK(x.retract(a).retract(a) == x.retract(a));
      CHECK(x.retract(a).in_special_subgroup(a));
      CHECK(x.retract(all) == x);
    }
  }
}

TEST_CASE("property: cyclic normal form is a conjugacy invariant") {
  std::mt19937_64 rng(3);
  for (const auto& ng : oracle::small_graphs(3)) {
    for (int i = 0; i < 80; ++i) {
      Element x = oracle::random_element(ng.graph, 6, rng);
      Element s = oracle::random_element(ng.graph, 4, rng);
      CyclicForm c = cyclic_normal_form(x);
      CHECK(c.conjugator * c.core * c.conjugator.inverse() == x);
      CHECK(cyclic_normal_form(s * x * s.inverse()).core == c.core);
      CyclicForm r = cyclic_reduction(x);
      CHECK(r.conjugator * r.core * r.conjugator.inverse() == x);
      CHECK(r.core.length() <= x.length());
    }
  }
}
