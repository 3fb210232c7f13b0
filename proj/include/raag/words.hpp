#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// A generator or its inverse; ordered by (vertex, sign) with the positive letter first.
struct Letter {
  std::uint16_t code = 0;

  static constexpr Letter make(Vertex v, bool inverse) {
    return Letter{static_cast<std::uint16_t>(2 * v + (inverse ? 1 : 0))};
  }
  constexpr Vertex vertex() const { return code >> 1; }
  constexpr bool inverse() const { return code & 1u; }
  constexpr int sign() const { return inverse() ? -1 : 1; }
  constexpr Letter inv() const { return Letter{static_cast<std::uint16_t>(code ^ 1u)}; }

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

class WordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Group element held as its shortlex-least reduced trace representative.
class Element {
 public:
  Element() = default;
  explicit Element(GraphPtr g) : graph_(std::move(g)) {}

  static Element generator(GraphPtr g, Vertex v, int power = 1);
  static Element from_letters(GraphPtr g, std::span<const Letter> word);
  static Element parse(GraphPtr g, std::string_view text);

  const GraphPtr& graph_ptr() const { return graph_; }
  const Graph& graph() const { return *graph_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Element identity() const { return Element(graph_); }
  Element inverse() const;
  Element pow(long k) const;
  Element conjugate_by(const Element& s) const;  // s x s^-1

  VertexSet support() const;
  bool in_special_subgroup(VertexSet w) const { return support().subset_of(w); }
  Element retract(VertexSet w) const;
  // Exponent sum per vertex.
  std::vector<long> abelianization() const;

  // Positions of letters that commute with everything before / after them.
  std::vector<std::size_t> first_positions() const;
  std::vector<std::size_t> last_positions() const;
  Element without_position(std::size_t i) const;

  std::string to_string() const;

  Element& operator*=(const Element& y);
  friend Element operator*(Element x, const Element& y) { return x *= y; }
  friend bool operator==(const Element& x, const Element& y) { return x.letters_ == y.letters_; }
  friend bool operator<(const Element& x, const Element& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    return x.letters_ < y.letters_;
  }

  // Appends one letter to a canonical word, keeping it canonical.
  static void push(const Graph& g, std::vector<Letter>& word, Letter x);

 private:
  GraphPtr graph_;
  std::vector<Letter> letters_;
};

Element multiply(const Element& x, const Element& y);
Element invert(const Element& x);

struct CyclicForm {
  Element conjugator;
  Element core;
};

// x = conjugator * core * conjugator^-1 with core the least cyclically reduced conjugate.
CyclicForm cyclic_normal_form(const Element& x);
// Removes a front letter with a matching inverse at the back until none remain.
CyclicForm cyclic_reduction(const Element& x);

// Every element of <gens> whose normal form has length <= radius, by length then lex.
std::vector<Element> enumerate_ball(const GraphPtr& g, std::size_t radius, VertexSet gens);

struct ElementHash {
  std::size_t operator()(const Element& x) const noexcept;
};

}  // namespace raag

template <>
struct std::hash<raag::Element> {
  std::size_t operator()(const raag::Element& x) const noexcept { return raag::ElementHash{}(x); }
};
