#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "raag/words.hpp"

namespace raag {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical positive traces of degree <= max_degree, ordered by degree then lex.
class MonomialBasis {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  MonomialBasis(GraphPtr g, std::size_t max_degree);
  static std::shared_ptr<const MonomialBasis> shared(const GraphPtr& g, std::size_t max_degree);

  const Graph& graph() const { return *graph_; }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t size() const { return words_.size(); }
  std::size_t degree_begin(std::size_t d) const { return offsets_.at(d); }
  std::size_t degree_end(std::size_t d) const { return offsets_.at(d + 1); }
  std::size_t count(std::size_t d) const { return degree_end(d) - degree_begin(d); }
  std::size_t degree(std::size_t i) const { return words_[i].size(); }
  const std::vector<Letter>& word(std::size_t i) const { return words_[i]; }
  std::string to_string(std::size_t i) const;

  std::size_t find(const std::vector<Letter>& canonical) const;
  std::size_t generator(Vertex v) const { return 1 + v; }
  // Index of monomial i times vertex v, npos past max_degree.
  std::size_t times(std::size_t i, Vertex v) const { return right_[i * graph_->size() + v]; }
  std::size_t product(std::size_t i, std::size_t j) const;

 private:
  GraphPtr graph_;
  std::size_t max_degree_;
  std::vector<std::vector<Letter>> words_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> right_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct ModularRing {
  using value_type = std::uint32_t;
  std::uint32_t p = 2;
  unsigned m = 1;
  std::uint32_t q = 2;

  ModularRing() = default;
  ModularRing(std::uint32_t prime, unsigned precision);
  value_type zero() const { return 0; }
  value_type one() const { return 1 % q; }
  value_type from_int(long long x) const {
    long long r = x % static_cast<long long>(q);
    return static_cast<value_type>(r < 0 ? r + q : r);
  }
  value_type add(value_type a, value_type b) const { return static_cast<value_type>((std::uint64_t{a} + b) % q); }
  value_type sub(value_type a, value_type b) const { return static_cast<value_type>((std::uint64_t{a} + q - b) % q); }
  value_type mul(value_type a, value_type b) const { return static_cast<value_type>(std::uint64_t{a} * b % q); }
  value_type neg(value_type a) const { return a == 0 ? 0 : q - a; }
  bool operator==(const ModularRing& o) const { return q == o.q; }
  std::string name() const { return "Z/" + std::to_string(q); }
};

struct IntegerRing {
  using value_type = boost::multiprecision::cpp_int;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long x) const { return x; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool operator==(const IntegerRing&) const { return true; }
  std::string name() const { return "Z"; }
};

struct RationalRing {
  using value_type = boost::multiprecision::cpp_rational;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long x) const { return x; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool operator==(const RationalRing&) const { return true; }
  std::string name() const { return "Q"; }
};

// Element of A_Γ truncated at degree d; coefficients stored densely over the basis.
template <class Ring>
class TruncatedAlgebraElement {
 public:
  using value_type = typename Ring::value_type;

  TruncatedAlgebraElement(std::shared_ptr<const MonomialBasis> basis, std::size_t d, Ring ring)
      : basis_(std::move(basis)), d_(d), ring_(ring) {
    if (d_ > basis_->max_degree()) throw AlgebraError("truncation degree exceeds the monomial basis");
    coeffs_.assign(basis_->degree_end(d_), ring_.zero());
  }

  static TruncatedAlgebraElement one(std::shared_ptr<const MonomialBasis> basis, std::size_t d, Ring ring) {
    TruncatedAlgebraElement e(std::move(basis), d, ring);
    e.coeffs_[0] = e.ring_.one();
    return e;
  }
  static TruncatedAlgebraElement monomial(std::shared_ptr<const MonomialBasis> basis, std::size_t d, Ring ring,
                                          std::size_t index, value_type c) {
    TruncatedAlgebraElement e(std::move(basis), d, ring);
    if (index < e.coeffs_.size()) e.coeffs_[index] = c;
    return e;
  }

  const MonomialBasis& basis() const { return *basis_; }
  const std::shared_ptr<const MonomialBasis>& basis_ptr() const { return basis_; }
  std::size_t degree() const { return d_; }
  const Ring& ring() const { return ring_; }
  const value_type& coefficient(std::size_t i) const { return coeffs_.at(i); }
  void set_coefficient(std::size_t i, value_type c) { coeffs_.at(i) = std::move(c); }
  std::size_t dimension() const { return coeffs_.size(); }

  std::vector<std::pair<std::size_t, value_type>> terms() const {
    std::vector<std::pair<std::size_t, value_type>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != ring_.zero()) out.emplace_back(i, coeffs_[i]);
    return out;
  }

  bool is_one() const {
    if (coeffs_[0] != ring_.one()) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != ring_.zero()) return false;
    return true;
  }

  TruncatedAlgebraElement& operator+=(const TruncatedAlgebraElement& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = ring_.add(coeffs_[i], o.coeffs_[i]);
    return *this;
  }
  TruncatedAlgebraElement& operator-=(const TruncatedAlgebraElement& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = ring_.sub(coeffs_[i], o.coeffs_[i]);
    return *this;
  }
  friend TruncatedAlgebraElement operator+(TruncatedAlgebraElement a, const TruncatedAlgebraElement& b) {
    return a += b;
  }
  friend TruncatedAlgebraElement operator-(TruncatedAlgebraElement a, const TruncatedAlgebraElement& b) {
    return a -= b;
  }
  friend TruncatedAlgebraElement operator*(const TruncatedAlgebraElement& a, const TruncatedAlgebraElement& b) {
    a.check(b);
    TruncatedAlgebraElement out(a.basis_, a.d_, a.ring_);
    auto bt = b.terms();
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == a.ring_.zero()) continue;
      std::size_t di = a.basis_->degree(i);
      for (const auto& [j, c] : bt) {
        if (di + a.basis_->degree(j) > a.d_) continue;
        std::size_t k = a.basis_->product(i, j);
        out.coeffs_[k] = a.ring_.add(out.coeffs_[k], a.ring_.mul(a.coeffs_[i], c));
      }
    }
    return out;
  }
  friend bool operator==(const TruncatedAlgebraElement& a, const TruncatedAlgebraElement& b) {
    return a.basis_ == b.basis_ && a.d_ == b.d_ && a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

  // this * (1 + sign * v) expanded as a truncated series when sign < 0.
  void multiply_generator(Vertex v, bool inverse) {
    if (!inverse) {
      std::vector<value_type> out = coeffs_;
      for (std::size_t i = 0; i < coeffs_.size(); ++i) add_shift(out, i, v, coeffs_[i]);
      coeffs_ = std::move(out);
      return;
    }
    std::vector<value_type> out = coeffs_, term = coeffs_;
    for (std::size_t k = 1; k <= d_; ++k) {
      std::vector<value_type> next(coeffs_.size(), ring_.zero());
      for (std::size_t i = 0; i < term.size(); ++i) add_shift(next, i, v, ring_.neg(term[i]));
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = ring_.add(out[i], next[i]);
      term = std::move(next);
    }
    coeffs_ = std::move(out);
  }

  std::string to_string() const {
    std::string out;
    for (const auto& [i, c] : terms()) {
      std::string coef;
      if constexpr (std::is_same_v<value_type, std::uint32_t>)
        coef = std::to_string(c);
      else
        coef = c.str();
      if (!out.empty()) out += " + ";
      out += coef;
      if (i != 0) out += "*" + basis_->to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check(const TruncatedAlgebraElement& o) const {
    if (basis_ != o.basis_ && basis_->max_degree() != o.basis_->max_degree())
      throw AlgebraError("algebra elements over different bases");
    if (d_ != o.d_) throw AlgebraError("truncation degree mismatch");
    if (!(ring_ == o.ring_)) throw AlgebraError("coefficient ring mismatch");
  }
  void add_shift(std::vector<value_type>& out, std::size_t i, Vertex v, const value_type& c) const {
    if (c == ring_.zero()) return;
    std::size_t k = basis_->times(i, v);
    if (k != MonomialBasis::npos && k < out.size()) out[k] = ring_.add(out[k], c);
  }

  std::shared_ptr<const MonomialBasis> basis_;
  std::size_t d_;
  Ring ring_;
  std::vector<value_type> coeffs_;
};

template <class Ring>
TruncatedAlgebraElement<Ring> algebra_multiply(const TruncatedAlgebraElement<Ring>& x,
                                               const TruncatedAlgebraElement<Ring>& y) {
  return x * y;
}

template <class Ring>
TruncatedAlgebraElement<Ring> magnus_image_in(const Element& x, std::shared_ptr<const MonomialBasis> basis,
                                              std::size_t d, Ring ring) {
  auto out = TruncatedAlgebraElement<Ring>::one(std::move(basis), d, ring);
  for (Letter l : x.letters()) out.multiply_generator(l.vertex(), l.inverse());
  return out;
}

using ModElement = TruncatedAlgebraElement<ModularRing>;

ModElement magnus_image(const Element& x, std::size_t d, std::uint32_t p, unsigned m);

enum class SeparationVerdict { Separated, NotSeparatedAtThisLevel };

SeparationVerdict magnus_conjugate_test(const Element& g, const Element& h, std::size_t d, std::uint32_t p,
                                        unsigned m);

struct SeparatingLevel {
  std::size_t d = 0;
  unsigned m = 0;
};
std::optional<SeparatingLevel> find_separating_level(const Element& g, const Element& h, std::uint32_t p,
                                                     std::size_t max_d, unsigned max_m);

struct GradedDims {
  std::vector<std::size_t> dims;
};

// Ranks of the degree-n pieces of the Lie subalgebra of A_Γ generated by V, over Q.
GradedDims lie_graded_dims(const Graph& g, std::size_t max_degree);
// The same over F_p.
GradedDims lie_graded_dims_mod(const Graph& g, std::size_t max_degree, std::uint32_t p);
bool lie_center_trivial_upto(const Graph& g, std::size_t max_degree, std::uint32_t p);

}  // namespace raag
