#include "raag/nilp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "raag/modlinalg.hpp"
#include "raag/simd/kernels.hpp"

namespace raag {

namespace {

std::string key_of(const std::vector<Letter>& w) {
  std::string k;
  for (Letter l : w) k.push_back(static_cast<char>(l.vertex()));
  return k;
}

}  // namespace

MonomialBasis::MonomialBasis(GraphPtr g, std::size_t max_degree) : graph_(std::move(g)), max_degree_(max_degree) {
  const std::size_t r = graph_->size();
  words_.push_back({});
  index_.emplace("", 0);
  offsets_ = {0, 1};
  for (std::size_t d = 1; d <= max_degree_; ++d) {
    std::vector<std::vector<Letter>> level;
    for (std::size_t i = offsets_[d - 1]; i < offsets_[d]; ++i) {
      for (Vertex v = 0; v < r; ++v) {
        std::vector<Letter> w = words_[i];
        Element::push(*graph_, w, Letter::make(v, false));
        if (index_.emplace(key_of(w), 0).second) level.push_back(std::move(w));
      }
    }
    std::sort(level.begin(), level.end());
    for (auto& w : level) {
      index_[key_of(w)] = words_.size();
      words_.push_back(std::move(w));
    }
    offsets_.push_back(words_.size());
  }
  right_.assign(words_.size() * r, npos);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i].size() == max_degree_) continue;
    for (Vertex v = 0; v < r; ++v) {
      std::vector<Letter> w = words_[i];
      Element::push(*graph_, w, Letter::make(v, false));
      right_[i * r + v] = index_.at(key_of(w));
    }
  }
}

std::shared_ptr<const MonomialBasis> MonomialBasis::shared(const GraphPtr& g, std::size_t max_degree) {
  static std::mutex mu;
  static std::map<std::pair<std::string, std::size_t>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(g->to_json(), max_degree);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_shared<const MonomialBasis>(g, max_degree)).first;
  return it->second;
}

std::string MonomialBasis::to_string(std::size_t i) const {
  if (words_[i].empty()) return "1";
  std::string out;
  for (Letter l : words_[i]) out += graph_->name(l.vertex());
  return out;
}

std::size_t MonomialBasis::find(const std::vector<Letter>& canonical) const {
  auto it = index_.find(key_of(canonical));
  return it == index_.end() ? npos : it->second;
}

std::size_t MonomialBasis::product(std::size_t i, std::size_t j) const {
  std::size_t k = i;
  for (Letter l : words_[j]) {
    if (k == npos) return npos;
    k = times(k, l.vertex());
  }
  return k;
}

ModularRing::ModularRing(std::uint32_t prime, unsigned precision) : p(prime), m(precision), q(1) {
  if (prime < 2 || precision < 1) throw AlgebraError("need a prime p >= 2 and precision m >= 1");
  for (std::uint32_t k = 2; k * k <= prime; ++k)
    if (prime % k == 0) throw AlgebraError("p must be prime");
  for (unsigned i = 0; i < precision; ++i) {
    if (q > (1u << 30) / prime) throw AlgebraError("p^m is too large");
    q *= prime;
  }
}

ModElement magnus_image(const Element& x, std::size_t d, std::uint32_t p, unsigned m) {
  if (d < 1) throw AlgebraError("truncation degree must be at least 1");
  return magnus_image_in(x, MonomialBasis::shared(x.graph_ptr(), d), d, ModularRing(p, m));
}

SeparationVerdict magnus_conjugate_test(const Element& g, const Element& h, std::size_t d, std::uint32_t p,
                                        unsigned m) {
  if (d < 1) throw AlgebraError("truncation degree must be at least 1");
  ModularRing ring(p, m);
  auto basis = MonomialBasis::shared(g.graph_ptr(), d);
  ModElement G = magnus_image_in(g, basis, d, ring);
  ModElement H = magnus_image_in(h, basis, d, ring);

  // Unknowns: coefficients of u in degrees 1..d-1 (u_0 = 1).
  // Equations: degrees 1..d of G u - u H = 0.
  const std::size_t row0 = basis->degree_begin(1);
  const std::size_t rows = basis->degree_end(d) - row0;
  const std::size_t col0 = row0;
  const std::size_t cols = basis->degree_end(d - 1) - col0;
  modlin::ModMatrix a(rows, cols, ring.q);
  auto gt = G.terms(), ht = H.terms();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t mu = col0 + c;
    std::size_t dm = basis->degree(mu);
    for (const auto& [nu, coef] : gt) {
      if (basis->degree(nu) + dm > d) continue;
      std::size_t r = basis->product(nu, mu) - row0;
      a.at(r, c) = ring.add(a.at(r, c), coef);
    }
    for (const auto& [nu, coef] : ht) {
      if (basis->degree(nu) + dm > d) continue;
      std::size_t r = basis->product(mu, nu) - row0;
      a.at(r, c) = ring.sub(a.at(r, c), coef);
    }
  }
  std::vector<std::uint32_t> b(rows);
  for (std::size_t r = 0; r < rows; ++r) b[r] = ring.sub(H.coefficient(row0 + r), G.coefficient(row0 + r));
  return modlin::solvable_prime_power(std::move(a), b, p) ? SeparationVerdict::NotSeparatedAtThisLevel
                                                           : SeparationVerdict::Separated;
}

std::optional<SeparatingLevel> find_separating_level(const Element& g, const Element& h, std::uint32_t p,
                                                     std::size_t max_d, unsigned max_m) {
  for (std::size_t d = 1; d <= max_d; ++d)
    for (unsigned m = 1; m <= max_m; ++m)
      if (magnus_conjugate_test(g, h, d, p, m) == SeparationVerdict::Separated) return SeparatingLevel{d, m};
  return std::nullopt;
}

namespace {

struct Overflow {};

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
boost::multiprecision::cpp_int checked_mul(const boost::multiprecision::cpp_int& a,
                                           const boost::multiprecision::cpp_int& b) {
  return a * b;
}
boost::multiprecision::cpp_int checked_sub(const boost::multiprecision::cpp_int& a,
                                           const boost::multiprecision::cpp_int& b) {
  return a - b;
}
long long abs_gcd(long long a, long long b) { return std::gcd(a, b); }
boost::multiprecision::cpp_int abs_gcd(const boost::multiprecision::cpp_int& a,
                                       const boost::multiprecision::cpp_int& b) {
  return boost::multiprecision::gcd(a, b);
}

// Fraction-free incremental row echelon form over Z (rank equals rank over Q).
template <class Int>
class Echelon {
 public:
  bool insert(std::vector<Int> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::size_t c = pivots_[k];
      if (v[c] == 0) continue;
      Int a = rows_[k][c], b = v[c];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0 || rows_[k][j] != 0) v[j] = checked_sub(checked_mul(a, v[j]), checked_mul(b, rows_[k][j]));
      make_primitive(v);
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Int& x) { return x != 0; });
    if (it == v.end()) return false;
    pivots_.push_back(static_cast<std::size_t>(it - v.begin()));
    rows_.push_back(std::move(v));
    return true;
  }

 private:
  static void make_primitive(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v)
      if (x != 0) g = abs_gcd(g, x);
    if (g > 1)
      for (Int& x : v) x /= g;
  }
  std::vector<std::vector<Int>> rows_;
  std::vector<std::size_t> pivots_;
};

class EchelonModP {
 public:
  explicit EchelonModP(std::uint32_t p) : p_(p) {}
  bool insert(std::vector<std::uint32_t> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::uint32_t e = v[pivots_[k]];
      if (e != 0) simd::axpy_mod(v, rows_[k], p_ - e, p_);
    }
    auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (it == v.end()) return false;
    std::size_t c = static_cast<std::size_t>(it - v.begin());
    simd::scale_mod(v, modlin::inverse_mod(v[c], p_), p_);
    pivots_.push_back(c);
    rows_.push_back(std::move(v));
    return true;
  }

 private:
  std::uint32_t p_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
};

// [v, x] for x homogeneous of degree n, as a vector over degree n+1 monomials.
template <class Value, class Add, class Sub>
std::vector<Value> bracket(const MonomialBasis& basis, std::size_t n, Vertex v, const std::vector<Value>& x, Add add,
                           Sub sub) {
  std::vector<Value> out(basis.count(n + 1), Value(0));
  const std::size_t in0 = basis.degree_begin(n), out0 = basis.degree_begin(n + 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    std::size_t left = basis.product(basis.generator(v), in0 + i) - out0;
    std::size_t right = basis.times(in0 + i, v) - out0;
    out[left] = add(out[left], x[i]);
    out[right] = sub(out[right], x[i]);
  }
  return out;
}

template <class Int>
GradedDims dims_over_q(const GraphPtr& g, std::size_t max_degree) {
  auto basis = MonomialBasis::shared(g, max_degree);
  GradedDims out;
  std::vector<std::vector<Int>> layer;
  for (Vertex v = 0; v < g->size(); ++v) {
    std::vector<Int> e(basis->count(1), Int(0));
    e[v] = 1;
    layer.push_back(std::move(e));
  }
  if (max_degree >= 1) out.dims.push_back(layer.size());
  auto add = [](const Int& a, const Int& b) { return a + b; };
  auto sub = [](const Int& a, const Int& b) { return a - b; };
  for (std::size_t n = 1; n < max_degree; ++n) {
    Echelon<Int> ech;
    std::vector<std::vector<Int>> next;
    for (Vertex v = 0; v < g->size(); ++v) {
      for (const auto& x : layer) {
        auto y = bracket<Int>(*basis, n, v, x, add, sub);
        if (ech.insert(y)) next.push_back(std::move(y));
      }
    }
    out.dims.push_back(next.size());
    layer = std::move(next);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> lie_layer_mod(const MonomialBasis& basis, std::size_t n, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> layer;
  for (Vertex v = 0; v < basis.graph().size(); ++v) {
    std::vector<std::uint32_t> e(basis.count(1), 0);
    e[v] = 1;
    layer.push_back(std::move(e));
  }
  auto add = [p](std::uint32_t a, std::uint32_t b) { return (a + b) % p; };
  auto sub = [p](std::uint32_t a, std::uint32_t b) { return (a + p - b) % p; };
  for (std::size_t k = 1; k < n; ++k) {
    EchelonModP ech(p);
    std::vector<std::vector<std::uint32_t>> next;
    for (Vertex v = 0; v < basis.graph().size(); ++v)
      for (const auto& x : layer) {
        auto y = bracket<std::uint32_t>(basis, k, v, x, add, sub);
        if (ech.insert(y)) next.push_back(std::move(y));
      }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

GradedDims lie_graded_dims(const Graph& g, std::size_t max_degree) {
  if (max_degree < 1) throw AlgebraError("max degree must be at least 1");
  GraphPtr gp = make_graph(g);
  try {
    return dims_over_q<long long>(gp, max_degree);
  } catch (const Overflow&) {
    return dims_over_q<boost::multiprecision::cpp_int>(gp, max_degree);
  }
}

GradedDims lie_graded_dims_mod(const Graph& g, std::size_t max_degree, std::uint32_t p) {
  if (max_degree < 1) throw AlgebraError("max degree must be at least 1");
  ModularRing check(p, 1);
  auto basis = MonomialBasis::shared(make_graph(g), max_degree);
  GradedDims out;
  for (std::size_t n = 1; n <= max_degree; ++n) out.dims.push_back(lie_layer_mod(*basis, n, p).size());
  return out;
}

bool lie_center_trivial_upto(const Graph& g, std::size_t max_degree, std::uint32_t p) {
  ModularRing check(p, 1);
  if (max_degree < 2) return true;
  auto basis = MonomialBasis::shared(make_graph(g), max_degree);
  auto add = [p](std::uint32_t a, std::uint32_t b) { return (a + b) % p; };
  auto sub = [p](std::uint32_t a, std::uint32_t b) { return (a + p - b) % p; };
  const std::size_t r = g.size();
  for (std::size_t n = 1; n + 1 <= max_degree; ++n) {
    auto layer = lie_layer_mod(*basis, n, p);
    if (layer.empty()) continue;
    // Columns: basis elements of L_n; rows: (v, monomial of degree n+1).
    const std::size_t block = basis->count(n + 1);
    modlin::ModMatrix m(layer.size(), r * block, p);
    for (std::size_t i = 0; i < layer.size(); ++i)
      for (Vertex v = 0; v < r; ++v) {
        auto y = bracket<std::uint32_t>(*basis, n, v, layer[i], add, sub);
        for (std::size_t k = 0; k < block; ++k) m.at(i, v * block + k) = y[k];
      }
    // Rank of the transpose equals rank; a deficit is a nonzero central element.
    if (modlin::rank_mod_prime(std::move(m)) < layer.size()) return false;
  }
  return true;
}

}  // namespace raag
