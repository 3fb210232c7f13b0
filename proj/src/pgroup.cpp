#include "raag/pgroup.hpp"

namespace raag::pgroup {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > (std::uint64_t{1} << 40) / b) throw PGroupError("parameters too large");
    r *= b;
  }
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

}  // namespace

void validate(const WitnessParams& q) {
  if (!is_prime(q.p)) throw PGroupError("p must be prime");
  if (q.n < 2) throw PGroupError("n must be at least 2");
  if (q.r < 1 || q.r > q.n - 1) throw PGroupError("r must lie in 1..n-1");
  if (q.s < 1 || q.s > q.n - 1) throw PGroupError("s must lie in 1..n-1");
}

AlphaMatrix WitnessGroup::standard_alpha(const WitnessParams& q) {
  validate(q);
  const std::size_t m = ipow(q.p, q.r) + 1;
  AlphaMatrix a(m, std::vector<std::int64_t>(m, 0));
  // a[k] is the image of x_{k+1}, 0-based components.
  a[0][0] = 1, a[0][1] = 1, a[0][m - 1] = 1;
  for (std::size_t i = 1; i + 2 < m; ++i) a[i][i + 1] = 1;
  for (std::size_t j = 1; j + 1 < m; ++j) a[m - 2][j] = -1;
  a[m - 1][m - 1] = 1;
  return a;
}

WitnessGroup::WitnessGroup(WitnessParams params) : WitnessGroup(params, standard_alpha(params)) {}

WitnessGroup::WitnessGroup(WitnessParams params, AlphaMatrix alpha) : params_(params), alpha_(std::move(alpha)) {
  validate(params_);
  const std::size_t m = ipow(params_.p, params_.r) + 1;
  if (alpha_.size() != m) throw PGroupError("alpha matrix has the wrong size");
  for (const auto& col : alpha_)
    if (col.size() != m) throw PGroupError("alpha matrix has the wrong size");
  orders_.assign(m, ipow(params_.p, params_.s));
  orders_.front() = ipow(params_.p, params_.n);
  orders_.back() = ipow(params_.p, params_.r);
  alpha_period_ = ipow(params_.p, params_.r);
}

std::uint64_t WitnessGroup::order_of_a() const {
  std::uint64_t o = 1;
  for (auto k : orders_) o *= k;
  return o;
}

std::vector<std::uint64_t> WitnessGroup::reduce(std::vector<std::int64_t> v) const {
  std::vector<std::uint64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto q = static_cast<std::int64_t>(orders_[i]);
    std::int64_t r = v[i] % q;
    out[i] = static_cast<std::uint64_t>(r < 0 ? r + q : r);
  }
  return out;
}

PGroupElement WitnessGroup::identity() const { return {std::vector<std::uint64_t>(m(), 0), 0}; }

PGroupElement WitnessGroup::basis_vector(std::size_t k) const {
  PGroupElement e = identity();
  e.vector.at(k) = 1 % orders_[k];
  return e;
}

PGroupElement WitnessGroup::alpha_element() const {
  PGroupElement e = identity();
  e.alpha_exp = 1 % alpha_period_;
  return e;
}

std::vector<std::uint64_t> WitnessGroup::apply_alpha(const std::vector<std::uint64_t>& a, std::uint64_t times) const {
  std::vector<std::uint64_t> cur = a;
  for (std::uint64_t t = 0; t < times; ++t) {
    std::vector<std::int64_t> next(m(), 0);
    for (std::size_t k = 0; k < m(); ++k) {
      if (cur[k] == 0) continue;
      for (std::size_t j = 0; j < m(); ++j)
        next[j] += alpha_[k][j] * static_cast<std::int64_t>(cur[k]);
    }
    cur = reduce(std::move(next));
  }
  return cur;
}

std::uint64_t WitnessGroup::alpha_order() const {
  std::vector<std::vector<std::uint64_t>> images(m());
  for (std::size_t k = 0; k < m(); ++k) images[k] = basis_vector(k).vector;
  auto start = images;
  for (std::uint64_t k = 1; k <= order_of_a(); ++k) {
    for (auto& v : images) v = apply_alpha(v, 1);
    if (images == start) return k;
  }
  throw PGroupError("alpha is not invertible");
}

PGroupElement WitnessGroup::multiply(const PGroupElement& x, const PGroupElement& y) const {
  auto moved = apply_alpha(y.vector, x.alpha_exp);
  std::vector<std::int64_t> sum(m());
  for (std::size_t k = 0; k < m(); ++k) sum[k] = static_cast<std::int64_t>(x.vector[k] + moved[k]);
  return {reduce(std::move(sum)), (x.alpha_exp + y.alpha_exp) % alpha_period_};
}

PGroupElement WitnessGroup::inverse(const PGroupElement& x) const {
  // (a, i)^-1 = (-alpha^-i(a), -i); alpha^-i = alpha^(period - i).
  std::uint64_t back = (alpha_period_ - x.alpha_exp) % alpha_period_;
  auto moved = apply_alpha(x.vector, back);
  std::vector<std::int64_t> neg(m());
  for (std::size_t k = 0; k < m(); ++k) neg[k] = -static_cast<std::int64_t>(moved[k]);
  return {reduce(std::move(neg)), back};
}

PGroupElement WitnessGroup::power(const PGroupElement& x, std::uint64_t k) const {
  PGroupElement out = identity(), base = x;
  for (; k; k >>= 1) {
    if (k & 1) out = multiply(out, base);
    base = multiply(base, base);
  }
  return out;
}

PGroupElement WitnessGroup::phi(char generator) const {
  switch (generator) {
    case 'g':
      return basis_vector(0);
    case 'h': {
      PGroupElement e = basis_vector(0);
      e.vector.back() = 1 % orders_.back();
      return e;
    }
    case 't':
      return alpha_element();
  }
  throw PGroupError(std::string("unknown generator '") + generator + "'");
}

bool WitnessGroup::verify_relations() const {
  const auto& q = params_;
  PGroupElement g = phi('g'), h = phi('h'), t = phi('t'), one = identity();
  if (alpha_order() != alpha_period_) return false;  // alpha must have the period B is built with
  std::uint64_t pn = ipow(q.p, q.n), pr = ipow(q.p, q.r), ps = ipow(q.p, q.s);
  if (power(g, pn) != one || power(h, pn) != one) return false;
  if (power(g, pr) != power(h, pr)) return false;
  return multiply(multiply(t, power(g, ps)), inverse(t)) == power(h, ps);
}

std::vector<PGroupElement> WitnessGroup::elements() const {
  if (order() > kEnumerationLimit) throw PGroupError("group too large to enumerate");
  std::vector<PGroupElement> out;
  PGroupElement e = identity();
  while (true) {
    out.push_back(e);
    std::size_t k = 0;
    for (; k < m(); ++k) {
      if (++e.vector[k] < orders_[k]) break;
      e.vector[k] = 0;
    }
    if (k < m()) continue;
    if (++e.alpha_exp == alpha_period_) break;
  }
  return out;
}

std::set<PGroupElement> WitnessGroup::conjugacy_class(const PGroupElement& x) const {
  std::set<PGroupElement> cls;
  for (const auto& y : elements()) cls.insert(multiply(multiply(y, x), inverse(y)));
  return cls;
}

std::string WitnessGroup::format(const PGroupElement& x) const {
  std::string out = "(";
  for (std::size_t k = 0; k < x.vector.size(); ++k) out += (k ? "," : "") + std::to_string(x.vector[k]);
  return out + "; alpha^" + std::to_string(x.alpha_exp) + ")";
}

}  // namespace raag::pgroup
