#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace raag::pgroup {

class PGroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WitnessParams {
  std::uint64_t p = 2;
  std::uint64_t n = 2;
  std::uint64_t r = 1;
  std::uint64_t s = 1;
};

// (a, i) with a in A written additively and i the exponent of alpha.
struct PGroupElement {
  std::vector<std::uint64_t> vector;
  std::uint64_t alpha_exp = 0;
  friend auto operator<=>(const PGroupElement&, const PGroupElement&) = default;
};

// Images of x_1..x_m under an automorphism of A; column k is the image of x_{k+1}.
using AlphaMatrix = std::vector<std::vector<std::int64_t>>;

inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 20;

// B = A ⋊ <alpha> with A = C_{p^n} x C_{p^s}^{p^r - 1} x C_{p^r}.
class WitnessGroup {
 public:
  explicit WitnessGroup(WitnessParams params);
  // Same group shape with a caller-supplied alpha (for negative controls).
  WitnessGroup(WitnessParams params, AlphaMatrix alpha);

  static AlphaMatrix standard_alpha(const WitnessParams& params);

  const WitnessParams& params() const { return params_; }
  std::size_t m() const { return orders_.size(); }
  const std::vector<std::uint64_t>& component_orders() const { return orders_; }
  std::uint64_t alpha_period() const { return alpha_period_; }
  std::uint64_t order_of_a() const;
  std::uint64_t order() const { return order_of_a() * alpha_period_; }

  PGroupElement identity() const;
  PGroupElement basis_vector(std::size_t k) const;  // x_{k+1}
  PGroupElement alpha_element() const;
  PGroupElement multiply(const PGroupElement& x, const PGroupElement& y) const;
  PGroupElement inverse(const PGroupElement& x) const;
  PGroupElement power(const PGroupElement& x, std::uint64_t k) const;

  std::vector<std::uint64_t> apply_alpha(const std::vector<std::uint64_t>& a, std::uint64_t times) const;
  // Least k >= 1 with alpha^k = id on A.
  std::uint64_t alpha_order() const;

  PGroupElement phi(char generator) const;  // 'g', 'h' or 't'
  bool verify_relations() const;

  std::vector<PGroupElement> elements() const;
  std::set<PGroupElement> conjugacy_class(const PGroupElement& x) const;
  std::string format(const PGroupElement& x) const;

 private:
  std::vector<std::uint64_t> reduce(std::vector<std::int64_t> v) const;

  WitnessParams params_;
  std::vector<std::uint64_t> orders_;
  std::uint64_t alpha_period_ = 1;
  AlphaMatrix alpha_;
};

void validate(const WitnessParams& params);

}  // namespace raag::pgroup
