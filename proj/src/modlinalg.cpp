#include "raag/modlinalg.hpp"

#include <stdexcept>
#include <tuple>

#include "raag/simd/kernels.hpp"

namespace raag::modlin {

void ModMatrix::set(std::size_t i, std::size_t j, long long value) {
  long long q = modulus_;
  long long r = value % q;
  at(i, j) = static_cast<std::uint32_t>(r < 0 ? r + q : r);
}

void ModMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = row(a), rb = row(b);
  for (std::size_t j = 0; j < cols_; ++j) std::swap(ra[j], rb[j]);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t modulus) {
  long long t = 0, nt = 1, r = modulus, nr = a % modulus;
  while (nr != 0) {
    long long k = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - k * nt);
    std::tie(r, nr) = std::make_pair(nr, r - k * nr);
  }
  if (r != 1) throw std::domain_error("element is not a unit");
  return static_cast<std::uint32_t>(t < 0 ? t + modulus : t);
}

namespace {

// Clears column j below row r using the pivot a(r,j) = pivot_value.
void eliminate_below(ModMatrix& a, std::size_t r, std::size_t j, std::uint32_t pivot_value) {
  const std::uint32_t q = a.modulus();
  auto src = a.row(r);
  for (std::size_t i = r + 1; i < a.rows(); ++i) {
    std::uint32_t e = a.at(i, j);
    if (e == 0) continue;
    std::uint32_t f = e / pivot_value;
    simd::axpy_mod(a.row(i), src, q - f, q);
  }
}

}  // namespace

std::size_t rank_mod_prime(ModMatrix a) {
  const std::uint32_t q = a.modulus();
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, j) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, r);
    simd::scale_mod(a.row(r), inverse_mod(a.at(r, j), q), q);
    eliminate_below(a, r, j, 1);
    ++r;
  }
  return r;
}

bool solvable_prime_power(ModMatrix a, std::span<const std::uint32_t> b, std::uint32_t p) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  const std::uint32_t q = a.modulus();
  unsigned m = 0;
  for (std::uint32_t x = q; x > 1; x /= p) {
    if (x % p != 0) throw std::invalid_argument("modulus is not a power of p");
    ++m;
  }
  // Augment so the right-hand side rides along with the row operations.
  const std::size_t n = a.cols();
  ModMatrix aug(a.rows(), n + 1, q);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i] % q;
  }
  auto valuation = [&](std::uint32_t x) {
    unsigned v = 0;
    while (x != 0 && x % p == 0 && v < m) x /= p, ++v;
    return x == 0 ? m : v;
  };

  std::vector<bool> used(n, false);
  std::size_t r = 0;
  unsigned floor = 0;
  while (r < aug.rows() && floor < m) {
    std::uint32_t pp = 1;
    for (unsigned k = 0; k < floor; ++k) pp *= p;
    std::size_t pi = aug.rows(), pj = n;
    for (std::size_t j = 0; j < n && pi == aug.rows(); ++j) {
      if (used[j]) continue;
      for (std::size_t i = r; i < aug.rows(); ++i) {
        std::uint32_t e = aug.at(i, j);
        if (e != 0 && valuation(e) == floor) {
          pi = i, pj = j;
          break;
        }
      }
    }
    if (pi == aug.rows()) {
      ++floor;  // valuations below never reappear under these row operations
      continue;
    }
    aug.swap_rows(pi, r);
    simd::scale_mod(aug.row(r), inverse_mod(aug.at(r, pj) / pp, q), q);
    eliminate_below(aug, r, pj, pp);
    // Pivot p^v * y + (multiples of p^v) = rhs needs p^v | rhs.
    if (aug.at(r, n) % pp != 0) return false;
    used[pj] = true;
    ++r;
  }
  for (std::size_t i = r; i < aug.rows(); ++i)
    if (aug.at(i, n) != 0) return false;
  return true;
}

}  // namespace raag::modlin
