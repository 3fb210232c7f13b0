#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace raag::modlin {

// Dense row-major matrix over Z/modulus with entries kept reduced.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus)
      : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return modulus_; }

  std::uint32_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<std::uint32_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  // Stores an arbitrary integer reduced into [0, modulus).
  void set(std::size_t i, std::size_t j, long long value);
  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_, cols_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> data_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t modulus);

// Rank over the field Z/p.
std::size_t rank_mod_prime(ModMatrix a);

// Whether A u = b has a solution over Z/p^m (A's modulus must be p^m).
bool solvable_prime_power(ModMatrix a, std::span<const std::uint32_t> b, std::uint32_t p);

}  // namespace raag::modlin
