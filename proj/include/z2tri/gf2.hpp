#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace z2tri {

// Fixed-length vector over Z/2, packed 64 bits per word.
class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const uint64_t mask = uint64_t{1} << (i % 64);
    if (value)
      words_[i / 64] |= mask;
    else
      words_[i / 64] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / 64] ^= uint64_t{1} << (i % 64); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;
  // Index of the lowest set bit, or size() if none.
  std::size_t first_set() const;

  bool operator==(const BitVector&) const = default;
  auto operator<=>(const BitVector&) const = default;

  // "0101..." with bit 0 first.
  std::string str() const;

private:
  std::size_t size_ = 0;
  std::vector<uint64_t> words_;
};

// Dense matrix over Z/2 stored as packed rows.
class Gf2Matrix {
public:
  Gf2Matrix(std::size_t rows, std::size_t cols);
  explicit Gf2Matrix(std::size_t cols) : cols_(cols) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  void add_row(BitVector row);
  BitVector& row(std::size_t i) { return rows_[i]; }
  const BitVector& row(std::size_t i) const { return rows_[i]; }

  // Reduced row echelon form in place: pivots are taken leftmost-first, using
  // the first remaining row with a nonzero entry. Returns pivot columns.
  std::vector<std::size_t> row_reduce();

  std::size_t rank() const;

  // Basis of {x : A x = 0}, one vector per free column in increasing order.
  std::vector<BitVector> nullspace() const;

private:
  std::size_t cols_;
  std::vector<BitVector> rows_;
};

// Incremental independence test against a growing span.
class Gf2Span {
public:
  explicit Gf2Span(std::size_t dim) : dim_(dim) {}

  // Reduces v against the span; returns the residue (zero iff v in span).
  BitVector reduce(BitVector v) const;
  // Inserts v if independent; returns whether it was inserted.
  bool insert(const BitVector& v);
  std::size_t dimension() const { return basis_.size(); }

private:
  std::size_t dim_;
  std::vector<BitVector> basis_; // each with a distinct leading bit
  std::vector<std::size_t> lead_;
};

} // namespace z2tri
