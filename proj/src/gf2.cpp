#include "z2tri/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace z2tri {

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::any() const {
  for (uint64_t w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return size_;
}

std::string BitVector::str() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

void Gf2Matrix::add_row(BitVector row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  rows_.push_back(std::move(row));
}

std::vector<std::size_t> Gf2Matrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < cols_ && next_row < rows_.size(); ++c) {
    std::size_t r = next_row;
    while (r < rows_.size() && !rows_[r].get(c)) ++r;
    if (r == rows_.size()) continue;
    std::swap(rows_[r], rows_[next_row]);
    for (std::size_t other = 0; other < rows_.size(); ++other)
      if (other != next_row && rows_[other].get(c)) rows_[other] ^= rows_[next_row];
    pivots.push_back(c);
    ++next_row;
  }
  return pivots;
}

std::size_t Gf2Matrix::rank() const {
  Gf2Matrix copy = *this;
  return copy.row_reduce().size();
}

std::vector<BitVector> Gf2Matrix::nullspace() const {
  Gf2Matrix m = *this;
  const auto pivots = m.row_reduce();
  std::vector<char> is_pivot(cols_, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(cols_);
    v.set(free);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (m.rows_[i].get(free)) v.set(pivots[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

BitVector Gf2Span::reduce(BitVector v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v.get(lead_[i])) v ^= basis_[i];
  return v;
}

bool Gf2Span::insert(const BitVector& v) {
  if (v.size() != dim_) throw std::invalid_argument("span dimension mismatch");
  BitVector r = reduce(v);
  const std::size_t lead = r.first_set();
  if (lead == r.size()) return false;
  // Keep every stored vector free of the other leading bits.
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].get(lead)) basis_[i] ^= r;
  basis_.push_back(std::move(r));
  lead_.push_back(lead);
  return true;
}

} // namespace z2tri
