#include "z2tri/perm.hpp"

#include <algorithm>

namespace z2tri {

const std::array<Perm4, 24>& all_perms() {
  static const std::array<Perm4, 24> perms = [] {
    std::array<Perm4, 24> out{};
    std::array<int, 4> img{0, 1, 2, 3};
    int i = 0;
    do {
      out[i++] = Perm4(img[0], img[1], img[2], img[3]);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }();
  return perms;
}

int Perm4::index() const {
  const auto& perms = all_perms();
  return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), *this) - perms.begin());
}

Perm4 Perm4::from_index(int idx) { return all_perms().at(idx); }

std::string Perm4::str() const {
  std::string s(4, '0');
  for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + image_[i]);
  return s;
}

std::optional<Perm4> Perm4::parse(std::string_view text) {
  if (text.size() != 4) return std::nullopt;
  std::array<int, 4> img{};
  unsigned seen = 0;
  for (int i = 0; i < 4; ++i) {
    int d = text[i] - '0';
    if (d < 0 || d > 3 || (seen & (1u << d))) return std::nullopt;
    seen |= 1u << d;
    img[i] = d;
  }
  return Perm4(img[0], img[1], img[2], img[3]);
}

} // namespace z2tri
