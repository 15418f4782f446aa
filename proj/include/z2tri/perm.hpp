#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace z2tri {

// Permutation of the vertex labels {0,1,2,3} of a tetrahedron.
class Perm4 {
public:
  constexpr Perm4() : image_{0, 1, 2, 3} {}
  constexpr Perm4(int a, int b, int c, int d)
      : image_{static_cast<uint8_t>(a), static_cast<uint8_t>(b), static_cast<uint8_t>(c),
               static_cast<uint8_t>(d)} {}

  constexpr int operator[](int i) const { return image_[i]; }

  constexpr Perm4 inverse() const {
    Perm4 out;
    for (int i = 0; i < 4; ++i) out.image_[image_[i]] = static_cast<uint8_t>(i);
    return out;
  }

  // (*this * other)[i] == (*this)[other[i]]
  constexpr Perm4 operator*(const Perm4& other) const {
    Perm4 out;
    for (int i = 0; i < 4; ++i) out.image_[i] = image_[other.image_[i]];
    return out;
  }

  constexpr int sign() const {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (image_[i] > image_[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
  }

  constexpr bool operator==(const Perm4&) const = default;
  constexpr auto operator<=>(const Perm4&) const = default;

  // Index in [0, 24) following lexicographic order of the image strings.
  int index() const;
  static Perm4 from_index(int idx);

  // Four-character image string, e.g. "0132".
  std::string str() const;
  static std::optional<Perm4> parse(std::string_view text);

private:
  std::array<uint8_t, 4> image_;
};

// The 24 permutations in lexicographic order.
const std::array<Perm4, 24>& all_perms();

} // namespace z2tri
