#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tga {

/// Permutation of {1..n} stored as an image word, n <= 12.  Slots beyond the
/// degree are padded with fixed points so that comparisons and hashing are
/// degree-independent within a fixed degree.
///
/// Composition is right-to-left: (p*q)(x) = p(q(x)).
class Perm {
public:
  static constexpr int kMaxDegree = 12;

  explicit Perm(int degree);
  static Perm identity(int degree) { return Perm(degree); }
  static Perm from_images(const std::vector<int>& images);
  static Perm transposition(int degree, int a, int b);

  // Parses cycle notation with whitespace-separated points, e.g. "(1 2 3)(4 5)".
  // "id" and "()" denote the identity.  Non-disjoint cycles compose right to left.
  static Perm parse(std::string_view text, int degree);

  int degree() const { return degree_; }
  int operator()(int point) const { return img_[point - 1]; }

  bool is_identity() const;

  Perm operator*(const Perm& q) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;  // g * (*this) * g^-1

  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, least point first
  std::vector<int> cycle_type() const;           // partition of n, descending
  int parity() const;                            // 0 even, 1 odd

  // Embeds into a larger symmetric group, new points fixed.
  Perm padded(int new_degree) const;
  // Restriction to {1..new_degree}; throws if a larger point moves.
  Perm restricted(int new_degree) const;

  uint64_t key() const;  // packed image word, usable as a hash/index key

  friend bool operator==(const Perm& p, const Perm& q) {
    return p.degree_ == q.degree_ && p.img_ == q.img_;
  }
  friend bool operator!=(const Perm& p, const Perm& q) { return !(p == q); }
  friend bool operator<(const Perm& p, const Perm& q) {
    return p.img_ < q.img_;  // lexicographic on image words
  }

  std::string str() const;  // cycle notation; identity prints "id"
  friend std::ostream& operator<<(std::ostream& os, const Perm& p);

private:
  std::array<uint8_t, kMaxDegree> img_;
  int degree_;
};

struct PermHash {
  size_t operator()(const Perm& p) const {
    uint64_t k = p.key();
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<size_t>(k);
  }
};

void check_same_degree(const Perm& p, const Perm& q);

}  // namespace tga
