#pragma once

// Permutations of {1..degree}, multiplied left to right: i^(pq) = (i^p)^q.

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace autfn {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree) : image_(static_cast<std::size_t>(degree)) {
    for (int i = 0; i < degree; ++i) image_[i] = i + 1;
  }

  /// images[i - 1] is the image of point i.
  static Permutation from_images(std::vector<int> images) {
    Permutation p;
    p.image_ = std::move(images);
    std::vector<bool> seen(p.image_.size() + 1, false);
    for (int v : p.image_) {
      if (v < 1 || v > p.degree() || seen[v]) {
        throw std::invalid_argument("images do not form a permutation");
      }
      seen[v] = true;
    }
    return p;
  }

  /// The cycle (c0, c1, ..., ck) acting on points 1..degree.
  static Permutation cycle(int degree, std::initializer_list<int> points) {
    return cycle(degree, std::vector<int>(points));
  }
  static Permutation cycle(int degree, const std::vector<int>& points) {
    Permutation p(degree);
    for (std::size_t i = 0; i < points.size(); ++i) {
      int from = points[i];
      int to = points[(i + 1) % points.size()];
      if (from < 1 || from > degree) {
        throw std::invalid_argument("cycle point out of range");
      }
      if (p.image_[from - 1] != from) {
        throw std::invalid_argument("cycle repeats a point");
      }
      p.image_[from - 1] = to;
    }
    return p;
  }

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int point) const { return image_[point - 1]; }
  const std::vector<int>& images() const { return image_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i) {
      if (image_[i] != i + 1) return false;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation r(degree());
    for (int i = 1; i <= degree(); ++i) r.image_[(*this)(i) - 1] = i;
    return r;
  }

  /// Apply this, then q.
  Permutation then(const Permutation& q) const {
    if (q.degree() != degree()) {
      throw std::invalid_argument("permutation degree mismatch");
    }
    Permutation r(degree());
    for (int i = 1; i <= degree(); ++i) r.image_[i - 1] = q((*this)(i));
    return r;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    return p.then(q);
  }

  /// +1 for even, -1 for odd.
  int sign() const {
    std::vector<bool> seen(image_.size(), false);
    int transpositions = 0;
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = image_[j] - 1) {
        seen[j] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
  }

  bool is_transposition() const {
    int moved = 0;
    for (int i = 0; i < degree(); ++i) {
      if (image_[i] != i + 1) ++moved;
    }
    return moved == 2;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Disjoint cycle notation, `()` for the identity.
inline std::string to_string(const Permutation& p) {
  std::string s;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()) + 1, false);
  for (int i = 1; i <= p.degree(); ++i) {
    if (seen[i] || p(i) == i) continue;
    s += '(';
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      if (j != i) s += ',';
      s += std::to_string(j);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace autfn
