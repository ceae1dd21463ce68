#pragma once

// Automorphisms of F_n stored as basis images plus inverse basis images.
// Composition is left to right: x(fg) = g(f(x)).

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "autfn/permutation.hpp"
#include "autfn/word.hpp"

namespace autfn {

/// Substitutes images[k-1] for a_k (and its inverse for a_k^-1) and reduces.
inline Word substitute(std::span<const Word> images, const Word& w) {
  Word r(images.empty() ? w.rank() : images.front().rank());
  if (static_cast<int>(images.size()) != w.rank()) {
    throw std::invalid_argument("rank mismatch in substitution");
  }
  for (Letter l : w) {
    const Word& img = images[l.index() - 1];
    if (l.positive()) {
      r.append(img);
    } else {
      r.append_inverse(img);
    }
  }
  return r;
}

class FreeAutomorphism {
 public:
  FreeAutomorphism() = default;

  /// Caller guarantees the two image lists are mutually inverse; use
  /// is_consistent() to check.
  FreeAutomorphism(std::vector<Word> images, std::vector<Word> inverse_images)
      : images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
    if (images_.empty() || images_.size() != inverse_images_.size()) {
      throw std::invalid_argument("automorphism needs n images and n inverses");
    }
    for (const Word& w : images_) check_word(w);
    for (const Word& w : inverse_images_) check_word(w);
  }

  static FreeAutomorphism identity(int rank) {
    std::vector<Word> imgs;
    imgs.reserve(rank);
    for (int k = 1; k <= rank; ++k) imgs.push_back(Word(rank, {gen(k)}));
    return FreeAutomorphism(imgs, imgs);
  }

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<Word>& inverse_images() const { return inverse_images_; }
  const Word& image(int k) const { return images_.at(k - 1); }

  Word apply(const Word& w) const { return substitute(images_, w); }
  Word apply(Letter l) const {
    const Word& img = images_.at(l.index() - 1);
    return l.positive() ? img : invert_word(img);
  }
  Word apply_inverse(const Word& w) const {
    return substitute(inverse_images_, w);
  }

  FreeAutomorphism inverse() const {
    return FreeAutomorphism(inverse_images_, images_);
  }

  /// Both image lists undo each other on every basis letter.
  bool is_consistent() const {
    for (int k = 1; k <= rank(); ++k) {
      Word a(rank(), {gen(k)});
      if (substitute(inverse_images_, images_[k - 1]) != a) return false;
      if (substitute(images_, inverse_images_[k - 1]) != a) return false;
    }
    return true;
  }

  bool is_identity() const {
    for (int k = 1; k <= rank(); ++k) {
      const Word& w = images_[k - 1];
      if (w.size() != 1 || w[0] != gen(k)) return false;
    }
    return true;
  }

  void check_rank(const FreeAutomorphism& other) const {
    if (other.rank() != rank()) {
      throw std::invalid_argument("rank mismatch: F_" +
                                  std::to_string(rank()) + " vs F_" +
                                  std::to_string(other.rank()));
    }
  }

  /// Images alone determine the map.
  friend bool operator==(const FreeAutomorphism& f, const FreeAutomorphism& g) {
    f.check_rank(g);
    return f.images_ == g.images_;
  }

 private:
  void check_word(const Word& w) const {
    if (w.rank() != static_cast<int>(images_.size())) {
      throw std::invalid_argument("image word has wrong rank");
    }
  }

  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
};

inline Word apply(const FreeAutomorphism& f, const Word& w) {
  return f.apply(w);
}

inline FreeAutomorphism invert_aut(const FreeAutomorphism& f) {
  return f.inverse();
}

inline bool equal(const FreeAutomorphism& f, const FreeAutomorphism& g) {
  return f == g;
}

/// f then g.
inline FreeAutomorphism compose(const FreeAutomorphism& f,
                                const FreeAutomorphism& g) {
  f.check_rank(g);
  std::vector<Word> imgs;
  std::vector<Word> invs;
  imgs.reserve(f.rank());
  invs.reserve(f.rank());
  for (const Word& w : f.images()) imgs.push_back(g.apply(w));
  for (const Word& w : g.inverse_images()) invs.push_back(f.apply_inverse(w));
  return FreeAutomorphism(std::move(imgs), std::move(invs));
}

inline FreeAutomorphism operator*(const FreeAutomorphism& f,
                                  const FreeAutomorphism& g) {
  return compose(f, g);
}

/// Left-to-right product of a list of automorphisms.
inline FreeAutomorphism product(std::span<const FreeAutomorphism> factors,
                                int rank) {
  FreeAutomorphism r = FreeAutomorphism::identity(rank);
  for (const FreeAutomorphism& f : factors) r = compose(r, f);
  return r;
}

inline FreeAutomorphism product(
    std::initializer_list<FreeAutomorphism> factors) {
  if (factors.size() == 0) throw std::invalid_argument("empty product");
  return product(std::span(factors.begin(), factors.size()),
                 factors.begin()->rank());
}

inline FreeAutomorphism power(const FreeAutomorphism& f, long k) {
  FreeAutomorphism base = k < 0 ? f.inverse() : f;
  FreeAutomorphism r = FreeAutomorphism::identity(f.rank());
  for (long i = 0; i < (k < 0 ? -k : k); ++i) r = compose(r, base);
  return r;
}

/// [f, g] = f g f^-1 g^-1.
inline FreeAutomorphism commutator(const FreeAutomorphism& f,
                                   const FreeAutomorphism& g) {
  return product({f, g, f.inverse(), g.inverse()});
}

/// g^h = h^-1 g h.
inline FreeAutomorphism conjugate(const FreeAutomorphism& g,
                                  const FreeAutomorphism& h) {
  return product({h.inverse(), g, h});
}

/// The Nielsen map E_ab: a -> ab, every other letter of E fixed.
inline FreeAutomorphism nielsen(Letter a, Letter b, int rank) {
  if (a.index() == b.index()) {
    throw std::invalid_argument("invalid Nielsen pair (" + to_string(a) + "," +
                                to_string(b) + ")");
  }
  if (a.index() < 1 || a.index() > rank || b.index() < 1 ||
      b.index() > rank) {
    throw std::domain_error("Nielsen letter out of range for rank " +
                            std::to_string(rank));
  }
  auto images_for = [&](Letter right) {
    std::vector<Word> imgs;
    imgs.reserve(rank);
    for (int k = 1; k <= rank; ++k) imgs.push_back(Word(rank, {gen(k)}));
    // a -> a right; for a = x^-1 this is x -> right^-1 x.
    Word& img = imgs[a.index() - 1];
    img = a.positive() ? Word(rank, {a, right})
                       : Word(rank, {right.inverse(), a.inverse()});
    return imgs;
  };
  return FreeAutomorphism(images_for(b), images_for(b.inverse()));
}

/// w_ab = E_ba E_{a^-1 b} E_{b^-1 a^-1}; acts as a -> b^-1, b -> a.
inline FreeAutomorphism w_map(Letter a, Letter b, int rank) {
  return product({nielsen(b, a, rank), nielsen(a.inverse(), b, rank),
                  nielsen(b.inverse(), a.inverse(), rank)});
}

/// a_i -> a_{pi(i)} for i >= 2; a1 -> a1 or a1^-1, whichever makes the
/// determinant +1. pi must fix the point 1.
inline FreeAutomorphism signed_permutation(const Permutation& pi) {
  const int rank = pi.degree();
  if (rank < 1 || pi(1) != 1) {
    throw std::invalid_argument("signed permutation must fix the point 1");
  }
  const int s = pi.sign();
  auto images_for = [&](const Permutation& p) {
    std::vector<Word> imgs;
    imgs.reserve(rank);
    imgs.push_back(Word(rank, {Letter(1, s)}));
    for (int k = 2; k <= rank; ++k) imgs.push_back(Word(rank, {gen(p(k))}));
    return imgs;
  };
  return FreeAutomorphism(images_for(pi), images_for(pi.inverse()));
}

/// The inner automorphism x -> g^-1 x g.
inline FreeAutomorphism inner(const Word& g) {
  const int rank = g.rank();
  auto images_for = [&](const Word& c) {
    std::vector<Word> imgs;
    imgs.reserve(rank);
    for (int k = 1; k <= rank; ++k) {
      Word w = invert_word(c);
      w.push_back(gen(k));
      w.append(c);
      imgs.push_back(std::move(w));
    }
    return imgs;
  };
  return FreeAutomorphism(images_for(g), images_for(invert_word(g)));
}

/// Looks for g with images[k] = g^-1 a_k g for every k. Only forward images
/// are consulted, so this also works on maps not yet known to be bijective.
inline std::optional<Word> find_inner_conjugator(std::span<const Word> images) {
  if (images.empty()) return std::nullopt;
  const int rank = static_cast<int>(images.size());
  auto [core, u] = cyclically_reduce(images[0]);
  if (core.size() != 1 || core[0] != gen(1)) return std::nullopt;

  Word g(rank);
  if (rank >= 2) {
    // Undo conjugation by u on a2's image; what is left must be a1^-k a2 a1^k.
    Word rest = u;
    rest.append(images[1]);
    rest.append_inverse(u);
    auto letters = rest.letters();
    std::size_t mid = 0;
    while (mid < letters.size() && letters[mid].index() == 1) ++mid;
    if (mid >= letters.size() || letters[mid] != gen(2) ||
        letters.size() != 2 * mid + 1) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < mid; ++i) {
      if (letters[i] != letters[0] || letters[mid + 1 + i] != letters[0].inverse()) {
        return std::nullopt;
      }
    }
    // prefix is (a1^k)^-1
    if (mid > 0) g = letter_power(rank, letters[0].inverse(), static_cast<long>(mid));
  }
  g.append(u);

  for (int k = 1; k <= rank; ++k) {
    Word expect = invert_word(g);
    expect.push_back(gen(k));
    expect.append(g);
    if (expect != images[k - 1]) return std::nullopt;
  }
  return g;
}

/// A word g with f = inner(g), or nothing if f is not inner.
inline std::optional<Word> is_inner(const FreeAutomorphism& f) {
  return find_inner_conjugator(f.images());
}

/// Exact integer matrix; rows are exponent-sum vectors of basis images.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, 0) {}

  static IntegerMatrix identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int r, int c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(int r, int c) const { return data_[r * cols_ + c]; }

  friend IntegerMatrix operator*(const IntegerMatrix& a,
                                 const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntegerMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        std::int64_t x = a(i, k);
        if (x == 0) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
      }
    return r;
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

inline IntegerMatrix abelianize(const FreeAutomorphism& f) {
  IntegerMatrix m(f.rank(), f.rank());
  for (int i = 0; i < f.rank(); ++i) {
    for (Letter l : f.images()[i]) m(i, l.index() - 1) += l.sign();
  }
  return m;
}

using BigInt = boost::multiprecision::cpp_int;

/// Bareiss fraction-free elimination; exact for any entry sizes.
inline BigInt determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  const int n = m.rows();
  if (n == 0) return 1;
  std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  auto at = [&](int i, int j) -> BigInt& { return a[i * n + j]; };

  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (at(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

inline bool is_special(const FreeAutomorphism& f) {
  return determinant(abelianize(f)) == 1;
}

/// One line per basis letter: `a1 -> a1 a2`.
inline std::string to_string(const FreeAutomorphism& f) {
  std::string s;
  for (int k = 1; k <= f.rank(); ++k) {
    s += "a" + std::to_string(k) + " -> " + to_string(f.image(k)) + "\n";
  }
  return s;
}

}  // namespace autfn
