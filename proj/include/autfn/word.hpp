#pragma once

// Freely reduced words over the signed basis a1..an of a free group.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace autfn {

/// A basis letter a_k (positive) or its inverse (negative), stored as +k / -k.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int index, int sign) : value_(sign < 0 ? -index : index) {}

  static constexpr Letter from_value(int value) {
    Letter l;
    l.value_ = value;
    return l;
  }

  constexpr int index() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr int value() const { return value_; }
  constexpr bool positive() const { return value_ > 0; }
  constexpr Letter inverse() const { return from_value(-value_); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  int value_ = 0;
};

/// The letter a_k.
constexpr Letter gen(int k) { return Letter(k, +1); }
/// The letter a_k^-1.
constexpr Letter bar(int k) { return Letter(k, -1); }

inline std::string to_string(Letter l) {
  std::string s = "a" + std::to_string(l.index());
  if (!l.positive()) s += "^-";
  return s;
}

/// Element of F_n, always kept freely reduced so that equality is
/// structural. The rank travels with the word and mixing ranks throws.
class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(rank) {
    if (rank < 1) throw std::domain_error("free group rank must be positive");
  }

  /// Reduces an arbitrary letter sequence.
  Word(int rank, std::span<const Letter> raw) : Word(rank) {
    letters_.reserve(raw.size());
    for (Letter l : raw) push_back(l);
  }
  Word(int rank, std::initializer_list<Letter> raw)
      : Word(rank, std::span<const Letter>(raw.begin(), raw.size())) {}

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Appends one letter, cancelling against the last letter if they are
  /// mutually inverse.
  void push_back(Letter l) {
    check_letter(l);
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  /// In-place right multiplication by another reduced word.
  void append(const Word& w) {
    check_rank(w);
    std::size_t i = 0;
    while (i < w.size() && !letters_.empty() &&
           letters_.back() == w[i].inverse()) {
      letters_.pop_back();
      ++i;
    }
    letters_.insert(letters_.end(), w.letters_.begin() + i, w.letters_.end());
  }

  /// In-place right multiplication by the inverse of a reduced word.
  void append_inverse(const Word& w) {
    check_rank(w);
    std::size_t i = w.size();
    while (i > 0 && !letters_.empty() && letters_.back() == w[i - 1]) {
      letters_.pop_back();
      --i;
    }
    for (; i > 0; --i) letters_.push_back(w[i - 1].inverse());
  }

  void check_rank(const Word& other) const {
    if (other.rank_ != rank_) {
      throw std::invalid_argument("rank mismatch: F_" + std::to_string(rank_) +
                                  " vs F_" + std::to_string(other.rank_));
    }
  }

  void check_letter(Letter l) const {
    if (l.index() < 1 || l.index() > rank_) {
      throw std::domain_error("letter index " + std::to_string(l.index()) +
                              " out of range for rank " +
                              std::to_string(rank_));
    }
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int rank_ = 1;
  std::vector<Letter> letters_;
};

inline Word reduce(int rank, std::span<const Letter> raw) {
  return Word(rank, raw);
}

inline Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.append(v);
  return r;
}

inline Word invert_word(const Word& w) {
  Word r(w.rank());
  r.append_inverse(w);
  return r;
}

/// The word x^k for a single letter x (k may be negative).
inline Word letter_power(int rank, Letter x, long k) {
  Word r(rank);
  Letter step = k < 0 ? x.inverse() : x;
  for (long i = 0; i < std::labs(k); ++i) r.push_back(step);
  return r;
}

struct CyclicDecomposition {
  Word core;
  Word conjugator;
};

/// Splits w as conjugator^-1 * core * conjugator with core cyclically
/// reduced.
inline CyclicDecomposition cyclically_reduce(const Word& w) {
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  Word core(w.rank(), letters.subspan(lo, hi - lo));
  Word conj(w.rank(), letters.subspan(hi));
  return {std::move(core), std::move(conj)};
}

inline bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.front() != w.back().inverse();
}

/// `a1 a2^-`, or `1` for the empty word.
inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w[i]);
  }
  return s;
}

}  // namespace autfn
