#pragma once

// Builders for the Gersten, linear-length, short Aut+ and Out+ presentations
// of the special automorphism group of F_n, with their canonical assignments
// (Nielsen symbols to Nielsen maps, provider symbols to signed permutations).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "autfn/automorphism.hpp"
#include "autfn/permutation.hpp"
#include "autfn/presentation.hpp"
#include "autfn/symmetric_provider.hpp"

namespace autfn {

struct BuiltPresentation {
  Presentation presentation;
  Assignment assignment;
};

/// Generator count, relator count and length, without materializing.
struct PresentationShape {
  std::size_t generators = 0;
  std::size_t relators = 0;
  std::size_t length = 0;
  friend bool operator==(const PresentationShape&,
                         const PresentationShape&) = default;
};

inline PresentationShape shape_of(const Presentation& p) {
  return {p.generators().size(), p.relators().size(), length(p)};
}

/// All 2n signed letters a1, a1^-, ..., an, an^- of the given index range.
inline std::vector<Letter> signed_letters(int first, int last) {
  std::vector<Letter> out;
  for (int k = first; k <= last; ++k) {
    out.push_back(gen(k));
    out.push_back(bar(k));
  }
  return out;
}

/// x is neither y nor y^-1.
inline bool distinct_up_to_sign(Letter x, Letter y) {
  return x.index() != y.index();
}

namespace detail {

/// Formal words over a presentation's generators, built by index lookup.
class WordBuilder {
 public:
  explicit WordBuilder(const Presentation& p) : p_(p) {}

  Relator e(Letter a, Letter b) const {
    return {{p_.id(NielsenGen{a, b}), 1}};
  }
  Relator sym(const std::string& name) const { return {{p_.id(SymGen{name}), 1}}; }
  Relator aux(const std::string& name) const { return {{p_.id(AuxGen{name}), 1}}; }

  /// E_bc itself when it is a generator; otherwise the commutator
  /// [E_{b a1}, E_{a1 c}].
  Relator nielsen_word(Letter b, Letter c) const {
    if (p_.find(NielsenGen{b, c}) || b.index() == 1 || c.index() == 1) {
      return e(b, c);
    }
    return comm(e(b, gen(1)), e(gen(1), c));
  }

  /// w_ab = E_ba E_{a^- b} E_{b^- a^-}.
  Relator w(Letter a, Letter b) const {
    return cat({nielsen_word(b, a), nielsen_word(a.inverse(), b),
                nielsen_word(b.inverse(), a.inverse())});
  }

  static Relator inv(const Relator& r) { return formal_inverse(r); }

  static Relator cat(std::initializer_list<Relator> parts) {
    Relator out;
    for (const Relator& r : parts) out.insert(out.end(), r.begin(), r.end());
    return out;
  }

  static Relator pow(const Relator& r, int k) {
    Relator out;
    for (int i = 0; i < k; ++i) out.insert(out.end(), r.begin(), r.end());
    return out;
  }

  /// [x, y] = x y x^-1 y^-1.
  static Relator comm(const Relator& x, const Relator& y) {
    return cat({x, y, inv(x), inv(y)});
  }

  /// Relation lhs = rhs, as the relator lhs rhs^-1.
  static Relator eq(const Relator& lhs, const Relator& rhs) {
    return cat({lhs, inv(rhs)});
  }

 private:
  const Presentation& p_;
};

inline void require_rank(int n, int min, const char* family) {
  if (n < min) {
    throw std::invalid_argument(std::string(family) + " requires n >= " +
                                std::to_string(min) + ", got " +
                                std::to_string(n));
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Gersten: all E_ab, with the five families of relations.

inline Presentation gersten_presentation(int n) {
  detail::require_rank(n, 3, "gersten");
  Presentation p(n);
  p.metadata().family = "gersten";
  const auto E = signed_letters(1, n);
  for (Letter a : E)
    for (Letter b : E)
      if (distinct_up_to_sign(a, b)) p.add_generator(NielsenGen{a, b});

  detail::WordBuilder W(p);
  using detail::WordBuilder;
  // E_ab^-1 = E_{a b^-}
  for (Letter a : E)
    for (Letter b : E)
      if (distinct_up_to_sign(a, b))
        p.add_relator(WordBuilder::eq(WordBuilder::inv(W.e(a, b)),
                                      W.e(a, b.inverse())));
  // [E_ab, E_cd] = 1 when a not in {c, d, d^-} and b not in {c, c^-}
  for (Letter a : E)
    for (Letter b : E) {
      if (!distinct_up_to_sign(a, b)) continue;
      for (Letter c : E) {
        if (a == c || !distinct_up_to_sign(b, c)) continue;
        for (Letter d : E) {
          if (!distinct_up_to_sign(c, d) || !distinct_up_to_sign(a, d)) continue;
          p.add_relator(WordBuilder::comm(W.e(a, b), W.e(c, d)));
        }
      }
    }
  // [E_ab, E_bc] = E_ac when a not in {c, c^-}
  for (Letter a : E)
    for (Letter b : E) {
      if (!distinct_up_to_sign(a, b)) continue;
      for (Letter c : E) {
        if (!distinct_up_to_sign(b, c) || !distinct_up_to_sign(a, c)) continue;
        p.add_relator(
            WordBuilder::eq(WordBuilder::comm(W.e(a, b), W.e(b, c)), W.e(a, c)));
      }
    }
  // w_ab = w_{a^- b^-}
  for (Letter a : E)
    for (Letter b : E)
      if (distinct_up_to_sign(a, b))
        p.add_relator(WordBuilder::eq(W.w(a, b), W.w(a.inverse(), b.inverse())));
  // w_ab^4 = 1
  for (Letter a : E)
    for (Letter b : E)
      if (distinct_up_to_sign(a, b)) p.add_relator(WordBuilder::pow(W.w(a, b), 4));
  return p;
}

/// Counts for gersten_presentation(n) by direct enumeration of the index
/// conditions, never building relators; usable for large n.
inline PresentationShape gersten_shape(int n) {
  detail::require_rank(n, 3, "gersten");
  const auto E = signed_letters(1, n);
  const std::size_t twoN = E.size();
  PresentationShape s;
  std::size_t pairs = 0;
  for (Letter a : E)
    for (Letter b : E)
      if (distinct_up_to_sign(a, b)) ++pairs;
  s.generators = pairs;
  s.relators += pairs;  // inverses
  s.length += 2 * pairs;

  std::size_t commuting = 0;
  std::size_t steinberg = 0;
  for (Letter a : E)
    for (Letter b : E) {
      if (!distinct_up_to_sign(a, b)) continue;
      for (Letter c : E) {
        if (!distinct_up_to_sign(b, c)) continue;
        if (distinct_up_to_sign(a, c)) ++steinberg;
        if (a == c) continue;
        // d ranges over E minus the letters of index c or index a.
        commuting += a.index() == c.index() ? twoN - 2 : twoN - 4;
      }
    }
  s.relators += commuting + steinberg + 2 * pairs;
  s.length += 4 * commuting + 5 * steinberg + 6 * pairs + 12 * pairs;
  s.length += s.generators;
  return s;
}

// ---------------------------------------------------------------------------
// Linear-length presentation: only Nielsen maps involving a1.

namespace detail {

/// Generators E_{b a1}, E_{b a1^-}, E_{a1 b}, E_{a1^- b} for b over the signed
/// letters of a2..am, and the thirteen relation families among them.
inline void add_linear_block(Presentation& p, int m) {
  const Letter a1 = gen(1);
  const Letter A1 = bar(1);
  const auto B = signed_letters(2, m);
  for (Letter b : B) {
    p.add_generator(NielsenGen{b, a1});
    p.add_generator(NielsenGen{b, A1});
    p.add_generator(NielsenGen{a1, b});
    p.add_generator(NielsenGen{A1, b});
  }

  WordBuilder W(p);
  using WB = WordBuilder;
  auto Ebc = [&](Letter b, Letter c) { return WB::comm(W.e(b, a1), W.e(a1, c)); };

  // (1) E_{b a1}^-1 = E_{b a1^-}, E_{a1 b}^-1 = E_{a1 b^-}
  for (Letter b : B) {
    p.add_relator(WB::eq(WB::inv(W.e(b, a1)), W.e(b, A1)));
    p.add_relator(WB::eq(WB::inv(W.e(a1, b)), W.e(a1, b.inverse())));
  }
  // (2) [E_{b a1}, E_{c a1}] = 1
  for (Letter b : B)
    for (Letter c : B)
      if (distinct_up_to_sign(b, c)) p.add_relator(WB::comm(W.e(b, a1), W.e(c, a1)));
  // (3) [E_{a1 b}, E_{a1^- c}] = [E_{a1^- b}, E_{a1 c}] = 1
  for (Letter b : B)
    for (Letter c : B) {
      p.add_relator(WB::comm(W.e(a1, b), W.e(A1, c)));
      p.add_relator(WB::comm(W.e(A1, b), W.e(a1, c)));
    }
  // (4) [E_{b a1^-}, E_{a1^- c}] = [E_{b a1}, E_{a1 c}]
  for (Letter b : B)
    for (Letter c : B)
      if (distinct_up_to_sign(b, c))
        p.add_relator(WB::eq(WB::comm(W.e(b, A1), W.e(A1, c)), Ebc(b, c)));
  // (5) [E_bc, E_{d a1}] = [E_bc, E_{d a1^-}] = 1
  for (Letter b : B)
    for (Letter c : B) {
      if (!distinct_up_to_sign(b, c)) continue;
      for (Letter d : B) {
        if (b == d || !distinct_up_to_sign(c, d)) continue;
        p.add_relator(WB::comm(Ebc(b, c), W.e(d, a1)));
        p.add_relator(WB::comm(Ebc(b, c), W.e(d, A1)));
      }
    }
  // (6) [E_bc, E_{a1 d}] = [E_bc, E_{a1^- d}] = 1
  for (Letter b : B)
    for (Letter c : B) {
      if (!distinct_up_to_sign(b, c)) continue;
      for (Letter d : B) {
        if (!distinct_up_to_sign(b, d)) continue;
        p.add_relator(WB::comm(Ebc(b, c), W.e(a1, d)));
        p.add_relator(WB::comm(Ebc(b, c), W.e(A1, d)));
      }
    }
  // (7) [E_{a1 d}, E_bc] = [E_{a1^- d}, E_bc] = 1
  for (Letter b : B)
    for (Letter c : B) {
      if (!distinct_up_to_sign(b, c)) continue;
      for (Letter d : B) {
        if (!distinct_up_to_sign(b, d)) continue;
        p.add_relator(WB::comm(W.e(a1, d), Ebc(b, c)));
        p.add_relator(WB::comm(W.e(A1, d), Ebc(b, c)));
      }
    }
  // (8)-(11)
  for (Letter b : B)
    for (Letter c : B) {
      if (!distinct_up_to_sign(b, c)) continue;
      p.add_relator(WB::eq(WB::comm(Ebc(b, c), W.e(c, a1)), W.e(b, a1)));
      p.add_relator(WB::eq(WB::comm(Ebc(b, c), W.e(c, A1)), W.e(b, A1)));
      p.add_relator(WB::eq(WB::comm(W.e(a1, b), Ebc(b, c)), W.e(a1, c)));
      p.add_relator(WB::eq(WB::comm(W.e(A1, b), Ebc(b, c)), W.e(A1, c)));
    }
  // (12) w_{a1 b} = w_{a1^- b^-}, w_{b a1} = w_{b^- a1^-}
  for (Letter b : B) {
    p.add_relator(WB::eq(W.w(a1, b), W.w(A1, b.inverse())));
    p.add_relator(WB::eq(W.w(b, a1), W.w(b.inverse(), A1)));
  }
  // (13) w_{a1 b}^4 = w_{b a1}^4 = 1
  for (Letter b : B) {
    p.add_relator(WB::pow(W.w(a1, b), 4));
    p.add_relator(WB::pow(W.w(b, a1), 4));
  }
}

}  // namespace detail

inline Presentation linear_presentation(int n) {
  detail::require_rank(n, 3, "linear");
  Presentation p(n);
  p.metadata().family = "linear";
  detail::add_linear_block(p, n);
  return p;
}

/// Counts for linear_presentation(n) without building relators.
inline PresentationShape linear_shape(int n) {
  detail::require_rank(n, 3, "linear");
  const auto B = signed_letters(2, n);
  const std::size_t nb = B.size();
  PresentationShape s;
  s.generators = 4 * nb;
  auto add = [&](std::size_t count, std::size_t len) {
    s.relators += count;
    s.length += count * len;
  };
  add(2 * nb, 2);  // (1)
  std::size_t bc = 0;
  for (Letter b : B)
    for (Letter c : B)
      if (distinct_up_to_sign(b, c)) ++bc;
  add(bc, 4);           // (2)
  add(2 * nb * nb, 4);  // (3)
  add(bc, 8);           // (4)
  std::size_t bcd5 = 0;
  std::size_t bcd6 = 0;
  for (Letter b : B)
    for (Letter c : B) {
      if (!distinct_up_to_sign(b, c)) continue;
      for (Letter d : B) {
        if (b != d && distinct_up_to_sign(c, d)) ++bcd5;
        if (distinct_up_to_sign(b, d)) ++bcd6;
      }
    }
  add(2 * bcd5, 10);  // (5)
  add(2 * bcd6, 10);  // (6)
  add(2 * bcd6, 10);  // (7)
  add(4 * bc, 11);    // (8)-(11)
  add(2 * nb, 6);     // (12)
  add(2 * nb, 12);    // (13)
  s.length += s.generators;
  return s;
}

// ---------------------------------------------------------------------------
// Short Aut+ presentation: a symmetric-group provider glued to the linear
// presentation of rank 5 acting on a1..a5.

namespace detail {

/// Provider word re-indexed into p's generator list.
inline Relator provider_word(const Presentation& p, const SymmetricProvider& sp,
                             const ProviderWord& w) {
  Relator out;
  for (const RelatorEntry& e : w) {
    out.push_back({p.id(SymGen{sp.generators.at(e.generator)}), e.exponent});
  }
  return out;
}

inline void add_provider_block(Presentation& p, const SymmetricProvider& sp) {
  for (const std::string& g : sp.generators) p.add_generator(SymGen{g});
  for (const ProviderWord& r : sp.relators) p.add_relator(provider_word(p, sp, r));
}

}  // namespace detail

/// Number of relators contributed to short_aut by the provider and by the
/// X1/X2 conjugation families; the remainder is independent of n.
struct ShortAutCounts {
  std::size_t provider_generators = 0;
  std::size_t provider_relators = 0;
  std::size_t x1 = 0;
  std::size_t x2 = 0;
};

inline Presentation short_aut_presentation(int n, const SymmetricProvider& sp) {
  detail::require_rank(n, 6, "short-aut");
  if (sp.n != n) throw std::invalid_argument("provider degree does not match n");
  if (auto rep = validate_provider(sp); !rep.ok()) {
    throw std::invalid_argument("invalid provider: " + rep.violations.front());
  }
  Presentation p(n);
  p.metadata().family = "short-aut";
  p.metadata().provider = sp.name;
  detail::add_provider_block(p, sp);
  detail::add_linear_block(p, 5);

  detail::WordBuilder W(p);
  using WB = detail::WordBuilder;
  const Letter a1 = gen(1), A1 = bar(1), a2 = gen(2), A2 = bar(2);

  auto conj_rel = [&](std::uint32_t x, Letter a, Letter b, Letter c, Letter d) {
    Relator xr{{p.id(SymGen{sp.generators.at(x)}), 1}};
    // E_ab^x = E_cd with g^h = h^-1 g h
    p.add_relator(WB::eq(WB::cat({WB::inv(xr), W.e(a, b), xr}), W.e(c, d)));
  };
  for (std::uint32_t x : sp.x1) {
    conj_rel(x, a1, a2, a1, a2);
    conj_rel(x, a2, a1, a2, a1);
    conj_rel(x, A1, a2, A1, a2);
    conj_rel(x, A2, a1, A2, a1);
  }
  for (std::uint32_t x : sp.x2) {
    conj_rel(x, a1, a2, A1, a2);
    conj_rel(x, a2, a1, a2, A1);
    conj_rel(x, A1, a2, a1, a2);
    conj_rel(x, A2, a1, A2, A1);
  }

  auto w2w = [&](int i, int j) {
    // w_{a1 ai}^2 w_{ai aj}
    return WB::cat({WB::pow(W.w(a1, gen(i)), 2), W.w(gen(i), gen(j))});
  };
  p.add_relator(WB::eq(detail::provider_word(p, sp, sp.transposition_23), w2w(2, 3)));
  p.add_relator(WB::eq(detail::provider_word(p, sp, sp.cycle_2345),
                       WB::cat({w2w(4, 5), w2w(3, 4), w2w(2, 3)})));
  return p;
}

// ---------------------------------------------------------------------------
// Horner compression of a power gamma^N through gamma_i = gamma_{i-1}^4.

/// Base-4 digits d0..dm of N (N >= 1), least significant first.
inline std::vector<int> horner_digits(std::size_t N) {
  if (N == 0) throw std::invalid_argument("power must be positive");
  std::vector<int> digits;
  for (; N > 0; N /= 4) digits.push_back(static_cast<int>(N % 4));
  return digits;
}

inline std::string horner_name(const std::string& target, std::size_t i) {
  return i == 0 ? target : target + std::to_string(i);
}

/// Replaces the first maximal run of exactly N copies of G[target] in some
/// relator by target^d0 target1^d1 ... targetm^dm, adding the generators
/// target1..targetm and relators target_i = target_{i-1}^4.
inline Presentation horner_compress(Presentation p, const std::string& target,
                                    std::size_t N) {
  auto tid = p.find(AuxGen{target});
  if (!tid) throw std::invalid_argument("no generator G[" + target + "]");
  const RelatorEntry unit{*tid, 1};

  std::optional<std::pair<std::size_t, std::size_t>> hit;  // relator, offset
  for (std::size_t ri = 0; ri < p.relators().size() && !hit; ++ri) {
    const Relator& r = p.relators()[ri];
    for (std::size_t i = 0; i < r.size();) {
      if (r[i] != unit) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < r.size() && r[j] == unit) ++j;
      if (j - i == N) {
        hit = {ri, i};
        break;
      }
      i = j;
    }
  }
  if (!hit) {
    throw std::invalid_argument("no relator contains G[" + target + "]^" +
                                std::to_string(N) + " as a contiguous block");
  }

  const auto digits = horner_digits(N);
  const std::size_t m = digits.size() - 1;
  std::vector<std::uint32_t> ids{*tid};
  for (std::size_t i = 1; i <= m; ++i) {
    if (p.find(AuxGen{horner_name(target, i)})) {
      throw std::invalid_argument("generator G[" + horner_name(target, i) +
                                  "] already present");
    }
    ids.push_back(p.add_generator(AuxGen{horner_name(target, i)}));
  }
  Relator replacement;
  for (std::size_t i = 0; i <= m; ++i)
    for (int k = 0; k < digits[i]; ++k) replacement.push_back({ids[i], 1});

  Relator& r = p.relator(hit->first);
  r.erase(r.begin() + static_cast<std::ptrdiff_t>(hit->second),
          r.begin() + static_cast<std::ptrdiff_t>(hit->second + N));
  r.insert(r.begin() + static_cast<std::ptrdiff_t>(hit->second),
           replacement.begin(), replacement.end());

  for (std::size_t i = 1; i <= m; ++i) {
    Relator def{{ids[i], 1}};
    for (int k = 0; k < 4; ++k) def.push_back({ids[i - 1], -1});
    p.add_relator(std::move(def));
  }
  p.metadata().compressed = true;
  return p;
}

// ---------------------------------------------------------------------------
// Out+ presentation.

/// Exponent N of the gamma power in the Out+ presentation: n-1 for even n,
/// n-2 for odd n.
inline std::size_t out_plus_power(int n) {
  return n % 2 == 0 ? static_cast<std::size_t>(n - 1)
                    : static_cast<std::size_t>(n - 2);
}

/// sigma = (2,...,n) for even n and (2,...,n)(2,3) = (3,...,n) for odd n.
inline Permutation out_plus_sigma(int n) {
  std::vector<int> pts;
  for (int i = 2; i <= n; ++i) pts.push_back(i);
  Permutation sigma = Permutation::cycle(n, pts);
  if (n % 2 == 1) sigma = sigma * Permutation::cycle(n, {2, 3});
  return sigma;
}

/// The letter index j with xi = E_{aj a1} E_{aj^- a1}.
inline int out_plus_xi_index(int n) { return n % 2 == 0 ? 2 : 3; }

/// gamma = xi sigma as an automorphism.
inline FreeAutomorphism out_plus_gamma(int n) {
  const int j = out_plus_xi_index(n);
  return product({nielsen(gen(j), gen(1), n), nielsen(bar(j), gen(1), n),
                  signed_permutation(out_plus_sigma(n))});
}

inline Presentation out_plus_presentation(int n, const SymmetricProvider& sp,
                                          bool compress) {
  Presentation p = short_aut_presentation(n, sp);
  p.metadata().family = "out-plus";
  const std::uint32_t g = p.add_generator(AuxGen{"gamma"});

  detail::WordBuilder W(p);
  using WB = detail::WordBuilder;
  const int j = out_plus_xi_index(n);
  const Relator xi = WB::cat({W.e(gen(j), gen(1)), W.e(bar(j), gen(1))});
  Relator sigma = detail::provider_word(p, sp, sp.long_cycle);
  if (n % 2 == 1) {
    sigma = WB::cat({sigma, detail::provider_word(p, sp, sp.transposition_23)});
  }
  const Relator gamma{{g, 1}};
  const std::size_t def = p.add_relator(WB::eq(gamma, WB::cat({xi, sigma})));

  const std::size_t N = out_plus_power(n);
  Relator power = WB::pow(gamma, static_cast<int>(N));
  if (n % 2 == 1) {
    power = WB::cat({W.e(gen(2), gen(1)), W.e(bar(2), gen(1)), power});
  }
  const std::size_t pw = p.add_relator(power);
  p.metadata().inner_relators = {def, pw};
  if (compress) p = horner_compress(std::move(p), "gamma", N);
  return p;
}

// ---------------------------------------------------------------------------
// Canonical semantics.

/// Rebuilds the canonical assignment of a presentation from its generator
/// tokens and metadata alone: E[a,b] -> Nielsen map, S[x] -> signed
/// permutation of the provider's projection of x, G[gamma] -> xi sigma and
/// G[gamma<i>] -> gamma^(4^i).
inline Assignment canonical_assignment(const Presentation& p) {
  const int n = p.rank();
  Assignment a;
  a.resize(p.generators().size());
  std::optional<SymmetricProvider> provider;
  std::map<std::string, std::uint32_t> provider_index;
  std::optional<FreeAutomorphism> gamma;
  std::map<std::size_t, FreeAutomorphism> gamma_powers;  // i -> gamma^(4^i)

  for (std::uint32_t id = 0; id < p.generators().size(); ++id) {
    const GenSymbol& s = p.generators()[id];
    if (const auto* e = std::get_if<NielsenGen>(&s)) {
      a.set(id, nielsen(e->a, e->b, n));
    } else if (const auto* x = std::get_if<SymGen>(&s)) {
      if (!provider) {
        if (p.metadata().provider.empty()) {
          throw std::invalid_argument("S[..] symbols need a provider in metadata");
        }
        provider = make_provider(p.metadata().provider, n);
        for (std::uint32_t k = 0; k < provider->generators.size(); ++k) {
          provider_index[provider->generators[k]] = k;
        }
      }
      auto it = provider_index.find(x->name);
      if (it == provider_index.end()) {
        throw std::invalid_argument("provider '" + provider->name +
                                    "' has no generator " + x->name);
      }
      a.set(id, signed_permutation(provider->projection[it->second]));
    } else {
      const auto& name = std::get<AuxGen>(s).name;
      if (name.rfind("gamma", 0) != 0) {
        throw std::invalid_argument("unknown auxiliary generator G[" + name + "]");
      }
      if (!gamma) gamma = out_plus_gamma(n);
      std::size_t level = 0;
      if (name.size() > 5) {
        const std::string digits = name.substr(5);
        if (digits.find_first_not_of("0123456789") != std::string::npos ||
            digits[0] == '0') {
          throw std::invalid_argument("unknown auxiliary generator G[" + name + "]");
        }
        level = std::stoul(digits);
      }
      if (gamma_powers.empty()) gamma_powers.emplace(0, *gamma);
      while (gamma_powers.rbegin()->first < level) {
        const auto& [lvl, f] = *gamma_powers.rbegin();
        gamma_powers.emplace(lvl + 1, power(f, 4));
      }
      a.set(id, gamma_powers.at(level));
    }
  }
  return a;
}

inline BuiltPresentation with_canonical(Presentation p) {
  Assignment a = canonical_assignment(p);
  return {std::move(p), std::move(a)};
}

inline BuiltPresentation gersten(int n) {
  return with_canonical(gersten_presentation(n));
}
inline BuiltPresentation linear(int n) {
  return with_canonical(linear_presentation(n));
}
inline BuiltPresentation short_aut(int n, const SymmetricProvider& sp) {
  return with_canonical(short_aut_presentation(n, sp));
}
inline BuiltPresentation out_plus(int n, const SymmetricProvider& sp,
                                  bool compress) {
  return with_canonical(out_plus_presentation(n, sp, compress));
}

/// Compression that also extends an existing assignment.
inline BuiltPresentation horner_compress(const BuiltPresentation& b,
                                         const std::string& target,
                                         std::size_t N) {
  Presentation p = horner_compress(b.presentation, target, N);
  Assignment a = b.assignment;
  const FreeAutomorphism base = a.at(p.id(AuxGen{target}));
  FreeAutomorphism level = base;
  for (std::size_t i = 1;; ++i) {
    auto id = p.find(AuxGen{horner_name(target, i)});
    if (!id) break;
    level = power(level, 4);
    a.set(*id, level);
  }
  return {std::move(p), std::move(a)};
}

/// E_{a1 ak}, E_{a1^- ak}, E_{ak a1}, E_{ak^- a1} obtained by conjugating the
/// rank-5 generators by the signed transposition (2,k).
struct ExtendedNielsen {
  FreeAutomorphism a1_ak;
  FreeAutomorphism a1inv_ak;
  FreeAutomorphism ak_a1;
  FreeAutomorphism akinv_a1;
};

inline ExtendedNielsen extended_nielsen(int k, int n) {
  if (k < 6 || k > n) {
    throw std::out_of_range("extended Nielsen index k must satisfy 6 <= k <= n");
  }
  const FreeAutomorphism t = signed_permutation(Permutation::cycle(n, {2, k}));
  auto around = [&](Letter a, Letter b) {
    return product({t, nielsen(a, b, n), t});
  };
  return {around(bar(1), gen(2)), around(gen(1), gen(2)),
          around(gen(2), bar(1)), around(bar(2), bar(1))};
}

}  // namespace autfn
