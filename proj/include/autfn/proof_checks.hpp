#pragma once

// Exact checks of the identities that make the linear, short Aut+ and Out+
// presentations sound. Every check is an equality of automorphisms compared
// on basis images.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "autfn/automorphism.hpp"
#include "autfn/constructors.hpp"
#include "autfn/permutation.hpp"

namespace autfn {

struct CheckOutcome {
  std::string check;  // short identifier of the identity
  std::string where;  // the index tuple it was evaluated at
  bool ok = false;
};

struct CheckReport {
  std::string suite;
  int n = 0;
  std::vector<CheckOutcome> outcomes;

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(
        outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) { return !o.ok; }));
  }
  bool ok() const { return failures() == 0; }

  void record(std::string check, std::string where, bool ok) {
    outcomes.push_back({std::move(check), std::move(where), ok});
  }
};

inline std::string to_string(const CheckReport& r) {
  std::string s = r.suite + " n=" + std::to_string(r.n) + ": " +
                  std::to_string(r.outcomes.size()) + " checks, " +
                  std::to_string(r.failures()) + " failures\n";
  for (const CheckOutcome& o : r.outcomes) {
    if (!o.ok) s += "  FAIL " + o.check + " at " + o.where + "\n";
  }
  return s;
}

/// Tuples at or below this rank are swept exhaustively; above it a seeded
/// sample is drawn.
inline constexpr int kExhaustiveRankLimit = 9;
inline constexpr std::size_t kSampledTuples = 50;

// ---------------------------------------------------------------------------

/// For all b, c over the signed letters of a2..an with b not in {c, c^-}:
///   comm       [E_{b a1}, E_{a1 c}] = E_bc
///   conj-bc    E_bc = w_{a1 b}^-1 E_{a1^- c} w_{a1 b}
///   conj-cb    E_cb = w_{a1 b}^-1 E_{c a1^-} w_{a1 b}
///   chain-1..4 the steps from w_bc to w_{b^- c^-}
///   w4         w_bc^4 = 1
/// where E_xy for x, y away from a1 always means the commutator.
inline CheckReport check_linear_identities(int n) {
  detail::require_rank(n, 3, "linear identities");
  CheckReport rep{"linear", n, {}};
  const Letter a1 = gen(1), A1 = bar(1);
  auto E = [n](Letter x, Letter y) { return nielsen(x, y, n); };
  auto Ec = [&](Letter x, Letter y) {
    if (x.index() == 1 || y.index() == 1) return E(x, y);
    return commutator(E(x, a1), E(a1, y));
  };
  auto W = [&](Letter x, Letter y) {
    return product({Ec(y, x), Ec(x.inverse(), y), Ec(y.inverse(), x.inverse())});
  };

  const auto B = signed_letters(2, n);
  for (Letter b : B)
    for (Letter c : B) {
      if (!distinct_up_to_sign(b, c)) continue;
      const std::string at = "b=" + to_string(b) + " c=" + to_string(c);
      const FreeAutomorphism Ebc = Ec(b, c);
      const FreeAutomorphism w1b = W(a1, b);
      const FreeAutomorphism w1b_inv = w1b.inverse();

      rep.record("comm", at, Ebc == E(b, c));
      rep.record("conj-bc", at, Ebc == product({w1b_inv, E(A1, c), w1b}));
      rep.record("conj-cb", at, Ec(c, b) == product({w1b_inv, E(c, A1), w1b}));

      const FreeAutomorphism l0 = W(b, c);
      const FreeAutomorphism l1 =
          product({w1b_inv, E(c, A1), E(a1, c), E(c.inverse(), a1), w1b});
      const FreeAutomorphism l2 = product({w1b_inv, W(A1, c), w1b});
      const FreeAutomorphism l3 = product({w1b_inv, W(a1, c.inverse()), w1b});
      const FreeAutomorphism l4 = W(b.inverse(), c.inverse());
      rep.record("chain-1", at, l0 == l1);
      rep.record("chain-2", at, l1 == l2);
      rep.record("chain-3", at, l2 == l3);
      rep.record("chain-4", at, l3 == l4);
      rep.record("w4", at, power(l0, 4).is_identity());
    }
  return rep;
}

// ---------------------------------------------------------------------------

namespace detail {

inline FreeAutomorphism signed_cycle(int n, std::initializer_list<int> pts) {
  return signed_permutation(Permutation::cycle(n, pts));
}

/// Ordered tuples of distinct indices from [lo, hi], exhaustive or sampled.
inline std::vector<std::vector<int>> index_tuples(int lo, int hi, int arity,
                                                  bool exhaustive,
                                                  std::uint64_t seed) {
  std::vector<std::vector<int>> out;
  const int span = hi - lo + 1;
  if (span < arity) return out;
  if (exhaustive) {
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(cur.size()) == arity) {
        out.push_back(cur);
        return;
      }
      for (int v = lo; v <= hi; ++v) {
        if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
        cur.push_back(v);
        self(self);
        cur.pop_back();
      }
    };
    rec(rec);
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(lo, hi);
  while (out.size() < kSampledTuples) {
    std::vector<int> t;
    while (static_cast<int>(t.size()) < arity) {
      int v = pick(rng);
      if (std::find(t.begin(), t.end(), v) == t.end()) t.push_back(v);
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace detail

/// Identities behind the short Aut+ presentation, for indices i, j, k >= 6
/// and the extended generators E_{a1 ak} = (2,k) E_{a1^- a2} (2,k) etc.:
///   extended      the four extended generators are the Nielsen maps
///   rotate        (2,3,4,5) E (2,5,4,3) swaps a1 and a1^- in each of them
///   first-fact    [E_{ai a1}, E_{a1 aj}] = [E_{ai a1^-}, E_{a1^- aj}]
///   square-fixes  conjugating E_{ai aj} by (2,3,4,5)^2 fixes it
///   transport     E_{ai aj} = (4,j)(5,i) E_{a5 a4} (5,i)(4,j)
///   triple        [[E_{ai a1}, E_{a1 aj}], E_{a1 ak}] = 1
inline CheckReport check_short_aut_identities(int n, std::uint64_t seed = 1) {
  if (n < 8) {
    throw std::invalid_argument("short Aut+ identities need n >= 8, got " +
                                std::to_string(n));
  }
  CheckReport rep{"short-aut", n, {}};
  const bool exhaustive = n <= kExhaustiveRankLimit;
  const Letter a1 = gen(1), A1 = bar(1);

  std::vector<ExtendedNielsen> ext;  // ext[k - 6]
  for (int k = 6; k <= n; ++k) ext.push_back(extended_nielsen(k, n));
  auto X = [&](int k) -> const ExtendedNielsen& { return ext[k - 6]; };

  const FreeAutomorphism rot = detail::signed_cycle(n, {2, 3, 4, 5});
  const FreeAutomorphism rot_inv = detail::signed_cycle(n, {2, 5, 4, 3});
  const FreeAutomorphism rot2 = compose(rot, rot);

  for (int k = 6; k <= n; ++k) {
    const std::string at = "k=" + std::to_string(k);
    const Letter ak = gen(k), Ak = bar(k);
    const ExtendedNielsen& x = X(k);
    rep.record("extended", at,
               x.a1_ak == nielsen(a1, ak, n) && x.a1inv_ak == nielsen(A1, ak, n) &&
                   x.ak_a1 == nielsen(ak, a1, n) &&
                   x.akinv_a1 == nielsen(Ak, a1, n));
    auto turn = [&](const FreeAutomorphism& f) { return product({rot, f, rot_inv}); };
    rep.record("rotate", at,
               turn(x.a1_ak) == x.a1inv_ak && turn(x.a1inv_ak) == x.a1_ak &&
                   turn(x.ak_a1) == nielsen(ak, A1, n) &&
                   turn(x.akinv_a1) == nielsen(Ak, A1, n));
  }

  for (const auto& t : detail::index_tuples(6, n, 2, exhaustive, seed)) {
    const int i = t[0], j = t[1];
    const std::string at = "i=" + std::to_string(i) + " j=" + std::to_string(j);
    const FreeAutomorphism Eij = commutator(X(i).ak_a1, X(j).a1_ak);
    const FreeAutomorphism Eij_bar =
        commutator(X(i).ak_a1.inverse(), X(j).a1inv_ak);
    rep.record("first-fact", at, Eij == Eij_bar && Eij == nielsen(gen(i), gen(j), n));
    rep.record("square-fixes", at, conjugate(Eij, rot2) == Eij);
    const FreeAutomorphism p = compose(detail::signed_cycle(n, {4, j}),
                                       detail::signed_cycle(n, {5, i}));
    rep.record("transport", at,
               Eij == product({p, nielsen(gen(5), gen(4), n), p.inverse()}));
  }

  for (const auto& t : detail::index_tuples(6, n, 3, exhaustive, seed + 1)) {
    const int i = t[0], j = t[1], k = t[2];
    const std::string at = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                           " k=" + std::to_string(k);
    const FreeAutomorphism Eij = commutator(X(i).ak_a1, X(j).a1_ak);
    rep.record("triple", at, commutator(Eij, X(k).a1_ak).is_identity());
  }
  return rep;
}

// ---------------------------------------------------------------------------

/// Identities behind the Out+ presentation, with xi_j = E_{aj a1} E_{aj^- a1}
/// and f_i = inner(a_i):
///   f1-product    f1 = xi_2 xi_3 ... xi_n
///   power         gamma^(n-1) = f1 (n even), xi_2 gamma^(n-2) = f1 (n odd)
///   telescope     sigma^k xi sigma^-k = xi_{sigma^-k(j0)} for each k, and
///                 those indices cover every factor of the f1 product
///   unroll        gamma^N = (prod_k sigma^k xi sigma^-k) sigma^N, sigma^N = 1
///   w-conj        w_{ai a1} xi_j w_{ai a1}^-1 = (E_{aj ai} E_{aj^- ai})^-1,
///                 or (E_{a1 ai} E_{a1^- ai})^-1 when j = i
///   f-transport   w_{ai a1} f1^-1 w_{ai a1}^-1 = f_i
inline CheckReport check_out_plus_identities(int n) {
  detail::require_rank(n, 6, "Out+ identities");
  CheckReport rep{"out-plus", n, {}};
  const std::string whole = "n=" + std::to_string(n);
  auto xi = [n](int j) {
    return compose(nielsen(gen(j), gen(1), n), nielsen(bar(j), gen(1), n));
  };
  const FreeAutomorphism f1 = inner(Word(n, {gen(1)}));

  FreeAutomorphism prod = FreeAutomorphism::identity(n);
  for (int k = 2; k <= n; ++k) prod = compose(prod, xi(k));
  rep.record("f1-product", whole, prod == f1);

  const FreeAutomorphism gamma = out_plus_gamma(n);
  const std::size_t N = out_plus_power(n);
  FreeAutomorphism gN = power(gamma, static_cast<long>(N));
  const FreeAutomorphism lhs = n % 2 == 0 ? gN : compose(xi(2), gN);
  rep.record("power", whole, lhs == f1);

  const Permutation sigma = out_plus_sigma(n);
  const FreeAutomorphism s = signed_permutation(sigma);
  const int j0 = out_plus_xi_index(n);
  const FreeAutomorphism xi0 = xi(j0);
  std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
  FreeAutomorphism unrolled = FreeAutomorphism::identity(n);
  Permutation sk_inv(n);  // sigma^-k
  for (std::size_t k = 0; k < N; ++k) {
    const FreeAutomorphism sk = signed_permutation(sk_inv.inverse());
    const FreeAutomorphism term = product({sk, xi0, sk.inverse()});
    const int target = sk_inv(j0);
    covered[target] = true;
    rep.record("telescope", "k=" + std::to_string(k), term == xi(target));
    unrolled = compose(unrolled, term);
    sk_inv = sk_inv * sigma.inverse();
  }
  bool all_covered = true;
  for (int j = 2; j <= n; ++j) {
    if (n % 2 == 1 && j == 2) continue;  // supplied by the extra xi_2 factor
    all_covered = all_covered && covered[j];
  }
  rep.record("telescope-cover", whole, all_covered);
  rep.record("unroll", whole,
             compose(unrolled, power(s, static_cast<long>(N))) == gN &&
                 power(s, static_cast<long>(N)).is_identity());

  for (int i = 2; i <= n; ++i) {
    const Letter ai = gen(i);
    const FreeAutomorphism w = w_map(ai, gen(1), n);
    const FreeAutomorphism w_inv = w.inverse();
    for (int j = 2; j <= n; ++j) {
      const Letter src = j == i ? gen(1) : gen(j);
      const FreeAutomorphism expect =
          compose(nielsen(src, ai, n), nielsen(src.inverse(), ai, n)).inverse();
      rep.record("w-conj", "i=" + std::to_string(i) + " j=" + std::to_string(j),
                 product({w, xi(j), w_inv}) == expect);
    }
    rep.record("f-transport", "i=" + std::to_string(i),
               product({w, f1.inverse(), w_inv}) == inner(Word(n, {ai})));
  }
  return rep;
}

}  // namespace autfn
