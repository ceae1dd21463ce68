#pragma once

// Presentations of the symmetric group on {2..n}, with the structure the
// short Aut+ construction needs: generator subsets X1 (even) and X2 (odd)
// whose images generate the stabilizer of the point 2, and words for
// (2,3), (2,3,4,5) and (2,3,...,n).

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "autfn/permutation.hpp"
#include "autfn/presentation.hpp"

namespace autfn {

/// A word in provider generators; RelatorEntry::generator indexes
/// SymmetricProvider::generators.
using ProviderWord = std::vector<RelatorEntry>;

struct SymmetricProvider {
  std::string name;
  int n = 0;
  std::vector<std::string> generators;
  std::vector<Permutation> projection;  // parallel to generators, degree n
  std::vector<ProviderWord> relators;
  std::vector<std::uint32_t> x1;
  std::vector<std::uint32_t> x2;
  ProviderWord transposition_23;
  ProviderWord cycle_2345;
  ProviderWord long_cycle;  // (2,3,...,n)
};

inline Permutation project(const SymmetricProvider& p, const ProviderWord& w) {
  Permutation r(p.n);
  for (const RelatorEntry& e : w) {
    const Permutation& g = p.projection.at(e.generator);
    r = r * (e.exponent > 0 ? g : g.inverse());
  }
  return r;
}

/// Adjacent transpositions s_i = (i,i+1) for 2 <= i <= n-1, plus
/// u_i = s_i s_3 for 4 <= i <= n-1, with Coxeter relators and the defining
/// relators of the u_i. X2 = {s_3}, X1 = {u_4, ..., u_{n-1}}.
inline SymmetricProvider coxeter_provider(int n) {
  if (n < 6) {
    throw std::invalid_argument("coxeter provider requires n >= 6, got " +
                                std::to_string(n));
  }
  SymmetricProvider p;
  p.name = "coxeter";
  p.n = n;
  auto s = [](int i) { return static_cast<std::uint32_t>(i - 2); };
  for (int i = 2; i <= n - 1; ++i) {
    p.generators.push_back("s" + std::to_string(i));
    p.projection.push_back(Permutation::cycle(n, {i, i + 1}));
  }
  auto u = [&](int i) { return static_cast<std::uint32_t>(n - 2 + i - 4); };
  for (int i = 4; i <= n - 1; ++i) {
    p.generators.push_back("u" + std::to_string(i));
    p.projection.push_back(Permutation::cycle(n, {i, i + 1}) *
                           Permutation::cycle(n, {3, 4}));
  }

  auto pos = [](std::uint32_t g) { return RelatorEntry{g, 1}; };
  auto neg = [](std::uint32_t g) { return RelatorEntry{g, -1}; };
  for (int i = 2; i <= n - 1; ++i) p.relators.push_back({pos(s(i)), pos(s(i))});
  for (int i = 2; i <= n - 2; ++i) {
    ProviderWord r;
    for (int k = 0; k < 3; ++k) {
      r.push_back(pos(s(i)));
      r.push_back(pos(s(i + 1)));
    }
    p.relators.push_back(r);
  }
  for (int i = 2; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      p.relators.push_back({pos(s(i)), pos(s(j)), neg(s(i)), neg(s(j))});
    }
  }
  for (int i = 4; i <= n - 1; ++i) {
    p.relators.push_back({pos(u(i)), neg(s(3)), neg(s(i))});
    p.x1.push_back(u(i));
  }
  p.x2.push_back(s(3));

  p.transposition_23 = {pos(s(2))};
  p.cycle_2345 = {pos(s(4)), pos(s(3)), pos(s(2))};
  for (int i = n - 1; i >= 2; --i) p.long_cycle.push_back(pos(s(i)));
  return p;
}

/// Providers selectable by name.
inline SymmetricProvider make_provider(const std::string& name, int n) {
  if (name == "coxeter") return coxeter_provider(n);
  throw std::invalid_argument("unknown symmetric provider '" + name + "'");
}

struct ProviderReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::vector<int> stabilizer_points(int n) {
  std::vector<int> pts;
  for (int i = 3; i <= n; ++i) pts.push_back(i);
  return pts;
}

/// Order of the group generated by gens, by closure. Only for small degree.
inline std::size_t closure_order(const std::vector<Permutation>& gens, int n) {
  std::set<Permutation> seen{Permutation(n)};
  std::vector<Permutation> frontier{Permutation(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& x : frontier) {
      for (const Permutation& g : gens) {
        Permutation y = x * g;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

/// True when gens act 2-transitively on the given points.
inline bool two_transitive(const std::vector<Permutation>& gens,
                           const std::vector<int>& pts, int n) {
  if (pts.size() < 2) return true;
  std::vector<std::vector<bool>> seen(n + 1, std::vector<bool>(n + 1, false));
  std::vector<std::pair<int, int>> stack{{pts[0], pts[1]}};
  seen[pts[0]][pts[1]] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    for (const Permutation& g : gens) {
      int x = g(a), y = g(b);
      if (!seen[x][y]) {
        seen[x][y] = true;
        ++count;
        stack.push_back({x, y});
      }
    }
  }
  return count == pts.size() * (pts.size() - 1);
}

}  // namespace detail

/// Checks every structural requirement on a provider and reports each
/// violation. Generation of the stabilizer of 2 is checked by explicit
/// closure for n <= 10; beyond that by 2-transitivity on {3..n} plus a
/// transposition among the generators (a primitive group containing a
/// transposition is the full symmetric group).
inline ProviderReport validate_provider(const SymmetricProvider& p) {
  ProviderReport rep;
  auto fail = [&](std::string s) { rep.violations.push_back(std::move(s)); };

  if (p.projection.size() != p.generators.size()) {
    fail("projection list does not match generator list");
    return rep;
  }
  for (std::size_t g = 0; g < p.projection.size(); ++g) {
    if (p.projection[g].degree() != p.n || p.projection[g](1) != 1) {
      fail("generator " + p.generators[g] + " does not act on {2..n}");
      return rep;
    }
  }
  auto bad_word = [&](const ProviderWord& w) {
    return std::any_of(w.begin(), w.end(), [&](const RelatorEntry& e) {
      return e.generator >= p.generators.size();
    });
  };

  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (bad_word(p.relators[i])) {
      fail("relator " + std::to_string(i) + " uses an unknown generator");
    } else if (!project(p, p.relators[i]).is_identity()) {
      fail("relator " + std::to_string(i) + " does not project to the identity");
    }
  }

  if (p.x2.empty()) fail("X2 is empty");
  std::vector<Permutation> stab_gens;
  auto check_subset = [&](const std::vector<std::uint32_t>& xs, int parity,
                          const char* label) {
    for (std::uint32_t g : xs) {
      if (g >= p.generators.size()) {
        fail(std::string(label) + " names an unknown generator");
        continue;
      }
      const Permutation& x = p.projection[g];
      if (x.sign() != parity) {
        fail(std::string(label) + " element " + p.generators[g] +
             (parity > 0 ? " is not even" : " is not odd"));
      }
      if (x(2) != 2) {
        fail(std::string(label) + " element " + p.generators[g] +
             " does not fix 2");
      }
      stab_gens.push_back(x);
    }
  };
  check_subset(p.x1, 1, "X1");
  check_subset(p.x2, -1, "X2");

  const auto pts = detail::stabilizer_points(p.n);
  if (p.n <= 10) {
    std::size_t want = 1;
    for (std::size_t k = 2; k <= pts.size(); ++k) want *= k;
    std::size_t got = detail::closure_order(stab_gens, p.n);
    if (got != want) {
      fail("X1 u X2 generates a group of order " + std::to_string(got) +
           ", stabilizer of 2 has order " + std::to_string(want));
    }
    rep.notes.push_back("stabilizer generation checked by closure (order " +
                        std::to_string(want) + ")");
  } else {
    bool fixes2 = std::all_of(stab_gens.begin(), stab_gens.end(),
                              [](const Permutation& x) { return x(2) == 2; });
    bool has_transposition =
        std::any_of(stab_gens.begin(), stab_gens.end(),
                    [](const Permutation& x) { return x.is_transposition(); });
    if (!fixes2 || !detail::two_transitive(stab_gens, pts, p.n) ||
        !has_transposition) {
      fail("could not certify that X1 u X2 generates the stabilizer of 2");
    }
    rep.notes.push_back(
        "stabilizer generation checked by 2-transitivity plus a transposition");
  }

  struct Special {
    const ProviderWord* word;
    Permutation expect;
    const char* label;
  };
  std::vector<int> long_pts;
  for (int i = 2; i <= p.n; ++i) long_pts.push_back(i);
  const Special specials[] = {
      {&p.transposition_23, Permutation::cycle(p.n, {2, 3}), "(2,3)"},
      {&p.cycle_2345, Permutation::cycle(p.n, {2, 3, 4, 5}), "(2,3,4,5)"},
      {&p.long_cycle, Permutation::cycle(p.n, long_pts), "(2,...,n)"},
  };
  for (const Special& sp : specials) {
    if (bad_word(*sp.word)) {
      fail(std::string("word for ") + sp.label + " uses an unknown generator");
      continue;
    }
    Permutation got = project(p, *sp.word);
    if (got != sp.expect) {
      fail(std::string("word for ") + sp.label + " projects to " +
           to_string(got));
    }
  }
  return rep;
}

}  // namespace autfn
