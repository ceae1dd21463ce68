#pragma once

// Abstract presentations <X | R>, the length |X| + sum |r|, and evaluation of
// relators under an assignment of generators to automorphisms.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "autfn/automorphism.hpp"
#include "autfn/word.hpp"

namespace autfn {

/// E_ab.
struct NielsenGen {
  Letter a;
  Letter b;
  friend bool operator==(const NielsenGen&, const NielsenGen&) = default;
};
/// A generator of a symmetric-group provider.
struct SymGen {
  std::string name;
  friend bool operator==(const SymGen&, const SymGen&) = default;
};
/// Auxiliary generators such as gamma, gamma1, ...
struct AuxGen {
  std::string name;
  friend bool operator==(const AuxGen&, const AuxGen&) = default;
};

using GenSymbol = std::variant<NielsenGen, SymGen, AuxGen>;

inline bool valid_nielsen_pair(Letter a, Letter b) {
  return a.index() != b.index();
}

/// Token used in files and as the unique key of a symbol: `E[a1,a2^-]`,
/// `S[s3]`, `G[gamma]`.
inline std::string token(const GenSymbol& s) {
  struct Visitor {
    std::string operator()(const NielsenGen& g) const {
      return "E[" + to_string(g.a) + "," + to_string(g.b) + "]";
    }
    std::string operator()(const SymGen& g) const { return "S[" + g.name + "]"; }
    std::string operator()(const AuxGen& g) const { return "G[" + g.name + "]"; }
  };
  return std::visit(Visitor{}, s);
}

struct RelatorEntry {
  std::uint32_t generator;  // index into the owning generator list
  std::int8_t exponent;     // +1 or -1
  friend bool operator==(const RelatorEntry&, const RelatorEntry&) = default;
};

/// Fully expanded relator; powers are stored as repeated entries.
using Relator = std::vector<RelatorEntry>;

inline Relator formal_inverse(const Relator& r) {
  Relator inv(r.rbegin(), r.rend());
  for (RelatorEntry& e : inv) e.exponent = static_cast<std::int8_t>(-e.exponent);
  return inv;
}

/// Family tag plus parameters; drives reconstruction of the canonical
/// assignment and which relators are checked modulo inner automorphisms.
struct PresentationMetadata {
  std::string family;    // gersten | linear | short-aut | out-plus | custom
  std::string provider;  // symmetric provider name, empty if none
  bool compressed = false;
  std::vector<std::size_t> inner_relators;  // must evaluate to inner maps
  friend bool operator==(const PresentationMetadata&,
                         const PresentationMetadata&) = default;
};

class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(int rank) : rank_(rank) {
    if (rank < 1) throw std::domain_error("rank must be positive");
  }

  int rank() const { return rank_; }
  const std::vector<GenSymbol>& generators() const { return generators_; }
  const std::vector<Relator>& relators() const { return relators_; }
  const PresentationMetadata& metadata() const { return meta_; }
  PresentationMetadata& metadata() { return meta_; }

  /// Adds a generator, or returns the index of an existing equal one.
  std::uint32_t add_generator(const GenSymbol& s) {
    if (const auto* n = std::get_if<NielsenGen>(&s)) {
      if (!valid_nielsen_pair(n->a, n->b)) {
        throw std::invalid_argument("invalid Nielsen pair " + token(s));
      }
      if (n->a.index() > rank_ || n->b.index() > rank_) {
        throw std::domain_error("Nielsen letter out of range in " + token(s));
      }
    }
    std::string key = token(s);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(generators_.size());
    generators_.push_back(s);
    index_.emplace(std::move(key), id);
    return id;
  }

  std::optional<std::uint32_t> find(const GenSymbol& s) const {
    return find_token(token(s));
  }
  std::optional<std::uint32_t> find_token(const std::string& key) const {
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    return std::nullopt;
  }

  std::uint32_t id(const GenSymbol& s) const {
    auto i = find(s);
    if (!i) throw std::out_of_range("unknown generator " + token(s));
    return *i;
  }

  std::size_t add_relator(Relator r) {
    if (r.empty()) throw std::invalid_argument("relators must be nonempty");
    for (const RelatorEntry& e : r) {
      if (e.generator >= generators_.size()) {
        throw std::out_of_range("relator uses an undeclared generator");
      }
      if (e.exponent != 1 && e.exponent != -1) {
        throw std::invalid_argument("relator exponents must be +1 or -1");
      }
    }
    relators_.push_back(std::move(r));
    return relators_.size() - 1;
  }

  Relator& relator(std::size_t i) { return relators_.at(i); }

  friend bool operator==(const Presentation& p, const Presentation& q) {
    return p.rank_ == q.rank_ && p.generators_ == q.generators_ &&
           p.relators_ == q.relators_ && p.meta_ == q.meta_;
  }

 private:
  int rank_ = 1;
  std::vector<GenSymbol> generators_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<Relator> relators_;
  PresentationMetadata meta_;
};

/// |X| plus the total number of letters over all relators.
inline std::size_t length(const Presentation& p) {
  std::size_t total = p.generators().size();
  for (const Relator& r : p.relators()) total += r.size();
  return total;
}

inline std::string to_string(const Relator& r, const Presentation& p) {
  std::string s;
  for (const RelatorEntry& e : r) {
    if (!s.empty()) s += ' ';
    s += token(p.generators()[e.generator]);
    if (e.exponent < 0) s += "^-1";
  }
  return s;
}

/// Interpretation of each generator (by index) as an automorphism.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<std::optional<FreeAutomorphism>> images)
      : images_(std::move(images)) {}

  void resize(std::size_t n) { images_.resize(n); }
  void set(std::uint32_t gen, FreeAutomorphism f) {
    if (gen >= images_.size()) images_.resize(gen + 1);
    images_[gen] = std::move(f);
  }
  bool bound(std::uint32_t gen) const {
    return gen < images_.size() && images_[gen].has_value();
  }
  const FreeAutomorphism& at(std::uint32_t gen) const {
    if (!bound(gen)) {
      throw std::out_of_range("unbound generator #" + std::to_string(gen));
    }
    return *images_[gen];
  }
  std::size_t size() const { return images_.size(); }

 private:
  std::vector<std::optional<FreeAutomorphism>> images_;
};

/// Left-to-right composition of the images of r's entries.
inline FreeAutomorphism evaluate_relator(const Relator& r, const Assignment& a,
                                         int rank) {
  FreeAutomorphism acc = FreeAutomorphism::identity(rank);
  for (const RelatorEntry& e : r) {
    const FreeAutomorphism& g = a.at(e.generator);
    acc = e.exponent > 0 ? compose(acc, g) : compose(acc, g.inverse());
  }
  return acc;
}

struct RelatorFailure {
  std::size_t relator;
  std::string text;    // the relator, as tokens
  std::string action;  // basis action of its image
};

struct InnerRelatorResult {
  std::size_t relator;
  Word conjugator;
};

/// Outcome of checking every relator of a presentation.
struct VerificationReport {
  std::size_t checked = 0;
  std::size_t identity = 0;
  std::vector<InnerRelatorResult> inner;
  std::vector<RelatorFailure> failures;

  bool ok() const { return failures.empty(); }
};

inline std::string to_string(const VerificationReport& r) {
  std::string s = "checked " + std::to_string(r.checked) + " relators: " +
                  std::to_string(r.identity) + " identity, " +
                  std::to_string(r.inner.size()) + " inner, " +
                  std::to_string(r.failures.size()) + " failures\n";
  for (const auto& in : r.inner) {
    s += "relator " + std::to_string(in.relator) +
         " is inner with conjugator " + to_string(in.conjugator) + "\n";
  }
  for (const auto& f : r.failures) {
    s += "FAIL relator " + std::to_string(f.relator) + ": " + f.text + "\n";
    s += f.action;
  }
  return s;
}

/// Evaluates every relator. Relators listed in metadata().inner_relators pass
/// when their image is inner; all others must evaluate to the identity.
inline VerificationReport verify(const Presentation& p, const Assignment& a) {
  for (std::uint32_t g = 0; g < p.generators().size(); ++g) {
    if (!a.bound(g)) {
      throw std::out_of_range("assignment does not bind " +
                              token(p.generators()[g]));
    }
  }
  std::vector<bool> inner_flag(p.relators().size(), false);
  for (std::size_t i : p.metadata().inner_relators) {
    if (i < inner_flag.size()) inner_flag[i] = true;
  }

  VerificationReport report;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    FreeAutomorphism img = evaluate_relator(p.relators()[i], a, p.rank());
    ++report.checked;
    if (inner_flag[i]) {
      if (auto g = is_inner(img)) {
        report.inner.push_back({i, *g});
        continue;
      }
    } else if (img.is_identity()) {
      ++report.identity;
      continue;
    }
    report.failures.push_back(
        {i, to_string(p.relators()[i], p), to_string(img)});
  }
  return report;
}

}  // namespace autfn
