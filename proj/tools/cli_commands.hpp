#pragma once

// Subcommand implementations for the autfn command-line tool. Each returns
// the process exit code: 0 success, 1 verification failure, 2 usage or
// parse error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "autfn/constructors.hpp"
#include "autfn/format.hpp"
#include "autfn/presentation.hpp"
#include "autfn/proof_checks.hpp"
#include "autfn/symmetric_provider.hpp"

namespace autfn::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

struct NRange {
  int lo = 0;
  int hi = 0;
};

/// `A..B` or a single `A`.
inline NRange parse_range(const std::string& text) {
  NRange r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text + "', expected A..B");
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

inline Presentation build_family(const std::string& family, int n,
                                 const std::string& provider, bool compress) {
  if (family == "gersten") return gersten_presentation(n);
  if (family == "linear") return linear_presentation(n);
  if (family == "short-aut") {
    if (n < 6) throw std::invalid_argument("short-aut requires n >= 6");
    return short_aut_presentation(n, make_provider(provider, n));
  }
  if (family == "out-plus") {
    if (n < 6) throw std::invalid_argument("out-plus requires n >= 6");
    return out_plus_presentation(n, make_provider(provider, n), compress);
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

inline std::string summary(const Presentation& p) {
  return "generators " + std::to_string(p.generators().size()) + ", relators " +
         std::to_string(p.relators().size()) + ", length " +
         std::to_string(length(p));
}

struct GenOptions {
  std::string family;
  int n = 0;
  std::string provider = "coxeter";
  bool compress = false;
  std::string out;  // empty: write to the output stream
};

inline int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  Presentation p;
  try {
    p = build_family(o.family, o.n, o.provider, o.compress);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const std::string text = serialize(p);
  if (o.out.empty()) {
    out << text;
    err << o.family << " n=" << o.n << ": " << summary(p) << "\n";
  } else {
    std::ofstream f(o.out);
    if (!f || !(f << text)) {
      err << "error: cannot write " << o.out << "\n";
      return kUsage;
    }
    out << o.family << " n=" << o.n << ": " << summary(p) << "\n";
  }
  return kOk;
}

inline int cmd_verify(const std::string& path, std::ostream& out,
                      std::ostream& err) {
  std::ifstream f(path);
  if (!f) {
    err << "error: cannot read " << path << "\n";
    return kUsage;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  Presentation p;
  Assignment a;
  try {
    p = parse(buf.str());
    a = canonical_assignment(p);
  } catch (const ParseError& e) {
    err << path << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << path << ": " << e.what() << "\n";
    return kUsage;
  }
  VerificationReport rep = verify(p, a);
  out << p.metadata().family << " n=" << p.rank() << ": " << summary(p) << "\n";
  out << to_string(rep);
  return rep.ok() ? kOk : kFailed;
}

struct StatsOptions {
  std::string family;
  NRange range;
  bool doubling = false;  // n = lo, 2 lo, 4 lo, ... <= hi
  std::string provider = "coxeter";
  bool compress = false;
};

inline PresentationShape family_shape(const StatsOptions& o, int n) {
  if (o.family == "gersten") return gersten_shape(n);
  if (o.family == "linear") return linear_shape(n);
  return shape_of(build_family(o.family, n, o.provider, o.compress));
}

inline int cmd_stats(const StatsOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<int> ns;
  for (int n = o.range.lo; n <= o.range.hi; n = o.doubling ? 2 * n : n + 1) {
    ns.push_back(n);
    if (n <= 0) break;
  }
  const bool short_family = o.family == "short-aut" || o.family == "out-plus";
  try {
    out << std::left << std::setw(6) << "n" << std::setw(12) << "generators"
        << std::setw(12) << "relators" << std::setw(14) << "length"
        << std::setw(12) << "ratio(2n)";
    if (short_family) out << std::setw(12) << "gen-excess" << "rel-excess";
    out << "\n";
    for (int n : ns) {
      PresentationShape s = family_shape(o, n);
      PresentationShape d = family_shape(o, 2 * n);
      std::ostringstream ratio;
      ratio << std::fixed << std::setprecision(4)
            << static_cast<double>(d.length) / static_cast<double>(s.length);
      out << std::setw(6) << n << std::setw(12) << s.generators << std::setw(12)
          << s.relators << std::setw(14) << s.length << std::setw(12)
          << ratio.str();
      if (short_family) {
        SymmetricProvider sp = make_provider(o.provider, n);
        const std::size_t base_rel = sp.relators.size() + 4 * sp.x1.size() +
                                     4 * sp.x2.size();
        out << std::setw(12) << (s.generators - sp.generators.size())
            << (s.relators - base_rel);
      }
      out << "\n";
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

inline int cmd_check_proofs(NRange range, std::uint64_t seed, std::ostream& out,
                            std::ostream& err) {
  if (range.lo < 3) {
    err << "error: check-proofs requires n >= 3\n";
    return kUsage;
  }
  std::size_t failures = 0;
  auto run = [&](const CheckReport& r) {
    failures += r.failures();
    out << to_string(r);
  };
  for (int n = range.lo; n <= range.hi; ++n) {
    run(check_linear_identities(n));
    if (n >= 6) run(check_out_plus_identities(n));
    if (n >= 8) run(check_short_aut_identities(n, seed + static_cast<std::uint64_t>(n)));
  }
  out << (failures == 0 ? "all identities hold\n"
                        : std::to_string(failures) + " identity failures\n");
  return failures == 0 ? kOk : kFailed;
}

/// Reads `aK -> <word>` lines (K = 1..n in any order; `#` comments allowed).
inline std::vector<Word> parse_basis_images(const std::string& text) {
  struct Line {
    int k;
    std::string rhs;
    std::size_t line;
    std::size_t column;
  };
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  for (std::size_t no = 1; std::getline(in, raw); ++no) {
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    auto arrow = raw.find("->");
    if (raw[first] != 'a' || arrow == std::string::npos) {
      throw ParseError(no, first + 1, "expected 'aK -> word'");
    }
    int k = 0;
    try {
      k = std::stoi(raw.substr(first + 1, arrow - first - 1));
    } catch (const std::exception&) {
      throw ParseError(no, first + 2, "expected a basis index");
    }
    lines.push_back({k, raw.substr(arrow + 2), no, arrow + 3});
  }
  const int rank = static_cast<int>(lines.size());
  if (rank == 0) throw ParseError(1, 1, "no basis images");
  std::vector<Word> images(static_cast<std::size_t>(rank));
  std::vector<bool> seen(static_cast<std::size_t>(rank) + 1, false);
  for (const Line& l : lines) {
    if (l.k < 1 || l.k > rank || seen[l.k]) {
      throw ParseError(l.line, 1, "basis letters must be a1..a" + std::to_string(rank) +
                                      ", each once");
    }
    seen[l.k] = true;
    try {
      images[l.k - 1] = parse_word(l.rhs, rank, l.line);
    } catch (const ParseError& e) {
      throw ParseError(l.line, l.column + e.column() - 1, e.message());
    }
  }
  return images;
}

inline int cmd_inner(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream f(path);
  if (!f) {
    err << "error: cannot read " << path << "\n";
    return kUsage;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  std::vector<Word> images;
  try {
    images = parse_basis_images(buf.str());
  } catch (const std::exception& e) {
    err << path << ": " << e.what() << "\n";
    return kUsage;
  }
  if (auto g = find_inner_conjugator(images)) {
    out << to_string(*g) << "\n";
    return kOk;
  }
  out << "not inner\n";
  return kFailed;
}

}  // namespace autfn::cli
