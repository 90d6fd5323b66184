#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fgcx/free_group.hpp"
#include "fgcx/whitehead_graph.hpp"

namespace fgcx {

/// Full type II enumeration is refused above this rank unless overridden.
inline constexpr std::size_t kDefaultRankGuard = 11;

struct DescentOptions {
  std::size_t rank_guard = kDefaultRankGuard;
  /// Worker threads for one reduce_once step; 0 means hardware concurrency.
  unsigned threads = 0;
};

struct DescentStep {
  WhiteheadAut aut;
  CyclicWord result;
  std::size_t length;
};

/// Cyclic lengths strictly decrease along the steps.
struct DescentTrace {
  std::vector<DescentStep> steps;
};

struct Reduction {
  WhiteheadAut aut;
  CyclicWord result;
};

/// Best strictly length-reducing type II automorphism, ties broken by
/// enumeration order (multiplier letter index, then support mask). Empty when
/// the word is Whitehead-minimal.
std::optional<Reduction> reduce_once(const CyclicWord& c, const Alphabet& alphabet,
                                     const DescentOptions& options = {});

struct Minimization {
  CyclicWord start;
  CyclicWord minimal;
  DescentTrace trace;
  /// Automorphisms checked at the final, non-reducing step.
  std::uint64_t final_step_candidates = 0;
};

Minimization minimize(const Word& w, const Alphabet& alphabet, const DescentOptions& options = {});

/// Evidence from greedy descent. For a primitive word `minimal` has length 1.
struct DescentEvidence {
  DescentTrace trace;
  CyclicWord minimal;
  std::uint64_t final_step_candidates = 0;
};

/// A two-connected Whitehead graph of a word of cyclic length >= 2.
struct GraphEvidence {
  WhiteheadGraph graph;
};

/// Kinds named after the certificate variants; `kBoth` carries a descent
/// minimum and a graph witness for the same non-primitive word.
enum class CertificateKind { kPrimitive, kNonPrimitiveMinimal, kNonPrimitiveGraph, kBoth };

struct PrimitivityCertificate {
  bool primitive = false;
  std::optional<DescentEvidence> descent;
  std::optional<GraphEvidence> graph;

  CertificateKind kind() const;
  /// "descent" | "graph" | "both"
  std::string method() const;
};

struct PrimitivityOptions {
  DescentOptions descent;
  bool run_descent = true;
  bool run_graph = true;
};

struct PrimitivityResult {
  bool primitive;
  PrimitivityCertificate certificate;
};

/// Throws UndecidedError when the rank exceeds the guard and the Whitehead
/// graph does not certify non-primitivity.
PrimitivityResult is_primitive(const Word& w, const Alphabet& alphabet,
                               const PrimitivityOptions& options = {});

/// Re-derives every claim in the certificate from `w`: replays the trace,
/// re-checks minimality at the final step by full enumeration and
/// re-classifies the graph. Returns an empty string when valid, otherwise the
/// first failure.
std::string check_certificate(const Word& w, const Alphabet& alphabet, const PrimitivityCertificate& cert,
                              const DescentOptions& options = {});

/// Cyclic reductions of images of the first generator under compositions of
/// at most `depth` elementary Nielsen moves (x -> x^-1, x -> xy), keeping
/// those of cyclic length <= max_len.
std::set<CyclicWord> nielsen_primitive_corpus(const Alphabet& alphabet, std::size_t depth,
                                              std::size_t max_len);

}  // namespace fgcx
