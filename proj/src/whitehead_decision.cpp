#include "fgcx/whitehead_decision.hpp"

#include <algorithm>
#include <thread>

#include "fgcx/errors.hpp"

namespace fgcx {

namespace {

struct Candidate {
  std::size_t length;
  std::optional<WhiteheadAut> aut;
};

// Best reducer among automorphisms with one multiplier; first in enumeration
// order wins ties.
Candidate best_for_multiplier(std::span<const Letter> cyclic, std::size_t rank, Letter multiplier) {
  Candidate best{cyclic.size(), std::nullopt};
  std::vector<Letter> scratch;
  scratch.reserve(3 * cyclic.size());
  for_each_whitehead_aut(rank, multiplier, [&](const WhiteheadAut& sigma) {
    std::size_t len = image_cyclic_length(sigma, cyclic, scratch);
    if (len < best.length) {
      best.length = len;
      best.aut = sigma;
    }
  });
  return best;
}

void check_alphabet(const Word& w, const Alphabet& alphabet) {
  if (w.min_rank() > alphabet.rank()) throw InvalidArgument("word uses a generator outside the alphabet");
}

}  // namespace

std::optional<Reduction> reduce_once(const CyclicWord& c, const Alphabet& alphabet,
                                     const DescentOptions& options) {
  const std::size_t n = alphabet.rank();
  if (n > options.rank_guard || n > WhiteheadAut::kMaxRank / 2) throw RankGuardError(n, options.rank_guard);
  check_alphabet(c.word(), alphabet);
  if (c.size() <= 1 || n < 2) return std::nullopt;

  const auto multipliers = static_cast<std::uint32_t>(2 * n);
  std::vector<Candidate> per_multiplier(multipliers);
  unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
  threads = std::min<unsigned>(threads, multipliers);

  if (threads <= 1) {
    for (std::uint32_t m = 0; m < multipliers; ++m) {
      per_multiplier[m] = best_for_multiplier(c.letters(), n, Letter::from_index(m));
    }
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint32_t m = t; m < multipliers; m += threads) {
          per_multiplier[m] = best_for_multiplier(c.letters(), n, Letter::from_index(m));
        }
      });
    }
  }

  // Gather in enumeration order so the result matches a sequential scan.
  const Candidate* best = nullptr;
  for (const auto& cand : per_multiplier) {
    if (cand.aut && (best == nullptr || cand.length < best->length)) best = &cand;
  }
  if (best == nullptr) return std::nullopt;
  const WhiteheadAut& sigma = *best->aut;
  return Reduction{sigma, cyclic_reduce(apply_whitehead_aut(sigma, c.word())).cyclic};
}

Minimization minimize(const Word& w, const Alphabet& alphabet, const DescentOptions& options) {
  const std::size_t n = alphabet.rank();
  if (n > options.rank_guard) throw RankGuardError(n, options.rank_guard);
  check_alphabet(w, alphabet);

  Minimization out;
  out.start = cyclic_reduce(w).cyclic;
  out.minimal = out.start;
  while (auto step = reduce_once(out.minimal, alphabet, options)) {
    const std::size_t len = step->result.size();
    out.trace.steps.push_back(DescentStep{step->aut, step->result, len});
    out.minimal = std::move(step->result);
  }
  out.final_step_candidates = out.minimal.size() <= 1 ? 0 : whitehead_aut_count(n);
  return out;
}

CertificateKind PrimitivityCertificate::kind() const {
  if (primitive) return CertificateKind::kPrimitive;
  if (descent && graph) return CertificateKind::kBoth;
  if (graph) return CertificateKind::kNonPrimitiveGraph;
  return CertificateKind::kNonPrimitiveMinimal;
}

std::string PrimitivityCertificate::method() const {
  if (descent && graph) return "both";
  return graph ? "graph" : "descent";
}

PrimitivityResult is_primitive(const Word& w, const Alphabet& alphabet, const PrimitivityOptions& options) {
  check_alphabet(w, alphabet);
  const CyclicWord c = cyclic_reduce(w).cyclic;
  PrimitivityCertificate cert;

  if (c.empty()) {
    cert.descent = DescentEvidence{{}, c, 0};
    return {false, cert};
  }
  if (c.size() == 1) {
    cert.primitive = true;
    cert.descent = DescentEvidence{{}, c, 0};
    return {true, cert};
  }

  if (options.run_graph) {
    WhiteheadGraph g = build_whitehead_graph(c, alphabet);
    if (classify(g).kind == Connectivity::kTwoConnected) cert.graph = GraphEvidence{std::move(g)};
  }

  const bool within_guard = alphabet.rank() <= options.descent.rank_guard;
  if (options.run_descent && within_guard) {
    Minimization m = minimize(w, alphabet, options.descent);
    cert.primitive = m.minimal.size() == 1;
    if (cert.primitive && cert.graph) {
      throw std::logic_error("descent reached length 1 on a word with a two-connected Whitehead graph");
    }
    cert.descent = DescentEvidence{std::move(m.trace), std::move(m.minimal), m.final_step_candidates};
    return {cert.primitive, std::move(cert)};
  }

  if (cert.graph) return {false, std::move(cert)};
  throw UndecidedError("undecided at rank " + std::to_string(alphabet.rank()) + ": descent " +
                       (options.run_descent ? "exceeds rank guard " + std::to_string(options.descent.rank_guard)
                                            : std::string("disabled")) +
                       " and the Whitehead graph has a cut vertex or is disconnected");
}

std::string check_certificate(const Word& w, const Alphabet& alphabet, const PrimitivityCertificate& cert,
                              const DescentOptions& options) {
  check_alphabet(w, alphabet);
  const CyclicWord start = cyclic_reduce(w).cyclic;
  if (!cert.descent && !cert.graph) return "certificate carries no evidence";
  if (cert.primitive && cert.graph) return "primitive certificate carries a graph witness";

  if (cert.descent) {
    const auto& ev = *cert.descent;
    CyclicWord current = start;
    for (std::size_t i = 0; i < ev.trace.steps.size(); ++i) {
      const auto& step = ev.trace.steps[i];
      if (step.aut.rank() != alphabet.rank()) return "step " + std::to_string(i) + ": automorphism rank mismatch";
      CyclicWord next = cyclic_reduce(apply_whitehead_aut(step.aut, current.word())).cyclic;
      if (next != step.result) return "step " + std::to_string(i) + ": result does not replay";
      if (next.size() != step.length) return "step " + std::to_string(i) + ": recorded length is wrong";
      if (next.size() >= current.size()) return "step " + std::to_string(i) + ": length does not decrease";
      current = std::move(next);
    }
    if (current != ev.minimal) return "trace does not end at the recorded minimal word";
    if (cert.primitive) {
      if (current.size() != 1) return "primitive trace does not end at cyclic length 1";
    } else if (!current.empty()) {
      if (current.size() < 2) return "non-primitive minimal word has length 1";
      if (alphabet.rank() > options.rank_guard) return "cannot re-check minimality above the rank guard";
      if (reduce_once(current, alphabet, options)) return "minimal word is still reducible";
      if (ev.final_step_candidates != whitehead_aut_count(alphabet.rank())) {
        return "final step did not enumerate every automorphism";
      }
    }
  }

  if (cert.graph) {
    if (start.size() < 2) return "graph witness on a word of cyclic length < 2";
    WhiteheadGraph g = build_whitehead_graph(start, alphabet);
    if (g.edge_multiset() != cert.graph->graph.edge_multiset()) return "graph witness is not the word's Whitehead graph";
    if (classify(cert.graph->graph).kind != Connectivity::kTwoConnected) return "graph witness is not two-connected";
  }
  return {};
}

std::set<CyclicWord> nielsen_primitive_corpus(const Alphabet& alphabet, std::size_t depth, std::size_t max_len) {
  const std::size_t n = alphabet.rank();
  if (n == 0) throw InvalidArgument("corpus needs rank >= 1");

  using Basis = std::vector<Word>;
  Basis identity;
  for (std::uint32_t i = 0; i < n; ++i) identity.push_back(Word{Letter(i, 1)});

  std::set<Basis> seen{identity};
  std::vector<Basis> frontier{identity};
  std::set<CyclicWord> out;
  auto collect = [&](const Basis& b) {
    CyclicWord c = cyclic_reduce(b.front()).cyclic;
    if (c.size() <= max_len) out.insert(std::move(c));
  };
  collect(identity);

  for (std::size_t level = 0; level < depth; ++level) {
    std::vector<Basis> next;
    auto visit = [&](Basis b) {
      if (seen.insert(b).second) {
        collect(b);
        next.push_back(std::move(b));
      }
    };
    for (const Basis& b : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        Basis inv = b;
        inv[i] = inv[i].inverse();
        visit(std::move(inv));
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          Basis prod = b;
          prod[i] = prod[i] * prod[j];
          visit(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace fgcx
