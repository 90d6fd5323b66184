#include <doctest.h>

#include <random>

#include "fgcx/errors.hpp"
#include "fgcx/pipeline.hpp"
#include "fgcx/whitehead_decision.hpp"
#include "oracles.hpp"

using namespace fgcx;

namespace {

const Letter a1{0, 1};
const Letter A1{0, -1};
const Letter a2{1, 1};
const Letter A2{1, -1};

CyclicWord cyc(const Word& w) { return cyclic_reduce(w).cyclic; }

}  // namespace

TEST_CASE("reduce_once") {
  const Alphabet ab2 = Alphabet::standard(2);
  auto r = reduce_once(cyc(Word{a1, a2, a1}), ab2);
  REQUIRE(r);
  CHECK(r->result.size() <= 2);
  CHECK(cyc(apply_whitehead_aut(r->aut, Word{a1, a2, a1})) == r->result);

  CHECK_FALSE(reduce_once(cyc(Word{a1}), ab2));
  CHECK_FALSE(reduce_once(cyc(Word{a1, a1}), Alphabet::standard(1)));
  CHECK_THROWS_AS(reduce_once(cyc(Word{a1, a2}), Alphabet::standard(3), DescentOptions{2, 1}), RankGuardError);
}

TEST_CASE("reduce_once picks the first maximal reducer in enumeration order") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rank = 2 + trial % 2;
    const Alphabet ab = Alphabet::standard(rank);
    CyclicWord c = cyc(oracle::random_word(rng, rank, 12));
    if (c.size() < 2) continue;

    // Sequential scan over the brute-force pair list.
    std::size_t best = c.size();
    std::optional<WhiteheadAut> expected;
    for (const auto& [m, mask] : oracle::all_whitehead_pairs(rank)) {
      WhiteheadAut s(rank, m, mask);
      std::size_t len = cyc(apply_whitehead_aut(s, c.word())).size();
      if (len < best) {
        best = len;
        expected = s;
      }
    }
    auto got_seq = reduce_once(c, ab, DescentOptions{kDefaultRankGuard, 1});
    auto got_par = reduce_once(c, ab, DescentOptions{kDefaultRankGuard, 4});
    REQUIRE(got_seq.has_value() == expected.has_value());
    REQUIRE(got_par.has_value() == expected.has_value());
    if (expected) {
      CHECK(got_seq->aut == *expected);
      CHECK(got_par->aut == *expected);
      CHECK(got_seq->result.size() == best);
    }
  }
}

TEST_CASE("minimize") {
  const Alphabet ab2 = Alphabet::standard(2);
  auto m = minimize(Word{a1, a2, a1}, ab2);
  CHECK(m.minimal.size() == 1);
  CHECK(m.trace.steps.size() == 2);
  std::size_t prev = 3;
  for (const auto& step : m.trace.steps) {
    CHECK(step.length < prev);
    CHECK(step.length == step.result.size());
    prev = step.length;
  }

  auto m1 = minimize(gen_wk(1), wk_alphabet(1));
  CHECK(m1.minimal.size() >= 2);

  auto trivial = minimize(Word{a1}, ab2);
  CHECK(trivial.minimal.word() == Word{a1});
  CHECK(trivial.trace.steps.empty());

  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = oracle::random_word(rng, 3, 12);
    auto mm = minimize(w, Alphabet::standard(3));
    CHECK(mm.trace.steps.size() <= w.size());
  }
}

TEST_CASE("is_primitive examples") {
  const Alphabet ab2 = Alphabet::standard(2);
  auto r = is_primitive(Word{a1}, ab2);
  CHECK(r.primitive);
  CHECK(r.certificate.kind() == CertificateKind::kPrimitive);

  for (std::int64_t k = 1; k <= 3; ++k) {
    auto rk = is_primitive(gen_wk(k), wk_alphabet(k));
    CHECK_FALSE(rk.primitive);
    CHECK(rk.certificate.kind() == CertificateKind::kBoth);
    CHECK(rk.certificate.method() == "both");
    CHECK(rk.certificate.descent->minimal.size() >= 2);
    CHECK(check_certificate(gen_wk(k), wk_alphabet(k), rk.certificate).empty());
  }

  auto comm = is_primitive(Word{a1, a2, A1, A2}, ab2);
  CHECK_FALSE(comm.primitive);
  CHECK_FALSE(homology_primitive(abelianize(Word{a1, a2, A1, A2}, ab2)));

  auto empty = is_primitive(Word{}, ab2);
  CHECK_FALSE(empty.primitive);
  CHECK(empty.certificate.kind() == CertificateKind::kNonPrimitiveMinimal);
  CHECK(check_certificate(Word{}, ab2, empty.certificate).empty());

  auto prim = is_primitive(Word{a1, a2, a1}, ab2);
  CHECK(prim.primitive);
  CHECK(check_certificate(Word{a1, a2, a1}, ab2, prim.certificate).empty());

  // A conjugate of a generator is primitive with an empty trace.
  auto conj = is_primitive(Word{a2, a1, A2}, ab2);
  CHECK(conj.primitive);
  CHECK(conj.certificate.descent->trace.steps.empty());
}

TEST_CASE("rank guard and graph-only certificates") {
  const Alphabet ab3 = Alphabet::standard(3);
  PrimitivityOptions tight;
  tight.descent.rank_guard = 2;
  CHECK_THROWS_AS(is_primitive(Word{a1, a2, a1}, ab3, tight), UndecidedError);

  const std::int64_t k = 25;
  auto r = is_primitive(gen_wk(k), wk_alphabet(k));
  CHECK_FALSE(r.primitive);
  CHECK(r.certificate.kind() == CertificateKind::kNonPrimitiveGraph);
  CHECK_FALSE(r.certificate.descent);
  CHECK(check_certificate(gen_wk(k), wk_alphabet(k), r.certificate).empty());

  PrimitivityOptions no_graph;
  no_graph.run_graph = false;
  auto d = is_primitive(gen_wk(1), wk_alphabet(1), no_graph);
  CHECK(d.certificate.kind() == CertificateKind::kNonPrimitiveMinimal);
}

TEST_CASE("check_certificate rejects tampered evidence") {
  const Alphabet ab2 = Alphabet::standard(2);
  const Word w{a1, a2, a1};
  auto r = is_primitive(w, ab2);
  REQUIRE(r.certificate.descent);

  auto bad_step = r.certificate;
  bad_step.descent->trace.steps.front().result = cyc(Word{a2, a2});
  CHECK_FALSE(check_certificate(w, ab2, bad_step).empty());

  auto bad_verdict = r.certificate;
  bad_verdict.primitive = false;
  CHECK_FALSE(check_certificate(w, ab2, bad_verdict).empty());

  // Non-primitive claim on a reducible word.
  PrimitivityCertificate fake;
  fake.descent = DescentEvidence{{}, cyc(w), whitehead_aut_count(2)};
  CHECK_FALSE(check_certificate(w, ab2, fake).empty());

  // Graph witness that is not two-connected.
  PrimitivityCertificate fake_graph;
  fake_graph.graph = GraphEvidence{build_whitehead_graph(cyc(w), ab2)};
  CHECK_FALSE(check_certificate(w, ab2, fake_graph).empty());
}

TEST_CASE("nielsen_primitive_corpus") {
  const Alphabet ab2 = Alphabet::standard(2);
  CHECK(nielsen_primitive_corpus(ab2, 0, 8) == std::set<CyclicWord>{cyc(Word{a1})});
  auto depth1 = nielsen_primitive_corpus(ab2, 1, 8);
  CHECK(depth1.count(cyc(Word{A1})) == 1);
  CHECK(depth1.count(cyc(Word{a1, a2})) == 1);

  for (std::size_t rank : {2, 3}) {
    const Alphabet ab = Alphabet::standard(rank);
    auto corpus = nielsen_primitive_corpus(ab, 5, 8);
    CHECK(corpus.size() > 20);
    for (const auto& c : corpus) {
      auto r = is_primitive(c.word(), ab);
      CHECK_MESSAGE(r.primitive, serialize(c, ab));
      if (c.size() >= 2) {
        auto kind = classify(build_whitehead_graph(c, ab)).kind;
        CHECK((kind == Connectivity::kDisconnected || kind == Connectivity::kCutVertex));
      }
    }
  }
}

TEST_CASE("verdicts are invariant under automorphisms") {
  std::mt19937_64 rng(23);
  int primitive_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rank = 2 + trial % 2;
    const Alphabet ab = Alphabet::standard(rank);
    Word w = oracle::random_word(rng, rank, 12);
    if (trial % 4 == 0) {
      // Bias towards primitive inputs: images of a generator.
      auto corpus = nielsen_primitive_corpus(ab, 3, 12);
      std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
      auto it = corpus.begin();
      std::advance(it, static_cast<std::ptrdiff_t>(pick(rng)));
      w = it->word();
    }
    auto pairs = oracle::all_whitehead_pairs(rank);
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    const auto& [m, mask] = pairs[pick(rng)];
    WhiteheadAut sigma(rank, m, mask);
    const bool p = is_primitive(w, ab).primitive;
    CHECK(p == is_primitive(apply_whitehead_aut(sigma, w), ab).primitive);
    primitive_count += p;

    // Generator permutations and inversions (not enumerated) leave verdicts unchanged.
    std::vector<Letter> permuted;
    for (Letter x : w.letters()) permuted.emplace_back((x.gen() + 1) % rank, x.gen() == 0 ? -x.sign() : x.sign());
    CHECK(p == is_primitive(Word(permuted), ab).primitive);

    if (p) {
      CHECK(homology_primitive(abelianize(w, ab)));
      CyclicWord c = cyc(w);
      if (c.size() >= 2) CHECK(classify(build_whitehead_graph(c, ab)).kind != Connectivity::kTwoConnected);
    }
  }
  CHECK(primitive_count > 20);
}
