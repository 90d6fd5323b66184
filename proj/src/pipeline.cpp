#include "fgcx/pipeline.hpp"

#include "fgcx/errors.hpp"

namespace fgcx {

Word gen_wk(std::int64_t k) {
  if (k < 1) throw InvalidArgument("k must be >= 1, got " + std::to_string(k));
  const auto n = static_cast<std::uint32_t>(2 * k);
  const std::uint32_t gamma = n;
  auto a = [](std::uint32_t i) { return Letter(i - 1, 1); };  // a_i, 1-based
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(6 * k + 3));
  for (std::uint32_t i = 1; i < n; ++i) {
    letters.push_back(a(i));
    letters.push_back(a(i + 1));
    letters.push_back(a(i));
  }
  letters.push_back(a(n));
  letters.push_back(Letter(gamma, 1));
  letters.push_back(a(1));
  letters.push_back(Letter(gamma, -1));
  letters.push_back(a(n));
  letters.push_back(Letter(gamma, 1));
  return Word(letters);
}

bool VerificationReport::consistent() const {
  if (graph_status == Connectivity::kTwoConnected && word.size() >= 2 && primitive) return false;
  if (primitive != certificate.primitive) return false;
  return true;
}

VerificationReport verify(std::int64_t k, const VerifyOptions& options) {
  VerificationReport r;
  r.k = k;
  r.alphabet = wk_alphabet(k);
  r.word = gen_wk(k);
  r.abelianization = abelianize(r.word, r.alphabet);
  r.homology_primitive = homology_primitive(r.abelianization);

  const CyclicWord cyclic = cyclic_reduce(r.word).cyclic;
  r.graph_status = classify(build_whitehead_graph(cyclic, r.alphabet)).kind;

  PrimitivityResult result = is_primitive(r.word, r.alphabet, options.primitivity);
  r.primitive = result.primitive;
  r.certificate = std::move(result.certificate);

  if (options.run_geometry) {
    const MetricGraph gk = build_Gk(k);
    const PLLoop fk = build_fk(gk, k);
    r.epsilon = epsilon(gk, fk);
    r.surjective = is_surjective(gk, fk);
    r.trace_matches = trace_word(gk, fk, canonical_tree(gk, k), r.alphabet) == r.word;
  }
  return r;
}

nlohmann::json epsilon_to_json(const Rational& eps) {
  return {{"num", eps.numerator()}, {"den", eps.denominator()}, {"unit", "2pi"}, {"decimal", to_double(eps)}};
}

namespace {

nlohmann::json aut_to_json(const WhiteheadAut& sigma, const Alphabet& alphabet) {
  nlohmann::json support = nlohmann::json::array();
  for (std::uint32_t i = 0; i < 2 * sigma.rank(); ++i) {
    const Letter x[1] = {Letter::from_index(i)};
    if (sigma.contains(x[0])) support.push_back(serialize(x, alphabet));
  }
  const Letter a[1] = {sigma.multiplier()};
  return {{"multiplier", serialize(a, alphabet)}, {"support", support}};
}

nlohmann::json descent_to_json(const DescentEvidence& ev, const Alphabet& alphabet) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& step : ev.trace.steps) {
    trace.push_back({{"automorphism", aut_to_json(step.aut, alphabet)},
                     {"word", serialize(step.result, alphabet)},
                     {"length", step.length}});
  }
  return trace;
}

}  // namespace

nlohmann::json certificate_to_json(const PrimitivityCertificate& cert, const Alphabet& alphabet) {
  nlohmann::json j{{"verdict", cert.primitive ? "primitive" : "non_primitive"}, {"method", cert.method()}};
  if (cert.descent) {
    j["trace"] = descent_to_json(*cert.descent, alphabet);
    j["minimal_word"] = serialize(cert.descent->minimal, alphabet);
    j["final_step_candidates"] = cert.descent->final_step_candidates;
  }
  if (cert.graph) {
    j["graph_status"] = to_string(Connectivity::kTwoConnected);
  }
  return j;
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json certs = nlohmann::json::array();
  if (r.certificate.descent) {
    PrimitivityCertificate only = r.certificate;
    only.graph.reset();
    certs.push_back(certificate_to_json(only, r.alphabet));
  }
  if (r.certificate.graph) {
    PrimitivityCertificate only = r.certificate;
    only.descent.reset();
    certs.push_back(certificate_to_json(only, r.alphabet));
  }
  nlohmann::json j{{"k", r.k},
                   {"word", serialize(r.word, r.alphabet)},
                   {"length", r.word.size()},
                   {"abelianization", r.abelianization},
                   {"homology_primitive", r.homology_primitive},
                   {"graph_status", to_string(r.graph_status)},
                   {"primitive", r.primitive},
                   {"certificates", certs}};
  if (r.epsilon) {
    j["epsilon"] = epsilon_to_json(*r.epsilon);
    j["surjective"] = r.surjective;
    j["trace_matches"] = r.trace_matches;
  }
  return j;
}

}  // namespace fgcx
