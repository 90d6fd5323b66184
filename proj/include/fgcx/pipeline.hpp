#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fgcx/free_group.hpp"
#include "fgcx/metric_graph.hpp"
#include "fgcx/rational.hpp"
#include "fgcx/whitehead_decision.hpp"
#include "fgcx/whitehead_graph.hpp"

namespace fgcx {

/// a1 a2 a1 . a2 a3 a2 ... a_{2k-1} a_2k a_{2k-1} . a_2k g a1 g^-1 a_2k g,
/// over wk_alphabet(k). Length 6k + 3.
Word gen_wk(std::int64_t k);

struct VerificationReport {
  std::int64_t k = 0;
  Alphabet alphabet;
  Word word;
  AbelianVector abelianization;
  bool homology_primitive = false;
  Connectivity graph_status = Connectivity::kEmpty;
  bool primitive = true;
  PrimitivityCertificate certificate;
  std::optional<Rational> epsilon;  // units of 2*pi
  bool surjective = false;
  bool trace_matches = false;

  /// Two-connected graph on a word of length >= 2 forces a non-primitive verdict.
  bool consistent() const;
};

struct VerifyOptions {
  PrimitivityOptions primitivity;
  bool run_geometry = true;
};

VerificationReport verify(std::int64_t k, const VerifyOptions& options = {});

nlohmann::json certificate_to_json(const PrimitivityCertificate& cert, const Alphabet& alphabet);
nlohmann::json report_to_json(const VerificationReport& report);

/// {"num", "den", "unit": "2pi", "decimal"}
nlohmann::json epsilon_to_json(const Rational& eps);

/// Exit codes of run_cli.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitUndecided = 3 };

/// Subcommands genw, wgraph, primitive, epsilon, trace, verify. Normal output
/// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fgcx
