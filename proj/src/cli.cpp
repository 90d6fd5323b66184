#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fgcx/errors.hpp"
#include "fgcx/pipeline.hpp"

namespace fgcx {

namespace {

Alphabet alphabet_for(std::size_t rank, const std::string& gens) {
  if (gens.empty()) return Alphabet::standard(rank);
  std::vector<std::string> names;
  std::stringstream ss(gens);
  for (std::string name; std::getline(ss, name, ',');) names.push_back(name);
  Alphabet a(std::move(names));
  if (a.rank() != rank) {
    throw InvalidArgument("--gens lists " + std::to_string(a.rank()) + " names but --rank is " + std::to_string(rank));
  }
  return a;
}

std::string decimal(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

void print_report(const VerificationReport& r, std::ostream& out) {
  out << "k: " << r.k << "\n";
  out << "word: " << serialize(r.word, r.alphabet) << "\n";
  out << "length: " << r.word.size() << "\n";
  out << "abelianization:";
  for (auto e : r.abelianization) out << ' ' << e;
  out << "\n";
  out << "homology_primitive: " << (r.homology_primitive ? "true" : "false") << "\n";
  out << "graph_status: " << to_string(r.graph_status) << "\n";
  out << "primitive: " << (r.primitive ? "true" : "false") << " (" << r.certificate.method() << ")\n";
  if (r.epsilon) {
    out << "epsilon: " << to_string(*r.epsilon) << " * 2pi = " << decimal(to_double(*r.epsilon) * 2 * 3.14159265358979323846)
        << "\n";
    out << "surjective: " << (r.surjective ? "true" : "false") << "\n";
    out << "trace_matches: " << (r.trace_matches ? "true" : "false") << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free-group words, Whitehead graphs and epsilon-maps of the circle", "fgcx"};
  app.require_subcommand(1);

  std::int64_t k = 0;
  std::string word_text;
  std::size_t rank = 0;
  std::string gens;
  std::string dot_path;
  std::string eps_text;
  bool json = false;
  bool chord = false;
  std::size_t rank_guard = kDefaultRankGuard;

  auto* genw = app.add_subcommand("genw", "Print the word w_k");
  genw->add_option("--k", k, "k >= 1")->required();

  auto* wgraph = app.add_subcommand("wgraph", "Whitehead graph of a word");
  wgraph->add_option("--word", word_text)->required();
  wgraph->add_option("--rank", rank)->required();
  wgraph->add_option("--gens", gens, "comma-separated generator names (default a1..aN)");
  wgraph->add_option("--dot", dot_path, "write the graph in DOT format");
  wgraph->add_flag("--json", json, "print the edge list as JSON");

  auto* primitive = app.add_subcommand("primitive", "Decide whether a word is primitive");
  primitive->add_option("--word", word_text)->required();
  primitive->add_option("--rank", rank)->required();
  primitive->add_option("--gens", gens, "comma-separated generator names (default a1..aN)");
  primitive->add_option("--rank-guard", rank_guard, "largest rank for full Whitehead enumeration");
  primitive->add_flag("--json", json);

  auto* eps_cmd = app.add_subcommand("epsilon", "Exact epsilon of f_k");
  eps_cmd->add_option("--k", k)->required();
  eps_cmd->add_flag("--chord", chord, "also report the chord-metric value");

  auto* trace = app.add_subcommand("trace", "Read the word of f_k off the canonical spanning tree");
  trace->add_option("--k", k)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the full pipeline for one k");
  auto* k_opt = verify_cmd->add_option("--k", k);
  auto* eps_opt = verify_cmd->add_option("--eps", eps_text, "target epsilon as a rational fraction of 2pi");
  k_opt->excludes(eps_opt);
  verify_cmd->add_option("--rank-guard", rank_guard, "largest rank for full Whitehead enumeration");
  verify_cmd->add_flag("--json", json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (verify_cmd->parsed() && k_opt->count() == 0 && eps_opt->count() == 0) {
      throw CLI::RequiredError("verify needs --k or --eps");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (genw->parsed()) {
      out << serialize(gen_wk(k), wk_alphabet(k)) << "\n";
      return kExitOk;
    }

    if (wgraph->parsed() || primitive->parsed()) {
      const Alphabet alphabet = alphabet_for(rank, gens);
      const Word w = parse_word(word_text, alphabet);

      if (wgraph->parsed()) {
        const CyclicWord c = cyclic_reduce(w).cyclic;
        const WhiteheadGraph g = build_whitehead_graph(c, alphabet);
        if (!dot_path.empty()) {
          std::ofstream f(dot_path);
          if (!f) throw Error("cannot write " + dot_path);
          f << to_dot(g);
        }
        if (json) {
          out << to_edge_list_json(g) << "\n";
          return kExitOk;
        }
        const auto status = classify(g);
        out << "cyclic word: " << serialize(c, alphabet) << "\n";
        out << "edges: " << g.edges().size() << "\n";
        for (const auto& e : g.edges()) out << "  " << g.vertex_name(e.first) << " -- " << g.vertex_name(e.second) << "\n";
        out << "status: " << to_string(status.kind) << "\n";
        if (status.cut_vertex) out << "cut vertex: " << g.vertex_name(*status.cut_vertex) << "\n";
        return kExitOk;
      }

      PrimitivityOptions options;
      options.descent.rank_guard = rank_guard;
      const auto result = is_primitive(w, alphabet, options);
      if (json) {
        out << certificate_to_json(result.certificate, alphabet).dump() << "\n";
        return kExitOk;
      }
      out << "verdict: " << (result.primitive ? "primitive" : "non_primitive") << "\n";
      out << "method: " << result.certificate.method() << "\n";
      if (const auto& d = result.certificate.descent) {
        out << "trace:\n";
        for (const auto& step : d->trace.steps) {
          out << "  " << describe(step.aut, alphabet) << " -> " << serialize(step.result, alphabet) << "  [length "
              << step.length << "]\n";
        }
        out << "minimal word: " << serialize(d->minimal, alphabet) << "\n";
      }
      if (result.certificate.graph) out << "graph: two_connected\n";
      return kExitOk;
    }

    if (eps_cmd->parsed()) {
      const Rational e = epsilon_of_fk(k);
      constexpr double kTwoPi = 2 * 3.14159265358979323846;
      out << "epsilon(f_" << k << ") = " << to_string(e) << " * 2pi = " << decimal(to_double(e) * kTwoPi) << "\n";
      if (chord) out << "chord: " << decimal(chord_from_arc(e)) << "\n";
      return kExitOk;
    }

    if (trace->parsed()) {
      const MetricGraph gk = build_Gk(k);
      const Alphabet alphabet = wk_alphabet(k);
      const Word traced = trace_word(gk, build_fk(gk, k), canonical_tree(gk, k), alphabet);
      out << serialize(traced, alphabet) << "\n";
      out << "matches w_" << k << ": " << (traced == gen_wk(k) ? "true" : "false") << "\n";
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      if (eps_opt->count() > 0) {
        const Rational eps = parse_rational(eps_text);
        if (eps <= kZero) throw ParseError("--eps must be positive");
        k = find_k_for_epsilon(eps);
      }
      VerifyOptions options;
      options.primitivity.descent.rank_guard = rank_guard;
      const VerificationReport r = verify(k, options);
      if (json) {
        out << report_to_json(r).dump() << "\n";
      } else {
        print_report(r, out);
      }
      if (!r.consistent()) {
        err << "error: report is inconsistent\n";
        return kExitFailure;
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UndecidedError& e) {
    err << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace fgcx
