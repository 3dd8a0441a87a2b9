#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqemb/audit_suites.hpp"
#include "seqemb/catalog.hpp"
#include "seqemb/json_io.hpp"
#include "seqemb/noncompact.hpp"
#include "seqemb/search.hpp"

namespace seqemb::cli {

// Space syntax: lorentz:p,q (inf accepted), c0, linf, wlp:p.
inline SpaceDescriptor parse_space(const std::string& text) {
  auto parse_num = [](const std::string& s) {
    if (s == "inf") return kInf;
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number: " + s);
    return v;
  };
  if (text == "c0") return SpaceDescriptor::czero();
  if (text == "linf") return SpaceDescriptor::sup();
  if (text.rfind("lorentz:", 0) == 0) {
    const std::string rest = text.substr(8);
    const std::size_t comma = rest.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("lorentz space needs p,q: " + text);
    }
    return SpaceDescriptor::lorentz(parse_num(rest.substr(0, comma)),
                                    parse_num(rest.substr(comma + 1)));
  }
  if (text.rfind("wlp:", 0) == 0) {
    return SpaceDescriptor::weighted(parse_num(text.substr(4)));
  }
  throw std::invalid_argument("unknown space: " + text +
                              " (expected lorentz:p,q | c0 | linf | wlp:p)");
}

namespace detail {

inline FiniteSequence parse_sequence(const std::string& inline_json,
                                     const std::string& file_path) {
  std::string text = inline_json;
  if (text.empty()) {
    if (file_path.empty()) {
      throw std::invalid_argument("provide a sequence via --seq or --seq-file");
    }
    std::ifstream in(file_path);
    if (!in) throw std::invalid_argument("cannot open " + file_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  const json j = json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("sequence must be a JSON array of numbers");
  return FiniteSequence(j.get<std::vector<double>>());
}

inline std::vector<FiniteSequence> parse_center_list(const std::string& inline_json,
                                                     const std::string& file_path) {
  std::string text = inline_json;
  if (text.empty()) {
    if (file_path.empty()) return {};
    std::ifstream in(file_path);
    if (!in) throw std::invalid_argument("cannot open " + file_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  const json j = json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("centers must be a JSON array of arrays");
  std::vector<FiniteSequence> centers;
  for (const json& row : j) centers.emplace_back(row.get<std::vector<double>>());
  return centers;
}

inline void write_text(const std::string& out_path, const std::string& payload) {
  if (out_path.empty() || out_path == "-") {
    std::cout << payload << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << payload << "\n";
}

inline void write_report(const std::string& out_path, json report) {
  write_text(out_path, report.dump(2));
}

}  // namespace detail

// Parses argv (including the program name) and runs one subcommand.
// Exit codes: 0 ok, 2 invalid arguments, 3 hypothesis violation or
// infeasible, 4 internal invariant breach.
inline int dispatch(std::vector<std::string> argv) {
  CLI::App app{"Lorentz sequence-space embeddings: norms, operator-norm "
               "estimates, and non-compactness certificates"};
  app.require_subcommand(1);

  std::string out_path = "-";
  app.add_option("--out", out_path, "output file for the report ('-' = stdout)")
      ->capture_default_str();

  std::string space_text, source_text, target_text;
  std::string seq_text, seq_file, centers_text, centers_file, x_text;
  std::string l_values_text = "10,100,1000";
  double rho = 0.0, lambda = 0.5, rel_tol = 1e-9, p1 = 0.0, p2 = 0.0, q2 = 0.0;
  double step_tol = 1e-10;
  std::size_t L = 256, samples = 10000, n_arg = 1;
  std::uint64_t seed = 0;
  int restarts = 8, max_iters = 400;

  CLI::App* c_norm = app.add_subcommand("norm", "evaluate a norm");
  c_norm->add_option("--space", space_text)->required();
  c_norm->add_option("--seq", seq_text);
  c_norm->add_option("--seq-file", seq_file);

  CLI::App* c_rearrange = app.add_subcommand("rearrange", "decreasing rearrangement");
  c_rearrange->add_option("--seq", seq_text);
  c_rearrange->add_option("--seq-file", seq_file);

  CLI::App* c_classify = app.add_subcommand("classify", "classify an embedding pair");
  c_classify->add_option("--source", source_text)->required();
  c_classify->add_option("--target", target_text)->required();
  c_classify->add_option("--rel-tol", rel_tol);

  CLI::App* c_series = app.add_subcommand("series-norm", "bracket the series norm constant");
  c_series->add_option("--p1", p1)->required();
  c_series->add_option("--p2", p2)->required();
  c_series->add_option("--q2", q2)->required();
  c_series->add_option("--rel-tol", rel_tol);

  CLI::App* c_estimate = app.add_subcommand("estimate-norm", "extremal search for ||I||");
  c_estimate->add_option("--source", source_text)->required();
  c_estimate->add_option("--target", target_text)->required();
  c_estimate->add_option("--L", L);
  c_estimate->add_option("--restarts", restarts);
  c_estimate->add_option("--seed", seed);
  c_estimate->add_option("--max-iters", max_iters);
  c_estimate->add_option("--step-tol", step_tol);

  CLI::App* c_converge = app.add_subcommand("converge", "convergence study (CSV)");
  c_converge->add_option("--source", source_text)->required();
  c_converge->add_option("--target", target_text)->required();
  c_converge->add_option("--L-values", l_values_text);
  c_converge->add_option("--restarts", restarts);
  c_converge->add_option("--seed", seed);
  c_converge->add_option("--max-iters", max_iters);
  c_converge->add_option("--step-tol", step_tol);

  CLI::App* c_span = app.add_subcommand("span", "span bound and Monte-Carlo estimate");
  c_span->add_option("--space", space_text)->required();
  c_span->add_option("--L", L);
  c_span->add_option("--samples", samples);
  c_span->add_option("--seed", seed);

  CLI::App* c_cover = app.add_subcommand("cover", "constant-sequence cover certificate");
  c_cover->add_option("--space", space_text)->required();
  c_cover->add_option("--rho", rho)->required();
  c_cover->add_option("--L", L);
  c_cover->add_option("--samples", samples);
  c_cover->add_option("--seed", seed);

  CLI::App* c_spread = app.add_subcommand("refute-spread", "spread witness against a cover");
  c_spread->add_option("--source", source_text)->required();
  c_spread->add_option("--target", target_text)->required();
  c_spread->add_option("--centers", centers_text);
  c_spread->add_option("--centers-file", centers_file);
  c_spread->add_option("--rho", rho)->required();
  c_spread->add_option("--lambda", lambda);
  c_spread->add_option("--x", x_text);
  c_spread->add_option("--L", L);

  CLI::App* c_signflip = app.add_subcommand("refute-signflip", "sign-flip witness (c0 -> linf)");
  c_signflip->add_option("--centers", centers_text);
  c_signflip->add_option("--centers-file", centers_file);
  c_signflip->add_option("--rho", rho)->required();

  CLI::App* c_alpha = app.add_subcommand("alpha", "bracket for alpha(I)");
  c_alpha->add_option("--source", source_text)->required();
  c_alpha->add_option("--target", target_text)->required();
  c_alpha->add_option("--L", L);
  c_alpha->add_option("--samples", samples);
  c_alpha->add_option("--seed", seed);

  CLI::App* c_audit = app.add_subcommand("audit", "run all inequality audits");
  c_audit->add_option("--samples", samples);
  c_audit->add_option("--seed", seed);

  CLI::App* c_riemann = app.add_subcommand("riemann-ratio", "finite-n block ratio");
  c_riemann->add_option("--n", n_arg)->required();
  c_riemann->add_option("--p", p1)->required();
  c_riemann->add_option("--q", q2)->required();

  // --out lives on the top-level app; let subcommands hand it upward.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  std::vector<const char*> cargv;
  cargv.reserve(argv.size());
  for (const std::string& s : argv) cargv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto params_of = [&](const CLI::App* sub) {
    std::map<std::string, std::string> p;
    for (const CLI::Option* opt : sub->get_options()) {
      if (opt->count() > 0 && !opt->get_name().empty()) {
        std::string joined;
        for (const std::string& r : opt->results()) {
          if (!joined.empty()) joined += ",";
          joined += r;
        }
        p[opt->get_name()] = joined;
      }
    }
    return p;
  };

  try {
    if (c_norm->parsed()) {
      const FiniteSequence a = detail::parse_sequence(seq_text, seq_file);
      json report{{"value", norm(a, parse_space(space_text))}};
      report["manifest"] = run_manifest("norm", params_of(c_norm), 0);
      detail::write_report(out_path, report);
      return 0;
    }
    if (c_rearrange->parsed()) {
      const FiniteSequence a = detail::parse_sequence(seq_text, seq_file);
      json report{{"rearranged", rearrange(a).values()}};
      report["manifest"] = run_manifest("rearrange", params_of(c_rearrange), 0);
      detail::write_report(out_path, report);
      return 0;
    }
    if (c_classify->parsed()) {
      const EmbeddingSpec spec{parse_space(source_text), parse_space(target_text)};
      json report = to_json(classify(spec, rel_tol));
      report["manifest"] = run_manifest("classify", params_of(c_classify), 0);
      detail::write_report(out_path, report);
      return 0;
    }
    if (c_series->parsed()) {
      json report{{"bracket", to_json(series_norm(p1, p2, q2, rel_tol))}};
      report["manifest"] = run_manifest("series-norm", params_of(c_series), 0);
      detail::write_report(out_path, report);
      return 0;
    }
    if (c_estimate->parsed()) {
      const EmbeddingSpec spec{parse_space(source_text), parse_space(target_text)};
      const SearchConfig cfg{L, restarts, seed, max_iters, step_tol};
      json report = to_json(estimate_operator_norm(spec, cfg));
      report["manifest"] = run_manifest("estimate-norm", params_of(c_estimate), seed);
      detail::write_report(out_path, report);
      return 0;
    }
    if (c_converge->parsed()) {
      const EmbeddingSpec spec{parse_space(source_text), parse_space(target_text)};
      std::vector<std::size_t> Ls;
      std::stringstream ss(l_values_text);
      for (std::string tok; std::getline(ss, tok, ',');) Ls.push_back(std::stoul(tok));
      const SearchConfig cfg{256, restarts, seed, max_iters, step_tol};
      std::ostringstream csv;
      csv << "L,best_value,oracle_lo,oracle_hi,gap,family_tag";
      for (const ConvergenceRow& row : convergence_study(spec, Ls, cfg)) {
        csv << "\n"
            << row.truncation << "," << json(row.best_value).dump() << ","
            << json(row.oracle.lo).dump() << "," << json(row.oracle.hi).dump() << ","
            << json(row.gap).dump() << "," << row.family_tag;
      }
      detail::write_text(out_path, csv.str());
      if (!out_path.empty() && out_path != "-") {
        detail::write_report(out_path + ".manifest.json",
                             json{{"manifest", run_manifest("converge", params_of(c_converge),
                                                            seed)}});
      }
      return 0;
    }
    if (c_span->parsed()) {
      const SpaceDescriptor s = parse_space(space_text);
      json report;
      try {
        report["bound"] = to_json(span_upper_bound(s));
      } catch (const hypothesis_error&) {
        report["bound"] = nullptr;
      }
      report["estimate"] = span_estimate(s, L, samples, seed);
      report["truncation"] = L;
      report["manifest"] = run_manifest("span", params_of(c_span), seed);
      detail::write_report(out_path, report);
      return 0;
    }
    if (c_cover->parsed()) {
      const SpaceDescriptor s = parse_space(space_text);
      const CoverCertificate cert = build_constant_cover(s, rho, L);
      const VerifyResult result = verify_cover(cert, s, samples, seed);
      json report;
      if (const CoverCertificate* ok = std::get_if<CoverCertificate>(&result)) {
        report = to_json(*ok);
      } else {
        report = to_json(std::get<CoverRefutation>(result));
      }
      report["manifest"] = run_manifest("cover", params_of(c_cover), seed);
      detail::write_report(out_path, report);
      return std::holds_alternative<CoverCertificate>(result) ? 0 : 4;
    }
    if (c_spread->parsed()) {
      const std::vector<FiniteSequence> centers =
          detail::parse_center_list(centers_text, centers_file);
      const FiniteSequence x =
          x_text.empty() ? unit_vector(1, L) : detail::parse_sequence(x_text, "");
      json report = to_json(spread_witness(centers, parse_space(source_text),
                                           parse_space(target_text), rho, lambda, x, L));
      report["manifest"] = run_manifest("refute-spread", params_of(c_spread), 0);
      detail::write_report(out_path, report);
      return 0;
    }
    if (c_signflip->parsed()) {
      const std::vector<FiniteSequence> centers =
          detail::parse_center_list(centers_text, centers_file);
      json report = to_json(signflip_witness(centers, rho));
      report["manifest"] = run_manifest("refute-signflip", params_of(c_signflip), 0);
      detail::write_report(out_path, report);
      return 0;
    }
    if (c_alpha->parsed()) {
      const EmbeddingSpec spec{parse_space(source_text), parse_space(target_text)};
      json report = to_json(alpha_bracket(spec, L, samples, seed));
      report["manifest"] = run_manifest("alpha", params_of(c_alpha), seed);
      detail::write_report(out_path, report);
      return 0;
    }
    if (c_audit->parsed()) {
      json suites = json::array();
      std::size_t total_violations = 0;
      for (const AuditOutcome& o : run_all_audits(samples, seed)) {
        suites.push_back(json{{"name", o.name},
                              {"cases", o.cases},
                              {"violations", o.violations},
                              {"worst_defect", o.worst_defect}});
        total_violations += o.violations;
      }
      json report{{"suites", suites}, {"total_violations", total_violations}};
      report["manifest"] = run_manifest("audit", params_of(c_audit), seed);
      detail::write_report(out_path, report);
      return total_violations == 0 ? 0 : 4;
    }
    if (c_riemann->parsed()) {
      json report{{"ratio", riemann_ratio(n_arg, p1, q2)}};
      report["manifest"] = run_manifest("riemann-ratio", params_of(c_riemann), 0);
      detail::write_report(out_path, report);
      return 0;
    }
  } catch (const internal_error& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return 4;
  } catch (const hypothesis_error& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace seqemb::cli
