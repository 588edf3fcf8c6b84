#pragma once

// Command-line front end: enumeration, expansion, statistics, and the
// verification suites, with deterministic text and line-delimited JSON
// output.  Exit status: 0 success, 1 verification failure, 2 usage or parse
// error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kohnert/composition.hpp"
#include "kohnert/composition_tableau.hpp"
#include "kohnert/diagram.hpp"
#include "kohnert/expand.hpp"
#include "kohnert/kohnert_tableau.hpp"
#include "kohnert/maps.hpp"
#include "kohnert/render.hpp"
#include "kohnert/stability.hpp"
#include "kohnert/verify.hpp"
#include "kohnert/young.hpp"

namespace kohnert {

namespace cli_detail {

struct Request {
  std::string family;
  std::string target;
  std::string suite;
  std::string input;
  std::string format = "text";
  std::optional<int> n;
  std::optional<int> m_max;
  std::optional<int> max_weight;
  std::optional<int> max_length;
};

inline int require_n(const Request& req) {
  if (!req.n) throw std::invalid_argument("this selection requires --n");
  if (*req.n < 0) throw std::invalid_argument("--n must be >= 0");
  return *req.n;
}

inline void emit_listing(const Request& req, const std::vector<std::string>& texts,
                         const std::vector<nlohmann::json>& records, std::ostream& out) {
  if (req.format == "structured") {
    for (const auto& r : records) out << r.dump() << '\n';
    out << nlohmann::json{{"count", records.size()}}.dump() << '\n';
  } else {
    for (const auto& t : texts) out << t << '\n';
    out << "count: " << texts.size() << '\n';
  }
}

inline int run_enumerate(const Request& req, std::ostream& out) {
  std::vector<std::string> texts;
  std::vector<nlohmann::json> records;
  const std::string& fam = req.family;
  if (fam == "km") {
    for (const Diagram& d : kohnert_closure(WeakComposition::parse(req.input))) {
      texts.push_back(render_diagram(d));
      records.push_back(to_json(d));
    }
  } else if (fam == "kt" || fam == "qkt" || fam == "qkohnert" || fam == "qqkt") {
    const WeakComposition a = WeakComposition::parse(req.input);
    std::vector<KohnertTableau> tableaux;
    if (fam == "kt") tableaux = enumerate_kt(a);
    else if (fam == "qkt") tableaux = enumerate_qkt(a);
    else if (fam == "qkohnert") tableaux = enumerate_quasi_kohnert(a);
    else tableaux = enumerate_qqkt(a);
    for (const KohnertTableau& t : tableaux) {
      texts.push_back(render_tableau(t));
      records.push_back(to_json(t));
    }
  } else if (fam == "ssyt" || fam == "qyt") {
    const Partition lambda = Partition::parse(req.input);
    const int n = require_n(req);
    for (const YoungTableau& t :
         fam == "ssyt" ? enumerate_ssyt(lambda, n) : enumerate_qyt(lambda, n)) {
      texts.push_back(render_young(t));
      records.push_back(to_json(t));
    }
  } else if (fam == "sct") {
    for (const CompositionTableau& t : enumerate_sct(StrongComposition::parse(req.input))) {
      texts.push_back(render_sct(t));
      records.push_back(to_json(t));
    }
  } else if (fam == "threads") {
    for (const Diagram& d : kohnert_closure(WeakComposition::parse(req.input))) {
      const ThreadDecomposition dec = thread_decompose(d);
      texts.push_back(render_threads(d, dec));
      records.push_back(to_json(d, dec));
    }
  } else {
    throw std::invalid_argument("unknown family '" + fam + "'");
  }
  emit_listing(req, texts, records, out);
  return 0;
}

inline int run_expand(const Request& req, std::ostream& out) {
  std::optional<SparseIntegerPolynomial> poly;
  std::optional<Expansion> expansion;
  const std::string& target = req.target;
  if (target == "key-monomial") poly = key_polynomial(WeakComposition::parse(req.input));
  else if (target == "key-slide") expansion = key_to_slides(WeakComposition::parse(req.input));
  else if (target == "key-qkey") expansion = key_to_quasikeys(WeakComposition::parse(req.input));
  else if (target == "qkey-monomial") poly = quasi_key_polynomial(WeakComposition::parse(req.input));
  else if (target == "qkey-slide") expansion = quasikey_to_slides(WeakComposition::parse(req.input));
  else if (target == "slide-monomial") poly = fundamental_slide(WeakComposition::parse(req.input));
  else if (target == "schur") poly = schur_polynomial(Partition::parse(req.input), require_n(req));
  else if (target == "schur-fund")
    expansion = schur_to_fundamentals(Partition::parse(req.input), require_n(req));
  else if (target == "qschur")
    poly = quasi_schur_polynomial(StrongComposition::parse(req.input), require_n(req));
  else if (target == "qschur-fund")
    expansion = quasischur_to_fundamentals(StrongComposition::parse(req.input));
  else if (target == "fund-qsym")
    poly = fundamental_qsym_polynomial(StrongComposition::parse(req.input), require_n(req));
  else throw std::invalid_argument("unknown target '" + target + "'");

  if (req.format == "structured") {
    const auto records = poly ? to_json_terms(*poly) : to_json_terms(*expansion);
    for (const auto& r : records) out << r.dump() << '\n';
  } else {
    out << (poly ? poly->str() : expansion->str());
  }
  return 0;
}

inline int run_stats(const Request& req, std::ostream& out) {
  const WeakComposition a = WeakComposition::parse(req.input);
  const auto sorted = lsort(a);
  const int sigma_value = sigma(a);
  const int eta_value = eta(a);
  // The count profile enumerates QKT(0^m x a) for every m, which is only a
  // desk-scale computation; it runs when --m-max is requested.
  std::optional<std::vector<long long>> profile;
  if (req.m_max) {
    if (*req.m_max < eta_value) throw std::invalid_argument("--m-max must be at least eta(a)");
    profile = stability_profile(a, *req.m_max);
  }
  if (req.format == "structured") {
    nlohmann::json record{{"a", a.parts()}, {"sigma", sigma_value}, {"eta", eta_value}};
    record["lsort"] = sorted ? nlohmann::json(sorted->parts()) : nlohmann::json(nullptr);
    if (profile) record["profile"] = *profile;
    out << record.dump() << '\n';
  } else {
    out << "a: " << a.str() << '\n';
    out << "lsort: " << (sorted ? sorted->str() : std::string("(absent)")) << '\n';
    out << "sigma: " << sigma_value << '\n';
    out << "eta: " << eta_value << '\n';
    if (profile) {
      out << "profile:";
      for (long long c : *profile) out << ' ' << c;
      out << '\n';
    }
  }
  return 0;
}

inline int run_verify(const Request& req, std::ostream& out) {
  const std::string& suite = req.suite;
  if (suite == "stability") {
    const int w = req.max_weight ? *req.max_weight : 5;
    const int l = req.max_length ? *req.max_length : 3;
    const std::vector<StabilityRecord> records = verify_stability(w, l);
    int failures = 0;
    for (const StabilityRecord& r : records) {
      if (!r.ok()) ++failures;
      if (req.format == "structured") {
        out << nlohmann::json{{"a", r.a.parts()},
                              {"eta", r.eta_value},
                              {"profile", r.profile},
                              {"plateau_ok", r.plateau_ok},
                              {"syt_ok", r.syt_ok},
                              {"shift_ok", r.shift_ok},
                              {"sct_ok", r.sct_ok},
                              {"schur_ok", r.schur_ok},
                              {"lowest_ok", r.lowest_ok},
                              {"connected_ok", r.connected_ok}}
                   .dump()
            << '\n';
      } else {
        out << "a=" << r.a.str() << " eta=" << r.eta_value << " profile=";
        for (std::size_t i = 0; i < r.profile.size(); ++i) out << (i ? "," : "") << r.profile[i];
        out << " plateau_ok=" << r.plateau_ok << " syt_ok=" << r.syt_ok
            << " shift_ok=" << r.shift_ok << " sct_ok=" << r.sct_ok << " schur_ok=" << r.schur_ok
            << " lowest_ok=" << r.lowest_ok << " connected_ok=" << r.connected_ok << '\n';
      }
    }
    if (req.format != "structured")
      out << "stability: " << records.size() - failures << " passed, " << failures << " failed\n";
    return failures == 0 ? 0 : 1;
  }

  std::vector<VerifyResult> results;
  if (suite == "golden") {
    results = verify_golden();
  } else if (suite == "identities") {
    results = verify_identities(req.max_weight ? *req.max_weight : 6,
                                req.max_length ? *req.max_length : 4);
  } else if (suite == "bijections") {
    results = verify_bijections(req.max_weight ? *req.max_weight : 6,
                                req.max_length ? *req.max_length : 4);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  int failures = 0;
  for (const VerifyResult& r : results) {
    if (!r.ok) ++failures;
    if (req.format == "structured") {
      out << nlohmann::json{{"check", r.check}, {"instance", r.instance}, {"ok", r.ok},
                            {"detail", r.detail}}
                 .dump()
          << '\n';
    } else if (!r.ok) {
      out << "FAIL " << r.check << " [" << r.instance << "]: " << r.detail << '\n';
    }
  }
  if (req.format != "structured")
    out << suite << ": " << results.size() - failures << " passed, " << failures << " failed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace cli_detail

// Parses and executes one command line (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kohnert tableau engine: key, quasi-key, slide, and quasi-Schur expansions"};
  app.require_subcommand(1);
  cli_detail::Request req;

  const auto add_common = [&req](CLI::App* cmd) {
    cmd->add_option("--format", req.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list a combinatorial family");
  enumerate->add_option("--family", req.family, "km|kt|qkt|qkohnert|qqkt|ssyt|qyt|sct|threads")
      ->required();
  enumerate->add_option("--input", req.input, "composition or partition")->required();
  enumerate->add_option("--n", req.n, "entry bound for ssyt/qyt");
  add_common(enumerate);

  CLI::App* expand = app.add_subcommand("expand", "compute a polynomial or basis expansion");
  expand
      ->add_option("--target", req.target,
                   "key-monomial|key-slide|key-qkey|qkey-monomial|qkey-slide|schur|schur-fund|"
                   "qschur|qschur-fund|slide-monomial|fund-qsym")
      ->required();
  expand->add_option("--input", req.input, "composition or partition")->required();
  expand->add_option("--n", req.n, "variable count where required");
  add_common(expand);

  CLI::App* stats = app.add_subcommand("stats", "lsort, sigma, eta, and the count profile");
  stats->add_option("--input", req.input, "weak composition")->required();
  stats->add_option("--m-max", req.m_max, "largest zero padding to profile");
  add_common(stats);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", req.suite, "identities|bijections|stability|golden")->required();
  verify->add_option("--max-weight", req.max_weight, "weight bound for the corpus");
  verify->add_option("--max-length", req.max_length, "length bound for the corpus");
  add_common(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (enumerate->parsed()) return cli_detail::run_enumerate(req, out);
    if (expand->parsed()) return cli_detail::run_expand(req, out);
    if (stats->parsed()) return cli_detail::run_stats(req, out);
    return cli_detail::run_verify(req, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace kohnert
