// theta: family construction, spectra, enumeration, local search, and
// verification suites over signed complete graphs with bicyclic negative
// parts. JSON/CSV outputs are deterministic for a fixed config and seed.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "theta/canonical.hpp"
#include "theta/enumerate.hpp"
#include "theta/families.hpp"
#include "theta/graph6.hpp"
#include "theta/parallel.hpp"
#include "theta/perturb.hpp"
#include "theta/roots.hpp"
#include "theta/spectra.hpp"
#include "theta/verify.hpp"

namespace {

constexpr const char* kVersion = "theta-spectra 1.0.0";

std::vector<int> parse_range(const std::string& spec) {
  // "a", "a:b", or "a:b:step", all inclusive
  std::vector<int> out;
  int a = 0, b = 0, step = 1;
  auto c1 = spec.find(':');
  if (c1 == std::string::npos) {
    out.push_back(std::stoi(spec));
    return out;
  }
  a = std::stoi(spec.substr(0, c1));
  auto rest = spec.substr(c1 + 1);
  auto c2 = rest.find(':');
  if (c2 == std::string::npos) {
    b = std::stoi(rest);
  } else {
    b = std::stoi(rest.substr(0, c2));
    step = std::stoi(rest.substr(c2 + 1));
  }
  if (step < 1) throw CLI::ValidationError("range step must be >= 1");
  for (int v = a; v <= b; v += step) out.push_back(v);
  if (out.empty()) throw CLI::ValidationError("empty range: " + spec);
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

struct FamilySelector {
  std::string family;  // "theta1" | "theta2" | "" (use g6)
  std::string g6;
  int n = 0, k = 0, s = 0, t = 0;

  theta::SignedCompleteGraph build() const {
    if (!g6.empty()) return theta::embed(theta::graph6_decode(g6), n);
    if (family == "theta1") return theta::theta1(n, s, t);
    if (family == "theta2") return theta::theta2(n, k);
    throw CLI::ValidationError("need --family theta1|theta2 or --g6");
  }
};

void add_selector(CLI::App* cmd, FamilySelector& sel) {
  cmd->add_option("--family", sel.family, "theta1 or theta2");
  cmd->add_option("--g6", sel.g6, "graph6 of the negative part (embedded at order --n)");
  cmd->add_option("--n", sel.n, "order of the signed complete graph")->required();
  cmd->add_option("--k", sel.k, "negative edge count (theta2)");
  cmd->add_option("--s", sel.s, "pendants at u1 (theta1)");
  cmd->add_option("--t", sel.t, "pendants at v3 (theta1)");
}

int run_verify_suite(const std::string& suite, const std::vector<int>& ns, const std::vector<int>& ks, int n1,
                     int k1, int workers, const std::string& out, const std::string& csv, bool with_timestamp) {
  using namespace theta;
  VerificationReport report;
  std::string extra_csv;
  if (suite == "identities") {
    VerificationReport a = verify_factorizations(ns, ks);
    VerificationReport b = verify_appendix_identities(ns, ks);
    report = a;
    report.claim = "factorizations+difference-identities";
    report.points.insert(report.points.end(), b.points.begin(), b.points.end());
    report.wall_ms = a.wall_ms + b.wall_ms;
  } else if (suite == "signs") {
    report = verify_appendix_signs(ns, ks);
  } else if (suite == "ordering") {
    bool first = true;
    for (int k : ks)
      for (int n : ns) {
        if (n < k) continue;
        VerificationReport one = verify_ordering_lemma(n, k);
        if (first) {
          report = one;
          first = false;
        } else {
          report.points.insert(report.points.end(), one.points.begin(), one.points.end());
          report.wall_ms += one.wall_ms;
        }
      }
  } else if (suite == "dominance") {
    bool first = true;
    for (int k : ks)
      for (int n : ns) {
        if (n < k) continue;
        VerificationReport one = verify_theta2_dominates(n, k);
        if (first) {
          report = one;
          first = false;
        } else {
          report.points.insert(report.points.end(), one.points.begin(), one.points.end());
          report.wall_ms += one.wall_ms;
        }
      }
  } else if (suite == "bounds") {
    report = verify_bounds(ns, ks);
  } else if (suite == "theorem") {
    TheoremResult res = verify_theorem(n1, k1, workers);
    report = res.report;
    extra_csv = ranking_to_csv(res);
    if (!csv.empty()) write_file(csv, extra_csv);
  } else {
    throw CLI::ValidationError("unknown verify suite: " + suite);
  }
  std::string json = report_to_json(report, with_timestamp);
  emit(json + "\n", out);
  if (!extra_csv.empty() && csv.empty()) std::cerr << extra_csv;
  return report.gating_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral toolkit for signed complete graphs with bicyclic negative parts"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path, csv_path;
  bool no_timestamp = false;
  int workers = theta::default_workers();
  app.add_option("--workers", workers, "worker threads (or env THETA_SPECTRA_WORKERS)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-timestamp", no_timestamp, "omit the volatile timestamp field from reports");

  // index
  auto* cmd_index = app.add_subcommand("index", "largest eigenvalue and spectrum of an instance");
  FamilySelector sel_index;
  double tol = 1e-12;
  add_selector(cmd_index, sel_index);
  cmd_index->add_option("--tol", tol, "eigensolver off-diagonal tolerance");
  cmd_index->add_option("--out", out_path, "output path (default stdout)");

  // charpoly
  auto* cmd_charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial coefficients");
  FamilySelector sel_charpoly;
  bool quotient_only = false;
  add_selector(cmd_charpoly, sel_charpoly);
  cmd_charpoly->add_flag("--quotient", quotient_only,
                         "emit the family quotient factor (F or P) instead of the full polynomial");
  cmd_charpoly->add_option("--out", out_path, "output path (default stdout)");

  // family
  auto* cmd_family = app.add_subcommand("family", "emit graph6 of a family negative part");
  FamilySelector sel_family;
  add_selector(cmd_family, sel_family);
  cmd_family->add_option("--out", out_path, "output path (default stdout)");

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "all connected bicyclic graphs up to isomorphism");
  int enum_vertices = 0;
  cmd_enum->add_option("--vertices", enum_vertices, "vertex count")->required();
  cmd_enum->add_option("--out", out_path, "output .g6 path (default stdout)");

  // search
  auto* cmd_search = app.add_subcommand("search", "hill-climbing index maximization over sign swaps");
  int search_n = 0, search_k = 0, search_seeds = 32, search_iters = 5000;
  std::uint64_t search_seed = 1;
  cmd_search->add_option("--n", search_n)->required();
  cmd_search->add_option("--k", search_k)->required();
  cmd_search->add_option("--seeds", search_seeds, "number of independent restarts");
  cmd_search->add_option("--max-iters", search_iters);
  cmd_search->add_option("--seed", search_seed, "base seed");
  cmd_search->add_option("--out", out_path, "report path (default stdout)");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "verification suites");
  std::string suite;
  std::string ns_spec = "12:24:4", ks_spec = "8:12";
  int v_n = 0, v_k = 0;
  cmd_verify->add_option("suite", suite, "identities|signs|ordering|dominance|bounds|theorem")->required();
  cmd_verify->add_option("--n", ns_spec, "n range a:b[:step] (theorem: single value)");
  cmd_verify->add_option("--k", ks_spec, "k range a:b[:step] (theorem: single value)");
  cmd_verify->add_option("--out", out_path, "JSON report path (default stdout)");
  cmd_verify->add_option("--csv", csv_path, "CSV ranking path (theorem suite)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*cmd_index) {
      auto g = sel_index.build();
      theta::EigOptions opts;
      opts.tol = tol;
      theta::SpectralResult r = theta::eig_symmetric(theta::adjacency_real(g), opts);
      nlohmann::ordered_json j;
      j["n"] = g.order();
      j["lambda1"] = theta::format_double(r.eigenvalues[0]);
      auto evs = nlohmann::ordered_json::array();
      for (double ev : r.eigenvalues) evs.push_back(theta::format_double(ev));
      j["eigenvalues"] = evs;
      auto vec = nlohmann::ordered_json::array();
      for (double x : r.principal_vector) vec.push_back(theta::format_double(x));
      j["principal_vector"] = vec;
      j["residual"] = theta::format_double(r.residual);
      emit(j.dump(2) + "\n", out_path);
      return 0;
    }
    if (*cmd_charpoly) {
      theta::IntPoly poly;
      if (quotient_only) {
        if (sel_charpoly.family == "theta1")
          poly = theta::F_poly(sel_charpoly.n, sel_charpoly.s + sel_charpoly.t + 6, sel_charpoly.s);
        else if (sel_charpoly.family == "theta2")
          poly = theta::P_poly(sel_charpoly.n, sel_charpoly.k);
        else
          throw CLI::ValidationError("--quotient needs --family theta1|theta2");
      } else {
        poly = theta::char_poly_exact(theta::adjacency_matrix(sel_charpoly.build()));
      }
      emit(theta::poly_to_json(poly) + "\n", out_path);
      return 0;
    }
    if (*cmd_family) {
      auto g = sel_family.build();
      auto [support, labels] = theta::drop_isolated(g.negative_part());
      (void)labels;
      emit(theta::graph6_encode(support) + "\n", out_path);
      return 0;
    }
    if (*cmd_enum) {
      std::string lines;
      for (const auto& cert : theta::enumerate_bicyclic_certificates(enum_vertices)) {
        lines += cert;
        lines += '\n';
      }
      emit(lines, out_path);
      return 0;
    }
    if (*cmd_search) {
      std::vector<std::optional<theta::SearchResult>> results(search_seeds);
      theta::parallel_for(static_cast<std::size_t>(search_seeds), workers, [&](std::size_t i) {
        results[i] = theta::local_search_max(search_n, search_k, search_seed + i, search_iters);
      });
      std::string theta2_cert =
          theta::canonical_form(theta::drop_isolated(theta::theta2(search_n, search_k).negative_part()).first)
              .certificate;
      nlohmann::ordered_json j;
      j["n"] = search_n;
      j["k"] = search_k;
      j["seeds"] = search_seeds;
      j["theta2_certificate"] = theta2_cert;
      int hits = 0;
      auto runs = nlohmann::ordered_json::array();
      for (int i = 0; i < search_seeds; ++i) {
        const auto& res = *results[i];
        std::string cert =
            theta::canonical_form(theta::drop_isolated(res.best.negative_part()).first).certificate;
        if (cert == theta2_cert) ++hits;
        nlohmann::ordered_json run;
        run["seed"] = search_seed + i;
        run["lambda1"] = theta::format_double(res.lambda);
        run["iterations"] = res.iterations;
        run["local_optimum"] = res.reached_local_optimum;
        run["accepted_moves"] = res.trace.size();
        run["certificate"] = cert;
        runs.push_back(run);
      }
      j["theta2_hits"] = hits;
      j["runs"] = runs;
      emit(j.dump(2) + "\n", out_path);
      return 0;
    }
    if (*cmd_verify) {
      std::vector<int> ns = parse_range(ns_spec), ks = parse_range(ks_spec);
      v_n = ns.front();
      v_k = ks.front();
      return run_verify_suite(suite, ns, ks, v_n, v_k, workers, out_path, csv_path, !no_timestamp);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
