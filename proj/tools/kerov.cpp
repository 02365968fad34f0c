// Command-line front end: deterministic experiments and identity suites with
// machine-readable CSV/JSON output.  Exit codes: 0 pass, 1 identity
// violation, 2 resource bound exceeded, 64 usage error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kerov/clt.hpp"
#include "kerov/growth.hpp"
#include "kerov/moments.hpp"
#include "kerov/parallel.hpp"
#include "kerov/partition.hpp"
#include "kerov/rational.hpp"
#include "kerov/verify.hpp"
#include "kerov/walk.hpp"

namespace {

using json = nlohmann::ordered_json;
using kerov::Partition;
using kerov::Rational;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitResource = 2;
constexpr int kExitUsage = 64;

// %.17g round-trips doubles, so reruns produce identical bytes
std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Rational parse_alpha(const std::string& s) {
  Rational a = Rational::parse(s);
  if (!(a > Rational(0)))
    throw std::invalid_argument("alpha must be positive, got " + s);
  return a;
}

std::vector<Rational> parse_alpha_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& tok : split_list(s)) out.push_back(parse_alpha(tok));
  return out;
}

std::vector<int> parse_int_list(const std::string& s, int min_value,
                                const char* what) {
  std::vector<int> out;
  for (const auto& tok : split_list(s)) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": bad integer " + tok);
    }
    if (used != tok.size())
      throw std::invalid_argument(std::string(what) + ": bad integer " + tok);
    if (v < min_value)
      throw std::invalid_argument(std::string(what) + ": value " + tok +
                                  " below minimum " +
                                  std::to_string(min_value));
    out.push_back(v);
  }
  return out;
}

// stream selector: file when a path is given, otherwise the fallback
class OutStream {
 public:
  OutStream(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      out_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_)
      throw std::invalid_argument("cannot open output file " + path);
    out_ = file_.get();
  }
  std::ostream& get() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_ = nullptr;
};

// ---- verify ---------------------------------------------------------------

struct VerifyConfig {
  int max_n = 6;
  std::string alphas = "1";
  std::string out;
};

int cmd_verify(const VerifyConfig& cfg) {
  kerov::VerifyOptions opt;
  opt.max_n = cfg.max_n;
  opt.alphas = parse_alpha_list(cfg.alphas);
  kerov::VerifyReport rep = kerov::run_verify_suite(opt);

  json doc;
  doc["subcommand"] = "verify";
  doc["max_n"] = rep.options.max_n;
  json alphas = json::array();
  for (const auto& a : rep.options.alphas) alphas.push_back(a.str());
  doc["alphas"] = std::move(alphas);
  doc["complete"] = rep.complete;
  if (!rep.complete) doc["stop_reason"] = rep.stop_reason;
  doc["checks"] = rep.checks();
  doc["failures"] = rep.failures;
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json row;
    row["identity"] = r.identity;
    row["n"] = r.n;
    row["alpha"] = r.alpha.str();
    if (!r.mu.empty()) row["mu"] = r.mu;
    row["status"] = r.ok ? "ok" : "fail";
    if (!r.ok) row["counterexample"] = r.counterexample;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);

  OutStream os(cfg.out, std::cout);
  os.get() << doc.dump(2) << "\n";
  if (rep.failures > 0) return kExitViolation;
  if (!rep.complete) return kExitResource;
  return kExitOk;
}

// ---- clt ------------------------------------------------------------------

struct CltConfig {
  std::string alpha = "1";
  std::string grid = "50,100,200";
  long samples = 20000;
  std::uint64_t seed = 1;
  double delta = 1.0;
  long paths = 1000;
  std::string norm = "canonical";
  std::string out;
};

kerov::Normalization parse_norm(const std::string& s) {
  if (s == "canonical") return kerov::Normalization::canonical;
  if (s == "shifted") return kerov::Normalization::shifted;
  if (s == "linear") return kerov::Normalization::linear;
  throw std::invalid_argument("unknown normalization " + s);
}

int cmd_clt(const CltConfig& cfg) {
  Rational alpha = parse_alpha(cfg.alpha);
  std::vector<int> grid = parse_int_list(cfg.grid, 2, "clt --n");
  kerov::Normalization norm = parse_norm(cfg.norm);
  if (cfg.delta <= 0) throw std::invalid_argument("clt: delta must be > 0");
  if (cfg.paths < 1) throw std::invalid_argument("clt: paths must be >= 1");

  kerov::CltExperiment e =
      kerov::run_clt(grid, alpha, cfg.samples, cfg.seed, norm);
  std::vector<kerov::HaeuslerReport> hs;
  hs.reserve(grid.size());
  for (int n : grid)
    hs.push_back(
        kerov::haeusler_quantities(n, alpha, cfg.delta, cfg.paths, cfg.seed));

  // CSV to --out (or stdout); JSON summary to stdout (or stderr when the
  // CSV already owns stdout), so both stay machine-separable
  {
    OutStream os(cfg.out, std::cout);
    os.get() << "n,alpha,samples,ks,mean,var,l_delta\n";
    for (size_t i = 0; i < e.rows.size(); ++i) {
      const auto& r = e.rows[i];
      os.get() << r.n << ',' << csv_field(alpha.str()) << ',' << r.samples
               << ',' << fmt(r.ks) << ',' << fmt(r.mean) << ','
               << fmt(r.variance) << ',' << fmt(hs[i].l_value) << "\n";
    }
  }

  json doc;
  doc["subcommand"] = "clt";
  doc["alpha"] = alpha.str();
  doc["samples"] = e.samples;
  doc["seed"] = e.seed;
  doc["delta"] = cfg.delta;
  doc["paths"] = cfg.paths;
  doc["norm"] = cfg.norm;
  json rows = json::array();
  bool all_zero_certified = true;
  for (size_t i = 0; i < e.rows.size(); ++i) {
    const auto& r = e.rows[i];
    const auto& h = hs[i];
    json row;
    row["n"] = r.n;
    row["ks"] = r.ks;
    row["mean"] = r.mean;
    row["var"] = r.variance;
    row["l_delta"] = h.l_value;
    row["n_term_zero"] = h.n_term_zero;
    row["certified_paths"] = h.certified_paths;
    row["certified_states"] = h.certified_states;
    all_zero_certified = all_zero_certified && h.n_term_zero;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  long positive = 0;
  for (const auto& r : e.rows)
    if (r.ks > 0) ++positive;
  if (positive >= 2) {
    kerov::RateFit fit = kerov::rate_fit(e);
    doc["s_hat"] = fit.s_hat;
    doc["intercept"] = fit.intercept;
  } else {
    doc["s_hat"] = nullptr;
    doc["intercept"] = nullptr;
  }
  (cfg.out.empty() ? std::cerr : std::cout) << doc.dump(2) << "\n";
  return all_zero_certified ? kExitOk : kExitViolation;
}

// ---- moments --------------------------------------------------------------

struct MomentsConfig {
  std::string grid = "2,4,6,8";
  int r_max = 4;
  std::string alphas = "1";
  std::string out;
};

int cmd_moments(const MomentsConfig& cfg) {
  std::vector<int> grid = parse_int_list(cfg.grid, 1, "moments --n");
  std::vector<Rational> alphas = parse_alpha_list(cfg.alphas);
  if (cfg.r_max < 1)
    throw std::invalid_argument("moments: r-max must be >= 1");

  OutStream os(cfg.out, std::cout);
  os.get() << "n,r,alpha,expectation_num,expectation_den,ratio_float\n";
  // rows stream out as they are computed, so a resource stop at a large n
  // still leaves the finished rows behind (exit 2 signals the truncation)
  for (int n : grid)
    for (int r = 1; r <= cfg.r_max; ++r)
      for (const auto& a : alphas) {
        Rational e = kerov::jack_expect_s(n, r, a);
        double ratio = e.to_double() / std::pow(static_cast<double>(n),
                                                static_cast<double>(r) / 2.0);
        os.get() << n << ',' << r << ',' << csv_field(a.str()) << ','
                 << e.num().get_str() << ',' << e.den().get_str() << ','
                 << fmt(ratio) << "\n";
      }
  return kExitOk;
}

// ---- walk -----------------------------------------------------------------

struct WalkConfig {
  int n = 4;
  std::string eta = "perm";
  std::string eta_file;
  std::string report;
};

kerov::ClassFunction load_eta(const WalkConfig& cfg) {
  if (cfg.eta == "perm") return kerov::permutation_character(cfg.n);
  if (cfg.eta == "std") return kerov::standard_character(cfg.n);
  if (cfg.eta == "regular") return kerov::regular_character(cfg.n);
  if (cfg.eta != "file")
    throw std::invalid_argument("walk: --eta must be perm|std|regular|file");
  if (cfg.eta_file.empty())
    throw std::invalid_argument("walk: --eta file needs --eta-file PATH");

  std::ifstream in(cfg.eta_file);
  if (!in)
    throw std::invalid_argument("walk: cannot read eta file " + cfg.eta_file);
  std::vector<Partition> index = kerov::partitions_of(cfg.n);
  std::vector<long> mult(index.size(), 0);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string shape;
    long m = 0;
    if (!(ls >> shape)) continue;  // blank line
    if (!(ls >> m))
      throw std::invalid_argument("walk: eta file line " +
                                  std::to_string(lineno) +
                                  ": expected \"partition multiplicity\"");
    Partition lam = Partition::parse(shape);
    if (lam.n() != cfg.n)
      throw std::invalid_argument("walk: eta file line " +
                                  std::to_string(lineno) + ": partition " +
                                  shape + " is not of size " +
                                  std::to_string(cfg.n));
    for (size_t i = 0; i < index.size(); ++i)
      if (index[i] == lam) {
        mult[i] += m;
        break;
      }
  }
  return kerov::character_from_multiplicities(cfg.n, mult);
}

int cmd_walk(const WalkConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("walk: n must be >= 1");
  kerov::ClassFunction eta = load_eta(cfg);
  kerov::IrrChain chain = kerov::IrrChain::from_character(eta);
  kerov::CheckResult dict = kerov::verify_chain_dictionary(chain);
  kerov::BurnsideBrauerReport bb = kerov::burnside_brauer_check(chain);
  kerov::DiameterReport dia = kerov::weighted_graph_diameter(chain);

  std::vector<Partition> classes = kerov::partitions_of(cfg.n);
  json doc;
  doc["subcommand"] = "walk";
  doc["n"] = cfg.n;
  doc["eta"] = cfg.eta == "file" ? cfg.eta_file : cfg.eta;
  doc["eta_at_identity"] = chain.eta_at_identity().str();
  doc["dictionary_ok"] = dict.ok;
  if (!dict.ok) doc["dictionary_detail"] = dict.detail;
  doc["faithful"] = bb.faithful;
  json kernel = json::array();
  for (const auto& c : bb.kernel_classes) kernel.push_back(c.str());
  doc["kernel_classes"] = std::move(kernel);
  doc["m"] = bb.m;
  json covered = json::array();
  const auto& states = chain.states();
  for (size_t i = 0; i < states.size(); ++i) {
    json row;
    row["lambda"] = states[i].str();
    row["least_power"] = bb.least_power[i];
    covered.push_back(std::move(row));
  }
  doc["least_power"] = std::move(covered);
  doc["all_covered_below_m"] = bb.all_covered_below_m;
  doc["connected"] = dia.connected;
  doc["diameter"] = dia.diameter;
  doc["distinct_eigenvalues"] = dia.distinct_eigenvalues;
  doc["bounds_hold"] = dia.bounds_hold;
  json eig = json::array();
  for (size_t i = 0; i < classes.size(); ++i) {
    json row;
    row["cycle_type"] = classes[i].str();
    row["eigenvalue"] = chain.eigenvalue(static_cast<int>(i)).str();
    eig.push_back(std::move(row));
  }
  doc["eigenvalues"] = std::move(eig);

  OutStream os(cfg.report, std::cout);
  os.get() << doc.dump(2) << "\n";

  // the dictionary is a theorem for every genuine character; the coverage
  // and diameter bounds additionally need a faithful eta
  bool ok = dict.ok &&
            (!bb.faithful || (bb.all_covered_below_m && dia.bounds_hold));
  return ok ? kExitOk : kExitViolation;
}

// ---- sample ---------------------------------------------------------------

struct SampleConfig {
  int n = 5;
  std::string alpha = "1";
  std::uint64_t seed = 0;
};

int cmd_sample(const SampleConfig& cfg) {
  if (cfg.n < 0) throw std::invalid_argument("sample: n must be >= 0");
  Rational alpha = parse_alpha(cfg.alpha);
  if (cfg.n == 0) {
    std::cout << Partition().str() << "\n";
    return kExitOk;
  }
  kerov::GrowthPath path = kerov::sample_path(cfg.n, alpha, cfg.seed);
  for (const auto& lam : path.chain) std::cout << lam.str() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kerov: growth-process measures on partitions, character-ratio "
      "martingales, and their normal limits"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads,
                 "worker threads (default: KEROV_THREADS or hardware); "
                 "results are identical for every value");

  VerifyConfig vc;
  auto* verify = app.add_subcommand(
      "verify", "run every exact identity suite up to --max-n");
  verify->add_option("--max-n", vc.max_n, "largest partition size")
      ->capture_default_str();
  verify->add_option("--alpha", vc.alphas,
                     "comma-separated alpha grid, entries as p/q")
      ->capture_default_str();
  verify->add_option("--out", vc.out, "write the JSON report here");

  CltConfig cc;
  auto* clt = app.add_subcommand(
      "clt", "Monte Carlo for the normalized content statistic: KS distance "
             "to the normal, rate fit, martingale-CLT quantities");
  clt->add_option("--alpha", cc.alpha, "alpha as p/q")->capture_default_str();
  clt->add_option("--n", cc.grid, "comma-separated partition sizes")
      ->capture_default_str();
  clt->add_option("--samples", cc.samples, "paths per size (>= 1000)")
      ->capture_default_str();
  clt->add_option("--seed", cc.seed, "RNG seed")->capture_default_str();
  clt->add_option("--delta", cc.delta, "moment exponent in L = E|X|^(2+2d)")
      ->capture_default_str();
  clt->add_option("--paths", cc.paths, "paths for the L estimate")
      ->capture_default_str();
  clt->add_option("--norm", cc.norm, "canonical|shifted|linear")
      ->capture_default_str();
  clt->add_option("--out", cc.out,
                  "write CSV here (JSON summary then goes to stdout; "
                  "without --out the CSV owns stdout and the summary "
                  "moves to stderr)");

  MomentsConfig mc;
  auto* moments = app.add_subcommand(
      "moments", "exact expectations of the added-content moments by full "
                 "enumeration");
  moments->add_option("--n", mc.grid, "comma-separated sizes (enumeration)")
      ->capture_default_str();
  moments->add_option("--r-max", mc.r_max, "largest moment order")
      ->capture_default_str();
  moments->add_option("--alpha", mc.alphas, "comma-separated alpha grid")
      ->capture_default_str();
  moments->add_option("--out", mc.out, "write CSV here (default stdout)");

  WalkConfig wc;
  auto* walk = app.add_subcommand(
      "walk", "tensor-product chain on the irreducibles: spectral "
              "dictionary, coverage, diameter bounds");
  walk->add_option("--n", wc.n, "symmetric group degree")
      ->capture_default_str();
  walk->add_option("--eta", wc.eta, "perm|std|regular|file")
      ->capture_default_str();
  walk->add_option("--eta-file", wc.eta_file,
                   "character file, lines \"partition multiplicity\"");
  walk->add_option("--report", wc.report, "write the JSON report here");

  SampleConfig sc;
  auto* sample = app.add_subcommand(
      "sample", "print one growth path from the empty shape");
  sample->add_option("--n", sc.n, "target size")->capture_default_str();
  sample->add_option("--alpha", sc.alpha, "alpha as p/q")
      ->capture_default_str();
  sample->add_option("--seed", sc.seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (threads > 0) kerov::set_thread_count(threads);
    if (*verify) return cmd_verify(vc);
    if (*clt) return cmd_clt(cc);
    if (*moments) return cmd_moments(mc);
    if (*walk) return cmd_walk(wc);
    if (*sample) return cmd_sample(sc);
  } catch (const kerov::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
