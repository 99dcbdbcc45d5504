// grm: command-line front end for the generalized Reed-Muller library.
// Structured output is JSON on stdout; timings and summaries go to stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grm.hpp"

namespace {

using grm::io::Json;

constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

// Thrown for failed verifications, mapped to exit code 3.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Json& j, const std::string& out_path = {}) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw grm::PreconditionError("cannot write " + out_path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw grm::PreconditionError("cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::vector<grm::Elem> to_elems(const std::vector<int>& v, int q, const std::string& what) {
  std::vector<grm::Elem> out;
  for (int x : v) {
    if (x < 0 || x >= q) throw grm::PreconditionError(what + " value " + std::to_string(x) + " is not an element of GF(" + std::to_string(q) + ")");
    out.push_back(static_cast<grm::Elem>(x));
  }
  return out;
}

// "x,y,..." -> point
grm::Point parse_point(const std::string& text, int q) {
  std::vector<int> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw grm::PreconditionError("malformed point \"" + text + "\"");
    }
  }
  return to_elems(coords, q, "point");
}

struct Params {
  int q = 0, m = 0, r = 0;
};

void add_params(CLI::App* sub, Params& p) {
  sub->add_option("--q", p.q, "field order")->required();
  sub->add_option("--m", p.m, "number of variables")->required();
  sub->add_option("--r", p.r, "code order")->required();
}

int cmd_weights(const Params& a) {
  emit(grm::io::weights_json(grm::CodeParams::make(a.q, a.m, a.r)));
  return 0;
}

struct ConstructArgs {
  Params p;
  std::string family;
  std::vector<int> roots;
  std::optional<std::uint64_t> seed;
  std::string repr = "table";
  std::string out;
  std::vector<std::string> points;
  std::vector<int> coeffs;
};

int cmd_construct(const ConstructArgs& a) {
  const auto repr = a.repr == "poly" ? grm::io::Repr::Poly : grm::io::Repr::Table;
  if (a.family == "point-mass") {
    const grm::Field& f = grm::Field::get(a.p.q);
    std::vector<grm::Point> pts;
    for (const auto& s : a.points) pts.push_back(parse_point(s, a.p.q));
    for (const auto& x : pts)
      if (static_cast<int>(x.size()) != a.p.m) throw grm::PreconditionError("point has " + std::to_string(x.size()) + " coordinates, expected m");
    const auto res = grm::construct_point_mass(f, pts, to_elems(a.coeffs, a.p.q, "coefficient"));
    Json j = grm::io::codeword_json(res.table, repr);
    j["family"] = "point-mass";
    j["weight"] = grm::weight(res.table);
    j["degree"] = res.degree;
    j["sum_zero"] = res.sum_zero;
    j["moment_zero"] = res.moment_zero;
    j["certified_bound"] = res.certified_bound;
    j["certified"] = res.certified;
    emit(j, a.out);
    return res.certified ? 0 : kExitVerification;
  }
  const auto fam = grm::parse_family(a.family);
  if (!fam) throw grm::PreconditionError("unknown family \"" + a.family + "\"");
  const auto p = grm::CodeParams::make(a.p.q, a.p.m, a.p.r);
  if (!grm::family_applies(*fam, p)) throw grm::PreconditionError("family " + a.family + " does not apply to " + p.name());
  std::optional<grm::AffineMap> map;
  if (a.seed) {
    std::mt19937_64 rng(*a.seed);
    map = grm::AffineMap::random(p.field(), p.m, rng);
  }
  const auto choices = to_elems(a.roots, p.q, "root");
  const auto t = grm::construct(*fam, p, choices, map);
  Json j = grm::io::codeword_json(t, repr);
  j["r"] = p.r;
  j["family"] = a.family;
  j["weight"] = grm::weight(t);
  emit(j, a.out);
  return 0;
}

int cmd_classify(const std::string& in, std::optional<int> r_flag) {
  const Json doc = [&] {
    try {
      return Json::parse(read_file(in));
    } catch (const nlohmann::json::parse_error& e) {
      throw grm::SchemaError(std::string("malformed JSON: ") + e.what());
    }
  }();
  const auto t = grm::io::codeword_from_json(doc);
  int r = 0;
  if (r_flag) {
    r = *r_flag;
  } else if (doc.contains("r") && doc["r"].is_number_integer()) {
    r = doc["r"].get<int>();
  } else {
    throw grm::SchemaError("missing field \"r\" (or pass --r)");
  }
  const auto p = grm::CodeParams::make(t.order(), t.vars(), r);
  const auto w = grm::weight(t);
  const int deg = grm::degree(t);
  Json j;
  j["params"] = grm::io::params_json(p);
  j["weight"] = w;
  j["degree"] = deg;
  if (deg > r) {
    j["tag"] = "NotACodeword";
    emit(j);
    throw VerificationFailure("degree " + std::to_string(deg) + " exceeds r = " + std::to_string(r));
  }
  const bool is_w2 = p.q >= 3 && grm::second_weight(p).w2 == w;
  if (w != grm::min_weight(p) && !is_w2) {
    j["tag"] = "NotLowWeight";
    emit(j);
    throw VerificationFailure("weight " + std::to_string(w) + " is neither W1 nor W2 of " + p.name());
  }
  const auto c = grm::classify(t, p);
  const Json cj = grm::io::classification_json(c);
  for (const auto& [k, v] : cj.items()) j[k] = v;
  emit(j);
  if (c.tag == grm::Tag::Unknown && c.regime_covered)
    throw VerificationFailure("codeword classifies as Unknown in a covered regime");
  return 0;
}

struct EnumArgs {
  Params p;
  std::optional<std::size_t> cutoff;
  std::uint64_t budget = grm::kDefaultEnumBudget;
  int jobs = 1;
  std::size_t samples = 2;
  std::string csv;
};

int cmd_enumerate(const EnumArgs& a) {
  const auto p = grm::CodeParams::make(a.p.q, a.p.m, a.p.r);
  grm::EnumOptions opt;
  opt.cutoff = a.cutoff;
  opt.budget = a.budget;
  opt.jobs = a.jobs;
  opt.max_kept = a.samples;
  const auto rep = grm::enumerate_low_weight(p, opt);
  std::cerr << p.name() << ": " << rep.total << " codewords in " << rep.seconds << " s\n";
  if (!a.csv.empty()) {
    std::ofstream f(a.csv, std::ios::binary);
    if (!f) throw grm::PreconditionError("cannot write " + a.csv);
    f << grm::io::histogram_csv(rep);
  }
  emit(grm::io::enum_report_json(rep));
  return 0;
}

int cmd_blocking_check(int q, int n, const std::vector<std::string>& points) {
  std::vector<grm::Point> pts;
  for (const auto& s : points) pts.push_back(parse_point(s, q));
  const bool ok = grm::is_blocking(pts, n, q);
  emit(Json{{"q", q}, {"n", n}, {"size", pts.size()}, {"bound", grm::blocking_bound(q, n)}, {"blocking", ok}});
  return 0;
}

int cmd_blocking_search(int q, int n, int jobs) {
  const auto rep = grm::min_blocking_size(q, n, jobs);
  emit(grm::io::blocking_search_json(rep));
  if (!rep.bound_holds()) throw VerificationFailure("a blocking set below the bound exists");
  return 0;
}

int cmd_blocking_prop(int q, int b, std::uint64_t budget, int jobs) {
  const auto rep = grm::check_factor_free_blocking(q, b, budget, jobs);
  emit(grm::io::factor_free_json(rep));
  if (rep.violations) throw VerificationFailure("factor-free codewords with non-blocking supports exist");
  return 0;
}

int cmd_selftest(int jobs, int only) {
  grm::selftest::Options opt;
  opt.jobs = jobs;
  const auto results = grm::selftest::run(opt, only);
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    list.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    std::cerr << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.seconds << " s) " << r.name << "\n";
  }
  emit(Json{{"criteria", std::move(list)}, {"passed", all}});
  return all ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Reed-Muller codes: weights, constructions, classification and searches"};
  app.require_subcommand(1);

  Params wp;
  auto* weights = app.add_subcommand("weights", "print W1, W2 and the W2 regime");
  add_params(weights, wp);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a codeword of a family");
  construct->add_option("--family", ca.family, "min, A, B, s0-parallel, s0-pencil, s1, s1-q3, tm1 or point-mass")->required();
  construct->add_option("--q", ca.p.q, "field order")->required();
  construct->add_option("--m", ca.p.m, "number of variables")->required();
  construct->add_option("--r", ca.p.r, "code order");
  construct->add_option("--roots", ca.roots, "roots or slopes, comma separated")->delimiter(',');
  construct->add_option("--seed", ca.seed, "compose with a random affine map drawn from this seed");
  construct->add_option("--repr", ca.repr, "table or poly")->check(CLI::IsMember({"table", "poly"}));
  construct->add_option("--out", ca.out, "write to a file instead of stdout");
  construct->add_option("--points", ca.points, "point-mass points, each as x1,x2,...");
  construct->add_option("--coeffs", ca.coeffs, "point-mass coefficients, comma separated")->delimiter(',');

  std::string classify_in;
  std::optional<int> classify_r;
  auto* classify = app.add_subcommand("classify", "classify a W1 or W2 codeword");
  classify->add_option("--in", classify_in, "codeword JSON document")->required();
  classify->add_option("--r", classify_r, "code order (defaults to the document's \"r\")");

  EnumArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "exhaustively sweep a code");
  add_params(enumerate, ea.p);
  enumerate->add_option("--cutoff", ea.cutoff, "keep codewords up to this weight (default W2)");
  enumerate->add_option("--budget", ea.budget, "largest number of codewords to sweep");
  enumerate->add_option("--jobs", ea.jobs, "worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--samples", ea.samples, "codewords kept per weight");
  enumerate->add_option("--csv", ea.csv, "write the full weight histogram as CSV");

  auto* blocking = app.add_subcommand("blocking", "blocking sets of AG(2,q)");
  blocking->require_subcommand(1);
  int bq = 0, bn = 0, bb = 0, bjobs = 1;
  std::uint64_t bbudget = grm::kDefaultEnumBudget;
  std::vector<std::string> bpoints;
  auto* bcheck = blocking->add_subcommand("check", "test a point set");
  bcheck->add_option("--q", bq)->required();
  bcheck->add_option("--n", bn, "order")->required();
  bcheck->add_option("--points", bpoints, "points, each as x,y");
  auto* bsearch = blocking->add_subcommand("search", "exhaustive minimum size search (q <= 4)");
  bsearch->add_option("--q", bq)->required();
  bsearch->add_option("--n", bn, "order")->required();
  bsearch->add_option("--jobs", bjobs)->check(CLI::PositiveNumber);
  auto* bprop = blocking->add_subcommand("prop42", "supports of linear-factor-free codewords of R_q(b,2)");
  bprop->add_option("--q", bq)->required();
  bprop->add_option("--b", bb)->required();
  bprop->add_option("--budget", bbudget);
  bprop->add_option("--jobs", bjobs)->check(CLI::PositiveNumber);

  int st_jobs = 1, st_only = 0;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_option("--jobs", st_jobs)->check(CLI::PositiveNumber);
  selftest->add_option("--only", st_only, "run a single criterion (1-8)")->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*weights) return cmd_weights(wp);
    if (*construct) {
      if (ca.family != "point-mass" && construct->count("--r") == 0) throw grm::PreconditionError("--r is required");
      return cmd_construct(ca);
    }
    if (*classify) return cmd_classify(classify_in, classify_r);
    if (*enumerate) return cmd_enumerate(ea);
    if (*bcheck) return cmd_blocking_check(bq, bn, bpoints);
    if (*bsearch) return cmd_blocking_search(bq, bn, bjobs);
    if (*bprop) return cmd_blocking_prop(bq, bb, bbudget, bjobs);
    if (*selftest) return cmd_selftest(st_jobs, st_only);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const grm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
