#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "dzid/expr_parser.hpp"
#include "dzid/identities.hpp"
#include "dzid/intersection.hpp"
#include "json.hpp"

namespace dzid::cli {

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FrobeniusModel load_model(const std::string& path) {
  if (path.empty()) return FrobeniusModel::point();
  return FrobeniusModel::from_file(path);
}

std::string partition_text(const Partition& mu) {
  std::string s = "(";
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
  return s + ")";
}

int cmd_kdv(int genus, int max_genus, const std::string& format, std::ostream& out) {
  if (genus < 1 || genus > max_genus)
    throw InputError("genus must be between 1 and " + std::to_string(max_genus));
  const KdVFreeEnergy& f = shared_kdv_table().get(genus);
  if (format == "json") {
    json j;
    j["genus"] = genus;
    j["terms"] = json::array();
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
      j["terms"].push_back({{"partition", it->first}, {"coefficient", it->second.str()}});
    out << j.dump(2) << "\n";
  } else if (format == "latex") {
    out << (genus == 1 ? std::string("\\frac{1}{24}\\log v^{1,1}") : f.realize().latex()) << "\n";
  } else {
    out << (genus == 1 ? std::string("1/24 * log(v[1,1])") : f.realize().str()) << "\n";
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
      out << "C" << partition_text(it->first) << " = " << it->second.str() << "\n";
  }
  return 0;
}

struct VerifySelection {
  bool all = false, universal = false, genus1 = false, aop = false, a21 = false;
  int max_genus = 2;
  int max_p = 5;
  int jobs = 1;
};

using Job = std::function<IdentityReport(OperatorEngine&)>;

std::vector<Job> verify_jobs(const FrobeniusModel& model, VerifySelection sel, std::ostream& err) {
  if (!(sel.universal || sel.genus1 || sel.aop || sel.a21)) sel.all = true;
  if (sel.all) sel.universal = sel.genus1 = sel.aop = sel.a21 = true;
  const int n = model.dim();
  const bool kdv = n == 1;
  std::vector<Job> jobs;
  if (sel.universal) {
    for (int a = 1; a <= n; ++a) jobs.push_back([a](OperatorEngine& e) { return check_universal(e, 1, {1}, {a}); });
    if (kdv)
      for (int g = 2; g <= sel.max_genus; ++g)
        for (const Partition& mu : all_partitions(g))
          jobs.push_back([g, mu](OperatorEngine& e) { return check_universal(e, g, mu, std::vector<int>(mu.size(), 1)); });
  }
  if (sel.genus1)
    for (int a = 1; a <= n; ++a)
      for (int p = 1; p <= sel.max_p; ++p) jobs.push_back([a, p](OperatorEngine& e) { return check_genus1(e, a, p); });
  if (sel.aop && kdv)
    for (int g = 1; g <= sel.max_genus; ++g)
      for (int p = 3 * g - 2; p <= 3 * g; ++p)
        jobs.push_back([g, p](OperatorEngine& e) { return check_aop_single(e, g, 1, p); });
  if (sel.a21 && kdv && sel.max_genus >= 2)
    for (auto [p1, p2] : {std::pair{2, 3}, std::pair{3, 4}})
      jobs.push_back([p1, p2](OperatorEngine& e) { return check_a21(e, 1, p1, 1, p2); });
  if (!kdv && sel.max_genus >= 2 && (sel.universal || sel.aop || sel.a21))
    err << "note: higher-genus checks skipped, free energy unavailable for N>=2, g>=2\n";
  return jobs;
}

int cmd_verify(const std::string& model_path, const VerifySelection& sel, const std::string& format, std::ostream& out,
               std::ostream& err) {
  if (sel.max_genus < 1) throw InputError("--max-genus must be >= 1");
  if (sel.max_p < 1) throw InputError("--max-p must be >= 1");
  const FrobeniusModel model = load_model(model_path);
  const std::vector<Job> jobs = verify_jobs(model, sel, err);
  std::vector<std::optional<IdentityReport>> reports(jobs.size());
  const int workers = std::max(1, std::min<int>(sel.jobs, static_cast<int>(jobs.size())));
  auto work = [&](int w) {
    Genus0 g0(model);
    OperatorEngine engine(g0);
    for (std::size_t i = w; i < jobs.size(); i += workers) reports[i] = jobs[i](engine);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  int failed = 0;
  for (const auto& r : reports) failed += r->equal ? 0 : 1;
  if (format == "json") {
    json j;
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(json::parse(r->json()));
    j["passed"] = static_cast<int>(reports.size()) - failed;
    j["failed"] = failed;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << r->text() << "\n";
    out << reports.size() - failed << " passed, " << failed << " failed\n";
  }
  persist_shared_oracle();
  return failed == 0 ? 0 : 1;
}

int cmd_intersect(int genus, const std::vector<int>& ks, std::ostream& out) {
  try {
    out << intersection_number(genus, ks).str() << "\n";
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  persist_shared_oracle();
  return 0;
}

int cmd_trees(int n, int chi, std::vector<int> a, const std::string& format, std::ostream& out) {
  if (n < 1) throw InputError("--n must be >= 1");
  if (chi < 0) throw InputError("--chi must be >= 0");
  if (a.empty()) {
    for (int i = 0; i < n; ++i) a.push_back(chi / n + (i < chi % n ? 1 : 0));
  } else {
    if (static_cast<int>(a.size()) != n) throw InputError("--a needs exactly n values");
    int sum = 0;
    for (int x : a) sum += x;
    if (sum != chi) throw InputError("--a must sum to chi");
  }
  const std::vector<RootedTree> trees = enumerate_trees(n);
  json j = json::array();
  std::ostringstream text;
  text << trees.size() << " trees, a = " << partition_text(a) << "\n";
  for (const RootedTree& t : trees) {
    json jt;
    jt["tree"] = t.canonical();
    jt["edges"] = t.edges();
    jt["assignments"] = json::array();
    text << t.canonical() << "  edges=" << t.edges() << "\n";
    for (const QAssignment& q : enumerate_q(t, chi)) {
      const Rational c = tree_coefficient(t, q, a);
      jt["assignments"].push_back({{"q", q}, {"coefficient", c.str()}});
      text << "  q=" << partition_text(q) << "  " << c.str() << "\n";
    }
    j.push_back(jt);
  }
  out << (format == "json" ? j.dump(2) + "\n" : text.str());
  return 0;
}

std::vector<Insertion> parse_insertions(const std::string& s, int dim) {
  std::vector<Insertion> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    Insertion ins;
    char comma = 0;
    std::istringstream is(item);
    if (!(is >> ins.alpha >> comma >> ins.p) || comma != ',' || !(is >> std::ws).eof())
      throw InputError("bad insertion '" + item + "', expected alpha,p");
    if (ins.alpha < 1 || ins.alpha > dim || ins.p < 0) throw InputError("insertion out of range: " + item);
    out.push_back(ins);
  }
  if (out.empty()) throw InputError("no insertions given");
  return out;
}

int cmd_correlator(const std::string& model_path, const std::string& insertions, const std::string& format,
                   std::ostream& out) {
  const FrobeniusModel model = load_model(model_path);
  Genus0 g0(model);
  const DiffPoly& c = g0.correlator(parse_insertions(insertions, model.dim()));
  out << (format == "latex" ? c.latex() : c.str()) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal identities of KdV-type free energies, checked in exact arithmetic", "dzid"};
  app.require_subcommand(1);

  std::string format = "text";
  const std::vector<std::string> formats{"text", "json", "latex"};

  auto* kdv = app.add_subcommand("kdv", "genus-g KdV free energy from the loop equation");
  int genus = 2, max_genus = 4;
  kdv->add_option("--genus", genus, "genus")->required();
  kdv->add_option("--max-genus", max_genus, "largest genus accepted");
  kdv->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "check the universal identities");
  std::string model_path;
  VerifySelection sel;
  verify->add_option("--model", model_path, "model file (default: the one-dimensional model)");
  verify->add_flag("--all", sel.all);
  verify->add_flag("--universal", sel.universal, "tree-operator identities");
  verify->add_flag("--genus1", sel.genus1, "genus-one A^0 relation");
  verify->add_flag("--aop", sel.aop, "single A-operator identity");
  verify->add_flag("--a21", sel.a21, "genus-two A^2 A^1 identity");
  verify->add_option("--max-genus", sel.max_genus);
  verify->add_option("--max-p", sel.max_p, "largest descendant in the genus-one relation");
  verify->add_option("--jobs", sel.jobs, "worker threads");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* intersect = app.add_subcommand("intersect", "psi-class intersection number");
  int ig = 0;
  std::vector<int> ks;
  intersect->add_option("--genus", ig)->required();
  intersect->add_option("--ks", ks, "comma-separated exponents")->delimiter(',')->required();

  auto* trees = app.add_subcommand("trees", "stable rooted trees, q-assignments and coefficients");
  int tn = 1, chi = 0;
  std::vector<int> a;
  trees->add_option("--n", tn)->required();
  trees->add_option("--chi", chi)->required();
  trees->add_option("--a", a, "leg values summing to chi (default: even split)")->delimiter(',');
  trees->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* corr = app.add_subcommand("correlator", "genus-zero correlator on jets");
  std::string insertions;
  corr->add_option("--model", model_path);
  corr->add_option("--insertions", insertions, "alpha,p;alpha,p;...")->required();
  corr->add_option("--format", format)->check(CLI::IsMember({"text", "latex"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (kdv->parsed()) return cmd_kdv(genus, max_genus, format, out);
    if (verify->parsed()) return cmd_verify(model_path, sel, format, out, err);
    if (intersect->parsed()) return cmd_intersect(ig, ks, out);
    if (trees->parsed()) return cmd_trees(tn, chi, a, format, out);
    if (corr->parsed()) return cmd_correlator(model_path, insertions, format, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace dzid::cli
