#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "dlgreen/runner.hpp"

namespace dlgreen {

Json cyclo_to_json(const CycloNum& z) {
  Json j;
  j["N"] = z.modulus();
  Json coeffs = Json::array();
  for (const auto& c : z.coeffs()) coeffs.push_back(c.get_str());
  j["coeffs"] = coeffs;
  j["pretty"] = z.str();
  return j;
}

CycloNum cyclo_from_json(const Json& j) {
  long n = j.at("N").get<long>();
  const Json& coeffs = j.at("coeffs");
  CycloNum z = CycloNum::root_of_unity(n, 0);  // canonical shape at modulus n
  std::vector<Rational> cs;
  cs.reserve(coeffs.size());
  for (const auto& c : coeffs) cs.emplace_back(c.get<std::string>());
  if (cs.size() != z.coeffs().size()) throw std::invalid_argument("coefficient length mismatch");
  CycloNum out;
  // rebuild as sum c_i zeta^i
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i] != 0) out += cs[i] * CycloNum::root_of_unity(n, static_cast<long>(i));
  return out.embedded(std::lcm(out.modulus(), n));
}

std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

const std::vector<std::string>& ExperimentConfig::known_checks() {
  static const std::vector<std::string> names = {
      "summation",      "integrality",           "char_formula",
      "regular_ss",     "product_property",      "inner_product",
      "gamma",          "level_one_coincidence", "classical_orthogonality"};
  return names;
}

void ExperimentConfig::validate() const {
  if (n != 2) throw std::invalid_argument("only n = 2 is supported");
  if (r < 1 || (r != 1 && r % 2 != 0))
    throw std::invalid_argument("r must be 1 or even");
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  if (!torus_split && !torus_nonsplit) throw std::invalid_argument("no torus kind selected");
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  // enumeration budget: the dense code space and the group itself
  double codes = 1.0;
  for (int i = 0; i < 4 * r; ++i) codes *= q;
  if (codes > static_cast<double>(1L << 28))
    throw std::invalid_argument("enumeration budget exceeded (q^{4r} too large)");
  for (const auto& c : checks) {
    if (c == "all") continue;
    const auto& known = known_checks();
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw std::invalid_argument("unknown check: " + c);
  }
}

std::vector<std::string> ExperimentConfig::effective_checks() const {
  bool all = checks.empty() ||
             std::find(checks.begin(), checks.end(), "all") != checks.end();
  std::vector<std::string> out;
  for (const auto& c : known_checks()) {
    bool applicable = !(c == "level_one_coincidence" && r < 2) &&
                      !(c == "classical_orthogonality" && r != 1);
    if (!applicable) continue;
    if (all || std::find(checks.begin(), checks.end(), c) != checks.end()) out.push_back(c);
  }
  return out;
}

Json ExperimentConfig::to_json() const {
  Json j;
  j["q"] = q;
  j["r"] = r;
  j["n"] = n;
  Json tk = Json::array();
  if (torus_split) tk.push_back("split");
  if (torus_nonsplit) tk.push_back("nonsplit");
  j["torus"] = tk;
  j["checks"] = effective_checks();
  j["jobs"] = jobs;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
  ExperimentConfig cfg;
  cfg.q = j.value("q", 2);
  cfg.r = j.value("r", 2);
  cfg.n = j.value("n", 2);
  if (j.contains("torus")) {
    cfg.torus_split = false;
    cfg.torus_nonsplit = false;
    if (j["torus"].is_string()) {
      std::string t = j["torus"].get<std::string>();
      cfg.torus_split = (t == "split" || t == "both");
      cfg.torus_nonsplit = (t == "nonsplit" || t == "both");
    } else {
      for (const auto& t : j["torus"]) {
        if (t.get<std::string>() == "split") cfg.torus_split = true;
        if (t.get<std::string>() == "nonsplit") cfg.torus_nonsplit = true;
      }
    }
  }
  if (j.contains("checks"))
    for (const auto& c : j["checks"]) cfg.checks.push_back(c.get<std::string>());
  cfg.out_path = j.value("out", std::string());
  cfg.cache_dir = j.value("cache", std::string());
  cfg.dump_dir = j.value("dump", std::string());
  cfg.jobs = j.value("jobs", 1);
  return cfg;
}

Json VerificationReport::to_json(bool with_timing) const {
  Json j;
  j["config"] = config;
  Json recs = Json::array();
  for (const auto& rec : records) {
    Json rj;
    rj["check"] = rec.check;
    rj["params"] = rec.params;
    rj["lhs"] = rec.lhs;
    rj["rhs"] = rec.rhs;
    rj["pass"] = rec.pass;
    if (with_timing) rj["elapsed_ms"] = rec.elapsed_ms;
    recs.push_back(std::move(rj));
  }
  j["records"] = recs;
  j["summary"] = Json{{"pass", pass}, {"fail", fail}};
  if (!artifacts.is_null()) j["artifacts"] = artifacts;
  return j;
}

void write_report(const VerificationReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report path: " + path);
  out << report.to_json(true).dump(2) << "\n";
}

namespace {

Json matrix_to_json(const GroupTable& g, int elem) {
  const TruncRing& R = g.ring;
  const FiniteField& F = R.field;
  Json m = Json::array();
  for (int entry : g.element(elem).e) {
    Json series = Json::array();
    for (int i = 0; i < R.r; ++i) {
      Json fe = Json::array();
      int code = R.coeff(entry, i);
      for (int d = 0, t = code; d < F.k; ++d, t /= F.p) fe.push_back(t % F.p);
      series.push_back(fe);
    }
    m.push_back(series);
  }
  return m;
}

}  // namespace

void dump_tables(const Experiment& e, const std::string& dir) {
  const GroupTable& g = e.group();
  long dump_n = e.dump_modulus();

  Json j;
  j["format"] = "dlgreen-tables-v1";
  j["group"] = Json{{"n", 2},
                    {"p", g.ring.field.p},
                    {"k", g.ring.field.k},
                    {"r", g.ring.r},
                    {"d", 1},
                    {"order", g.order()},
                    {"classes", g.num_classes()}};
  j["modulus"] = dump_n;

  Json classes = Json::array();
  for (int c = 0; c < g.num_classes(); ++c) {
    int rep = g.class_reps()[c];
    classes.push_back(Json{{"rep", matrix_to_json(g, rep)},
                           {"size", g.class_sizes()[c]},
                           {"order", g.element_order(rep)},
                           {"semisimple", g.is_semisimple(rep)},
                           {"unipotent", g.is_unipotent(rep)}});
  }
  j["classes"] = classes;

  Json tori;
  for (auto kind : e.kinds()) {
    const auto& b = e.bundle(kind);
    const TorusData& t = *b.torus;
    Json tj;
    tj["order"] = t.order();
    tj["t1_order"] = t.level_one.order();
    tj["tpro_order"] = t.pro_part.order();
    Json factors = Json::array();
    for (const auto& f : t.structure.factors)
      factors.push_back(Json{{"gen", matrix_to_json(g, f.gen)}, {"order", f.order}});
    tj["factors"] = factors;
    Json chars = Json::array();
    for (std::size_t i = 0; i < b.thetas.size(); ++i) {
      Json cj;
      cj["theta"] = b.thetas[i].exps;
      Json vals = Json::array();
      for (const auto& v : b.chars[i].values) vals.push_back(cyclo_to_json(v.embedded(dump_n)));
      cj["degree"] = cyclo_to_json(b.chars[i].degree().embedded(dump_n));
      cj["values"] = vals;
      chars.push_back(std::move(cj));
    }
    tj["characters"] = chars;
    Json green;
    green["b"] = b.green->b;
    Json taus = Json::array();
    for (int tau : b.green->taus) taus.push_back(matrix_to_json(g, tau));
    green["taus"] = taus;
    Json rows = Json::array();
    for (std::size_t row = 0; row < b.green->rows.size(); ++row) {
      Json rj;
      rj["unip_class"] = b.green->unip_classes[row];
      Json vals = Json::array();
      for (const auto& v : b.green->rows[row]) vals.push_back(cyclo_to_json(v.embedded(dump_n)));
      rj["values"] = vals;
      rows.push_back(std::move(rj));
    }
    green["rows"] = rows;
    tj["green"] = green;
    tori[t.kind_name()] = std::move(tj);
  }
  j["tori"] = tori;

  std::string path = dir + "/tables_q" + std::to_string(e.cfg.q) + "_r" +
                     std::to_string(e.cfg.r) + ".json";
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open dump path: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace dlgreen
