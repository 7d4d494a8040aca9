#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dlgreen/runner.hpp"

namespace dlgreen {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void parallel_for(long count, int jobs, const std::function<void(long)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    long i;
    while ((i = next.fetch_add(1)) < count) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  int nthreads = static_cast<int>(std::min<long>(jobs, count));
  for (int t = 0; t < nthreads; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

std::pair<int, int> factor_prime_power(int q) {
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    int k = 0;
    long v = 1;
    while (v < q) {
      v *= p;
      ++k;
    }
    if (v != q) throw std::invalid_argument("q is not a prime power");
    return {p, k};
  }
  throw std::invalid_argument("q is not a prime power");
}

std::string cache_path(const ExperimentConfig& cfg, TorusData::Kind kind) {
  std::string name = "dlchars_q" + std::to_string(cfg.q) + "_r" + std::to_string(cfg.r) + "_" +
                     (kind == TorusData::Kind::split ? "split" : "nonsplit") + ".json";
  return cfg.cache_dir + "/" + name;
}

Json chars_cache_json(const Experiment& e, const Experiment::Bundle& b) {
  const GroupTable& g = e.group();
  Json j;
  j["format"] = "dlgreen-chars-v1";
  j["group"] = Json{{"n", 2}, {"p", g.ring.field.p}, {"k", g.ring.field.k}, {"r", g.ring.r},
                    {"d", 1}};
  j["torus"] = b.torus->kind_name();
  Json reps = Json::array();
  for (int rep : g.class_reps()) reps.push_back(g.element(rep).code());
  j["class_reps"] = reps;
  Json thetas = Json::array();
  for (const auto& th : b.thetas) thetas.push_back(th.exps);
  j["thetas"] = thetas;
  Json values = Json::array();
  for (const auto& cf : b.chars) {
    Json row = Json::array();
    for (const auto& v : cf.values) row.push_back(cyclo_to_json(v));
    values.push_back(std::move(row));
  }
  j["values"] = values;
  return j;
}

bool load_chars_cache(const Experiment& e, Experiment::Bundle& b, const std::string& path,
                      std::string* hash_out) {
  std::ifstream in(path);
  if (!in) return false;
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) return false;
  const GroupTable& g = e.group();
  Json expect_group = Json{
      {"n", 2}, {"p", g.ring.field.p}, {"k", g.ring.field.k}, {"r", g.ring.r}, {"d", 1}};
  if (j.value("format", "") != "dlgreen-chars-v1" || j["group"] != expect_group ||
      j.value("torus", "") != std::string(b.torus->kind_name()))
    return false;
  if (j["class_reps"].size() != static_cast<std::size_t>(g.num_classes())) return false;
  for (int c = 0; c < g.num_classes(); ++c)
    if (j["class_reps"][c].get<long>() != g.element(g.class_reps()[c]).code()) return false;
  if (j["thetas"].size() != b.thetas.size()) return false;
  for (std::size_t i = 0; i < b.thetas.size(); ++i)
    if (j["thetas"][i].get<std::vector<int>>() != b.thetas[i].exps) return false;
  std::vector<ClassFunction> chars;
  chars.reserve(b.thetas.size());
  for (std::size_t i = 0; i < b.thetas.size(); ++i) {
    std::vector<CycloNum> vals;
    vals.reserve(g.num_classes());
    for (int c = 0; c < g.num_classes(); ++c) vals.push_back(cyclo_from_json(j["values"][i][c]));
    chars.emplace_back(g, std::move(vals));
  }
  b.chars = std::move(chars);
  if (hash_out) *hash_out = fnv1a_hex(text);
  return true;
}

}  // namespace

Experiment::Experiment(const ExperimentConfig& cfg_in) : cfg(cfg_in) {
  cfg.validate();
  auto [p, k] = factor_prime_power(cfg.q);
  const FiniteField& field = FiniteField::make(p, k);
  ring_ = &TruncRing::make(field, cfg.r);
  G_ = std::make_unique<GroupTable>(*ring_);

  long expected = gl2_order_formula(cfg.q, cfg.r);
  if (G_->order() != expected) throw std::logic_error("group order disagrees with the formula");

  units_sub_ = diag_units_subgroup(*G_);
  units_st_ = AbelianStructure(units_sub_);
  auto unit_chars = characters_enumerate(units_st_);
  for (const auto& chi : unit_chars)
    if (chi.order() == cfg.q - 1) {
      det_chi_ = std::make_unique<AbelianChar>(chi);
      break;
    }
  if (!det_chi_) throw std::logic_error("no determinant character of order q-1");

  if (cfg.torus_split) build_bundle(TorusData::Kind::split);
  if (cfg.torus_nonsplit) build_bundle(TorusData::Kind::nonsplit);
}

void Experiment::build_bundle(TorusData::Kind k) {
  Bundle b;
  b.torus = (k == TorusData::Kind::split) ? TorusData::build_split(*G_)
                                          : TorusData::build_nonsplit(*G_);
  const TorusData& t = *b.torus;

  b.thetas = characters_enumerate(t.structure);
  if (cfg.r >= 2) b.dl = std::make_unique<DLContext>(*G_, t);

  bool cached = false;
  std::string path;
  if (!cfg.cache_dir.empty()) {
    path = cache_path(cfg, k);
    cached = load_chars_cache(*this, b, path, &b.cache_hash);
  }
  if (!cached) {
    b.chars.assign(b.thetas.size(), ClassFunction(*G_));
    const auto& thetas = b.thetas;
    auto* chars = &b.chars;
    if (cfg.r == 1) {
      parallel_for(static_cast<long>(thetas.size()), cfg.jobs, [&](long i) {
        (*chars)[i] = classical_dl_level1(*G_, t, thetas[i]);
      });
    } else {
      const DLContext& ctx = *b.dl;
      parallel_for(static_cast<long>(thetas.size()), cfg.jobs,
                   [&](long i) { (*chars)[i] = ctx.character(thetas[i]); });
    }
    if (!cfg.cache_dir.empty()) {
      std::filesystem::create_directories(cfg.cache_dir);
      std::string text = chars_cache_json(*this, b).dump(2) + "\n";
      std::ofstream out(path);
      if (out) {
        out << text;
        b.cache_hash = fnv1a_hex(text);
      }
    }
  } else {
    b.loaded_from_cache = true;
  }

  int bval = cfg.r == 1 ? 1 : cfg.r / 2;
  b.green = std::make_unique<GreenTable>(green_from_characters(*G_, t, bval, b.chars));
  b.tgreen = std::make_unique<TorusGreenTable>(torus_green(t));
  b.eval = std::make_unique<CharFormulaEvaluator>(*G_, t, *b.green, *b.tgreen);

  if (k == TorusData::Kind::split)
    split_ = std::move(b);
  else
    nonsplit_ = std::move(b);
}

std::vector<TorusData::Kind> Experiment::kinds() const {
  std::vector<TorusData::Kind> out;
  if (split_) out.push_back(TorusData::Kind::split);
  if (nonsplit_) out.push_back(TorusData::Kind::nonsplit);
  return out;
}

const Experiment::Bundle& Experiment::bundle(TorusData::Kind k) const {
  const auto& b = (k == TorusData::Kind::split) ? split_ : nonsplit_;
  if (!b) throw std::invalid_argument("torus kind not built in this experiment");
  return *b;
}

int Experiment::theta_index(const AbelianStructure& st, const std::vector<int>& exps) {
  long idx = 0, stride = 1;
  for (std::size_t i = 0; i < st.factors.size(); ++i) {
    idx += exps[i] * stride;
    stride *= st.factors[i].order;
  }
  return static_cast<int>(idx);
}

int Experiment::conjugator_for_class(TorusData::Kind k, int cid) const {
  auto key = std::make_pair(static_cast<int>(k), cid);
  auto it = conj_cache_.find(key);
  if (it != conj_cache_.end()) return it->second;
  const Bundle& b = bundle(k);
  int rep = G_->class_reps()[cid];
  int c = find_conjugator_into_t1(*G_, *b.torus, rep);
  conj_cache_.emplace(key, c);
  return c;
}

std::vector<int> Experiment::regular_ss_classes() const {
  std::vector<int> out;
  for (int c = 0; c < G_->num_classes(); ++c)
    if (is_regular_semisimple(*G_, G_->class_reps()[c])) out.push_back(c);
  return out;
}

std::vector<std::pair<std::string, ClassFunction>> Experiment::p_constant_samples() const {
  const GroupTable& g = *G_;
  std::vector<int> ss_classes;
  for (int c = 0; c < g.num_classes(); ++c)
    if (g.is_semisimple(g.class_reps()[c])) ss_classes.push_back(c);

  auto extend = [&](const std::function<CycloNum(std::size_t, int)>& value) {
    std::map<int, CycloNum> vals;
    for (std::size_t i = 0; i < ss_classes.size(); ++i)
      vals.emplace(ss_classes[i], value(i, ss_classes[i]));
    return p_constant_extend(g, vals);
  };

  std::vector<std::pair<std::string, ClassFunction>> out;
  out.emplace_back("one", ClassFunction::constant(g, CycloNum::one()));
  out.emplace_back("det_twist", det_twist(g, *det_chi_));
  out.emplace_back("unip_indicator", extend([&](std::size_t, int cid) {
                     return cid == g.class_of(g.identity()) ? CycloNum::one() : CycloNum::zero();
                   }));
  out.emplace_back("ss_ramp", extend([](std::size_t i, int) {
                     return CycloNum(static_cast<long>(i + 1));
                   }));
  out.emplace_back("ss_square", extend([](std::size_t i, int) {
                     return CycloNum(static_cast<long>(i * i + 2));
                   }));
  out.emplace_back("ss_root", extend([](std::size_t i, int) {
                     return CycloNum::root_of_unity(12, static_cast<long>(i));
                   }));
  out.emplace_back("ss_last_delta", extend([&](std::size_t i, int) {
                     return i + 1 == ss_classes.size() ? CycloNum::one() : CycloNum::zero();
                   }));

  // drop duplicates (at q = 2 the det twist collapses to the constant 1)
  std::vector<std::pair<std::string, ClassFunction>> dedup;
  for (auto& sample : out) {
    bool dup = false;
    for (const auto& kept : dedup)
      if (kept.second == sample.second) {
        dup = true;
        break;
      }
    if (!dup) dedup.push_back(std::move(sample));
  }
  return dedup;
}

long Experiment::dump_modulus() const {
  long n = units_st_.exponent;
  for (auto k : kinds()) n = std::lcm(n, bundle(k).torus->structure.exponent);
  return n;
}

// --------------------------------------------------------------------------
// checks

namespace {

Json theta_param(const AbelianChar& th) { return Json(th.exps); }

CheckRecord make_record(std::string check, Json params, Json lhs, Json rhs, bool pass,
                        double ms) {
  return CheckRecord{std::move(check), std::move(params), std::move(lhs), std::move(rhs), pass,
                     ms};
}

}  // namespace

std::vector<CheckRecord> check_group_order(const Experiment& e) {
  auto start = Clock::now();
  long got = e.group().order();
  long expected = gl2_order_formula(e.cfg.q, e.cfg.r);
  return {make_record("group_order", Json{{"q", e.cfg.q}, {"r", e.cfg.r}}, got, expected,
                      got == expected, ms_since(start))};
}

std::vector<CheckRecord> check_summation(const Experiment& e) {
  std::vector<CheckRecord> out;
  for (auto kind : e.kinds()) {
    auto start = Clock::now();
    const auto& b = e.bundle(kind);
    auto [total, expected] = summation_check(*b.green);
    bool pass = total == CycloNum(expected);
    out.push_back(make_record("summation", Json{{"torus", b.torus->kind_name()}},
                              cyclo_to_json(total), expected, pass, ms_since(start)));
  }
  return out;
}

std::vector<CheckRecord> check_integrality(const Experiment& e) {
  std::vector<CheckRecord> out;
  for (auto kind : e.kinds()) {
    const auto& b = e.bundle(kind);
    auto start = Clock::now();
    for (const auto& row : integrality_check(*b.green)) {
      Json rhs = row.integral ? Json(row.total.as_rational()->get_str()) : Json("not an integer");
      out.push_back(make_record(
          "integrality", Json{{"torus", b.torus->kind_name()}, {"class", row.class_id}},
          cyclo_to_json(row.total), rhs, row.integral, ms_since(start)));
      start = Clock::now();
    }
  }
  return out;
}

std::vector<CheckRecord> check_char_formula(const Experiment& e) {
  std::vector<CheckRecord> out;
  for (auto kind : e.kinds()) {
    const auto& b = e.bundle(kind);
    std::vector<std::vector<CheckRecord>> per_theta(b.thetas.size());
    parallel_for(static_cast<long>(b.thetas.size()), e.cfg.jobs, [&](long i) {
      auto start = Clock::now();
      auto rows = b.eval->verify(b.thetas[i], b.chars[i]);
      double ms = ms_since(start) / std::max<std::size_t>(rows.size(), 1);
      for (const auto& row : rows)
        per_theta[i].push_back(make_record("char_formula",
                                           Json{{"torus", b.torus->kind_name()},
                                                {"theta", theta_param(b.thetas[i])},
                                                {"class", row.class_id}},
                                           cyclo_to_json(row.lhs), cyclo_to_json(row.rhs),
                                           row.pass, ms));
    });
    for (auto& rows : per_theta)
      for (auto& rec : rows) out.push_back(std::move(rec));
  }
  return out;
}

std::vector<CheckRecord> check_regular_ss(const Experiment& e) {
  std::vector<CheckRecord> out;
  const GroupTable& g = e.group();
  std::vector<int> classes = e.regular_ss_classes();
  for (auto kind : e.kinds()) {
    const auto& b = e.bundle(kind);
    // transporter searches are cached per class up front
    for (int cid : classes) e.conjugator_for_class(kind, cid);
    std::vector<std::vector<CheckRecord>> per_theta(b.thetas.size());
    parallel_for(static_cast<long>(b.thetas.size()), e.cfg.jobs, [&](long i) {
      for (int cid : classes) {
        auto start = Clock::now();
        int rep = g.class_reps()[cid];
        int c = e.conjugator_for_class(kind, cid);
        CycloNum rhs = regular_ss_value_with(g, *b.torus, b.thetas[i], rep, c);
        const CycloNum& lhs = b.chars[i].at_class(cid);
        per_theta[i].push_back(make_record("regular_ss",
                                           Json{{"torus", b.torus->kind_name()},
                                                {"theta", theta_param(b.thetas[i])},
                                                {"class", cid},
                                                {"meets_t1", c >= 0}},
                                           cyclo_to_json(lhs), cyclo_to_json(rhs), lhs == rhs,
                                           ms_since(start)));
      }
    });
    for (auto& rows : per_theta)
      for (auto& rec : rows) out.push_back(std::move(rec));
  }
  return out;
}

std::vector<CheckRecord> check_product_property(const Experiment& e) {
  std::vector<CheckRecord> out;
  const GroupTable& g = e.group();
  const AbelianChar& chi = e.det_character();
  ClassFunction f = det_twist(g, chi);
  if (!is_p_constant(f)) throw std::logic_error("determinant twist is not p-constant");
  for (auto kind : e.kinds()) {
    const auto& b = e.bundle(kind);
    for (std::size_t i = 0; i < b.thetas.size(); ++i) {
      auto start = Clock::now();
      AbelianChar twisted = char_multiply(
          b.thetas[i], e.units_structure().exponent,
          [&](int elem) { return det_twist_zexp(g, chi, elem); });
      int j = Experiment::theta_index(b.torus->structure, twisted.exps);
      ClassFunction lhs = b.chars[j];
      ClassFunction rhs = b.chars[i].pointwise_mul(f);
      int bad_class = -1;
      for (int c = 0; c < g.num_classes() && bad_class < 0; ++c)
        if (lhs.values[c] != rhs.values[c]) bad_class = c;
      Json params{{"torus", b.torus->kind_name()},
                  {"theta", theta_param(b.thetas[i])},
                  {"twisted_theta", twisted.exps}};
      if (bad_class >= 0) params["first_mismatch_class"] = bad_class;
      int show = bad_class >= 0 ? bad_class : 0;
      out.push_back(make_record("product_property", std::move(params),
                                cyclo_to_json(lhs.values[show]), cyclo_to_json(rhs.values[show]),
                                bad_class < 0, ms_since(start)));
    }
  }
  return out;
}

std::vector<CheckRecord> check_inner_product(const Experiment& e) {
  std::vector<CheckRecord> out;
  const GroupTable& g = e.group();
  ClassFunction chi_r = det_twist(g, e.det_character());
  for (auto kind : e.kinds()) {
    const auto& b = e.bundle(kind);
    SubgroupFn res = restrict_to(chi_r, b.torus->torus);
    for (std::size_t i = 0; i < b.thetas.size(); ++i) {
      auto start = Clock::now();
      CycloNum lhs = inner_product(chi_r, b.chars[i]);
      SubgroupFn theta_vals(b.torus->torus.elems.size());
      for (std::size_t x = 0; x < theta_vals.size(); ++x)
        theta_vals[x] = b.thetas[i].eval(b.torus->torus.elems[x]);
      CycloNum rhs = inner_product_on(b.torus->torus, res, theta_vals);
      out.push_back(make_record(
          "inner_product",
          Json{{"torus", b.torus->kind_name()}, {"theta", theta_param(b.thetas[i])}},
          cyclo_to_json(lhs), cyclo_to_json(rhs), lhs == rhs, ms_since(start)));
    }
  }
  return out;
}

std::vector<CheckRecord> check_gamma(const Experiment& e) {
  std::vector<CheckRecord> out;
  const GroupTable& g = e.group();
  auto samples = e.p_constant_samples();
  for (auto kind : e.kinds()) {
    const auto& b = e.bundle(kind);
    for (std::size_t i = 0; i < b.thetas.size(); ++i) {
      if (!theta_is_p_constant(*b.torus, b.thetas[i])) continue;
      for (const auto& [name, psi] : samples) {
        auto start = Clock::now();
        auto res = gamma_identity_check(g, *b.torus, b.thetas[i], b.chars[i], psi);
        out.push_back(make_record("gamma_identity",
                                  Json{{"torus", b.torus->kind_name()},
                                       {"theta", theta_param(b.thetas[i])},
                                       {"psi", name}},
                                  cyclo_to_json(res.lhs), cyclo_to_json(res.rhs), res.pass,
                                  ms_since(start)));
      }
    }
    // negative control: a non-p-constant theta must break the identity
    // for at least one p-constant psi
    int neg = -1;
    for (std::size_t i = 0; i < b.thetas.size(); ++i)
      if (!theta_is_p_constant(*b.torus, b.thetas[i])) {
        neg = static_cast<int>(i);
        break;
      }
    if (neg >= 0) {
      auto start = Clock::now();
      bool broke = false;
      Json lhs, rhs;
      std::string psi_name;
      for (const auto& [name, psi] : samples) {
        auto res = gamma_identity_values(g, *b.torus, b.thetas[neg], b.chars[neg], psi);
        if (!res.pass) {
          broke = true;
          lhs = cyclo_to_json(res.lhs);
          rhs = cyclo_to_json(res.rhs);
          psi_name = name;
          break;
        }
      }
      out.push_back(make_record("gamma_identity",
                                Json{{"torus", b.torus->kind_name()},
                                     {"theta", theta_param(b.thetas[neg])},
                                     {"negative_control", true},
                                     {"psi", psi_name}},
                                lhs, rhs, broke, ms_since(start)));
    }
  }
  return out;
}

std::vector<CheckRecord> check_classical_orthogonality(const Experiment& e) {
  if (e.cfg.r != 1) throw std::invalid_argument("classical orthogonality runs at r = 1");
  std::vector<CheckRecord> out;
  for (auto kind : e.kinds()) {
    const auto& b = e.bundle(kind);
    int w = b.torus->weyl_reps[1];
    for (std::size_t i = 0; i < b.thetas.size(); ++i) {
      auto start = Clock::now();
      CycloNum lhs = inner_product(b.chars[i], b.chars[i]);
      long stab = weyl_fixes(*b.torus, w, b.thetas[i]) ? 2 : 1;
      out.push_back(make_record(
          "classical_orthogonality",
          Json{{"torus", b.torus->kind_name()}, {"theta", theta_param(b.thetas[i])}},
          cyclo_to_json(lhs), stab, lhs == CycloNum(stab), ms_since(start)));
    }
  }
  return out;
}

std::vector<CheckRecord> check_level_one(const Experiment& e) {
  if (e.cfg.r < 2) throw std::invalid_argument("level-one coincidence needs r >= 2");
  std::vector<CheckRecord> out;
  const GroupTable& g = e.group();

  ExperimentConfig cfg1;
  cfg1.q = e.cfg.q;
  cfg1.r = 1;
  cfg1.torus_split = e.cfg.torus_split;
  cfg1.torus_nonsplit = e.cfg.torus_nonsplit;
  cfg1.jobs = e.cfg.jobs;
  Experiment e1(cfg1);
  const GroupTable& g1 = e1.group();

  // the classical table is only trusted after its own validation
  auto ortho = check_classical_orthogonality(e1);
  for (auto& rec : ortho) out.push_back(std::move(rec));

  for (auto kind : e.kinds()) {
    const auto& b = e.bundle(kind);
    const auto& b1 = e1.bundle(kind);

    // theta on T^F restricted to T_1^F, transported along the constant
    // lift to a character of the level-one torus
    auto restrict_theta = [&](const AbelianChar& th) {
      const AbelianStructure& st1 = b1.torus->structure;
      std::vector<int> exps(st1.factors.size());
      long m = th.structure->exponent;
      for (std::size_t i = 0; i < st1.factors.size(); ++i) {
        const auto& f1 = st1.factors[i];
        const Mat2& m1 = g1.element(f1.gen);
        int lift = g.index_of(Mat2{&g.ring, m1.e});
        if (!b.torus->level_one.contains(lift))
          throw std::logic_error("constant lift escapes T_1^F");
        long a = th.zeta_exp(lift);
        if (a * f1.order % m != 0) throw std::logic_error("restriction is not a character");
        exps[i] = static_cast<int>(a * f1.order / m % f1.order);
      }
      return AbelianChar(st1, exps);
    };

    // regular semisimple classes of G^F with a constant representative
    std::vector<std::pair<int, int>> pairs;  // (class id at level r, level-1 element)
    std::vector<char> seen(g.num_classes(), 0);
    for (long i1 = 0; i1 < g1.order(); ++i1) {
      const Mat2& m1 = g1.element(static_cast<int>(i1));
      int lift = g.index_of(Mat2{&g.ring, m1.e});
      if (!is_regular_semisimple(g, lift)) continue;
      int cid = g.class_of(lift);
      if (seen[cid]) continue;
      seen[cid] = 1;
      pairs.emplace_back(cid, static_cast<int>(i1));
    }

    for (std::size_t i = 0; i < b.thetas.size(); ++i) {
      AbelianChar theta1 = restrict_theta(b.thetas[i]);
      int j = Experiment::theta_index(b1.torus->structure, theta1.exps);
      for (const auto& [cid, e1_elem] : pairs) {
        auto start = Clock::now();
        const CycloNum& lhs = b.chars[i].at_class(cid);
        const CycloNum& rhs = b1.chars[j].at_elem(e1_elem);
        out.push_back(make_record("level_one_coincidence",
                                  Json{{"torus", b.torus->kind_name()},
                                       {"theta", theta_param(b.thetas[i])},
                                       {"class", cid}},
                                  cyclo_to_json(lhs), cyclo_to_json(rhs), lhs == rhs,
                                  ms_since(start)));
      }
    }
  }
  return out;
}

VerificationReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  Experiment e(cfg);

  VerificationReport report;
  report.config = cfg.to_json();

  auto append = [&](std::vector<CheckRecord> recs) {
    for (auto& r : recs) {
      if (r.pass)
        ++report.pass;
      else
        ++report.fail;
      report.records.push_back(std::move(r));
    }
  };

  append(check_group_order(e));
  for (const auto& name : cfg.effective_checks()) {
    if (name == "summation") append(check_summation(e));
    else if (name == "integrality") append(check_integrality(e));
    else if (name == "char_formula") append(check_char_formula(e));
    else if (name == "regular_ss") append(check_regular_ss(e));
    else if (name == "product_property") append(check_product_property(e));
    else if (name == "inner_product") append(check_inner_product(e));
    else if (name == "gamma") append(check_gamma(e));
    else if (name == "level_one_coincidence") append(check_level_one(e));
    else if (name == "classical_orthogonality") append(check_classical_orthogonality(e));
  }

  Json artifacts;
  for (auto kind : e.kinds()) {
    const auto& b = e.bundle(kind);
    if (!b.cache_hash.empty())
      artifacts[std::string("dlchars_") + b.torus->kind_name()] =
          Json{{"hash", b.cache_hash}, {"loaded", b.loaded_from_cache}};
  }
  report.artifacts = std::move(artifacts);

  if (!cfg.dump_dir.empty()) {
    std::filesystem::create_directories(cfg.dump_dir);
    dump_tables(e, cfg.dump_dir);
  }
  if (!cfg.out_path.empty()) write_report(report, cfg.out_path);
  return report;
}

}  // namespace dlgreen
