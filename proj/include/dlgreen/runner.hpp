#ifndef DLGREEN_RUNNER_HPP
#define DLGREEN_RUNNER_HPP

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dlgreen/classfun.hpp"
#include "dlgreen/dl.hpp"
#include "dlgreen/gamma.hpp"
#include "dlgreen/green.hpp"
#include "dlgreen/grp.hpp"
#include "dlgreen/tori.hpp"

namespace dlgreen {

using Json = nlohmann::ordered_json;

struct ExperimentConfig {
  int q = 2;
  int r = 2;
  int n = 2;
  bool torus_split = true;
  bool torus_nonsplit = true;
  std::vector<std::string> checks;  // empty means "all"
  std::string out_path;
  std::string cache_dir;
  std::string dump_dir;
  int jobs = 1;

  static const std::vector<std::string>& known_checks();
  /// Throws std::invalid_argument on bad configs (r must be 1 or even,
  /// enumeration budget, unknown check names).
  void validate() const;
  /// The checks to run: the explicit list, or every check applicable to
  /// this r when empty/"all".
  std::vector<std::string> effective_checks() const;

  Json to_json() const;
  static ExperimentConfig from_json(const Json& j);
};

struct CheckRecord {
  std::string check;
  Json params;
  Json lhs;
  Json rhs;
  bool pass = false;
  double elapsed_ms = 0;
};

Json cyclo_to_json(const CycloNum& z);
CycloNum cyclo_from_json(const Json& j);

/// All tables for one (q, r): the enumerated group, the requested tori
/// with their full character data, algebraized (or level-one classical)
/// characters, and Green tables.  Built once, then read-only.
class Experiment {
public:
  explicit Experiment(const ExperimentConfig& cfg);

  const ExperimentConfig cfg;

  struct Bundle {
    std::unique_ptr<TorusData> torus;
    std::vector<AbelianChar> thetas;
    std::vector<ClassFunction> chars;  // N^theta per theta, same order
    std::unique_ptr<DLContext> dl;     // only for even r >= 2
    std::unique_ptr<GreenTable> green;
    std::unique_ptr<TorusGreenTable> tgreen;
    std::unique_ptr<CharFormulaEvaluator> eval;
    bool loaded_from_cache = false;
    std::string cache_hash;  // FNV-1a of the cache file when used
  };

  const GroupTable& group() const { return *G_; }
  const TruncRing& ring() const { return *ring_; }
  std::vector<TorusData::Kind> kinds() const;
  const Bundle& bundle(TorusData::Kind k) const;

  /// Index of a torus character in the enumeration given its exponents.
  static int theta_index(const AbelianStructure& st, const std::vector<int>& exps);

  /// Cached per-class conjugator into T_1^F (-1 if the class misses it).
  int conjugator_for_class(TorusData::Kind k, int cid) const;

  /// Regular semisimple class ids, ascending.
  std::vector<int> regular_ss_classes() const;

  /// The diagonal-units subgroup and its characters (determinant twists).
  const AbelianStructure& units_structure() const { return units_st_; }
  /// A character of the unit group of exact order q-1 (trivial at q = 2).
  const AbelianChar& det_character() const { return *det_chi_; }

  /// Deterministic p-constant class functions for gamma testing.
  std::vector<std::pair<std::string, ClassFunction>> p_constant_samples() const;

  long dump_modulus() const;

private:
  std::unique_ptr<GroupTable> G_;
  const TruncRing* ring_;
  std::optional<Bundle> split_, nonsplit_;
  Subgroup units_sub_;
  AbelianStructure units_st_;
  std::unique_ptr<AbelianChar> det_chi_;
  mutable std::map<std::pair<int, int>, int> conj_cache_;  // (kind, cid) -> c

  void build_bundle(TorusData::Kind k);
};

std::vector<CheckRecord> check_group_order(const Experiment& e);
std::vector<CheckRecord> check_summation(const Experiment& e);
std::vector<CheckRecord> check_integrality(const Experiment& e);
std::vector<CheckRecord> check_char_formula(const Experiment& e);
std::vector<CheckRecord> check_regular_ss(const Experiment& e);
std::vector<CheckRecord> check_product_property(const Experiment& e);
std::vector<CheckRecord> check_inner_product(const Experiment& e);
std::vector<CheckRecord> check_gamma(const Experiment& e);
std::vector<CheckRecord> check_level_one(const Experiment& e);
std::vector<CheckRecord> check_classical_orthogonality(const Experiment& e);

struct VerificationReport {
  Json config;
  std::vector<CheckRecord> records;
  long pass = 0;
  long fail = 0;
  Json artifacts;  // cache file hashes

  Json to_json(bool with_timing = true) const;
};

VerificationReport run_experiment(const ExperimentConfig& cfg);
void write_report(const VerificationReport& report, const std::string& path);

/// Deterministic JSON dump of class data, character tables and Green
/// tables; byte-identical across runs of the same config.
void dump_tables(const Experiment& e, const std::string& dir);

/// FNV-1a 64-bit, hex string; used to fingerprint cached artifacts.
std::string fnv1a_hex(const std::string& data);

}  // namespace dlgreen

#endif
