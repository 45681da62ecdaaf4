#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "incalg/homology.hpp"
#include "incalg/verdict.hpp"

namespace incalg {

struct InvariantRecord {
  std::string module;
  std::size_t pdim = 0;
  std::size_t grade = 0;
  bool perfect = true;
};

/// Resolutions of the simples and indecomposable injectives of one poset,
/// computed on first use. Not thread-safe: one per task.
class PosetAnalysis {
 public:
  explicit PosetAnalysis(Poset p, Field field = Field::rationals());

  [[nodiscard]] const Poset& poset() const { return poset_; }
  [[nodiscard]] Field field() const { return field_; }

  const ChainComplex& simple_resolution(Element x);
  const ChainComplex& injective_resolution(Element x);
  InvariantRecord simple_record(Element x);
  InvariantRecord injective_record(Element x);
  /// Multiplicities of I(x) in the minimal injective coresolution of the
  /// regular module.
  const Profile& regular_profile();
  /// Summands (degree, element) of the regular coresolution.
  std::vector<std::pair<std::size_t, Element>> profile_summands();

 private:
  Poset poset_;
  Field field_;
  std::vector<std::optional<ChainComplex>> simple_res_;
  std::vector<std::optional<ChainComplex>> injective_res_;
  std::vector<std::optional<InvariantRecord>> simple_rec_;
  std::vector<std::optional<InvariantRecord>> injective_rec_;
  std::optional<Profile> profile_;
};

/// grade = pdim. Throws ZeroModule.
bool is_perfect(const PosetRep& m);
InvariantRecord invariant_record(const PosetRep& m, std::string label);

/// pdim of every summand of the i-th regular coresolution term is <= i.
/// Also compares with grade S(x) = pdim I(x) for all x; InternalInconsistency
/// if the two disagree.
Verdict<std::string> is_auslander_regular(PosetAnalysis& a);
Verdict<std::string> is_auslander_regular(const Poset& p);

/// Every summand of the i-th term has pdim exactly i. When the algebra is
/// Auslander regular this is compared with "all simples perfect"; otherwise
/// the answer is advisory.
struct RightDiagonal {
  Verdict<std::string> verdict;
  bool advisory = false;
};
RightDiagonal is_right_diagonal(PosetAnalysis& a);
RightDiagonal is_right_diagonal(const Poset& p);

/// Auslander regular, all simples perfect, all injectives perfect. The
/// witness names the first failing module, simples before injectives.
Verdict<std::string> pmic_by_theorem(PosetAnalysis& a);
Verdict<std::string> pmic_by_theorem(const Poset& p);

/// Purity through double Ext: Ext^v(Ext^v(M, A), A) = 0 over the opposite
/// for all v other than grade M. Throws HypothesisNotMet unless the poset's
/// incidence algebra is Auslander regular.
bool is_pure_module_bjork(const PosetRep& m);
/// Same test without checking the hypothesis.
bool pure_by_double_ext(const PosetRep& m);

/// Each term of the regular coresolution is pure of grade equal to its
/// degree, checked summand by summand. Throws HypothesisNotMet.
Verdict<std::string> pmic_by_bjork(PosetAnalysis& a);
Verdict<std::string> pmic_by_bjork(const Poset& p);

inline constexpr std::size_t kDefaultPurityDimCap = 12;
/// Enumerates every nonzero submodule over F_2 and compares grades with
/// grade(M). Throws DimCapExceeded when the total dimension exceeds the cap.
Verdict<std::string> brute_force_purity(const PosetRep& m, std::size_t dim_cap = kDefaultPurityDimCap);

Verdict<std::string> two_sided_pmic(const Poset& p);
/// All simples and indecomposable injectives perfect, on p and its opposite.
Verdict<std::string> perfect_both_sides_all(const Poset& p);
Verdict<std::string> perfect_both_sides_all(PosetAnalysis& a, PosetAnalysis& op);

/// Necessary conditions for a pure minimal injective coresolution that need
/// no regularity hypothesis: every summand I(y) of the i-th term, and every
/// nonzero submodule of I(y), has grade i.
Verdict<std::string> pmic_necessary(PosetAnalysis& a);

struct ConjectureReport {
  std::size_t max_n = 0;
  std::size_t lattices = 0;
  std::size_t distributive = 0;
  std::size_t all_perfect = 0;
  std::size_t pmic = 0;
  /// Non-distributive lattices passing the PMIC test, as JSON posets.
  std::vector<std::string> counterexamples;
};
ConjectureReport conjecture_scan(std::size_t max_n, std::size_t workers = 1);

/// Everything the CLI reports about one poset.
struct AlgebraReport {
  std::string name;
  std::size_t size = 0;
  bool lattice = false;
  std::optional<bool> distributive;
  std::vector<InvariantRecord> simples;
  std::vector<InvariantRecord> injectives;
  Profile profile;
  std::vector<std::string> labels;
  bool auslander_regular = false;
  bool right_diagonal = false;
  bool right_diagonal_advisory = false;
  /// Empty when not applicable (the algebra is not Auslander regular).
  std::optional<bool> pmic;
  std::optional<bool> pmic_op;
  std::optional<bool> two_sided_pmic;
  bool perfect_both_sides = false;
  std::map<std::string, std::string> witnesses;
};

AlgebraReport build_report(const Poset& p, const std::string& name, Field field = Field::rationals());
std::string report_to_json(const AlgebraReport& r, int indent = 2);
std::string report_to_text(const AlgebraReport& r);

}  // namespace incalg
