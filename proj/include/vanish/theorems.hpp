#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vanish/chartab.hpp"
#include "vanish/factcheck.hpp"
#include "vanish/structure.hpp"

namespace vanish {

/// Lazily computed data about one group, shared by every check run on it.
/// Not thread-safe; each harness worker owns its contexts.
class GroupContext {
 public:
  explicit GroupContext(Group g);

  const Group& group() const { return g_; }
  const std::vector<std::size_t>& primes();
  const ClassData& classes();
  const CharTable& table();
  const VanishingProfile& profile();
  const std::vector<Group>& normals();
  const std::vector<Group>& minimal_normals();
  const StructReport& report();
  /// Character table of normals()[i].
  const CharTable& normal_table(std::size_t i);
  /// Index of an element of the group.
  std::size_t at(const Perm& x) const { return g_.at(x); }

 private:
  Group g_;
  std::optional<std::vector<std::size_t>> primes_;
  std::optional<ClassData> classes_;
  std::optional<CharTable> table_;
  std::optional<VanishingProfile> profile_;
  std::optional<std::vector<Group>> normals_;
  std::optional<std::vector<Group>> minimal_normals_;
  std::optional<StructReport> report_;
  std::map<std::size_t, CharTable> normal_tables_;
};

/// Which vanishing elements of A u B a hypothesis quantifies over.
struct ElementFilter {
  enum Kind { AllPpo, PElements, PRegularPpo } kind = AllPpo;
  std::size_t p = 0;
};

/// Arithmetic condition imposed on the index of each selected element.
struct IndexMode {
  enum Kind { PrimePower, PNumber, SquareFree, NotDivP2, PCoprime } kind = PrimePower;
  std::size_t p = 0;
};

IndexMode parse_index_mode(const std::string& text);

/// Element indices of G lying in A or B, ascending.
std::vector<std::size_t> factor_elements(const Factorisation& f);

/// No p-element of A u B is vanishing in G.
bool hyp_no_vanishing_p_elements(const Factorisation& f, const VanishingProfile& prof, std::size_t p);
bool hyp_no_vanishing_p_elements(const Factorisation& f, std::size_t p);

/// Every vanishing element of A u B passing the filter has an index
/// satisfying the mode.
bool hyp_vanishing_ppo_index(const Factorisation& f, const VanishingProfile& prof, IndexMode mode,
                             ElementFilter filter);
bool hyp_vanishing_ppo_index(const Factorisation& f, IndexMode mode, ElementFilter filter);

struct Clause {
  std::string name;
  bool holds = false;
  friend bool operator==(const Clause&, const Clause&) = default;
};

struct CheckOutcome {
  std::string theorem;
  std::string instance;
  /// Prime, prime set or other parameter, empty when unparameterised.
  std::string parameter;
  bool hypothesis = false;
  std::optional<bool> conclusion;
  std::vector<Clause> subclauses;
  std::string notes;
  std::optional<double> elapsed_ms;

  bool failed() const { return hypothesis && conclusion.has_value() && !*conclusion; }
  friend bool operator==(const CheckOutcome&, const CheckOutcome&) = default;
};

enum class Scope { Factorisation, Group };

struct TheoremSpec {
  std::string id;
  Scope scope;
  std::string summary;
};

/// Every registered check, in canonical order.
const std::vector<TheoremSpec>& theorem_registry();
const TheoremSpec& find_theorem(const std::string& id);

/// One instance of a factorisation-scope check.
struct FactInstance {
  std::string name;
  Factorisation f;
};

struct RunOptions {
  bool audit = false;
};

/// Runs a factorisation-scope check; `gc` must describe f.g.
std::vector<CheckOutcome> run_theorem(const TheoremSpec& spec, GroupContext& gc, const FactInstance& inst,
                                      const RunOptions& options = {});
/// Runs a group-scope check.
std::vector<CheckOutcome> run_theorem(const TheoremSpec& spec, GroupContext& gc, const std::string& name,
                                      const RunOptions& options = {});

struct HarnessEntry {
  std::string name;
  Group g;
  /// Declared factorisations; the trivial one is added by the harness.
  std::vector<Factorisation> factorisations;
};

struct HarnessOptions {
  bool audit = false;
  bool timings = false;
};

struct HarnessReport {
  std::vector<CheckOutcome> outcomes;
  std::map<std::string, std::size_t> coverage;
  std::vector<CheckOutcome> failures;
  /// Entries skipped because a cap was exceeded, with the reason.
  std::vector<std::pair<std::string, std::string>> skipped;

  std::vector<std::string> vacuous() const;
  friend bool operator==(const HarnessReport&, const HarnessReport&) = default;
};

/// Throws Error on an unknown id; "all" selects the whole registry.
std::vector<std::string> resolve_selection(const std::vector<std::string>& ids);

HarnessReport run_harness(const std::vector<HarnessEntry>& entries, const std::vector<std::string>& ids,
                          const HarnessOptions& options = {});

/// Fixed-width text rendering of a harness report.
std::string render_report(const HarnessReport& report);

}  // namespace vanish
