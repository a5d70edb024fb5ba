#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "xmodlab/coset_enumeration.hpp"
#include "xmodlab/crossed_module.hpp"
#include "xmodlab/group_ops.hpp"

namespace xmodlab {

/// Lexicographically least element of each right coset H q, sorted, so the
/// identity comes first. Throws NotSubgroup.
std::vector<Permutation> coset_transversal(const PermGroup& q, const PermGroup& h);

/// One arbitrary element of each right coset H q, in the order of
/// coset_transversal().
std::vector<Permutation> random_transversal(const PermGroup& q, const PermGroup& h,
                                            std::mt19937& rng);

/**
 * Presentation of the induced crossed module along an inclusion P -> Q.
 *
 * Generator i stands for the pair (m, t) with m = source element
 * i % |M| and t = transversal[i / |M|]. Its boundary is t^-1 d(m) t and Q
 * permutes the generators: (m, t)^q = (m^p, t') where t q = p t'.
 */
struct InducedPresentation {
  Presentation presentation;
  PermGroup range;
  std::vector<Permutation> transversal;
  std::vector<Permutation> source_elements;
  /// Boundary of each generator, an element of the range.
  std::vector<Permutation> boundary;
  /// Generator permutation induced by each generator of the range.
  std::vector<std::vector<std::uint32_t>> action;
};

/// Largest number of generators (|M| times the index) accepted.
inline constexpr std::size_t kGeneratorBudget = 512;

/**
 * Copower relators (m,t)(m',t) = (mm',t) and Peiffer relators
 * x^-1 y x (y^(d x))^-1 over all generator pairs. An empty `transversal`
 * selects coset_transversal(). Throws NonInjective, BoundExceeded when the
 * generator budget is exceeded, and ValidationFailed if a relator does not
 * die under the boundary.
 */
InducedPresentation induced_presentation(const CrossedModule& x, const GroupHom& iota,
                                         std::vector<Permutation> transversal = {});

/**
 * Free crossed P-module on labelled elements of P: generators (r, p) with
 * boundary p^-1 w(r) p, Peiffer relators only.
 */
InducedPresentation free_crossed_module_presentation(
    const PermGroup& p, const std::vector<std::pair<std::string, Permutation>>& w);

/// Named group recognised up to isomorphism, or empty.
std::string group_name(const PermGroup& g);

struct Report {
  std::string subgroup;
  std::vector<Permutation> subgroup_generators;
  std::uint64_t order = 0;
  std::vector<std::int64_t> pi2;
  std::string pi1_name;
  Fingerprint pi1;
  std::string name;
  Fingerprint fingerprint;
  std::uint64_t normal_closure_order = 0;
  std::size_t generators = 0;
  std::size_t relators = 0;
  std::size_t cosets_defined = 0;
  double seconds = 0.0;

  nlohmann::ordered_json to_json() const;
};

nlohmann::ordered_json to_json(const Fingerprint& f);

struct Induced {
  CrossedModule xmod;
  Report report;
};

/**
 * Enumerates the induced presentation over the trivial subgroup, builds the
 * regular representation, the boundary and the action of Q, and validates
 * the result. Throws CosetLimitExceeded and ValidationFailed.
 */
Induced induce(const CrossedModule& x, const GroupHom& iota,
               std::size_t max_cosets = kDefaultMaxCosets,
               std::vector<Permutation> transversal = {});

/// induce() on the identity crossed module of P <= Q.
Induced induce_subgroup(const PermGroup& q, const PermGroup& p,
                        std::size_t max_cosets = kDefaultMaxCosets,
                        std::vector<Permutation> transversal = {});

struct TableRow {
  std::string label;
  std::string generators;
  std::uint64_t order;
  std::vector<std::int64_t> pi2;
  std::string pi1;
  /// Name the induced group must match, or empty.
  std::string name;
};

/// The seven subgroups of S4 and their expected values.
const std::vector<TableRow>& table_rows();

struct TableResult {
  std::vector<std::size_t> rows;  ///< 0-based row indices computed
  std::vector<Induced> induced;
};

/// Computes the requested rows (all when empty), concurrently.
TableResult run_table(std::size_t max_cosets = kDefaultMaxCosets,
                      std::vector<std::size_t> rows = {});

/// Mismatches against the expected values, plus the two isomorphism pairs
/// when both of their rows were computed. Empty means the table verifies.
std::vector<std::string> verify_table(const TableResult& result);

}  // namespace xmodlab
