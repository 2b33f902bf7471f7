#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spincover/abelian.hpp"
#include "spincover/chars.hpp"
#include "spincover/families.hpp"

namespace spincover {

enum class Provenance { Computed, PaperCited, ExternalCited };

std::string provenance_name(Provenance p);

struct Fact {
  std::string claim;
  Provenance provenance = Provenance::Computed;
  std::string detail;
};

enum class GeneratorKind {
  Omega,                    // class of the Heller translate of k
  OmegaSubquotient,         // endotrivial subquotient of Omega^a(k)
  OneDimensional,           // twist by a one-dimensional module
  SimpleNonprincipalBlock,  // simple endotrivial outside the principal block
  ExceptionalTorsion,       // quaternion / semidihedral torsion class
  HeartSummand,             // summand of the heart of P(k), dihedral case
};

std::string generator_kind_name(GeneratorKind k);

struct GeneratorDescription {
  GeneratorKind kind = GeneratorKind::Omega;
  int a = 0;      // OmegaSubquotient parameter
  int order = 0;  // order in T(G), 0 = infinite/unspecified
  std::string note;
};

// Structure answer: an explicit abelian group, or the symbolic statement
// that inflation from G/Z(G) is an isomorphism (optionally with the value
// the paper states for the quotient side attached).
struct TStructure {
  bool inflation_iso = false;
  std::optional<AbelianGroup> value;         // explicit structure if known
  std::optional<AbelianGroup> paper_stated;  // as printed, when it differs
  std::string note;
};

struct TGroupReport {
  GroupSpec spec;
  int p = 0;
  TStructure structure;
  std::vector<GeneratorDescription> generators;
  std::vector<Fact> facts;
  std::optional<uint64_t> e;            // inertial index, cyclic cases
  std::optional<AbelianGroup> x_n;      // X(N_G(P)), cyclic cases
  std::optional<VanishingCertificate> certificate;
  uint64_t seed = 0;
  size_t budget_closure = 0;
  size_t budget_search = 0;
};

// Inertial index e = |N_G(Z) : C_G(Z)| of the principal block for cyclic
// Sylow p-subgroups, computed in the plain quotient (Sn, An, A6, A7) by
// enumerating the normalizer of <c> for a p-cycle c; cross-checked against
// the closed forms (p-1)/2 vs p-1 for the double covers.
uint64_t inertial_index(const GroupSpec& spec, int p);

// X(N_G(P)) = p'-part of the abelianization of the normalizer. Enumerated
// at the element level for the double covers; paper-cited from the cyclic
// table for the exceptional covers.
AbelianGroup X_of_normalizer(const GroupSpec& spec, int p);

AbelianGroup canonicalize(const AbelianGroup& g);

TGroupReport compute_T(const GroupSpec& spec, int p, uint64_t seed = 0);

// --- table and theorem reproduction

struct CellReport {
  std::string row;
  std::string column;
  std::string computed;
  std::string expected;
  Provenance provenance = Provenance::Computed;
  bool match = false;
  std::string note;
};

struct TableReport {
  std::string name;
  std::vector<CellReport> cells;
  bool all_match() const;
};

TableReport reproduce_table1();
TableReport reproduce_table2();
TableReport reproduce_theoremA();
TableReport reproduce_theoremB();

}  // namespace spincover
