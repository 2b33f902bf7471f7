#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spincover/families.hpp"
#include "spincover/partition.hpp"

namespace spincover {

enum class CoverTarget { SCover, ACover };
enum class CharVariant { Single, Pair };

// Label of a faithful irreducible character of a double cover: strict
// partition lambda, its parity (parity of the number of even parts), and
// whether it names one character or an associate pair on the given cover.
struct FaithfulCharLabel {
  Partition lambda;
  Parity parity = Parity::Even;
  CharVariant variant = CharVariant::Single;
  CoverTarget target = CoverTarget::SCover;

  std::string to_string() const;  // "psi(3,2,1)^+-" / "psi(5,1)"
};

// Labels over D(n). On the S-cover, odd lambda gives a pair and even lambda
// a single character; restriction to the A-cover swaps this (the pair
// members agree on 2.An, an even character splits there).
std::vector<FaithfulCharLabel> faithful_labels(Family f, int n);

enum class Verdict { Zero, NonzeroKnown, Unknown };

// Zero exactly by the vanishing rules: a faithful character vanishes on
// every class whose projected cycle type lies outside the odd-part
// partitions, except possibly on the label's own class (own-class values
// are only known through psi_own_class_value).
Verdict vanishes_on(const FaithfulCharLabel& label, const Partition& mu);

// Value of psi_lambda^± on its own class for odd strict lambda with r
// parts: ± i^k sqrt(q) with k = (n-r+1)/2 and q = (lambda_1...lambda_r)/2.
struct OwnClassValue {
  int k = 0;
  uint64_t q = 0;
  bool extrapolated = false;  // any instance other than (3,2,1)
};
OwnClassValue psi_own_class_value(const Partition& lambda);

enum class ScreenConclusion { AllFaithfulVanish, ValueInSqrtDZ, Inconclusive };

// Certificate that on class mu every faithful character vanishes (or, in
// the sqrt-d branch, vanishes except for an own-class value in sqrt(d)*Z).
struct VanishingCertificate {
  Family family = Family::TwoA;
  int n = 0;
  int p = 0;
  Partition mu;
  std::vector<std::pair<FaithfulCharLabel, Verdict>> verdicts;
  ScreenConclusion conclusion = ScreenConclusion::Inconclusive;
  uint64_t sqrt_d = 0;             // set for ValueInSqrtDZ
  bool canonical_witness = false;  // mu == (p,2,2,1^{n-p-4})

  // Re-derives every verdict from the vanishing rules and checks the
  // conclusion is forced by them.
  bool verify() const;
};

// Searches p-singular classes of n (even-sign classes only for the A-cover)
// for a witness on which all faithful characters vanish; the canonical
// witness (p,2,2,1^{n-p-4}) is tried first. The S-cover at n = 6, p = 3
// returns the sqrt(3) certificate on (3,2,1). nullopt means NoWitness.
std::optional<VanishingCertificate> screen_no_faithful_endotrivial(Family f,
                                                                   int n,
                                                                   int p);

}  // namespace spincover
