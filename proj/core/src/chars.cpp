#include "spincover/chars.hpp"

#include <algorithm>

#include "spincover/errors.hpp"

namespace spincover {

std::string FaithfulCharLabel::to_string() const {
  std::string s = "psi" + lambda.to_string();
  if (variant == CharVariant::Pair) s += "^+-";
  return s;
}

std::vector<FaithfulCharLabel> faithful_labels(Family f, int n) {
  if (!is_double_cover(f))
    throw UnsupportedFamily("faithful_labels: double covers only");
  const CoverTarget target =
      f == Family::TwoA ? CoverTarget::ACover : CoverTarget::SCover;
  std::vector<FaithfulCharLabel> out;
  for (const Partition& lam : strict_partitions(n)) {
    FaithfulCharLabel l;
    l.lambda = lam;
    l.parity = parity(lam);
    l.target = target;
    if (target == CoverTarget::SCover)
      l.variant = l.parity == Parity::Odd ? CharVariant::Pair
                                          : CharVariant::Single;
    else
      l.variant = l.parity == Parity::Even ? CharVariant::Pair
                                           : CharVariant::Single;
    out.push_back(std::move(l));
  }
  return out;
}

Verdict vanishes_on(const FaithfulCharLabel& label, const Partition& mu) {
  if (mu.n() != label.lambda.n()) throw DegreeMismatch("vanishes_on");
  if (has_only_odd_parts(mu)) return Verdict::Unknown;
  const bool own_class = mu == label.lambda;
  if (label.target == CoverTarget::SCover) {
    if (label.parity == Parity::Odd)
      return own_class ? Verdict::Unknown : Verdict::Zero;
    return Verdict::Zero;
  }
  // A-cover: constituents inherit S-cover zeros away from the label's own
  // class (the associate pair agrees off cycle type lambda, so a vanishing
  // sum forces each constituent to vanish there).
  return own_class ? Verdict::Unknown : Verdict::Zero;
}

OwnClassValue psi_own_class_value(const Partition& lambda) {
  const int n = lambda.n();
  const int r = lambda.num_parts();
  if (n < 4 || !is_strict(lambda) || parity(lambda) != Parity::Odd)
    throw OutOfScope("psi_own_class_value: needs an odd strict partition");
  if ((n - r + 1) % 2 != 0)
    throw OutOfScope("psi_own_class_value: (n - r + 1)/2 not integral");
  uint64_t prod = 1;
  for (int part : lambda.parts) prod *= static_cast<uint64_t>(part);
  if (prod % 2 != 0)
    throw OutOfScope("psi_own_class_value: radicand not integral");
  OwnClassValue v;
  v.k = (n - r + 1) / 2;
  v.q = prod / 2;
  v.extrapolated = !(lambda == Partition{3, 2, 1});
  return v;
}

bool VanishingCertificate::verify() const {
  if (verdicts.empty()) return false;
  // verdict table must cover every label exactly once
  auto labels = faithful_labels(family, n);
  if (labels.size() != verdicts.size()) return false;
  size_t nonzero = 0;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (!(verdicts[i].first.lambda == labels[i].lambda)) return false;
    Verdict rule = vanishes_on(labels[i], mu);
    switch (verdicts[i].second) {
      case Verdict::Zero:
        if (rule != Verdict::Zero) return false;
        break;
      case Verdict::NonzeroKnown: {
        // only the own-class sqrt(q) value is ever known nonzero
        if (!(labels[i].lambda == mu)) return false;
        OwnClassValue v = psi_own_class_value(labels[i].lambda);
        if (v.q == 0 || v.q != sqrt_d) return false;
        ++nonzero;
        break;
      }
      case Verdict::Unknown:
        return false;  // certificates never carry unresolved labels
    }
  }
  if (!is_p_singular(mu, p)) return false;
  if (family == Family::TwoA && sign_of_type(mu) != +1) return false;
  switch (conclusion) {
    case ScreenConclusion::AllFaithfulVanish:
      return nonzero == 0;
    case ScreenConclusion::ValueInSqrtDZ:
      return nonzero == 1 && sqrt_d > 0;
    case ScreenConclusion::Inconclusive:
      return false;
  }
  return false;
}

namespace {

std::optional<Partition> canonical_witness(int n, int p) {
  if (n < p + 4) return std::nullopt;
  Partition mu;
  mu.parts = {p, 2, 2};
  for (int i = 0; i < n - p - 4; ++i) mu.parts.push_back(1);
  return mu;
}

std::optional<VanishingCertificate> try_class(
    Family f, int n, int p, const Partition& mu,
    const std::vector<FaithfulCharLabel>& labels) {
  if (!is_p_singular(mu, p)) return std::nullopt;
  if (f == Family::TwoA && sign_of_type(mu) != +1) return std::nullopt;
  VanishingCertificate cert;
  cert.family = f;
  cert.n = n;
  cert.p = p;
  cert.mu = mu;
  for (const auto& l : labels) {
    Verdict v = vanishes_on(l, mu);
    if (v != Verdict::Zero) return std::nullopt;
    cert.verdicts.emplace_back(l, v);
  }
  cert.conclusion = ScreenConclusion::AllFaithfulVanish;
  return cert;
}

}  // namespace

std::optional<VanishingCertificate> screen_no_faithful_endotrivial(Family f,
                                                                   int n,
                                                                   int p) {
  if (!is_double_cover(f))
    throw UnsupportedFamily("screen: double covers only");
  if (p % 2 == 0 || p < 3) throw OutOfScope("screen: p must be odd");
  auto labels = faithful_labels(f, n);

  // sqrt(3) branch: S-cover of degree 6 at p = 3, class (3,2,1)
  if (f != Family::TwoA && n == 6 && p == 3) {
    Partition mu{3, 2, 1};
    VanishingCertificate cert;
    cert.family = f;
    cert.n = n;
    cert.p = p;
    cert.mu = mu;
    for (const auto& l : labels) {
      if (l.lambda == mu) {
        OwnClassValue v = psi_own_class_value(l.lambda);
        cert.sqrt_d = v.q;
        cert.verdicts.emplace_back(l, Verdict::NonzeroKnown);
      } else {
        if (vanishes_on(l, mu) != Verdict::Zero) return std::nullopt;
        cert.verdicts.emplace_back(l, Verdict::Zero);
      }
    }
    cert.conclusion = ScreenConclusion::ValueInSqrtDZ;
    return cert;
  }

  if (auto mu = canonical_witness(n, p)) {
    if (auto cert = try_class(f, n, p, *mu, labels)) {
      cert->canonical_witness = true;
      return cert;
    }
  }
  for (const Partition& mu : partitions_of(n))
    if (auto cert = try_class(f, n, p, mu, labels)) return cert;
  return std::nullopt;
}

}  // namespace spincover
