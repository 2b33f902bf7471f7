#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spincover/perm.hpp"

namespace spincover {

// Element of the double cover 2+.Sn (alpha = 0) or 2-.Sn (alpha = 1),
// represented as (projected permutation, central sign). The sign cocycle is
// evaluated inside mul() by straightening words in the generators t_j.
struct CoverElement {
  Perm perm;
  bool neg = false;   // sign = (-1)^neg, the exponent of z
  uint8_t alpha = 0;  // cover parameter

  int degree() const { return perm.degree(); }
  int sign() const { return neg ? -1 : +1; }
  bool is_even() const { return perm.is_even(); }
  bool is_identity() const { return !neg && perm.is_identity(); }

  CoverElement operator*(const CoverElement& rhs) const;
  CoverElement inverse() const;

  bool operator==(const CoverElement&) const = default;
  auto operator<=>(const CoverElement&) const = default;

  size_t hash() const {
    return perm.hash() * 2 + (neg ? 1 : 0);
  }

  std::string to_string() const;  // "(1,2)(3,4)", "-(1,2)", "-()" for z
};

CoverElement cover_identity(int n, int alpha);
CoverElement central_z(int n, int alpha);

// Distinguished lift t_j of the adjacent transposition (j, j+1).
CoverElement gen_t(int j, int n, int alpha);

// x_j = t_j * t_{j+1}, the even generators of 2.An.
CoverElement gen_x(int j, int n, int alpha);

// Chosen lift [i,j] of the transposition (i,j):
//   [i,i+1] = t_i;  [i,j] = t_{j-1} [i,j-1] t_{j-1}^{-1}  (i < j);
//   [i,j] = z [j,i]  (i > j).
CoverElement bracket(int i, int j, int n, int alpha);

// Product of brackets, left to right.
CoverElement lift_products(const std::vector<std::pair<int, int>>& pairs,
                           int n, int alpha);

// A positive-sign lift of an arbitrary permutation (product of brackets from
// its cycle decomposition); projection is exactly sigma.
CoverElement lift_perm(const Perm& sigma, int alpha);

int order(const CoverElement& g);
CoverElement conj(const CoverElement& g, const CoverElement& h);  // h^-1 g h

// Column normal form bookkeeping, exposed for tests: col[r] = c_r means the
// word u_1...u_{n-1} with u_r = t_r t_{r-1} ... t_{r-c_r+1}.
std::vector<int> lehmer_columns(const Perm& sigma);
// z-exponent of the cocycle: word(a) * word(b) = z^eps * word(ab).
int cocycle_exponent(const Perm& a, const Perm& b, int alpha);

struct RelationReport {
  int n = 0;
  int alpha = 0;
  size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Checks every defining relation instance: z^2 = 1, t_j^2 = z^alpha,
// (t_j t_{j+1})^3 = z^alpha, [z, t_j] = 1, [t_j, t_k] = z for |j-k| > 1.
RelationReport verify_presentation(int n, int alpha);

struct FuzzReport {
  int n = 0;
  int alpha = 0;
  uint64_t trials = 0;
  uint64_t seed = 0;
  uint64_t failures = 0;
  bool ok() const { return failures == 0; }
};

// Random associativity check (ab)c = a(bc); certifies the cocycle identity.
FuzzReport associativity_fuzz(int n, int alpha, uint64_t trials,
                              uint64_t seed);

// Parses the CLI element grammar: products of `z`, `t<j>`, `[i,j]` tokens,
// whitespace and `*` optional, e.g. "[1,2][3,4]" or "t1 t3 z".
CoverElement parse_cover_element(const std::string& text, int n, int alpha);

}  // namespace spincover
