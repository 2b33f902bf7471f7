#include "spincover/cover.hpp"

#include <cctype>
#include <random>
#include <sstream>

#include "spincover/errors.hpp"

namespace spincover {

namespace {

// Right-multiplies the column normal form state by the generator t_j and
// returns the accumulated z-exponent (mod 2). Uses only the three relation
// families: far commutation (z), braid move (sign-free), square (z^alpha).
//
// State: col[r] = c_r, 1 <= c_r <= r, meaning column word t_r t_{r-1} ...
// t_{r-c_r+1}. The new letter t_j bubbles left from the right end. While
// passing a nonempty column t_r...t_m to its left home column j, with the
// current mover value v (v starts at j and may decrement via braid moves):
//   m >= v+2 : all letters far; sign += c_r
//   m == v+1 : mover extends the column (absorbed); done
//   m == v   : mover cancels against the column tail; sign += alpha; done
//   m <= v-1 : braid through; column unchanged, mover becomes t_{v-1},
//              sign += c_r - 2 (far passes on both sides of the braid)
// At the home column (r == v): empty -> start it; c == 1 -> square cancel
// (sign += alpha); c >= 2 -> braid, mover becomes t_{v-1}, sign += c - 2.
int insert_gen(std::vector<int>& col, int j, int alpha) {
  int sign = 0;
  int v = j;
  int r = static_cast<int>(col.size()) - 1;
  while (true) {
    if (r > v) {
      int q = col[r];
      if (q == 0) {
        --r;
        continue;
      }
      int m = r - q + 1;
      if (m >= v + 2) {
        sign ^= q & 1;
        --r;
      } else if (m == v + 1) {
        col[r] += 1;
        return sign;
      } else if (m == v) {
        sign ^= alpha;
        col[r] -= 1;
        return sign;
      } else {
        sign ^= q & 1;  // q - 2 has the same parity
        v -= 1;
        --r;
      }
    } else {
      int q = col[v];
      if (q == 0) {
        col[v] = 1;
        return sign;
      }
      if (q == 1) {
        sign ^= alpha;
        col[v] = 0;
        return sign;
      }
      sign ^= q & 1;  // q - 2 far passes
      v -= 1;
      r = v;
    }
  }
}

std::vector<int> word_letters(const std::vector<int>& col) {
  std::vector<int> letters;
  for (size_t r = 1; r < col.size(); ++r)
    for (int k = 0; k < col[r]; ++k) letters.push_back(static_cast<int>(r) - k);
  return letters;
}

}  // namespace

std::vector<int> lehmer_columns(const Perm& sigma) {
  int n = sigma.degree();
  std::vector<int> a(n + 1), pos(n + 1);
  for (int i = 1; i <= n; ++i) {
    a[i] = sigma.apply(i);
    pos[a[i]] = i;
  }
  std::vector<int> col(n, 0);  // col[r] for 1 <= r <= n-1
  for (int r = n - 1; r >= 1; --r) {
    int q = (r + 1) - pos[r + 1];
    col[r] = q;
    if (q == 0) continue;
    // a <- a composed with u_r(q)^{-1}: u^{-1}(x) = x+1 on [r-q+1, r],
    // u^{-1}(r+1) = r-q+1
    int save = a[r - q + 1];
    for (int x = r - q + 1; x <= r; ++x) a[x] = a[x + 1];
    a[r + 1] = save;
    for (int x = r - q + 1; x <= r + 1; ++x) pos[a[x]] = x;
  }
  return col;
}

int cocycle_exponent(const Perm& a, const Perm& b, int alpha) {
  std::vector<int> col = lehmer_columns(a);
  int sign = 0;
  for (int j : word_letters(lehmer_columns(b))) sign ^= insert_gen(col, j, alpha);
  return sign;
}

CoverElement CoverElement::operator*(const CoverElement& rhs) const {
  if (degree() != rhs.degree())
    throw DegreeMismatch("CoverElement::operator*: degree mismatch");
  if (alpha != rhs.alpha)
    throw CoverMismatch("CoverElement::operator*: cover parameter mismatch");
  CoverElement out;
  out.perm = perm * rhs.perm;
  out.neg = neg ^ rhs.neg ^ (cocycle_exponent(perm, rhs.perm, alpha) != 0);
  out.alpha = alpha;
  return out;
}

CoverElement CoverElement::inverse() const {
  CoverElement out;
  out.perm = perm.inverse();
  out.alpha = alpha;
  out.neg = neg ^ (cocycle_exponent(perm, out.perm, alpha) != 0);
  return out;
}

std::string CoverElement::to_string() const {
  std::string s = perm.cycle_string();
  return neg ? "-" + s : s;
}

CoverElement cover_identity(int n, int alpha) {
  return CoverElement{Perm::identity(n), false, static_cast<uint8_t>(alpha)};
}

CoverElement central_z(int n, int alpha) {
  return CoverElement{Perm::identity(n), true, static_cast<uint8_t>(alpha)};
}

CoverElement gen_t(int j, int n, int alpha) {
  if (j < 1 || j > n - 1) throw IndexOutOfRange("gen_t: j out of range");
  return CoverElement{Perm::transposition(n, j, j + 1), false,
                      static_cast<uint8_t>(alpha)};
}

CoverElement gen_x(int j, int n, int alpha) {
  return gen_t(j, n, alpha) * gen_t(j + 1, n, alpha);
}

CoverElement bracket(int i, int j, int n, int alpha) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw IndexOutOfRange("bracket: bad points");
  if (i > j) return central_z(n, alpha) * bracket(j, i, n, alpha);
  if (j == i + 1) return gen_t(i, n, alpha);
  CoverElement t = gen_t(j - 1, n, alpha);
  return t * bracket(i, j - 1, n, alpha) * t.inverse();
}

CoverElement lift_products(const std::vector<std::pair<int, int>>& pairs,
                           int n, int alpha) {
  CoverElement out = cover_identity(n, alpha);
  for (auto [i, j] : pairs) out = out * bracket(i, j, n, alpha);
  return out;
}

CoverElement lift_perm(const Perm& sigma, int alpha) {
  int n = sigma.degree();
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> seen(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    if (seen[i] || sigma.apply(i) == i) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = sigma.apply(j)) {
      seen[j] = true;
      cyc.push_back(j);
    }
    for (size_t k = 0; k + 1 < cyc.size(); ++k)
      pairs.emplace_back(cyc[k], cyc[k + 1]);
  }
  CoverElement out = lift_products(pairs, n, alpha);
  if (!(out.perm == sigma)) throw Error("lift_perm: projection mismatch");
  return out;
}

int order(const CoverElement& g) {
  CoverElement cur = g;
  int cap = 2 * g.perm.order();
  for (int k = 1; k <= cap; ++k) {
    if (cur.is_identity()) return k;
    cur = cur * g;
  }
  throw Error("order: exceeded twice the projection order");
}

CoverElement conj(const CoverElement& g, const CoverElement& h) {
  return h.inverse() * g * h;
}

RelationReport verify_presentation(int n, int alpha) {
  RelationReport rep;
  rep.n = n;
  rep.alpha = alpha;
  auto id = cover_identity(n, alpha);
  auto z = central_z(n, alpha);
  auto za = alpha ? z : id;
  auto check = [&](bool ok, const std::string& what) {
    ++rep.checked;
    if (!ok) rep.failures.push_back(what);
  };
  check(z * z == id, "z^2 = 1");
  for (int j = 1; j <= n - 1; ++j) {
    auto t = gen_t(j, n, alpha);
    std::ostringstream js;
    js << "t" << j;
    check(t * t == za, js.str() + "^2 = z^alpha");
    check(z * t == t * z, "[z," + js.str() + "] = 1");
  }
  for (int j = 1; j <= n - 2; ++j) {
    auto t = gen_t(j, n, alpha), u = gen_t(j + 1, n, alpha);
    auto tu = t * u;
    std::ostringstream js;
    js << "(t" << j << " t" << j + 1 << ")^3 = z^alpha";
    check(tu * tu * tu == za, js.str());
  }
  for (int j = 1; j <= n - 1; ++j)
    for (int k = j + 2; k <= n - 1; ++k) {
      auto t = gen_t(j, n, alpha), u = gen_t(k, n, alpha);
      std::ostringstream js;
      js << "[t" << j << ",t" << k << "] = z";
      check(t * u == z * (u * t), js.str());
    }
  return rep;
}

FuzzReport associativity_fuzz(int n, int alpha, uint64_t trials,
                              uint64_t seed) {
  FuzzReport rep;
  rep.n = n;
  rep.alpha = alpha;
  rep.trials = trials;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  auto random_element = [&]() {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    for (int i = n - 1; i > 0; --i) {
      int k = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
      std::swap(img[i], img[k]);
    }
    return CoverElement{Perm::from_images(img),
                        (rng() & 1) != 0, static_cast<uint8_t>(alpha)};
  };
  for (uint64_t t = 0; t < trials; ++t) {
    auto a = random_element(), b = random_element(), c = random_element();
    if (!((a * b) * c == a * (b * c))) ++rep.failures;
  }
  return rep;
}

CoverElement parse_cover_element(const std::string& text, int n, int alpha) {
  CoverElement out = cover_identity(n, alpha);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace((unsigned char)text[i]) || text[i] == '*'))
      ++i;
  };
  auto read_int = [&]() -> int {
    if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
      throw ParseError("expected integer at position " + std::to_string(i));
    int v = 0;
    while (i < text.size() && std::isdigit((unsigned char)text[i]))
      v = v * 10 + (text[i++] - '0');
    return v;
  };
  skip_ws();
  if (i >= text.size()) throw ParseError("empty element expression");
  while (i < text.size()) {
    char ch = text[i];
    if (ch == 'z') {
      ++i;
      out = out * central_z(n, alpha);
    } else if (ch == 't') {
      ++i;
      int j = read_int();
      if (j < 1 || j > n - 1)
        throw ParseError("t index out of range: t" + std::to_string(j));
      out = out * gen_t(j, n, alpha);
    } else if (ch == '[') {
      ++i;
      int a = read_int();
      skip_ws();
      if (i >= text.size() || text[i] != ',')
        throw ParseError("expected ',' in bracket");
      ++i;
      skip_ws();
      int b = read_int();
      skip_ws();
      if (i >= text.size() || text[i] != ']')
        throw ParseError("expected ']' in bracket");
      ++i;
      if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw ParseError("bracket points out of range");
      out = out * bracket(a, b, n, alpha);
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'");
    }
    skip_ws();
  }
  return out;
}

}  // namespace spincover
