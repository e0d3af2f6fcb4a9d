// Modular gcd over Q(i)[z]. Each prime p ≡ 1 (mod 4) gives two images of
// Z[i] in F_p (i ↦ ±s with s² = -1); together they determine the real and
// imaginary parts mod p. Coefficients of the monic gcd are recovered by
// CRT and rational reconstruction and the candidate is verified by exact
// division, so the result never depends on luck.
#include <cstdint>
#include <optional>

#include "modgcd.hpp"

namespace uniton {
namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2u, 3u, 5u, 7u, 11u, 13u})
    if (n % q == 0) return n == q;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int k = 1; k < s; ++k) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

struct Prime {
  u64 p, s;  // s² ≡ -1
};

const Prime &prime_at(std::size_t k) {
  static std::vector<Prime> primes;
  while (primes.size() <= k) {
    u64 c = primes.empty() ? (1ull << 62) - 3 : primes.back().p - 4;
    while (!is_prime(c)) c -= 4;  // c ≡ 1 mod 4 throughout
    u64 s = 0;
    for (u64 q = 2;; ++q) {
      if (powmod(q, (c - 1) / 2, c) == c - 1) {
        s = powmod(q, (c - 1) / 4, c);
        break;
      }
    }
    primes.push_back({c, s});
  }
  return primes[k];
}

}  // namespace

ZPoly to_integral(const Polynomial &a, mpz_class *den) {
  mpz_class l = 1;
  for (const GR &c : a.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
  }
  ZPoly z;
  for (const GR &c : a.coeffs()) {
    z.re.push_back(c.re().get_num() * (l / c.re().get_den()));
    z.im.push_back(c.im().get_num() * (l / c.im().get_den()));
  }
  if (den) *den = l;
  return z;
}

namespace {

u64 mod_of(const mpz_class &x, u64 p) {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p));
}

using FpPoly = std::vector<u64>;

FpPoly image(const ZPoly &a, u64 p, u64 e) {
  FpPoly out(a.re.size());
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = (mod_of(a.re[k], p) + mulmod(mod_of(a.im[k], p), e, p)) % p;
  return out;
}

void trim(FpPoly &a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    u64 inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      u64 f = mulmod(a.back(), inv, p);
      std::size_t off = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j)
        a[off + j] = (a[off + j] + p - mulmod(f, b[j], p)) % p;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 inv = powmod(a.back(), p - 2, p);
    for (auto &c : a) c = mulmod(c, inv, p);
  }
  return a;
}

std::optional<Rational> reconstruct(const mpz_class &u, const mpz_class &m) {
  // Find a/b ≡ u (mod m) with |a|, b ≤ sqrt(m/2).
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = u, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

// Exact quotient a / g for monic g.
FpPoly fp_div(FpPoly a, const FpPoly &g, u64 p) {
  std::size_t dg = g.size() - 1;
  FpPoly q(a.size() - dg);
  for (std::size_t k = a.size(); k-- > dg;) {
    u64 f = a[k];
    q[k - dg] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j)
      a[k - dg + j] = (a[k - dg + j] + p - mulmod(f, g[j], p)) % p;
  }
  return q;
}

Polynomial from_integral(const ZPoly &z) {
  std::vector<GR> c;
  for (std::size_t k = 0; k < z.re.size(); ++k) c.emplace_back(Rational(z.re[k]), Rational(z.im[k]));
  return Polynomial(std::move(c));
}

}  // namespace

GcdCofactors modular_gcd(const Polynomial &a, const Polynomial &b) {
  mpz_class la, lb;
  ZPoly za = to_integral(a, &la), zb = to_integral(b, &lb);
  Polynomial ia = from_integral(za), ib = from_integral(zb);
  int deg = std::min(a.degree(), b.degree()) + 1;
  // CRT accumulators: gcd, then the two cofactors of the integral inputs.
  std::vector<mpz_class> acc[3][2];
  mpz_class modulus = 1;
  int used = 0, next_try = 1;
  for (std::size_t k = 0;; ++k) {
    const Prime &pr = prime_at(k);
    u64 p = pr.p;
    FpPoly img[2][3];
    bool unlucky = false;
    for (int side = 0; side < 2 && !unlucky; ++side) {
      u64 e = side == 0 ? pr.s : p - pr.s;
      FpPoly fa = image(za, p, e), fb = image(zb, p, e);
      if (fa.back() == 0 || fb.back() == 0) {
        unlucky = true;
        break;
      }
      FpPoly g = fp_gcd(fa, fb, p);
      img[side][1] = fp_div(fa, g, p);
      img[side][2] = fp_div(fb, g, p);
      img[side][0] = std::move(g);
    }
    if (unlucky) continue;
    int d1 = static_cast<int>(img[0][0].size()) - 1;
    if (d1 != static_cast<int>(img[1][0].size()) - 1 || d1 > deg) continue;
    if (d1 == 0) return {Polynomial(GR(1)), a, b};
    if (d1 < deg) {
      deg = d1;
      for (int t = 0; t < 3; ++t) {
        std::size_t len = img[0][t].size();
        acc[t][0].assign(len, mpz_class(0));
        acc[t][1].assign(len, mpz_class(0));
      }
      modulus = 1;
      used = 0;
      next_try = 1;
    }
    u64 inv2 = powmod(2, p - 2, p), inv2s = powmod(mulmod(2, pr.s, p), p - 2, p);
    mpz_class mp(static_cast<unsigned long>(p)), minv, t;
    mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), mp.get_mpz_t());
    for (int q = 0; q < 3; ++q)
      for (std::size_t j = 0; j < img[0][q].size(); ++j) {
        u64 u = img[0][q][j], v = img[1][q][j];
        u64 part[2] = {mulmod((u + v) % p, inv2, p), mulmod((u + p - v) % p, inv2s, p)};
        for (int c = 0; c < 2; ++c) {
          mpz_class &x = acc[q][c][j];
          t = mpz_class(static_cast<unsigned long>(part[c])) - x;
          t *= minv;
          mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), mp.get_mpz_t());
          x += modulus * t;
        }
      }
    modulus *= mp;
    if (++used < next_try) continue;
    next_try = used + std::max(1, used / 2);
    Polynomial cand[3];
    bool ok = true;
    for (int q = 0; q < 3 && ok; ++q) {
      std::vector<GR> coeffs;
      for (std::size_t j = 0; j < acc[q][0].size() && ok; ++j) {
        auto x = reconstruct(acc[q][0][j], modulus), y = reconstruct(acc[q][1][j], modulus);
        if (!x || !y) ok = false;
        else coeffs.emplace_back(*x, *y);
      }
      cand[q] = Polynomial(std::move(coeffs));
    }
    if (!ok) continue;
    if (cand[0] * cand[1] == ia && cand[0] * cand[2] == ib)
      return {cand[0], cand[1].scaled(GR(Rational(1, la))),
              cand[2].scaled(GR(Rational(1, lb)))};
  }
}

}  // namespace uniton
