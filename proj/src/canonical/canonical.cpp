#include "uniton/canonical.hpp"

#include <sstream>

#include "uniton/errors.hpp"

namespace uniton {

static std::string join(const std::vector<int> &v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

std::string CanonicalElement::type_str() const { return join(t_); }

CanonicalElement CanonicalElement::from_type(const std::vector<int> &t) {
  if (t.empty()) throw InvalidType("empty type");
  for (int x : t)
    if (x <= 0) throw InvalidType("type entries must be positive: " + join(t));
  int r = static_cast<int>(t.size()) - 1;
  for (int j = 0; j <= r; ++j)
    if (t[j] != t[r - j]) throw InvalidType("type is not symmetric: " + join(t));
  CanonicalElement c;
  c.r_ = r;
  c.t_ = t;
  for (int k = r; k >= 0; --k)
    for (int m = 0; m < t[k]; ++m) c.xi_.push_back(k);
  int n = c.n();
  if (r % 2 == 1) {
    // ξ_{n/2-1} = ξ_{n/2}: the block just above the middle has size ≥ 2.
    if (n % 2 != 0 || n < 4 || c.xi_[n / 2 - 2] != c.xi_[n / 2 - 1])
      throw InvalidType("odd r needs middle blocks of size at least 2: " + join(t));
  }
  c.T_.assign(static_cast<std::size_t>(r) + 2, 0);
  for (int k = r; k >= 0; --k) c.T_[k] = c.T_[k + 1] + t[k];
  return c;
}

CanonicalElement CanonicalElement::from_xi(const std::vector<int> &xi) {
  if (xi.empty()) throw InvalidType("empty ξ");
  int r = xi.front();
  if (xi.back() != 0) throw InvalidType("ξ_n must be 0");
  for (std::size_t i = 0; i + 1 < xi.size(); ++i) {
    int d = xi[i] - xi[i + 1];
    if (d != 0 && d != 1) throw InvalidType("ξ must step down by 0 or 1");
  }
  std::vector<int> t(static_cast<std::size_t>(r) + 1, 0);
  for (int x : xi) ++t[x];
  CanonicalElement c = from_type(t);
  if (c.xi_ != xi) throw InvalidType("ξ is not canonical");
  return c;
}

CanonicalElement canonical_from_type(const std::vector<int> &t) {
  return CanonicalElement::from_type(t);
}

LambdaMatrix gamma_xi(const CanonicalElement &xi) {
  LambdaMatrix g(xi.n());
  for (int i = 1; i <= xi.n(); ++i) g.a(i, i) = LambdaPoly::monomial(RF(1), xi.xi(i));
  return g;
}

ShapeReport check_shape(const LambdaMatrix &a, const CanonicalElement &xi,
                        bool complex_only) {
  if (a.n() != xi.n()) throw SizeMismatch("matrix and ξ sizes differ");
  ShapeReport rep;
  int n = xi.n();
  auto bad = [&](int i, int j, std::string what) {
    rep.pass = false;
    rep.violations.push_back({i, j, std::move(what)});
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const LambdaPoly &e = a.a(i, j);
      int d = xi.xi(i) - xi.xi(j);
      if (d <= 0) {
        bool ok = i == j ? e.is_one() : e.is_zero();
        if (!ok) bad(i, j, i == j ? "diagonal entry is not 1" : "entry must vanish");
        continue;
      }
      if (e.is_zero()) continue;
      if (e.min_deg() < 0) {
        bad(i, j, "negative λ-degree");
        continue;
      }
      if (e.max_deg() > d - 1) {
        bad(i, j, "λ-degree " + std::to_string(e.max_deg()) + " exceeds " + std::to_string(d - 1));
        continue;
      }
      if (j == xi.bar(i) && d >= 2 && e.max_deg() > d - 2) {
        ShapeIssue issue{i, j, "second-diagonal λ-degree " + std::to_string(e.max_deg()) +
                                   " exceeds " + std::to_string(d - 2)};
        if (complex_only) rep.warnings.push_back(issue);
        else {
          rep.pass = false;
          rep.violations.push_back(issue);
        }
      }
    }
  return rep;
}

std::vector<int> parse_type_list(const std::string &text) {
  std::vector<int> t;
  std::string s;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != '[' && ch != ']' && ch != ' ') s += ch;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      t.push_back(v);
    } catch (const std::exception &) {
      throw InvalidType("cannot read type list: " + text);
    }
  }
  if (t.empty()) throw InvalidType("empty type list");
  return t;
}

}  // namespace uniton
