/*
   Copyright 2026 The g2torsion Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "g2t/classgroup.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>

#include "g2t/error.hpp"

namespace g2t {

std::uint32_t ClassGroupTable::index_of(const MumfordDiv<Fp>& d) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == d) return static_cast<std::uint32_t>(i);
  throw Error(Errc::NotFound, "divisor is not in the table");
}

std::vector<MumfordDiv<Fp>> enumerate_canonical_divisors(const G2CurveP& c) {
  const std::uint64_t p = c.zero().modulus();
  const PrimeField k(p);
  std::vector<MumfordDiv<Fp>> out;
  auto push_all_balances = [&](const Poly<Fp>& u, const Poly<Fp>& v) {
    const int du = u.degree();
    if (c.odd()) {
      out.push_back({u, v, 0});
    } else if (c.split()) {
      for (int n = 0; n <= 2 - du; ++n) out.push_back({u, v, n});
    } else if (du % 2 == 0) {
      out.push_back({u, v, 1 - du / 2});
    }
  };
  auto compatible = [&](const Poly<Fp>& u, const Poly<Fp>& v) {
    return ((v * v + v * c.h() - c.f()) % u).is_zero();
  };
  push_all_balances(Poly<Fp>::constant(k.one()), Poly<Fp>());
  for (std::uint64_t a0 = 0; a0 < p; ++a0) {
    const Poly<Fp> u{k(static_cast<long long>(a0)), k.one()};
    for (std::uint64_t b0 = 0; b0 < p; ++b0) {
      const Poly<Fp> v = Poly<Fp>::constant(k(static_cast<long long>(b0)));
      if (compatible(u, v)) push_all_balances(u, v);
    }
  }
  for (std::uint64_t a1 = 0; a1 < p; ++a1) {
    for (std::uint64_t a0 = 0; a0 < p; ++a0) {
      const Poly<Fp> u{k(static_cast<long long>(a0)), k(static_cast<long long>(a1)), k.one()};
      for (std::uint64_t b1 = 0; b1 < p; ++b1) {
        for (std::uint64_t b0 = 0; b0 < p; ++b0) {
          const Poly<Fp> v{k(static_cast<long long>(b0)), k(static_cast<long long>(b1))};
          if (compatible(u, v)) push_all_balances(u, v);
        }
      }
    }
  }
  return out;
}

namespace {

constexpr int kOrder = 6;  // largest multiplicity of a point in E_i + E_j + iota E_k
constexpr int kBasis = 5;  // 1, x, x^2, x^3, 2y + h
using Series = std::array<Fp2, kOrder>;

struct Geometry {
  const G2CurveP& curve;
  Fp2Field field;
  Fp2 zero, one;
  Poly<Fp2> h, f, F;

  explicit Geometry(const G2CurveP& c)
      : curve(c), field(c.zero().modulus()), zero(field(0)), one(field(1)) {
    h = embed(c.h());
    f = embed(c.f());
    F = embed(c.F());
  }

  Poly<Fp2> embed(const Poly<Fp>& a) const {
    std::vector<Fp2> v;
    for (std::size_t i = 0; i < a.size(); ++i) v.push_back(field.embed(a[i]));
    return Poly<Fp2>(std::move(v));
  }

  Series constant(const Fp2& c) const {
    Series s;
    s.fill(zero);
    s[0] = c;
    return s;
  }
  Series mul(const Series& a, const Series& b) const {
    Series r;
    r.fill(zero);
    for (int i = 0; i < kOrder; ++i)
      for (int j = 0; i + j < kOrder; ++j) r[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return r;
  }
  Series add(Series a, const Series& b) const {
    for (int i = 0; i < kOrder; ++i) a[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i)];
    return a;
  }
  Series scale(Series a, const Fp2& c) const {
    for (auto& x : a) x *= c;
    return a;
  }
  Series compose(const Poly<Fp2>& g, const Series& x) const {
    Series acc = constant(zero);
    for (int i = g.degree(); i >= 0; --i) acc = add(mul(acc, x), constant(g[static_cast<std::size_t>(i)]));
    return acc;
  }

  /// Expansions of the basis functions at an affine point, local parameter
  /// x - x0 at ordinary points and 2y + h at Weierstrass points.
  std::array<Series, kBasis> affine_expansion(const Fp2& x0, const Fp2& y0) const {
    const Fp2 w = from_int(2, zero) * y0 + h.evaluate(x0);
    Series xs, ws;
    if (!is_zero(w)) {
      xs = constant(x0);
      xs[1] = one;
      const Series hs = compose(h, xs);
      const Series fs = compose(f, xs);
      Series ys = constant(y0);
      for (int k = 1; k < kOrder; ++k) {
        const Series g = add(add(mul(ys, ys), mul(hs, ys)), scale(fs, -one));
        ys[static_cast<std::size_t>(k)] = -g[static_cast<std::size_t>(k)] / w;
      }
      ws = add(scale(ys, from_int(2, zero)), hs);
    } else {
      // F(x0 + X) = tau^2 with F(x0) = 0, solved for X by fixed-point iteration.
      Series shift = constant(x0);
      shift[1] = one;
      const Series taylor = compose(F, shift);
      const Fp2 inv1 = one / taylor[1];
      Series X = constant(zero);
      for (int it = 0; it < kOrder; ++it) {
        Series rest = constant(zero);
        Series power = mul(X, X);
        for (int j = 2; j < kOrder; ++j) {
          rest = add(rest, scale(power, taylor[static_cast<std::size_t>(j)]));
          power = mul(power, X);
        }
        Series target = constant(zero);
        target[2] = one;
        X = scale(add(target, scale(rest, -one)), inv1);
      }
      xs = add(constant(x0), X);
      ws = constant(zero);
      ws[1] = one;
    }
    const Series x2 = mul(xs, xs);
    return {constant(one), xs, x2, mul(x2, xs), ws};
  }

  /// Expansions of t^3 times the basis functions at inf+ (sign = +1) or
  /// inf- (sign = -1), t = 1/x.
  std::array<Series, kBasis> infinity_expansion(const Fp2& s_inf, int sign) const {
    Series g = constant(zero);
    for (int i = 0; i < kOrder; ++i) g[static_cast<std::size_t>(i)] = F.coeff(6 - i, zero);
    Series root = constant(sign > 0 ? s_inf : -s_inf);
    const Fp2 inv = one / (from_int(2, zero) * root[0]);
    for (int k = 1; k < kOrder; ++k) {
      Fp2 acc = g[static_cast<std::size_t>(k)];
      for (int i = 1; i < k; ++i) acc -= root[static_cast<std::size_t>(i)] * root[static_cast<std::size_t>(k - i)];
      root[static_cast<std::size_t>(k)] = acc * inv;
    }
    std::array<Series, kBasis> out;
    for (int b = 0; b < 4; ++b) {
      out[static_cast<std::size_t>(b)] = constant(zero);
      out[static_cast<std::size_t>(b)][static_cast<std::size_t>(3 - b)] = one;
    }
    out[4] = root;
    return out;
  }
};

struct PointData {
  // kind 0: affine, 1: inf+ (or the single inf), 2: inf-
  int kind = 0;
  std::array<Series, kBasis> expansion{};
};

struct Support {
  std::vector<std::pair<int, int>> points;  // (point id, multiplicity)
};

int rank(std::vector<std::array<Fp2, kBasis>> rows, const Fp2& zero) {
  int r = 0;
  for (int col = 0; col < kBasis && r < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (!is_zero(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(piv)]);
    const Fp2 inv = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].inverse();
    for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
      const Fp2 factor = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] * inv;
      if (is_zero(factor)) continue;
      for (int j = col; j < kBasis; ++j)
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= factor * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
    ++r;
  }
  (void)zero;
  return r;
}

class Oracle {
 public:
  explicit Oracle(const G2CurveP& c) : geo_(c) {
    if (c.odd()) {
      points_.push_back(PointData{1, {}});
    } else {
      Fp2 s = geo_.zero;
      if (c.split()) {
        s = geo_.field.embed(*c.s_inf());
      } else {
        const Fp2 lc = geo_.field.embed(c.F().lead());
        for (std::uint64_t i = 0; i < geo_.field.size(); ++i) {
          const Fp2 z = geo_.field.element(i);
          if (z * z == lc) {
            s = z;
            break;
          }
        }
      }
      points_.push_back(PointData{1, geo_.infinity_expansion(s, +1)});
      points_.push_back(PointData{2, geo_.infinity_expansion(s, -1)});
    }
  }

  /// Effective degree-2 divisor behind d and behind its involute.
  std::pair<Support, Support> supports(const MumfordDiv<Fp>& d) {
    Support e, ie;
    const Poly<Fp2> u = geo_.embed(d.u);
    const Poly<Fp2> v = geo_.embed(d.v);
    Poly<Fp2> rest = u;
    for (std::uint64_t i = 0; i < geo_.field.size() && rest.degree() > 0; ++i) {
      const Fp2 a = geo_.field.element(i);
      const Poly<Fp2> lin{-a, geo_.one};
      int mult = 0;
      while (rest.degree() > 0 && is_zero(rest.evaluate(a))) {
        rest = exact_div(rest, lin);
        ++mult;
      }
      if (!mult) continue;
      const Fp2 y = v.evaluate(a);
      const Fp2 iy = -geo_.h.evaluate(a) - y;
      e.points.emplace_back(point_id(a, y), mult);
      ie.points.emplace_back(point_id(a, iy), mult);
    }
    if (rest.degree() > 0) throw Error(Errc::OracleMismatch, "u does not split over F_p^2");
    const int du = d.u.degree();
    if (geo_.curve.odd()) {
      if (du < 2) {
        e.points.emplace_back(0, 2 - du);
        ie.points.emplace_back(0, 2 - du);
      }
    } else {
      const int plus = d.balance, minus = 2 - du - d.balance;
      if (plus) {
        e.points.emplace_back(0, plus);
        ie.points.emplace_back(1, plus);
      }
      if (minus) {
        e.points.emplace_back(1, minus);
        ie.points.emplace_back(0, minus);
      }
    }
    return {e, ie};
  }

  /// True when the divisor sum is that of degree 6 cut out by L(3 D_inf).
  bool principal(const Support& a, const Support& b, const Support& c) const {
    std::map<int, int> mult;
    for (const Support* s : {&a, &b, &c})
      for (const auto& [id, m] : s->points) mult[id] += m;
    std::vector<std::array<Fp2, kBasis>> rows;
    for (const auto& [id, m] : mult) {
      const PointData& pd = points_[static_cast<std::size_t>(id)];
      if (geo_.curve.odd() && pd.kind == 1) {
        // pole orders of the basis at inf: 0, 2, 4, 6, 5; need at most 6 - m
        static constexpr std::array<int, kBasis> pole{0, 2, 4, 6, 5};
        for (int bi = 0; bi < kBasis; ++bi) {
          if (pole[static_cast<std::size_t>(bi)] <= 6 - m) continue;
          std::array<Fp2, kBasis> row;
          row.fill(geo_.zero);
          row[static_cast<std::size_t>(bi)] = geo_.one;
          rows.push_back(row);
        }
        continue;
      }
      for (int k = 0; k < m; ++k) {
        std::array<Fp2, kBasis> row;
        for (int bi = 0; bi < kBasis; ++bi)
          row[static_cast<std::size_t>(bi)] = pd.expansion[static_cast<std::size_t>(bi)][static_cast<std::size_t>(k)];
        rows.push_back(row);
      }
    }
    return rank(std::move(rows), geo_.zero) < kBasis;
  }

 private:
  int point_id(const Fp2& x, const Fp2& y) {
    const auto key = std::make_pair(x.index(), y.index());
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    const int id = static_cast<int>(points_.size());
    points_.push_back(PointData{0, geo_.affine_expansion(x, y)});
    ids_.emplace(key, id);
    return id;
  }

  Geometry geo_;
  std::vector<PointData> points_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, int> ids_;
};

}  // namespace

ClassGroupTable class_group_bruteforce(const G2CurveP& c) {
  const std::uint64_t p = c.zero().modulus();
  if (p > 7) throw Error(Errc::InvalidArgument, "brute-force class group needs p <= 7");
  ClassGroupTable t;
  t.q = p;
  t.elements = enumerate_canonical_divisors(c);
  const JacOrderRecord rec = g2_jacobian_order(c);
  if (t.elements.size() != rec.jac_order)
    throw Error(Errc::OracleMismatch, "enumerated " + std::to_string(t.elements.size()) +
                                          " divisors but #J(F_p) = " + std::to_string(rec.jac_order));
  t.identity = t.index_of(jac_identity(c));

  Oracle oracle(c);
  std::vector<Support> eff, inv;
  for (const auto& d : t.elements) {
    auto [e, ie] = oracle.supports(d);
    eff.push_back(std::move(e));
    inv.push_back(std::move(ie));
  }
  const std::size_t n = t.elements.size();
  t.sum.assign(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::optional<std::uint32_t> found;
      for (std::size_t k = 0; k < n; ++k) {
        if (!oracle.principal(eff[i], eff[j], inv[k])) continue;
        if (found) throw Error(Errc::OracleMismatch, "sum is not unique");
        found = static_cast<std::uint32_t>(k);
      }
      if (!found) throw Error(Errc::OracleMismatch, "sum not found");
      t.sum[i][j] = t.sum[j][i] = *found;
    }
  }
  return t;
}

}  // namespace g2t
