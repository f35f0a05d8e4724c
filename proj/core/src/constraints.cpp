#include "nilsys/constraints.hpp"
#include "nilsys/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilsys {

std::string to_string(ConstraintClass k) {
  switch (k) {
  case ConstraintClass::A: return "A";
  case ConstraintClass::B: return "B";
  case ConstraintClass::Aux: return "Aux";
  case ConstraintClass::C: return "C";
  case ConstraintClass::Cprime: return "Cprime";
  case ConstraintClass::D: return "D";
  }
  return "?";
}

ConstraintClass parse_constraint_class(const std::string &name) {
  for (auto k : {ConstraintClass::A, ConstraintClass::B, ConstraintClass::C,
                 ConstraintClass::Cprime, ConstraintClass::D})
    if (to_string(k) == name)
      return k;
  throw std::invalid_argument("unknown constraint class '" + name + "'");
}

bool ExponentVars::has_t(std::size_t coord) const {
  return std::binary_search(t_coords.begin(), t_coords.end(), coord);
}

std::size_t ExponentVars::t(std::size_t coord) const {
  auto it = std::lower_bound(t_coords.begin(), t_coords.end(), coord);
  if (it == t_coords.end() || *it != coord)
    throw std::out_of_range("no T variable for coordinate " + std::to_string(coord + 1));
  return blocks + static_cast<std::size_t>(it - t_coords.begin());
}

std::string ExponentVars::name(std::size_t var) const {
  if (var < blocks)
    return "A" + std::to_string(var + 1);
  return "T" + std::to_string(t_coords.at(var - blocks) + 1);
}

std::string Provenance::str() const {
  auto n = [](std::size_t x) { return std::to_string(x + 1); };
  switch (kind) {
  case ConstraintClass::A: return "A(" + n(start) + ")";
  case ConstraintClass::B:
    return "B(" + n(i) + "," + n(j) + "->" + n(k) + ",m=" + std::to_string(m) + ")";
  case ConstraintClass::Aux:
    return "Aux(" + n(i) + "," + n(j) + "->" + n(k) + ",m=" + std::to_string(m) + ")";
  case ConstraintClass::C: return "C(" + n(start) + ")";
  case ConstraintClass::Cprime: return "Cprime(" + n(start) + ")";
  case ConstraintClass::D:
    return "D(" + n(start) + ".." + std::to_string(end) + ",z=" + n(center) +
           ",m=" + std::to_string(m) + ")";
  }
  return "?";
}

Vector ConstraintSystem::objective() const {
  Vector c = zero_vector(vars.size());
  for (std::size_t q = 0; q < vars.blocks; ++q)
    c[q] = 1;
  return c;
}

Matrix ConstraintSystem::matrix() const {
  Matrix g(0, vars.size());
  for (const auto &c : constraints)
    g.append_row(c.lhs);
  return g;
}

Vector ConstraintSystem::rhs() const {
  Vector h;
  for (const auto &c : constraints)
    h.push_back(c.rhs);
  return h;
}

namespace {

struct Layout {
  std::vector<std::size_t> block_of;
  std::vector<std::size_t> starts;
  std::vector<std::size_t> sizes;

  explicit Layout(const std::vector<std::size_t> &blocks) : sizes(blocks) {
    std::size_t p = 0;
    for (std::size_t q = 0; q < blocks.size(); ++q) {
      starts.push_back(p);
      for (std::size_t t = 0; t < blocks[q]; ++t)
        block_of.push_back(q);
      p += blocks[q];
    }
  }
  bool one_dim(std::size_t coord) const { return sizes[block_of[coord]] == 1; }
  bool is_start(std::size_t coord) const {
    return std::find(starts.begin(), starts.end(), coord) != starts.end();
  }
};

std::ptrdiff_t leading(const Vector &v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0)
      return static_cast<std::ptrdiff_t>(k);
  return -1;
}

// Scan of structure constants: every [f_a, f_b] with a >= i, b >= j, other
// than (i, j) itself, vanishes in coordinates <= k.
bool cross_terms_deeper(const LieAlgebra &fa, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t d = fa.dim();
  for (std::size_t a = i; a < d; ++a)
    for (std::size_t b = j; b < d; ++b) {
      if (a == i && b == j)
        continue;
      auto l = leading(fa.bracket(a, b));
      if (l >= 0 && static_cast<std::size_t>(l) <= k)
        return false;
    }
  return true;
}

// Pairing on coordinates [p, p') read off the z coordinate.
Matrix pairing(const LieAlgebra &fa, std::size_t p, std::size_t p2, std::size_t z) {
  Matrix w(p2 - p, p2 - p);
  for (std::size_t a = p; a < p2; ++a)
    for (std::size_t b = p; b < p2; ++b)
      w(a - p, b - p) = fa.bracket(a, b)[z];
  return w;
}

} // namespace

ConstraintSystem generate_constraints(const LieAlgebra &fa, const std::vector<int> &weights,
                                      const std::vector<std::size_t> &blocks,
                                      const std::set<ConstraintClass> &disabled) {
  const std::size_t d = fa.dim();
  Layout lay(blocks);
  if (lay.block_of.size() != d || weights.size() != d)
    throw std::invalid_argument("blocks and weights must cover the dimension");
  auto enabled = [&](ConstraintClass k) { return disabled.count(k) == 0; };

  ConstraintSystem sys;
  sys.blocks = blocks;
  sys.weights = weights;
  sys.vars.blocks = blocks.size();

  for (std::size_t i = 0; i < d; ++i) {
    if (!lay.one_dim(i))
      continue;
    for (std::size_t j = i + 1; j < d; ++j) {
      if (!lay.one_dim(j))
        continue;
      const Vector &v = fa.bracket(i, j);
      auto l = leading(v);
      if (l < 0)
        continue;
      auto k = static_cast<std::size_t>(l);
      if (!cross_terms_deeper(fa, i, j, k))
        continue;
      sys.pairs.push_back({i, j, k, weights[k] - weights[i] - weights[j], v[k]});
    }
  }
  for (const auto &p : sys.pairs)
    sys.vars.t_coords.push_back(p.k);
  std::sort(sys.vars.t_coords.begin(), sys.vars.t_coords.end());
  sys.vars.t_coords.erase(std::unique(sys.vars.t_coords.begin(), sys.vars.t_coords.end()),
                          sys.vars.t_coords.end());

  const std::size_t nv = sys.vars.size();
  auto add = [&](Vector lhs, Rational rhs, Provenance prov) {
    sys.constraints.push_back({std::move(lhs), std::move(rhs), prov});
  };

  if (enabled(ConstraintClass::A))
    for (std::size_t q = 0; q < blocks.size(); ++q) {
      Vector lhs = zero_vector(nv);
      for (std::size_t r = q; r < blocks.size(); ++r)
        lhs[sys.vars.a(r)] = 1;
      Provenance prov{ConstraintClass::A};
      prov.start = q;
      add(lhs, 0, prov);
    }

  for (const auto &p : sys.pairs) {
    std::size_t bi = lay.block_of[p.i], bj = lay.block_of[p.j], bk = lay.block_of[p.k];
    Provenance prov{ConstraintClass::B, p.i, p.j, p.k, p.m};
    if (enabled(ConstraintClass::B) && lay.one_dim(p.k)) {
      Vector lhs = zero_vector(nv);
      lhs[bi] += 1;
      lhs[bj] += 1;
      lhs[bk] -= 1;
      add(lhs, p.m, prov);
    }
    if (enabled(ConstraintClass::C) || enabled(ConstraintClass::Cprime)) {
      Vector lhs = zero_vector(nv);
      lhs[bi] += 1;
      lhs[bj] += 1;
      lhs[sys.vars.t(p.k)] -= 1;
      prov.kind = ConstraintClass::Aux;
      add(lhs, p.m, prov);
    }
  }

  // Suffixes S(p) all of whose coordinates carry a T variable.
  std::size_t covered_from = d;
  while (covered_from > 0 && sys.vars.has_t(covered_from - 1))
    --covered_from;
  for (std::size_t p = covered_from; p < d; ++p) {
    Vector tsum = zero_vector(nv);
    for (std::size_t k = p; k < d; ++k)
      tsum[sys.vars.t(k)] = 1;
    if (enabled(ConstraintClass::C) && lay.is_start(p)) {
      Vector lhs = tsum;
      for (std::size_t q = lay.block_of[p]; q < blocks.size(); ++q)
        lhs[sys.vars.a(q)] = -1;
      Provenance prov{ConstraintClass::C};
      prov.start = p;
      add(lhs, 0, prov);
    }
    if (enabled(ConstraintClass::Cprime)) {
      Provenance prov{ConstraintClass::Cprime};
      prov.start = p;
      add(tsum, 0, prov);
    }
  }

  if (enabled(ConstraintClass::D) && d >= 3 && lay.one_dim(d - 1)) {
    const std::size_t z = d - 1;
    for (std::size_t p : lay.starts)
      for (std::size_t p2 : lay.starts) {
        if (p2 <= p || p2 > z || (p2 - p) % 2 != 0)
          continue;
        bool ok = true;
        for (std::size_t a = p; a < d && ok; ++a)
          for (std::size_t b = p; b < d && ok; ++b) {
            const Vector &v = fa.bracket(a, b);
            for (std::size_t k = 0; k < d && ok; ++k)
              if (sgn(v[k]) != 0 && (k != z || (a >= p2 || b >= p2)))
                ok = false;
          }
        if (!ok)
          continue;
        Matrix w = pairing(fa, p, p2, z);
        if (sgn(determinant(w)) == 0)
          continue;
        std::set<int> ms;
        for (std::size_t a = p; a < p2; ++a)
          for (std::size_t b = p; b < p2; ++b)
            if (sgn(w(a - p, b - p)) != 0)
              ms.insert(weights[z] - weights[a] - weights[b]);
        if (ms.size() != 1)
          continue;
        const int m = *ms.begin();
        const long n = static_cast<long>((p2 - p) / 2);
        Vector lhs = zero_vector(nv);
        for (std::size_t q = lay.block_of[p]; q < lay.block_of[p2]; ++q)
          lhs[sys.vars.a(q)] = 1;
        lhs[sys.vars.a(lay.block_of[z])] = -n;
        Provenance prov{ConstraintClass::D};
        prov.start = p;
        prov.end = p2;
        prov.center = z;
        prov.m = m;
        add(lhs, Rational(n * m), prov);
      }
  }
  return sys;
}

namespace {

bool replay_pair(const LieAlgebra &fa, const Layout &lay, const std::vector<int> &w,
                 std::size_t i, std::size_t j, std::size_t k, int m) {
  const std::size_t d = fa.dim();
  if (i >= d || j >= d || k >= d || i == j || !lay.one_dim(i) || !lay.one_dim(j))
    return false;
  if (m != w[k] - w[i] - w[j] || m < 0)
    return false;
  Vector top = fa.bracket(unit_vector(d, i), unit_vector(d, j));
  if (!Subspace::coordinate_suffix(d, k).contains(top) || sgn(top[k]) == 0)
    return false;
  Subspace cross = fa.bracket(Subspace::coordinate_suffix(d, i + 1),
                              Subspace::coordinate_suffix(d, j)) +
                   fa.bracket(Subspace::coordinate_suffix(d, i),
                              Subspace::coordinate_suffix(d, j + 1));
  return Subspace::coordinate_suffix(d, k + 1).contains(cross);
}

} // namespace

std::ptrdiff_t replay(const LieAlgebra &fa, const ConstraintSystem &sys) {
  const std::size_t d = fa.dim();
  Layout lay(sys.blocks);
  const std::size_t nv = sys.vars.size();
  for (std::size_t c = 0; c < sys.constraints.size(); ++c) {
    const auto &con = sys.constraints[c];
    const auto &p = con.provenance;
    Vector lhs = zero_vector(nv);
    Rational rhs = 0;
    bool ok = true;
    switch (p.kind) {
    case ConstraintClass::A:
      ok = p.start < sys.blocks.size();
      for (std::size_t q = p.start; ok && q < sys.blocks.size(); ++q)
        lhs[q] = 1;
      break;
    case ConstraintClass::B:
    case ConstraintClass::Aux:
      ok = replay_pair(fa, lay, sys.weights, p.i, p.j, p.k, p.m);
      if (!ok)
        break;
      lhs[lay.block_of[p.i]] += 1;
      lhs[lay.block_of[p.j]] += 1;
      if (p.kind == ConstraintClass::B) {
        ok = lay.one_dim(p.k);
        lhs[lay.block_of[p.k]] -= 1;
      } else {
        ok = sys.vars.has_t(p.k);
        if (ok)
          lhs[sys.vars.t(p.k)] -= 1;
      }
      rhs = p.m;
      break;
    case ConstraintClass::C:
    case ConstraintClass::Cprime:
      ok = p.start < d && (p.kind == ConstraintClass::Cprime || lay.is_start(p.start));
      for (std::size_t k = p.start; ok && k < d; ++k) {
        // Each T_k must be bounded by at least one pair that replays.
        ok = sys.vars.has_t(k) &&
             std::any_of(sys.pairs.begin(), sys.pairs.end(), [&](const VerifiedPair &vp) {
               return vp.k == k && replay_pair(fa, lay, sys.weights, vp.i, vp.j, vp.k, vp.m);
             });
        if (ok)
          lhs[sys.vars.t(k)] = 1;
      }
      if (ok && p.kind == ConstraintClass::C)
        for (std::size_t q = lay.block_of[p.start]; q < sys.blocks.size(); ++q)
          lhs[q] = -1;
      break;
    case ConstraintClass::D: {
      const std::size_t z = p.center;
      ok = z == d - 1 && lay.one_dim(z) && lay.is_start(p.start) && lay.is_start(p.end) &&
           p.start < p.end && p.end <= z && (p.end - p.start) % 2 == 0;
      if (!ok)
        break;
      Subspace v = Subspace::coordinate_suffix(d, p.start);
      Subspace v2 = Subspace::coordinate_suffix(d, p.end);
      Subspace center = Subspace::coordinate_suffix(d, z);
      ok = fa.bracket(v, v2).is_zero() && center.contains(fa.bracket(v, v));
      Matrix w = pairing(fa, p.start, p.end, z);
      ok = ok && sgn(determinant(w)) != 0;
      for (std::size_t a = p.start; ok && a < p.end; ++a)
        for (std::size_t b = p.start; ok && b < p.end; ++b)
          if (sgn(w(a - p.start, b - p.start)) != 0)
            ok = p.m == sys.weights[z] - sys.weights[a] - sys.weights[b];
      const long n = static_cast<long>((p.end - p.start) / 2);
      for (std::size_t q = lay.block_of[p.start]; q < lay.block_of[p.end]; ++q)
        lhs[q] = 1;
      lhs[lay.block_of[z]] = -n;
      rhs = n * p.m;
      break;
    }
    }
    if (!ok || lhs != con.lhs || rhs != con.rhs)
      return static_cast<std::ptrdiff_t>(c);
  }
  return -1;
}

} // namespace nilsys
