#include "nilsys/solid.hpp"

#include <algorithm>

namespace nilsys {

std::string to_string(SolidRule rule) {
  switch (rule) {
  case SolidRule::Zero: return "zero";
  case SolidRule::Whole: return "whole";
  case SolidRule::LowerCentral: return "lower-central";
  case SolidRule::UpperCentral: return "upper-central";
  case SolidRule::Bracket: return "bracket";
  case SolidRule::Centralizer: return "centralizer";
  case SolidRule::Sum: return "sum";
  case SolidRule::Intersection: return "intersection";
  }
  return "?";
}

std::ptrdiff_t SolidClosure::find(const Subspace &s) const {
  for (std::size_t i = 0; i < ideals.size(); ++i)
    if (ideals[i].space == s)
      return static_cast<std::ptrdiff_t>(i);
  return -1;
}

namespace {

Subspace apply(const LieAlgebra &a, SolidRule rule, const Subspace &x, const Subspace &y) {
  switch (rule) {
  case SolidRule::Bracket: return a.bracket(x, y);
  case SolidRule::Centralizer: return centralizer(a, x, y);
  case SolidRule::Sum: return x + y;
  case SolidRule::Intersection: return x.intersect(y);
  default: break;
  }
  return x;
}

} // namespace

SolidClosure solid_closure(const LieAlgebra &a, std::size_t cap) {
  const std::size_t d = a.dim();
  SolidClosure out;
  auto add = [&](SolidIdeal ideal) {
    if (out.find(ideal.space) >= 0)
      return;
    if (out.ideals.size() >= cap) {
      out.capped = true;
      return;
    }
    out.ideals.push_back(std::move(ideal));
  };
  add({Subspace::zero(d), SolidRule::Zero, 0, {}});
  add({Subspace::full(d), SolidRule::Whole, 0, {}});
  auto lcs = lower_central_series(a);
  for (std::size_t i = 0; i < lcs.size(); ++i)
    add({lcs[i], SolidRule::LowerCentral, i + 1, {}});
  auto ucs = upper_central_series(a);
  for (std::size_t i = 0; i < ucs.size(); ++i)
    add({ucs[i], SolidRule::UpperCentral, i + 1, {}});

  // Pairs (x, y) with y < n are processed once n covers both.
  std::size_t done = 0;
  while (done < out.ideals.size() && !out.capped) {
    std::size_t n = out.ideals.size();
    for (std::size_t x = 0; x < n && !out.capped; ++x)
      for (std::size_t y = (x < done ? done : 0); y < n && !out.capped; ++y) {
        const Subspace sx = out.ideals[x].space;
        const Subspace sy = out.ideals[y].space;
        for (auto rule : {SolidRule::Centralizer, SolidRule::Bracket, SolidRule::Sum,
                          SolidRule::Intersection}) {
          bool symmetric = rule != SolidRule::Centralizer;
          if (symmetric && y < x)
            continue;
          add({apply(a, rule, sx, sy), rule, 0, {x, y}});
        }
      }
    done = n;
  }
  return out;
}

bool replay(const LieAlgebra &a, const SolidClosure &closure) {
  const std::size_t d = a.dim();
  auto lcs = lower_central_series(a);
  auto ucs = upper_central_series(a);
  for (std::size_t i = 0; i < closure.ideals.size(); ++i) {
    const auto &ideal = closure.ideals[i];
    Subspace expect(d);
    switch (ideal.rule) {
    case SolidRule::Zero: break;
    case SolidRule::Whole: expect = Subspace::full(d); break;
    case SolidRule::LowerCentral:
      if (ideal.index == 0 || ideal.index > lcs.size())
        return false;
      expect = lcs[ideal.index - 1];
      break;
    case SolidRule::UpperCentral:
      if (ideal.index == 0 || ideal.index > ucs.size())
        return false;
      expect = ucs[ideal.index - 1];
      break;
    default:
      if (ideal.parents.size() != 2 || ideal.parents[0] >= i || ideal.parents[1] >= i)
        return false;
      expect = apply(a, ideal.rule, closure.ideals[ideal.parents[0]].space,
                     closure.ideals[ideal.parents[1]].space);
    }
    if (!(expect == ideal.space) || !a.is_ideal(ideal.space))
      return false;
  }
  return true;
}

namespace {

SolidFlag make_flag(std::vector<std::size_t> indices, SolidClosure closure) {
  SolidFlag f;
  for (auto idx : indices) {
    f.chain.push_back(closure.ideals[idx].space);
    f.certificates.push_back(idx);
  }
  for (std::size_t j = 0; j + 1 < f.chain.size(); ++j)
    f.blocks.push_back(f.chain[j].dim() - f.chain[j + 1].dim());
  f.closure = std::move(closure);
  return f;
}

} // namespace

std::vector<SolidFlag> solid_flags(const LieAlgebra &a, std::size_t limit) {
  SolidClosure closure = solid_closure(a);
  auto lcs = lower_central_series(a);
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < closure.ideals.size(); ++i) {
    const Subspace &s = closure.ideals[i].space;
    bool ok = std::all_of(lcs.begin(), lcs.end(), [&](const Subspace &t) {
      return s.contains(t) || t.contains(s);
    });
    if (ok)
      cand.push_back(i);
  }
  // Longest chain from 0 upward; ties favour coordinate-suffix ideals, then
  // discovery order.
  std::stable_sort(cand.begin(), cand.end(), [&](std::size_t x, std::size_t y) {
    return closure.ideals[x].space.dim() < closure.ideals[y].space.dim();
  });
  const std::size_t n = cand.size();
  std::vector<std::size_t> length(n, 0), suffixes(n, 0);
  std::vector<std::ptrdiff_t> prev(n, -1);
  for (std::size_t u = 0; u < n; ++u) {
    const Subspace &su = closure.ideals[cand[u]].space;
    std::size_t own = su.is_coordinate_suffix() ? 1 : 0;
    length[u] = 1;
    suffixes[u] = own;
    for (std::size_t v = 0; v < u; ++v) {
      const Subspace &sv = closure.ideals[cand[v]].space;
      if (sv.dim() >= su.dim() || !su.contains(sv))
        continue;
      std::size_t len = length[v] + 1, suf = suffixes[v] + own;
      bool better = len > length[u] || (len == length[u] && suf > suffixes[u]) ||
                    (len == length[u] && suf == suffixes[u] && prev[u] >= 0 &&
                     cand[v] < cand[static_cast<std::size_t>(prev[u])]);
      if (better) {
        length[u] = len;
        suffixes[u] = suf;
        prev[u] = static_cast<std::ptrdiff_t>(v);
      }
    }
  }
  std::size_t top = 0;
  for (std::size_t u = 0; u < n; ++u)
    if (closure.ideals[cand[u]].space.is_full())
      top = u;
  // Every longest chain, preferred predecessor first so the first chain
  // listed is the tie-break winner.
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> path;
  auto walk = [&](auto &&self, std::size_t u) -> void {
    if (chains.size() >= limit)
      return;
    path.push_back(cand[u]);
    if (length[u] == 1) {
      chains.push_back(path);
    } else {
      const Subspace &su = closure.ideals[cand[u]].space;
      std::vector<std::size_t> preds;
      for (std::size_t v = 0; v < u; ++v) {
        const Subspace &sv = closure.ideals[cand[v]].space;
        if (length[v] + 1 == length[u] && sv.dim() < su.dim() && su.contains(sv))
          preds.push_back(v);
      }
      std::stable_sort(preds.begin(), preds.end(), [&](std::size_t x, std::size_t y) {
        bool px = static_cast<std::ptrdiff_t>(x) == prev[u];
        bool py = static_cast<std::ptrdiff_t>(y) == prev[u];
        if (px != py)
          return px;
        if (suffixes[x] != suffixes[y])
          return suffixes[x] > suffixes[y];
        return cand[x] < cand[y];
      });
      for (auto v : preds)
        self(self, v);
    }
    path.pop_back();
  };
  walk(walk, top);
  std::vector<SolidFlag> out;
  for (const auto &c : chains)
    out.push_back(make_flag(c, closure));
  return out;
}

SolidFlag solid_flag(const LieAlgebra &a) { return solid_flags(a, 1).front(); }

SolidFlag lcs_flag(const LieAlgebra &a) {
  SolidClosure seeds;
  auto lcs = lower_central_series(a);
  std::vector<std::size_t> chain;
  for (std::size_t i = 0; i < lcs.size(); ++i) {
    seeds.ideals.push_back({lcs[i], SolidRule::LowerCentral, i + 1, {}});
    chain.push_back(i);
  }
  return make_flag(chain, std::move(seeds));
}

} // namespace nilsys
