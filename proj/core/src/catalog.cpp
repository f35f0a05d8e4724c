#include "nilsys/catalog.hpp"
#include "nilsys/error.hpp"

#include <array>
#include <sstream>

namespace nilsys::catalog {

namespace {

long param(const Params &p, const std::string &key, long lo, long hi) {
  auto it = p.find(key);
  if (it == p.end())
    throw BadParams("missing parameter '" + key + "'");
  if (it->second < lo || it->second > hi)
    throw BadParams("parameter " + key + "=" + std::to_string(it->second) + " outside [" +
                    std::to_string(lo) + "," + std::to_string(hi) + "]");
  return it->second;
}

void expect_keys(const Params &p, std::initializer_list<const char *> keys) {
  for (const auto &[k, v] : p) {
    bool known = false;
    for (const char *key : keys)
      known = known || k == key;
    if (!known)
      throw BadParams("unexpected parameter '" + k + "'");
  }
}

// Brackets given 1-based as (i, j, k, coef).
LieAlgebra from_list(std::size_t d, const std::vector<std::array<long, 4>> &list,
                     const std::string &name) {
  StructureConstants c;
  for (auto [i, j, k, q] : list) {
    auto &v = c[{static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)}];
    if (v.empty())
      v = zero_vector(d);
    v[static_cast<std::size_t>(k - 1)] += q;
  }
  return LieAlgebra::validate(d, c, name);
}

// Σ_{i=1}^{⌈c/2⌉-1} (c/2 - i) layer_i, layers listed from g/g^2 down.
Rational kc_from_layers(const std::vector<long> &layers) {
  const long c = static_cast<long>(layers.size());
  Rational total = 0;
  for (long i = 1; i <= (c + 1) / 2 - 1; ++i)
    total += (Rational(c) / 2 - i) * layers[static_cast<std::size_t>(i - 1)];
  return total;
}

std::size_t d_from_layers(const std::vector<long> &layers) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < layers.size(); ++i)
    total += (i + 1) * static_cast<std::size_t>(layers[i]);
  return total;
}

Expected from_layers(const std::vector<long> &layers, Rational h, std::string note = {}) {
  long d = 0;
  for (long l : layers)
    d += l;
  Expected e;
  e.D = d_from_layers(layers);
  e.c = layers.size();
  e.k_c = kc_from_layers(layers);
  e.h = std::move(h);
  e.residual_girth = Rational(static_cast<long>(e.c) * d);
  e.note = std::move(note);
  return e;
}

} // namespace

LieAlgebra build(const std::string &name, const Params &p) {
  if (name == "heisenberg") {
    expect_keys(p, {"n"});
    long n = param(p, "n", 1, 6);
    std::vector<std::array<long, 4>> list;
    for (long i = 0; i < n; ++i)
      list.push_back({2 * i + 1, 2 * i + 2, 2 * n + 1, 1});
    return from_list(static_cast<std::size_t>(2 * n + 1), list, label(name, p));
  }
  if (name == "l55") {
    expect_keys(p, {});
    return from_list(5, {{1, 2, 4, 1}, {1, 4, 5, 1}, {2, 3, 5, 1}}, name);
  }
  if (name == "l56") {
    expect_keys(p, {});
    return from_list(5, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {2, 3, 5, 1}}, name);
  }
  if (name == "filiform7") {
    expect_keys(p, {});
    return from_list(7,
                     {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {1, 5, 6, 1}, {1, 6, 7, 1},
                      {2, 3, 5, 1}, {2, 4, 6, 1}, {3, 4, 7, 1}},
                     name);
  }
  if (name == "witt") {
    expect_keys(p, {"n"});
    long n = param(p, "n", 4, 12);
    std::vector<std::array<long, 4>> list;
    for (long i = 1; i <= n; ++i)
      for (long j = i + 1; i + j <= n; ++j)
        list.push_back({i, j, i + j, i - j});
    return from_list(static_cast<std::size_t>(n), list, label(name, p));
  }
  if (name == "central_product") {
    expect_keys(p, {"k", "n"});
    long k = param(p, "k", 3, 12);
    long n = param(p, "n", 1, 5);
    if (k + 2 * n > 14)
      throw BadParams("central_product needs k + 2n <= 14");
    // Basis U1, X1, Y1, ..., Xn, Yn, U2, ..., Uk.
    auto u = [&](long i) { return i == 1 ? 1 : 2 * n + i; };
    std::vector<std::array<long, 4>> list;
    for (long i = 2; i < k; ++i)
      list.push_back({u(1), u(i), u(i + 1), 1});
    for (long i = 0; i < n; ++i)
      list.push_back({2 + 2 * i, 3 + 2 * i, u(k), 1});
    return from_list(static_cast<std::size_t>(k + 2 * n), list, label(name, p));
  }
  throw UnknownName(name);
}

Expected expected(const std::string &name, const Params &p) {
  build(name, p);  // parameter validation
  if (name == "heisenberg") {
    long n = p.at("n");
    return from_layers({2 * n, 1}, 0);
  }
  if (name == "l55")
    return from_layers({3, 1, 1}, 1);
  if (name == "l56")
    return from_layers({2, 1, 1, 1}, 1);
  if (name == "filiform7")
    return from_layers({2, 1, 1, 1, 1, 1}, Rational(3, 2));
  if (name == "witt") {
    long n = p.at("n");
    std::vector<long> layers{2};
    for (long i = 3; i <= n; ++i)
      layers.push_back(1);
    return from_layers(layers, (n - 4 + 1) / 2, n == 5 ? "isomorphic to l56" : "");
  }
  long k = p.at("k"), n = p.at("n");
  std::vector<long> layers{2 + 2 * n};
  for (long i = 3; i <= k; ++i)
    layers.push_back(1);
  return from_layers(layers, n * (k - 3), k == 4 ? "the algebra g(2n+4)" : "");
}

std::vector<Info> list() {
  return {
      {"heisenberg", "n=1..6", "[X_i,Y_i]=Z; Carnot, two-step"},
      {"l55", "", "5-dim, [e1,e2]=e4, [e1,e4]=e5, [e2,e3]=e5; non-Carnot"},
      {"l56", "", "5-dim filiform, [e1,e2]=e3, [e1,e3]=e4, [e1,e4]=e5, [e2,e3]=e5"},
      {"filiform7", "", "7-dim filiform 12|3 13|4 14|5 15|6 16|7 23|5 24|6 34|7"},
      {"witt", "n=4..12", "truncated positive Witt algebra, [e_i,e_j]=(i-j)e_{i+j}"},
      {"central_product", "k=3..12, n=1..5, k+2n<=14",
       "filiform chain [U1,U_i]=U_{i+1} centrally amalgamated with a Heisenberg "
       "algebra over U_k"},
  };
}

std::string label(const std::string &name, const Params &params) {
  if (params.empty())
    return name;
  std::string out = name + "(";
  bool first = true;
  for (const auto &[k, v] : params) {
    if (!first)
      out += ",";
    out += k + "=" + std::to_string(v);
    first = false;
  }
  return out + ")";
}

Params parse_params(const std::string &text) {
  Params out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty())
      continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw BadParams("expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(val, &pos);
    } catch (const std::exception &) {
      pos = 0;
    }
    if (pos == 0 || pos != val.size())
      throw BadParams("parameter " + key + " needs an integer value");
    out[key] = v;
  }
  return out;
}

std::vector<Instance> reproduction_set() {
  std::vector<Instance> out;
  for (long n = 1; n <= 3; ++n)
    out.push_back({"heisenberg", {{"n", n}}});
  out.push_back({"l55", {}});
  out.push_back({"l56", {}});
  out.push_back({"filiform7", {}});
  for (long n = 4; n <= 12; ++n)
    out.push_back({"witt", {{"n", n}}});
  for (long n = 1; n <= 5; ++n)
    out.push_back({"central_product", {{"k", 4}, {"n", n}}});
  out.push_back({"central_product", {{"k", 5}, {"n", 1}}});
  out.push_back({"central_product", {{"k", 5}, {"n", 2}}});
  out.push_back({"central_product", {{"k", 6}, {"n", 1}}});
  return out;
}

} // namespace nilsys::catalog
