#include "nilsys/algebra_io.hpp"
#include "nilsys/error.hpp"

#include <fstream>
#include <sstream>

namespace nilsys {

namespace {

std::string strip_comment(const std::string &line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::size_t parse_index(const std::string &tok, std::size_t line) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception &) {
    throw ParseError(line, "expected an index, got '" + tok + "'");
  }
  if (pos != tok.size() || v < 1)
    throw ParseError(line, "expected a positive index, got '" + tok + "'");
  return static_cast<std::size_t>(v);
}

Rational parse_coef(const std::string &tok, std::size_t line) {
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument &e) {
    throw ParseError(line, e.what());
  }
}

} // namespace

LieAlgebra parse_algebra(std::istream &in) {
  std::size_t dim = 0;
  std::string name;
  struct Raw {
    std::size_t i, j, line;
    std::vector<std::pair<Rational, std::size_t>> terms;
  };
  std::vector<Raw> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(strip_comment(line));
    std::vector<std::string> tok;
    for (std::string t; ss >> t;)
      tok.push_back(t);
    if (tok.empty())
      continue;
    if (tok[0] == "dim") {
      if (tok.size() != 2)
        throw ParseError(lineno, "expected 'dim <d>'");
      if (dim != 0)
        throw ParseError(lineno, "dimension given twice");
      dim = parse_index(tok[1], lineno);
    } else if (tok[0] == "name") {
      if (tok.size() != 2)
        throw ParseError(lineno, "expected 'name <label>'");
      name = tok[1];
    } else if (tok[0] == "bracket") {
      if (tok.size() < 5 || tok[3] != "=")
        throw ParseError(lineno, "expected 'bracket <i> <j> = <q>*<k> ...'");
      Raw r{parse_index(tok[1], lineno), parse_index(tok[2], lineno), lineno, {}};
      int sign = 1;
      bool expect_term = true;
      for (std::size_t t = 4; t < tok.size(); ++t) {
        const std::string &s = tok[t];
        if (!expect_term) {
          if (s != "+" && s != "-")
            throw ParseError(lineno, "expected '+' or '-', got '" + s + "'");
          sign = s == "+" ? 1 : -1;
          expect_term = true;
          continue;
        }
        if (s == "0" && tok.size() == 5) {
          expect_term = false;
          continue;
        }
        auto star = s.find('*');
        Rational q = 1;
        std::string idx = s;
        if (star != std::string::npos) {
          q = parse_coef(s.substr(0, star), lineno);
          idx = s.substr(star + 1);
        }
        r.terms.emplace_back(Rational(q * sign), parse_index(idx, lineno));
        sign = 1;
        expect_term = false;
      }
      if (expect_term)
        throw ParseError(lineno, "dangling operator");
      raw.push_back(std::move(r));
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  if (dim == 0)
    throw ParseError(lineno, "missing 'dim' line");

  StructureConstants c;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (const auto &r : raw) {
    if (r.i >= r.j)
      throw ParseError(r.line, "only brackets with i < j are accepted");
    if (r.j > dim)
      throw ParseError(r.line, "index exceeds dimension");
    auto key = std::make_pair(r.i - 1, r.j - 1);
    if (seen.count(key))
      throw ParseError(r.line, "duplicate bracket (" + std::to_string(r.i) + "," +
                                   std::to_string(r.j) + "), first given on line " +
                                   std::to_string(seen[key]));
    seen[key] = r.line;
    Vector v = zero_vector(dim);
    for (const auto &[q, k] : r.terms) {
      if (k > dim)
        throw ParseError(r.line, "target index exceeds dimension");
      v[k - 1] += q;
    }
    if (!is_zero(v))
      c[key] = v;
  }
  return LieAlgebra::validate(dim, c, name);
}

LieAlgebra parse_algebra_string(const std::string &text) {
  std::istringstream in(text);
  return parse_algebra(in);
}

LieAlgebra read_algebra_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(0, "cannot open " + path);
  return parse_algebra(in);
}

std::string format_algebra(const LieAlgebra &a) {
  std::ostringstream out;
  out << "dim " << a.dim() << "\n";
  if (!a.name().empty())
    out << "name " << a.name() << "\n";
  for (const auto &[ij, v] : a.constants()) {
    out << "bracket " << ij.first + 1 << " " << ij.second + 1 << " =";
    bool first = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (sgn(v[k]) == 0)
        continue;
      if (first)
        out << " " << to_string(v[k]);
      else
        out << (sgn(v[k]) > 0 ? " + " : " - ") << to_string(Rational(abs(v[k])));
      out << "*" << k + 1;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

std::vector<Vector> parse_lattice(std::istream &in, std::size_t dim) {
  std::vector<Vector> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(strip_comment(line));
    Vector v;
    for (std::string t; ss >> t;)
      v.push_back(parse_coef(t, lineno));
    if (v.empty())
      continue;
    if (v.size() != dim)
      throw ParseError(lineno, "expected " + std::to_string(dim) + " entries, got " +
                                   std::to_string(v.size()));
    rows.push_back(std::move(v));
  }
  return rows;
}

std::vector<Vector> read_lattice_file(const std::string &path, std::size_t dim) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(0, "cannot open " + path);
  return parse_lattice(in, dim);
}

} // namespace nilsys
