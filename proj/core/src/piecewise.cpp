#include "lrkit/piecewise.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lrkit/error.hpp"

namespace lrkit {

namespace {

std::string point_text(std::span<const Int> point) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < point.size(); ++i) out << (i ? "," : "") << point[i];
  out << ")";
  return out.str();
}

nlohmann::json rational_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.to_string();
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<Int>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InvalidArgument("expected an integer or a \"p/q\" string");
}

nlohmann::json form_json(const LinearForm& f, const std::vector<std::string>& vars) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!f.coeffs[i].is_zero()) coeffs[vars[i]] = rational_json(f.coeffs[i]);
  }
  return {{"coeffs", coeffs}, {"constant", rational_json(f.constant)}};
}

LinearForm form_from_json(const nlohmann::json& j, const std::vector<std::string>& vars) {
  LinearForm f(vars.size());
  for (const auto& [name, value] : j.at("coeffs").items()) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw InvalidArgument("unknown variable '" + name + "'");
    f.coeffs[static_cast<std::size_t>(it - vars.begin())] = rational_from_json(value);
  }
  f.constant = rational_from_json(j.at("constant"));
  return f;
}

nlohmann::json cone_json(const Cone& c, const std::vector<std::string>& vars) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& f : c.constraints) list.push_back(form_json(f, vars));
  return {{"constraints", list}};
}

Cone cone_from_json(const nlohmann::json& j, const std::vector<std::string>& vars) {
  Cone c;
  for (const auto& f : j.at("constraints")) c.constraints.push_back(form_from_json(f, vars));
  return c;
}

nlohmann::json polynomial_json(const Polynomial& p) {
  nlohmann::json monomials = nlohmann::json::array();
  for (const auto& [e, coeff] : p.terms()) {
    monomials.push_back({{"exponents", e}, {"numerator", coeff.num()}, {"denominator", coeff.den()}});
  }
  return {{"monomials", monomials}};
}

Polynomial polynomial_from_json(const nlohmann::json& j, std::size_t nvars) {
  Polynomial p(nvars);
  for (const auto& m : j.at("monomials")) {
    p.add_term(m.at("exponents").get<std::vector<int>>(),
               Rational(m.at("numerator").get<Int>(), m.at("denominator").get<Int>()));
  }
  return p;
}

std::vector<int> compose(const std::vector<int>& first, const std::vector<int>& then) {
  std::vector<int> out(first.size());
  for (std::size_t j = 0; j < first.size(); ++j) out[j] = then[static_cast<std::size_t>(first[j])];
  return out;
}

}  // namespace

bool Cone::contains(std::span<const Int> point) const {
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const LinearForm& f) { return f.evaluate(point).sign() >= 0; });
}

Cone Cone::permuted(std::span<const int> perm) const {
  Cone out;
  for (const auto& f : constraints) out.constraints.push_back(f.permuted(perm));
  return out;
}

Cone Cone::normalized() const {
  Cone out;
  for (const auto& f : constraints) out.constraints.push_back(f.normalized());
  std::sort(out.constraints.begin(), out.constraints.end());
  out.constraints.erase(std::unique(out.constraints.begin(), out.constraints.end()), out.constraints.end());
  return out;
}

QuasiPolynomial QuasiPolynomial::plain(Polynomial p) {
  QuasiPolynomial q;
  q.selector = LinearForm(p.nvars());
  q.branches.push_back(std::move(p));
  return q;
}

std::size_t QuasiPolynomial::branch_index(std::span<const Int> point) const {
  if (modulus == 1) return 0;
  Rational s = selector.evaluate(point);
  if (!s.is_integer()) throw DataIntegrityError("selector is not integral at " + point_text(point));
  Int r = s.num() % modulus;
  if (r < 0) r += modulus;
  return static_cast<std::size_t>(r);
}

Rational QuasiPolynomial::evaluate(std::span<const Int> point) const {
  if (modulus < 1 || branches.size() != static_cast<std::size_t>(modulus)) {
    throw DataIntegrityError("quasi-polynomial branch count does not match its modulus");
  }
  return branches[branch_index(point)].evaluate(point);
}

QuasiPolynomial QuasiPolynomial::permuted(std::span<const int> perm) const {
  QuasiPolynomial out;
  out.modulus = modulus;
  out.selector = selector.permuted(perm);
  for (const auto& b : branches) out.branches.push_back(b.permuted(perm));
  return out;
}

Rational eval_piece(const Piece& piece, std::span<const Int> point) {
  if (!piece.cone.contains(point)) {
    throw InvalidArgument("point " + point_text(point) + " is outside cone " + piece.label);
  }
  return piece.function.evaluate(point);
}

Evaluation eval_piecewise(const PiecewiseFunction& f, std::span<const Int> point) {
  if (point.size() != f.variables.size()) throw InvalidArgument("point has the wrong number of coordinates");
  Evaluation result;
  if (!f.support.contains(point)) return result;
  std::optional<Rational> value;
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    const Piece& piece = f.pieces[i];
    if (!piece.cone.contains(point)) continue;
    Rational v = piece.function.evaluate(point);
    if (!value) {
      value = v;
      result.piece = i;
    } else if (*value != v) {
      throw DataIntegrityError("pieces " + f.pieces[*result.piece].label + " and " + piece.label +
                               " disagree at " + point_text(point) + ": " + value->to_string() + " vs " +
                               v.to_string());
    }
  }
  if (!value) throw DataIntegrityError("point " + point_text(point) + " of the support lies in no piece");
  if (!value->is_integer() || value->sign() < 0) {
    throw DataIntegrityError("piece " + f.pieces[*result.piece].label + " gives " + value->to_string() + " at " +
                             point_text(point));
  }
  result.value = value->num();
  return result;
}

std::vector<GroupElement> permutation_group(const std::vector<GroupElement>& generators) {
  if (generators.empty()) throw InvalidArgument("empty generator list");
  const std::size_t n = generators.front().perm.size();
  std::vector<int> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = static_cast<int>(i);
  std::vector<GroupElement> group{{"e", identity}};
  std::set<std::vector<int>> seen{identity};
  for (std::size_t next = 0; next < group.size(); ++next) {
    for (const auto& g : generators) {
      if (g.perm.size() != n) throw InvalidArgument("generators act on different variable counts");
      auto perm = compose(group[next].perm, g.perm);
      if (seen.insert(perm).second) {
        group.push_back({group[next].word == "e" ? g.word : group[next].word + g.word, perm});
      }
    }
  }
  return group;
}

OrbitExpansion orbit_expand(const std::vector<Piece>& representatives, const std::vector<GroupElement>& group) {
  OrbitExpansion out;
  std::map<std::pair<Cone, QuasiPolynomial>, std::string> seen;
  for (const auto& rep : representatives) {
    std::size_t size = 0;
    for (const auto& g : group) {
      Piece image{g.word == "e" ? rep.label : rep.label + "." + g.word, rep.cone.permuted(g.perm).normalized(),
                  rep.function.permuted(g.perm)};
      auto [it, inserted] = seen.try_emplace({image.cone, image.function}, rep.label);
      if (!inserted) {
        if (it->second != rep.label) {
          throw DataIntegrityError("representatives " + it->second + " and " + rep.label + " share an orbit");
        }
        continue;
      }
      out.pieces.push_back(std::move(image));
      ++size;
    }
    out.orbit_sizes.push_back(size);
  }
  return out;
}

nlohmann::json to_json(const PiecewiseFunction& f) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& p : f.pieces) {
    nlohmann::json branches = nlohmann::json::array();
    for (const auto& b : p.function.branches) branches.push_back(polynomial_json(b));
    pieces.push_back({{"label", p.label},
                      {"cone", cone_json(p.cone, f.variables)},
                      {"modulus", p.function.modulus},
                      {"selector", form_json(p.function.selector, f.variables)},
                      {"branches", branches}});
  }
  return {{"variables", f.variables}, {"support", cone_json(f.support, f.variables)}, {"pieces", pieces}};
}

PiecewiseFunction piecewise_from_json(const nlohmann::json& j) {
  PiecewiseFunction f;
  f.variables = j.at("variables").get<std::vector<std::string>>();
  f.support = cone_from_json(j.at("support"), f.variables);
  for (const auto& p : j.at("pieces")) {
    Piece piece;
    piece.label = p.value("label", "");
    piece.cone = cone_from_json(p.at("cone"), f.variables);
    piece.function.modulus = p.at("modulus").get<Int>();
    piece.function.selector = form_from_json(p.at("selector"), f.variables);
    for (const auto& b : p.at("branches")) piece.function.branches.push_back(polynomial_from_json(b, f.variables.size()));
    if (piece.function.modulus < 1 || piece.function.branches.size() != static_cast<std::size_t>(piece.function.modulus)) {
      throw InvalidArgument("piece '" + piece.label + "' has a modulus that does not match its branches");
    }
    f.pieces.push_back(std::move(piece));
  }
  return f;
}

}  // namespace lrkit
