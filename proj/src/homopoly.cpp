#include "prm/homopoly.hpp"

#include <numeric>
#include <string>

#include "prm/error.hpp"

namespace prm {

HomPoly::HomPoly(Field field, std::size_t nvars, std::uint32_t degree)
    : field_(std::move(field)), nvars_(nvars), degree_(degree) {
  if (nvars == 0) {
    throw Error(Errc::ArityMismatch, "polynomial needs at least one variable");
  }
}

HomPoly HomPoly::linear(Field field, const Vec& coeffs) {
  HomPoly f(std::move(field), coeffs.size(), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    f.add_term(e, coeffs[i]);
  }
  return f;
}

HomPoly HomPoly::monomial(Field field, Exponents exps, Elem coeff) {
  const auto degree = std::accumulate(exps.begin(), exps.end(), 0u);
  HomPoly f(std::move(field), exps.size(), degree);
  f.add_term(exps, coeff);
  return f;
}

void HomPoly::add_term(const Exponents& exps, Elem coeff) {
  if (exps.size() != nvars_) {
    throw Error(Errc::ArityMismatch,
                "exponent vector has " + std::to_string(exps.size()) +
                    " entries, expected " + std::to_string(nvars_));
  }
  const auto sum = std::accumulate(exps.begin(), exps.end(), 0ull);
  if (sum != degree_) {
    throw Error(Errc::DegreeMismatch,
                "term of degree " + std::to_string(sum) +
                    " in a polynomial of degree " + std::to_string(degree_));
  }
  if (!field_.contains(coeff)) {
    throw Error(Errc::InvalidArgument, "coefficient is not a field element");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second = field_.add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

Elem HomPoly::coefficient(const Exponents& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Elem{0} : it->second;
}

Elem HomPoly::evaluate(std::span<const Elem> x) const {
  if (x.size() != nvars_) {
    throw Error(Errc::ArityMismatch,
                "point has " + std::to_string(x.size()) +
                    " coordinates, polynomial has " + std::to_string(nvars_) +
                    " variables");
  }
  Elem sum = 0;
  for (const auto& [exps, coeff] : terms_) {
    Elem term = coeff;
    for (std::size_t i = 0; i < nvars_ && term != 0; ++i) {
      if (exps[i] != 0) term = field_.mul(term, field_.pow(x[i], exps[i]));
    }
    sum = field_.add(sum, term);
  }
  return sum;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
  if (a.nvars_ != b.nvars_ || !(a.field_ == b.field_)) {
    throw Error(Errc::ArityMismatch, "polynomials over different rings");
  }
  HomPoly out(a.field_, a.nvars_, a.degree_ + b.degree_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, a.field_.mul(ca, cb));
    }
  }
  return out;
}

HomPoly operator+(const HomPoly& a, const HomPoly& b) {
  if (a.nvars_ != b.nvars_ || !(a.field_ == b.field_)) {
    throw Error(Errc::ArityMismatch, "polynomials over different rings");
  }
  if (a.degree_ != b.degree_) {
    throw Error(Errc::DegreeMismatch, "sum of polynomials of unequal degree");
  }
  HomPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

std::vector<ProjPoint> zero_set(const HomPoly& f, const ProjSpace& space) {
  std::vector<ProjPoint> out;
  for (auto& p : space.points()) {
    if (f.evaluate(p) == 0) out.push_back(std::move(p));
  }
  return out;
}

std::vector<ProjPoint> nonvanishing_set(const HomPoly& f,
                                        const ProjSpace& space) {
  std::vector<ProjPoint> out;
  for (auto& p : space.points()) {
    if (f.evaluate(p) != 0) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace prm
