#include "dlab/bottsamelson.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "dlab/errors.hpp"

namespace dlab {

BSModule::BSModule(const Expression& expr, std::size_t max_length) {
  if (expr.size() > max_length)
    throw resource_limit_error("Bott-Samelson module of length " +
                               std::to_string(expr.size()) + " exceeds the cap " +
                               std::to_string(max_length));
  auto impl = std::make_shared<Impl>(Impl{expr, PolyRing(expr.system())});
  impl_ = std::move(impl);
}

const Expression& BSModule::expression() const { return impl_->expr; }
const PolyRing& BSModule::ring() const { return impl_->ring; }
std::size_t BSModule::length() const { return impl_->expr.size(); }

LaurentPoly BSModule::graded_rank() const {
  LaurentPoly r(1);
  LaurentPoly factor = LaurentPoly::v(1) + LaurentPoly::v(-1);
  for (std::size_t i = 0; i < length(); ++i) r *= factor;
  return r;
}

int BSModule::label_degree(std::uint32_t label) const {
  return 2 * std::popcount(label) - static_cast<int>(length());
}

BSElement BSModule::zero() const { return BSElement(impl_); }

BSElement BSModule::bottom() const { return basis(0); }

BSElement BSModule::basis(std::uint32_t label) const {
  if (length() < 32 && (label >> length()) != 0)
    throw std::invalid_argument("basis label out of range");
  BSElement e(impl_);
  e.coords_.emplace(label, impl_->ring.one());
  return e;
}

const Poly& BSElement::coord(std::uint32_t label) const {
  static const Poly kZero;
  auto it = coords_.find(label);
  return it == coords_.end() ? kZero : it->second;
}

void BSElement::add_coord(std::uint32_t label, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(label, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

std::optional<int> BSElement::degree() const {
  if (is_zero() || !impl_) return std::nullopt;
  std::optional<int> deg;
  int m = static_cast<int>(impl_->expr.size());
  for (const auto& [label, p] : coords_) {
    auto pd = p.homogeneous_degree();
    if (!pd) return std::nullopt;
    int d = *pd + 2 * std::popcount(label) - m;
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

BSElement& BSElement::operator+=(const BSElement& o) {
  if (!impl_) impl_ = o.impl_;
  for (const auto& [label, p] : o.coords_) add_coord(label, p);
  return *this;
}

BSElement& BSElement::operator-=(const BSElement& o) {
  if (!impl_) impl_ = o.impl_;
  for (const auto& [label, p] : o.coords_) add_coord(label, -p);
  return *this;
}

BSElement BSElement::right_mul(const Poly& f) const {
  BSElement r(impl_);
  for (const auto& [label, p] : coords_) r.add_coord(label, p * f);
  return r;
}

std::string BSElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  std::size_t m = impl_ ? impl_->expr.size() : 0;
  bool first = true;
  for (const auto& [label, p] : coords_) {
    if (!first) out << '\n';
    first = false;
    std::string bits(m, '0');
    for (std::size_t i = 0; i < m; ++i)
      if (label & (1u << i)) bits[i] = '1';
    out << bits << ": " << p.to_string();
  }
  return out.str();
}

namespace {

// Push f into slots i.. of the basis vector with slot bits `label`,
// accumulating the branch labels chosen so far in `acc`.
void left_act_rec(const Expression& expr, const PolyRing& ring, std::size_t i,
                  std::uint32_t label, std::uint32_t acc, const Poly& f,
                  std::map<std::uint32_t, Poly>& out) {
  if (f.is_zero()) return;
  if (i == expr.size()) {
    out[acc] += f;
    return;
  }
  int s = expr.letter(i);
  Poly p = f;
  if ((label >> i) & 1u) p *= ring.delta(s);
  Poly p1 = ring.demazure(s, p);
  Poly p0 = p - ring.delta(s) * p1;
  left_act_rec(expr, ring, i + 1, label, acc, p0, out);
  left_act_rec(expr, ring, i + 1, label, acc | (1u << i), p1, out);
}

}  // namespace

BSElement BSModule::left_act(const Poly& f, const BSElement& elt) const {
  if (!elt.is_zero() && elt.impl_ && elt.impl_->expr.to_string() != impl_->expr.to_string())
    throw std::invalid_argument("left_act: element from a different module");
  BSElement out = zero();
  for (const auto& [label, coordinate] : elt.coords_) {
    std::map<std::uint32_t, Poly> pushed;
    left_act_rec(impl_->expr, impl_->ring, 0, label, 0, f, pushed);
    for (const auto& [acc, p] : pushed) out.add_coord(acc, p * coordinate);
  }
  return out;
}

Poly BSModule::multiply_out(const BSElement& elt) const {
  Poly out = impl_->ring.zero();
  for (const auto& [label, coordinate] : elt.coords_) {
    Poly term = coordinate;
    for (std::size_t i = 0; i < length(); ++i)
      if ((label >> i) & 1u) term *= impl_->ring.delta(impl_->expr.letter(i));
    out += term;
  }
  return out;
}

bool BSModule::operator==(const BSModule& o) const {
  return impl_ == o.impl_ ||
         (impl_->expr.to_string() == o.impl_->expr.to_string() &&
          impl_->ring == o.impl_->ring);
}

int cll_degree(const Expression& ybar, std::uint32_t bits) {
  DecoratedSubexpr d = decorate(ybar, bits);
  int total = 0;
  for (Step st : d.steps) {
    switch (st) {
      case Step::U0: total += 1; break;  // multiplication map, degree +1
      case Step::D0: total -= 1; break;  // through map, degree -1
      case Step::U1: break;              // extension map, degree 0
      case Step::D1: break;              // down-up composite, degree 0
    }
  }
  if (total != d.defect)
    throw std::logic_error("cll_degree: stepwise degree disagrees with the defect");
  return total;
}

}  // namespace dlab
