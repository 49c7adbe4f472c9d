#include "dlab/polyring.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dlab {

bool Poly::GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned ta = std::accumulate(a.begin(), a.end(), 0u);
  unsigned tb = std::accumulate(b.begin(), b.end(), 0u);
  if (ta != tb) return ta < tb;
  return a < b;
}

PolyRing::PolyRing(const CoxeterSystem& sys) {
  if (!sys.is_crystallographic())
    throw std::invalid_argument(
        "polynomial realisation requires a crystallographic system (got " +
        sys.descriptor() + ")");
  auto impl = std::make_shared<Impl>();
  impl->rank = sys.rank();
  impl->cartan.resize(static_cast<std::size_t>(sys.rank()) * sys.rank());
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = 0; j < sys.rank(); ++j)
      impl->cartan[i * sys.rank() + j] = sys.cartan(i, j);
  impl_ = std::move(impl);
}

PolyRing::PolyRing(int rank, std::vector<int> cartan) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (cartan.size() != static_cast<std::size_t>(rank) * rank)
    throw std::invalid_argument("Cartan matrix size does not match rank");
  auto impl = std::make_shared<Impl>();
  impl->rank = rank;
  impl->cartan = std::move(cartan);
  impl_ = std::move(impl);
}

int PolyRing::rank() const { return impl_->rank; }

int PolyRing::cartan(int s, int t) const {
  return impl_->cartan[static_cast<std::size_t>(s) * impl_->rank + t];
}

Poly PolyRing::zero() const { return Poly(impl_); }

Poly PolyRing::one() const { return constant(1); }

Poly PolyRing::constant(const mpq_class& c) const {
  Poly p(impl_);
  mpq_class canon = c;
  canon.canonicalize();  // mpq_class(p, q) arrives unreduced
  if (canon != 0)
    p.terms_.emplace(Poly::Monomial(static_cast<std::size_t>(rank()), 0), canon);
  return p;
}

Poly PolyRing::alpha(int i) const {
  if (i < 0 || i >= rank()) throw std::invalid_argument("variable index out of range");
  Poly p(impl_);
  Poly::Monomial m(static_cast<std::size_t>(rank()), 0);
  m[static_cast<std::size_t>(i)] = 1;
  p.terms_.emplace(std::move(m), mpq_class(1));
  return p;
}

Poly PolyRing::delta(int i) const {
  Poly p = alpha(i);
  p *= mpq_class(1, 2);
  return p;
}

void Poly::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> Poly::degree() const {
  if (is_zero()) return std::nullopt;
  const Monomial& top = terms_.rbegin()->first;
  return 2 * static_cast<int>(std::accumulate(top.begin(), top.end(), 0u));
}

std::optional<int> Poly::homogeneous_degree() const {
  if (is_zero()) return std::nullopt;
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    int d = 2 * static_cast<int>(std::accumulate(m.begin(), m.end(), 0u));
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

mpq_class Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.ring_ ? a.ring_ : b.ring_);
  Poly::Monomial prod;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      prod = ma;
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += mb[i];
      r.add_term(prod, ca * cb);
    }
  return r;
}

Poly& Poly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly PolyRing::reflect(int s, const Poly& f) const {
  if (s < 0 || s >= rank()) throw std::invalid_argument("generator index out of range");
  // s(a_s) = -a_s; s(a_j) = a_j - cartan(s, j) a_s for j != s.
  // Expand each monomial factor by factor; powers of the images are built
  // by repeated squaring-free multiplication (degrees stay small).
  std::vector<Poly> images;
  images.reserve(static_cast<std::size_t>(rank()));
  for (int j = 0; j < rank(); ++j) {
    if (j == s) {
      images.push_back(-alpha(s));
    } else {
      Poly img = alpha(j);
      img -= alpha(s) * mpq_class(cartan(s, j));
      images.push_back(std::move(img));
    }
  }
  Poly out = zero();
  for (const auto& [m, c] : f.terms_) {
    Poly term = constant(c);
    for (int j = 0; j < rank(); ++j)
      for (unsigned k = 0; k < m[static_cast<std::size_t>(j)]; ++k)
        term *= images[static_cast<std::size_t>(j)];
    out += term;
  }
  return out;
}

Poly PolyRing::demazure(int s, const Poly& f) const {
  Poly num = f - reflect(s, f);
  // num vanishes at a_s = 0, so every monomial carries a_s; divide it out.
  Poly out = zero();
  for (const auto& [m, c] : num.terms_) {
    if (m[static_cast<std::size_t>(s)] == 0)
      throw std::logic_error(
          "demazure: f - s(f) is not divisible by alpha_s; the reflection "
          "action is broken");
    Poly::Monomial q = m;
    --q[static_cast<std::size_t>(s)];
    out.add_term(q, c);
  }
  return out;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // print highest monomials first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    const auto& [m, c] = *it;
    out << c.get_str();
    bool any = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) {
        vars << 'a' << i + 1 << '^' << m[i];
        any = true;
      }
    if (any) out << "·" << vars.str();
  }
  return out.str();
}

bool PolyRing::operator==(const PolyRing& o) const {
  if (impl_ == o.impl_) return true;
  return impl_->rank == o.impl_->rank && impl_->cartan == o.impl_->cartan;
}

}  // namespace dlab
