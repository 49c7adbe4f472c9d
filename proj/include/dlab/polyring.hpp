#ifndef DLAB_POLYRING_HPP
#define DLAB_POLYRING_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dlab/coxeter.hpp"

namespace dlab {

class Poly;

// Polynomial ring Q[a1..an] on the simple roots of a crystallographic
// system, graded with each variable in degree 2, carrying the reflection
// action s_i(a_j) = a_j - <a_j, a_i^vee> a_i and the divided-difference
// operators d_i(f) = (f - s_i f) / a_i.
class PolyRing {
public:
  explicit PolyRing(const CoxeterSystem& sys);  // crystallographic only
  PolyRing(int rank, std::vector<int> cartan);

  int rank() const;
  int cartan(int s, int t) const;

  Poly zero() const;
  Poly one() const;
  Poly constant(const mpq_class& c) const;
  Poly alpha(int i) const;  // the variable a_{i+1}
  Poly delta(int i) const;  // a_i / 2, the chosen complement basis element

  Poly reflect(int s, const Poly& f) const;   // the ring involution s_i
  Poly demazure(int s, const Poly& f) const;  // exact division by alpha_s

  bool operator==(const PolyRing& o) const;
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

private:
  friend class Poly;
  struct Impl {
    int rank;
    std::vector<int> cartan;
  };
  std::shared_ptr<const Impl> impl_;
};

// Sparse multivariate polynomial with exact rational coefficients;
// monomials kept in graded-lex order.
class Poly {
public:
  using Monomial = std::vector<unsigned>;

  Poly() = default;  // zero of an unspecified ring; usable only via operators

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Graded degree (2 * total variable degree) of the top monomial;
  // nullopt for zero.  homogeneous_degree() additionally requires all
  // monomials to share that degree.
  std::optional<int> degree() const;
  std::optional<int> homogeneous_degree() const;

  mpq_class coeff(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const mpq_class& c);
  friend Poly operator*(Poly a, const mpq_class& c) { return a *= c; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Terms joined by " + ", each "c" or "c·a1^k1...an^kn", rationals "p/q".
  std::string to_string() const;

private:
  friend class PolyRing;

  struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
  };

  explicit Poly(std::shared_ptr<const PolyRing::Impl> ring) : ring_(std::move(ring)) {}
  void add_term(const Monomial& m, const mpq_class& c);

  std::shared_ptr<const PolyRing::Impl> ring_;
  std::map<Monomial, mpq_class, GrlexLess> terms_;
};

}  // namespace dlab

#endif
