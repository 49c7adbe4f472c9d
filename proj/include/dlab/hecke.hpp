#ifndef DLAB_HECKE_HPP
#define DLAB_HECKE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "dlab/coxeter.hpp"
#include "dlab/laurent.hpp"

namespace dlab {

enum class GenBasis { std_h, kl_b };  // multiply by h_s or by b_s = h_s + v h_e

// Element of the Hecke algebra in the standard basis: a sparse map
// x -> coefficient, zero coefficients never stored.
class HeckeElt {
public:
  HeckeElt() = default;
  static HeckeElt h(const GroupElement& x);  // the basis element h_x

  bool is_zero() const { return c_.empty(); }
  std::size_t support_size() const { return c_.size(); }
  const LaurentPoly& coeff(const GroupElement& x) const;
  void set(const GroupElement& x, LaurentPoly p);

  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  HeckeElt operator*(const LaurentPoly& scalar) const;
  bool operator==(const HeckeElt& o) const { return c_ == o.c_; }
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

  // Right multiplication by h_s or b_s:
  //   h_x h_s = h_{xs}               if xs > x
  //           = (v^-1 - v) h_x + h_{xs}   otherwise
  //   h_x b_s = h_{xs} + v h_x       if xs > x
  //           = h_{xs} + v^-1 h_x    otherwise
  HeckeElt mul_gen(int s, GenBasis basis) const;

  // "word=poly" pairs joined by "; ", longest elements first,
  // e.g. "1 2=1:1; 1=2:1; e=3:1".
  std::string to_string() const;
  static HeckeElt parse(const CoxeterSystem& sys, std::string_view text);

private:
  std::map<GroupElement, LaurentPoly> c_;
};

// Z[v,v^-1]-bilinear pairing with (h_x, h_y) = delta_{x,y}.
LaurentPoly pairing(const HeckeElt& a, const HeckeElt& b);

struct KLPolyResult {
  LaurentPoly h;   // coefficient of h_x in b_y
  LaurentPoly p;   // classical polynomial in q, h(v) = v^(l(y)-l(x)) p(q)|_{q=v^-2}
  mpz_class mu;    // coefficient of v in h
};

// Kazhdan-Lusztig layer for one Coxeter system.  Owns the memo tables for
// the KL basis and for the bar involution on standard basis elements; a
// table is cheap to create and intended to be confined to one worker.
class KLTable {
public:
  explicit KLTable(CoxeterSystem sys, std::size_t max_elements = 1000000);

  const CoxeterSystem& system() const { return sys_; }

  // b_x, computed by descent recursion with top-down constant-term
  // corrections; memoized.
  const HeckeElt& kl_element(const GroupElement& x);

  KLPolyResult kl_poly(const GroupElement& x, const GroupElement& y);

  // bar involution: v -> v^-1, h_x -> (h_{x^-1})^-1, extended multiplicatively.
  HeckeElt bar(const HeckeElt& h);

  // Access for cache persistence.
  const std::map<GroupElement, HeckeElt>& cached_kl_elements() const { return kl_; }
  void insert_kl_element(const GroupElement& x, HeckeElt b);

private:
  const HeckeElt& bar_h(const GroupElement& x);

  CoxeterSystem sys_;
  std::size_t max_elements_;
  std::map<GroupElement, HeckeElt> kl_;
  std::map<GroupElement, HeckeElt> bar_;
};

}  // namespace dlab

#endif
