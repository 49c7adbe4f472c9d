#ifndef DLAB_BOTTSAMELSON_HPP
#define DLAB_BOTTSAMELSON_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "dlab/deodhar.hpp"
#include "dlab/laurent.hpp"
#include "dlab/polyring.hpp"

namespace dlab {

class BSElement;

// A Bott-Samelson bimodule B_{s_1}...B_{s_m} realised concretely: free as a
// right module on the 2^m labels b, where slot i contributes 1 (bit 0) or
// delta_i (bit 1), and label b sits in degree 2*popcount(b) - m.
class BSModule {
public:
  explicit BSModule(const Expression& expr, std::size_t max_length = 10);

  const Expression& expression() const;
  const PolyRing& ring() const;
  std::size_t length() const;  // m

  LaurentPoly graded_rank() const;              // (v + v^-1)^m
  int label_degree(std::uint32_t label) const;  // 2*popcount - m

  BSElement zero() const;
  BSElement bottom() const;                     // c_bot = 1 (x) ... (x) 1
  BSElement basis(std::uint32_t label) const;

  // Left multiplication by f, pushed across the tensor slots with
  // f (x) X = 1 (x) f0 X + delta (x) (d f) X, f0 = f - delta * d f.
  BSElement left_act(const Poly& f, const BSElement& elt) const;

  // Multiply all slots together (the all-zeros chain of multiplication
  // maps); raises degree by m.
  Poly multiply_out(const BSElement& elt) const;

  bool operator==(const BSModule& o) const;

private:
  friend class BSElement;
  struct Impl {
    Expression expr;
    PolyRing ring;
  };
  std::shared_ptr<const Impl> impl_;
};

// An element as right-action coordinates over the 2^m labels.
class BSElement {
public:
  BSElement() = default;

  bool is_zero() const { return coords_.empty(); }
  const Poly& coord(std::uint32_t label) const;
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  // Total degree when homogeneous (label degree + coordinate degree,
  // uniform across labels); nullopt otherwise.
  std::optional<int> degree() const;

  BSElement& operator+=(const BSElement& o);
  BSElement& operator-=(const BSElement& o);
  friend BSElement operator+(BSElement a, const BSElement& b) { return a += b; }
  friend BSElement operator-(BSElement a, const BSElement& b) { return a -= b; }
  BSElement right_mul(const Poly& f) const;
  bool operator==(const BSElement& o) const { return coords_ == o.coords_; }
  bool operator!=(const BSElement& o) const { return !(*this == o); }

  std::string to_string() const;  // "bits: poly" lines

private:
  friend class BSModule;
  explicit BSElement(std::shared_ptr<const BSModule::Impl> impl) : impl_(std::move(impl)) {}
  void add_coord(std::uint32_t label, const Poly& p);

  std::shared_ptr<const BSModule::Impl> impl_;
  std::map<std::uint32_t, Poly> coords_;
};

// Degree of the canonical morphism chain attached to a subexpression,
// summed stepwise from the decoration stream (U0: +1, D0: -1, else 0);
// always equals the defect, which is asserted.
int cll_degree(const Expression& ybar, std::uint32_t bits);

}  // namespace dlab

#endif
