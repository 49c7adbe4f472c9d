#ifndef DLAB_DEODHAR_HPP
#define DLAB_DEODHAR_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlab/hecke.hpp"

namespace dlab {

// A word in the generators, not necessarily reduced.
class Expression {
public:
  Expression(CoxeterSystem sys, std::vector<int> letters);
  // "2 1 3 2"; "e" or the empty string is the empty expression.
  static Expression parse(const CoxeterSystem& sys, std::string_view text);

  const CoxeterSystem& system() const { return sys_; }
  std::size_t size() const { return letters_.size(); }
  int letter(std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }

  GroupElement product() const;
  bool is_reduced() const;  // length of the product equals size()
  std::string to_string() const;

private:
  CoxeterSystem sys_;
  std::vector<int> letters_;
};

enum class Step : std::uint8_t { U0, U1, D0, D1 };
char const* step_name(Step s);  // "U0" etc.

// A subexpression e of ybar together with its decoration stream, prefix
// products w_1..w_m, expressed element and defect.  Bit i of `bits` is e_{i+1}.
struct DecoratedSubexpr {
  std::uint32_t bits = 0;
  std::vector<Step> steps;
  std::vector<GroupElement> prefixes;
  GroupElement expressed;
  int defect = 0;

  std::string bits_string(std::size_t m) const;   // e.g. "101"
  std::string steps_string() const;               // e.g. "U1 D0 U1"
};

// Decorations and defect of a single subexpression.
DecoratedSubexpr decorate(const Expression& ybar, std::uint32_t bits);

// Streams every subexpression of ybar in lexicographic bit order (e_1 is
// the most significant position), restricted to those expressing x when x
// is given.  The callback argument is reused between calls; copy it to keep
// it.  Throws resource_limit_error when size() > max_length.
void for_each_subexpr(const Expression& ybar, const std::optional<GroupElement>& x,
                      const std::function<void(const DecoratedSubexpr&)>& fn,
                      std::size_t max_length = 24);

std::vector<DecoratedSubexpr> enumerate_subexpr(const Expression& ybar,
                                                const std::optional<GroupElement>& x,
                                                std::size_t max_length = 24);

// The product b_{s_1} ... b_{s_m} in the standard basis.
HeckeElt bs_character(const Expression& ybar);

struct IdentityReport {
  bool ok = true;
  std::size_t subexpr_count = 0;
  // (element, product-side coefficient, defect-side coefficient)
  std::vector<std::tuple<GroupElement, LaurentPoly, LaurentPoly>> mismatches;
};

// Compares bs_character(ybar) against sum_e v^{df(e)} h_{expressed(e)},
// both sides computed independently.
IdentityReport verify_deodhar_identity(const Expression& ybar,
                                       std::size_t max_length = 24);

// Graded dimension sum_{e expressing x} v^{df(e)}; checked against the
// h_x coefficient of bs_character before returning.
LaurentPoly gdim_D(const GroupElement& x, const Expression& ybar,
                   std::size_t max_length = 24);

struct DefectClassStat {
  std::uint64_t n = 0;      // subexpressions of this defect expressing x
  unsigned long c = 0;      // coefficient of v^d in h_{x,y}
};

struct SubsetCensus {
  std::map<int, DefectClassStat> table;   // defect -> (n_d, c_d)
  mpz_class count;                        // prod_d C(n_d, c_d)
  bool forced = false;                    // all c_d in {0, n_d}
  std::vector<std::uint32_t> witness;     // lexicographically least solution
  LaurentPoly gdim;                       // sum_d n_d v^d
  LaurentPoly h;                          // h_{x,y}
};

// Census of subsets X of subexpressions for x in the reduced word ybar with
// sum_{e in X} v^{df(e)} = h_{x,y}.  Requires ybar reduced.  A degree with
// c_d > n_d is reported as a logic error: it cannot happen.
SubsetCensus subset_solutions(const GroupElement& x, const Expression& ybar,
                              KLTable& table, std::size_t max_length = 24);

struct Classification {
  bool rationally_smooth = false;  // h_{x,y} is exactly v^(l(y)-l(x))
  bool dihedral = false;
  bool universal = false;
};

Classification classify(const GroupElement& x, const GroupElement& y, KLTable& table);

// Soergel hom formula as a calculator: (ch M, bar ch N).
LaurentPoly hom_gdim(const HeckeElt& chM, const HeckeElt& chN, KLTable& table);

struct LemmaHomReport {
  mpz_class deg0_product;   // v^0  coefficient of (b_x b_s, b_{xs})
  mpz_class degm1_through;  // v^-1 coefficient of (b_{xs} b_s, b_{xs})
  mpz_class deg1_down;      // v^1  coefficient of (b_{xs}, b_x)
  bool ok = false;          // all three equal 1
};

// The three one-dimensionality computations for a pair x < xs.
LemmaHomReport verify_lemma_hom(const GroupElement& x, int s, KLTable& table);

}  // namespace dlab

#endif
