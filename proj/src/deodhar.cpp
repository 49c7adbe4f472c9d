#include "dlab/deodhar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dlab/errors.hpp"

namespace dlab {

Expression::Expression(CoxeterSystem sys, std::vector<int> letters)
    : sys_(std::move(sys)), letters_(std::move(letters)) {
  for (int s : letters_)
    if (s < 0 || s >= sys_.rank())
      throw std::invalid_argument("expression letter out of range");
}

Expression Expression::parse(const CoxeterSystem& sys, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    if (tok == "e" && letters.empty()) break;  // empty expression
    std::size_t used = 0;
    int g = 0;
    try {
      g = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad letter \"" + tok + "\"");
    }
    if (used != tok.size() || g < 1 || g > sys.rank())
      throw std::invalid_argument("bad letter \"" + tok + "\" (want 1.." +
                                  std::to_string(sys.rank()) + ")");
    letters.push_back(g - 1);
  }
  return Expression(sys, std::move(letters));
}

GroupElement Expression::product() const {
  GroupElement w = sys_.identity();
  for (int s : letters_) w = w.mul_gen(s, Side::right);
  return w;
}

bool Expression::is_reduced() const {
  return product().length() == static_cast<int>(letters_.size());
}

std::string Expression::to_string() const {
  if (letters_.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    out << letters_[i] + 1;
  }
  return out.str();
}

char const* step_name(Step s) {
  switch (s) {
    case Step::U0: return "U0";
    case Step::U1: return "U1";
    case Step::D0: return "D0";
    case Step::D1: return "D1";
  }
  return "??";
}

std::string DecoratedSubexpr::bits_string(std::size_t m) const {
  std::string out(m, '0');
  for (std::size_t i = 0; i < m; ++i)
    if (bits & (1u << i)) out[i] = '1';
  return out;
}

std::string DecoratedSubexpr::steps_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out << ' ';
    out << step_name(steps[i]);
  }
  return out.str();
}

DecoratedSubexpr decorate(const Expression& ybar, std::uint32_t bits) {
  std::size_t m = ybar.size();
  if (m > 32)
    throw resource_limit_error("decorate: expressions longer than 32 are not supported");
  if (m < 32 && (bits >> m) != 0)
    throw std::invalid_argument("decorate: bit vector longer than the expression");
  DecoratedSubexpr d;
  d.bits = bits;
  d.steps.reserve(m);
  d.prefixes.reserve(m);
  GroupElement w = ybar.system().identity();
  for (std::size_t i = 0; i < m; ++i) {
    int s = ybar.letter(i);
    bool up = !w.is_right_descent(s);  // w s > w
    bool taken = (bits >> i) & 1u;
    if (taken) w = w.mul_gen(s, Side::right);
    d.steps.push_back(up ? (taken ? Step::U1 : Step::U0)
                         : (taken ? Step::D1 : Step::D0));
    d.prefixes.push_back(w);
    if (!taken) d.defect += up ? 1 : -1;
  }
  d.expressed = w;
  return d;
}

namespace {

// Depth-first walk in lexicographic bit order (0 before 1 at each position),
// sharing prefix products between neighbouring subexpressions.
void subexpr_rec(const Expression& ybar, const GroupElement* filter,
                 std::size_t i, DecoratedSubexpr& cur,
                 const std::function<void(const DecoratedSubexpr&)>& fn) {
  std::size_t m = ybar.size();
  if (i == m) {
    cur.expressed = cur.prefixes.empty() ? ybar.system().identity()
                                         : cur.prefixes.back();
    if (!filter || cur.expressed == *filter) fn(cur);
    return;
  }
  int s = ybar.letter(i);
  const GroupElement w =
      i == 0 ? ybar.system().identity() : cur.prefixes[i - 1];
  bool up = !w.is_right_descent(s);

  // e_{i+1} = 0
  cur.steps.push_back(up ? Step::U0 : Step::D0);
  cur.prefixes.push_back(w);
  cur.defect += up ? 1 : -1;
  subexpr_rec(ybar, filter, i + 1, cur, fn);
  cur.defect -= up ? 1 : -1;
  cur.prefixes.pop_back();
  cur.steps.pop_back();

  // e_{i+1} = 1
  cur.bits |= (1u << i);
  cur.steps.push_back(up ? Step::U1 : Step::D1);
  cur.prefixes.push_back(w.mul_gen(s, Side::right));
  subexpr_rec(ybar, filter, i + 1, cur, fn);
  cur.prefixes.pop_back();
  cur.steps.pop_back();
  cur.bits &= ~(1u << i);
}

}  // namespace

void for_each_subexpr(const Expression& ybar, const std::optional<GroupElement>& x,
                      const std::function<void(const DecoratedSubexpr&)>& fn,
                      std::size_t max_length) {
  if (ybar.size() > max_length || ybar.size() > 32)
    throw resource_limit_error("subexpression enumeration over a word of length " +
                               std::to_string(ybar.size()) + " exceeds the cap " +
                               std::to_string(std::min<std::size_t>(max_length, 32)));
  if (x && x->system() != ybar.system())
    throw std::invalid_argument("subexpression filter from a different system");
  DecoratedSubexpr cur;
  cur.expressed = ybar.system().identity();
  subexpr_rec(ybar, x ? &*x : nullptr, 0, cur, fn);
}

std::vector<DecoratedSubexpr> enumerate_subexpr(const Expression& ybar,
                                                const std::optional<GroupElement>& x,
                                                std::size_t max_length) {
  std::vector<DecoratedSubexpr> out;
  for_each_subexpr(ybar, x, [&](const DecoratedSubexpr& d) { out.push_back(d); },
                   max_length);
  return out;
}

HeckeElt bs_character(const Expression& ybar) {
  HeckeElt acc = HeckeElt::h(ybar.system().identity());
  for (int s : ybar.letters()) acc = acc.mul_gen(s, GenBasis::kl_b);
  return acc;
}

IdentityReport verify_deodhar_identity(const Expression& ybar, std::size_t max_length) {
  HeckeElt lhs = bs_character(ybar);
  HeckeElt rhs;
  IdentityReport report;
  for_each_subexpr(
      ybar, std::nullopt,
      [&](const DecoratedSubexpr& d) {
        ++report.subexpr_count;
        rhs += HeckeElt::h(d.expressed) * LaurentPoly::v(d.defect);
      },
      max_length);
  if (lhs == rhs) return report;
  report.ok = false;
  HeckeElt diff = lhs - rhs;
  for (const auto& [z, p] : diff) {
    (void)p;
    report.mismatches.emplace_back(z, lhs.coeff(z), rhs.coeff(z));
  }
  return report;
}

LaurentPoly gdim_D(const GroupElement& x, const Expression& ybar,
                   std::size_t max_length) {
  LaurentPoly sum;
  for_each_subexpr(
      ybar, x,
      [&](const DecoratedSubexpr& d) { sum += LaurentPoly::v(d.defect); },
      max_length);
  if (sum != bs_character(ybar).coeff(x))
    throw std::logic_error("gdim_D: defect sum disagrees with the character coefficient");
  return sum;
}

SubsetCensus subset_solutions(const GroupElement& x, const Expression& ybar,
                              KLTable& table, std::size_t max_length) {
  if (!ybar.is_reduced())
    throw std::invalid_argument("subset_solutions: expression is not reduced");

  // defect class -> members in lexicographic order
  std::map<int, std::vector<std::uint32_t>> classes;
  for_each_subexpr(
      ybar, x,
      [&](const DecoratedSubexpr& d) { classes[d.defect].push_back(d.bits); },
      max_length);

  SubsetCensus census;
  census.h = table.kl_poly(x, ybar.product()).h;

  std::vector<int> degrees;
  for (const auto& [d, members] : classes) degrees.push_back(d);
  if (!census.h.is_zero())
    for (int d = census.h.low_exp(); d <= census.h.high_exp(); ++d)
      if (census.h.coeff(d) != 0 && !classes.count(d)) degrees.push_back(d);
  std::sort(degrees.begin(), degrees.end());

  census.count = 1;
  census.forced = true;
  for (int d : degrees) {
    auto it = classes.find(d);
    std::uint64_t n = it == classes.end() ? 0 : it->second.size();
    const mpz_class& cz = census.h.coeff(d);
    if (cz < 0 || cz > n)
      throw std::logic_error("subset_solutions: coefficient of v^" + std::to_string(d) +
                             " in h exceeds the subexpression count; this contradicts "
                             "the defect decomposition and indicates a bug");
    unsigned long c = cz.get_ui();
    census.table[d] = DefectClassStat{n, c};
    census.gdim += LaurentPoly(mpz_class(n), d);
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, c);
    census.count *= binom;
    if (c != 0 && c != n) census.forced = false;
    if (it != classes.end())
      census.witness.insert(census.witness.end(), it->second.begin(),
                            it->second.begin() + static_cast<long>(c));
  }
  // lexicographic order on bit strings = numeric order on reversed bits
  std::size_t m = ybar.size();
  std::sort(census.witness.begin(), census.witness.end(),
            [m](std::uint32_t a, std::uint32_t b) {
              for (std::size_t i = 0; i < m; ++i) {
                unsigned ba = (a >> i) & 1u, bb = (b >> i) & 1u;
                if (ba != bb) return ba < bb;
              }
              return false;
            });
  return census;
}

Classification classify(const GroupElement& x, const GroupElement& y, KLTable& table) {
  if (!bruhat_leq(x, y))
    throw std::invalid_argument("classify: requires x <= y in Bruhat order");
  Classification cls;
  cls.dihedral = x.system().is_dihedral();
  cls.universal = x.system().is_universal();
  LaurentPoly h = table.kl_poly(x, y).h;
  cls.rationally_smooth = h == LaurentPoly::v(y.length() - x.length());
  return cls;
}

LaurentPoly hom_gdim(const HeckeElt& chM, const HeckeElt& chN, KLTable& table) {
  return pairing(chM, table.bar(chN));
}

LemmaHomReport verify_lemma_hom(const GroupElement& x, int s, KLTable& table) {
  if (x.is_right_descent(s))
    throw std::invalid_argument("verify_lemma_hom: requires x < xs");
  GroupElement xs = x.mul_gen(s, Side::right);
  const HeckeElt& bx = table.kl_element(x);
  const HeckeElt& bxs = table.kl_element(xs);
  LemmaHomReport r;
  r.deg0_product = pairing(bx.mul_gen(s, GenBasis::kl_b), bxs).coeff(0);
  r.degm1_through = pairing(bxs.mul_gen(s, GenBasis::kl_b), bxs).coeff(-1);
  r.deg1_down = pairing(bxs, bx).coeff(1);
  r.ok = r.deg0_product == 1 && r.degm1_through == 1 && r.deg1_down == 1;
  return r;
}

}  // namespace dlab
