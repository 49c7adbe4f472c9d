#include "dlab/hecke.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dlab/errors.hpp"

namespace dlab {

namespace {
const LaurentPoly kZeroPoly;
}

HeckeElt HeckeElt::h(const GroupElement& x) {
  HeckeElt r;
  r.c_.emplace(x, LaurentPoly(1));
  return r;
}

const LaurentPoly& HeckeElt::coeff(const GroupElement& x) const {
  auto it = c_.find(x);
  return it == c_.end() ? kZeroPoly : it->second;
}

void HeckeElt::set(const GroupElement& x, LaurentPoly p) {
  if (p.is_zero())
    c_.erase(x);
  else
    c_.insert_or_assign(x, std::move(p));
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  for (const auto& [x, p] : o.c_) {
    auto [it, inserted] = c_.try_emplace(x, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  for (const auto& [x, p] : o.c_) {
    auto [it, inserted] = c_.try_emplace(x, -p);
    if (!inserted) {
      it->second -= p;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  return *this;
}

HeckeElt HeckeElt::operator*(const LaurentPoly& scalar) const {
  HeckeElt r;
  if (scalar.is_zero()) return r;
  for (const auto& [x, p] : c_) r.c_.emplace(x, p * scalar);
  return r;
}

HeckeElt HeckeElt::mul_gen(int s, GenBasis basis) const {
  static const LaurentPoly v = LaurentPoly::v(1);
  static const LaurentPoly vinv = LaurentPoly::v(-1);
  static const LaurentPoly vinv_minus_v = vinv - v;
  HeckeElt r;
  for (const auto& [x, p] : c_) {
    GroupElement xs = x.mul_gen(s, Side::right);
    bool ascent = !x.is_right_descent(s);
    if (basis == GenBasis::std_h) {
      r += HeckeElt::h(xs) * p;
      if (!ascent) r += HeckeElt::h(x) * (p * vinv_minus_v);
    } else {
      r += HeckeElt::h(xs) * p;
      r += HeckeElt::h(x) * (p * (ascent ? v : vinv));
    }
  }
  return r;
}

std::string HeckeElt::to_string() const {
  if (is_zero()) return "0";
  // longest first, then by canonical word
  std::vector<std::pair<std::string, const LaurentPoly*>> rows;
  rows.reserve(c_.size());
  for (const auto& [x, p] : c_) rows.emplace_back(x.to_string(), &p);
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<int> lens;
  lens.reserve(c_.size());
  for (const auto& [x, p] : c_) lens.push_back(x.length());
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (lens[a] != lens[b]) return lens[a] > lens[b];
    return rows[a].first < rows[b].first;
  });
  std::ostringstream out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out << "; ";
    out << rows[order[i]].first << '=' << rows[order[i]].second->to_string();
  }
  return out.str();
}

HeckeElt HeckeElt::parse(const CoxeterSystem& sys, std::string_view text) {
  HeckeElt r;
  if (text == "0") return r;
  std::string s(text);
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ';')) {
    auto first = item.find_first_not_of(' ');
    if (first == std::string::npos)
      throw std::invalid_argument("hecke: empty term");
    item = item.substr(first);
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("hecke: missing '=' in \"" + item + "\"");
    GroupElement x = parse_element(sys, item.substr(0, eq));
    LaurentPoly p = LaurentPoly::parse(item.substr(eq + 1));
    if (!r.coeff(x).is_zero())
      throw std::invalid_argument("hecke: duplicate element \"" + x.to_string() + "\"");
    r.set(x, std::move(p));
  }
  return r;
}

LaurentPoly pairing(const HeckeElt& a, const HeckeElt& b) {
  LaurentPoly out;
  for (const auto& [x, p] : a) {
    const LaurentPoly& q = b.coeff(x);
    if (!q.is_zero()) out += p * q;
  }
  return out;
}

KLTable::KLTable(CoxeterSystem sys, std::size_t max_elements)
    : sys_(std::move(sys)), max_elements_(max_elements) {}

const HeckeElt& KLTable::bar_h(const GroupElement& x) {
  auto it = bar_.find(x);
  if (it != bar_.end()) return it->second;

  // bar(h_s) = h_s + (v - v^-1) h_e from the quadratic relation; multiply
  // out along a reduced word of x.
  static const LaurentPoly v_minus_vinv = LaurentPoly::v(1) - LaurentPoly::v(-1);
  HeckeElt acc = HeckeElt::h(sys_.identity());
  for (int s : x.word()) {
    HeckeElt next = acc.mul_gen(s, GenBasis::std_h);
    next += acc * v_minus_vinv;
    acc = std::move(next);
  }
  if (bar_.size() >= max_elements_)
    throw resource_limit_error("bar involution: memo exceeds " +
                               std::to_string(max_elements_) + " elements");
  return bar_.emplace(x, std::move(acc)).first->second;
}

HeckeElt KLTable::bar(const HeckeElt& h) {
  HeckeElt out;
  for (const auto& [x, p] : h) out += bar_h(x) * p.bar();
  return out;
}

const HeckeElt& KLTable::kl_element(const GroupElement& x) {
  if (x.system() != sys_)
    throw std::invalid_argument("kl_element: element from a different system");
  auto it = kl_.find(x);
  if (it != kl_.end()) return it->second;

  HeckeElt b;
  if (x.is_identity()) {
    b = HeckeElt::h(x);
  } else {
    // recurse on x = x' s for the smallest right descent s
    int s = x.right_descents().front();
    GroupElement xp = x.mul_gen(s, Side::right);
    HeckeElt q = kl_element(xp).mul_gen(s, GenBasis::kl_b);
    // clear constant terms from the top down; the corrections are the
    // mu-coefficients, so they are plain integers
    for (int len = x.length() - 1; len >= 0; --len) {
      std::vector<std::pair<GroupElement, mpz_class>> todo;
      for (const auto& [z, p] : q)
        if (z.length() == len && p.coeff(0) != 0) todo.emplace_back(z, p.coeff(0));
      for (const auto& [z, m] : todo) q -= kl_element(z) * LaurentPoly(m);
    }
    // both defining conditions are re-checked by tests; here guard the
    // cheap one so bugs fail fast
    for (const auto& [z, p] : q)
      if (!(z == x) && !p.in_v_zv())
        throw std::logic_error("kl_element: correction left a non-top coefficient outside vZ[v]");
    b = std::move(q);
  }
  if (kl_.size() >= max_elements_)
    throw resource_limit_error("kl_element: memo exceeds " +
                               std::to_string(max_elements_) + " elements");
  return kl_.emplace(x, std::move(b)).first->second;
}

KLPolyResult KLTable::kl_poly(const GroupElement& x, const GroupElement& y) {
  KLPolyResult r;
  r.h = kl_element(y).coeff(x);
  r.mu = r.h.coeff(1);
  if (r.h.is_zero()) return r;
  int gap = y.length() - x.length();
  // h(v) = v^gap p(q) under q = v^-2: coefficient of v^k lands on q^((gap-k)/2)
  for (int k = r.h.low_exp(); k <= r.h.high_exp(); ++k) {
    const mpz_class& c = r.h.coeff(k);
    if (c == 0) continue;
    int d = gap - k;
    if (d < 0 || d % 2 != 0)
      throw std::logic_error("kl_poly: coefficient of h violates the degree bound");
    r.p += LaurentPoly(c, d / 2);
  }
  return r;
}

void KLTable::insert_kl_element(const GroupElement& x, HeckeElt b) {
  if (x.system() != sys_)
    throw std::invalid_argument("insert_kl_element: element from a different system");
  if (!b.coeff(x).is_one())
    throw std::invalid_argument("insert_kl_element: coefficient of the top element must be 1");
  kl_.insert_or_assign(x, std::move(b));
}

}  // namespace dlab
