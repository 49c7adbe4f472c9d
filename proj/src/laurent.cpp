#include "dlab/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dlab {

namespace {
const mpz_class kZero = 0;
}

LaurentPoly::LaurentPoly(const mpz_class& c, int exp) {
  if (c != 0) {
    low_ = exp;
    coeffs_.push_back(c);
  }
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1;
}

const mpz_class& LaurentPoly::coeff(int k) const {
  if (is_zero() || k < low_ || k > high_exp()) return kZero;
  return coeffs_[static_cast<std::size_t>(k - low_)];
}

void LaurentPoly::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t tail = coeffs_.size();
  while (coeffs_[tail - 1] == 0) --tail;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<int>(lead);
  }
  coeffs_.resize(tail - lead);
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  if (is_zero()) return r;
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  r.low_ = -high_exp();
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high_exp(), o.high_exp());
  std::vector<mpz_class> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  return *this += -o;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.trim();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  return *this = *this * o;
}

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool LaurentPoly::in_z_pos_v() const {
  if (is_zero()) return true;
  if (low_ < 0) return false;
  return all_coeffs_nonneg();
}

bool LaurentPoly::in_v_zv() const { return is_zero() || low_ >= 1; }

bool LaurentPoly::in_one_plus_v_zv() const {
  LaurentPoly d = *this - LaurentPoly(1);
  return d.in_v_zv();
}

bool LaurentPoly::all_coeffs_nonneg() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpz_class& c) { return c >= 0; });
}

bool LaurentPoly::leq_coefficientwise(const LaurentPoly& a, const LaurentPoly& b) {
  return (b - a).all_coeffs_nonneg();
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  out << low_ << ':';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ',';
    out << coeffs_[i].get_str();
  }
  return out.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  if (text == "0") return LaurentPoly();
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("laurent: missing ':' in \"" + std::string(text) + "\"");
  LaurentPoly r;
  try {
    std::size_t used = 0;
    std::string head(text.substr(0, colon));
    r.low_ = std::stoi(head, &used);
    if (used != head.size()) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    throw std::invalid_argument("laurent: bad exponent in \"" + std::string(text) + "\"");
  }
  std::string body(text.substr(colon + 1));
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("-0123456789") != std::string::npos)
      throw std::invalid_argument("laurent: bad coefficient \"" + item + "\"");
    r.coeffs_.emplace_back(item);
  }
  if (r.coeffs_.empty())
    throw std::invalid_argument("laurent: empty coefficient list in \"" + std::string(text) + "\"");
  r.trim();
  return r;
}

}  // namespace dlab
