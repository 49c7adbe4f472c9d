#include "dlab/coxeter.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dlab/errors.hpp"

namespace dlab {

struct CoxeterSystem::Impl {
  Kind kind;
  int rank;
  std::string descriptor;
  std::vector<int> cartan;  // crystallographic, row-major
  int dihedral_m = 0;       // dihedral, 0 = infinity

  // Bruhat memo keyed by backend payloads (not elements, so the table holds
  // no reference back to this Impl).
  std::mutex memo_mutex;
  std::map<std::pair<GroupElement::Payload, GroupElement::Payload>, bool> bruhat_memo;
};

namespace {

std::vector<int> chain_cartan(int n) {
  std::vector<int> a(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) a[i * n + i] = 2;
  for (int i = 0; i + 1 < n; ++i) {
    a[i * n + i + 1] = -1;
    a[(i + 1) * n + i] = -1;
  }
  return a;
}

void set_edge(std::vector<int>& a, int n, int i, int j, int aij = -1, int aji = -1) {
  a[i * n + j] = aij;
  a[j * n + i] = aji;
}

std::vector<int> finite_cartan(char letter, int n) {
  switch (letter) {
    case 'A':
      if (n < 1) throw std::invalid_argument("type A needs rank >= 1");
      return chain_cartan(n);
    case 'B': {
      if (n < 2) throw std::invalid_argument("type B needs rank >= 2");
      auto a = chain_cartan(n);
      set_edge(a, n, n - 2, n - 1, -2, -1);
      return a;
    }
    case 'C': {
      if (n < 2) throw std::invalid_argument("type C needs rank >= 2");
      auto a = chain_cartan(n);
      set_edge(a, n, n - 2, n - 1, -1, -2);
      return a;
    }
    case 'D': {
      if (n < 3) throw std::invalid_argument("type D needs rank >= 3");
      std::vector<int> a(static_cast<std::size_t>(n) * n, 0);
      for (int i = 0; i < n; ++i) a[i * n + i] = 2;
      for (int i = 0; i + 1 < n - 1; ++i) set_edge(a, n, i, i + 1);
      set_edge(a, n, n - 3, n - 1);
      return a;
    }
    case 'E': {
      if (n < 6 || n > 8) throw std::invalid_argument("type E needs rank 6, 7 or 8");
      std::vector<int> a(static_cast<std::size_t>(n) * n, 0);
      for (int i = 0; i < n; ++i) a[i * n + i] = 2;
      // Bourbaki numbering: chain 1-3-4-5-...-n with 2 attached to 4.
      set_edge(a, n, 0, 2);
      for (int i = 2; i + 1 < n; ++i) set_edge(a, n, i, i + 1);
      set_edge(a, n, 1, 3);
      return a;
    }
    case 'F': {
      if (n != 4) throw std::invalid_argument("type F needs rank 4");
      auto a = chain_cartan(4);
      set_edge(a, 4, 1, 2, -1, -2);
      return a;
    }
    case 'G': {
      if (n != 2) throw std::invalid_argument("type G needs rank 2");
      return {2, -1, -3, 2};
    }
    default:
      throw std::invalid_argument(std::string("unknown Cartan type letter '") + letter + "'");
  }
}

std::vector<int> affine_cartan(char letter, int n) {
  if (letter != 'A')
    throw std::invalid_argument(std::string("unsupported affine type ") + letter +
                                "t (only At<n> is available)");
  if (n < 1) throw std::invalid_argument("type At needs rank >= 1");
  if (n == 1) return {2, -2, -2, 2};
  int r = n + 1;  // cycle on n+1 nodes
  std::vector<int> a(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i) a[i * r + i] = 2;
  for (int i = 0; i < r; ++i) set_edge(a, r, i, (i + 1) % r);
  return a;
}

int other(int s) { return 1 - s; }

}  // namespace

CoxeterSystem CoxeterSystem::crystallographic(int rank, std::vector<int> cartan,
                                              const std::string& descriptor) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (cartan.size() != static_cast<std::size_t>(rank) * rank)
    throw std::invalid_argument("Cartan matrix size does not match rank");
  for (int i = 0; i < rank; ++i) {
    if (cartan[i * rank + i] != 2)
      throw std::invalid_argument("Cartan diagonal entries must be 2");
    for (int j = 0; j < rank; ++j)
      if (i != j && cartan[i * rank + j] > 0)
        throw std::invalid_argument("Cartan off-diagonal entries must be <= 0");
  }
  CoxeterSystem sys;
  sys.impl_ = std::make_shared<Impl>();
  sys.impl_->kind = Kind::crystallographic;
  sys.impl_->rank = rank;
  sys.impl_->descriptor = descriptor;
  sys.impl_->cartan = std::move(cartan);
  return sys;
}

CoxeterSystem CoxeterSystem::dihedral(int m) {
  if (m != 0 && m < 2) throw std::invalid_argument("dihedral order must be >= 2 or infinite");
  CoxeterSystem sys;
  sys.impl_ = std::make_shared<Impl>();
  sys.impl_->kind = Kind::dihedral;
  sys.impl_->rank = 2;
  sys.impl_->dihedral_m = m;
  sys.impl_->descriptor = m == 0 ? "I2(inf)" : "I2(" + std::to_string(m) + ")";
  return sys;
}

CoxeterSystem CoxeterSystem::universal(int rank) {
  if (rank < 1) throw std::invalid_argument("universal rank must be >= 1");
  CoxeterSystem sys;
  sys.impl_ = std::make_shared<Impl>();
  sys.impl_->kind = Kind::universal;
  sys.impl_->rank = rank;
  sys.impl_->descriptor = "U" + std::to_string(rank);
  return sys;
}

CoxeterSystem CoxeterSystem::from_descriptor(const std::string& descriptor) {
  if (descriptor.empty()) throw std::invalid_argument("empty group descriptor");
  char letter = descriptor[0];
  if (letter == 'I') {
    // I2(m) or I2(inf)
    if (descriptor.size() < 5 || descriptor.substr(0, 3) != "I2(" || descriptor.back() != ')')
      throw std::invalid_argument("bad dihedral descriptor \"" + descriptor + "\"");
    std::string inner = descriptor.substr(3, descriptor.size() - 4);
    if (inner == "inf") return dihedral(0);
    std::size_t used = 0;
    int m = 0;
    try {
      m = std::stoi(inner, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad dihedral order \"" + inner + "\"");
    }
    if (used != inner.size() || m < 2)
      throw std::invalid_argument("bad dihedral order \"" + inner + "\"");
    return dihedral(m);
  }
  if (letter == 'U') {
    std::string tail = descriptor.substr(1);
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(tail, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad universal rank in \"" + descriptor + "\"");
    }
    if (used != tail.size() || n < 1)
      throw std::invalid_argument("bad universal rank in \"" + descriptor + "\"");
    return universal(n);
  }
  bool affine = descriptor.size() > 1 && descriptor[1] == 't';
  std::string tail = descriptor.substr(affine ? 2 : 1);
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(tail, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rank in descriptor \"" + descriptor + "\"");
  }
  if (used != tail.size() || n < 1)
    throw std::invalid_argument("bad rank in descriptor \"" + descriptor + "\"");
  std::vector<int> cartan = affine ? affine_cartan(letter, n) : finite_cartan(letter, n);
  int rank = 1;
  while (static_cast<std::size_t>(rank) * rank < cartan.size()) ++rank;
  return crystallographic(rank, std::move(cartan), descriptor);
}

CoxeterSystem::Kind CoxeterSystem::kind() const { return impl_->kind; }
int CoxeterSystem::rank() const { return impl_->rank; }
const std::string& CoxeterSystem::descriptor() const { return impl_->descriptor; }

int CoxeterSystem::cartan(int s, int t) const {
  if (!is_crystallographic())
    throw std::logic_error("cartan(): not a crystallographic system");
  return impl_->cartan[static_cast<std::size_t>(s) * impl_->rank + t];
}

int CoxeterSystem::dihedral_order() const {
  if (!is_dihedral()) throw std::logic_error("dihedral_order(): not a dihedral system");
  return impl_->dihedral_m;
}

bool CoxeterSystem::operator==(const CoxeterSystem& o) const {
  if (impl_ == o.impl_) return true;
  if (!impl_ || !o.impl_) return false;
  return impl_->kind == o.impl_->kind && impl_->rank == o.impl_->rank &&
         impl_->cartan == o.impl_->cartan && impl_->dihedral_m == o.impl_->dihedral_m;
}

GroupElement CoxeterSystem::identity() const {
  switch (kind()) {
    case Kind::crystallographic: {
      int n = rank();
      GroupElement::CrysPayload p;
      p.fwd.assign(static_cast<std::size_t>(n) * n, 0);
      for (int i = 0; i < n; ++i) p.fwd[i * n + i] = 1;
      p.inv = p.fwd;
      return GroupElement(*this, std::move(p), 0);
    }
    case Kind::dihedral:
      return GroupElement(*this, GroupElement::DihPayload{0, 0}, 0);
    case Kind::universal:
      return GroupElement(*this, GroupElement::UnivPayload{}, 0);
  }
  throw std::logic_error("unreachable");
}

GroupElement CoxeterSystem::generator(int s) const {
  if (s < 0 || s >= rank())
    throw std::invalid_argument("generator index out of range");
  return identity().mul_gen(s, Side::right);
}

void GroupElement::check_generator(int s) const {
  if (s < 0 || s >= sys_.rank())
    throw std::invalid_argument("generator index out of range");
}

GroupElement GroupElement::mul_gen(int s, Side side) const {
  check_generator(s);
  bool descent = side == Side::right ? is_right_descent(s) : is_left_descent(s);
  int new_len = len_ + (descent ? -1 : 1);

  if (const auto* cp = std::get_if<CrysPayload>(&payload_)) {
    int n = sys_.rank();
    CrysPayload p = *cp;
    auto a = [&](int i, int j) {
      return static_cast<long long>(sys_.cartan(i, j));
    };
    if (side == Side::right) {
      // fwd <- fwd * M_s (column operations), inv <- M_s * inv (row operation)
      for (int r = 0; r < n; ++r) {
        long long cs = p.fwd[r * n + s];
        for (int j = 0; j < n; ++j)
          if (j != s) p.fwd[r * n + j] -= a(s, j) * cs;
        p.fwd[r * n + s] = -cs;
      }
      for (int j = 0; j < n; ++j) {
        long long acc = -p.inv[s * n + j];
        for (int l = 0; l < n; ++l)
          if (l != s) acc -= a(s, l) * p.inv[l * n + j];
        p.inv[s * n + j] = acc;
      }
    } else {
      for (int j = 0; j < n; ++j) {
        long long acc = -p.fwd[s * n + j];
        for (int l = 0; l < n; ++l)
          if (l != s) acc -= a(s, l) * p.fwd[l * n + j];
        p.fwd[s * n + j] = acc;
      }
      for (int r = 0; r < n; ++r) {
        long long cs = p.inv[r * n + s];
        for (int j = 0; j < n; ++j)
          if (j != s) p.inv[r * n + j] -= a(s, j) * cs;
        p.inv[r * n + s] = -cs;
      }
    }
    return GroupElement(sys_, std::move(p), new_len);
  }

  if (const auto* dp = std::get_if<DihPayload>(&payload_)) {
    int m = sys_.impl_->dihedral_m;  // 0 = infinity
    int k = dp->len;
    DihPayload p;
    if (side == Side::right) {
      if (k == 0) {
        p = {s, 1};
      } else if (m != 0 && k == m) {
        // longest element: use the alternating word of w0 that ends with s
        p = {(m % 2 == 1) ? s : other(s), m - 1};
      } else {
        int end = (k % 2 == 1) ? dp->start : other(dp->start);
        if (s == end)
          p = {k == 1 ? 0 : dp->start, k - 1};
        else
          p = {dp->start, k + 1};
      }
    } else {
      if (k == 0) {
        p = {s, 1};
      } else if (m != 0 && k == m) {
        p = {other(s), m - 1};
      } else if (s == dp->start) {
        p = {k == 1 ? 0 : other(dp->start), k - 1};
      } else {
        p = {s, k + 1};
      }
    }
    if (m != 0 && p.len == m) p.start = 0;  // the two words of w0 coincide
    return GroupElement(sys_, p, new_len);
  }

  const auto& up = std::get<UnivPayload>(payload_);
  UnivPayload p = up;
  auto letter = static_cast<std::uint8_t>(s);
  if (side == Side::right) {
    if (!p.word.empty() && p.word.back() == letter)
      p.word.pop_back();
    else
      p.word.push_back(letter);
  } else {
    if (!p.word.empty() && p.word.front() == letter)
      p.word.erase(p.word.begin());
    else
      p.word.insert(p.word.begin(), letter);
  }
  return GroupElement(sys_, std::move(p), new_len);
}

GroupElement GroupElement::inverse() const {
  if (const auto* cp = std::get_if<CrysPayload>(&payload_)) {
    CrysPayload p;
    p.fwd = cp->inv;
    p.inv = cp->fwd;
    return GroupElement(sys_, std::move(p), len_);
  }
  if (const auto* dp = std::get_if<DihPayload>(&payload_)) {
    int m = sys_.impl_->dihedral_m;
    int k = dp->len;
    if (k == 0 || (m != 0 && k == m)) return *this;  // identity and w0 are involutions
    int end = (k % 2 == 1) ? dp->start : other(dp->start);
    return GroupElement(sys_, DihPayload{end, k}, len_);
  }
  const auto& up = std::get<UnivPayload>(payload_);
  UnivPayload p;
  p.word.assign(up.word.rbegin(), up.word.rend());
  return GroupElement(sys_, std::move(p), len_);
}

bool GroupElement::is_right_descent(int s) const {
  check_generator(s);
  if (const auto* cp = std::get_if<CrysPayload>(&payload_)) {
    // ws < w iff w(alpha_s) is a negative root: column s of fwd is <= 0.
    int n = sys_.rank();
    for (int r = 0; r < n; ++r)
      if (cp->fwd[r * n + s] > 0) return false;
    return true;
  }
  if (const auto* dp = std::get_if<DihPayload>(&payload_)) {
    int m = sys_.impl_->dihedral_m;
    int k = dp->len;
    if (k == 0) return false;
    if (m != 0 && k == m) return true;
    int end = (k % 2 == 1) ? dp->start : other(dp->start);
    return s == end;
  }
  const auto& up = std::get<UnivPayload>(payload_);
  return !up.word.empty() && up.word.back() == static_cast<std::uint8_t>(s);
}

bool GroupElement::is_left_descent(int s) const {
  check_generator(s);
  if (const auto* cp = std::get_if<CrysPayload>(&payload_)) {
    int n = sys_.rank();
    for (int r = 0; r < n; ++r)
      if (cp->inv[r * n + s] > 0) return false;
    return true;
  }
  if (const auto* dp = std::get_if<DihPayload>(&payload_)) {
    int m = sys_.impl_->dihedral_m;
    int k = dp->len;
    if (k == 0) return false;
    if (m != 0 && k == m) return true;
    return s == dp->start;
  }
  const auto& up = std::get<UnivPayload>(payload_);
  return !up.word.empty() && up.word.front() == static_cast<std::uint8_t>(s);
}

std::vector<int> GroupElement::right_descents() const {
  std::vector<int> out;
  for (int s = 0; s < sys_.rank(); ++s)
    if (is_right_descent(s)) out.push_back(s);
  return out;
}

std::vector<int> GroupElement::left_descents() const {
  std::vector<int> out;
  for (int s = 0; s < sys_.rank(); ++s)
    if (is_left_descent(s)) out.push_back(s);
  return out;
}

std::vector<int> GroupElement::word() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(len_));
  GroupElement w = *this;
  while (!w.is_identity()) {
    int s = -1;
    for (int t = 0; t < sys_.rank(); ++t)
      if (w.is_left_descent(t)) {
        s = t;
        break;
      }
    if (s < 0) throw std::logic_error("non-identity element with no left descent");
    out.push_back(s);
    w = w.mul_gen(s, Side::left);
  }
  return out;
}

std::string GroupElement::to_string() const {
  if (is_identity()) return "e";
  std::ostringstream out;
  auto ws = word();
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out << ' ';
    out << ws[i] + 1;
  }
  return out.str();
}

bool GroupElement::operator==(const GroupElement& o) const {
  return len_ == o.len_ && payload_ == o.payload_;
}

bool GroupElement::operator<(const GroupElement& o) const {
  if (len_ != o.len_) return len_ < o.len_;
  return payload_ < o.payload_;
}

bool bruhat_leq(const GroupElement& x, const GroupElement& y) {
  if (x.system() != y.system())
    throw std::invalid_argument("bruhat_leq: elements from different systems");
  if (x.length() > y.length()) return false;
  if (x.length() == y.length()) return x == y;
  if (y.is_identity()) return x.is_identity();

  auto* impl = y.system().impl_.get();
  auto key = std::make_pair(x.payload_, y.payload_);
  {
    std::lock_guard<std::mutex> lock(impl->memo_mutex);
    auto it = impl->bruhat_memo.find(key);
    if (it != impl->bruhat_memo.end()) return it->second;
  }

  // lifting property: for a right descent s of y,
  // x <= y iff (xs <= ys when xs < x) else (x <= ys)
  int s = y.right_descents().front();
  GroupElement ys = y.mul_gen(s, Side::right);
  bool res = x.is_right_descent(s) ? bruhat_leq(x.mul_gen(s, Side::right), ys)
                                   : bruhat_leq(x, ys);

  std::lock_guard<std::mutex> lock(impl->memo_mutex);
  impl->bruhat_memo.emplace(std::move(key), res);
  return res;
}

std::vector<std::vector<GroupElement>> enumerate_elements(const CoxeterSystem& sys,
                                                          int max_len,
                                                          std::size_t cap) {
  if (max_len < 0) throw std::invalid_argument("max_len must be >= 0");
  std::vector<std::vector<GroupElement>> strata;
  strata.push_back({sys.identity()});
  std::size_t total = 1;
  for (int k = 1; k <= max_len; ++k) {
    std::set<GroupElement> next;
    for (const auto& w : strata.back())
      for (int s = 0; s < sys.rank(); ++s) {
        GroupElement u = w.mul_gen(s, Side::right);
        if (u.length() == k) next.insert(std::move(u));
      }
    total += next.size();
    if (total > cap)
      throw resource_limit_error("enumerate_elements: more than " +
                                 std::to_string(cap) + " elements");
    strata.emplace_back(next.begin(), next.end());
  }
  return strata;
}

namespace {

void reduced_words_rec(const GroupElement& w, std::vector<int>& stack,
                       std::vector<std::vector<int>>& out, std::size_t cap) {
  if (w.is_identity()) {
    std::vector<int> word(stack.rbegin(), stack.rend());
    if (out.size() >= cap)
      throw resource_limit_error("reduced_words: more than " + std::to_string(cap) +
                                 " words");
    out.push_back(std::move(word));
    return;
  }
  for (int s : w.right_descents()) {
    stack.push_back(s);
    reduced_words_rec(w.mul_gen(s, Side::right), stack, out, cap);
    stack.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> reduced_words(const GroupElement& w, std::size_t cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  reduced_words_rec(w, stack, out, cap);
  return out;
}

GroupElement parse_element(const CoxeterSystem& sys, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.empty())
    throw std::invalid_argument("empty element (use \"e\" for the identity)");
  if (tokens.size() == 1 && tokens[0] == "e") return sys.identity();
  GroupElement w = sys.identity();
  for (const auto& t : tokens) {
    std::size_t used = 0;
    int g = 0;
    try {
      g = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator \"" + t + "\"");
    }
    if (used != t.size() || g < 1 || g > sys.rank())
      throw std::invalid_argument("bad generator \"" + t + "\" (want 1.." +
                                  std::to_string(sys.rank()) + ")");
    w = w.mul_gen(g - 1, Side::right);
  }
  return w;
}

}  // namespace dlab
