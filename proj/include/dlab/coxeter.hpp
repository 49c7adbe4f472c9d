#ifndef DLAB_COXETER_HPP
#define DLAB_COXETER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dlab {

class GroupElement;

enum class Side { left, right };

// A Coxeter system under one of three exact backends:
//   crystallographic - integer generalized Cartan matrix, elements as the
//                      matrices of their action on simple-root coordinates;
//   dihedral         - I2(m), m >= 2 or infinite, alternating-word normal form;
//   universal        - free product of rank involutions, reduced words as-is.
// Immutable value; copies share the underlying descriptor.
class CoxeterSystem {
public:
  enum class Kind { crystallographic, dihedral, universal };

  // Descriptor grammar: "A3", "B2", "C3", "D4", "E6".."E8", "F4", "G2",
  // "At2" (affine A2; tilde types carry a 't' after the letter),
  // "I2(7)", "I2(inf)", "U3" (universal of rank 3).
  static CoxeterSystem from_descriptor(const std::string& descriptor);

  // cartan is row-major rank x rank, entry (s,t) = <alpha_t, alpha_s^vee>.
  static CoxeterSystem crystallographic(int rank, std::vector<int> cartan,
                                        const std::string& descriptor);
  static CoxeterSystem dihedral(int m);  // m >= 2; m == 0 means infinity
  static CoxeterSystem universal(int rank);

  Kind kind() const;
  int rank() const;
  const std::string& descriptor() const;
  bool is_crystallographic() const { return kind() == Kind::crystallographic; }
  bool is_dihedral() const { return kind() == Kind::dihedral; }
  bool is_universal() const { return kind() == Kind::universal; }
  int cartan(int s, int t) const;   // crystallographic only
  int dihedral_order() const;       // dihedral only; 0 = infinity

  GroupElement identity() const;
  GroupElement generator(int s) const;  // 0-based

  // Systems compare by descriptor content, not object identity.
  bool operator==(const CoxeterSystem& o) const;
  bool operator!=(const CoxeterSystem& o) const { return !(*this == o); }

private:
  struct Impl;
  friend class GroupElement;
  friend bool bruhat_leq(const GroupElement&, const GroupElement&);
  std::shared_ptr<Impl> impl_;
};

// A group element with a canonical backend payload and cached length.
// Immutable value; all operations return fresh elements.
class GroupElement {
public:
  GroupElement() = default;  // unusable until assigned from a system

  const CoxeterSystem& system() const { return sys_; }
  int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }

  GroupElement mul_gen(int s, Side side) const;
  GroupElement inverse() const;

  bool is_right_descent(int s) const;  // ws < w
  bool is_left_descent(int s) const;   // sw < w
  std::vector<int> right_descents() const;
  std::vector<int> left_descents() const;

  // Canonical reduced word: repeatedly peel the smallest left descent.
  std::vector<int> word() const;
  std::string to_string() const;  // space-separated 1-based word, "e" for identity

  // Total order used by maps: (length, backend payload).  Deterministic,
  // meaningful only within one system.
  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const;

private:
  friend class CoxeterSystem;
  friend bool bruhat_leq(const GroupElement&, const GroupElement&);

  struct CrysPayload {
    std::vector<long long> fwd;  // matrix of w on root coordinates, row-major
    std::vector<long long> inv;  // matrix of w^-1, maintained alongside
    // inv is derived from fwd; identity and order use fwd alone.
    bool operator==(const CrysPayload& o) const { return fwd == o.fwd; }
    bool operator<(const CrysPayload& o) const { return fwd < o.fwd; }
  };
  struct DihPayload {
    int start = 0;  // first letter of the alternating word
    int len = 0;
    bool operator==(const DihPayload& o) const {
      return start == o.start && len == o.len;
    }
    bool operator<(const DihPayload& o) const {
      return len != o.len ? len < o.len : start < o.start;
    }
  };
  struct UnivPayload {
    std::vector<std::uint8_t> word;  // the unique reduced word
    bool operator==(const UnivPayload& o) const { return word == o.word; }
    bool operator<(const UnivPayload& o) const { return word < o.word; }
  };
  using Payload = std::variant<CrysPayload, DihPayload, UnivPayload>;

  GroupElement(CoxeterSystem sys, Payload payload, int len)
      : sys_(std::move(sys)), payload_(std::move(payload)), len_(len) {}

  void check_generator(int s) const;

  CoxeterSystem sys_;
  Payload payload_;
  int len_ = 0;
};

// Bruhat order by the lifting recursion, memoized inside the system.
bool bruhat_leq(const GroupElement& x, const GroupElement& y);

// Breadth-first closure under right multiplication, grouped by length;
// stratum k holds every element of length k.  Throws resource_limit_error
// once more than `cap` elements have been produced.
std::vector<std::vector<GroupElement>> enumerate_elements(
    const CoxeterSystem& sys, int max_len, std::size_t cap = 1000000);

// All reduced words of w, by recursion over right descents.  Throws
// resource_limit_error beyond `cap` words.
std::vector<std::vector<int>> reduced_words(const GroupElement& w,
                                            std::size_t cap = 100000);

// Space-separated 1-based generator indices; "e" is the identity.
GroupElement parse_element(const CoxeterSystem& sys, std::string_view text);

}  // namespace dlab

#endif
