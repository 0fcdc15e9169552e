#pragma once

// The four Catalan families (balanced words, Dyck paths, noncrossing
// pairings, confining sets), the bijections among them, and the push-down
// relation. All node indices are 1-based on {1, ..., 2n}.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dycktile {

enum class Step : std::uint8_t { Up, Down };  // Up == OPEN "(", Down == CLOSE ")"

/// Sorted subset of {1, ..., 2n}.
using NodeSet = std::vector<int>;

std::string format_set(const NodeSet& s);  // "{1,2,3,6}"
NodeSet parse_set(std::string_view text);  // accepts "{1,2,3,6}" or "1,2,3,6"

class BalancedWord {
 public:
  /// Accepts "()" or "UD" alphabets.
  static BalancedWord parse(std::string_view text);
  explicit BalancedWord(std::vector<Step> symbols);

  int semilength() const { return static_cast<int>(symbols_.size() / 2); }
  int length() const { return static_cast<int>(symbols_.size()); }
  /// 1-based.
  Step at(int i) const { return symbols_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Step>& symbols() const { return symbols_; }
  std::string str() const;  // "(()())"

  auto operator<=>(const BalancedWord&) const = default;

 private:
  std::vector<Step> symbols_;
};

struct Chord {
  int up;      // index of the up step
  int down;    // index of the matched down step
  int height;  // level of the chord: h(up - 1) == h(down)
  int length() const { return (down - up + 1) / 2; }
  auto operator<=>(const Chord&) const = default;
};

class DyckPath {
 public:
  /// Accepts "UDUD" or "()()".
  static DyckPath parse(std::string_view text);
  static DyckPath from_heights(const std::vector<int>& heights);
  static DyckPath zigzag(int n);
  static DyckPath maximal(int n);
  explicit DyckPath(const BalancedWord& w);

  int semilength() const { return static_cast<int>(ud_.size() / 2); }
  int length() const { return static_cast<int>(ud_.size()); }
  /// h(i) for i in 0..2n.
  int height(int i) const { return heights_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& heights() const { return heights_; }
  /// Step i in 1..2n.
  bool up(int i) const { return ud_[static_cast<std::size_t>(i - 1)] == 'U'; }
  const std::string& ud() const { return ud_; }
  std::string bpe() const;
  std::string heights_str() const;  // "0,1,2,1,0"

  /// Lexicographic on heights, which matches the table order (down < up).
  friend bool operator<(const DyckPath& a, const DyckPath& b) { return a.ud_ < b.ud_; }
  friend bool operator==(const DyckPath& a, const DyckPath& b) { return a.ud_ == b.ud_; }

 private:
  explicit DyckPath(std::string ud);
  std::string ud_;
  std::vector<int> heights_;
};

class NoncrossingPairing {
 public:
  /// "1-6,3-2,5-4" in any order.
  static NoncrossingPairing parse(std::string_view text);
  static NoncrossingPairing from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int semilength() const { return static_cast<int>(partner_.size() / 2); }
  int partner(int i) const { return partner_[static_cast<std::size_t>(i - 1)]; }
  /// Pairs (a, b) with a < b, sorted by a.
  std::vector<std::pair<int, int>> pairs() const;
  /// "1-6,3-2,5-4": each pair written odd-first, ordered by the odd element.
  std::string str() const;

  auto operator<=>(const NoncrossingPairing&) const = default;

 private:
  explicit NoncrossingPairing(std::vector<int> partner);
  std::vector<int> partner_;
};

class ConfiningSet {
 public:
  ConfiningSet(int n, NodeSet members);
  static ConfiningSet parse(std::string_view text, int n);

  int semilength() const { return n_; }
  const NodeSet& members() const { return members_; }
  bool contains(int i) const;
  std::string str() const { return format_set(members_); }

  auto operator<=>(const ConfiningSet&) const = default;

 private:
  int n_;
  NodeSet members_;
};

bool is_confining(int n, const NodeSet& s);
/// Equal number of odd and even members.
bool is_balanced(const NodeSet& s);

DyckPath bpe_to_dyck(const BalancedWord& w);
BalancedWord dyck_to_bpe(const DyckPath& h);
NoncrossingPairing dyck_to_pairing(const DyckPath& h);
DyckPath pairing_to_dyck(const NoncrossingPairing& p);
BalancedWord confining_to_bpe(const ConfiningSet& s);
ConfiningSet bpe_to_confining(const BalancedWord& w);
ConfiningSet dyck_to_confining(const DyckPath& h);
DyckPath confining_to_dyck(const ConfiningSet& s);

std::vector<Chord> chords_of(const DyckPath& h);

/// All Dyck paths of semilength n in lexicographic (table) order.
std::vector<DyckPath> enumerate_dyck_paths(int n);

/// Catalan(n) paths with O(1) index lookup. Index == matrix row/column.
class PathIndex {
 public:
  explicit PathIndex(int n);
  int semilength() const { return n_; }
  int size() const { return static_cast<int>(paths_.size()); }
  const DyckPath& operator[](int idx) const { return paths_[static_cast<std::size_t>(idx)]; }
  const std::vector<DyckPath>& paths() const { return paths_; }
  int index_of(const DyckPath& h) const;

 private:
  int n_;
  std::vector<DyckPath> paths_;
  std::unordered_map<std::string, int> lookup_;
};

/// p1 is obtained from p2 by reversing some (possibly none) of p2's matched pairs.
bool pushdown_related(const BalancedWord& p1, const BalancedWord& p2);
bool pushdown_related(const DyckPath& lower, const DyckPath& upper);

/// No pair of pi joins S to its complement.
bool is_compatible(const NodeSet& s, const NoncrossingPairing& pi);
bool is_compatible(const ConfiningSet& s, const NoncrossingPairing& pi);

/// h1 <= h2 pointwise.
bool dominates(const DyckPath& h1, const DyckPath& h2);


}  // namespace dycktile
