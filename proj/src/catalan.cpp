#include "dycktile/catalan.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "dycktile/config.hpp"
#include "dycktile/errors.hpp"

namespace dycktile {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<Step> parse_steps(std::string_view text) {
  std::vector<Step> steps;
  for (char c : strip_spaces(text)) {
    switch (c) {
      case '(':
      case 'U':
      case 'u':
        steps.push_back(Step::Up);
        break;
      case ')':
      case 'D':
      case 'd':
        steps.push_back(Step::Down);
        break;
      default:
        throw ValidationError(std::string("unexpected symbol '") + c + "' in word '" +
                              std::string(text) + "'");
    }
  }
  return steps;
}

void check_balanced(const std::vector<Step>& steps) {
  if (steps.empty() || steps.size() % 2 != 0)
    throw ValidationError("balanced word must have positive even length");
  int h = 0;
  for (Step s : steps) {
    h += s == Step::Up ? 1 : -1;
    if (h < 0) throw ValidationError("prefix with more CLOSE than OPEN symbols");
  }
  if (h != 0) throw ValidationError("unequal numbers of OPEN and CLOSE symbols");
}

}  // namespace

std::string format_set(const NodeSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s[k]);
  }
  return out + "}";
}

NodeSet parse_set(std::string_view text) {
  std::string t = strip_spaces(text);
  if (!t.empty() && t.front() == '{') t.erase(0, 1);
  if (!t.empty() && t.back() == '}') t.pop_back();
  NodeSet s;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      s.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError("malformed set element '" + item + "'");
    }
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw ValidationError("duplicate element in set " + std::string(text));
  return s;
}

// ---------------------------------------------------------------- BalancedWord

BalancedWord BalancedWord::parse(std::string_view text) { return BalancedWord(parse_steps(text)); }

BalancedWord::BalancedWord(std::vector<Step> symbols) : symbols_(std::move(symbols)) {
  check_balanced(symbols_);
}

std::string BalancedWord::str() const {
  std::string out;
  for (Step s : symbols_) out.push_back(s == Step::Up ? '(' : ')');
  return out;
}

// -------------------------------------------------------------------- DyckPath

DyckPath::DyckPath(std::string ud) : ud_(std::move(ud)) {
  heights_.reserve(ud_.size() + 1);
  heights_.push_back(0);
  for (char c : ud_) heights_.push_back(heights_.back() + (c == 'U' ? 1 : -1));
}

DyckPath::DyckPath(const BalancedWord& w) : DyckPath([&] {
        std::string ud;
        for (Step s : w.symbols()) ud.push_back(s == Step::Up ? 'U' : 'D');
        return ud;
      }()) {}

DyckPath DyckPath::parse(std::string_view text) { return DyckPath(BalancedWord::parse(text)); }

DyckPath DyckPath::from_heights(const std::vector<int>& heights) {
  if (heights.size() < 3 || heights.size() % 2 == 0)
    throw ValidationError("Dyck path heights must have odd length >= 3");
  if (heights.front() != 0 || heights.back() != 0)
    throw ValidationError("Dyck path must start and end at height 0");
  std::string ud;
  for (std::size_t i = 1; i < heights.size(); ++i) {
    int d = heights[i] - heights[i - 1];
    if (d != 1 && d != -1) throw ValidationError("Dyck path steps must be +-1");
    if (heights[i] < 0) throw ValidationError("Dyck path must stay nonnegative");
    ud.push_back(d == 1 ? 'U' : 'D');
  }
  return DyckPath(std::move(ud));
}

DyckPath DyckPath::zigzag(int n) {
  std::string ud;
  for (int i = 0; i < n; ++i) ud += "UD";
  return DyckPath::parse(ud);
}

DyckPath DyckPath::maximal(int n) {
  return DyckPath::parse(std::string(static_cast<std::size_t>(n), 'U') +
                         std::string(static_cast<std::size_t>(n), 'D'));
}

std::string DyckPath::bpe() const {
  std::string out;
  for (char c : ud_) out.push_back(c == 'U' ? '(' : ')');
  return out;
}

std::string DyckPath::heights_str() const {
  std::string out;
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(heights_[i]);
  }
  return out;
}

// ---------------------------------------------------------- NoncrossingPairing

NoncrossingPairing::NoncrossingPairing(std::vector<int> partner) : partner_(std::move(partner)) {
  const int m = static_cast<int>(partner_.size());
  if (m == 0 || m % 2 != 0) throw ValidationError("pairing must cover an even, nonempty node set");
  for (int i = 1; i <= m; ++i) {
    int j = partner_[static_cast<std::size_t>(i - 1)];
    if (j < 1 || j > m || j == i || partner_[static_cast<std::size_t>(j - 1)] != i)
      throw ValidationError("pairing is not a fixed-point-free involution");
    if ((i + j) % 2 == 0) throw ValidationError("pair {" + std::to_string(i) + "," +
                                                std::to_string(j) + "} joins nodes of equal parity");
  }
  for (int a = 1; a <= m; ++a) {
    int b = partner_[static_cast<std::size_t>(a - 1)];
    if (b < a) continue;
    for (int c = a + 1; c < b; ++c) {
      int d = partner_[static_cast<std::size_t>(c - 1)];
      if (d > b || d < a) throw ValidationError("pairing has crossing pairs");
    }
  }
}

NoncrossingPairing NoncrossingPairing::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (static_cast<int>(pairs.size()) != n) throw ValidationError("pairing needs exactly n pairs");
  std::vector<int> partner(static_cast<std::size_t>(2 * n), 0);
  for (auto [a, b] : pairs) {
    if (a < 1 || b < 1 || a > 2 * n || b > 2 * n) throw ValidationError("pair index out of range");
    if (partner[static_cast<std::size_t>(a - 1)] || partner[static_cast<std::size_t>(b - 1)])
      throw ValidationError("node used twice in pairing");
    partner[static_cast<std::size_t>(a - 1)] = b;
    partner[static_cast<std::size_t>(b - 1)] = a;
  }
  return NoncrossingPairing(std::move(partner));
}

NoncrossingPairing NoncrossingPairing::parse(std::string_view text) {
  std::string t = strip_spaces(text);
  std::vector<std::pair<int, int>> pairs;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw ValidationError("malformed pair '" + item + "'");
    try {
      pairs.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } catch (const std::exception&) {
      throw ValidationError("malformed pair '" + item + "'");
    }
  }
  return from_pairs(static_cast<int>(pairs.size()), pairs);
}

std::vector<std::pair<int, int>> NoncrossingPairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= static_cast<int>(partner_.size()); ++a)
    if (partner(a) > a) out.emplace_back(a, partner(a));
  return out;
}

std::string NoncrossingPairing::str() const {
  std::string out;
  for (int a = 1; a <= static_cast<int>(partner_.size()); a += 2) {
    if (!out.empty()) out += ',';
    out += std::to_string(a) + "-" + std::to_string(partner(a));
  }
  return out;
}

// ---------------------------------------------------------------- ConfiningSet

bool is_balanced(const NodeSet& s) {
  int odd = 0;
  for (int v : s) odd += v % 2;
  return 2 * odd == static_cast<int>(s.size());
}

bool is_confining(int n, const NodeSet& s) {
  if (!is_balanced(s)) return false;
  std::vector<bool> in(static_cast<std::size_t>(2 * n + 1), false);
  for (int v : s) {
    if (v < 1 || v > 2 * n) return false;
    in[static_cast<std::size_t>(v)] = true;
  }
  int odd_below = 0, even_below = 0;
  for (int i = 1; i <= 2 * n; ++i) {
    if (!in[static_cast<std::size_t>(i)] && odd_below <= even_below) return false;
    if (in[static_cast<std::size_t>(i)]) (i % 2 ? odd_below : even_below)++;
  }
  return true;
}

ConfiningSet::ConfiningSet(int n, NodeSet members) : n_(n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (!is_confining(n_, members_))
    throw ValidationError("set " + format_set(members_) + " is not confining for n=" + std::to_string(n_));
}

ConfiningSet ConfiningSet::parse(std::string_view text, int n) { return ConfiningSet(n, parse_set(text)); }

bool ConfiningSet::contains(int i) const { return std::binary_search(members_.begin(), members_.end(), i); }

// ------------------------------------------------------------------ bijections

DyckPath bpe_to_dyck(const BalancedWord& w) { return DyckPath(w); }

BalancedWord dyck_to_bpe(const DyckPath& h) { return BalancedWord::parse(h.ud()); }

NoncrossingPairing dyck_to_pairing(const DyckPath& h) {
  std::vector<std::pair<int, int>> pairs;
  for (const Chord& c : chords_of(h)) pairs.emplace_back(c.up, c.down);
  return NoncrossingPairing::from_pairs(h.semilength(), pairs);
}

DyckPath pairing_to_dyck(const NoncrossingPairing& p) {
  std::string ud;
  for (int i = 1; i <= 2 * p.semilength(); ++i) ud.push_back(p.partner(i) > i ? 'U' : 'D');
  return DyckPath::parse(ud);
}

BalancedWord confining_to_bpe(const ConfiningSet& s) {
  std::vector<Step> steps;
  for (int i = 1; i <= 2 * s.semilength(); ++i) {
    bool odd = i % 2 == 1;
    steps.push_back(odd == s.contains(i) ? Step::Up : Step::Down);
  }
  return BalancedWord(std::move(steps));
}

ConfiningSet bpe_to_confining(const BalancedWord& w) {
  NodeSet members;
  for (int i = 1; i <= w.length(); ++i) {
    bool odd = i % 2 == 1;
    bool open = w.at(i) == Step::Up;
    if (odd == open) members.push_back(i);
  }
  return ConfiningSet(w.semilength(), std::move(members));
}

ConfiningSet dyck_to_confining(const DyckPath& h) { return bpe_to_confining(dyck_to_bpe(h)); }
DyckPath confining_to_dyck(const ConfiningSet& s) { return bpe_to_dyck(confining_to_bpe(s)); }

std::vector<Chord> chords_of(const DyckPath& h) {
  std::vector<Chord> out;
  std::vector<int> open;  // stack of up-step indices
  for (int i = 1; i <= h.length(); ++i) {
    if (h.up(i)) {
      open.push_back(i);
    } else {
      int a = open.back();
      open.pop_back();
      out.push_back(Chord{a, i, h.height(a - 1)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DyckPath> enumerate_dyck_paths(int n) {
  require_n_within_cap(n, "enumerate_dyck_paths");
  std::vector<DyckPath> out;
  std::string ud;
  // Depth-first with D tried before U yields lexicographic order on heights.
  std::function<void(int, int)> rec = [&](int pos, int h) {
    if (pos == 2 * n) {
      out.push_back(DyckPath::parse(ud));
      return;
    }
    int remaining = 2 * n - pos;
    if (h > 0) {
      ud.push_back('D');
      rec(pos + 1, h - 1);
      ud.pop_back();
    }
    if (h + 1 <= remaining - 1) {
      ud.push_back('U');
      rec(pos + 1, h + 1);
      ud.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

PathIndex::PathIndex(int n) : n_(n), paths_(enumerate_dyck_paths(n)) {
  lookup_.reserve(paths_.size());
  for (int k = 0; k < static_cast<int>(paths_.size()); ++k) lookup_.emplace(paths_[static_cast<std::size_t>(k)].ud(), k);
}

int PathIndex::index_of(const DyckPath& h) const {
  auto it = lookup_.find(h.ud());
  if (it == lookup_.end()) throw ValidationError("path " + h.ud() + " has the wrong length");
  return it->second;
}

// -------------------------------------------------------------- push-down etc.

bool pushdown_related(const DyckPath& lower, const DyckPath& upper) {
  if (lower.length() != upper.length()) throw ValidationError("pushdown_related: length mismatch");
  for (const Chord& c : chords_of(upper)) {
    bool same_a = lower.up(c.up) == upper.up(c.up);
    bool same_b = lower.up(c.down) == upper.up(c.down);
    if (same_a != same_b) return false;
  }
  return true;
}

bool pushdown_related(const BalancedWord& p1, const BalancedWord& p2) {
  return pushdown_related(DyckPath(p1), DyckPath(p2));
}

bool is_compatible(const NodeSet& s, const NoncrossingPairing& pi) {
  for (auto [a, b] : pi.pairs()) {
    bool ia = std::binary_search(s.begin(), s.end(), a);
    bool ib = std::binary_search(s.begin(), s.end(), b);
    if (ia != ib) return false;
  }
  return true;
}

bool is_compatible(const ConfiningSet& s, const NoncrossingPairing& pi) {
  if (s.semilength() != pi.semilength()) throw ValidationError("is_compatible: size mismatch");
  return is_compatible(s.members(), pi);
}

bool dominates(const DyckPath& h1, const DyckPath& h2) {
  if (h1.length() != h2.length()) throw ValidationError("dominates: length mismatch");
  for (int i = 0; i <= h1.length(); ++i)
    if (h1.height(i) > h2.height(i)) return false;
  return true;
}

}  // namespace dycktile
