#include "dycktile/double_dimer.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "dycktile/config.hpp"
#include "dycktile/errors.hpp"
#include "dycktile/kernels.hpp"
#include "dycktile/matrix_m.hpp"

namespace dycktile {

XMatrix::XMatrix(int n) : n_(n), x_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
  if (n < 1) throw ValidationError("X matrix needs n >= 1");
}

std::size_t XMatrix::slot(int i, int j) const {
  if (i % 2 == 0) std::swap(i, j);
  if (i % 2 == 0 || j % 2 != 0) throw ValidationError("X entries join an odd node to an even node");
  if (i < 1 || j < 1 || i > 2 * n_ || j > 2 * n_) throw ValidationError("X index out of range");
  return static_cast<std::size_t>((i - 1) / 2) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j / 2 - 1);
}

void XMatrix::set(int i, int j, const Rational& value) { x_[slot(i, j)] = value; }
const Rational& XMatrix::get(int i, int j) const { return x_[slot(i, j)]; }

nlohmann::json XMatrix::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 1; i <= 2 * n_; i += 2)
    for (int j = 2; j <= 2 * n_; j += 2) entries.push_back({i, j, to_string(get(i, j))});
  return {{"n", n_}, {"entries", entries}};
}

XMatrix XMatrix::from_json(const nlohmann::json& j) {
  try {
    XMatrix x(j.at("n").get<int>());
    for (const auto& e : j.at("entries")) {
      const auto& v = e.at(2);
      Rational val = v.is_string() ? parse_rational(v.get<std::string>()) : parse_rational(v.dump());
      x.set(e.at(0).get<int>(), e.at(1).get<int>(), val);
    }
    return x;
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("malformed X matrix JSON: ") + ex.what());
  }
}

Rational d_s(const XMatrix& x, const NodeSet& s) {
  if (!is_balanced(s)) throw ValidationError("D_S needs equal numbers of odd and even nodes");
  const int n = x.semilength();
  std::vector<bool> in(static_cast<std::size_t>(2 * n + 1), false);
  for (int v : s) {
    if (v < 1 || v > 2 * n) throw ValidationError("node out of range in D_S");
    in[static_cast<std::size_t>(v)] = true;
  }
  DenseMatrix<Rational> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int i = 2 * r + 1, j = 2 * c + 2;
      if (in[static_cast<std::size_t>(i)] != in[static_cast<std::size_t>(j)]) continue;
      const int e = (std::abs(i - j) - 1) / 2;
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = e % 2 ? Rational(-x.get(i, j)) : x.get(i, j);
    }
  return determinant(std::move(a));
}

std::function<Rational(const NodeSet&)> d_ratio(const XMatrix& x) {
  const Rational d0 = d_s(x, {});
  if (sgn(d0) == 0) throw ValidationError("D_empty vanishes");
  return [x, d0](const NodeSet& s) { return Rational(d_s(x, s) / d0); };
}

Rational PairingDistribution::total() const {
  Rational t(0);
  for (const auto& [p, v] : probabilities) t += v;
  return t;
}

const Rational& PairingDistribution::at(const NoncrossingPairing& p) const {
  for (const auto& [q, v] : probabilities)
    if (q == p) return v;
  throw ValidationError("pairing not in distribution");
}

PairingDistribution pairing_distribution(const XMatrix& x) {
  const int n = x.semilength();
  require_n_within_cap(n, "pairing distribution");
  PathIndex paths(n);
  std::vector<NodeSet> sets;
  sets.push_back({});
  for (const DyckPath& h : paths.paths()) sets.push_back(dyck_to_confining(h).members());
  std::vector<Rational> d = kernels::d_s_all_parallel(x, sets);
  if (sgn(d[0]) == 0) throw ValidationError("D_empty vanishes");
  TriMatrix minv = invert_unitriangular(kernels::build_m_parallel(paths));

  PairingDistribution out;
  out.n = n;
  for (int r = 0; r < paths.size(); ++r) {
    Rational pr(0);
    for (int c = r; c < paths.size(); ++c)
      if (sgn(minv.at(r, c)) != 0) pr += Rational(minv.at(r, c)) * d[static_cast<std::size_t>(c + 1)];
    pr /= d[0];
    if (sgn(pr) < 0) out.has_negative = true;
    out.probabilities.emplace_back(dyck_to_pairing(paths[r]), pr);
  }
  return out;
}

PartialPairing parse_partial_pairing(std::string_view text) {
  PartialPairing out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) throw ValidationError("pair must look like a-b");
    try {
      int a = std::stoi(std::string(item.substr(0, dash)));
      int b = std::stoi(std::string(item.substr(dash + 1)));
      out.emplace_back(std::min(a, b), std::max(a, b));
    } catch (const std::logic_error&) {
      throw ValidationError("bad pair '" + std::string(item) + "'");
    }
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end());
  validate_partial_pairing(out);
  return out;
}

std::string format_partial_pairing(const PartialPairing& p) {
  std::vector<std::pair<int, int>> odd_first;
  for (auto [a, b] : p) odd_first.emplace_back(a % 2 ? a : b, a % 2 ? b : a);
  std::sort(odd_first.begin(), odd_first.end());
  std::string out;
  for (auto [a, b] : odd_first) out += (out.empty() ? "" : ",") + std::to_string(a) + "-" + std::to_string(b);
  return out;
}

namespace {

bool crosses(std::pair<int, int> u, std::pair<int, int> v) {
  return (u.first < v.first && v.first < u.second && u.second < v.second) ||
         (v.first < u.first && u.first < v.second && v.second < u.second);
}

}  // namespace

void validate_partial_pairing(const PartialPairing& p) {
  if (p.empty()) throw ValidationError("empty pairing");
  std::set<int> seen;
  for (auto [a, b] : p) {
    if (a < 1) throw ValidationError("nodes are numbered from 1");
    if ((a + b) % 2 == 0) throw ValidationError("each chord joins an odd node to an even node");
    if (!seen.insert(a).second || !seen.insert(b).second) throw ValidationError("node used twice");
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (crosses(p[i], p[j])) throw ValidationError("chords cross");
}

FormalSetCombo FormalSetCombo::single(NodeSet s, Integer coeff) {
  FormalSetCombo out;
  out.add(s, coeff);
  return out;
}

void FormalSetCombo::add(const NodeSet& s, const Integer& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, fresh] = terms_.emplace(s, coeff);
  if (!fresh) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

FormalSetCombo& FormalSetCombo::operator+=(const FormalSetCombo& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

FormalSetCombo& FormalSetCombo::operator-=(const FormalSetCombo& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

FormalSetCombo FormalSetCombo::operator*(const Integer& k) const {
  FormalSetCombo out;
  for (const auto& [s, c] : terms_) out.add(s, c * k);
  return out;
}

FormalSetCombo FormalSetCombo::unite(const FormalSetCombo& o) const {
  FormalSetCombo out;
  for (const auto& [s1, c1] : terms_)
    for (const auto& [s2, c2] : o.terms_) {
      NodeSet u;
      std::set_union(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(u));
      out.add(u, c1 * c2);
    }
  return out;
}

std::string FormalSetCombo::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    Integer mag = abs(c);
    out += out.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    if (mag != 1) out += mag.get_str() + " ";
    out += "D" + format_set(s);
  }
  return out;
}

FormalSetCombo contiguous_combo(const NoncrossingPairing& local, int start) {
  const int k = local.semilength();
  const DyckPath lambda = pairing_to_dyck(local);
  FormalSetCombo out;
  for (const DyckPath& mu : enumerate_dyck_paths(k)) {
    if (!dominates(lambda, mu)) continue;
    Integer coeff = minv_of_skew(SkewShape(lambda, mu));
    if (sgn(coeff) == 0) continue;
    NodeSet s = dyck_to_confining(mu).members();
    for (int& v : s) v += start - 1;
    out.add(s, coeff);
  }
  return out;
}

Rational contiguous_marginal(const XMatrix& x, const NoncrossingPairing& local, int start) {
  if (start < 1 || start + 2 * local.semilength() - 1 > 2 * x.semilength())
    throw ValidationError("block does not fit in the node range");
  return contiguous_combo(local, start).evaluate<Rational>(d_ratio(x));
}

std::vector<PartialPairing> noncrossing_completions(const std::vector<int>& nodes, const PartialPairing& fixed) {
  if (nodes.empty()) return {PartialPairing{}};
  if (nodes.size() % 2) return {};
  std::vector<PartialPairing> out;
  const int f = nodes[0];
  for (std::size_t j = 1; j < nodes.size(); j += 2) {
    const int g = nodes[j];
    if ((f + g) % 2 == 0) continue;
    if (std::any_of(fixed.begin(), fixed.end(), [&](const auto& c) { return crosses({f, g}, c); })) continue;
    std::vector<int> inner(nodes.begin() + 1, nodes.begin() + static_cast<long>(j));
    std::vector<int> outer(nodes.begin() + static_cast<long>(j) + 1, nodes.end());
    auto ins = noncrossing_completions(inner, fixed);
    if (ins.empty()) continue;
    auto outs = noncrossing_completions(outer, fixed);
    for (const auto& a : ins)
      for (const auto& b : outs) {
        PartialPairing p = a;
        p.emplace_back(f, g);
        p.insert(p.end(), b.begin(), b.end());
        std::sort(p.begin(), p.end());
        out.push_back(std::move(p));
      }
  }
  return out;
}

bool contains_subpairing(const NoncrossingPairing& full, const PartialPairing& sub) {
  for (auto [a, b] : sub) {
    if (b > 2 * full.semilength() || full.partner(a) != b) return false;
  }
  return true;
}

namespace {

std::vector<int> nodes_of(const PartialPairing& p) {
  std::vector<int> v;
  for (auto [a, b] : p) {
    v.push_back(a);
    v.push_back(b);
  }
  std::sort(v.begin(), v.end());
  return v;
}

// Maximal runs of consecutive nodes.
std::vector<std::vector<int>> blocks_of(const std::vector<int>& nodes) {
  std::vector<std::vector<int>> out;
  for (int v : nodes) {
    if (out.empty() || out.back().back() + 1 != v) out.emplace_back();
    out.back().push_back(v);
  }
  return out;
}

// Free nodes inside each chord region must balance in parity.
bool extendable(int total, const PartialPairing& p) {
  std::vector<int> used = nodes_of(p);
  std::map<std::pair<int, int>, int> balance;  // region -> #odd - #even
  for (int f = 1; f <= total; ++f) {
    if (std::binary_search(used.begin(), used.end(), f)) continue;
    std::pair<int, int> region{0, total + 1};
    for (auto c : p)
      if (c.first < f && f < c.second && c.second - c.first < region.second - region.first) region = c;
    balance[region] += f % 2 ? 1 : -1;
  }
  return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
}

bool compatible(const NodeSet& s, const PartialPairing& p) {
  for (auto [a, b] : p)
    if (std::binary_search(s.begin(), s.end(), a) != std::binary_search(s.begin(), s.end(), b)) return false;
  return true;
}

struct MarginalMemo {
  std::mutex mutex;
  std::map<std::pair<int, PartialPairing>, FormalSetCombo> table;
};

MarginalMemo& marginal_memo() {
  static MarginalMemo memo;
  return memo;
}

FormalSetCombo marginal_rec(int total, const PartialPairing& sub) {
  {
    std::lock_guard lock(marginal_memo().mutex);
    auto it = marginal_memo().table.find({total, sub});
    if (it != marginal_memo().table.end()) return it->second;
  }
  const std::vector<int> used = nodes_of(sub);
  const auto blocks = blocks_of(used);
  auto block_of = [&](int v) {
    for (std::size_t k = 0; k < blocks.size(); ++k)
      if (v >= blocks[k].front() && v <= blocks[k].back()) return k;
    return blocks.size();
  };

  FormalSetCombo out;
  auto cross = std::find_if(sub.begin(), sub.end(), [&](const auto& c) { return block_of(c.first) != block_of(c.second); });
  if (cross != sub.end()) {
    std::vector<int> gap;
    for (int v = cross->first + 1; v < cross->second; ++v)
      if (!std::binary_search(used.begin(), used.end(), v)) gap.push_back(v);
    for (const PartialPairing& fill : noncrossing_completions(gap, sub)) {
      PartialPairing bigger = sub;
      bigger.insert(bigger.end(), fill.begin(), fill.end());
      std::sort(bigger.begin(), bigger.end());
      if (extendable(total, bigger)) out += marginal_rec(total, bigger);
    }
  } else {
    out = FormalSetCombo::single({});
    for (const auto& block : blocks) {
      const int start = block.front();
      std::vector<std::pair<int, int>> local;
      for (auto [a, b] : sub)
        if (a >= start && a <= block.back()) local.emplace_back(a - start + 1, b - start + 1);
      const int k = static_cast<int>(block.size()) / 2;
      out = out.unite(contiguous_combo(NoncrossingPairing::from_pairs(k, local), start));
    }
    if (blocks.size() > 1) {
      const FormalSetCombo alpha = out;
      for (const PartialPairing& tau : noncrossing_completions(used, {})) {
        bool joins = std::any_of(tau.begin(), tau.end(), [&](const auto& c) { return block_of(c.first) != block_of(c.second); });
        if (!joins || !extendable(total, tau)) continue;
        Integer coeff(0);
        for (const auto& [s, c] : alpha.terms())
          if (compatible(s, tau)) coeff += c;
        if (sgn(coeff) != 0) out -= marginal_rec(total, tau) * coeff;
      }
    }
  }
  std::lock_guard lock(marginal_memo().mutex);
  return marginal_memo().table.emplace(std::make_pair(total, sub), out).first->second;
}

}  // namespace

FormalSetCombo local_marginal_formula(int total_nodes, const PartialPairing& sub) {
  validate_partial_pairing(sub);
  if (total_nodes % 2 || total_nodes < 2) throw ValidationError("node count must be even and positive");
  for (auto [a, b] : sub)
    if (b > total_nodes) throw ValidationError("pairing uses a node beyond the node count");
  PartialPairing sorted = sub;
  std::sort(sorted.begin(), sorted.end());
  if (!extendable(total_nodes, sorted)) return {};
  return marginal_rec(total_nodes, sorted);
}

Rational local_marginal(const XMatrix& x, const PartialPairing& sub) {
  return local_marginal_formula(2 * x.semilength(), sub).evaluate<Rational>(d_ratio(x));
}

}  // namespace dycktile
