#include "hyperfourier/groups.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hyperfourier/errors.hpp"

namespace hf {

namespace {

bool size_then_lex(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<std::size_t> compose(const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
  // (p q)(x) = p(q(x)): apply q first.
  std::vector<std::size_t> r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
  return r;
}

std::vector<std::vector<std::size_t>> close_permutations(std::vector<std::vector<std::size_t>> gens, std::size_t degree) {
  std::vector<std::size_t> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<std::size_t>> seen{id};
  std::vector<std::vector<std::size_t>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        auto q = compose(g, p);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels) {
  const std::size_t m = table.size();
  if (m == 0) throw StructuralError("group must have at least one element");
  for (const auto& row : table) {
    if (row.size() != m) throw StructuralError("Cayley table is not square");
    std::vector<bool> seen(m, false);
    for (std::size_t v : row) {
      if (v >= m || seen[v]) throw StructuralError("Cayley table is not a Latin square");
      seen[v] = true;
    }
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<bool> seen(m, false);
    for (std::size_t r = 0; r < m; ++r) {
      if (seen[table[r][c]]) throw StructuralError("Cayley table is not a Latin square");
      seen[table[r][c]] = true;
    }
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw StructuralError("Cayley table is not associative");

  std::size_t e = m;
  for (std::size_t a = 0; a < m && e == m; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < m && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (e == m) throw StructuralError("Cayley table has no identity");

  if (labels.empty()) {
    labels.resize(m);
    for (std::size_t a = 0; a < m; ++a) labels[a] = std::to_string(a);
  }
  if (labels.size() != m) throw StructuralError("label count does not match group order");

  // Swap the identity into position 0.
  std::vector<std::size_t> to_new(m);
  std::iota(to_new.begin(), to_new.end(), 0);
  std::swap(to_new[0], to_new[e]);
  table_.assign(m, std::vector<std::size_t>(m));
  labels_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    labels_[to_new[a]] = labels[a];
    for (std::size_t b = 0; b < m; ++b) table_[to_new[a]][to_new[b]] = to_new[table[a][b]];
  }
  inverse_.assign(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (table_[a][b] == 0) inverse_[a] = b;
}

FiniteGroup FiniteGroup::from_permutations(std::vector<std::vector<std::size_t>> perms) {
  if (perms.empty()) throw StructuralError("empty permutation list");
  const std::size_t degree = perms.front().size();
  std::sort(perms.begin(), perms.end());
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<std::vector<std::size_t>> table(perms.size(), std::vector<std::size_t>(perms.size()));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    labels.push_back(cycle_notation(perms[a]));
    for (std::size_t b = 0; b < perms.size(); ++b) {
      auto it = index.find(compose(perms[a], perms[b]));
      if (it == index.end()) throw StructuralError("permutation set is not closed");
      table[a][b] = it->second;
    }
  }
  FiniteGroup g(std::move(table), labels);
  // The identity permutation sorts first, so the relabelling above is the identity map.
  g.perm_degree_ = degree;
  g.perms_ = std::move(perms);
  return g;
}

Subset FiniteGroup::generate(const Subset& generators) const {
  std::vector<bool> in(order(), false);
  in[0] = true;
  std::vector<std::size_t> members{0};
  for (std::size_t g : generators) {
    if (g >= order()) throw PreconditionError("generator index out of range");
  }
  bool grown = true;
  while (grown) {
    grown = false;
    const std::size_t current = members.size();
    for (std::size_t i = 0; i < current; ++i) {
      for (std::size_t g : generators) {
        const std::size_t x = mul(members[i], g);
        if (!in[x]) {
          in[x] = true;
          members.push_back(x);
          grown = true;
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool FiniteGroup::is_subgroup(const Subset& s) const {
  if (s.empty()) return false;
  std::vector<bool> in(order(), false);
  for (std::size_t x : s) {
    if (x >= order()) return false;
    in[x] = true;
  }
  if (!in[0]) return false;
  for (std::size_t a : s) {
    if (!in[inverse(a)]) return false;
    for (std::size_t b : s)
      if (!in[mul(a, b)]) return false;
  }
  return true;
}

std::size_t FiniteGroup::parse_element(std::string_view text) const {
  const std::string t = trim(text);
  for (std::size_t a = 0; a < order(); ++a)
    if (labels_[a] == t) return a;
  if (perm_degree_ == 0 || t.empty() || t.front() != '(') throw UsageError("unknown group element '" + t + "'");

  // Product of cycles, applied right to left; points are 1-based.
  std::vector<std::size_t> perm(perm_degree_);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (std::isspace(static_cast<unsigned char>(t[pos]))) {
      ++pos;
      continue;
    }
    if (t[pos] != '(') throw UsageError("malformed cycle notation '" + t + "'");
    const std::size_t close = t.find(')', pos);
    if (close == std::string::npos) throw UsageError("unbalanced cycle notation '" + t + "'");
    std::vector<std::size_t> points;
    const std::string body = t.substr(pos + 1, close - pos - 1);
    const bool separated = body.find_first_of(", ") != std::string::npos;
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      const std::size_t p = std::stoul(token);
      if (p == 0 || p > perm_degree_) throw UsageError("cycle point out of range in '" + t + "'");
      points.push_back(p - 1);
      token.clear();
    };
    for (char ch : body) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        token.push_back(ch);
        if (!separated) flush();
      } else if (ch == ',' || ch == ' ') {
        flush();
      } else {
        throw UsageError("malformed cycle notation '" + t + "'");
      }
    }
    flush();
    std::vector<std::size_t> cyc(perm_degree_);
    std::iota(cyc.begin(), cyc.end(), 0);
    for (std::size_t i = 0; i < points.size(); ++i) cyc[points[i]] = points[(i + 1) % points.size()];
    perm = compose(perm, cyc);
    pos = close + 1;
  }
  const auto it = std::find(perms_.begin(), perms_.end(), perm);
  if (it == perms_.end()) throw UsageError("permutation '" + t + "' is not in the group");
  return static_cast<std::size_t>(it - perms_.begin());
}

Subset FiniteGroup::parse_subgroup(std::string_view text) const {
  // Split at commas and spaces that are outside parentheses.
  Subset gens;
  std::string token;
  int depth = 0;
  auto flush = [&] {
    const std::string t = trim(token);
    if (!t.empty()) gens.push_back(parse_element(t));
    token.clear();
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == ',' || ch == ';')) {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return generate(gens);
}

std::vector<Subset> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> done(order(), false);
  std::vector<Subset> classes;
  for (std::size_t a = 0; a < order(); ++a) {
    if (done[a]) continue;
    std::set<std::size_t> cls;
    for (std::size_t g = 0; g < order(); ++g) cls.insert(mul(mul(g, a), inverse(g)));
    for (std::size_t x : cls) done[x] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

std::string cycle_notation(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  const bool wide = perm.size() > 9;
  std::ostringstream os;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == s) continue;
    os << '(';
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first && wide) os << ' ';
      os << (x + 1);
      first = false;
      x = perm[x];
    }
    os << ')';
  }
  const std::string out = os.str();
  return out.empty() ? "()" : out;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw DomainError("cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return FiniteGroup(std::move(table));
}

FiniteGroup symmetric_group(std::size_t degree) {
  std::vector<std::size_t> p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return FiniteGroup::from_permutations(std::move(perms));
}

FiniteGroup alternating_group(std::size_t degree) {
  std::vector<std::size_t> p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < degree; ++i)
      for (std::size_t j = i + 1; j < degree; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return FiniteGroup::from_permutations(std::move(perms));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 3) throw DomainError("dihedral group needs n >= 3");
  std::vector<std::size_t> rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return FiniteGroup::from_permutations(close_permutations({rot, ref}, n));
}

FiniteGroup quaternion_group() {
  // Elements s*u with sign s in {+1,-1} and unit u in {1,i,j,k}; index = 2*u + (s < 0).
  static const std::array<const char*, 8> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // unit products u*v = sign * w
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      const int ua = static_cast<int>(a / 2), ub = static_cast<int>(b / 2);
      int s = sign[ua][ub] * ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1);
      table[a][b] = static_cast<std::size_t>(2 * unit[ua][ub] + (s < 0 ? 1 : 0));
    }
  }
  return FiniteGroup(std::move(table), {names.begin(), names.end()});
}

FiniteGroup builtin_group(std::string_view name) {
  const std::string n(name);
  if (n == "S3") return symmetric_group(3);
  if (n == "S4") return symmetric_group(4);
  if (n == "A4") return alternating_group(4);
  if (n == "D4") return dihedral_group(4);
  if (n == "Q8") return quaternion_group();
  if (n.size() >= 2 && n[0] == 'Z' && std::all_of(n.begin() + 1, n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const std::size_t m = std::stoul(n.substr(1));
    if (m >= 1 && m <= 120) return cyclic_group(m);
  }
  throw UsageError("unknown builtin group '" + n + "'");
}

std::vector<std::string> builtin_group_names() {
  std::vector<std::string> names;
  for (int m = 1; m <= 12; ++m) names.push_back("Z" + std::to_string(m));
  for (const char* s : {"D4", "S3", "S4", "A4", "Q8"}) names.emplace_back(s);
  return names;
}

std::vector<Subset> all_subgroups(const FiniteGroup& g) {
  return intermediate_subgroups(g, Subset{0});
}

std::vector<Subset> intermediate_subgroups(const FiniteGroup& g, const Subset& h) {
  if (!g.is_subgroup(h)) throw PreconditionError("not a subgroup");
  std::set<Subset> found{h};
  std::vector<Subset> frontier{h};
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const auto& p : frontier) {
      std::vector<bool> in(g.order(), false);
      for (std::size_t x : p) in[x] = true;
      for (std::size_t x = 0; x < g.order(); ++x) {
        if (in[x]) continue;
        Subset gens = p;
        gens.push_back(x);
        Subset q = g.generate(gens);
        if (found.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subset> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

}  // namespace hf
