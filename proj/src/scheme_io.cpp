#include "terwb/scheme_io.hpp"

#include "terwb/classes.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace terwb {

namespace {

std::vector<std::vector<long long>> to_rows(std::size_t n, const std::vector<std::size_t>& flat) {
  std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rows[x][y] = static_cast<long long>(flat[x * n + y]);
  return rows;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_permutation(std::size_t n, const Permutation& g, std::size_t index) {
  if (g.size() != n)
    throw std::invalid_argument("generator " + std::to_string(index) + " has length " + std::to_string(g.size()) +
                                ", expected " + std::to_string(n));
  std::vector<bool> hit(n, false);
  for (auto v : g) {
    if (v >= n || hit[v])
      throw std::invalid_argument("generator " + std::to_string(index) + " is not a permutation of 0.." +
                                  std::to_string(n - 1));
    hit[v] = true;
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "}";
}

}  // namespace

ParsedTable parse_table(std::string_view text) {
  ParsedTable out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    std::vector<long long> row;
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    std::size_t col = 0;
    while (col < line.size()) {
      if (line[col] == ' ' || line[col] == '\t') {
        ++col;
        continue;
      }
      std::size_t tok_end = line.find_first_of(" \t", col);
      if (tok_end == std::string_view::npos) tok_end = line.size();
      std::string_view tok = line.substr(col, tok_end - col);
      long long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("'" + std::string(tok) + "' is not an integer", line_no, col + 1);
      row.push_back(value);
      pos.emplace_back(line_no, col + 1);
      col = tok_end;
    }
    if (!out.rows.empty() && row.size() != out.rows.front().size())
      throw ParseError("ragged row " + std::to_string(out.rows.size() + 1) + ": " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(out.rows.front().size()),
                       line_no, 1);
    out.rows.push_back(std::move(row));
    out.positions.push_back(std::move(pos));
    if (end == text.size()) break;
  }
  if (out.rows.empty()) throw ParseError("no table rows", line_no, 1);
  return out;
}

Scheme parse_scheme_file(std::string_view text) {
  auto parsed = parse_table(text);
  auto v = validate_scheme(parsed.rows);
  if (v.ok()) return std::move(*v.scheme);
  for (auto& viol : v.violations) {
    bool pairwise = viol.axiom == Axiom::range || viol.axiom == Axiom::s1 || viol.axiom == Axiom::s2 ||
                    viol.axiom == Axiom::s3;
    if (!pairwise || viol.witness.size() < 2) continue;
    std::size_t x = viol.witness[0], y = viol.witness[1];
    if (x < parsed.positions.size() && y < parsed.positions[x].size()) {
      auto [line, col] = parsed.positions[x][y];
      viol.message += " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")";
    }
  }
  throw SchemeError(std::move(v.violations));
}

Scheme read_scheme_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return parse_scheme_file(buf.str());
}

std::string render_scheme(const Scheme& s, std::string_view comment) {
  std::string out;
  if (!comment.empty()) {
    std::size_t start = 0;
    while (start < comment.size()) {
      auto end = comment.find('\n', start);
      if (end == std::string_view::npos) end = comment.size();
      out += "# ";
      out += comment.substr(start, end - start);
      out += '\n';
      start = end + 1;
    }
  }
  for (Vertex x = 0; x < s.n(); ++x) {
    for (Vertex y = 0; y < s.n(); ++y) {
      if (y) out += ' ';
      out += std::to_string(s.relation(x, y));
    }
    out += '\n';
  }
  return out;
}

void validate_group(const GroupTable& g) {
  const std::size_t m = g.m;
  if (m == 0) throw GroupError("group table is empty");
  if (g.mult.size() != m) throw GroupError("group table has " + std::to_string(g.mult.size()) + " rows, expected " + std::to_string(m));
  for (std::size_t a = 0; a < m; ++a) {
    if (g.mult[a].size() != m) throw GroupError("row " + std::to_string(a) + " has the wrong length");
    for (auto v : g.mult[a])
      if (v >= m) throw GroupError("row " + std::to_string(a) + " has an entry outside 0.." + std::to_string(m - 1));
  }
  for (std::size_t a = 0; a < m; ++a)
    if (g.mult[0][a] != a || g.mult[a][0] != a)
      throw GroupError("element 0 is not the identity: witness element " + std::to_string(a));
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<bool> row(m, false), col(m, false);
    for (std::size_t b = 0; b < m; ++b) {
      if (row[g.mult[a][b]]) throw GroupError("row " + std::to_string(a) + " is not a permutation");
      if (col[g.mult[b][a]]) throw GroupError("column " + std::to_string(a) + " is not a permutation");
      row[g.mult[a][b]] = col[g.mult[b][a]] = true;
    }
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (g.mult[g.mult[a][b]][c] != g.mult[a][g.mult[b][c]])
          throw GroupError("not associative: witness (a,b,c) = (" + std::to_string(a) + "," + std::to_string(b) +
                           "," + std::to_string(c) + ")");
}

GroupTable cyclic_group(std::size_t m) {
  GroupTable g{m, std::vector<std::vector<std::size_t>>(m, std::vector<std::size_t>(m))};
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) g.mult[a][b] = (a + b) % m;
  return g;
}

GroupTable klein_group() {
  GroupTable g{4, std::vector<std::vector<std::size_t>>(4, std::vector<std::size_t>(4))};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) g.mult[a][b] = a ^ b;
  return g;
}

GroupTable symmetric_group_s3() {
  // Elements as permutations of {0,1,2}; element 0 is the identity.
  const std::vector<Permutation> elems = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  GroupTable g{6, std::vector<std::vector<std::size_t>>(6, std::vector<std::size_t>(6))};
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      Permutation ab(3);
      for (std::size_t k = 0; k < 3; ++k) ab[k] = elems[a][elems[b][k]];
      g.mult[a][b] = static_cast<std::size_t>(std::find(elems.begin(), elems.end(), ab) - elems.begin());
    }
  return g;
}

Scheme thin_from_group(const GroupTable& g) {
  validate_group(g);
  const std::size_t m = g.m;
  std::vector<std::size_t> inv(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (g.mult[a][b] == 0) inv[a] = b;
  std::vector<std::size_t> flat(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) flat[x * m + y] = g.mult[inv[x]][y];
  return make_scheme(to_rows(m, flat));
}

Scheme schurian_from_permgroup(std::size_t n, const std::vector<Permutation>& gens) {
  if (n == 0) throw std::invalid_argument("permutation group on an empty set");
  for (std::size_t k = 0; k < gens.size(); ++k) check_permutation(n, gens[k], k);

  UnionFind points(n);
  for (const auto& g : gens)
    for (std::size_t x = 0; x < n; ++x) points.unite(x, g[x]);
  std::map<std::size_t, std::vector<std::size_t>> orbits;
  for (std::size_t x = 0; x < n; ++x) orbits[points.find(x)].push_back(x);
  if (orbits.size() > 1) {
    auto it = orbits.begin();
    auto first = it->second;
    auto second = (++it)->second;
    throw std::invalid_argument("group is not transitive: orbits " + join(first) + " and " + join(second) +
                                " (" + std::to_string(orbits.size()) + " orbits in total)");
  }

  UnionFind pairs(n * n);
  for (const auto& g : gens)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) pairs.unite(x * n + y, g[x] * n + g[y]);

  std::map<std::size_t, std::size_t> index;
  index[pairs.find(0)] = 0;
  std::vector<std::size_t> flat(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    auto root = pairs.find(k);
    auto [it, fresh] = index.emplace(root, index.size());
    flat[k] = it->second;
  }
  return make_scheme(to_rows(n, flat));
}

Scheme cycle_scheme(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle scheme needs n >= 3, got " + std::to_string(n));
  std::vector<std::size_t> flat(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t diff = (y + n - x) % n;
      flat[x * n + y] = std::min(diff, n - diff);
    }
  return make_scheme(to_rows(n, flat));
}

std::vector<Permutation> wreath_generators(std::size_t m) {
  if (m == 0) throw std::invalid_argument("wreath product needs m >= 1");
  const std::size_t n = 2 * m;
  Permutation rotate(n), flip(n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      rotate[2 * a + b] = 2 * ((a + 1) % m) + b;
      flip[2 * a + b] = a == 0 ? 1 - b : 2 * a + b;
    }
  return {rotate, flip};
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    auto add = [&out](std::string name, std::string description, Scheme s) {
      auto kind = classify(s).kind;
      out.push_back({std::move(name), std::move(description), std::move(s), kind});
    };
    add("trivial", "one point, d = 0", make_scheme({{0}}));
    add("thin-C2", "thin scheme of the cyclic group of order 2", thin_from_group(cyclic_group(2)));
    add("thin-C3", "thin scheme of the cyclic group of order 3", thin_from_group(cyclic_group(3)));
    add("thin-Klein", "thin scheme of the Klein four-group", thin_from_group(klein_group()));
    add("thin-S3", "thin scheme of the symmetric group S3", thin_from_group(symmetric_group_s3()));
    for (std::size_t n = 4; n <= 8; ++n)
      add("cycle-" + std::to_string(n), "distance classes of the " + std::to_string(n) + "-cycle", cycle_scheme(n));
    for (std::size_t m : {3, 4})
      add("wreath-2-" + std::to_string(m),
          "orbitals of Z2 wr Z" + std::to_string(m) + " on " + std::to_string(2 * m) + " points (r = " +
              std::to_string(m - 1) + ")",
          schurian_from_permgroup(2 * m, wreath_generators(m)));
    return out;
  }();
  return entries;
}

const CatalogEntry* find_catalog(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

namespace {

using Code = std::uint64_t;  // 4 bits per point, n <= 16

Code encode(const Permutation& p) {
  Code c = 0;
  for (std::size_t k = 0; k < p.size(); ++k) c |= static_cast<Code>(p[k]) << (4 * k);
  return c;
}

Code compose_codes(Code a, Code b, std::size_t n) {
  // (a then b): x -> b(a(x))
  Code c = 0;
  for (std::size_t k = 0; k < n; ++k) {
    Code ax = (a >> (4 * k)) & 0xF;
    c |= ((b >> (4 * ax)) & 0xF) << (4 * k);
  }
  return c;
}

/// Elements of <gens>, or empty if the order exceeds cap.
std::vector<Code> closure(const std::vector<Code>& gens, std::size_t n, std::size_t cap) {
  Code id = 0;
  for (std::size_t k = 0; k < n; ++k) id |= static_cast<Code>(k) << (4 * k);
  std::unordered_set<Code> seen{id};
  std::vector<Code> order{id};
  for (std::size_t head = 0; head < order.size(); ++head)
    for (auto g : gens) {
      Code next = compose_codes(order[head], g, n);
      if (seen.insert(next).second) {
        order.push_back(next);
        if (order.size() > cap) return {};
      }
    }
  return order;
}

void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

std::string signature(const Scheme& s, const ClassData& c) {
  std::ostringstream os;
  auto k = s.data().valency;
  std::sort(k.begin(), k.end());
  os << s.n() << '|' << s.d() << '|';
  for (auto v : k) os << v << ',';
  os << '|' << c.r_set.size() << '|' << c.s_set.size() << '|' << c.r() << '|';
  std::vector<std::size_t> counts;
  for (Relation i = 0; i <= s.d(); ++i)
    for (Relation j = 0; j <= s.d(); ++j)
      for (Relation l = 0; l <= s.d(); ++l) counts.push_back(s.p(i, j, l));
  std::sort(counts.begin(), counts.end());
  for (auto v : counts) os << v << ',';
  return os.str();
}

}  // namespace

SearchSummary search_quasi_thin(std::size_t max_n) {
  if (max_n > 16) throw std::invalid_argument("search supports at most 16 points");
  SearchSummary summary;
  std::set<std::string> signatures;
  for (std::size_t n = 2; n <= max_n; ++n) {
    // A transitive group whose point stabilizer has orbits of size <= 2.
    const std::size_t cap = n << ((n - 1) / 2);
    std::vector<std::vector<std::size_t>> types;
    std::vector<std::size_t> cur;
    partitions(n, n, cur, types);
    std::set<std::vector<Code>> groups;
    for (const auto& type : types) {
      Permutation g1(n);
      std::size_t base = 0;
      for (auto len : type) {
        for (std::size_t k = 0; k < len; ++k) g1[base + k] = base + (k + 1) % len;
        base += len;
      }
      Permutation g2(n);
      std::iota(g2.begin(), g2.end(), std::size_t{0});
      do {
        auto elems = closure({encode(g1), encode(g2)}, n, cap);
        if (elems.empty()) continue;
        std::sort(elems.begin(), elems.end());
        if (!groups.insert(elems).second) continue;
        std::vector<bool> hit(n, false);
        for (auto e : elems) hit[e & 0xF] = true;
        if (std::find(hit.begin(), hit.end(), false) != hit.end()) continue;
        ++summary.groups_examined;
        auto s = schurian_from_permgroup(n, {g1, g2});
        if (classify(s).kind != SchemeKind::quasi_thin) continue;
        auto c = class_data(s);
        if (!signatures.insert(signature(s, c)).second) continue;
        summary.hits.push_back({n, {g1, g2}, s, elems.size(), c.r_set.size(), c.s_set.size(), c.r()});
      } while (std::next_permutation(g2.begin(), g2.end()));
    }
  }
  return summary;
}

}  // namespace terwb
