#include "ainfty/filtered_complex.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "ainfty/errors.hpp"

namespace ainfty {

std::string ValidationIssue::to_string() const {
  std::string what = kind == NotClosed ? "not closed" : "not monotone";
  return what + " at simplex " + std::to_string(simplex_index) + " " + simplex + ": " + detail;
}

static bool canonical_less(const Simplex& a, const FiltValue& va, const Simplex& b,
                           const FiltValue& vb) {
  int c = va.cmp(vb);
  if (c != 0) return c < 0;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.v < b.v;
}

FilteredComplex FilteredComplex::from_pairs(std::vector<std::pair<Simplex, FiltValue>> pairs,
                                            bool check) {
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return canonical_less(x.first, x.second, y.first, y.second);
  });
  FilteredComplex k;
  for (auto& [s, v] : pairs) {
    if (k.index_.count(s)) throw ValidationError("duplicate simplex " + s.to_string());
    k.index_.emplace(s, static_cast<int>(k.simplices_.size()));
    k.simplices_.push_back(s);
    k.values_.push_back(v);
  }
  if (check) {
    auto report = k.validate();
    if (!report.ok()) {
      const auto& issue = report.issues.front();
      if (issue.kind == ValidationIssue::NotClosed)
        throw NotClosedError(issue.simplex, issue.detail);
      throw NonMonotoneError(issue.simplex, issue.detail);
    }
  }
  return k;
}

FilteredComplex FilteredComplex::parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<Simplex, FiltValue>> pairs;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string value_tok;
    if (!(ls >> value_tok)) continue;  // blank line
    auto value = FiltValue::parse(value_tok);
    if (!value) throw ParseError("bad filtration value '" + value_tok + "'", line_no);
    std::vector<int> verts;
    std::string tok;
    while (ls >> tok) {
      try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        verts.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("bad vertex id '" + tok + "'", line_no);
      }
    }
    if (verts.empty()) throw ParseError("simplex with no vertices", line_no);
    try {
      pairs.emplace_back(Simplex::of(verts), *value);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return from_pairs(std::move(pairs), /*check=*/false);
}

FilteredComplex FilteredComplex::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

std::string FilteredComplex::to_text() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    out += values_[i].to_string();
    for (int v : simplices_[i].v) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

int FilteredComplex::top_dim() const {
  int d = -1;
  for (auto& s : simplices_) d = std::max(d, s.dim());
  return d;
}

std::optional<int> FilteredComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FilteredComplex::prefix_size_at(const FiltValue& t) const {
  int lo = 0, hi = size();
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (values_[mid] <= t)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

std::vector<FiltValue> FilteredComplex::grades() const {
  std::vector<FiltValue> out;
  for (auto& v : values_)
    if (out.empty() || !(out.back() == v)) out.push_back(v);
  return out;
}

ValidationReport FilteredComplex::validate() const {
  ValidationReport report;
  for (int i = 0; i < size(); ++i) {
    for (auto& f : simplices_[i].facets()) {
      auto j = index_of(f);
      if (!j) {
        report.issues.push_back({ValidationIssue::NotClosed, i, simplices_[i].to_string(),
                                 f.to_string()});
      } else if (values_[*j] > values_[i]) {
        report.issues.push_back({ValidationIssue::NonMonotone, i, simplices_[i].to_string(),
                                 f.to_string()});
      }
    }
  }
  return report;
}

namespace {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace

int FilteredComplex::num_components_at(const FiltValue& t) const {
  auto comp = component_of_simplex_at(t);
  std::set<int> ids;
  int m = prefix_size_at(t);
  for (int i = 0; i < m; ++i)
    if (simplices_[i].dim() == 0) ids.insert(comp[i]);
  return static_cast<int>(ids.size());
}

std::vector<int> FilteredComplex::component_of_simplex_at(const FiltValue& t) const {
  int m = prefix_size_at(t);
  std::map<int, int> vert_slot;
  for (int i = 0; i < m; ++i)
    if (simplices_[i].dim() == 0) {
      int slot = static_cast<int>(vert_slot.size());
      vert_slot.emplace(simplices_[i].v[0], slot);
    }
  UnionFind uf(static_cast<int>(vert_slot.size()));
  for (int i = 0; i < m; ++i) {
    auto& vs = simplices_[i].v;
    for (std::size_t j = 1; j < vs.size(); ++j)
      uf.unite(vert_slot.at(vs[0]), vert_slot.at(vs[j]));
  }
  std::vector<int> out(m, -1);
  for (int i = 0; i < m; ++i) out[i] = uf.find(vert_slot.at(simplices_[i].v[0]));
  return out;
}

}  // namespace ainfty
