#include "cstar/rootcore.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "cstar/errors.hpp"
#include "cstar/rational.hpp"

namespace cstar {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family parse_family(char letter) {
  const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(letter)));
  if (u < 'A' || u > 'G') throw ArgumentError(std::string("unknown Dynkin family '") + letter + "'");
  return static_cast<Family>(u - 'A');
}

void validate_factor(const SimpleFactor& f) {
  const int r = f.rank;
  bool ok = false;
  switch (f.family) {
    case Family::A: ok = r >= 1; break;
    case Family::B:
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) {
    throw ArgumentError(std::string("invalid Dynkin type ") + family_letter(f.family) +
                        std::to_string(r));
  }
}

DynkinType::DynkinType(std::vector<SimpleFactor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) validate_factor(f);
}

DynkinType DynkinType::parse(const std::string& text) {
  std::vector<SimpleFactor> factors;
  std::string cleaned;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') cleaned.push_back(c);
  std::size_t pos = 0;
  while (pos < cleaned.size()) {
    const Family fam = parse_family(cleaned[pos++]);
    std::size_t end = pos;
    while (end < cleaned.size() && std::isdigit(static_cast<unsigned char>(cleaned[end]))) ++end;
    if (end == pos) throw ArgumentError("missing rank in Dynkin type '" + text + "'");
    factors.push_back({fam, std::stoi(cleaned.substr(pos, end - pos))});
    pos = end;
    if (pos < cleaned.size()) {
      if (cleaned[pos] != 'x' && cleaned[pos] != '*') {
        throw ArgumentError("malformed Dynkin type '" + text + "'");
      }
      ++pos;
    }
  }
  if (factors.empty()) throw ArgumentError("empty Dynkin type");
  return DynkinType(std::move(factors));
}

int DynkinType::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank;
  return r;
}

std::string DynkinType::name() const {
  if (factors_.empty()) return "pt";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "x";
    s += family_letter(factors_[i].family);
    s += std::to_string(factors_[i].rank);
  }
  return s;
}

std::vector<std::vector<int>> cartan_matrix(const SimpleFactor& f) {
  validate_factor(f);
  const int n = f.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) c[a][a] = 2;
  auto link = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
  switch (f.family) {
    case Family::A:
      for (int a = 0; a + 1 < n; ++a) link(a, a + 1);
      break;
    case Family::B:
      for (int a = 0; a + 1 < n; ++a) link(a, a + 1);
      c[n - 2][n - 1] = -2;  // alpha_{n-1} long, alpha_n short
      break;
    case Family::C:
      for (int a = 0; a + 1 < n; ++a) link(a, a + 1);
      c[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int a = 0; a + 2 < n; ++a) link(a, a + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(1, 3);
      for (int a = 2; a + 1 < n; ++a) link(a, a + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[1][2] = -2;
      break;
    case Family::G:
      link(0, 1);
      c[1][0] = -3;  // alpha_2 long
      break;
  }
  return c;
}

namespace {

std::vector<int> iota_labels(std::size_t n) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 1);
  return l;
}

}  // namespace

RootDatum::RootDatum(std::vector<std::vector<int>> cartan, std::vector<int> labels)
    : cartan_(std::move(cartan)), labels_(std::move(labels)) {
  if (cartan_.size() != labels_.size()) throw ArgumentError("cartan/labels size mismatch");
  for (const auto& row : cartan_)
    if (row.size() != labels_.size()) throw ArgumentError("cartan matrix is not square");
  recognize_components();
  close_roots();
}

RootDatum::RootDatum(std::vector<std::vector<int>> cartan, std::vector<int> labels,
                     std::vector<DiagramComponent> components)
    : cartan_(std::move(cartan)), labels_(std::move(labels)), components_(std::move(components)) {
  if (cartan_.size() != labels_.size()) throw ArgumentError("cartan/labels size mismatch");
  std::vector<SimpleFactor> f;
  for (const auto& comp : components_) f.push_back(comp.type);
  type_ = DynkinType(std::move(f));
  close_roots();
}

std::size_t RootDatum::position(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw ArgumentError("node " + std::to_string(label) + " is not in diagram " + type_.name());
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

bool RootDatum::has_label(int label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

void RootDatum::recognize_components() {
  const std::size_t n = labels_.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (cartan_[a][a] != 2) throw ArgumentError("cartan diagonal must be 2");
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const int v = cartan_[a][b];
      if (v > 0 || v < -3 || ((v == 0) != (cartan_[b][a] == 0))) {
        throw ArgumentError("not a generalized Cartan matrix");
      }
    }
  }
  auto adjacent = [&](std::size_t a, std::size_t b) { return a != b && cartan_[a][b] != 0; };
  auto mult = [&](std::size_t a, std::size_t b) { return cartan_[a][b] * cartan_[b][a]; };

  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp{start};
    seen[start] = true;
    for (std::size_t q = 0; q < comp.size(); ++q)
      for (std::size_t b = 0; b < n; ++b)
        if (!seen[b] && adjacent(comp[q], b)) {
          seen[b] = true;
          comp.push_back(b);
        }
    std::sort(comp.begin(), comp.end());
    const int r = static_cast<int>(comp.size());
    auto degree = [&](std::size_t a) {
      int d = 0;
      for (auto b : comp) d += adjacent(a, b);
      return d;
    };
    auto neighbours = [&](std::size_t a) {
      std::vector<std::size_t> nb;
      for (auto b : comp)
        if (adjacent(a, b)) nb.push_back(b);
      return nb;
    };
    // Walks from `from` away from `prev` until a node of degree != 2 is hit.
    auto walk = [&](std::size_t from, std::size_t prev) {
      std::vector<std::size_t> path{from};
      std::size_t cur = from;
      while (true) {
        std::size_t next = n;
        for (auto b : neighbours(cur))
          if (b != prev) next = b;
        if (next == n || degree(cur) != 2) break;
        prev = cur;
        cur = next;
        path.push_back(cur);
      }
      return path;
    };

    DiagramComponent dc{{Family::A, r}, {}};
    if (r == 1) {
      dc.positions = comp;
    } else {
      int edges = 0;
      for (std::size_t x = 0; x < comp.size(); ++x)
        for (std::size_t y = x + 1; y < comp.size(); ++y) edges += adjacent(comp[x], comp[y]);
      if (edges != r - 1) throw ArgumentError("diagram contains a cycle: not of finite type");
      std::size_t branch = n;
      for (auto a : comp) {
        if (degree(a) > 3) throw ArgumentError("diagram node of degree > 3");
        if (degree(a) == 3) {
          if (branch != n) throw ArgumentError("diagram has two branch nodes");
          branch = a;
        }
      }
      if (branch != n) {
        for (auto a : comp)
          for (auto b : comp)
            if (adjacent(a, b) && mult(a, b) != 1)
              throw ArgumentError("branched diagram with multiple bond");
        std::vector<std::vector<std::size_t>> arms;
        for (auto b : neighbours(branch)) arms.push_back(walk(b, branch));
        std::sort(arms.begin(), arms.end(), [&](const auto& x, const auto& y) {
          if (x.size() != y.size()) return x.size() < y.size();
          return labels_[x.back()] < labels_[y.back()];
        });
        if (arms[0].size() == 1 && arms[2].size() == 1) std::rotate(arms.begin(), arms.begin() + 1, arms.end());
        const auto l0 = arms[0].size(), l1 = arms[1].size(), l2 = arms[2].size();
        if (l0 == 1 && l1 == 1) {
          // D_r: long arm end ... branch, then the two short leaves.
          dc.type = {Family::D, r};
          std::vector<std::size_t> longarm(arms[2].rbegin(), arms[2].rend());
          dc.positions = longarm;
          dc.positions.push_back(branch);
          dc.positions.push_back(arms[0][0]);
          dc.positions.push_back(arms[1][0]);
        } else if (l0 == 1 && l1 == 2 && (l2 == 2 || l2 == 3 || l2 == 4)) {
          dc.type = {Family::E, r};
          const auto& shortarm = arms[1];  // becomes nodes 3, 1
          const auto& longarm = arms[2];   // becomes nodes 5, 6, ...
          dc.positions = {shortarm[1], arms[0][0], shortarm[0], branch};
          for (auto p : longarm) dc.positions.push_back(p);
        } else {
          throw ArgumentError("branched diagram of infinite type");
        }
      } else {
        std::vector<std::size_t> ends;
        for (auto a : comp)
          if (degree(a) == 1) ends.push_back(a);
        std::size_t e0 = labels_[ends[0]] < labels_[ends[1]] ? ends[0] : ends[1];
        std::vector<std::size_t> path = walk(e0, n);
        // walk stops at the far end (degree 1); make sure it is included.
        if (path.size() < comp.size()) {
          std::vector<std::size_t> full{e0};
          std::size_t prev = n, cur = e0;
          while (full.size() < comp.size()) {
            for (auto b : neighbours(cur))
              if (b != prev) {
                prev = cur;
                cur = b;
                break;
              }
            full.push_back(cur);
          }
          path = full;
        }
        int multiple = -1;
        for (int x = 0; x + 1 < r; ++x) {
          const int m = mult(path[x], path[x + 1]);
          if (m > 1) {
            if (multiple >= 0) throw ArgumentError("two multiple bonds: infinite type");
            multiple = x;
          }
        }
        if (multiple < 0) {
          dc.type = {Family::A, r};
          dc.positions = path;
        } else {
          const int m = mult(path[multiple], path[multiple + 1]);
          if (m == 3) {
            if (r != 2) throw ArgumentError("triple bond in rank > 2");
            // G_2: alpha_1 short.  cartan[long][short] = -3.
            const bool first_short = cartan_[path[1]][path[0]] == -3;
            dc.type = {Family::G, 2};
            dc.positions = first_short ? path : std::vector<std::size_t>{path[1], path[0]};
          } else if (m == 4) {
            throw ArgumentError("bond of multiplicity 4: affine type");
          } else if (r == 2) {
            // B_2: alpha_1 long, alpha_2 short.
            const bool first_long = cartan_[path[0]][path[1]] == -2;
            dc.type = {Family::B, 2};
            dc.positions = first_long ? path : std::vector<std::size_t>{path[1], path[0]};
          } else if (multiple == 0 || multiple == r - 2) {
            if (multiple == 0) std::reverse(path.begin(), path.end());
            const std::size_t leaf = path[r - 1], inner = path[r - 2];
            dc.type = {cartan_[inner][leaf] == -2 ? Family::B : Family::C, r};
            dc.positions = path;
          } else if (r == 4 && multiple == 1) {
            if (cartan_[path[1]][path[2]] != -2) std::reverse(path.begin(), path.end());
            dc.type = {Family::F, 4};
            dc.positions = path;
          } else {
            throw ArgumentError("multiple bond in an infinite-type position");
          }
        }
      }
    }
    components_.push_back(std::move(dc));
  }
  std::vector<SimpleFactor> f;
  for (const auto& comp : components_) f.push_back(comp.type);
  type_ = DynkinType(std::move(f));
}

void RootDatum::close_roots() {
  const std::size_t n = labels_.size();
  auto pairing = [&](const std::vector<int>& beta, std::size_t j) {
    int s = 0;
    for (std::size_t a = 0; a < n; ++a) s += beta[a] * cartan_[a][j];
    return s;
  };
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<int> e(n, 0);
    e[a] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<std::vector<int>> positive;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      positive.push_back(beta);
      for (std::size_t j = 0; j < n; ++j) {
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[j] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        const int q = p - pairing(beta, j);
        if (q > 0) {
          std::vector<int> up = beta;
          up[j] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    for (const auto& b : next) known.insert(b);
    layer.assign(next.begin(), next.end());
  }
  std::stable_sort(positive.begin(), positive.end(), [](const auto& x, const auto& y) {
    const int hx = std::accumulate(x.begin(), x.end(), 0);
    const int hy = std::accumulate(y.begin(), y.end(), 0);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  positive_.clear();
  roots_.clear();
  index_.clear();
  for (const auto& b : positive) positive_.push_back(Root{b});
  roots_ = positive_;
  for (const auto& b : positive) {
    std::vector<int> neg(b.size());
    std::transform(b.begin(), b.end(), neg.begin(), [](int x) { return -x; });
    roots_.push_back(Root{neg});
  }
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i].coeffs, i);

  // Symmetrizer: cartan(a,b) |alpha_b|^2 = cartan(b,a) |alpha_a|^2.
  std::vector<Rational> len(n, 0);
  for (const auto& comp : components_) {
    if (comp.positions.empty()) continue;
    std::vector<std::size_t> queue{comp.positions.front()};
    len[queue[0]] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t a = queue[q];
      for (auto b : comp.positions) {
        if (b == a || cartan_[a][b] == 0 || len[b] != 0) continue;
        len[b] = len[a] * cartan_[b][a] / cartan_[a][b];
        queue.push_back(b);
      }
    }
    Rational lo = len[comp.positions.front()];
    for (auto p : comp.positions) lo = std::min(lo, len[p]);
    for (auto p : comp.positions) len[p] = 2 * len[p] / lo;
  }
  length2_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) length2_[a] = static_cast<int>(len[a].get_num().get_si());
}

Weight RootDatum::root_to_weight(const Root& r) const {
  const std::size_t n = labels_.size();
  Weight w{std::vector<int>(n, 0)};
  for (std::size_t a = 0; a < n; ++a) {
    if (r.coeffs[a] == 0) continue;
    for (std::size_t b = 0; b < n; ++b) w.coords[b] += r.coeffs[a] * cartan_[a][b];
  }
  return w;
}

Weight RootDatum::simple_root_weight(std::size_t position) const {
  return Weight{cartan_.at(position)};
}

Weight RootDatum::fundamental_weight(int label) const {
  Weight w{std::vector<int>(labels_.size(), 0)};
  w.coords[position(label)] = 1;
  return w;
}

Root RootDatum::highest_root(int label) const {
  const std::size_t p = position(label);
  const Root* best = nullptr;
  int best_height = -1;
  for (const auto& r : positive_) {
    if (r.coeffs[p] == 0) continue;
    const int h = std::accumulate(r.coeffs.begin(), r.coeffs.end(), 0);
    if (h > best_height) {
      best_height = h;
      best = &r;
    }
  }
  return *best;
}

RootDatum RootDatum::restrict_to(const std::vector<int>& keep) const {
  std::vector<std::size_t> pos;
  for (int l : keep) pos.push_back(position(l));
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  std::vector<std::vector<int>> c(pos.size(), std::vector<int>(pos.size()));
  std::vector<int> labels;
  for (std::size_t x = 0; x < pos.size(); ++x) {
    labels.push_back(labels_[pos[x]]);
    for (std::size_t y = 0; y < pos.size(); ++y) c[x][y] = cartan_[pos[x]][pos[y]];
  }
  return RootDatum(std::move(c), std::move(labels));
}

RootDatum RootDatum::delete_nodes(const std::vector<int>& drop) const {
  for (int l : drop) position(l);
  std::vector<int> keep;
  for (int l : labels_)
    if (std::find(drop.begin(), drop.end(), l) == drop.end()) keep.push_back(l);
  return restrict_to(keep);
}

RootDatum build_root_datum(const DynkinType& type) {
  const std::size_t n = static_cast<std::size_t>(type.rank());
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  std::vector<DiagramComponent> comps;
  std::size_t offset = 0;
  for (const auto& f : type.factors()) {
    const auto block = cartan_matrix(f);
    DiagramComponent dc{f, {}};
    for (std::size_t a = 0; a < block.size(); ++a) {
      dc.positions.push_back(offset + a);
      for (std::size_t b = 0; b < block.size(); ++b) c[offset + a][offset + b] = block[a][b];
    }
    comps.push_back(std::move(dc));
    offset += block.size();
  }
  return RootDatum(std::move(c), iota_labels(n), std::move(comps));
}

std::shared_ptr<const RootDatum> root_datum(const DynkinType& type) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const RootDatum>> cache;
  const std::string key = type.name();
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto datum = std::make_shared<const RootDatum>(build_root_datum(type));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(datum)).first->second;
}

int height(const RootDatum& datum, const HeightMap& sigma, const Root& beta) {
  int h = 0;
  for (int l : sigma.marked) h += beta.coeffs.at(datum.position(l));
  return h;
}

int height(const RootDatum& datum, int label, const Root& beta) {
  return beta.coeffs.at(datum.position(label));
}

int rh_dimension(const RootDatum& datum, const std::vector<int>& marked) {
  if (marked.empty()) return 0;
  std::vector<std::size_t> pos;
  for (int l : marked) pos.push_back(datum.position(l));
  int count = 0;
  for (const auto& r : datum.positive_roots()) {
    int h = 0;
    for (auto p : pos) h += r.coeffs[p];
    if (h > 0) ++count;
  }
  return count;
}

Weight restrict_weight(const RootDatum& datum, int label, const Weight& lambda) {
  const std::size_t p = datum.position(label);
  if (lambda.coords.size() != datum.rank()) throw ArgumentError("weight length mismatch");
  Weight w;
  for (std::size_t a = 0; a < lambda.coords.size(); ++a)
    if (a != p) w.coords.push_back(lambda.coords[a]);
  return w;
}

nlohmann::json to_json(const RootDatum& datum) {
  nlohmann::json j;
  j["type"] = datum.type().name();
  j["labels"] = datum.labels();
  j["cartan"] = datum.cartan();
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : datum.roots()) roots.push_back(r.coeffs);
  j["roots"] = roots;
  return j;
}

}  // namespace cstar
