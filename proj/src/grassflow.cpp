#include "cstar/grassflow.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cstar/errors.hpp"
#include "cstar/json_io.hpp"

namespace cstar {

namespace {

QMatrix select_rows(const QMatrix& m, const std::vector<std::size_t>& rows) {
  QMatrix out(rows.size(), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(rows[r], c);
  return out;
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& rows, std::size_t total) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < total; ++r)
    if (std::find(rows.begin(), rows.end(), r) == rows.end()) out.push_back(r);
  return out;
}

// dim(p ∩ span{e_r : r in rows})
int intersection_dim(const QMatrix& basis, const std::vector<std::size_t>& rows) {
  const auto others = complement(rows, basis.rows());
  if (others.empty()) return static_cast<int>(basis.cols());
  return static_cast<int>(basis.cols() - select_rows(basis, others).rank());
}

void require_compatible(const GrassPoint& p, const FlowSpec& f) {
  if (p.ambient_dim != f.ambient_dim())
    throw ArgumentError("point has ambient dimension " + std::to_string(p.ambient_dim) + " but the " +
                        model_name(f.model) + " model with n = " + std::to_string(f.n) + " has " +
                        std::to_string(f.ambient_dim()));
  if (p.form != model_form(f.model))
    throw ArgumentError("point carries the wrong bilinear form for the " + model_name(f.model) + " model");
}

int block_weight(const FlowSpec& f, int block) {
  const auto b = f.blocks();
  return b[block].empty() ? 0 : f.weights[b[block].front()];
}

int moment(const FlowSpec& f, const std::array<int, 3>& profile) {
  int w = 0;
  for (int b = 0; b < 3; ++b) w += block_weight(f, b) * profile[b];
  return w;
}

std::array<int, 3> profile_of(const GrassPoint& p, const FlowSpec& f) {
  const auto b = f.blocks();
  std::array<int, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = b[i].empty() ? 0 : intersection_dim(p.basis, b[i]);
  return out;
}

bool has_two_families(const FlowSpec& f, int k) {
  return (f.model == Model::D || f.model == Model::Dq) && k == f.n;
}

// 0 when p lies in the family of span(e_0, ..., e_{n-1}), 1 otherwise.
int family_of(const GrassPoint& p, int n) {
  std::vector<std::size_t> rows;
  for (int r = 0; r < n; ++r) rows.push_back(static_cast<std::size_t>(r));
  return (n - intersection_dim(p.basis, rows)) % 2;
}

int component_dimension(const FlowSpec& f, const std::array<int, 3>& pr) {
  const int n = f.n, a = pr[0], c = pr[1], b = pr[2];
  switch (f.model) {
    case Model::A:
      return a * (n - a) + b * (n - b);
    case Model::C:
    case Model::D:
      return a * (n - b - a) + (n - b) * b;
    case Model::B:
    case Model::Dq: {
      const int m = static_cast<int>(f.blocks()[1].size());
      return c * (m - c) - c * (c + 1) / 2;
    }
  }
  return 0;
}

void attach_dynkin(ComponentDescriptor& d, const FlowSpec& f, int k, int family) {
  const int n = f.n;
  auto set = [&](Family fam, int rank, int i, int node) {
    try {
      validate_factor({fam, rank});
    } catch (const ArgumentError&) {
      return;
    }
    d.ambient = DynkinType(fam, rank);
    d.grading_node = i;
    d.variety_node = node;
  };
  switch (f.model) {
    case Model::A:
      if (k <= 2 * n - 1) set(Family::A, 2 * n - 1, n, k);
      break;
    case Model::B:
      set(Family::B, n, 1, k);
      break;
    case Model::C:
      set(Family::C, n, n, k);
      break;
    case Model::D:
    case Model::Dq: {
      const int i = f.model == Model::D ? n : 1;
      if (k <= n - 2)
        set(Family::D, n, i, k);
      else if (k == n)
        set(Family::D, n, i, family == 0 ? n : n - 1);
      break;
    }
  }
}

QMatrix coordinate_basis(int ambient, const std::vector<std::size_t>& coords) {
  QMatrix m(ambient, coords.size());
  for (std::size_t j = 0; j < coords.size(); ++j) m(coords[j], j) = 1;
  return m;
}

}  // namespace

std::string model_name(Model m) {
  switch (m) {
    case Model::A: return "A";
    case Model::B: return "B";
    case Model::C: return "C";
    case Model::D: return "D";
    case Model::Dq: return "Dq";
  }
  return "?";
}

Model parse_model(const std::string& s) {
  std::string u;
  for (char ch : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  if (u == "A") return Model::A;
  if (u == "B") return Model::B;
  if (u == "C") return Model::C;
  if (u == "D") return Model::D;
  if (u == "DQ") return Model::Dq;
  throw ArgumentError("unknown model '" + s + "' (expected A, B, C, D or Dq)");
}

std::array<std::vector<std::size_t>, 3> FlowSpec::blocks() const {
  std::array<std::vector<std::size_t>, 3> out;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const int w = weights[j];
    if (action == Action::HnSplit)
      out[w == 1 ? 0 : 2].push_back(j);
    else
      out[w == 1 ? 0 : w == 0 ? 1 : 2].push_back(j);
  }
  return out;
}

FlowSpec flow_spec(Model m, int n) {
  if (n < 1) throw ArgumentError("model size n must be at least 1");
  if ((m == Model::B || m == Model::Dq) && n < 2) throw ArgumentError("quadric models need n >= 2");
  FlowSpec f{m, Action::HnSplit, n, {}};
  if (m == Model::B || m == Model::Dq) {
    f.action = Action::H1Quadric;
    f.weights.assign(m == Model::B ? 2 * n + 1 : 2 * n, 0);
    f.weights[0] = 1;
    f.weights[n] = -1;
  } else {
    f.weights.assign(2 * n, 0);
    std::fill(f.weights.begin(), f.weights.begin() + n, 1);
  }
  return f;
}

FormTag model_form(Model m) {
  switch (m) {
    case Model::A: return FormTag::None;
    case Model::C: return FormTag::Skew;
    default: return FormTag::Symmetric;
  }
}

QMatrix form_matrix(FormTag tag, int ambient_dim) {
  if (tag == FormTag::None) throw ArgumentError("no bilinear form attached");
  if (ambient_dim < 1) throw ArgumentError("ambient dimension must be positive");
  if (tag == FormTag::Skew && ambient_dim % 2 != 0) throw ArgumentError("skew form needs even dimension");
  const std::size_t h = static_cast<std::size_t>(ambient_dim / 2);
  QMatrix q(ambient_dim, ambient_dim);
  for (std::size_t j = 0; j < h; ++j) {
    q(j, h + j) = 1;
    q(h + j, j) = tag == FormTag::Skew ? -1 : 1;
  }
  if (ambient_dim % 2 != 0) q(2 * h, 2 * h) = 1;
  return q;
}

GrassPoint make_point(const QMatrix& basis, FormTag form) {
  if (basis.rows() == 0 || basis.cols() == 0 || basis.cols() > basis.rows())
    throw ArgumentError("basis must be an N x k matrix with 1 <= k <= N");
  if (basis.rank() != basis.cols()) throw PreconditionError("basis columns are linearly dependent");
  if (form != FormTag::None) {
    const QMatrix q = form_matrix(form, static_cast<int>(basis.rows()));
    if (!(basis.transpose() * q * basis).is_zero()) throw PreconditionError("subspace is not isotropic");
  }
  return {static_cast<int>(basis.rows()), static_cast<int>(basis.cols()), basis, form};
}

bool same_point(const GrassPoint& p, const GrassPoint& q) {
  return p.ambient_dim == q.ambient_dim && p.k == q.k && same_column_span(p.basis, q.basis);
}

GrassPoint act(const GrassPoint& p, const FlowSpec& f, const Rational& t) {
  require_compatible(p, f);
  if (t == 0) throw ArgumentError("the flow parameter must be nonzero");
  GrassPoint out = p;
  for (std::size_t r = 0; r < p.basis.rows(); ++r) {
    const int w = f.weights[r];
    const Rational s = w == 1 ? t : w == -1 ? Rational(1 / t) : Rational(1);
    for (std::size_t c = 0; c < p.basis.cols(); ++c) out.basis(r, c) *= s;
  }
  return out;
}

bool is_fixed(const GrassPoint& p, const FlowSpec& f) {
  require_compatible(p, f);
  const auto pr = profile_of(p, f);
  return pr[0] + pr[1] + pr[2] == p.k;
}

GrassPoint flow_limit(const GrassPoint& p, const FlowSpec& f, Direction d) {
  require_compatible(p, f);
  auto blocks = f.blocks();
  if (d == Direction::Infinity) std::swap(blocks[0], blocks[2]);

  QMatrix result(p.ambient_dim, 0);
  std::vector<std::size_t> dominant;
  for (const auto& block : blocks) {
    if (block.empty()) continue;
    // the part of p with no component along the more dominant blocks
    const QMatrix kernel = dominant.empty() ? QMatrix::identity(p.basis.cols())
                                            : select_rows(p.basis, dominant).nullspace();
    if (kernel.cols() > 0) {
      const QMatrix leading = column_span_basis(select_rows(p.basis, block) * kernel);
      QMatrix embedded(p.ambient_dim, leading.cols());
      for (std::size_t r = 0; r < block.size(); ++r)
        for (std::size_t c = 0; c < leading.cols(); ++c) embedded(block[r], c) = leading(r, c);
      result = hstack(result, embedded);
    }
    dominant.insert(dominant.end(), block.begin(), block.end());
  }
  if (static_cast<int>(result.cols()) != p.k) throw std::logic_error("flow limit lost dimension");
  return make_point(result, p.form);
}

std::vector<GrassPoint> coordinate_fixed_points(const FlowSpec& f, int k) {
  const auto blocks = f.blocks();
  const int na = static_cast<int>(blocks[0].size()), nc = static_cast<int>(blocks[1].size()),
            nb = static_cast<int>(blocks[2].size());
  const int n = f.n, N = f.ambient_dim();
  const bool isotropic = f.model != Model::A;
  if (k < 1 || k > (isotropic ? n : N)) throw ArgumentError("subspace dimension out of range for the model");

  std::vector<GrassPoint> out;
  for (int a = 0; a <= std::min(k, na); ++a)
    for (int b = 0; b <= std::min(k - a, nb); ++b) {
      const int c = k - a - b;
      if (c > nc) continue;
      std::vector<std::vector<std::size_t>> variants;
      if (f.action == Action::HnSplit) {
        if (isotropic && a + b > n) continue;
        std::vector<std::size_t> coords;
        for (int j = 0; j < a; ++j) coords.push_back(j);
        for (int j = 0; j < b; ++j) coords.push_back(N - b + j);
        variants.push_back(coords);
      } else {
        if (a == 1 && b == 1) continue;
        if (c > n - 1) continue;
        std::vector<std::size_t> coords;
        if (a == 1) coords.push_back(0);
        if (b == 1) coords.push_back(n);
        for (int j = 1; j <= c; ++j) coords.push_back(j);
        variants.push_back(coords);
        if (f.model == Model::Dq && c == n - 1 && c >= 1) {
          auto other = coords;
          std::replace(other.begin(), other.end(), static_cast<std::size_t>(n - 1),
                       static_cast<std::size_t>(2 * n - 1));
          variants.push_back(other);
        }
      }
      for (auto& coords : variants) {
        std::sort(coords.begin(), coords.end());
        out.push_back(make_point(coordinate_basis(N, coords), model_form(f.model)));
      }
    }
  return out;
}

ComponentDescriptor component_membership(const GrassPoint& p, const FlowSpec& f) {
  require_compatible(p, f);
  if (!is_fixed(p, f)) throw PreconditionError("point is not fixed by the flow");
  ComponentDescriptor d{};
  d.profile = profile_of(p, f);
  const bool families = has_two_families(f, p.k);
  const int family = families ? family_of(p, f.n) : 0;

  std::vector<int> moments;
  for (const auto& q : coordinate_fixed_points(f, p.k))
    if (!families || family_of(q, f.n) == family) moments.push_back(moment(f, profile_of(q, f)));
  const int w_max = *std::max_element(moments.begin(), moments.end());
  const int w_min = *std::min_element(moments.begin(), moments.end());
  // moments of one family differ by a fixed step (2 for maximal isotropic D)
  int step = 0;
  for (int m : moments) step = std::gcd(step, w_max - m);
  const int w = moment(f, d.profile);
  d.mu = step == 0 ? 0 : (w_max - w) / step;
  d.sink = w == w_max;
  d.source = w == w_min;
  d.dim = component_dimension(f, d.profile);
  attach_dynkin(d, f, p.k, family);
  return d;
}

ChartInverseResult chart_inverse_check(const QMatrix& b, Model m, int n) {
  if (m != Model::A && m != Model::C && m != Model::D)
    throw ArgumentError("chart inversion is defined for the split models A, C and D");
  if (n < 1 || b.rows() != static_cast<std::size_t>(n) || b.cols() != static_cast<std::size_t>(n))
    throw ArgumentError("chart coordinate must be an n x n matrix");
  if (m == Model::C && !b.is_symmetric()) throw PreconditionError("model C needs a symmetric matrix");
  if (m == Model::D && !b.is_skew()) throw PreconditionError("model D needs a skew-symmetric matrix");

  const FlowSpec f = flow_spec(m, n);
  const GrassPoint p = make_point(vstack(QMatrix::identity(n), b), model_form(m));

  ChartInverseResult r{};
  r.invertible = b.rank() == static_cast<std::size_t>(n);
  r.source_limit = component_membership(flow_limit(p, f, Direction::Infinity), f);
  if (r.invertible) {
    const QMatrix span = column_span_basis(p.basis);
    const QMatrix bottom = span.block(n, 0, n, n);
    r.source_coordinate = span.block(0, 0, n, n) * bottom.inverse();
    r.matches_inverse = r.source_coordinate == b.inverse();
    r.ok = r.matches_inverse && r.source_limit.source;
  } else {
    r.ok = !r.source_limit.source;
  }
  return r;
}

nlohmann::json to_json(const GrassPoint& p) {
  static const char* forms[] = {"none", "symmetric", "skew"};
  return {{"ambient_dim", p.ambient_dim},
          {"k", p.k},
          {"form", forms[static_cast<int>(p.form)]},
          {"basis", matrix_to_json(p.basis)}};
}

nlohmann::json to_json(const ComponentDescriptor& c) {
  nlohmann::json j{{"profile", c.profile}, {"mu", c.mu},       {"dim", c.dim},
                   {"sink", c.sink},       {"source", c.source}, {"ambient", nullptr}};
  if (c.ambient)
    j["ambient"] = {{"type", c.ambient->name()}, {"i", c.grading_node}, {"k", c.variety_node}};
  return j;
}

nlohmann::json to_json(const ChartInverseResult& r) {
  nlohmann::json j{{"invertible", r.invertible},
                   {"source_coordinate", nullptr},
                   {"matches_inverse", r.matches_inverse},
                   {"source_limit", to_json(r.source_limit)},
                   {"ok", r.ok}};
  if (r.invertible) j["source_coordinate"] = matrix_to_json(r.source_coordinate);
  return j;
}

}  // namespace cstar
