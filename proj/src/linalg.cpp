#include "binom/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "binom/io.hpp"

namespace binom {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
// Below this many rows the fork/join costs more than the row updates.
constexpr std::size_t kParallelRows = 24;

SparseRow strip_zeros(const SparseRow& r) {
  SparseRow out;
  out.reserve(r.size());
  for (const auto& e : r)
    if (!e.second.is_zero()) out.push_back(e);
  return out;
}

}  // namespace

SparseRow row_sub_scaled(const SparseRow& a, const Scalar& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Scalar v = a[i].second - f * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseRow row_scaled(const SparseRow& a, const Scalar& f) {
  if (f.is_zero()) return {};
  SparseRow out;
  out.reserve(a.size());
  for (const auto& [c, v] : a) out.emplace_back(c, v * f);
  return out;
}

Scalar row_entry(const SparseRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == col) return it->second;
  return Scalar();
}

RrefResult rref(const SparseMatrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows.size());
  for (const auto& r : m.rows) {
    SparseRow s = strip_zeros(r);
    if (!s.empty()) rows.push_back(std::move(s));
  }
  const std::size_t n = rows.size();
  std::vector<char> is_pivot(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (column, row)

  while (true) {
    std::size_t best = kNone;
    for (std::size_t r = 0; r < n; ++r) {
      if (is_pivot[r] || rows[r].empty()) continue;
      if (best == kNone || rows[r][0].first < rows[best][0].first ||
          (rows[r][0].first == rows[best][0].first && rows[r].size() < rows[best].size()))
        best = r;
    }
    if (best == kNone) break;
    const std::size_t col = rows[best][0].first;
    rows[best] = row_scaled(rows[best], rows[best][0].second.inv());
    is_pivot[best] = 1;
    pivots.emplace_back(col, best);
    const SparseRow& prow = rows[best];

#pragma omp parallel for schedule(dynamic) if (n >= kParallelRows)
    for (std::size_t r = 0; r < n; ++r) {
      if (r == best) continue;
      const Scalar v = row_entry(rows[r], col);
      if (v.is_zero()) continue;
      rows[r] = row_sub_scaled(rows[r], v, prow);
    }
  }

  std::sort(pivots.begin(), pivots.end());
  RrefResult out;
  out.reduced.ncols = m.ncols;
  for (const auto& [col, r] : pivots) {
    out.pivots.push_back(col);
    out.reduced.rows.push_back(std::move(rows[r]));
  }
  return out;
}

RrefResult rref_reference(const SparseMatrix& m) {
  std::vector<std::vector<Scalar>> a(m.rows.size(), std::vector<Scalar>(m.ncols));
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (const auto& [c, v] : m.rows[i]) a[i][c] = v;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < m.ncols && rank < a.size(); ++col) {
    std::size_t p = rank;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    const Scalar inv = a[rank][col].inv();
    for (auto& x : a[rank]) x = x * inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][col].is_zero()) continue;
      const Scalar f = a[i][col];
      for (std::size_t j = 0; j < m.ncols; ++j) a[i][j] = a[i][j] - f * a[rank][j];
    }
    pivots.push_back(col);
    ++rank;
  }
  RrefResult out;
  out.reduced.ncols = m.ncols;
  out.pivots = pivots;
  for (std::size_t i = 0; i < rank; ++i) {
    SparseRow r;
    for (std::size_t j = 0; j < m.ncols; ++j)
      if (!a[i][j].is_zero()) r.emplace_back(j, a[i][j]);
    out.reduced.rows.push_back(std::move(r));
  }
  return out;
}

CoefficientMatrix linearize(const std::vector<Polynomial>& polys, MonomialOrder order) {
  CoefficientMatrix m;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (const auto& p : polys)
    for (const auto& [mono, c] : p.terms())
      if (index.emplace(mono, 0).second) m.legend.push_back(mono);
  std::sort(m.legend.begin(), m.legend.end(),
            [order](const Monomial& a, const Monomial& b) { return compare(order, a, b) > 0; });
  for (std::size_t i = 0; i < m.legend.size(); ++i) index[m.legend[i]] = i;
  for (const auto& p : polys) {
    SparseRow row;
    for (const auto& [mono, c] : p.terms()) row.emplace_back(index.at(mono), c);
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    m.rows.push_back(std::move(row));
  }
  return m;
}

CoefficientMatrix linearize(const PolySystem& sys) { return linearize(sys.generators, sys.ring.order); }

CoefficientMatrix rref(const CoefficientMatrix& m) {
  CoefficientMatrix out;
  out.legend = m.legend;
  out.rows = rref(m.sparse()).reduced.rows;
  return out;
}

Polynomial row_polynomial(const SparseRow& row, const std::vector<Monomial>& legend) {
  Polynomial p;
  for (const auto& [c, v] : row) p.add_term(legend.at(c), v);
  return p;
}

std::vector<Polynomial> row_polynomials(const CoefficientMatrix& m) {
  std::vector<Polynomial> out;
  out.reserve(m.rows.size());
  for (const auto& r : m.rows) out.push_back(row_polynomial(r, m.legend));
  return out;
}

PkbResult pkb_test(const CoefficientMatrix& m) {
  PkbResult res;
  res.reduced = rref(m);
  const auto& rows = res.reduced.rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() <= 2) continue;
    PkbWitness w;
    w.row_index = i;
    w.row = rows[i];
    for (const auto& e : rows[i]) w.monomials.push_back(m.legend[e.first]);
    res.witness = std::move(w);
    return res;
  }

  // A two-entry row e_p + a*e_c ties pivot p to free column c; the block of
  // c is the kernel vector with v_c = 1 and v_p = -a for every such p.
  const std::size_t n = m.ncols();
  std::vector<char> pivot(n, 0);
  for (const auto& r : rows) pivot[r[0].first] = 1;
  std::vector<SparseRow> block(n);
  PartitionBasis basis;
  for (const auto& r : rows) {
    if (r.size() == 1) {
      basis.coloops.push_back(r[0].first);
      continue;
    }
    block[r[1].first].emplace_back(r[0].first, -r[1].second);
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot[c]) continue;
    SparseRow v = std::move(block[c]);
    v.emplace_back(c, Scalar(1));
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    basis.blocks.push_back(std::move(v));
  }
  std::sort(basis.coloops.begin(), basis.coloops.end());
  if (!verify_partition_basis(m, basis)) throw std::logic_error("partition basis failed verification");
  res.basis = std::move(basis);
  return res;
}

bool verify_partition_basis(const CoefficientMatrix& m, const PartitionBasis& basis) {
  const std::size_t rank = rref(m.sparse()).reduced.rows.size();
  if (basis.blocks.size() != m.ncols() - rank) return false;
  std::vector<char> used(m.ncols(), 0);
  for (const auto& v : basis.blocks) {
    if (v.empty()) return false;
    for (const auto& [c, x] : v) {
      if (c >= m.ncols() || used[c] || x.is_zero()) return false;
      used[c] = 1;
    }
    for (const auto& row : m.rows) {
      Scalar dot;
      for (const auto& [c, x] : row) dot += x * row_entry(v, c);
      if (!dot.is_zero()) return false;
    }
  }
  for (std::size_t c : basis.coloops)
    if (c >= m.ncols() || used[c]) return false;
  return true;
}

std::vector<Polynomial> binomials_from_pkb(const CoefficientMatrix& reduced, const PartitionBasis& basis) {
  if (basis.blocks.size() + reduced.rows.size() != reduced.ncols())
    throw std::invalid_argument("partition basis does not match the reduced matrix");
  for (const auto& r : reduced.rows)
    if (r.size() > 2) throw std::invalid_argument("row with more than two entries");
  return row_polynomials(reduced);
}

PruneResult prune_redundant_generators(const PolySystem& sys) {
  const CoefficientMatrix a = linearize(sys);
  const std::size_t s = sys.generators.size();
  std::vector<std::size_t> order(s);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const auto& f = sys.generators[i];
    const auto& g = sys.generators[j];
    if (f.is_binomial() != g.is_binomial()) return f.is_binomial();
    return f.size() < g.size();
  });

  // Gauss-Jordan basis of kept rows, each carrying its combination of inputs.
  struct BasisRow {
    std::size_t pivot;
    SparseRow values;
    SparseRow combo;
  };
  std::vector<BasisRow> basis;
  PruneResult res;
  for (std::size_t i : order) {
    SparseRow v = a.rows[i];
    SparseRow combo{{i, Scalar(1)}};
    for (const auto& b : basis) {
      const Scalar x = row_entry(v, b.pivot);
      if (x.is_zero()) continue;
      v = row_sub_scaled(v, x, b.values);
      combo = row_sub_scaled(combo, x, b.combo);
    }
    if (v.empty()) {
      LinearRelation rel;
      rel.dropped = i;
      for (const auto& [j, c] : combo)
        if (j != i) rel.combination.emplace_back(j, -c);
      res.relations.push_back(std::move(rel));
      continue;
    }
    const Scalar inv = v[0].second.inv();
    BasisRow nb{v[0].first, row_scaled(v, inv), row_scaled(combo, inv)};
    for (auto& b : basis) {
      const Scalar x = row_entry(b.values, nb.pivot);
      if (x.is_zero()) continue;
      b.values = row_sub_scaled(b.values, x, nb.values);
      b.combo = row_sub_scaled(b.combo, x, nb.combo);
    }
    basis.push_back(std::move(nb));
    res.kept.push_back(i);
  }
  std::sort(res.kept.begin(), res.kept.end());
  std::sort(res.relations.begin(), res.relations.end(),
            [](const auto& x, const auto& y) { return x.dropped < y.dropped; });
  res.system.ring = sys.ring;
  for (std::size_t i : res.kept) {
    res.system.generators.push_back(sys.generators[i]);
    if (!sys.labels.empty()) res.system.labels.push_back(sys.labels[i]);
  }
  return res;
}

std::optional<SparseRow> sparse_vector_in_rowspace(const SparseMatrix& m, std::size_t bound) {
  if (bound == 0 || bound > 2) throw std::invalid_argument("support bound must be 1 or 2");
  std::vector<std::vector<std::size_t>> supports;
  if (bound == 1 || m.ncols == 1) {
    for (std::size_t c = 0; c < m.ncols; ++c) supports.push_back({c});
  } else {
    for (std::size_t i = 0; i < m.ncols; ++i)
      for (std::size_t j = i + 1; j < m.ncols; ++j) supports.push_back({i, j});
  }

  // Move the support columns last; a row-space vector lives on them iff
  // some RREF row pivots there.
  std::vector<std::optional<SparseRow>> found(supports.size());
  std::atomic<std::size_t> first{kNone};
  const long count = static_cast<long>(supports.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    if (static_cast<std::size_t>(k) > first.load()) continue;
    const auto& sup = supports[k];
    std::vector<std::size_t> to_new(m.ncols), to_old(m.ncols);
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.ncols; ++c)
      if (std::find(sup.begin(), sup.end(), c) == sup.end()) to_new[c] = next++;
    for (std::size_t c : sup) to_new[c] = next++;
    for (std::size_t c = 0; c < m.ncols; ++c) to_old[to_new[c]] = c;
    SparseMatrix p{m.ncols, {}};
    for (const auto& r : m.rows) {
      SparseRow q;
      for (const auto& [c, v] : r) q.emplace_back(to_new[c], v);
      std::sort(q.begin(), q.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      p.rows.push_back(std::move(q));
    }
    const RrefResult red = rref(p);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      if (red.pivots[i] < m.ncols - sup.size()) continue;
      SparseRow v;
      for (const auto& [c, x] : red.reduced.rows[i]) v.emplace_back(to_old[c], x);
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      found[k] = std::move(v);
      std::size_t cur = first.load();
      while (static_cast<std::size_t>(k) < cur && !first.compare_exchange_weak(cur, k)) {
      }
      break;
    }
  }
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

std::string dump_matrix(const CoefficientMatrix& m, const Ring& ring) {
  std::ostringstream os;
  os << "legend:";
  for (const auto& mono : m.legend) os << ' ' << to_string(mono, ring);
  os << "\nrows: " << m.rows.size() << '\n';
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (const auto& [c, v] : m.rows[i]) os << i << ' ' << c << ' ' << v.to_string(ring.params) << '\n';
  return os.str();
}

CoefficientMatrix parse_matrix_dump(const std::string& text, const Ring& ring) {
  CoefficientMatrix m;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "legend:") {
      std::string tok;
      while (ls >> tok) {
        const Polynomial p = parse_polynomial(tok, ring, lineno);
        if (p.size() != 1) throw ParseError(lineno, 1, "legend entry '" + tok + "' is not a monomial");
        m.legend.push_back(p.terms().begin()->first);
      }
      continue;
    }
    if (head == "rows:") {
      std::size_t n = 0;
      ls >> n;
      if (m.rows.size() < n) m.rows.resize(n);
      continue;
    }
    std::size_t r = 0, c = 0;
    try {
      r = std::stoul(head);
    } catch (const std::exception&) {
      throw ParseError(lineno, 1, "expected a row index");
    }
    if (!(ls >> c)) throw ParseError(lineno, 1, "expected a column index");
    if (c >= m.legend.size()) throw ParseError(lineno, 1, "column out of range");
    std::string rest;
    std::getline(ls, rest);
    const Scalar v = parse_scalar(rest, ring.params);
    if (m.rows.size() <= r) m.rows.resize(r + 1);
    if (!v.is_zero()) m.rows[r].emplace_back(c, v);
  }
  for (auto& row : m.rows)
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return m;
}

}  // namespace binom
