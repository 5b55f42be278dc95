#include "ree2f4/hecke.hpp"

#include <array>
#include <stdexcept>

namespace ree2f4 {

namespace {

using Matrix = std::vector<std::vector<QPoly>>;

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const size_t n = a.size(), m = b[0].size(), k = b.size();
  Matrix r(n, std::vector<QPoly>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t t = 0; t < k; ++t) r[i][j] += a[i][t] * b[t][j];
  return r;
}

bool mat_zero(const Matrix& a) {
  for (const auto& row : a)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

Matrix mat_shift(Matrix a, const QPoly& s) {
  for (size_t i = 0; i < a.size(); ++i) a[i][i] += s;
  return a;
}

// One of S1 / S-1 / S0 with eps = +1 / -1 / 0.
HeckeRep two_dim(const std::string& name, int eps) {
  const QPoly q2 = QPoly::q().pow(2);
  const QPoly q4 = QPoly::q().pow(4);
  QPoly offdiag = q2 + QPoly(1);
  if (eps != 0)
    offdiag += QPoly::term(QS2(Rat(0), Rat(eps)), 1);  // eps * sqrt2 * q
  HeckeRep r;
  r.name = name;
  r.dim = 2;
  r.Ta = {{q2, QPoly()}, {offdiag, QPoly(-1)}};
  r.Tb = {{QPoly(-1), q2}, {QPoly(), q4}};
  return r;
}

HeckeRep one_dim(const std::string& name, const QPoly& a, const QPoly& b) {
  HeckeRep r;
  r.name = name;
  r.dim = 1;
  r.Ta = {{a}};
  r.Tb = {{b}};
  return r;
}

Int mod(const Int& x, const Int& ell) {
  Int r = x % ell;
  if (r < 0) r += ell;
  return r;
}

// Rank of an r x 2 matrix over F_ell (ell prime).
int rank2(std::vector<std::array<Int, 2>> rows, const Int& ell) {
  int rank = 0;
  for (int col = 0; col < 2 && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (size_t i = rank; i < rows.size(); ++i)
      if (rows[i][col] != 0) { pivot = static_cast<int>(i); break; }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      // eliminate via cross-multiplication (no inverses needed for rank)
      for (int c = 0; c < 2; ++c)
        rows[i][c] = mod(rows[i][c] * rows[rank][col] -
                             rows[rank][c] * rows[i][col], ell);
    }
    ++rank;
  }
  return rank;
}

struct ModRep {
  std::vector<std::vector<Int>> Ta, Tb;
};

ModRep reduce(const HeckeRep& rep, int n, const Int& ell) {
  ModRep m;
  const auto red = [&](const Matrix& src) {
    std::vector<std::vector<Int>> out(src.size());
    for (size_t i = 0; i < src.size(); ++i)
      for (const auto& e : src[i]) out[i].push_back(mod(e.eval_int(n), ell));
    return out;
  };
  m.Ta = red(rep.Ta);
  m.Tb = red(rep.Tb);
  return m;
}

}  // namespace

const std::vector<std::string>& hecke_row_order() {
  static const std::vector<std::string> order = {"ind", "sigma1", "S1", "S-1",
                                                 "S0",  "sigma2", "sgn"};
  return order;
}

HeckeRep build_rep(const std::string& name) {
  const QPoly q2 = QPoly::q().pow(2);
  const QPoly q4 = QPoly::q().pow(4);
  if (name == "ind") return one_dim(name, q2, q4);
  if (name == "sgn") return one_dim(name, QPoly(-1), QPoly(-1));
  if (name == "sigma1") return one_dim(name, QPoly(-1), q4);
  if (name == "sigma2") return one_dim(name, q2, QPoly(-1));
  if (name == "S1") return two_dim(name, 1);
  if (name == "S-1") return two_dim(name, -1);
  if (name == "S0") return two_dim(name, 0);
  throw std::invalid_argument("unknown Hecke representation: " + name);
}

bool check_hecke_relations(const HeckeRep& rep) {
  const QPoly q2 = QPoly::q().pow(2);
  const QPoly q4 = QPoly::q().pow(4);
  // (T - p)(T + 1) = 0 with p_a = q^2, p_b = q^4
  if (!mat_zero(mat_mul(mat_shift(rep.Ta, -q2), mat_shift(rep.Ta, QPoly(1)))))
    return false;
  if (!mat_zero(mat_mul(mat_shift(rep.Tb, -q4), mat_shift(rep.Tb, QPoly(1)))))
    return false;
  // braid relation of length 8: (Ta Tb)^4 = (Tb Ta)^4
  const Matrix ab = mat_mul(rep.Ta, rep.Tb);
  const Matrix ba = mat_mul(rep.Tb, rep.Ta);
  Matrix lhs = ab, rhs = ba;
  for (int i = 1; i < 4; ++i) {
    lhs = mat_mul(lhs, ab);
    rhs = mat_mul(rhs, ba);
  }
  for (size_t i = 0; i < lhs.size(); ++i)
    for (size_t j = 0; j < lhs.size(); ++j)
      if (lhs[i][j] != rhs[i][j]) return false;
  return true;
}

HeckeDecompMatrix hecke_decomposition(int n, const Int& ell) {
  if (ell < 3 || ell % 2 == 0)
    throw std::invalid_argument("hecke_decomposition: ell must be an odd prime");

  // The four 1-dimensional reductions, in row order, keyed by (Ta, Tb) value.
  struct OneDimClass {
    Int a, b;
    std::string label;  // first 1-dim rep with this reduction
  };
  std::vector<OneDimClass> classes;
  const auto class_label = [&](const Int& a, const Int& b) -> std::string {
    for (const auto& c : classes)
      if (c.a == a && c.b == b) return c.label;
    throw std::logic_error("composition factor outside 1-dim classes");
  };
  for (const auto& name : {"ind", "sigma1", "sigma2", "sgn"}) {
    const ModRep m = reduce(build_rep(name), n, ell);
    const Int a = m.Ta[0][0], b = m.Tb[0][0];
    bool seen = false;
    for (const auto& c : classes) seen = seen || (c.a == a && c.b == b);
    if (!seen) classes.push_back({a, b, name});
  }

  HeckeDecompMatrix result;
  result.rows = hecke_row_order();
  std::vector<std::vector<std::pair<std::string, int>>> row_factors;

  for (const auto& name : result.rows) {
    const HeckeRep rep = build_rep(name);
    const ModRep m = reduce(rep, n, ell);
    std::vector<std::pair<std::string, int>> factors;
    if (rep.dim == 1) {
      factors.emplace_back(class_label(m.Ta[0][0], m.Tb[0][0]), 1);
    } else {
      // Search for a common eigenvector: its eigenvalue pair must be one of
      // the 1-dim classes (the generators satisfy the quadratic relations).
      const Int tra = mod(m.Ta[0][0] + m.Ta[1][1], ell);
      const Int trb = mod(m.Tb[0][0] + m.Tb[1][1], ell);
      bool split = false;
      for (const auto& c : classes) {
        std::vector<std::array<Int, 2>> rows;
        rows.push_back({mod(m.Ta[0][0] - c.a, ell), m.Ta[0][1]});
        rows.push_back({m.Ta[1][0], mod(m.Ta[1][1] - c.a, ell)});
        rows.push_back({mod(m.Tb[0][0] - c.b, ell), m.Tb[0][1]});
        rows.push_back({m.Tb[1][0], mod(m.Tb[1][1] - c.b, ell)});
        if (rank2(rows, ell) < 2) {
          const std::string sub = c.label;
          const std::string quot =
              class_label(mod(tra - c.a, ell), mod(trb - c.b, ell));
          // deterministic within-row order: by 1-dim class appearance
          std::vector<std::string> ordered;
          for (const auto& cc : classes)
            if (cc.label == sub || cc.label == quot) ordered.push_back(cc.label);
          if (ordered.size() == 1) ordered.push_back(ordered[0]);  // sub == quot
          for (const auto& lab : ordered) {
            bool merged = false;
            for (auto& f : factors)
              if (f.first == lab) { f.second++; merged = true; }
            if (!merged) factors.emplace_back(lab, 1);
          }
          split = true;
          break;
        }
      }
      if (!split) factors.emplace_back("d2(" + name + ")", 1);
    }
    row_factors.push_back(std::move(factors));
  }

  // Column order: first appearance scanning rows.
  for (const auto& factors : row_factors)
    for (const auto& [lab, mult] : factors) {
      bool seen = false;
      for (const auto& c : result.cols) seen = seen || (c == lab);
      if (!seen) result.cols.push_back(lab);
    }
  for (const auto& factors : row_factors) {
    std::vector<int> row(result.cols.size(), 0);
    for (const auto& [lab, mult] : factors)
      for (size_t j = 0; j < result.cols.size(); ++j)
        if (result.cols[j] == lab) row[j] = mult;
    result.entries.push_back(std::move(row));
  }
  return result;
}

const std::map<std::string, std::string>& fitting_labels() {
  static const std::map<std::string, std::string> labels = {
      {"ind", "chi1"},    {"sigma1", "chi4"}, {"S1", "chi5"}, {"S-1", "chi6"},
      {"S0", "chi7"},     {"sigma2", "chi18"}, {"sgn", "chi21"}};
  return labels;
}

}  // namespace ree2f4
