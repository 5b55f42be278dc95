#include "ree2f4/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ree2f4 {

namespace {

QS2 qs2_abs(const QS2& v) { return v.sign() < 0 ? -v : v; }

Int to_int(const QS2& v, const std::string& where) {
  if (v.irr() != 0 || denominator(v.rat()) != 1)
    throw std::runtime_error(where + ": not an integer: " + v.str());
  return numerator(v.rat());
}

Int ceil_div(const Int& num, const Int& den) {
  Int q = num / den;  // truncated
  if (q * den < num) ++q;
  return q;
}

/// entry = c0 + sum coeff_u * u with integer coefficients; anything else
/// (q-dependent coefficients, products of unknowns) is rejected.
struct AffineEntry {
  Int c0;
  std::map<std::string, Int> coeffs;
};

AffineEntry to_affine(const SymPoly& e, const std::string& where) {
  AffineEntry a;
  a.c0 = 0;
  for (const auto& [mono, c] : e.terms()) {
    if (c.degree() != 0 || c.low() != 0)
      throw std::runtime_error(where + ": q-dependent entry: " + e.str());
    Int v = to_int(c.coeff(0), where);
    if (mono.empty()) {
      a.c0 = v;
    } else if (mono.size() == 1 && mono.begin()->second == 1) {
      a.coeffs[mono.begin()->first] = v;
    } else {
      throw std::runtime_error(where + ": nonlinear entry: " + e.str());
    }
  }
  return a;
}

/// Smallest attainable L = ell^f is 3 (ell = 3, f = 1); "always present"
/// demands positive count at every integer L in [3, 2000] plus a positive
/// leading coefficient (the counts have degree <= 2, so no sign change can
/// occur past the scanned range).
bool count_always_positive(const SymPoly& count) {
  std::vector<QS2> coeffs;  // count as a polynomial in L
  for (const auto& [mono, c] : count.terms()) {
    int deg = mono.empty() ? 0 : mono.begin()->second;
    if (!mono.empty() && (mono.size() != 1 || mono.begin()->first != "L"))
      throw std::runtime_error("count not a polynomial in L: " + count.str());
    if (c.degree() != 0 || c.low() != 0)
      throw std::runtime_error("count depends on q: " + count.str());
    if (static_cast<size_t>(deg) >= coeffs.size())
      coeffs.resize(deg + 1, QS2(0));
    coeffs[deg] = c.coeff(0);
  }
  if (coeffs.empty() || coeffs.back().sign() <= 0) return false;
  if (coeffs.size() > 3)
    throw std::runtime_error("count degree > 2: " + count.str());
  for (int L = 3; L <= 2000; ++L) {
    QS2 v(0);
    QS2 p(1);
    for (const QS2& c : coeffs) {
      v += c * p;
      p *= QS2(L);
    }
    if (v.sign() <= 0) return false;
  }
  return true;
}

}  // namespace

bool positive_for_all_n(const QPoly& p, int n0) {
  if (p.is_zero()) return false;
  const int tail_n = std::max(n0, 10);
  for (int n = n0; n < tail_n; ++n)
    if (p.eval(n).sign() <= 0) return false;
  // q = 2^n sqrt(2) with n >= tail_n is t * q0 with t = 2^(n - tail_n) >= 1;
  // if lead > rest at q0, then for larger n the top term scales by t^deg
  // while the rest scales by at most t^(deg-1).
  const int d = p.degree();
  if (p.leading().sign() <= 0) return false;
  QS2 q0 = QPoly::q().eval(tail_n);
  QS2 lead = p.leading();
  for (int k = 0; k < d; ++k) lead *= q0;
  for (int k = 0; k > d; --k) lead /= q0;
  QS2 rest(0);
  for (int k = p.low(); k < d; ++k) {
    QS2 c = p.coeff(k);
    if (c.is_zero()) continue;
    QS2 t = qs2_abs(c);
    if (k >= 0) {
      for (int i = 0; i < k; ++i) t *= q0;
    } else {
      for (int i = 0; i < -k; ++i) t /= q0;
    }
    rest += t;
  }
  return (lead - rest).sign() > 0;
}

MultVector pim_multiplicities(
    const DecompMatrixData& mat,
    const std::function<Cell(const std::string& chi)>& scalar) {
  auto basic = mat.basic_rows();
  MultVector mv;
  mv.known.assign(basic.size(), true);
  mv.m.assign(basic.size(), SymPoly());
  for (size_t i = 0; i < basic.size(); ++i) {
    Cell s = scalar(basic[i]->label);
    if (s.star) {
      mv.known[i] = false;
      continue;
    }
    SymPoly v = s.value;
    bool ok = true;
    for (size_t k = 0; k < i; ++k) {
      const Cell& d = basic[i]->entries[k];
      if (d.star)
        throw std::runtime_error("basic row " + basic[i]->label +
                                 " has an undetermined entry");
      if (d.value.is_zero()) continue;
      if (!mv.known[k]) {
        ok = false;
        break;
      }
      v -= mv.m[k] * d.value;
    }
    if (!ok)
      mv.known[i] = false;
    else
      mv.m[i] = std::move(v);
  }
  return mv;
}

std::function<Cell(const std::string&)> projective_column(
    const BlockData& data, PrimeCase c, const std::string& label) {
  const ScalarTable& s = data.scalars(c);
  if (std::find(s.psis.begin(), s.psis.end(), label) != s.psis.end()) {
    int j = s.psi_index(label);
    return [&s, j](const std::string& chi) -> Cell {
      for (size_t i = 0; i < s.chis.size(); ++i)
        if (s.chis[i] == chi) return s.cells[i][j];
      return Cell::zero();
    };
  }
  for (const auto& p : data.extra_projectives(c))
    if (p.label == label)
      return [&p](const std::string& chi) { return p.product(chi); };
  throw std::invalid_argument("no projective " + label + " in case " +
                              case_name(c));
}

QPoly lower_substitute(const SymPoly& expr, const BoundsTable& bounds,
                       int n, const Int& ell) {
  QPoly out;
  for (const auto& [mono, c] : expr.terms()) {
    if (mono.empty()) {
      out += c;
      continue;
    }
    // Split the coefficient by the sign of each q-power.
    for (int k = c.low(); k <= c.degree(); ++k) {
      QS2 ck = c.coeff(k);
      int sgn = ck.sign();
      if (sgn == 0) continue;
      QPoly term = QPoly::term(ck, k);
      for (const auto& [u, e] : mono) {
        const BoundRow* br = bounds.find(u);
        if (!br) throw std::runtime_error("no bounds for unknown " + u);
        QPoly b = sgn > 0 ? bounds.lower_at(u, n, ell) : br->upper;
        term *= b.pow(e);
      }
      out += term;
    }
  }
  return out;
}

// ----------------------------------------------------------------- rows

const std::vector<BoundEngine::EntryRow>& BoundEngine::case_rows(
    PrimeCase c) const {
  auto it = rows_.find(c);
  if (it != rows_.end()) return it->second;

  // Lower bounds come from the non-negativity of the *determined* entries
  // of the continued rows; undetermined ("*") entries carry no constraint
  // that is encoded in the tables, so they are skipped even though the
  // relation expansion could reconstruct them.
  std::vector<EntryRow> rows;
  for (const MatrixRow& mr : data_.matrix(c).rows) {
    if (mr.basic) continue;
    EntryRow r;
    r.label = mr.label;
    for (const Cell& cell : mr.entries) {
      r.usable.push_back(!cell.star);
      r.entries.push_back(cell.star ? SymPoly() : cell.value);
    }
    r.count = mr.count;
    r.always = count_always_positive(mr.count);
    rows.push_back(std::move(r));
  }
  if (c == PrimeCase::Phi4) {
    // The six-character family of the second maximal torus contributes the
    // bound rows for a2; its continued rows expand through its own 3x3
    // basic block.
    const BlockFamily& g5 = data_.block_family("g5");
    auto all = g5.variant_rows("phi4");
    for (size_t i = 3; i < all.size(); ++i) {
      EntryRow r;
      r.label = "g5_" + all[i]->sublabel;
      for (const Cell& cell : all[i]->entries) {
        if (cell.star)
          throw std::runtime_error("unexpected star in block family g5");
        r.entries.push_back(cell.value);
        r.usable.push_back(true);
      }
      r.count = all[i]->count;
      r.always = count_always_positive(r.count);
      rows.push_back(std::move(r));
    }
  }
  return rows_[c] = std::move(rows);
}

std::map<std::string, Int> BoundEngine::fixpoint(
    PrimeCase c, const std::vector<bool>& active) const {
  const auto& rows = case_rows(c);
  // Pre-decompose all affine entries once.
  std::vector<std::vector<AffineEntry>> aff;
  for (const auto& r : rows) {
    std::vector<AffineEntry> line;
    for (size_t j = 0; j < r.entries.size(); ++j) {
      if (!r.usable[j]) continue;
      line.push_back(to_affine(r.entries[j], r.label));
    }
    aff.push_back(std::move(line));
  }
  std::map<std::string, Int> lo;
  for (const auto& line : aff)
    for (const auto& a : line)
      for (const auto& [u, cu] : a.coeffs) lo.emplace(u, 0);

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (!active[i]) continue;
      for (const auto& a : aff[i]) {
        for (const auto& [u, cu] : a.coeffs) {
          if (cu <= 0) continue;
          bool other_positive = false;
          Int rhs = -a.c0;
          for (const auto& [v, cv] : a.coeffs) {
            if (v == u) continue;
            if (cv > 0) {
              other_positive = true;
              break;
            }
            rhs += -cv * lo.at(v);
          }
          if (other_positive) continue;
          Int cand = ceil_div(rhs, cu);
          if (cand > lo.at(u)) {
            lo[u] = cand;
            changed = true;
          }
        }
      }
    }
  }
  return lo;
}

std::map<std::string, Int> BoundEngine::lowers_filtered(
    PrimeCase c, const PrimeInfo* info) const {
  const auto& rows = case_rows(c);
  std::vector<bool> active(rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    active[i] =
        info ? relation_count_at(rows[i].count, *info) > 0 : rows[i].always;
  return fixpoint(c, active);
}

BoundEngine::BoundEngine(const BlockData& data, const Catalog& catalog)
    : data_(data), catalog_(catalog) {}

std::map<std::string, Int> BoundEngine::lowers_all_relations(
    PrimeCase c) const {
  const auto& rows = case_rows(c);
  return fixpoint(c, std::vector<bool>(rows.size(), true));
}

std::map<std::string, Int> BoundEngine::lowers_generic(PrimeCase c) const {
  return lowers_filtered(c, nullptr);
}

std::map<std::string, Int> BoundEngine::lowers_at(PrimeCase c, int n,
                                                  const Int& ell) const {
  PrimeInfo info = classify_prime(n, ell);
  if (info.cs != c)
    throw std::invalid_argument("prime " + ell.str() + " at n=" +
                                std::to_string(n) + " is not in case " +
                                case_name(c));
  return lowers_filtered(c, &info);
}

// ----------------------------------------------------------------- uppers

namespace {

/// Upper bound for a2 through the scalar products of the six-character
/// torus family: same column rule, applied to its own 3x3 basic block.
UpperDerivation derive_g5_upper(const G5Scalars& g5,
                                const BlockFamily& fam,
                                const BoundRow& br) {
  auto basic = fam.variant_rows("phi4");
  size_t r0 = 0, c0 = 0;
  bool found = false;
  for (size_t i = 0; i < 3 && !found; ++i)
    for (size_t j = 0; j < basic[i]->entries.size() && !found; ++j)
      if (basic[i]->entries[j].value == SymPoly::unknown(br.unknown)) {
        r0 = i;
        c0 = j;
        found = true;
      }
  if (!found)
    throw std::runtime_error(br.unknown + " not in the g5 basic block");
  for (size_t k = 0; k < g5.sc[0].size(); ++k) {
    // Only the multiplicities up to the target column are needed; later
    // ones pair with non-negative entries and are discarded.
    bool usable = true;
    std::vector<SymPoly> m(c0 + 1);
    for (size_t i = 0; i <= c0 && usable; ++i) {
      if (g5.sc[i][k].star) {
        usable = false;
        break;
      }
      SymPoly v = g5.sc[i][k].value;
      for (size_t t = 0; t < i; ++t)
        v -= m[t] * basic[i]->entries[t].value;
      m[i] = std::move(v);
    }
    if (!usable || !m[c0].is_constant()) continue;
    QPoly mlo = m[c0].constant();
    if (g5.sc[r0][k].star || !g5.sc[r0][k].value.is_constant()) continue;
    QPoly sval = g5.sc[r0][k].value.constant();
    if (!positive_for_all_n(mlo)) continue;
    if (!positive_for_all_n(mlo * (br.upper + QPoly(1)) - sval)) continue;
    std::string rule = (mlo == QPoly(1)) ? "R1" : "R2";
    return {br.unknown, "chi" + basic[r0]->sublabel,
            "u" + std::to_string(k + 1), rule, mlo, sval, br.upper};
  }
  throw std::runtime_error("cannot certify upper bound for " + br.unknown);
}

}  // namespace

std::vector<UpperDerivation> BoundEngine::derive_uppers(PrimeCase c) const {
  const BoundsTable& bt = data_.bounds(c);
  const DecompMatrixData& mat = data_.matrix(c);
  auto basic = mat.basic_rows();

  std::vector<std::string> projectives;
  for (const auto& p : data_.scalars(c).psis) projectives.push_back(p);
  for (const auto& p : data_.extra_projectives(c))
    projectives.push_back(p.label);

  std::vector<UpperDerivation> out;
  for (const auto& br : bt.rows) {
    if (br.unknown == "a2") {
      out.push_back(
          derive_g5_upper(data_.g5_scalars(), data_.block_family("g5"), br));
      continue;
    }
    // Occurrences of the unknown as a basic-block entry.
    std::vector<std::pair<size_t, size_t>> occ;  // (row, col)
    for (size_t i = 0; i < basic.size(); ++i)
      for (size_t j = 0; j < mat.cols.size(); ++j)
        if (!basic[i]->entries[j].star &&
            basic[i]->entries[j].value == SymPoly::unknown(br.unknown))
          occ.push_back({i, j});
    if (occ.empty())
      throw std::runtime_error("unknown " + br.unknown +
                               " does not occur in the basic block");
    bool done = false;
    for (const auto& [i, j] : occ) {
      if (done) break;
      for (const auto& plabel : projectives) {
        auto col = projective_column(data_, c, plabel);
        Cell s = col(basic[i]->label);
        if (s.star || !s.value.is_constant()) continue;
        QPoly sval = s.value.constant();
        if (sval.is_zero()) continue;
        MultVector mv = pim_multiplicities(mat, col);
        if (!mv.known[j]) continue;
        std::string rule;
        QPoly mlo;
        if (mv.m[j].is_constant()) {
          mlo = mv.m[j].constant();
          rule = (mlo == QPoly(1)) ? "R1" : "R2";
        } else {
          // Multiplicity depends on other unknowns; certify a lower bound
          // for it through their encoded bounds.
          mlo = lower_substitute(mv.m[j], bt, 1, Int(0));
          rule = "R3";
        }
        if (!positive_for_all_n(mlo)) continue;
        QPoly gap = mlo * (br.upper + QPoly(1)) - sval;
        if (!br.upper.integer_valued(8)) continue;
        if (!positive_for_all_n(gap)) continue;
        out.push_back({br.unknown, basic[i]->label, plabel, rule, mlo, sval,
                       br.upper});
        done = true;
        break;
      }
    }
    if (!done)
      throw std::runtime_error("cannot certify upper bound for " +
                               br.unknown + " in case " + case_name(c));
  }
  return out;
}

// ------------------------------------------------------------------- pins

std::map<std::string, Int> BoundEngine::corollary_pins(PrimeCase c, int n,
                                                       const Int& ell) const {
  const BoundsTable& bt = data_.bounds(c);
  auto lows = lowers_at(c, n, ell);
  std::map<std::string, Int> pins;
  for (const auto& br : bt.rows) {
    Int lo = 0;
    auto it = lows.find(br.unknown);
    if (it != lows.end()) lo = it->second;
    Int enc = br.lower.eval_int(n);
    if (enc > lo) lo = enc;
    for (const auto& cl : br.cond_lowers)
      if (cl.cond.holds(n, ell) && cl.lower.eval_int(n) > lo)
        lo = cl.lower.eval_int(n);
    Int hi = br.upper.eval_int(n);
    if (lo > hi)
      throw std::runtime_error("inconsistent bounds for " + br.unknown);
    if (lo == hi) pins[br.unknown] = lo;
  }
  return pins;
}

// -------------------------------------------------------------- validation

std::vector<std::string> BoundEngine::validate_case(PrimeCase c, int n_max,
                                                    int ell_max) const {
  std::vector<std::string> issues;
  const BoundsTable& bt = data_.bounds(c);

  auto check_match = [&](const std::map<std::string, Int>& derived, int n,
                         const Int& ell, const std::string& tag) {
    for (const auto& br : bt.rows) {
      Int want = bt.lower_at(br.unknown, n, ell).eval_int(std::max(n, 1));
      Int got = 0;
      auto it = derived.find(br.unknown);
      if (it != derived.end()) got = it->second;
      if (got != want) {
        std::ostringstream os;
        os << case_name(c) << " " << tag << ": lower(" << br.unknown
           << ") derived " << got << " vs encoded " << want;
        issues.push_back(os.str());
      }
    }
  };

  // Generic primes: only the always-present relation families.
  check_match(lowers_generic(c), 1, Int(0), "generic");

  // Strongest case: every relation family present. The encoded optimum is
  // the largest conditional lower; realize it with ell = -1 (all conditions
  // treated as holding).
  {
    auto derived = lowers_all_relations(c);
    for (const auto& br : bt.rows) {
      Int want = br.lower.eval_int(1);
      for (const auto& cl : br.cond_lowers)
        want = std::max(want, cl.lower.eval_int(1));
      Int got = 0;
      auto it = derived.find(br.unknown);
      if (it != derived.end()) got = it->second;
      if (got != want)
        issues.push_back(case_name(c) + " all-relations: lower(" +
                         br.unknown + ") derived " + got.str() +
                         " vs encoded " + want.str());
    }
  }

  // Concrete scan: count positivity against the encoded conditions.
  std::vector<int> primes;
  for (int p = 3; p <= ell_max; p += 2) {
    bool ok = true;
    for (int d = 3; d * d <= p; d += 2)
      if (p % d == 0) {
        ok = false;
        break;
      }
    if (ok) primes.push_back(p);
  }
  for (int n = 1; n <= n_max; ++n) {
    for (int p : primes) {
      PrimeInfo info = classify_prime(n, Int(p));
      if (info.cs != c) continue;
      check_match(lowers_filtered(c, &info), n, Int(p),
                  "n=" + std::to_string(n) + ",ell=" + std::to_string(p));
    }
  }

  try {
    derive_uppers(c);
  } catch (const std::exception& e) {
    issues.push_back(e.what());
  }
  return issues;
}

}  // namespace ree2f4
