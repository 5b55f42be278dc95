#include "ree2f4/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "ree2f4/factors.hpp"

namespace ree2f4 {

std::string case_name(PrimeCase c) {
  switch (c) {
    case PrimeCase::Linear: return "linear";
    case PrimeCase::Phi4: return "phi4";
    case PrimeCase::Phi8p: return "phi8p";
    case PrimeCase::Phi8m: return "phi8m";
    case PrimeCase::Ell3: return "ell3";
    case PrimeCase::CyclicDefect: return "cyclic";
    case PrimeCase::NotDividing: return "notdividing";
  }
  return "?";
}

std::optional<PrimeCase> case_from_name(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s == "linear") return PrimeCase::Linear;
  if (s == "phi4") return PrimeCase::Phi4;
  if (s == "phi8p") return PrimeCase::Phi8p;
  if (s == "phi8m") return PrimeCase::Phi8m;
  if (s == "ell3") return PrimeCase::Ell3;
  if (s == "cyclic") return PrimeCase::CyclicDefect;
  if (s == "notdividing") return PrimeCase::NotDividing;
  return std::nullopt;
}

PrimeInfo classify_prime(int n, const Int& ell) {
  if (ell < 3 || ell % 2 == 0)
    throw std::invalid_argument("classify_prime: ell must be an odd prime");
  const auto val = [&](const QPoly& p) { return p.eval_int(n); };
  const auto valuation = [&](Int v) {
    int f = 0;
    while (v % ell == 0) {
      v /= ell;
      ++f;
    }
    return f;
  };
  PrimeInfo info;
  const auto set = [&](PrimeCase cs, const Int& fv) {
    info.cs = cs;
    info.factor_value = fv;
    info.f = valuation(fv);
    info.ell_pow_f = 1;
    for (int i = 0; i < info.f; ++i) info.ell_pow_f *= ell;
  };
  const Int v1t = val(factors::phi1t());
  const Int v4 = val(factors::phi4());
  const Int v8p = val(factors::phi8p());
  const Int v8m = val(factors::phi8m());
  const Int vcyc = val(factors::phi12()) * val(factors::phi24p()) *
                   val(factors::phi24m());
  if (ell == 3) {
    // 3 always divides q^2 + 1 = 2^(2n+1) + 1.
    set(PrimeCase::Ell3, v4);
  } else if (v1t % ell == 0) {
    set(PrimeCase::Linear, v1t);
  } else if (v4 % ell == 0) {
    set(PrimeCase::Phi4, v4);
  } else if (v8p % ell == 0) {
    set(PrimeCase::Phi8p, v8p);
  } else if (v8m % ell == 0) {
    set(PrimeCase::Phi8m, v8m);
  } else if (vcyc % ell == 0) {
    set(PrimeCase::CyclicDefect, vcyc);
  } else {
    info.cs = PrimeCase::NotDividing;
    info.factor_value = 1;
    info.ell_pow_f = 1;
  }
  return info;
}

Catalog::Catalog(const Manifest& manifest) {
  {
    const RawTable t = manifest.load("chars.unipotent");
    for (const auto& row : t.rows) {
      if (row.cells.size() != 7) t.fail(row.line, "expected 7 cells");
      CharRecord r;
      r.label = row.cells[0];
      r.degree = parse_cell_qpoly(row.cells[1]);
      r.family = std::stoi(row.cells[2]);
      r.series = row.cells[3];
      r.conj_partner = row.cells[4] == "-" ? "" : row.cells[4];
      r.cuspidal = row.cells[5] == "yes";
      r.meta = row.cells[6];
      unip_.push_back(std::move(r));
    }
    if (unip_.size() != 21)
      throw std::runtime_error("chars.unipotent: expected 21 rows");
  }
  {
    const RawTable t = manifest.load("chars.series");
    for (const auto& row : t.rows) {
      if (row.cells.size() < 3) t.fail(row.line, "expected id, count, members");
      SeriesType s;
      s.id = row.cells[0];
      s.count = parse_cell_qpoly(row.cells[1]);
      for (size_t i = 2; i < row.cells.size(); ++i) {
        const auto colon = row.cells[i].find(':');
        if (colon == std::string::npos)
          t.fail(row.line, "member cell must be sublabel:degree");
        SeriesMember m;
        m.sublabel = row.cells[i].substr(0, colon);
        m.degree = parse_cell_qpoly(row.cells[i].substr(colon + 1));
        s.members.push_back(std::move(m));
      }
      series_.push_back(std::move(s));
    }
    if (series_.size() != 17)
      throw std::runtime_error("chars.series: expected 17 type rows (g2..g18)");
  }
}

const CharRecord& Catalog::unipotent(int i) const {
  if (i < 1 || i > 21)
    throw std::out_of_range("unipotent character index out of range");
  return unip_[static_cast<size_t>(i - 1)];
}

const SeriesType& Catalog::series_type(const std::string& id) const {
  for (const auto& s : series_)
    if (s.id == id) return s;
  throw std::invalid_argument("unknown series type: " + id);
}

const QPoly& Catalog::nonunipotent_degree(const std::string& label) const {
  // label "chi<k>_<sub>" refers to member <sub> of type g<k>.
  const auto us = label.find('_');
  if (label.rfind("chi", 0) != 0 || us == std::string::npos)
    throw std::invalid_argument("not a non-unipotent label: " + label);
  const std::string type = "g" + label.substr(3, us - 3);
  const std::string sub = label.substr(us + 1);
  for (const auto& m : series_type(type).members)
    if (m.sublabel == sub) return m.degree;
  throw std::invalid_argument("unknown series member: " + label);
}

const QPoly& Catalog::degree_of(const std::string& label) const {
  if (label.find('_') == std::string::npos) {
    for (const auto& r : unip_)
      if (r.label == label) return r.degree;
    throw std::invalid_argument("unknown character label: " + label);
  }
  return nonunipotent_degree(label);
}

QPoly Catalog::sum_of_squares() const {
  QPoly total;
  for (const auto& r : unip_) total += r.degree * r.degree;
  for (const auto& s : series_) {
    QPoly inner;
    for (const auto& m : s.members) inner += m.degree * m.degree;
    total += s.count * inner;
  }
  return total;
}

const QPoly& Catalog::d0_poly() const { return unipotent(2).degree; }

Int Catalog::d0(int n) const { return d0_poly().eval_int(n); }

}  // namespace ree2f4
