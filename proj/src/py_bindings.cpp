// Python bindings: exposes the prime-case classification, the character
// catalog, the Hecke-algebra decomposition, the encoded decomposition
// matrices, the bound derivation and the smallest-degree verification.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ree2f4/bounds.hpp"
#include "ree2f4/degrees.hpp"
#include "ree2f4/factors.hpp"

namespace py = pybind11;
using namespace ree2f4;

namespace {

py::int_ big(const Int& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

PrimeCase case_arg(const std::string& name) {
  auto c = case_from_name(name);
  if (!c) throw py::value_error("unknown prime case: " + name);
  return *c;
}

std::string cell_str(const Cell& c) {
  if (c.star) return "*";
  return c.value.str();
}

/// Loads the data directory once and answers all table-driven queries.
class Context {
 public:
  explicit Context(const std::string& data_dir)
      : manifest_(data_dir),
        catalog_(manifest_),
        data_(manifest_),
        bounds_(data_, catalog_),
        degrees_(data_, catalog_) {}

  py::list unipotent() const {
    py::list out;
    for (const CharRecord& r : catalog_.unipotent_all()) {
      py::dict d;
      d["label"] = r.label;
      d["family"] = r.family;
      d["series"] = r.series;
      d["degree"] = r.degree.str();
      out.append(std::move(d));
    }
    return out;
  }

  py::int_ degree_value(const std::string& label, int n) const {
    return big(catalog_.degree_of(label).eval_int(n));
  }

  py::int_ d0(int n) const { return big(catalog_.d0(n)); }

  bool catalog_consistent() const {
    return catalog_.sum_of_squares() == group_order();
  }

  py::dict matrix(const std::string& cse) const {
    const DecompMatrixData& m = data_.matrix(case_arg(cse));
    py::dict out;
    out["columns"] = m.cols;
    out["series_tags"] = m.series_tags;
    py::list rows;
    for (const MatrixRow& row : m.rows) {
      py::dict r;
      r["character"] = row.label;
      r["basic"] = row.basic;
      py::list entries;
      for (const Cell& c : row.entries) entries.append(cell_str(c));
      r["entries"] = std::move(entries);
      r["count"] = row.count.str();
      rows.append(std::move(r));
    }
    out["rows"] = std::move(rows);
    return out;
  }

  py::dict lower_bounds(const std::string& cse, int n,
                        const std::string& ell) const {
    py::dict out;
    PrimeCase c = case_arg(cse);
    if (c == PrimeCase::Linear) return out;
    Int l(ell);
    auto lowers =
        (l == 0) ? bounds_.lowers_generic(c) : bounds_.lowers_at(c, n, l);
    for (const auto& [unknown, v] : lowers) out[py::str(unknown)] = big(v);
    return out;
  }

  py::list upper_bounds(const std::string& cse) const {
    py::list out;
    PrimeCase c = case_arg(cse);
    if (c == PrimeCase::Linear) return out;
    for (const UpperDerivation& d : bounds_.derive_uppers(c)) {
      py::dict row;
      row["unknown"] = d.unknown;
      row["upper"] = d.encoded.str();
      row["rule"] = d.rule;
      row["projective"] = d.projective;
      row["character"] = d.chi;
      out.append(std::move(row));
    }
    return out;
  }

  py::dict pins(const std::string& cse, int n, const std::string& ell) const {
    py::dict out;
    PrimeCase c = case_arg(cse);
    if (c == PrimeCase::Linear) return out;
    for (const auto& [unknown, v] : bounds_.corollary_pins(c, n, Int(ell)))
      out[py::str(unknown)] = big(v);
    return out;
  }

  py::dict verify_smallest_degree(const std::string& cse, int n,
                                  const std::string& ell) const {
    DegreeReport rep = degrees_.verify_theorem(case_arg(cse), n, Int(ell));
    py::dict out;
    out["case"] = case_name(rep.cse);
    out["n"] = rep.n;
    out["ell"] = big(rep.ell);
    out["d0"] = big(rep.d0);
    out["holds"] = rep.holds;
    out["partial"] = rep.partial;
    out["unresolved"] = rep.unresolved;
    py::list entries;
    for (const DegreeStatus& st : rep.entries) {
      py::dict e;
      e["label"] = st.label;
      e["exact"] = st.exact;
      e["value"] = st.value.str();
      e["equals_d0"] = st.equals_d0;
      e["exceeds_d0"] = st.exceeds_d0;
      e["method"] = st.method;
      entries.append(std::move(e));
    }
    out["entries"] = std::move(entries);
    out["trace"] = rep.trace;
    return out;
  }

  py::list validate_bounds(const std::string& cse, int n_max,
                           int ell_max) const {
    PrimeCase c = case_arg(cse);
    if (c == PrimeCase::Linear) return py::list();
    return py::cast(bounds_.validate_case(c, n_max, ell_max));
  }

  py::list validate_relations() const {
    py::list out;
    for (PrimeCase c : BlockData::encoded_cases())
      for (const std::string& p :
           check_relation_expansion(data_.matrix(c), data_.relations(c)))
        out.append(case_name(c) + ": " + p);
    return out;
  }

 private:
  Manifest manifest_;
  Catalog catalog_;
  BlockData data_;
  BoundEngine bounds_;
  DegreeEngine degrees_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Modular decomposition matrices, decomposition-number bounds and the "
      "smallest-nontrivial-degree verification for the Ree groups 2F4(q^2)";

  m.def(
      "classify",
      [](int n, const std::string& ell) {
        PrimeInfo info = classify_prime(n, Int(ell));
        py::dict out;
        out["case"] = case_name(info.cs);
        out["f"] = info.f;
        out["factor_value"] = big(info.factor_value);
        out["ell_pow_f"] = big(info.ell_pow_f);
        return out;
      },
      py::arg("n"), py::arg("ell"),
      "Which coprime factor class of the group order a prime divides");

  m.def(
      "group_order", [](int n) { return big(group_order().eval_int(n)); },
      py::arg("n"), "Order of 2F4(q^2) at q^2 = 2^(2n+1)");
  m.def(
      "group_order_poly", [] { return group_order().str(); },
      "Order of 2F4(q^2) as a polynomial in q over Q(sqrt(2))");

  m.def(
      "hecke_decomposition",
      [](int n, const std::string& ell) {
        HeckeDecompMatrix h = hecke_decomposition(n, Int(ell));
        py::dict out;
        out["rows"] = h.rows;
        out["columns"] = h.cols;
        out["entries"] = h.entries;
        return out;
      },
      py::arg("n"), py::arg("ell"),
      "Modular decomposition matrix of the Hecke algebra of the "
      "principal-series block");

  py::class_<Context>(m, "Context",
                      "Table-driven queries against one data directory")
      .def(py::init<const std::string&>(), py::arg("data_dir"))
      .def("unipotent", &Context::unipotent)
      .def("degree_value", &Context::degree_value, py::arg("label"),
           py::arg("n"))
      .def("d0", &Context::d0, py::arg("n"))
      .def("catalog_consistent", &Context::catalog_consistent)
      .def("matrix", &Context::matrix, py::arg("case"))
      .def("lower_bounds", &Context::lower_bounds, py::arg("case"),
           py::arg("n"), py::arg("ell"))
      .def("upper_bounds", &Context::upper_bounds, py::arg("case"))
      .def("pins", &Context::pins, py::arg("case"), py::arg("n"),
           py::arg("ell"))
      .def("verify_smallest_degree", &Context::verify_smallest_degree,
           py::arg("case"), py::arg("n"), py::arg("ell"))
      .def("validate_bounds", &Context::validate_bounds, py::arg("case"),
           py::arg("n_max") = 60, py::arg("ell_max") = 1000)
      .def("validate_relations", &Context::validate_relations);
}
