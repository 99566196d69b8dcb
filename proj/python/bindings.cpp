#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "densesol/classify.hpp"
#include "densesol/cli.hpp"
#include "densesol/density.hpp"
#include "densesol/lattice.hpp"
#include "densesol/solitary.hpp"
#include "densesol/zm.hpp"

namespace py = pybind11;
using namespace densesol;

namespace {

using Members = std::vector<Element>;

std::vector<Members> to_lists(const std::vector<Subgroup>& subs) {
  std::vector<Members> out;
  out.reserve(subs.size());
  for (const auto& h : subs) out.push_back(h.elements());
  return out;
}

py::dict classification_dict(const ClassificationResult& c) {
  py::dict d;
  d["verdict"] = c.verdict;
  d["branch"] = to_string(c.branch);
  d["reason"] = c.reason;
  d["triple"] = c.triple ? py::cast(*c.triple) : py::none();
  if (c.detail) {
    py::dict detail;
    detail["m"] = c.detail->m;
    detail["d"] = c.detail->d;
    detail["alpha"] = c.detail->alpha;
    detail["p"] = c.detail->p ? py::cast(*c.detail->p) : py::none();
    detail["beta"] = c.detail->beta;
    d["detail"] = detail;
  } else {
    d["detail"] = py::none();
  }
  return d;
}

py::dict density_dict(const DensityReport& r) {
  py::dict d;
  d["dense"] = r.verdict;
  d["checked_pairs"] = r.checked_pairs;
  if (r.counterexample)
    d["counterexample"] = py::make_tuple(r.counterexample->lower_subgroup.elements(),
                                         r.counterexample->upper_subgroup.elements());
  else
    d["counterexample"] = py::none();
  return d;
}

py::tuple command(const cli::CommandResult& r) {
  return py::make_tuple(r.exit_code, r.exit_code == cli::kExitInvalid ? r.error : r.output);
}

cli::OutputFormat format_of(const std::string& name) {
  const auto f = cli::parse_output_format(name);
  if (!f) throw py::value_error("unknown format: " + name);
  return *f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite groups, subgroup lattices and dense solitary subgroups";
  m.attr("DEFAULT_ORDER_CAP") = kDefaultOrderCap;

  static py::exception<ZmError> zm_error(m, "ZmError", PyExc_ValueError);
  static py::exception<OrderCapExceeded> cap_error(m, "OrderCapExceeded", PyExc_ValueError);
  static py::exception<GroupError> group_error(m, "GroupError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ZmError& e) {
      py::object err = py::handle(zm_error.ptr())(e.what());
      err.attr("kind") = to_string(e.kind());
      PyErr_SetObject(zm_error.ptr(), err.ptr());
    } catch (const OrderCapExceeded& e) {
      PyErr_SetString(cap_error.ptr(), e.what());
    } catch (const GroupError& e) {
      PyErr_SetString(group_error.ptr(), e.what());
    }
  });

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("label", &FiniteGroup::label)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def("mul", &FiniteGroup::mul)
      .def("inverse", &FiniteGroup::inverse)
      .def("power", &FiniteGroup::power)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("element_order", [](const FiniteGroup& g, Element x) { return element_order(g, x); })
      .def("center", [](const FiniteGroup& g) { return center(g).elements(); })
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group " + g.label() + " of order " + std::to_string(g.order()) + ">";
      });

  m.def("cyclic", &make_cyclic, py::arg("n"), py::arg("cap") = kDefaultOrderCap);
  m.def("dihedral", &make_dihedral, py::arg("n"), py::arg("cap") = kDefaultOrderCap,
        "Dihedral group of order 2n");
  m.def("quaternion", &make_generalized_quaternion, py::arg("k"),
        py::arg("cap") = kDefaultOrderCap, "Generalized quaternion group of order 2^k");
  m.def("direct_product", &make_direct_product, py::arg("g"), py::arg("h"),
        py::arg("cap") = kDefaultOrderCap);
  m.def("from_spec", &cli::parse_group_spec, py::arg("spec"), py::arg("cap") = kDefaultOrderCap,
        "Build a group from zm:m,n,r, cyclic:n, dihedral:n or quaternion:k");

  py::class_<ZmParams>(m, "ZmParams")
      .def(py::init(&validate_zm_triple), py::arg("m"), py::arg("n"), py::arg("r"))
      .def_property_readonly("m", &ZmParams::m)
      .def_property_readonly("n", &ZmParams::n)
      .def_property_readonly("r", &ZmParams::r)
      .def_property_readonly("d", &ZmParams::d)
      .def_property_readonly("order", &ZmParams::order)
      .def_property_readonly("label", &ZmParams::label)
      .def("group", [](const ZmParams& p, std::size_t cap) { return zm_group(p, cap); },
           py::arg("cap") = kDefaultOrderCap)
      .def("triple_set",
           [](const ZmParams& p) {
             std::vector<std::array<std::uint32_t, 3>> out;
             for (const auto& t : enumerate_triple_set(p)) out.push_back({t.m1, t.n1, t.s});
             return out;
           })
      .def("solitary_triples",
           [](const ZmParams& p) {
             std::vector<std::array<std::uint32_t, 3>> out;
             for (const auto& t : zm_solitary_triples(p)) out.push_back({t.m1, t.n1, t.s});
             return out;
           })
      .def("subgroup",
           [](const ZmParams& p, std::uint32_t m1, std::uint32_t n1, std::uint32_t s) {
             return triple_to_subgroup(p, {m1, n1, s}).elements();
           })
      .def("__repr__", &ZmParams::label);

  m.def("zm_group", [](long long a, long long b, long long c, std::size_t cap) {
    return zm_group(validate_zm_triple(a, b, c), cap);
  }, py::arg("m"), py::arg("n"), py::arg("r"), py::arg("cap") = kDefaultOrderCap);

  m.def("subgroups", [](const FiniteGroup& g, std::size_t cap) {
    return to_lists(all_subgroups(g, cap).nodes());
  }, py::arg("group"), py::arg("cap") = kDefaultOrderCap,
     "All subgroups as sorted element lists, ordered by size");
  m.def("solitary_subgroups", [](const FiniteGroup& g, std::size_t cap) {
    return to_lists(solitary_subgroups(g, cap));
  }, py::arg("group"), py::arg("cap") = kDefaultOrderCap);
  m.def("is_normal", [](const FiniteGroup& g, const Members& h) {
    return is_normal(g, generated_subgroup(g, h));
  });
  m.def("are_isomorphic", &are_isomorphic);
  m.def("density", [](const FiniteGroup& g, std::size_t cap) {
    return density_dict(has_dense_solitary(g, cap));
  }, py::arg("group"), py::arg("cap") = kDefaultOrderCap);
  m.def("classify_zm", [](long long a, long long b, long long c) {
    return classification_dict(classify_zm(a, b, c));
  }, py::arg("m"), py::arg("n"), py::arg("r"));
  m.def("classify_group", [](const FiniteGroup& g) { return classification_dict(classify_group(g)); });
  m.def("zm_triples", [](std::size_t max_order) {
    std::vector<std::array<std::uint32_t, 3>> out;
    for (const auto& p : enumerate_zm_triples(max_order)) out.push_back({p.m(), p.n(), p.r()});
    return out;
  }, py::arg("max_order"));

  m.def("verify", [](std::size_t max_order, std::size_t cap, unsigned threads, bool corpus) {
    SweepOptions options;
    options.cap = cap;
    options.threads = threads;
    options.include_corpus = corpus;
    SweepReport r;
    {
      py::gil_scoped_release release;
      r = verify_theorem(max_order, options);
    }
    py::dict d;
    d["max_order"] = r.max_order;
    d["triples"] = r.triples;
    d["corpus_groups"] = r.corpus_groups;
    d["agreements"] = r.agreements;
    d["dense_triples"] = r.dense_triples;
    py::list dis;
    for (const auto& x : r.disagreements)
      dis.append(py::make_tuple(x.label, x.predicate, x.brute_force));
    d["disagreements"] = dis;
    d["beta0_witness"] = r.beta0_witness ? py::cast(*r.beta0_witness) : py::none();
    d["beta1_witness"] = r.beta1_witness ? py::cast(*r.beta1_witness) : py::none();
    d["seconds"] = r.seconds;
    return d;
  }, py::arg("max_order"), py::arg("cap") = kDefaultOrderCap, py::arg("threads") = 0u,
     py::arg("corpus") = true);

  // Command-line equivalents: (exit_code, text) where text is stdout on
  // success and the error message on invalid input.
  m.def("zm_info", [](long long a, long long b, long long c, const std::string& fmt, std::size_t cap) {
    return command(cli::cmd_zm_info(a, b, c, format_of(fmt), cap));
  }, py::arg("m"), py::arg("n"), py::arg("r"), py::arg("format") = "json",
     py::arg("cap") = kDefaultOrderCap);
  m.def("lattice_report", [](const std::string& spec, const std::string& fmt, std::size_t cap) {
    return command(cli::cmd_lattice(spec, format_of(fmt), cap));
  }, py::arg("spec"), py::arg("format") = "json", py::arg("cap") = kDefaultOrderCap);
  m.def("density_report", [](const std::string& spec, const std::string& fmt, std::size_t cap) {
    return command(cli::cmd_density(spec, format_of(fmt), cap));
  }, py::arg("spec"), py::arg("format") = "json", py::arg("cap") = kDefaultOrderCap);
}
