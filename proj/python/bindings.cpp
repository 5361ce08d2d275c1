#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "epr/automorphisms.hpp"
#include "epr/complex.hpp"
#include "epr/cosmology.hpp"
#include "epr/error.hpp"
#include "epr/frucht.hpp"
#include "epr/json_io.hpp"
#include "epr/macrotime.hpp"
#include "epr/perm_group.hpp"
#include "epr/spectral.hpp"

namespace py = pybind11;

namespace {

py::object to_py_int(const epr::BigInt& value) {
  return py::module_::import("builtins").attr("int")(value.str());
}

}  // namespace

PYBIND11_MODULE(epr_universe, m) {
  m.doc() = "finite EPR-complex universe: poset algebra, symmetry, spectra, "
            "decay chains";

  static py::exception<epr::Error> error_type(m, "EprError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const epr::Error& e) {
      py::set_error(
          error_type,
          (std::string(epr::to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<epr::EprComplex>(m, "EprComplex")
      .def(py::init([](int n_phi, std::vector<epr::ObjectId> objects,
                       std::vector<epr::Edge> edges) {
             return epr::make_complex(n_phi, std::move(objects),
                                      std::move(edges));
           }),
           py::arg("n_phi"), py::arg("objects"), py::arg("edges"))
      .def_readonly("n_phi", &epr::EprComplex::n_phi)
      .def_readonly("objects", &epr::EprComplex::objects)
      .def_readonly("edges", &epr::EprComplex::edges)
      .def("object_count", &epr::EprComplex::object_count)
      .def("edge_count", &epr::EprComplex::edge_count)
      .def("has_object", &epr::EprComplex::has_object)
      .def("has_edge", &epr::EprComplex::has_edge)
      .def("__eq__",
           [](const epr::EprComplex& lhs, const epr::EprComplex& rhs) {
             return lhs == rhs;
           })
      .def("__repr__", [](const epr::EprComplex& e) {
        return "EprComplex(n_phi=" + std::to_string(e.n_phi) + ", |obj|=" +
               std::to_string(e.object_count()) + ", |edges|=" +
               std::to_string(e.edge_count()) + ")";
      });

  m.def("cycle_complex", &epr::cycle_complex, py::arg("n"));
  m.def("complete_complex", &epr::complete_complex, py::arg("n"));
  m.def("path_complex", &epr::path_complex, py::arg("n"));
  m.def("star_complex", &epr::star_complex, py::arg("n"));
  m.def("edgeless_complex", &epr::edgeless_complex, py::arg("n"));
  m.def("gnp_complex", &epr::gnp_complex, py::arg("n"), py::arg("p"),
        py::arg("seed"));
  m.def("enumerate_universe", &epr::enumerate_universe, py::arg("n_phi"),
        py::arg("max_n_phi") = 6);

  m.def("induced", &epr::induced, py::arg("e"), py::arg("objects"));
  m.def("leq", &epr::leq, py::arg("e"), py::arg("f"));
  m.def("is_aspect", &epr::is_aspect, py::arg("e"));
  m.def("is_connected", &epr::is_connected, py::arg("e"));
  m.def("graph_distance", &epr::graph_distance, py::arg("e"), py::arg("o1"),
        py::arg("o2"));
  m.def("join_in_aspect", &epr::join_in_aspect, py::arg("ambient"),
        py::arg("parts"));

  m.def(
      "aspects_extending_count",
      [](const epr::EprComplex& e) {
        return to_py_int(epr::aspects_extending(e, 20, false).count);
      },
      py::arg("e"));
  m.def(
      "aspects_extending",
      [](const epr::EprComplex& e, int max_free_pairs) {
        auto ext = epr::aspects_extending(e, max_free_pairs, true, true);
        return ext.aspects;
      },
      py::arg("e"), py::arg("max_free_pairs") = 20);

  py::class_<epr::LowerBoundSet>(m, "LowerBoundSet")
      .def_readonly("bounds", &epr::LowerBoundSet::bounds)
      .def_readonly("unique", &epr::LowerBoundSet::unique)
      .def_readonly("selected", &epr::LowerBoundSet::selected);
  m.def("meet", &epr::meet, py::arg("e"), py::arg("a"),
        py::arg("max_bounds") = 10000);

  py::class_<epr::Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def("images", &epr::Permutation::images)
      .def("degree", &epr::Permutation::degree)
      .def("then", &epr::Permutation::then)
      .def("inverse", &epr::Permutation::inverse)
      .def("__call__", &epr::Permutation::operator());

  py::class_<epr::PermGroup>(m, "PermGroup")
      .def_readonly("degree", &epr::PermGroup::degree)
      .def_readonly("generators", &epr::PermGroup::generators);
  m.def("make_group", &epr::make_group, py::arg("degree"),
        py::arg("generators"));
  m.def(
      "group_order",
      [](const epr::PermGroup& g) { return to_py_int(epr::group_order(g)); },
      py::arg("g"));
  m.def("orbits", &epr::orbits, py::arg("g"));

  m.def("automorphisms", &epr::automorphisms, py::arg("e"));
  m.def("brute_force_automorphisms", &epr::brute_force_automorphisms,
        py::arg("e"), py::arg("max_objects") = 10);
  py::class_<epr::SymmetryScore>(m, "SymmetryScore")
      .def_readonly("orbit_count", &epr::SymmetryScore::orbit_count)
      .def_readonly("transitivity_fraction",
                    &epr::SymmetryScore::transitivity_fraction);
  m.def("symmetry_score", &epr::symmetry_score, py::arg("e"));
  m.def("frucht_realize", &epr::frucht_realize, py::arg("g"),
        py::arg("max_order") = 720);

  py::class_<epr::SpectralBasis>(m, "SpectralBasis")
      .def_readonly("carrier", &epr::SpectralBasis::carrier)
      .def_readonly("eigenvalues", &epr::SpectralBasis::eigenvalues)
      .def_readonly("eigenvectors", &epr::SpectralBasis::eigenvectors)
      .def_readonly("tie_break_tag", &epr::SpectralBasis::tie_break_tag)
      .def("dimension", &epr::SpectralBasis::dimension);
  m.def("spectral_basis", &epr::spectral_basis, py::arg("carrier"),
        py::arg("max_sweeps") = 100);

  py::class_<epr::StateVector>(m, "StateVector")
      .def_readonly("carrier", &epr::StateVector::carrier)
      .def_readonly("amplitudes", &epr::StateVector::amplitudes)
      .def("norm", &epr::StateVector::norm);
  m.def("delta_state", &epr::delta_state, py::arg("e"), py::arg("o"));

  py::class_<epr::FourierSum>(m, "FourierSum")
      .def_readonly("coefficients", &epr::FourierSum::coefficients);
  m.def("fourier_expand", &epr::fourier_expand, py::arg("s"), py::arg("b"));
  m.def("fourier_resum", &epr::fourier_resum, py::arg("f"), py::arg("b"));
  m.def("lowpass_project", &epr::lowpass_project, py::arg("s"), py::arg("b"),
        py::arg("k"));
  m.def("block_aligned_cutoff", &epr::block_aligned_cutoff, py::arg("b"),
        py::arg("k"));
  m.def("shannon_entropy_bits", &epr::shannon_entropy_bits,
        py::arg("probabilities"));

  py::class_<epr::DecayPolicy>(m, "DecayPolicy")
      .def(py::init([](int removals_per_step, int steps, std::uint64_t seed,
                       bool rewire_to_matter) {
             return epr::DecayPolicy{removals_per_step, steps, seed,
                                     rewire_to_matter};
           }),
           py::arg("removals_per_step"), py::arg("steps"), py::arg("seed") = 0,
           py::arg("rewire_to_matter") = false)
      .def_readonly("removals_per_step", &epr::DecayPolicy::removals_per_step)
      .def_readonly("steps", &epr::DecayPolicy::steps)
      .def_readonly("seed", &epr::DecayPolicy::seed)
      .def_readonly("rewire_to_matter", &epr::DecayPolicy::rewire_to_matter);

  py::class_<epr::DecayChain>(m, "DecayChain")
      .def_readonly("ambient_aspects", &epr::DecayChain::ambient_aspects)
      .def_readonly("basis_complexes", &epr::DecayChain::basis_complexes)
      .def_readonly("seed", &epr::DecayChain::seed);
  m.def("default_ambient", &epr::default_ambient, py::arg("e0"));
  m.def("generate_chain", &epr::generate_chain, py::arg("e0"), py::arg("a0"),
        py::arg("policy"));

  py::class_<epr::ChainValidation>(m, "ChainValidation")
      .def_readonly("violations", &epr::ChainValidation::violations)
      .def("valid", &epr::ChainValidation::valid);
  m.def("validate_chain", &epr::validate_chain, py::arg("c"));
  m.def("exists_at", &epr::exists_at, py::arg("f"), py::arg("c"), py::arg("i"));
  m.def("resolution_entropy", &epr::resolution_entropy, py::arg("c"),
        py::arg("i"));
  m.def("diffusion_entropy", &epr::diffusion_entropy, py::arg("c"),
        py::arg("i"));

  py::class_<epr::EntropyReport>(m, "EntropyReport")
      .def_readonly("measure_name", &epr::EntropyReport::measure_name)
      .def_readonly("values", &epr::EntropyReport::values)
      .def_readonly("deltas", &epr::EntropyReport::deltas)
      .def_readonly("monotone_fraction",
                    &epr::EntropyReport::monotone_fraction);
  m.def(
      "entropy_series",
      [](const epr::DecayChain& c, const std::string& measure) {
        return epr::entropy_series(c, epr::parse_measure(measure));
      },
      py::arg("c"), py::arg("measure"));

  m.def("phase_distance", &epr::phase_distance, py::arg("n"), py::arg("modes"),
        py::arg("o1"), py::arg("o2"));
  m.def("spread", &epr::spread, py::arg("s"), py::arg("e"), py::arg("center"));
  py::class_<epr::ExpansionReport>(m, "ExpansionReport")
      .def_readonly("cutoff_series", &epr::ExpansionReport::cutoff_series)
      .def_readonly("spread_series", &epr::ExpansionReport::spread_series)
      .def_readonly("expansion_factor_series",
                    &epr::ExpansionReport::expansion_factor_series)
      .def_readonly("monotone_fraction",
                    &epr::ExpansionReport::monotone_fraction)
      .def_readonly("zero_baseline", &epr::ExpansionReport::zero_baseline);
  m.def("expansion_series", &epr::expansion_series, py::arg("c"));
  m.def("flatness_score", &epr::flatness_score, py::arg("e"));

  m.def(
      "complex_to_json",
      [](const epr::EprComplex& e) {
        return epr::dump_canonical(epr::complex_to_json(e));
      },
      py::arg("e"));
  m.def(
      "complex_from_json",
      [](const std::string& text) {
        return epr::complex_from_json(epr::parse_json_text(text));
      },
      py::arg("text"));
}
