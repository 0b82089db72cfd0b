// Python bindings for the phase-difference dynamics library.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <vector>

#include "trisync/basin.hpp"
#include "trisync/fixed_points.hpp"
#include "trisync/geometry.hpp"
#include "trisync/manifolds.hpp"
#include "trisync/maps.hpp"
#include "trisync/nullclines.hpp"
#include "trisync/params.hpp"
#include "trisync/simulate.hpp"
#include "trisync/symmetry.hpp"

namespace py = pybind11;
using namespace trisync;

PYBIND11_MODULE(trisync, m) {
    m.doc() = "Phase-difference dynamics of three pulse-coupled clocks: return "
              "maps, fixed points, invariant manifolds, basins, and an "
              "event-driven simulator.";

    m.attr("pi") = pi;
    m.attr("two_pi") = two_pi;

    // ---- geometry ----------------------------------------------------------
    py::class_<PhasePoint>(m, "PhasePoint")
        .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
        .def_readwrite("x", &PhasePoint::x)
        .def_readwrite("y", &PhasePoint::y)
        .def("__repr__", [](const PhasePoint& p) {
            return "PhasePoint(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
        });

    py::class_<Window>(m, "Window")
        .def(py::init<double, double, double, double>(), py::arg("xmin"), py::arg("xmax"),
             py::arg("ymin"), py::arg("ymax"))
        .def_readwrite("xmin", &Window::xmin)
        .def_readwrite("xmax", &Window::xmax)
        .def_readwrite("ymin", &Window::ymin)
        .def_readwrite("ymax", &Window::ymax)
        .def("width", &Window::width)
        .def("height", &Window::height)
        .def("contains", &Window::contains);

    py::class_<Mat2>(m, "Mat2")
        .def_readonly("a00", &Mat2::a00)
        .def_readonly("a01", &Mat2::a01)
        .def_readonly("a10", &Mat2::a10)
        .def_readonly("a11", &Mat2::a11)
        .def("det", &Mat2::det)
        .def("trace", &Mat2::trace)
        .def("apply", &Mat2::apply);

    m.def("sup_norm", &sup_norm);
    m.def("norm", &norm);
    m.def("distance", &distance);
    m.def("torus_distance", &torus_distance);

    py::enum_<CurveTag>(m, "CurveTag")
        .value("nullcline_vertical", CurveTag::nullcline_vertical)
        .value("nullcline_horizontal", CurveTag::nullcline_horizontal)
        .value("manifold", CurveTag::manifold)
        .value("boundary", CurveTag::boundary);

    py::class_<Curve2D>(m, "Curve2D")
        .def_readonly("tag", &Curve2D::tag)
        .def_readonly("vertices", &Curve2D::vertices)
        .def("length", &Curve2D::length);

    // ---- parameters ----------------------------------------------------------
    py::class_<CouplingParams> params(m, "CouplingParams");
    py::class_<CouplingParams::Physical>(params, "Physical")
        .def_readonly("alpha", &CouplingParams::Physical::alpha)
        .def_readonly("mu", &CouplingParams::Physical::mu)
        .def_readonly("h", &CouplingParams::Physical::h);
    params.def(py::init<double>(), py::arg("a"))
        .def_static("from_physical", &CouplingParams::from_physical, py::arg("alpha"),
                    py::arg("mu"), py::arg("h"))
        .def_property_readonly("a", &CouplingParams::a)
        .def_property_readonly("physical", &CouplingParams::physical)
        .def_readonly_static("max_coupling", &CouplingParams::max_coupling);

    // ---- maps ----------------------------------------------------------------
    m.def("apply_line_map", &apply_line_map, py::arg("p"), py::arg("params"),
          "One-cycle return map of the chain topology.");
    m.def("apply_triangle_map", &apply_triangle_map, py::arg("p"), py::arg("params"),
          "One-cycle return map of the ring topology.");
    m.def("apply_line_map_inverse", &apply_line_map_inverse, py::arg("p"), py::arg("params"));
    m.def("perturbation_field", &perturbation_field, py::arg("p"));
    m.def("jacobian", &jacobian, py::arg("p"), py::arg("params"));
    m.def("jacobian_determinant", &jacobian_determinant, py::arg("p"), py::arg("params"));

    // ---- fixed points ---------------------------------------------------------
    py::enum_<FixedPointFamily>(m, "FixedPointFamily")
        .value("p0", FixedPointFamily::p0)
        .value("p1", FixedPointFamily::p1)
        .value("p2", FixedPointFamily::p2)
        .value("p3", FixedPointFamily::p3);

    py::enum_<StabilityClass>(m, "StabilityClass")
        .value("source", StabilityClass::source)
        .value("saddle", StabilityClass::saddle)
        .value("sink", StabilityClass::sink);

    py::class_<FixedPointInfo>(m, "FixedPointInfo")
        .def_readonly("location", &FixedPointInfo::location)
        .def_readonly("family", &FixedPointInfo::family)
        .def_readonly("l", &FixedPointInfo::l)
        .def_readonly("k", &FixedPointInfo::k)
        .def_readonly("eigenvalues", &FixedPointInfo::eigenvalues)
        .def_readonly("eigenvectors", &FixedPointInfo::eigenvectors)
        .def_readonly("stability", &FixedPointInfo::stability);

    m.def("fixed_point", &fixed_point, py::arg("family"), py::arg("l"), py::arg("k"),
          py::arg("params"));
    m.def("fixed_points", &fixed_points, py::arg("params"), py::arg("lmin"), py::arg("lmax"),
          py::arg("kmin"), py::arg("kmax"));
    m.def("family_name", [](FixedPointFamily f) { return std::string(family_name(f)); });
    m.def("stability_name", [](StabilityClass s) { return std::string(stability_name(s)); });

    // ---- nullclines -------------------------------------------------------------
    m.def("nullclines", &nullclines, py::arg("window"), py::arg("resolution") = 512);

    // ---- symmetry ---------------------------------------------------------------
    py::enum_<LinearPart>(m, "LinearPart")
        .value("identity", LinearPart::identity)
        .value("rotation_pi", LinearPart::rotation_pi)
        .value("diagonal_reflection", LinearPart::diagonal_reflection)
        .value("antidiagonal_reflection", LinearPart::antidiagonal_reflection);

    py::class_<SymmetryTransform>(m, "SymmetryTransform")
        .def(py::init<LinearPart, long, long>(), py::arg("linear"), py::arg("l"), py::arg("k"))
        .def_static("identity", &SymmetryTransform::identity)
        .def_static("translation", &SymmetryTransform::translation, py::arg("l"), py::arg("k"))
        .def_static("rotation_pi", &SymmetryTransform::rotation_pi)
        .def_static("diagonal_reflection", &SymmetryTransform::diagonal_reflection)
        .def_static("antidiagonal_reflection", &SymmetryTransform::antidiagonal_reflection)
        .def("__call__", &SymmetryTransform::operator())
        .def("compose", &SymmetryTransform::compose)
        .def("inverse", &SymmetryTransform::inverse)
        .def_property_readonly("linear", &SymmetryTransform::linear)
        .def_property_readonly("l", &SymmetryTransform::l)
        .def_property_readonly("k", &SymmetryTransform::k)
        .def("linear_matrix", &SymmetryTransform::linear_matrix)
        .def("__eq__",
             [](const SymmetryTransform& a, const SymmetryTransform& b) { return a == b; });

    m.def("apply_transform", &apply_transform);
    m.def("check_equivariance", &check_equivariance, py::arg("transform"), py::arg("params"),
          py::arg("samples") = 1000, py::arg("seed") = 0x5eedULL);
    m.def("wrap_to_fundamental", &wrap_to_fundamental, py::arg("p"),
          "Splits p into (q, t): q in [0, 2pi)^2 and t the pure translation with t(q) == p.");

    py::enum_<LineOrientation>(m, "LineOrientation")
        .value("positive_slope", LineOrientation::positive_slope)
        .value("negative_slope", LineOrientation::negative_slope);

    py::class_<InvariantLine>(m, "InvariantLine")
        .def(py::init([](LineOrientation orientation, long index) {
                 return InvariantLine{orientation, index};
             }),
             py::arg("orientation"), py::arg("index"))
        .def_readonly("orientation", &InvariantLine::orientation)
        .def_readonly("index", &InvariantLine::index)
        .def("residual", &InvariantLine::residual);

    m.def("on_invariant_line", &on_invariant_line, py::arg("p"), py::arg("tol") = 1e-9);

    py::enum_<RegionMembership>(m, "RegionMembership")
        .value("interior", RegionMembership::interior)
        .value("boundary", RegionMembership::boundary)
        .value("outside", RegionMembership::outside);

    py::class_<InvariantSquare>(m, "InvariantSquare")
        .def(py::init([](long l, long k) { return InvariantSquare{l, k}; }), py::arg("l"),
             py::arg("k"))
        .def_readonly("l", &InvariantSquare::l)
        .def_readonly("k", &InvariantSquare::k)
        .def("vertices", &InvariantSquare::vertices)
        .def("centroid", &InvariantSquare::centroid)
        .def("slacks", &InvariantSquare::slacks)
        .def("centroid_rotation", &InvariantSquare::centroid_rotation);

    m.def("square_membership", &square_membership, py::arg("p"), py::arg("square"),
          py::arg("tol") = 1e-12);
    m.def("s10_internal_rotation", &s10_internal_rotation);

    // ---- manifolds ----------------------------------------------------------------
    py::enum_<ManifoldDirection>(m, "ManifoldDirection")
        .value("stable", ManifoldDirection::stable)
        .value("unstable", ManifoldDirection::unstable);

    py::enum_<BranchSide>(m, "BranchSide")
        .value("positive", BranchSide::positive)
        .value("negative", BranchSide::negative);

    py::class_<ManifoldBranch>(m, "ManifoldBranch")
        .def_readonly("saddle", &ManifoldBranch::saddle)
        .def_readonly("direction", &ManifoldBranch::direction)
        .def_readonly("side", &ManifoldBranch::side)
        .def_readonly("seed_offset", &ManifoldBranch::seed_offset)
        .def_readonly("arc_step", &ManifoldBranch::arc_step)
        .def_readonly("polyline", &ManifoldBranch::polyline);

    m.def("grow_manifold", &grow_manifold, py::arg("saddle"), py::arg("direction"),
          py::arg("side"), py::arg("params"), py::arg("seed_offset") = 1e-4,
          py::arg("max_arclength") = 20.0, py::arg("arc_step") = 1e-3);

    py::class_<SeparatrixCurve>(m, "SeparatrixCurve")
        .def_readonly("saddle", &SeparatrixCurve::saddle)
        .def_readonly("left_branch", &SeparatrixCurve::left_branch)
        .def_readonly("right_branch", &SeparatrixCurve::right_branch)
        .def_readonly("eta", &SeparatrixCurve::eta)
        .def("height_at", &SeparatrixCurve::height_at, py::arg("x"));

    m.def("build_separatrix", &build_separatrix, py::arg("params"),
          py::arg("seed_offset") = 1e-4, py::arg("arc_step") = 1e-3);

    py::enum_<SeparatrixRegion>(m, "SeparatrixRegion")
        .value("s10_plus", SeparatrixRegion::s10_plus)
        .value("s10_minus", SeparatrixRegion::s10_minus)
        .value("on_separatrix", SeparatrixRegion::on_separatrix)
        .value("outside_s10", SeparatrixRegion::outside_s10);

    m.def("classify_region", &classify_region, py::arg("p"), py::arg("separatrix"),
          py::arg("tol") = 1e-9);
    m.def("polyline_hausdorff", &polyline_hausdorff, py::arg("a"), py::arg("b"));

    // ---- basins --------------------------------------------------------------------
    py::class_<AttractorHit>(m, "AttractorHit")
        .def_readonly("l", &AttractorHit::l)
        .def_readonly("k", &AttractorHit::k)
        .def_readonly("iterations", &AttractorHit::iterations)
        .def("attractor", &AttractorHit::attractor);

    py::class_<ConvergenceOutcome>(m, "ConvergenceOutcome")
        .def_readonly("hit", &ConvergenceOutcome::hit)
        .def_readonly("iterations", &ConvergenceOutcome::iterations);

    m.def("iterate_to_attractor", &iterate_to_attractor, py::arg("p"), py::arg("params"),
          py::arg("eps") = 1e-6, py::arg("n_max") = std::uint32_t(100000));
    m.def("convergence_rate", &convergence_rate, py::arg("p"), py::arg("params"), py::arg("n"));

    py::class_<BasinRaster> raster(m, "BasinRaster");
    py::class_<BasinRaster::Cell>(raster, "Cell")
        .def_readonly("label", &BasinRaster::Cell::label)
        .def_readonly("l", &BasinRaster::Cell::l)
        .def_readonly("k", &BasinRaster::Cell::k)
        .def_readonly("iterations", &BasinRaster::Cell::iterations);
    raster.def_readonly("window", &BasinRaster::window)
        .def_readonly("nx", &BasinRaster::nx)
        .def_readonly("ny", &BasinRaster::ny)
        .def_readonly("cells", &BasinRaster::cells)
        .def_readonly("catalog", &BasinRaster::catalog)
        .def("at", &BasinRaster::at, py::arg("i"), py::arg("j"))
        .def("center", &BasinRaster::center, py::arg("i"), py::arg("j"));

    m.def("rasterize_basin", &rasterize_basin, py::arg("window"), py::arg("nx"), py::arg("ny"),
          py::arg("params"), py::arg("eps") = 1e-6, py::arg("n_max") = std::uint32_t(100000),
          py::arg("threads") = 0u);

    // ---- simulator -------------------------------------------------------------------
    py::class_<OscillatorEnsemble>(m, "OscillatorEnsemble")
        .def(py::init([](double left, double center, double right) {
                 return OscillatorEnsemble{left, center, right};
             }),
             py::arg("phase_left") = 0.0, py::arg("phase_center") = 0.0,
             py::arg("phase_right") = 0.0)
        .def_readwrite("phase_left", &OscillatorEnsemble::phase_left)
        .def_readwrite("phase_center", &OscillatorEnsemble::phase_center)
        .def_readwrite("phase_right", &OscillatorEnsemble::phase_right);

    py::enum_<OscillatorId>(m, "OscillatorId")
        .value("left", OscillatorId::left)
        .value("center", OscillatorId::center)
        .value("right", OscillatorId::right);

    py::class_<StroboscopicRecord>(m, "StroboscopicRecord")
        .def_readonly("cycle", &StroboscopicRecord::cycle)
        .def_readonly("x", &StroboscopicRecord::x)
        .def_readonly("y", &StroboscopicRecord::y);

    py::class_<KickEvent>(m, "KickEvent")
        .def_readonly("time", &KickEvent::time)
        .def_readonly("from_id", &KickEvent::from)
        .def_readonly("to_id", &KickEvent::to)
        .def_readonly("delta", &KickEvent::delta);

    auto rules = m.def_submodule("kick_rules", "Phase increments applied by a firing clock.");
    rules.def("sine", &kick_rules::sine);
    rules.def("none", &kick_rules::none);
    rules.def("by_name", &kick_rules::by_name, py::arg("name"));

    m.def(
        "simulate",
        [](const OscillatorEnsemble& initial, const CouplingParams& params, std::uint64_t n_cycles,
           const KickRule& rule) { return simulate(initial, params, n_cycles, rule); },
        py::arg("initial"), py::arg("params"), py::arg("n_cycles"),
        py::arg("rule") = kick_rules::sine());
    m.def(
        "simulate_with_kicks",
        [](const OscillatorEnsemble& initial, const CouplingParams& params, std::uint64_t n_cycles,
           const KickRule& rule) {
            std::vector<KickEvent> log;
            auto records = simulate(initial, params, n_cycles, rule, &log);
            return py::make_tuple(std::move(records), std::move(log));
        },
        py::arg("initial"), py::arg("params"), py::arg("n_cycles"),
        py::arg("rule") = kick_rules::sine());
    m.def("ensemble_from_differences", &ensemble_from_differences, py::arg("x0"), py::arg("y0"));
    m.def("stroboscopic_deviation", &stroboscopic_deviation, py::arg("records"), py::arg("x0"),
          py::arg("y0"), py::arg("params"));
    m.def("compare_with_map", &compare_with_map, py::arg("x0"), py::arg("y0"), py::arg("params"),
          py::arg("n_cycles"), py::arg("rule") = kick_rules::sine());
}
