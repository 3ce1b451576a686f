#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ftqkd/analytic.hpp"
#include "ftqkd/channel.hpp"
#include "ftqkd/config.hpp"
#include "ftqkd/csv.hpp"
#include "ftqkd/density.hpp"
#include "ftqkd/encoder.hpp"
#include "ftqkd/measurement.hpp"
#include "ftqkd/params.hpp"
#include "ftqkd/pulse.hpp"
#include "ftqkd/rng.hpp"
#include "ftqkd/session.hpp"
#include "ftqkd/slicing.hpp"
#include "ftqkd/stats.hpp"

namespace py = pybind11;
using namespace ftqkd;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Single-photon time/frequency QKD simulator and analytic toolkit";
  m.attr("__version__") = "0.1.0";
  m.attr("HALFWIDTH_TO_STD") = kHalfwidthToStd;

  // ---- pulses ----
  py::class_<GaussianPulse>(m, "GaussianPulse")
      .def(py::init([](double t, double f, double hw) {
             return make_transform_limited(t, f, hw);
           }),
           py::arg("center_time"), py::arg("center_freq"), py::arg("spectral_halfwidth"))
      .def_readwrite("center_time", &GaussianPulse::center_time)
      .def_readwrite("center_freq", &GaussianPulse::center_freq)
      .def_readwrite("spectral_halfwidth", &GaussianPulse::spectral_halfwidth)
      .def("__repr__", [](const GaussianPulse& p) {
        return "GaussianPulse(center_time=" + format_float(p.center_time) +
               ", center_freq=" + format_float(p.center_freq) +
               ", spectral_halfwidth=" + format_float(p.spectral_halfwidth) + ")";
      });
  m.def("make_transform_limited", &make_transform_limited, py::arg("center_time"),
        py::arg("center_freq"), py::arg("spectral_halfwidth"));
  m.def("temporal_halfwidth", &temporal_halfwidth, py::arg("pulse"));

  // ---- rng ----
  py::class_<RandomStream>(m, "RandomStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("master_seed"),
           py::arg("stream_index"))
      .def("next_u64", &RandomStream::next_u64)
      .def("uniform", py::overload_cast<>(&RandomStream::uniform))
      .def("uniform", py::overload_cast<double, double>(&RandomStream::uniform),
           py::arg("lo"), py::arg("hi"))
      .def("uniform_index", &RandomStream::uniform_index, py::arg("n"))
      .def("bernoulli", &RandomStream::bernoulli, py::arg("p"))
      .def("normal", &RandomStream::normal)
      .def("gaussian_halfwidth", &RandomStream::gaussian_halfwidth, py::arg("center"),
           py::arg("halfwidth"));
  m.def("derive_seed", &derive_seed, py::arg("master_seed"), py::arg("index"));

  // ---- parameters ----
  py::enum_<SourceMode>(m, "SourceMode")
      .value("GaussianProtocol", SourceMode::GaussianProtocol)
      .value("UniformInBin", SourceMode::UniformInBin);

  py::class_<ProtocolParams>(m, "ProtocolParams")
      .def(py::init<>())
      .def_readwrite("sigma_w1", &ProtocolParams::sigma_w1)
      .def_readwrite("sigma_w2", &ProtocolParams::sigma_w2)
      .def_readwrite("omega0", &ProtocolParams::omega0)
      .def_readwrite("delta_t", &ProtocolParams::delta_t)
      .def_readwrite("delta_w", &ProtocolParams::delta_w)
      .def_readwrite("bin_t", &ProtocolParams::bin_t)
      .def_readwrite("bin_w", &ProtocolParams::bin_w)
      .def_readwrite("buffer_enabled", &ProtocolParams::buffer_enabled)
      .def_readwrite("buffer_fraction", &ProtocolParams::buffer_fraction)
      .def_readwrite("channel_loss", &ProtocolParams::channel_loss)
      .def_readwrite("source_mode", &ProtocolParams::source_mode);

  py::class_<DerivedScales>(m, "DerivedScales")
      .def_readonly("sigma_t1", &DerivedScales::sigma_t1)
      .def_readonly("sigma_t2", &DerivedScales::sigma_t2)
      .def_readonly("s_t", &DerivedScales::s_t)
      .def_readonly("s_w", &DerivedScales::s_w)
      .def_readonly("n_bins_t", &DerivedScales::n_bins_t)
      .def_readonly("n_bins_w", &DerivedScales::n_bins_w);
  m.def("derived_scales", &derived_scales, py::arg("params"));

  py::class_<FeasibilityReport>(m, "FeasibilityReport")
      .def_readonly("security_ok", &FeasibilityReport::security_ok)
      .def_readonly("resolution_ok", &FeasibilityReport::resolution_ok)
      .def_readonly("ordering_ok", &FeasibilityReport::ordering_ok)
      .def_readonly("separation_ratio", &FeasibilityReport::separation_ratio)
      .def_readonly("s_t", &FeasibilityReport::s_t)
      .def_readonly("s_w", &FeasibilityReport::s_w)
      .def_readonly("bin_product", &FeasibilityReport::bin_product)
      .def_readonly("resolution_product", &FeasibilityReport::resolution_product)
      .def_readonly("resolution_bound", &FeasibilityReport::resolution_bound);
  m.def("check_feasibility", &check_feasibility, py::arg("params"));

  // ---- protocol round pieces ----
  py::enum_<Basis>(m, "Basis")
      .value("Frequency", Basis::Frequency)
      .value("Time", Basis::Time);

  py::class_<AliceChoice>(m, "AliceChoice")
      .def_readonly("basis", &AliceChoice::basis)
      .def_readonly("value", &AliceChoice::value)
      .def_readonly("intended_bin", &AliceChoice::intended_bin)
      .def_readonly("in_buffer", &AliceChoice::in_buffer);

  py::class_<BobResult>(m, "BobResult")
      .def_readonly("basis", &BobResult::basis)
      .def_readonly("measured_value", &BobResult::measured_value)
      .def_readonly("detected", &BobResult::detected);

  m.def("encode", &encode, py::arg("params"), py::arg("rng"));
  m.def("measure", &measure, py::arg("pulse"), py::arg("params"), py::arg("rng"));
  m.def("basis_marginals", &basis_marginals, py::arg("n"), py::arg("params"),
        py::arg("rng"));

  // ---- channel / attacks ----
  py::enum_<AttackKind>(m, "AttackKind")
      .value("NoAttack", AttackKind::None)  // `None` is reserved in Python
      .value("TimeIntercept", AttackKind::TimeIntercept)
      .value("FrequencyIntercept", AttackKind::FrequencyIntercept)
      .value("SimultaneousIntercept", AttackKind::SimultaneousIntercept);

  py::class_<AttackStrategy>(m, "AttackStrategy")
      .def(py::init<>())
      .def_readwrite("kind", &AttackStrategy::kind)
      .def_readwrite("eve_delta_t", &AttackStrategy::eve_delta_t)
      .def_readwrite("eve_delta_w", &AttackStrategy::eve_delta_w)
      .def_readwrite("resend_halfwidth", &AttackStrategy::resend_halfwidth);
  m.def("default_attack", &default_attack, py::arg("kind"), py::arg("params"));

  py::class_<ChannelTrace>(m, "ChannelTrace")
      .def_readonly("eve_time_estimate", &ChannelTrace::eve_time_estimate)
      .def_readonly("eve_freq_estimate", &ChannelTrace::eve_freq_estimate)
      .def_readonly("resent", &ChannelTrace::resent);
  m.def("transmit", &transmit, py::arg("pulse"), py::arg("attack"), py::arg("params"),
        py::arg("rng"));

  // ---- analytic rates ----
  m.def("erf", &ftqkd::erf, py::arg("x"));
  m.def("analytic_pe_unbuffered", &analytic_pe_unbuffered, py::arg("s"));
  py::class_<BufferedProbs>(m, "BufferedProbs")
      .def_readonly("p_r", &BufferedProbs::p_r)
      .def_readonly("p_b", &BufferedProbs::p_b)
      .def_readonly("p_w", &BufferedProbs::p_w)
      .def_readonly("p_e", &BufferedProbs::p_e);
  m.def("analytic_probs_buffered", &analytic_probs_buffered, py::arg("s"),
        py::arg("buffer_fraction") = 0.5);

  // ---- slicing / stats ----
  py::class_<SliceLayout>(m, "SliceLayout")
      .def(py::init<>())
      .def_readwrite("pitch", &SliceLayout::pitch)
      .def_readwrite("buffered", &SliceLayout::buffered)
      .def_readwrite("origin", &SliceLayout::origin)
      .def_readwrite("buffer_fraction", &SliceLayout::buffer_fraction);
  m.def("time_layout", &time_layout, py::arg("params"));
  m.def("freq_layout", &freq_layout, py::arg("params"));
  m.def("bin_halfwidth", &bin_halfwidth, py::arg("layout"));

  py::class_<BinOutcome> bin_outcome(m, "BinOutcome");
  py::enum_<BinOutcome::Kind>(bin_outcome, "Kind")
      .value("Bin", BinOutcome::Kind::Bin)
      .value("Buffer", BinOutcome::Kind::Buffer)
      .value("Lost", BinOutcome::Kind::Lost);
  bin_outcome.def_readonly("kind", &BinOutcome::kind)
      .def_readonly("index", &BinOutcome::index)
      .def("is_bin", &BinOutcome::is_bin);
  m.def("slice_value", &slice, py::arg("value"), py::arg("layout"));

  py::class_<PhotonRecord>(m, "PhotonRecord")
      .def_readonly("alice", &PhotonRecord::alice)
      .def_readonly("bob", &PhotonRecord::bob)
      .def_readonly("trace", &PhotonRecord::trace)
      .def_readonly("round_index", &PhotonRecord::round_index);
  m.def("sift", &sift, py::arg("records"));

  py::class_<Alphabet>(m, "Alphabet")
      .def_readonly("k_min", &Alphabet::k_min)
      .def_readonly("n_bins", &Alphabet::n_bins)
      .def_readonly("bits_per_symbol", &Alphabet::bits_per_symbol);
  m.def("time_alphabet", &time_alphabet, py::arg("params"));
  m.def("freq_alphabet", &freq_alphabet, py::arg("params"));
  m.def("extract_key_bits", &extract_key_bits, py::arg("records"), py::arg("params"));
  m.def("empirical_stats", &empirical_stats, py::arg("records"), py::arg("params"));

  py::class_<BasisCounts>(m, "BasisCounts")
      .def_readonly("sifted", &BasisCounts::sifted)
      .def_readonly("alice_buffer", &BasisCounts::alice_buffer)
      .def_readonly("bob_buffer", &BasisCounts::bob_buffer)
      .def_readonly("correct", &BasisCounts::correct)
      .def_readonly("wrong", &BasisCounts::wrong)
      .def("conclusive", &BasisCounts::conclusive);

  py::class_<SessionStats>(m, "SessionStats")
      .def_readonly("seed", &SessionStats::seed)
      .def_readonly("n_rounds", &SessionStats::n_rounds)
      .def_readonly("source_mode", &SessionStats::source_mode)
      .def_readonly("buffered", &SessionStats::buffered)
      .def_readonly("attack", &SessionStats::attack)
      .def_readonly("s_t", &SessionStats::s_t)
      .def_readonly("s_w", &SessionStats::s_w)
      .def_readonly("lost", &SessionStats::lost)
      .def_readonly("wrong_basis", &SessionStats::wrong_basis)
      .def_readonly("time", &SessionStats::time)
      .def_readonly("freq", &SessionStats::freq)
      .def_readonly("qber_time", &SessionStats::qber_time)
      .def_readonly("qber_freq", &SessionStats::qber_freq)
      .def_readonly("analytic_pe_time", &SessionStats::analytic_pe_time)
      .def_readonly("analytic_pe_freq", &SessionStats::analytic_pe_freq)
      .def_readonly("conclusive_efficiency", &SessionStats::conclusive_efficiency)
      .def_readonly("bits_extracted", &SessionStats::bits_extracted)
      .def_readonly("bit_errors", &SessionStats::bit_errors)
      .def_readonly("sweep_parameter", &SessionStats::sweep_parameter)
      .def_readonly("sweep_value", &SessionStats::sweep_value);

  // ---- spectral density toolkit ----
  py::class_<SpectralGrid>(m, "SpectralGrid")
      .def_readonly("center", &SpectralGrid::center)
      .def_readonly("halfspan", &SpectralGrid::halfspan)
      .def_readonly("n_points", &SpectralGrid::n_points)
      .def("spacing", &SpectralGrid::spacing)
      .def("point", &SpectralGrid::point, py::arg("i"))
      .def("weight", &SpectralGrid::weight, py::arg("i"))
      .def(py::self == py::self);
  m.def("make_grid", &make_grid, py::arg("center"), py::arg("halfspan"),
        py::arg("n_points"));

  py::class_<SpectralDensityMatrix>(m, "SpectralDensityMatrix")
      .def_readonly("grid", &SpectralDensityMatrix::grid)
      .def_property_readonly(
          "entries", [](const SpectralDensityMatrix& d) { return d.entries; });
  m.def("hermiticity_residual", &hermiticity_residual, py::arg("m"));
  m.def("min_eigenvalue", &min_eigenvalue, py::arg("m"));
  m.def("purity", &purity, py::arg("m"));
  m.def("build_rho_frequency_kernel", &build_rho_frequency_kernel, py::arg("grid"),
        py::arg("sigma_narrow"), py::arg("sigma_spread"));
  m.def("build_rho_time_kernel", &build_rho_time_kernel, py::arg("grid"),
        py::arg("sigma_broad"), py::arg("sigma_delay_inv"));
  m.def("build_rho_frequency", &build_rho_frequency, py::arg("params"), py::arg("grid"));
  m.def("build_rho_time", &build_rho_time, py::arg("params"), py::arg("grid"));
  m.def("pure_state_density", &pure_state_density, py::arg("grid"), py::arg("center"),
        py::arg("halfwidth"));
  m.def("trace_distance", &trace_distance, py::arg("a"), py::arg("b"),
        py::call_guard<py::gil_scoped_release>());
  m.def("distinguishability_sweep", &distinguishability_sweep, py::arg("ratios"),
        py::arg("params"), py::arg("grid"), py::call_guard<py::gil_scoped_release>());

  // ---- sessions ----
  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("parameter", &SweepSpec::parameter)
      .def_readwrite("values", &SweepSpec::values);

  py::class_<SessionConfig>(m, "SessionConfig")
      .def(py::init<>())
      .def_readwrite("params", &SessionConfig::params)
      .def_readwrite("attack", &SessionConfig::attack)
      .def_readwrite("n_rounds", &SessionConfig::n_rounds)
      .def_readwrite("master_seed", &SessionConfig::master_seed)
      .def_readwrite("sweep", &SessionConfig::sweep)
      .def_readwrite("output_path", &SessionConfig::output_path);

  m.def("validate", py::overload_cast<const ProtocolParams&>(&validate), py::arg("params"));
  m.def("validate", py::overload_cast<const AttackStrategy&>(&validate), py::arg("attack"));
  m.def("validate", py::overload_cast<const SessionConfig&>(&validate), py::arg("config"));
  m.def("sweepable_parameters", &sweepable_parameters);
  m.def("apply_parameter", &apply_parameter, py::arg("config"), py::arg("name"),
        py::arg("value"));
  m.def("simulate_round", &simulate_round, py::arg("config"), py::arg("round_index"));
  m.def("run_session", &run_session, py::arg("config"), py::arg("n_threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("run_sweep", &run_sweep, py::arg("config"), py::arg("n_threads") = 1,
        py::call_guard<py::gil_scoped_release>());

  py::class_<ComparisonReport>(m, "ComparisonReport")
      .def_readonly("z_time", &ComparisonReport::z_time)
      .def_readonly("z_freq", &ComparisonReport::z_freq)
      .def_readonly("comparable", &ComparisonReport::comparable)
      .def_readonly("approximate", &ComparisonReport::approximate)
      .def_readonly("pass_", &ComparisonReport::pass)  // `pass` is reserved in Python
      .def("__repr__", [](const ComparisonReport& r) {
        return "ComparisonReport(z_time=" + format_float(r.z_time) +
               ", z_freq=" + format_float(r.z_freq) +
               ", pass=" + (r.pass ? std::string("True") : std::string("False")) + ")";
      });
  m.def("report_compare", &report_compare, py::arg("stats"));

  // ---- csv / config ----
  m.def("csv_header", &csv_header);
  m.def("csv_row", &csv_row, py::arg("stats"));
  m.def("parse_stats_csv", &parse_stats_csv, py::arg("text"));
  m.def("format_float", &format_float, py::arg("v"));

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  m.def("parse_config", &parse_config, py::arg("text"));
  m.def("load_config", &load_config, py::arg("path"));
  m.def("config_to_json", &config_to_json, py::arg("config"));
}
