// Copyright 2026 The qsonus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qsonus: batch front end for the audio and sawtooth pipelines.
//
//   qsonus reconstruct  --synthetic --nq 16 --shots-per-frame 5 --out run
//   qsonus spectrogram  --in speech.wav --nq 18 --epsilon 0.05 --out fig
//   qsonus sweep        --synthetic --M 5,20,100,1000 --epsilon 0,0.05,0.1 --out sweep
//   qsonus sawtooth     --nq 14 --K -0.5 --iters 100 --l0 100 --epsilon 0.05 --out saw
//
// Exit codes: 0 success, 1 usage or runtime error, 2 unreadable WAV input,
// 3 register too small for the signal or momentum label out of range,
// 4 empty or malformed sweep list.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsonus/audio.hpp"
#include "qsonus/csv.hpp"
#include "qsonus/errors.hpp"
#include "qsonus/grid_io.hpp"
#include "qsonus/measurement.hpp"
#include "qsonus/metrics.hpp"
#include "qsonus/qft.hpp"
#include "qsonus/sawtooth.hpp"
#include "qsonus/sweep.hpp"

namespace {

using namespace qsonus;

constexpr int kExitFailure = 1;
constexpr int kExitBadWav = 2;
constexpr int kExitBadSize = 3;
constexpr int kExitBadList = 4;

struct CliError : std::runtime_error {
  CliError(int c, const std::string& what) : std::runtime_error(what), code(c) {}
  int code;
};

// ---------------------------------------------------------------------------
// option groups

struct SignalOptions {
  std::string in;
  bool synthetic = false;
  double duration = 4.0;
  std::uint32_t rate = kAudioRate;
};

struct RunOptions {
  SignalOptions signal;
  std::optional<int> n_qubits;
  int frame_qubits = kAudioFrameQubits;
  std::uint64_t shots_per_frame = 5;
  std::string mode = "total";
  double epsilon = 0.0;
  std::uint64_t seed = 1;
  std::string distribution = "gaussian";
  std::string reference = "ideal";
  std::string rows;
  std::string cols;
  std::string format = "ppm";
  std::string out;
};

void add_signal_options(CLI::App* cmd, SignalOptions& s) {
  auto* in = cmd->add_option("--in", s.in, "Input WAV (mono PCM16)");
  auto* syn = cmd->add_flag("--synthetic", s.synthetic, "Use the built-in speech-like test signal");
  in->excludes(syn);
  cmd->add_option("--duration", s.duration, "Synthetic signal length in seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--rate", s.rate, "Synthetic signal sample rate in Hz")->check(CLI::PositiveNumber);
}

void add_run_options(CLI::App* cmd, RunOptions& o) {
  add_signal_options(cmd, o.signal);
  cmd->add_option("--nq", o.n_qubits, "Register qubits (default: smallest that fits the signal)")
      ->check(CLI::Range(1, StateVector::kMaxQubits));
  cmd->add_option("--nf", o.frame_qubits, "Frame qubits")->capture_default_str()->check(CLI::Range(1, 30));
  cmd->add_option("--mode", o.mode, "Shot allocation")
      ->capture_default_str()
      ->check(CLI::IsMember({"total", "per-frame"}));
  cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  cmd->add_option("--noise-distribution", o.distribution, "Gate angle error law")
      ->capture_default_str()
      ->check(CLI::IsMember({"gaussian", "uniform"}));
  cmd->add_option("--out", o.out, "Output path prefix")->required();
}

NoiseDistribution distribution_of(const RunOptions& o) {
  return o.distribution == "uniform" ? NoiseDistribution::Uniform : NoiseDistribution::Gaussian;
}

MeasurementMode mode_of(const RunOptions& o) { return *parse_measurement_mode(o.mode); }

Readout readout_of(const RunOptions& o) {
  if (o.shots_per_frame == 0) return {};
  return {o.shots_per_frame, mode_of(o)};
}

NoiseModel noise_of(const RunOptions& o, double epsilon, std::uint64_t stream) {
  return {epsilon, distribution_of(o), o.seed, stream};
}

// ---------------------------------------------------------------------------
// helpers

PcmSignal load_signal(const SignalOptions& s, std::uint64_t seed) {
  if (s.synthetic) return synth_speech_like(s.duration, s.rate, seed);
  if (s.in.empty()) throw CliError(kExitFailure, "give --in <file.wav> or --synthetic");
  try {
    return load_wav(s.in);
  } catch (const FormatError& e) {
    throw CliError(kExitBadWav, e.what());
  }
}

int register_qubits(const PcmSignal& signal, const RunOptions& o) {
  const int needed = std::max(qubits_for_length(signal.samples.size()), o.frame_qubits);
  if (!o.n_qubits) return needed;
  if (*o.n_qubits < needed) {
    throw CliError(kExitBadSize, std::to_string(signal.samples.size()) + " samples with n_f = " +
                                     std::to_string(o.frame_qubits) + " need at least " +
                                     std::to_string(needed) + " qubits, got --nq " +
                                     std::to_string(*o.n_qubits));
  }
  return *o.n_qubits;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    std::string item = text.substr(start, end - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
    start = end + 1;
  }
  return out;
}

template <typename T>
std::optional<T> parse_number(const std::string& text) {
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

/// "1,2,3" or "1-4" or a mix; empty text gives `fallback`.
std::vector<int> parse_qubits(const std::string& text, std::vector<int> fallback) {
  if (text.empty()) return fallback;
  std::vector<int> out;
  for (const auto& item : split(text)) {
    const auto dash = item.find('-', 1);
    const auto lo = parse_number<int>(item.substr(0, dash));
    const auto hi = dash == std::string::npos ? lo : parse_number<int>(item.substr(dash + 1));
    if (!lo || !hi || *hi < *lo) throw CliError(kExitFailure, "bad qubit list entry '" + item + "'");
    for (int q = *lo; q <= *hi; ++q) out.push_back(q);
  }
  return out;
}

std::vector<int> qubit_range(int first, int count) {
  std::vector<int> out;
  for (int q = first; q < first + count; ++q) out.push_back(q);
  return out;
}

std::vector<double> squared(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](double x) { return x * x; });
  return out;
}

double correlation_or_nan(const std::vector<double>& a, const std::vector<double>& b) {
  try {
    return pearson_correlation(a, b);
  } catch (const std::exception&) {
    return std::nan("");
  }
}

void save_trimmed(std::vector<double> samples, std::size_t length, std::uint32_t rate,
                  const std::string& path) {
  samples.resize(length);
  save_wav(PcmSignal{rescale_to_peak(std::move(samples)), rate}, path);
  std::cout << "wrote " << path << '\n';
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError(kExitFailure, "cannot write " + path);
  return out;
}

ImageFormat format_of(const RunOptions& o) { return *parse_image_format(o.format); }

void add_image_options(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--row-qubits", o.rows, "Measured qubits for diagram rows, e.g. 1-4");
  cmd->add_option("--col-qubits", o.cols, "Measured qubits for diagram columns, e.g. 10-13");
  cmd->add_option("--format", o.format, "Image format")
      ->capture_default_str()
      ->check(CLI::IsMember({"ppm", "pgm", "csv"}));
}

// ---------------------------------------------------------------------------
// commands

void run_reconstruct(const RunOptions& o) {
  const PcmSignal signal = load_signal(o.signal, o.seed);
  const int nq = register_qubits(signal, o);
  const auto reference =
      o.reference == "original" ? FidelityReference::Original : FidelityReference::IdealReconstruction;
  const ReconstructionPipeline pipe(signal, nq, o.frame_qubits, reference);
  const Readout readout = readout_of(o);

  auto out = open_csv(o.out + ".fidelity.csv");
  out << "pipeline,M,epsilon,seed,reference,fidelity\n";
  for (Pipeline p : {Pipeline::TimeDomain, Pipeline::Spectral}) {
    const auto noise = noise_of(o, o.epsilon, p == Pipeline::Spectral ? 1 : 0);
    const auto result = pipe.run(p, readout, noise);
    const double f = pipe.score(p, result);
    out << to_string(p) << ',' << o.shots_per_frame << ',' << format_double(o.epsilon) << ','
        << o.seed << ',' << o.reference << ',' << format_double(f) << '\n';
    std::cout << to_string(p) << " fidelity " << f << '\n';
    save_trimmed(result, signal.samples.size(), signal.rate,
                 o.out + (p == Pipeline::Spectral ? ".spectral.wav" : ".time.wav"));
  }
  std::cout << "wrote " << o.out << ".fidelity.csv\n";
}

void run_spectrogram(const RunOptions& o) {
  const PcmSignal signal = load_signal(o.signal, o.seed);
  const int nq = register_qubits(signal, o);
  const int nf = o.frame_qubits;
  const auto rows = parse_qubits(o.rows, qubit_range(1, std::min(4, nq - nf)));
  const auto cols = parse_qubits(o.cols, qubit_range(nq - nf + 1, std::min(4, nf)));
  if (rows.empty()) throw CliError(kExitFailure, "no frame qubits left for diagram rows; set --row-qubits");

  const ReconstructionPipeline pipe(signal, nq, nf);
  const std::uint64_t shots = std::max<std::uint64_t>(o.shots_per_frame, 1) * pipe.plan().frame_count();

  const CoarseGrid original = coarse_diagram(pipe.transformed(), rows, cols);

  auto sampling = noise_of(o, 0.0, 1).sampling_stream();
  const CoarseGrid spectral = coarse_diagram(pipe.transformed(), rows, cols, shots, sampling);

  const auto noise = noise_of(o, o.epsilon, 2);
  StateVector noisy = pipe.encoded();
  GateContext ctx(noise);
  qft_low_qubits(noisy, pipe.plan(), ctx);
  auto noisy_sampling = noise.sampling_stream();
  const CoarseGrid spectral_noisy = coarse_diagram(noisy, rows, cols, shots, noisy_sampling);

  // spectrum of the signal recovered from time-domain measurements
  const auto magnitudes = pipe.run(Pipeline::TimeDomain, Readout{std::max<std::uint64_t>(o.shots_per_frame, 1), mode_of(o)},
                                   noise_of(o, 0.0, 0));
  StateVector recovered = encode(PcmSignal{magnitudes, signal.rate}, nq);
  GateContext exact;
  qft_low_qubits(recovered, pipe.plan(), exact);
  const CoarseGrid time = coarse_diagram(recovered, rows, cols);

  const ImageFormat format = format_of(o);
  const std::pair<const char*, const CoarseGrid*> panels[] = {
      {"original", &original}, {"time", &time}, {"spectral", &spectral}, {"spectral_noisy", &spectral_noisy}};
  std::vector<CoarseGrid> layout;
  for (const auto& [name, grid] : panels) {
    render_grid(*grid, o.out + "." + name, format);
    layout.push_back(*grid);
    std::cout << name << ": correlation with original " << correlation_or_nan(grid->values, original.values)
              << '\n';
  }
  render_panels(layout, 2, 16, o.out + ".panels", format);
  std::cout << "wrote " << o.out << ".{original,time,spectral,spectral_noisy,panels}\n";
}

struct SweepOptions {
  RunOptions run;
  std::string shots = "5,20,100,1000";
  std::string epsilons = "0,0.05,0.1,0.3,1";
  int realizations = 10;
};

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* flag, bool allow_zero) {
  const auto items = split(text);
  if (items.empty()) throw CliError(kExitBadList, std::string(flag) + " list is empty");
  std::vector<T> out;
  for (const auto& item : items) {
    const auto v = parse_number<T>(item);
    if (!v || *v < T{0} || (!allow_zero && *v == T{0}) || !std::isfinite(static_cast<double>(*v))) {
      throw CliError(kExitBadList, std::string(flag) + ": bad entry '" + item + "'");
    }
    out.push_back(*v);
  }
  return out;
}

void run_sweep(const SweepOptions& s) {
  const RunOptions& o = s.run;
  SweepConfig cfg;
  cfg.shots_per_frame = parse_list<std::uint64_t>(s.shots, "--M", false);
  cfg.epsilons = parse_list<double>(s.epsilons, "--epsilon-list", true);
  const PcmSignal signal = load_signal(o.signal, o.seed);
  cfg.n_qubits = register_qubits(signal, o);
  cfg.frame_qubits = o.frame_qubits;
  cfg.realizations = s.realizations;
  cfg.mode = mode_of(o);
  cfg.seed = o.seed;
  cfg.noise_distribution = distribution_of(o);
  cfg.reference =
      o.reference == "original" ? FidelityReference::Original : FidelityReference::IdealReconstruction;

  const auto reports = sweep_measurements(signal, cfg);
  {
    auto out = open_csv(o.out + ".csv");
    write_sweep_csv(out, reports);
  }

  const auto summaries = summarize(reports);
  {
    auto out = open_csv(o.out + ".summary.csv");
    out << "pipeline,M,epsilon,mean,standard_error,realizations\n";
    for (const auto& r : summaries) {
      out << to_string(r.pipeline) << ',' << r.shots_per_frame << ',' << format_double(r.epsilon) << ','
          << format_double(r.mean) << ',' << format_double(r.standard_error) << ',' << r.realizations << '\n';
    }
  }

  auto out = open_csv(o.out + ".fit.csv");
  out << "M,coefficient,residual,exponent,prefactor,points\n";
  for (auto m : cfg.shots_per_frame) {
    try {
      const auto fit = fit_sweep(summaries, m, cfg.frame_qubits);
      out << m << ',' << format_double(fit.coefficient) << ',' << format_double(fit.residual) << ','
          << format_double(fit.exponent) << ',' << format_double(fit.prefactor) << ',' << fit.points << '\n';
      std::cout << "M=" << m << ": 1-f = " << fit.coefficient << " eps^2 n_f^2, exponent " << fit.exponent
                << '\n';
    } catch (const FitError& e) {
      std::cerr << "M=" << m << ": no fit (" << e.what() << ")\n";
    }
  }
  std::cout << "wrote " << o.out << ".csv, " << o.out << ".summary.csv, " << o.out << ".fit.csv ("
            << reports.size() << " runs)\n";
}

struct SawtoothOptions {
  RunOptions run;
  int n_qubits = 14;
  double chaos = -0.5;
  int iterations = 100;
  long l0 = 100;
  std::uint32_t rate = kSawtoothRate;
};

void run_sawtooth(const SawtoothOptions& s) {
  const RunOptions& o = s.run;
  const int nq = s.n_qubits;
  const int nf = o.frame_qubits;
  if (nf > nq) throw CliError(kExitBadSize, "--nf exceeds --nq");
  const auto params = SawtoothParams::from_chaos(nq, s.chaos, s.iterations);
  const long n = static_cast<long>(params.dimension());
  if (s.l0 < 1 || s.l0 > n) {
    throw CliError(kExitBadSize, "--l0 must lie in 1.." + std::to_string(n) + " (momentum l0 - N/2)");
  }
  const long momentum = s.l0 - n / 2;

  const std::vector<int> default_cols = qubit_range(nq - nf + 1, nf);
  const auto rows = parse_qubits(o.rows, qubit_range(1, std::min(nf, nq - nf)));
  const auto cols = parse_qubits(o.cols, default_cols);
  if (rows.empty()) throw CliError(kExitFailure, "no qubits left for diagram rows; set --row-qubits");
  const FramePlan plan(nq, nf);
  const std::uint64_t shots = std::max<std::uint64_t>(o.shots_per_frame, 1) * plan.frame_count();
  // harmonic columns are reordered to momentum order when they span the frame register
  const auto align = [&](const CoarseGrid& g) {
    return cols == default_cols ? spectrum_columns_by_momentum(g) : g;
  };

  StateVector ideal = momentum_eigenstate(params, momentum);
  GateContext exact;
  iterate_map(ideal, params, exact);
  StateVector transformed = ideal;
  qft_low_qubits(transformed, plan, exact);

  const CoarseGrid sg_exact = align(coarse_diagram(transformed, rows, cols));
  auto sampling = noise_of(o, 0.0, 1).sampling_stream();
  const CoarseGrid sg_sampled = align(coarse_diagram(transformed, rows, cols, shots, sampling));

  const auto noise = noise_of(o, o.epsilon, 2);
  StateVector evolved = momentum_eigenstate(params, momentum);
  GateContext noisy(noise);
  iterate_map(evolved, params, noisy);
  StateVector noisy_transformed = evolved;
  qft_low_qubits(noisy_transformed, plan, noisy);
  auto noisy_sampling = noise.sampling_stream();
  const CoarseGrid sg_noisy = align(coarse_diagram(noisy_transformed, rows, cols, shots, noisy_sampling));

  PcmSignal sound = quantum_sound(evolved, plan, readout_of(o), noise_of(o, o.epsilon, 3));
  sound.rate = s.rate;
  save_wav(sound, o.out + ".sound.wav");
  std::cout << "wrote " << o.out << ".sound.wav (" << sound.samples.size() << " samples at " << sound.rate
            << " Hz)\n";

  HusimiOptions gauss;
  gauss.theta_cells = std::size_t{1} << rows.size();
  gauss.momentum_cells = std::size_t{1} << cols.size();
  HusimiOptions box = gauss;
  box.smoothing = Smoothing::Box;
  box.box_width = plan.frame_size();
  const CoarseGrid h_gauss = as_coarse_grid(husimi(ideal, params, gauss));
  const CoarseGrid h_box = as_coarse_grid(husimi(ideal, params, box));

  const ImageFormat format = format_of(o);
  const std::pair<const char*, const CoarseGrid*> outputs[] = {{"sg_exact", &sg_exact},
                                                              {"sg_sampled", &sg_sampled},
                                                              {"sg_noisy", &sg_noisy},
                                                              {"husimi_gaussian", &h_gauss},
                                                              {"husimi_box", &h_box}};
  for (const auto& [name, grid] : outputs) render_grid(*grid, o.out + "." + name, format);
  if (h_gauss.rows == sg_exact.rows && h_gauss.cols == sg_exact.cols) {
    render_panels(std::vector<CoarseGrid>{sg_exact, h_gauss, sg_sampled, sg_noisy}, 2, 8, o.out + ".panels",
                  format);
  }

  const auto sg2 = squared(sg_exact.values);
  std::cout << "correlation S^(g) exact vs husimi box:      " << correlation_or_nan(sg2, h_box.values) << '\n'
            << "correlation S^(g) exact vs husimi gaussian: " << correlation_or_nan(sg2, h_gauss.values) << '\n'
            << "correlation husimi box vs husimi gaussian:  " << correlation_or_nan(h_box.values, h_gauss.values)
            << '\n'
            << "correlation S^(g) sampled vs exact:         "
            << correlation_or_nan(squared(sg_sampled.values), sg2) << '\n'
            << "correlation S^(g) noisy vs exact:           "
            << correlation_or_nan(squared(sg_noisy.values), sg2) << '\n';
  std::cout << "wrote " << o.out << ".{sg_exact,sg_sampled,sg_noisy,husimi_gaussian,husimi_box}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Audio signals and quantum-map wavefunctions on a simulated quantum register"};
  app.require_subcommand(1);

  RunOptions rec;
  auto* reconstruct = app.add_subcommand("reconstruct", "Time-domain and spectral reconstruction with fidelities");
  add_run_options(reconstruct, rec);
  reconstruct->add_option("--shots-per-frame", rec.shots_per_frame, "Measurements per frame M (0: exact)")
      ->capture_default_str();
  reconstruct->add_option("--epsilon", rec.epsilon, "Gate noise amplitude")->capture_default_str()->check(CLI::NonNegativeNumber);
  reconstruct->add_option("--reference", rec.reference, "Fidelity reference")
      ->capture_default_str()
      ->check(CLI::IsMember({"ideal", "original"}));

  RunOptions sg_opts;
  sg_opts.epsilon = 0.05;
  auto* spectrogram = app.add_subcommand("spectrogram", "Coarse-grained spectrum diagrams");
  add_run_options(spectrogram, sg_opts);
  add_image_options(spectrogram, sg_opts);
  spectrogram->add_option("--shots-per-frame", sg_opts.shots_per_frame, "Measurements per frame M")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  spectrogram->add_option("--epsilon", sg_opts.epsilon, "Gate noise amplitude of the noisy panel")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  SweepOptions sw;
  auto* sweep = app.add_subcommand("sweep", "Fidelity over measurement counts and noise amplitudes");
  add_run_options(sweep, sw.run);
  sweep->add_option("--M", sw.shots, "Comma-separated measurements per frame")->capture_default_str();
  sweep->add_option("--epsilon-list,--epsilon", sw.epsilons, "Comma-separated noise amplitudes")
      ->capture_default_str();
  sweep->add_option("--realizations", sw.realizations, "Runs per point")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--reference", sw.run.reference, "Fidelity reference")
      ->capture_default_str()
      ->check(CLI::IsMember({"ideal", "original"}));

  SawtoothOptions saw;
  saw.run.frame_qubits = kSawtoothFrameQubits;
  auto* sawtooth = app.add_subcommand("sawtooth", "Quantum sawtooth map: sound, S^(g) diagrams, Husimi");
  sawtooth->add_option("--nq", saw.n_qubits, "Register qubits")->capture_default_str()->check(CLI::Range(2, 24));
  sawtooth->add_option("--nf", saw.run.frame_qubits, "Frame qubits")->capture_default_str()->check(CLI::Range(1, 24));
  sawtooth->add_option("--K", saw.chaos, "Chaos parameter K = kT")->capture_default_str();
  sawtooth->add_option("--iters", saw.iterations, "Map iterations")->capture_default_str()->check(CLI::NonNegativeNumber);
  sawtooth->add_option("--l0", saw.l0, "Initial momentum label l0 + N/2 in 1..N")->capture_default_str();
  sawtooth->add_option("--shots-per-frame", saw.run.shots_per_frame, "Measurements per frame M (0: exact sound)")
      ->capture_default_str();
  sawtooth->add_option("--mode", saw.run.mode, "Shot allocation")
      ->capture_default_str()
      ->check(CLI::IsMember({"total", "per-frame"}));
  sawtooth->add_option("--epsilon", saw.run.epsilon, "Gate noise amplitude")->capture_default_str()->check(CLI::NonNegativeNumber);
  sawtooth->add_option("--seed", saw.run.seed, "Random seed")->capture_default_str();
  sawtooth->add_option("--noise-distribution", saw.run.distribution, "Gate angle error law")
      ->capture_default_str()
      ->check(CLI::IsMember({"gaussian", "uniform"}));
  sawtooth->add_option("--rate", saw.rate, "Sound sample rate in Hz")->capture_default_str()->check(CLI::PositiveNumber);
  sawtooth->add_option("--out", saw.run.out, "Output path prefix")->required();
  add_image_options(sawtooth, saw.run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*reconstruct) run_reconstruct(rec);
    if (*spectrogram) run_spectrogram(sg_opts);
    if (*sweep) run_sweep(sw);
    if (*sawtooth) run_sawtooth(saw);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
