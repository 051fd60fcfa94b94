#include "grasspack/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "grasspack/bounds.hpp"
#include "grasspack/certify.hpp"
#include "grasspack/construct.hpp"
#include "grasspack/errors.hpp"
#include "grasspack/frame_io.hpp"
#include "grasspack/metrics.hpp"
#include "grasspack/optimize.hpp"

namespace grasspack::cli {

using nlohmann::json;

namespace {

constexpr int kHumanPrecision = 12;

std::string human_scalar(const json& v) {
  if (v.is_null()) return "n/a";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream s;
    s << std::setprecision(kHumanPrecision) << v.get<double>();
    return s.str();
  }
  return v.dump();
}

// Flat "key: value" lines; nested objects get dotted prefixes.
void print_human(const json& obj, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [key, value] : obj.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      print_human(value, out, name);
    } else if (value.is_array()) {
      out << name << ":";
      for (const auto& e : value) out << ' ' << human_scalar(e);
      out << '\n';
    } else {
      out << name << ": " << human_scalar(value) << '\n';
    }
  }
}

struct Options {
  std::string format = "human";
  double tol = kDefaultTolerance;
};

void emit(const json& report, const Options& opts, std::ostream& out) {
  if (opts.format == "json") {
    out << report.dump() << '\n';
  } else {
    print_human(report, out);
  }
}

Field parse_field(const std::string& s) {
  if (s == "R") return Field::Real;
  if (s == "C") return Field::Complex;
  throw InvalidInput("field: expected R or C, got " + s);
}

std::vector<long> parse_set(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("set: cannot parse element '" + item + "'");
    }
  }
  if (out.empty()) throw InvalidInput("set: empty");
  return out;
}

void write_frame(const FusionFrame& f, const std::string& path, const Options& opts,
                 std::ostream& out) {
  if (path.empty()) {
    out << io::frame_to_json(f).dump() << '\n';
    return;
  }
  io::write_frame_file(path, f);
  emit(json{{"path", path},
            {"field", field_name(f.field())},
            {"d", f.d()},
            {"c", f.c()},
            {"n", f.n()}},
       opts, out);
}

json angles_report(const FusionFrame& f, long i, long j) {
  auto check = [&](long idx, const char* name) {
    if (idx < 1 || idx > f.n()) {
      throw InvalidInput(std::string(name) + ": index " + std::to_string(idx) +
                         " outside 1.." + std::to_string(f.n()));
    }
  };
  check(i, "i");
  check(j, "j");
  const auto& b1 = f.basis(i - 1);
  const auto& b2 = f.basis(j - 1);
  return json{{"i", i},
              {"j", j},
              {"principal_angles", principal_angles(b1, b2).thetas},
              {"chordal_distance_sq", chordal_distance_sq(b1, b2)},
              {"spectral_distance_sq", spectral_distance_sq(b1, b2)},
              {"geodesic_distance", geodesic_distance(b1, b2)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grassmannian packing toolkit: bounds, metrics, certificates, constructions"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"human", "json"}));

  // bounds
  long b_n = 0, b_d = 0, b_c = 1;
  std::string b_field = "R";
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate every packing bound");
  bounds_cmd->add_option("--n", b_n, "Number of subspaces")->required();
  bounds_cmd->add_option("--d", b_d, "Ambient dimension")->required();
  bounds_cmd->add_option("--c", b_c, "Subspace dimension");
  bounds_cmd->add_option("--field", b_field, "R or C");

  // certify
  std::string cert_path;
  auto* certify_cmd = app.add_subcommand("certify", "Certify tight/equi-chordal/equi-isoclinic");
  certify_cmd->add_option("frame", cert_path, "Frame file")->required();
  certify_cmd->add_option("--tol", opts.tol, "Tolerance");

  // angles
  std::string ang_path;
  long ang_i = 0, ang_j = 0;
  auto* angles_cmd = app.add_subcommand("angles", "Principal angles and distances for a pair");
  angles_cmd->add_option("frame", ang_path, "Frame file")->required();
  angles_cmd->add_option("--i", ang_i, "First subspace (1-based)")->required();
  angles_cmd->add_option("--j", ang_j, "Second subspace (1-based)")->required();
  angles_cmd->add_option("--tol", opts.tol, "Tolerance");

  // construct
  std::string out_path;
  auto* construct_cmd = app.add_subcommand("construct", "Build a known packing");
  construct_cmd->require_subcommand(1);
  construct_cmd->fallthrough();
  construct_cmd->add_option("--out", out_path, "Output frame file (default: stdout)");
  long s_n = 0;
  auto* simplex_cmd = construct_cmd->add_subcommand("simplex", "Regular simplex in R^{n-1}");
  simplex_cmd->add_option("--n", s_n, "Number of vectors")->required();
  long o_d = 0;
  auto* orthoplex_cmd = construct_cmd->add_subcommand("orthoplex", "{+-e_j} in R^d");
  orthoplex_cmd->add_option("--d", o_d, "Dimension")->required();
  long h_mod = 0;
  std::string h_set;
  auto* harmonic_cmd = construct_cmd->add_subcommand("harmonic", "Harmonic frame from an index set");
  harmonic_cmd->add_option("--modulus", h_mod, "N")->required();
  harmonic_cmd->add_option("--set", h_set, "Comma-separated residues")->required();
  std::string t_path;
  long t_c = 0;
  auto* tensor_cmd = construct_cmd->add_subcommand("tensor", "phi_j (x) I_c from a unit-vector frame");
  tensor_cmd->add_option("etf", t_path, "Input unit-vector frame file")->required();
  tensor_cmd->add_option("--c", t_c, "Subspace dimension")->required();
  tensor_cmd->add_option("--tol", opts.tol, "Tolerance for reading the input");

  // pack
  std::string p_field = "R", p_criterion = "chordal";
  long p_d = 0, p_c = 1, p_n = 0;
  PackConfig config;
  std::string p_out;
  auto* pack_cmd = app.add_subcommand("pack", "Numerically search for a packing");
  pack_cmd->add_option("--field", p_field, "R or C");
  pack_cmd->add_option("--d", p_d, "Ambient dimension")->required();
  pack_cmd->add_option("--c", p_c, "Subspace dimension");
  pack_cmd->add_option("--n", p_n, "Number of subspaces")->required();
  pack_cmd->add_option("--criterion", p_criterion, "chordal or spectral")
      ->check(CLI::IsMember({"chordal", "spectral"}));
  pack_cmd->add_option("--seed", config.seed, "Random seed");
  pack_cmd->add_option("--restarts", config.restarts, "Independent restarts");
  pack_cmd->add_option("--iters", config.iterations, "Iterations per restart");
  pack_cmd->add_option("--step", config.step, "Gradient step size");
  pack_cmd->add_option("--smoothing", config.smoothing, "Soft-max sharpness");
  pack_cmd->add_option("--tol", config.tolerance, "Certification tolerance");
  pack_cmd->add_option("--out", p_out, "Output frame file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << '\n';
    return 1;
  }

  try {
    if (*bounds_cmd) {
      emit(io::bound_report_to_json(bound_report(b_n, b_d, b_c, parse_field(b_field))), opts, out);
    } else if (*certify_cmd) {
      const auto frame = io::read_frame_file(cert_path, opts.tol);
      emit(io::certificate_to_json(certify(frame, opts.tol)), opts, out);
    } else if (*angles_cmd) {
      const auto frame = io::read_frame_file(ang_path, opts.tol);
      emit(angles_report(frame, ang_i, ang_j), opts, out);
    } else if (*construct_cmd) {
      if (*simplex_cmd) {
        write_frame(regular_simplex(s_n), out_path, opts, out);
      } else if (*orthoplex_cmd) {
        write_frame(orthoplex(o_d), out_path, opts, out);
      } else if (*harmonic_cmd) {
        write_frame(harmonic_etf(DifferenceSet(h_mod, parse_set(h_set))), out_path, opts, out);
      } else if (*tensor_cmd) {
        write_frame(tensor_eitff(io::read_frame_file(t_path, opts.tol), t_c), out_path, opts, out);
      }
    } else if (*pack_cmd) {
      config.criterion =
          p_criterion == "chordal" ? Criterion::ChordalOverlap : Criterion::SpectralOverlap;
      const auto result = pack(parse_field(p_field), p_d, p_c, p_n, config);
      json summary = io::pack_summary_to_json(result, config.criterion);
      if (!p_out.empty()) {
        io::write_frame_file(p_out, result.frame);
        summary["frame_path"] = p_out;
        emit(summary, opts, out);
      } else if (opts.format == "json") {
        summary["frame"] = io::frame_to_json(result.frame);
        emit(summary, opts, out);
      } else {
        emit(summary, opts, out);
        out << "frame: " << io::frame_to_json(result.frame).dump() << '\n';
      }
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace grasspack::cli
