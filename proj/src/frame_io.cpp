#include "grasspack/frame_io.hpp"

#include <fstream>
#include <sstream>

#include "grasspack/errors.hpp"

namespace grasspack::io {

using nlohmann::json;

namespace {

long require_positive_int(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string(key) + ": missing");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw InvalidInput(std::string(key) + ": expected an integer");
  const long x = v.get<long>();
  if (x < 1) throw InvalidInput(std::string(key) + ": must be positive");
  return x;
}

double entry_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw InvalidInput(where + ": expected a number");
  return v.get<double>();
}

std::string basis_label(std::size_t j) { return "basis " + std::to_string(j + 1); }

}  // namespace

json frame_to_json(const FusionFrame& f) {
  json bases = json::array();
  for (const auto& b : f.bases()) {
    json rows = json::array();
    for (Index r = 0; r < b.mat().rows(); ++r) {
      json row = json::array();
      for (Index c = 0; c < b.mat().cols(); ++c) {
        const Scalar z = b.mat()(r, c);
        if (f.field() == Field::Real) {
          row.push_back(z.real());
        } else {
          row.push_back(json::array({z.real(), z.imag()}));
        }
      }
      rows.push_back(std::move(row));
    }
    bases.push_back(std::move(rows));
  }
  return json{{"field", field_name(f.field())},
              {"d", f.d()},
              {"c", f.c()},
              {"n", f.n()},
              {"bases", std::move(bases)}};
}

FusionFrame frame_from_json(const json& j, double tol) {
  if (!j.is_object()) throw InvalidInput("frame: expected a JSON object");
  if (!j.contains("field")) throw InvalidInput("field: missing");
  const auto& fv = j.at("field");
  if (!fv.is_string() || (fv != "R" && fv != "C")) {
    throw InvalidInput("field: expected \"R\" or \"C\"");
  }
  const Field field = fv == "R" ? Field::Real : Field::Complex;
  const long d = require_positive_int(j, "d");
  const long c = require_positive_int(j, "c");
  const long n = require_positive_int(j, "n");
  if (c > d) throw InvalidInput("c: exceeds d");
  if (!j.contains("bases")) throw InvalidInput("bases: missing");
  const auto& bv = j.at("bases");
  if (!bv.is_array()) throw InvalidInput("bases: expected an array");
  if (bv.size() != static_cast<std::size_t>(n)) {
    throw InvalidInput("bases: expected n = " + std::to_string(n) + " matrices, got " +
                       std::to_string(bv.size()));
  }

  std::vector<SubspaceBasis> bases;
  bases.reserve(bv.size());
  for (std::size_t bj = 0; bj < bv.size(); ++bj) {
    const std::string label = basis_label(bj);
    const auto& rows = bv[bj];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(d)) {
      throw InvalidInput(label + ": expected " + std::to_string(d) + " rows");
    }
    Mat m(d, c);
    for (long r = 0; r < d; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(c)) {
        throw InvalidInput(label + ": row " + std::to_string(r + 1) + ": expected " +
                           std::to_string(c) + " entries");
      }
      for (long col = 0; col < c; ++col) {
        const auto& e = row[static_cast<std::size_t>(col)];
        const std::string where = label + ": entry (" + std::to_string(r + 1) + "," +
                                  std::to_string(col + 1) + ")";
        if (field == Field::Real) {
          m(r, col) = Scalar(entry_number(e, where), 0.0);
        } else {
          if (!e.is_array() || e.size() != 2) throw InvalidInput(where + ": expected [re, im]");
          m(r, col) = Scalar(entry_number(e[0], where), entry_number(e[1], where));
        }
      }
    }
    if (!m.allFinite()) throw InvalidInput(label + ": non-finite entry");
    const double dev = linalg::orthonormality_deviation(m);
    if (dev > tol) {
      std::ostringstream msg;
      msg << label << ": columns not orthonormal within tolerance " << tol << " (deviation "
          << dev << ")";
      throw InvalidInput(msg.str());
    }
    bases.push_back(SubspaceBasis::from_orthonormal(std::move(m), tol));
  }
  return FusionFrame(field, std::move(bases));
}

FusionFrame read_frame_file(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("frame file: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidInput("frame file: malformed JSON in " + path + ": " + e.what());
  }
  return frame_from_json(j, tol);
}

void write_frame_file(const std::string& path, const FusionFrame& f) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("output: cannot open " + path + " for writing");
  out << frame_to_json(f).dump() << '\n';
  if (!out) throw InvalidInput("output: write to " + path + " failed");
}

json certificate_to_json(const Certificate& cert) {
  json j{{"tolerance", cert.tolerance},
         {"is_tight", cert.is_tight},
         {"tight_residual", cert.tight_residual},
         {"alpha", cert.alpha},
         {"is_equichordal", cert.is_equichordal},
         {"beta", cert.beta},
         {"equichordal_deviation", cert.equichordal_deviation},
         {"is_equiisoclinic", cert.is_equiisoclinic},
         {"sigma_sq", cert.sigma_sq},
         {"equiisoclinic_deviation", cert.equiisoclinic_deviation},
         {"is_ectff", cert.is_ectff},
         {"is_eitff", cert.is_eitff},
         {"simplex_gap", cert.simplex_gap},
         {"eitff_gap", cert.eitff_gap}};
  j["orthoplex_gap"] = cert.orthoplex_gap ? json(*cert.orthoplex_gap) : json(nullptr);
  return j;
}

json bound_report_to_json(const BoundReport& r) {
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  return json{{"n", r.n},
              {"d", r.d},
              {"c", r.c},
              {"field", field_name(r.field)},
              {"welch", opt(r.welch)},
              {"simplex_chordal", r.simplex_chordal},
              {"simplex_gram", r.simplex_gram},
              {"eitff_spectral", r.eitff_spectral},
              {"orthoplex_chordal", opt(r.orthoplex_chordal)},
              {"orthoplex_gram", opt(r.orthoplex_gram)},
              {"gerzon", r.gerzon},
              {"traceless_dim", r.traceless_dim},
              {"notes", r.notes}};
}

json pack_summary_to_json(const PackResult& result, Criterion criterion) {
  return json{{"criterion", criterion_name(criterion)},
              {"achieved", result.achieved},
              {"bound", result.bound},
              {"gap", result.gap},
              {"iterations_used", result.iterations_used},
              {"restart_index", result.restart_index},
              {"certificate", certificate_to_json(result.certificate)}};
}

}  // namespace grasspack::io
