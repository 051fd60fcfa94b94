#include "grasspack/bounds.hpp"

#include <string>

#include "grasspack/errors.hpp"

namespace grasspack {

namespace {

void require_ndc(long n, long d, long c, const char* op) {
  if (d < 1 || c < 1) throw InvalidInput(std::string(op) + ": d and c must be positive");
  if (c > d) {
    throw InvalidInput(std::string(op) + ": c = " + std::to_string(c) + " exceeds d = " +
                       std::to_string(d));
  }
  if (n < 2) throw InvalidInput(std::string(op) + ": n must be at least 2");
}

}  // namespace

double welch_bound(long n, long d) {
  if (d < 1) throw InvalidInput("welch_bound: d must be positive");
  if (n < 2) throw InvalidInput("welch_bound: n must be at least 2");
  if (n < d) {
    throw InvalidInput("welch_bound: n = " + std::to_string(n) + " is less than d = " +
                       std::to_string(d));
  }
  return static_cast<double>(n - d) / static_cast<double>(d * (n - 1));
}

RankinSimplex rankin_simplex_bound(long n) {
  if (n < 2) throw InvalidInput("rankin_simplex_bound: n must be at least 2");
  const double inner = -1.0 / static_cast<double>(n - 1);
  return {inner, 2.0 * (1.0 - inner)};
}

std::optional<double> rankin_orthoplex_bound(long n, long d) {
  if (n >= d + 2) return 0.0;
  return std::nullopt;
}

double simplex_bound_chordal(long n, long d, long c) {
  require_ndc(n, d, c, "simplex_bound_chordal");
  return static_cast<double>(c * (d - c) * n) / static_cast<double>(d * (n - 1));
}

double simplex_bound_gram(long n, long d, long c) {
  require_ndc(n, d, c, "simplex_bound_gram");
  return static_cast<double>(c * (n * c - d)) / static_cast<double>(d * (n - 1));
}

double eitff_bound(long n, long d, long c) {
  require_ndc(n, d, c, "eitff_bound");
  return static_cast<double>(n * c - d) / static_cast<double>(d * (n - 1));
}

long gerzon_limit(long d, Field field) {
  if (d < 1) throw InvalidInput("gerzon_limit: d must be positive");
  return field == Field::Real ? d * (d + 1) / 2 : d * d;
}

long traceless_space_dim(long d, Field field) { return gerzon_limit(d, field) - 1; }

std::optional<OrthoplexBound> orthoplex_bound(long n, long d, long c, Field field) {
  if (d < 1 || c < 1 || c > d) throw InvalidInput("orthoplex_bound: need 1 <= c <= d");
  if (n <= gerzon_limit(d, field)) return std::nullopt;
  return OrthoplexBound{static_cast<double>(c * (d - c)) / static_cast<double>(d),
                        static_cast<double>(c * c) / static_cast<double>(d)};
}

BoundReport bound_report(long n, long d, long c, Field field) {
  require_ndc(n, d, c, "bounds");
  BoundReport r;
  r.n = n;
  r.d = d;
  r.c = c;
  r.field = field;
  if (c == 1 && n >= d) {
    r.welch = welch_bound(n, d);
  } else if (c != 1) {
    r.notes.emplace_back("welch: not applicable (requires c = 1; see simplex_gram)");
  } else {
    r.notes.emplace_back("welch: not applicable (requires n >= d)");
  }
  r.simplex_chordal = simplex_bound_chordal(n, d, c);
  r.simplex_gram = simplex_bound_gram(n, d, c);
  r.eitff_spectral = eitff_bound(n, d, c);
  if (n * c < d) r.notes.emplace_back("simplex_gram: vacuous (nc < d)");
  r.gerzon = gerzon_limit(d, field);
  r.traceless_dim = traceless_space_dim(d, field);
  if (auto ortho = orthoplex_bound(n, d, c, field)) {
    r.orthoplex_chordal = ortho->chordal;
    r.orthoplex_gram = ortho->gram;
  } else {
    r.notes.emplace_back("orthoplex: not applicable (n <= " + std::to_string(r.gerzon) + ")");
  }
  return r;
}

}  // namespace grasspack
