#pragma once

namespace dycktile {

/// Size limits. All are soft configuration values; `DYCKTILE_MAX_N`
/// overrides `max_n` when `Caps::from_env()` is used.
struct Caps {
  int max_n = 10;            // path enumeration and full-matrix work
  int max_euler_order = 40;  // q-Euler continued fraction
  int max_match_edges = 40;  // perfect matching enumeration
  int max_grove_vertices = 12;
  int max_grove_edges = 26;

  static Caps from_env();
};

/// Process-wide caps, initialised from the environment on first use.
Caps& caps();

void require_n_within_cap(int n, const char* what);

}  // namespace dycktile
