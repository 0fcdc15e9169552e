#include "dycktile/config.hpp"

#include <cstdlib>
#include <string>

#include "dycktile/errors.hpp"

namespace dycktile {

Caps Caps::from_env() {
  Caps c;
  if (const char* env = std::getenv("DYCKTILE_MAX_N"); env != nullptr && *env != '\0') {
    try {
      int v = std::stoi(env);
      if (v >= 1) c.max_n = v;
    } catch (const std::exception&) {
      throw ValidationError(std::string("DYCKTILE_MAX_N is not an integer: ") + env);
    }
  }
  return c;
}

Caps& caps() {
  static Caps instance = Caps::from_env();
  return instance;
}

void require_n_within_cap(int n, const char* what) {
  if (n < 1) throw ValidationError(std::string(what) + ": n must be positive");
  if (n > caps().max_n)
    throw CapExceeded(std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(caps().max_n));
}

}  // namespace dycktile
