#include "spinphase/output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "spinphase/errors.hpp"

namespace spinphase {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

nlohmann::ordered_json complex_json(Complex value) {
  return nlohmann::ordered_json{{"re", value.real()}, {"im", value.imag()}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + path);
  out << text;
}

}  // namespace spinphase
