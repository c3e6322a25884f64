// Reduces the matrices under samples/matrices, completes a few rows, and
// splits a truncated series. Pass a directory to read matrices from elsewhere.

#include "edr/edr.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace edr;

namespace {

void show_diagonal(const RingMatrix& d) {
  std::cout << "  D = diag(";
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (i) std::cout << ", ";
    std::cout << to_literal(d.at(i, i));
  }
  std::cout << ")\n";
}

bool reduce_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream text;
  text << in.rdbuf();
  auto m = parse_matrix_text(text.str());
  auto cert = diagonal_reduce(m);
  auto report = verify_reduction(m, cert);
  std::cout << path.filename().string() << " over " << m.ring().to_string() << "\n";
  show_diagonal(cert.D);
  std::cout << "  det P = " << to_literal(cert.detP) << ", det Q = " << to_literal(cert.detQ)
            << ", verified: " << (report.holds ? "yes" : "no") << "\n";
  return report.holds;
}

bool complete(const char* ring_text, const char* row_text) {
  auto ring = parse_descriptor(ring_text);
  auto row = parse_element_list(ring, row_text);
  auto d = ideal_generator(row).generator;
  auto cert = complete_row(row, d);
  std::cout << "row (" << row_text << ") over " << ring_text << ", det " << to_literal(d) << ":\n"
            << format_matrix_text(cert.A);
  return verify_completion(cert).holds;
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : EDR_SAMPLE_DIR;
  bool ok = true;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) ok = reduce_file(f) && ok;

  ok = complete("Z", "3,5") && ok;
  ok = complete("Z", "6,10,15") && ok;
  ok = complete("Z/12", "4,6,9") && ok;

  auto zser = parse_descriptor("Zser4");
  auto f = parse_element(zser, "{12; 1/2, -3, 5/7}");
  auto g = parse_element(zser, "{10}");
  auto split = truncated_series_split(f, g);
  std::cout << "series " << to_literal(f) << " = " << to_literal(split.s) << " * " << to_literal(split.t)
            << "\n";
  ok = ok && split.s * split.t == f;

  std::cout << (ok ? "all certificates verified" : "verification failed") << "\n";
  return ok ? 0 : 1;
}
