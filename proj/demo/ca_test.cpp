// Runs the star/circle test on the two tables used to illustrate it and
// prints the extended tables.

#include <iostream>

#include "agtk/agtk.hpp"

int main() {
  for (auto name : {"table3", "table4"}) {
    auto const& m      = agtk::fixture(name).magma;
    auto const  report = agtk::ca_test(m);
    std::cout << name << " (" << agtk::render_magma(m) << "): "
              << (report.verdict() ? "cyclic associative"
                                   : "not cyclic associative")
              << '\n'
              << agtk::render_extended_table(m, report) << '\n';
  }
}
