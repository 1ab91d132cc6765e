#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "radwig/grid.hpp"
#include "radwig/states.hpp"
#include "radwig/wigner.hpp"

namespace radwig::io {

/// "min:max:steps" → Grid1D. Throws InputError on malformed specs.
Grid1D parse_axis(std::string_view spec);

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);

std::string grid_to_csv(const WignerGrid& w);  // header gamma,delta,w
WignerGrid grid_from_csv(std::string_view text);
std::string grid_to_json(const WignerGrid& w);
WignerGrid grid_from_json(std::string_view text);

std::string wavefunction_to_csv(const WavefunctionV& psi, std::string_view coordinate = "vbar");
std::string wavefunction_to_json(const WavefunctionV& psi);
std::string marginal_to_csv(const Marginal& m, std::string_view coordinate);

/// gnuplot script drawing `data_file` (written by grid_to_csv) as a heat map.
std::string gnuplot_script(const std::filesystem::path& data_file, std::string_view title);

/// Write through a temporary sibling and rename into place.
void write_file(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace radwig::io
