#pragma once

#include "mtsp/instance.hpp"
#include "mtsp/solution.hpp"

#include <string>

namespace mtsp {

struct SvgOptions {
    bool labels = false;  // write each city's label next to it
    double canvas = 800.0;
};

// Static plot of a solution: one closed path per tour, a square depot marker,
// a dot per city. Output is a pure function of the inputs.
std::string render_svg(MtspSolution const &solution, Instance const &instance, SvgOptions const &options = {});

// Throws std::runtime_error when the file cannot be written.
void write_svg(std::string const &path, MtspSolution const &solution, Instance const &instance,
               SvgOptions const &options = {});

}  // namespace mtsp
