#include "mtsp/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace mtsp {

namespace {

constexpr std::array<char const *, 10> kPalette{
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
};

std::string stroke_for(std::size_t tour)
{
    if (tour < kPalette.size())
        return kPalette[tour];
    // Golden-angle hue walk past the fixed palette.
    int const hue = static_cast<int>(std::fmod(static_cast<double>(tour) * 137.508, 360.0));
    return "hsl(" + std::to_string(hue) + ",65%,45%)";
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(std::string const &text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(MtspSolution const &solution, Instance const &instance, SvgOptions const &options)
{
    auto const coords = instance.coords();
    double min_x = coords[0].x, max_x = coords[0].x;
    double min_y = coords[0].y, max_y = coords[0].y;
    for (auto const &p : coords) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    double const span = std::max({max_x - min_x, max_y - min_y, 1e-12});
    double const margin = 20.0;
    double const scale = (options.canvas - 2 * margin) / span;
    double const width = (max_x - min_x) * scale + 2 * margin;
    double const height = (max_y - min_y) * scale + 2 * margin;

    // y grows upward in the data and downward in SVG.
    auto const X = [&](int node) { return num((instance.coord(node).x - min_x) * scale + margin); };
    auto const Y = [&](int node) { return num((max_y - instance.coord(node).y) * scale + margin); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " + num(width) + " "
           + num(height) + "\" width=\"" + num(width) + "\" height=\"" + num(height) + "\">\n";
    out += "<title>" + escape(instance.name()) + " makespan " + num(solution.makespan) + "</title>\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height)
           + "\" fill=\"white\"/>\n";

    out += "<g fill=\"none\" stroke-width=\"2\" stroke-linejoin=\"round\">\n";
    for (std::size_t t = 0; t < solution.tours.size(); ++t) {
        out += "<path class=\"tour\" stroke=\"" + stroke_for(t) + "\" d=\"M" + X(0) + " " + Y(0);
        for (int c : solution.tours[t])
            out += " L" + X(c) + " " + Y(c);
        out += " Z\"/>\n";
    }
    out += "</g>\n";

    out += "<g fill=\"#333333\">\n";
    for (int c = 1; c <= instance.num_cities(); ++c)
        out += "<circle cx=\"" + X(c) + "\" cy=\"" + Y(c) + "\" r=\"3\"/>\n";
    out += "</g>\n";

    double const half = 6.0;
    double const dx = (instance.coord(0).x - min_x) * scale + margin;
    double const dy = (max_y - instance.coord(0).y) * scale + margin;
    out += "<rect class=\"depot\" x=\"" + num(dx - half) + "\" y=\"" + num(dy - half) + "\" width=\""
           + num(2 * half) + "\" height=\"" + num(2 * half) + "\" fill=\"black\"/>\n";

    if (options.labels) {
        out += "<g font-family=\"sans-serif\" font-size=\"10\" fill=\"#000000\">\n";
        for (int c = 1; c <= instance.num_cities(); ++c)
            out += "<text x=\"" + num((instance.coord(c).x - min_x) * scale + margin + 4) + "\" y=\""
                   + num((max_y - instance.coord(c).y) * scale + margin - 4) + "\">"
                   + std::to_string(instance.label(c)) + "</text>\n";
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

void write_svg(std::string const &path, MtspSolution const &solution, Instance const &instance,
               SvgOptions const &options)
{
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot write SVG file '" + path + "'");
    file << render_svg(solution, instance, options);
    if (!file)
        throw std::runtime_error("failed writing SVG file '" + path + "'");
}

}  // namespace mtsp
