#pragma once

/**
 * @file path_diagram.hpp
 * @brief Plain-text and SVG rendering of Motzkin/Dyck lattice paths.
 */

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "eulerpath/motzkin.hpp"

namespace eulerpath {

/// ASCII art on a unit grid, one character per step. "UHDUD" renders as
///
///   " _   "
///   "/ \/\"
///
/// A step occupies the band between its lower and upper height; horizontal
/// steps at height h sit on top of band h.
inline std::string ascii_diagram(const LatticePath& path) {
    if (path.steps.empty()) return "(empty)\n";
    const auto h = path.heights();
    std::vector<std::size_t> band(path.steps.size());
    std::size_t max_band = 0;
    for (std::size_t j = 0; j < path.steps.size(); ++j) {
        band[j] = path.steps[j] == 'H' ? h[j] : std::min(h[j], h[j + 1]);
        max_band = std::max(max_band, band[j]);
    }
    std::vector<std::string> rows(max_band + 1, std::string(path.steps.size(), ' '));
    for (std::size_t j = 0; j < path.steps.size(); ++j) {
        const char glyph = path.steps[j] == 'H' ? '_' : path.steps[j] == 'U' ? '/' : '\\';
        rows[max_band - band[j]][j] = glyph;
    }
    std::ostringstream os;
    for (const auto& row : rows) os << row << "\n";
    return os.str();
}

/// A single SVG document with the paths stacked vertically on a fixed unit
/// grid (20 px per step). Pure static markup.
inline std::string svg_document(const std::vector<LatticePath>& paths) {
    constexpr int unit = 20;
    constexpr int pad = 10;
    std::size_t max_len = 0;
    std::size_t total_rows = 0;
    std::vector<std::vector<std::size_t>> all_heights;
    all_heights.reserve(paths.size());
    for (const auto& path : paths) {
        all_heights.push_back(path.heights());
        std::size_t max_h = 0;
        for (auto v : all_heights.back()) max_h = std::max(max_h, v);
        total_rows += max_h + 1;
        max_len = std::max(max_len, path.steps.size());
    }
    const int width = static_cast<int>(max_len) * unit + 2 * pad;
    const int height = static_cast<int>(total_rows) * unit + static_cast<int>(paths.size() + 1) * pad;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\">\n";
    int y_offset = pad;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto& h = all_heights[i];
        std::size_t max_h = 0;
        for (auto v : h) max_h = std::max(max_h, v);
        const int baseline = y_offset + static_cast<int>(max_h) * unit;
        os << "  <line x1=\"" << pad << "\" y1=\"" << baseline << "\" x2=\""
           << pad + static_cast<int>(paths[i].steps.size()) * unit << "\" y2=\"" << baseline
           << "\" stroke=\"#ccc\"/>\n";
        os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
        for (std::size_t j = 0; j < h.size(); ++j) {
            if (j > 0) os << " ";
            os << pad + static_cast<int>(j) * unit << "," << baseline - static_cast<int>(h[j]) * unit;
        }
        os << "\"/>\n";
        y_offset = baseline + unit + pad;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace eulerpath
