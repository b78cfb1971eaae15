#include "sqp/svg.hpp"

#include <sstream>

namespace sqp {

std::string band_diagram_svg(const BandWord& w) {
    constexpr int step = 40, margin = 30, half_width = 8;
    const int width = 2 * margin + step * static_cast<int>(w.length() + 1);
    const int height = 2 * margin + step * (w.strands() - 1);
    auto y = [&](int disk) { return margin + step * (disk - 1); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
    for (int d = 1; d <= w.strands(); ++d) {
        out << "<line x1=\"" << margin << "\" y1=\"" << y(d) << "\" x2=\"" << width - margin << "\" y2=\"" << y(d)
            << "\"/>\n";
        out << "<text x=\"4\" y=\"" << y(d) + 4 << "\" stroke=\"none\" fill=\"black\" font-size=\"12\">" << d
            << "</text>\n";
    }
    for (std::size_t k = 0; k < w.length(); ++k) {
        const int x = margin + step * static_cast<int>(k + 1);
        const int top = y(w[k].i), bottom = y(w[k].j);
        const int mid = (top + bottom) / 2;
        out << "<rect x=\"" << x - half_width << "\" y=\"" << top << "\" width=\"" << 2 * half_width
            << "\" height=\"" << bottom - top << "\" fill=\"#dde8f5\"/>\n";
        out << "<path d=\"M" << x - half_width << ' ' << mid - half_width << " L" << x + half_width << ' '
            << mid + half_width << " M" << x + half_width << ' ' << mid - half_width << " L" << x - half_width << ' '
            << mid + half_width << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace sqp
