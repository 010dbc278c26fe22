#include "frechet/plot.hpp"

#include "frechet/matching.hpp"
#include "frechet/wavefront.hpp"

#include <algorithm>
#include <sstream>

namespace frechet {

std::string free_space_svg(const Curve& tau, const Curve& sigma, double delta)
{
    if (tau.size() < 2 || sigma.size() < 2)
        throw Error(ErrorCode::Input, "plot needs curves with at least one edge");
    if (tau.dim() != sigma.dim())
        throw Error(ErrorCode::Input, "dimension mismatch");
    const int cx = tau.edges(), cy = sigma.edges();
    const double px = cx <= 256 ? 8.0 : 2048.0 / cx;
    const double py = cy <= 256 ? 8.0 : 2048.0 / cy;
    const double W = cx * px, H = cy * py;
    // raster samples per axis, at most one per two pixels
    const int sx = std::max(1, static_cast<int>(W / 2)), sy = std::max(1, static_cast<int>(H / 2));
    const int d = tau.dim();
    std::vector<double> p(static_cast<size_t>(d)), q(static_cast<size_t>(d));

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 "
        << W << ' ' << H << "\">\n";
    out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"#9a9a9a\"/>\n<g fill=\"#ffffff\">\n";
    const double cw = W / sx, ch = H / sy;
    for (int yi = 0; yi < sy; ++yi) {
        double s = (yi + 0.5) / sy * cy;
        sigma.eval(s, q.data());
        int run = -1;
        for (int xi = 0; xi <= sx; ++xi) {
            bool free = false;
            if (xi < sx) {
                tau.eval((xi + 0.5) / sx * cx, p.data());
                free = dist(p.data(), q.data(), d) <= delta;
            }
            if (free && run < 0)
                run = xi;
            if (!free && run >= 0) {
                out << "<rect x=\"" << run * cw << "\" y=\"" << H - (yi + 1) * ch << "\" width=\"" << (xi - run) * cw
                    << "\" height=\"" << ch << "\"/>\n";
                run = -1;
            }
        }
    }
    out << "</g>\n";
    if (cx <= 64 && cy <= 64) {
        out << "<g stroke=\"#555555\" stroke-width=\"0.5\">\n";
        for (int i = 0; i <= cx; ++i)
            out << "<line x1=\"" << i * px << "\" y1=\"0\" x2=\"" << i * px << "\" y2=\"" << H << "\"/>\n";
        for (int j = 0; j <= cy; ++j)
            out << "<line x1=\"0\" y1=\"" << j * py << "\" x2=\"" << W << "\" y2=\"" << j * py << "\"/>\n";
        out << "</g>\n";
    }
    if (decide_exact(tau, sigma, delta)) {
        Matching M = build_matching(tau, sigma, delta);
        out << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" points=\"";
        for (size_t k = 0; k < M.tau_anchors().size(); ++k)
            out << M.tau_anchors()[k] * px << ',' << H - M.sigma_anchors()[k] * py << ' ';
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace frechet
