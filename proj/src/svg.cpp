#include "sumprod/svg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>

#include "sumprod/complex_geometry.hpp"
#include "sumprod/report.hpp"
#include "sumprod/slope_geometry.hpp"

namespace sumprod {

namespace {

constexpr double kCanvas = 1000.0;
constexpr double kMargin = 60.0;

std::string num(double v) {
    // clamp tiny negative zeros so output is stable across code paths
    if (v == 0.0) v = 0.0;
    return format_double(std::round(v * 1000.0) / 1000.0);
}

struct Frame {
    double xmin, xmax, ymin, ymax;
    double sx(double x) const { return kMargin + (x - xmin) / (xmax - xmin) * (kCanvas - 2 * kMargin); }
    double sy(double y) const {
        return kCanvas - kMargin - (y - ymin) / (ymax - ymin) * (kCanvas - 2 * kMargin);
    }
};

std::string svg_open() {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "viewBox=\"0 0 1000 1000\">\n";
}

std::string line(const Frame& f, double x1, double y1, double x2, double y2, const char* cls) {
    return "  <line class=\"" + std::string(cls) + "\" x1=\"" + num(f.sx(x1)) + "\" y1=\"" +
           num(f.sy(y1)) + "\" x2=\"" + num(f.sx(x2)) + "\" y2=\"" + num(f.sy(y2)) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
}

std::string circle(const Frame& f, double x, double y, double r, const char* cls, const char* fill) {
    return "  <circle class=\"" + std::string(cls) + "\" cx=\"" + num(f.sx(x)) + "\" cy=\"" +
           num(f.sy(y)) + "\" r=\"" + num(r) + "\" fill=\"" + fill + "\"/>\n";
}

std::string text(const Frame& f, double x, double y, const std::string& s) {
    return "  <text x=\"" + num(f.sx(x) + 4) + "\" y=\"" + num(f.sy(y) - 4) +
           "\" font-size=\"9\">" + s + "</text>\n";
}

}  // namespace

std::string render_slope_cover_svg(const ScalarSet& a) {
    auto grid = build_grid(a);
    auto cover = slope_cover(grid);
    auto wit = thm1_witnesses(a);

    double xmax = 0, ymax = 0;
    for (const auto& w : wit.witnesses) {
        xmax = std::max(xmax, w.point.x.to_double());
        ymax = std::max(ymax, w.point.y.to_double());
    }
    Frame f{0.0, xmax * 1.05, 0.0, ymax * 1.05};

    std::string out = svg_open();
    out += " <g id=\"axes\">\n";
    out += line(f, 0, 0, f.xmax, 0, "axis");
    out += line(f, 0, 0, 0, f.ymax, "axis");
    out += " </g>\n <g id=\"lines\">\n";
    for (const auto& l : cover.lines) {
        const double m = l.slope.to_double();
        double x = f.xmax, y = m * f.xmax;
        if (y > f.ymax) {
            y = f.ymax;
            x = f.ymax / m;
        }
        out += line(f, 0, 0, x, y, "cover-line");
    }
    out += " </g>\n <g id=\"points\">\n";
    for (const auto& p : grid) out += circle(f, p.x.to_double(), p.y.to_double(), 4, "gridpt", "black");
    out += " </g>\n <g id=\"witnesses\">\n";
    for (const auto& w : wit.witnesses) {
        const double x = w.point.x.to_double(), y = w.point.y.to_double();
        out += circle(f, x, y, 3, "witness", "red");
        out += text(f, x, y, w.provenance);
    }
    out += " </g>\n</svg>\n";
    return out;
}

std::string render_complex_mst_svg(const ScalarSet& a_in, const WedgeSpec& wedge) {
    if (a_in.empty()) throw std::invalid_argument("render needs a nonempty set");
    ScalarSet a = a_in.kind() == SetKind::real ? a_in.lifted_to_complex() : a_in;
    std::uint64_t zeros = 0;
    ScalarSet nz = a.without_zero(&zeros);
    if (nz.empty()) throw std::invalid_argument("render needs a nonzero element");
    ScalarSet ratios = pairwise(nz, nz, PairOp::div).set;

    std::string out = svg_open();
    if (ratios.size() < 2) {
        // single ratio point: nothing to span
        Frame f{-2, 2, -2, 2};
        out += " <g id=\"axes\">\n" + line(f, f.xmin, 0, f.xmax, 0, "axis") +
               line(f, 0, f.ymin, 0, f.ymax, "axis") + " </g>\n <g id=\"lines\">\n </g>\n";
        out += " <g id=\"points\">\n";
        for (const auto& z : ratios.complexes())
            out += circle(f, z.re().to_double(), z.im().to_double(), 4, "ratiopt", "blue");
        out += " </g>\n</svg>\n";
        return out;
    }

    MstEdges mst = euclidean_mst(ratios.complexes());
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (const auto& v : mst.vertices) {
        xmin = std::min(xmin, v.re().to_double());
        xmax = std::max(xmax, v.re().to_double());
        ymin = std::min(ymin, v.im().to_double());
        ymax = std::max(ymax, v.im().to_double());
    }
    const double pad = std::max({xmax - xmin, ymax - ymin, 1e-3}) * 0.1;
    Frame f{xmin - pad, xmax + pad, ymin - pad, ymax + pad};

    out += " <g id=\"axes\">\n";
    out += line(f, f.xmin, 0, f.xmax, 0, "axis");
    out += line(f, 0, f.ymin, 0, f.ymax, "axis");
    out += " </g>\n <g id=\"lines\">\n";
    for (std::size_t e = 0; e < mst.edges.size(); ++e) {
        const auto& [i, j] = mst.edges[e];
        out += line(f, mst.vertices[i].re().to_double(), mst.vertices[i].im().to_double(),
                    mst.vertices[j].re().to_double(), mst.vertices[j].im().to_double(), "mst-edge");
    }
    // sampled region outlines (same arcs as the disjointness probe)
    const double s = wedge.slope_bound.to_double();
    using Cx = std::complex<double>;
    for (const auto& [i, j] : mst.edges) {
        Cx va(mst.vertices[i].re().to_double(), mst.vertices[i].im().to_double());
        Cx vb(mst.vertices[j].re().to_double(), mst.vertices[j].im().to_double());
        for (int side = 0; side < 2; ++side) {
            std::string pts;
            for (int k = 0; k < 64; ++k) {
                const double t = std::exp(-6.0 + 12.0 * k / 63.0);
                Cx u(t, (side == 0 ? 1.0 : -1.0) * s * t);
                Cx m = u / (Cx(1, 0) + u);
                Cx z = va + (vb - va) * m;
                if (!pts.empty()) pts += " ";
                pts += num(f.sx(z.real())) + "," + num(f.sy(z.imag()));
            }
            out += "  <polyline class=\"region\" fill=\"none\" stroke=\"green\" "
                   "stroke-width=\"0.5\" points=\"" +
                   pts + "\"/>\n";
        }
    }
    out += " </g>\n <g id=\"points\">\n";
    for (const auto& v : mst.vertices)
        out += circle(f, v.re().to_double(), v.im().to_double(), 4, "ratiopt", "blue");
    out += " </g>\n</svg>\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace sumprod
