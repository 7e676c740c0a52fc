#include <cstdio>
#include <sstream>

#include "encap/errors.hpp"
#include "encap/scene_io.hpp"

namespace encap {

namespace {

using Polygon = std::vector<RVector>;

// Sutherland-Hodgman step against {a . x <= b}.
Polygon clip(const Polygon& poly, const RVector& a, const Rational& b) {
    Polygon out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const RVector& p = poly[i];
        const RVector& q = poly[(i + 1) % poly.size()];
        const Rational fp = dot(a, p) - b, fq = dot(a, q) - b;
        if (fp.sign() <= 0) out.push_back(p);
        if ((fp.sign() < 0 && fq.sign() > 0) || (fp.sign() > 0 && fq.sign() < 0))
            out.push_back(axpy(p, fp / (fp - fq), sub(q, p)));
    }
    return out;
}

Polygon clip_constraints(Polygon poly, const std::vector<LinConstraint>& cs) {
    for (const LinConstraint& c : cs) {
        if (poly.empty()) break;
        poly = clip(poly, c.normal, c.offset);
        if (c.rel == Relation::Eq && !poly.empty()) poly = clip(poly, scale(c.normal, -1), -c.offset);
    }
    return poly;
}

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                          "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

class Canvas {
public:
    Canvas(const Viewport& v, double width) : v_(v), scale_(width / (v.x1 - v.x0).to_double()) {}
    double X(const RVector& p) const { return (p[0] - v_.x0).to_double() * scale_; }
    double Y(const RVector& p) const { return (v_.y1 - p[1]).to_double() * scale_; }
    double width() const { return (v_.x1 - v_.x0).to_double() * scale_; }
    double height() const { return (v_.y1 - v_.y0).to_double() * scale_; }

private:
    Viewport v_;
    double scale_;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

}  // namespace

std::string render_svg(const Scene& scene, const std::optional<StrongCover>& cover, const Viewport& view) {
    if (scene.d != 2) throw InputError("render supports planar scenes only (d = 2)");
    if (!(view.x0 < view.x1) || !(view.y0 < view.y1)) throw InputError("viewport needs x0 < x1 and y0 < y1");
    const Canvas cv(view, 600.0);
    const Polygon box{{view.x0, view.y0}, {view.x1, view.y0}, {view.x1, view.y1}, {view.x0, view.y1}};
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(cv.width()) << "\" height=\""
        << fmt(cv.height()) << "\" viewBox=\"0 0 " << fmt(cv.width()) << ' ' << fmt(cv.height()) << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t i = 0; i < scene.bodies.size(); ++i) {
        const char* color = kPalette[i % (sizeof kPalette / sizeof *kPalette)];
        out << "<g class=\"body\" id=\"" << scene.bodies[i].name << "\">\n";
        for (const Piece& piece : scene.bodies[i].pieces) {
            const Polygon poly = clip_constraints(box, piece.closure_constraints());
            if (poly.empty()) continue;
            const int dim = affine_hull(poly).dim();
            if (dim == 2) {
                out << "  <polygon points=\"";
                for (std::size_t k = 0; k < poly.size(); ++k)
                    out << (k ? " " : "") << fmt(cv.X(poly[k])) << ',' << fmt(cv.Y(poly[k]));
                out << "\" fill=\"" << color << "\" fill-opacity=\"0.45\" stroke=\"none\"/>\n";
            } else if (dim == 1) {
                RVector lo = poly.front(), hi = poly.front();
                for (const RVector& p : poly) {
                    if (p < lo) lo = p;
                    if (hi < p) hi = p;
                }
                out << "  <line x1=\"" << fmt(cv.X(lo)) << "\" y1=\"" << fmt(cv.Y(lo)) << "\" x2=\"" << fmt(cv.X(hi))
                    << "\" y2=\"" << fmt(cv.Y(hi)) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
            } else {
                out << "  <circle cx=\"" << fmt(cv.X(poly.front())) << "\" cy=\"" << fmt(cv.Y(poly.front()))
                    << "\" r=\"2\" fill=\"" << color << "\"/>\n";
            }
        }
        out << "</g>\n";
    }

    if (cover) {
        for (const Flat& f : cover->flats) {
            if (f.dim() != 1) continue;
            const auto [normals, offsets] = f.equations();
            std::vector<LinConstraint> cs;
            for (std::size_t k = 0; k < normals.size(); ++k) cs.push_back(eq(normals[k], offsets[k]));
            const Polygon seg = clip_constraints(box, cs);
            if (seg.empty()) continue;
            RVector lo = seg.front(), hi = seg.front();
            for (const RVector& p : seg) {
                if (p < lo) lo = p;
                if (hi < p) hi = p;
            }
            out << "<line class=\"cover-line\" x1=\"" << fmt(cv.X(lo)) << "\" y1=\"" << fmt(cv.Y(lo)) << "\" x2=\""
                << fmt(cv.X(hi)) << "\" y2=\"" << fmt(cv.Y(hi))
                << "\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
        }
        for (const Flat& f : cover->flats) {
            if (f.dim() != 0) continue;
            out << "<circle class=\"encapsulated\" cx=\"" << fmt(cv.X(f.anchor())) << "\" cy=\"" << fmt(cv.Y(f.anchor()))
                << "\" r=\"5\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace encap
