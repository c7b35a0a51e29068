#include "wcm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wcm/grass.hpp"

namespace wcm {

namespace {

constexpr double kSize = 420.0;
constexpr double kRadius = 180.0;

struct Pt {
    double x, y;
};

Pt boundary_point(int label, int n) {
    double angle = 2.0 * M_PI * (label - 1) / n - M_PI / 2.0;
    return {kSize / 2 + kRadius * std::cos(angle), kSize / 2 + kRadius * std::sin(angle)};
}

// angular centroid of a leaf list (mean of unit vectors, pulled inward)
Pt centroid(const std::vector<int>& leaves, int n, double pull) {
    double cx = 0, cy = 0;
    for (int l : leaves) {
        Pt p = boundary_point(l, n);
        cx += p.x;
        cy += p.y;
    }
    cx /= leaves.size();
    cy /= leaves.size();
    return {kSize / 2 + (cx - kSize / 2) * pull, kSize / 2 + (cy - kSize / 2) * pull};
}

void line(std::ostringstream& os, Pt a, Pt b, const char* color) {
    os << "<line x1='" << a.x << "' y1='" << a.y << "' x2='" << b.x << "' y2='" << b.y
       << "' stroke='" << color << "' stroke-width='1.5'/>\n";
}

void dot(std::ostringstream& os, Pt p, double r, const char* fill) {
    os << "<circle cx='" << p.x << "' cy='" << p.y << "' r='" << r << "' fill='" << fill
       << "' stroke='black'/>\n";
}

std::string render_tripod(int k, int n, const std::vector<int>& L1, const std::vector<int>& L2,
                          const std::vector<int>& L3) {
    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kSize << "' height='" << kSize
       << "'>\n";
    os << "<circle cx='" << kSize / 2 << "' cy='" << kSize / 2 << "' r='" << kRadius
       << "' fill='none' stroke='gray'/>\n";
    const std::vector<int>* Ls[3] = {&L1, &L2, &L3};
    Pt whites[3];
    for (int j = 0; j < 3; ++j)
        whites[j] = centroid(*Ls[j], n, 0.55);
    Pt black = {(whites[0].x + whites[1].x + whites[2].x) / 3,
                (whites[0].y + whites[1].y + whites[2].y) / 3};
    for (int j = 0; j < 3; ++j) {
        for (int l : *Ls[j])
            line(os, whites[j], boundary_point(l, n), "black");
        line(os, whites[j], black, "black");
    }
    for (int v = 1; v <= n; ++v) {
        Pt p = boundary_point(v, n);
        dot(os, p, 4, "black");
        Pt lp = {kSize / 2 + (p.x - kSize / 2) * 1.1, kSize / 2 + (p.y - kSize / 2) * 1.1};
        os << "<text x='" << lp.x << "' y='" << lp.y
           << "' font-size='12' text-anchor='middle'>" << v << "</text>\n";
    }
    for (int j = 0; j < 3; ++j)
        dot(os, whites[j], 6, "white");
    dot(os, black, 5, "black");
    os << "<text x='8' y='16' font-size='12'>k=" << k << " n=" << n << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace

std::string render_web_svg(const Web& w) {
    if (const auto* r1 = std::get_if<Rank1Web>(&w)) {
        std::ostringstream os;
        os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kSize << "' height='" << kSize
           << "'>\n<circle cx='" << kSize / 2 << "' cy='" << kSize / 2 << "' r='" << kRadius
           << "' fill='none' stroke='gray'/>\n";
        Pt white = centroid(r1->leaves.elems, r1->n, 0.0);
        white = {kSize / 2, kSize / 2};
        for (int l : r1->leaves.elems)
            line(os, white, boundary_point(l, r1->n), "black");
        for (int v = 1; v <= r1->n; ++v)
            dot(os, boundary_point(v, r1->n), 4, r1->leaves.contains(v) ? "black" : "lightgray");
        dot(os, white, 6, "white");
        os << "</svg>\n";
        return os.str();
    }
    if (const auto* r2 = std::get_if<Rank2Web>(&w)) {
        TripodWeb t = tripod_of(*r2);
        return render_tripod(t.k, t.n, t.L1, t.L2, t.L3);
    }
    const TripodWeb& t = std::get<TripodWeb>(w);
    return render_tripod(t.k, t.n, t.L1, t.L2, t.L3);
}

std::string render_profile_svg(const Rank2Profile& p) {
    // contours as lattice paths: D steps go down, U steps go up
    double cell = 28.0, height = 260.0, left = 30.0;
    std::ostringstream os;
    double width = left * 2 + cell * p.n;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
       << "'>\n";
    auto path_points = [&](const std::string& word, double y0) {
        std::vector<Pt> pts{{left, y0}};
        double y = y0;
        for (int i = 0; i < p.n; ++i) {
            y += word[i] == 'D' ? 14.0 : -14.0;
            pts.push_back({left + cell * (i + 1), y});
        }
        return pts;
    };
    std::vector<Pt> top = path_points(p.top, 110);
    std::vector<Pt> bottom = path_points(p.bottom, 150);
    for (const Box& box : decompose_boxes(p)) {
        // shade the span of the box between the two contours
        std::vector<int> members = box.ud_positions;
        members.insert(members.end(), box.du_positions.begin(), box.du_positions.end());
        int lo = *std::min_element(members.begin(), members.end());
        int hi = *std::max_element(members.begin(), members.end());
        double x0 = left + cell * (lo - 1), x1 = left + cell * hi;
        os << "<rect x='" << x0 << "' y='40' width='" << x1 - x0
           << "' height='180' fill='lightsteelblue' opacity='0.35'/>\n";
    }
    auto draw = [&](const std::vector<Pt>& pts, const char* color) {
        for (size_t i = 0; i + 1 < pts.size(); ++i)
            line(os, pts[i], pts[i + 1], color);
    };
    draw(top, "black");
    draw(bottom, "crimson");
    for (int i = 1; i <= p.n; ++i)
        os << "<text x='" << left + cell * (i - 0.5) << "' y='" << height - 10
           << "' font-size='11' text-anchor='middle'>" << i << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace wcm
