#include "wcm/profiles.hpp"

#include <algorithm>

namespace wcm {

Rank1Profile make_rank1_profile(int n, LabelSet downs) {
    require(downs.n == n, errc::ambient_mismatch, "profile ambient mismatch");
    return Rank1Profile{n, std::move(downs)};
}

std::string Rank1Profile::word() const {
    std::string w(n, 'U');
    for (int x : downs.elems)
        w[x - 1] = 'D';
    return w;
}

Rank2Profile make_rank2_profile(int n, std::string top, std::string bottom) {
    require(static_cast<int>(top.size()) == n && static_cast<int>(bottom.size()) == n, errc::size,
            "profile words must have length n");
    for (char ch : top + bottom)
        require(ch == 'U' || ch == 'D', errc::malformed_profile, "profile letters must be U or D");
    return Rank2Profile{n, std::move(top), std::move(bottom)};
}

Rank2Profile profile_from_sets(const LabelSet& I, const LabelSet& J) {
    require(I.n == J.n, errc::ambient_mismatch, "contour ambient mismatch");
    int n = I.n;
    std::string top(n, 'U'), bottom(n, 'U');
    for (int x : I.elems)
        top[x - 1] = 'D';
    for (int x : J.elems)
        bottom[x - 1] = 'D';
    return Rank2Profile{n, std::move(top), std::move(bottom)};
}

int Rank2Profile::k_top() const {
    return static_cast<int>(std::count(top.begin(), top.end(), 'D'));
}

int Rank2Profile::k_bottom() const {
    return static_cast<int>(std::count(bottom.begin(), bottom.end(), 'D'));
}

LabelSet Rank2Profile::top_set() const {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
        if (top[i] == 'D')
            v.push_back(i + 1);
    return LabelSet(n, std::move(v));
}

LabelSet Rank2Profile::bottom_set() const {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
        if (bottom[i] == 'D')
            v.push_back(i + 1);
    return LabelSet(n, std::move(v));
}

std::string Rank2Profile::compact() const {
    std::string out(n, '.');
    for (int i = 0; i < n; ++i) {
        if (top[i] == 'U' && bottom[i] == 'U')
            out[i] = '.';
        else if (top[i] == 'D' && bottom[i] == 'D')
            out[i] = '=';
        else if (top[i] == 'U')
            out[i] = '(';
        else
            out[i] = ')';
    }
    return out;
}

std::vector<Box> decompose_boxes(const Rank2Profile& p) {
    // crossing letters in cyclic position order: U/D opens, D/U closes
    std::vector<std::pair<int, bool>> crossings; // (label, is_open)
    for (int i = 0; i < p.n; ++i) {
        if (p.top[i] == 'U' && p.bottom[i] == 'D')
            crossings.emplace_back(i + 1, true);
        else if (p.top[i] == 'D' && p.bottom[i] == 'U')
            crossings.emplace_back(i + 1, false);
    }
    if (crossings.empty())
        return {};
    int total = static_cast<int>(crossings.size());
    int opens = static_cast<int>(
        std::count_if(crossings.begin(), crossings.end(), [](auto& c) { return c.second; }));
    require(2 * opens == total, errc::malformed_profile, "unbalanced U/D vs D/U counts");
    // rotate to an open whose cyclic predecessor is a close
    int start = -1;
    for (int i = 0; i < total; ++i) {
        if (crossings[i].second && !crossings[(i + total - 1) % total].second) {
            start = i;
            break;
        }
    }
    require(start >= 0, errc::malformed_profile, "crossing letters never alternate");
    std::vector<Box> boxes;
    int pos = 0;
    while (pos < total) {
        Box box;
        int at = (start + pos) % total;
        require(crossings[at].second, errc::malformed_profile, "expected a box opening");
        box.start = crossings[at].first;
        while (pos < total && crossings[(start + pos) % total].second) {
            box.ud_positions.push_back(crossings[(start + pos) % total].first);
            ++pos;
        }
        box.size = static_cast<int>(box.ud_positions.size());
        for (int j = 0; j < box.size; ++j) {
            require(pos < total && !crossings[(start + pos) % total].second, errc::malformed_profile,
                    "box closes with fewer D/U than U/D letters");
            box.du_positions.push_back(crossings[(start + pos) % total].first);
            ++pos;
        }
        boxes.push_back(std::move(box));
    }
    return boxes;
}

Rank2Profile psi(const Rank2Web& w) {
    require(in_family(w), errc::decomposable,
            "psi needs alpha,beta,gamma >= 1 (web outside the family)");
    int i0 = *separation_start(w.R, w.S, w.T);
    std::vector<int> r = sorted_from(w.R, i0), s = sorted_from(w.S, i0), t = sorted_from(w.T, i0);
    std::vector<int> I(w.V.elems), J(w.V.elems);
    auto take = [](const std::vector<int>& v, int from, int count, std::vector<int>& out) {
        for (int j = 0; j < count; ++j)
            out.push_back(v[from + j]);
    };
    take(r, 0, w.alpha, I);           // R1
    take(r, w.alpha, w.beta, J);      // R2
    take(s, 0, w.beta, I);            // S1
    take(s, w.beta, w.gamma, J);      // S2
    take(t, 0, w.gamma, I);           // T1
    take(t, w.gamma, w.alpha, J);     // T2
    return profile_from_sets(LabelSet(w.n, I), LabelSet(w.n, J));
}

Rank2Web psi_inverse(const Rank2Profile& p) {
    std::vector<Box> boxes = decompose_boxes(p);
    require(boxes.size() == 3, errc::not_in_m,
            "profile has " + std::to_string(boxes.size()) + " boxes, not 3");
    // boxes cyclically are (R2 S1), (S2 T1), (T2 R1)
    std::vector<int> r, s, t;
    auto append = [](std::vector<int>& dst, const std::vector<int>& src) {
        dst.insert(dst.end(), src.begin(), src.end());
    };
    append(r, boxes[2].du_positions);
    append(r, boxes[0].ud_positions);
    append(s, boxes[0].du_positions);
    append(s, boxes[1].ud_positions);
    append(t, boxes[1].du_positions);
    append(t, boxes[2].ud_positions);
    std::vector<int> v;
    for (int i = 0; i < p.n; ++i)
        if (p.top[i] == 'D' && p.bottom[i] == 'D')
            v.push_back(i + 1);
    int k = p.k_top();
    Rank2Web w = canonicalize(make_rank2_web(k, p.n, LabelSet(p.n, r), LabelSet(p.n, s),
                                             LabelSet(p.n, t), LabelSet(p.n, v)));
    require(psi(w) == p, errc::not_in_m, "profile is not a psi image");
    return w;
}

Rank1Profile stretch_profile(const Rank1Profile& p, StretchDir dir, int i) {
    LabelSet downs = shift_set(p.downs, i);
    if (dir == StretchDir::down) {
        std::vector<int> v = downs.elems;
        v.push_back(i);
        downs = LabelSet(p.n + 1, std::move(v));
    }
    return make_rank1_profile(p.n + 1, std::move(downs));
}

Rank2Profile stretch_profile(const Rank2Profile& p, StretchDir dir, int i) {
    require(1 <= i && i <= p.n + 1, errc::parameter, "stretch position out of range");
    char letter = dir == StretchDir::up ? 'U' : 'D';
    std::string top = p.top, bottom = p.bottom;
    top.insert(top.begin() + (i - 1), letter);
    bottom.insert(bottom.begin() + (i - 1), letter);
    return make_rank2_profile(p.n + 1, std::move(top), std::move(bottom));
}

Rank2Profile delete_positions(const Rank2Profile& p, const std::vector<int>& positions) {
    std::vector<bool> del(p.n + 1, false);
    for (int x : positions) {
        require(1 <= x && x <= p.n, errc::parameter, "delete position out of range");
        require(p.top[x - 1] == 'U' && p.bottom[x - 1] == 'U', errc::parameter,
                "can only delete U/U positions");
        del[x] = true;
    }
    std::string top, bottom;
    for (int i = 1; i <= p.n; ++i) {
        if (del[i])
            continue;
        top.push_back(p.top[i - 1]);
        bottom.push_back(p.bottom[i - 1]);
    }
    int n_out = static_cast<int>(top.size());
    return make_rank2_profile(n_out, std::move(top), std::move(bottom));
}

LabelSet delete_positions(const LabelSet& s, const std::vector<int>& positions) {
    std::vector<bool> del(s.n + 1, false);
    for (int x : positions) {
        require(!s.contains(x), errc::parameter, "cannot delete a used position");
        del[x] = true;
    }
    std::vector<int> out;
    for (int x : s.elems) {
        int shift = 0;
        for (int y = 1; y < x; ++y)
            if (del[y])
                ++shift;
        out.push_back(x - shift);
    }
    int removed = static_cast<int>(positions.size());
    return LabelSet(s.n - removed, std::move(out));
}

} // namespace wcm
