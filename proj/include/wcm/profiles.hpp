#pragma once

#include <string>
#include <vector>

#include "wcm/webs.hpp"

namespace wcm {

// Contour of a rank-1 module: k down steps at the positions of a k-subset.
struct Rank1Profile {
    int n = 0;
    LabelSet downs;

    std::string word() const; // e.g. "DDUUDU"
    bool operator==(const Rank1Profile& o) const { return n == o.n && downs == o.downs; }
};

Rank1Profile make_rank1_profile(int n, LabelSet downs);

// Two stacked contours as a cyclic word over {U/U, U/D, D/U, D/D}.
// top = first contour I, bottom = second contour J. Stored anchored at
// position 1; the box scanner handles cyclicity.
struct Rank2Profile {
    int n = 0;
    std::string top, bottom; // strings of 'U'/'D', length n

    int k_top() const;
    int k_bottom() const;
    LabelSet top_set() const;    // I
    LabelSet bottom_set() const; // J

    // compact 4-letter encoding: '.' U/U, '=' D/D, '(' U/D, ')' D/U
    std::string compact() const;

    bool operator==(const Rank2Profile& o) const {
        return n == o.n && top == o.top && bottom == o.bottom;
    }
};

Rank2Profile make_rank2_profile(int n, std::string top, std::string bottom);
Rank2Profile profile_from_sets(const LabelSet& I, const LabelSet& J);

// A box opens with a run of U/D letters and closes with the matching run of
// D/U letters; U/U and D/D are interspersed freely.
struct Box {
    int start = 0;              // label of the first U/D letter
    int size = 0;               // number of U/D letters (= number of D/U letters)
    std::vector<int> ud_positions; // top-U/bottom-D members (J-only)
    std::vector<int> du_positions; // top-D/bottom-U members (I-only)
};

// Maximal cyclic box decomposition; malformed_profile when the crossing
// letters do not split into balanced open/close runs.
std::vector<Box> decompose_boxes(const Rank2Profile& p);

// The web-to-profile bijection. Requires a family member (alpha,beta,gamma>=1).
Rank2Profile psi(const Rank2Web& w);

// Inverse on 3-box profiles; returns the canonical web.
Rank2Web psi_inverse(const Rank2Profile& p);

Rank1Profile stretch_profile(const Rank1Profile& p, StretchDir dir, int i);
Rank2Profile stretch_profile(const Rank2Profile& p, StretchDir dir, int i);

// Delete positions (all must be U/U); labels above close up. Used to reduce
// the ambient Grassmannian when boundary columns are unused.
Rank2Profile delete_positions(const Rank2Profile& p, const std::vector<int>& positions);
LabelSet delete_positions(const LabelSet& s, const std::vector<int>& positions);

} // namespace wcm
