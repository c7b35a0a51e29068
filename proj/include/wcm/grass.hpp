#pragma once

#include <map>
#include <string>

#include "wcm/expr.hpp"
#include "wcm/matrix.hpp"
#include "wcm/rng.hpp"

namespace wcm {

// A point of Gr(k,n): a full-rank k x n matrix of exact rationals.
struct GrassPoint {
    int k = 0, n = 0;
    QMatrix m;
};

GrassPoint make_grass_point(int k, int n, QMatrix m); // validates rank k

// entries uniform in [-9,9], resampled until the rank is k
GrassPoint random_point(int k, int n, Rng& rng);
QMatrix random_slk(int k, Rng& rng); // product of elementary matrices, det 1

Rat plucker(const LabelSet& I, const GrassPoint& p);

// det of [columns of p at leaves (increasing) | standard basis columns at
// unit_rows (increasing)]
Rat bordered_det(const GrassPoint& p, const std::vector<int>& leaves,
                 const std::vector<int>& unit_rows);

// Contraction value of a tripod: sum over ordered partitions (I1,I2,I3) of
// {1..k} with |Ij| = k - |Lj| of sgn(I1,I2,I3) * prod_j bordered_det(Lj, Ij).
Rat eval_tripod(const TripodWeb& w, const GrassPoint& p);

// Leaf lists of a rank-2 web after the canonical greedy V-assignment: each V
// label goes to the two white vertices with the largest remaining capacity,
// ties broken by vertex index.
TripodWeb tripod_of(const Rank2Web& w);
// every admissible assignment of V labels to vertex pairs (for the
// reattachment-invariance tests)
std::vector<TripodWeb> all_tripods(const Rank2Web& w);

Rat eval_web(const Rank1Web& w, const GrassPoint& p);
Rat eval_web(const Rank2Web& w, const GrassPoint& p);
Rat eval_web(const TripodWeb& w, const GrassPoint& p);
Rat eval_web(const Web& w, const GrassPoint& p);

// per-point memo of web values, keyed by web_key
class EvalMemo {
  public:
    Rat value(const Web& w, const GrassPoint& p);

  private:
    std::map<std::string, Rat> cache_;
};

Rat eval_expr(const FunctionExpr& e, const GrassPoint& p);
Rat eval_expr(const FunctionExpr& e, const GrassPoint& p, EvalMemo& memo);

// F_i: forget the i-th column (1-based); rank must stay k
GrassPoint forget_column(const GrassPoint& p, int i);

// rows spanning the orthogonal complement of the row space
GrassPoint dual_point(const GrassPoint& p);

// G_i: dualize, forget column i, dualize back; Gr(k+1,n+1) -> Gr(k,n),
// well defined up to left GL action
GrassPoint dual_delete(const GrassPoint& p, int i);

} // namespace wcm
