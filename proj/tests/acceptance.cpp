// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance here is exact (rational arithmetic throughout).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "wcm/identity.hpp"
#include "wcm/json_io.hpp"
#include "wcm/ses.hpp"

using namespace wcm;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  criterion %2d: %s [%.1fs]%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                secs, note.c_str());
    std::fflush(stdout);
    if (!ok)
        ++g_failures;
}

LabelSet S(int n, std::vector<int> v) {
    return LabelSet(n, std::move(v));
}

constexpr std::uint64_t kSeed = 20260809;

} // namespace

int main() {
    criterion(1, "Gr(3,6) has exactly 2 family webs", [] {
        return enumerate_webs(3, 6).size() == 2;
    });

    criterion(2, "Gr(5,12) class counts 27720 / 15840 / 1320, total 44880", [] {
        auto table = count_by_class(5, 12);
        long long total = 0;
        for (const auto& [key, cnt] : table)
            total += cnt;
        return table[ClassKey{{2, 2, 2}, 2}] == 27720 &&
               table[ClassKey{{3, 3, 2}, 1}] == 15840 &&
               table[ClassKey{{4, 3, 3}, 0}] + table[ClassKey{{4, 4, 2}, 0}] == 1320 &&
               total == 44880;
    });

    criterion(3, "real-root subcounts 2 C(n,6) C(n-6,k-3) at (3,6) (4,8) (5,10) (5,12)", [] {
        for (auto [k, n] : {std::pair{3, 6}, {4, 8}, {5, 10}, {5, 12}}) {
            long long count = 0;
            for (const Rank2Web& w : enumerate_webs(k, n))
                if (w.d() == k - 3)
                    ++count;
            if (Int(static_cast<long>(count)) != 2 * binomial(n, 6) * binomial(n - 6, k - 3))
                return false;
        }
        return true;
    });

    criterion(4, "psi and stretching golden cases (135/246 and U_3 -> 146/257)", [] {
        Rank2Web w = make_rank2_web(3, 6, S(6, {1, 2}), S(6, {3, 4}), S(6, {5, 6}), S(6, {}));
        Rank2Profile p = psi(w);
        if (!(p.top_set() == S(6, {1, 3, 5}) && p.bottom_set() == S(6, {2, 4, 6})))
            return false;
        Rank2Profile up = stretch_profile(p, StretchDir::up, 3);
        return up.top_set() == S(7, {1, 4, 6}) && up.bottom_set() == S(7, {2, 5, 7});
    });

    criterion(5, "identity suite exact on >= 20 seeded points for all admissible cases, k <= 5",
              [] {
                  for (int k : {3, 4, 5}) {
                      SuiteReport r = run_identity_suite(k, 20, kSeed);
                      if (!r.ok) {
                          for (const auto& id : r.identities)
                              if (!id.ok)
                                  std::printf("      failed: k=%d %s: %s\n", k, id.name.c_str(),
                                              id.message.c_str());
                          return false;
                      }
                  }
                  return true;
              });

    criterion(6, "evaluation invariants: plucker consistency, SL_k, V-reattachment, alternating",
              [] {
                  Rng rng(kSeed);
                  // rank-1 web = plucker, exactly, random points
                  for (int t = 0; t < 10; ++t) {
                      GrassPoint p = random_point(4, 9, rng);
                      LabelSet I = S(9, {2, 3, 5, 8});
                      if (eval_web(make_rank1_web(4, 9, I), p) != plucker(I, p))
                          return false;
                  }
                  // SL_k invariance: 10 group elements per web, two webs
                  std::vector<Rank2Web> webs{
                      make_rank2_web(3, 6, S(6, {1, 2}), S(6, {3, 4}), S(6, {5, 6}), S(6, {})),
                      make_rank2_web(4, 9, S(9, {1, 2}), S(9, {4, 5}), S(9, {7, 8}), S(9, {3}))};
                  for (const Rank2Web& w : webs) {
                      GrassPoint p = random_point(w.k, w.n, rng);
                      Rat v = eval_web(w, p);
                      for (int t = 0; t < 10; ++t) {
                          QMatrix g = random_slk(w.k, rng);
                          if (eval_web(w, GrassPoint{w.k, w.n, g * p.m}) != v)
                              return false;
                      }
                  }
                  // V-reattachment: equality up to one fixed global sign
                  const Rank2Web& wv = webs[1];
                  std::vector<TripodWeb> variants = all_tripods(wv);
                  std::vector<int> signs;
                  int generic = 0;
                  for (int t = 0; t < 12 && generic < 5; ++t) {
                      GrassPoint p = random_point(wv.k, wv.n, rng);
                      Rat v0 = eval_tripod(variants[0], p);
                      if (v0 == 0)
                          continue;
                      ++generic;
                      std::vector<int> here;
                      for (size_t j = 1; j < variants.size(); ++j) {
                          Rat vj = eval_tripod(variants[j], p);
                          if (vj != v0 && vj != -v0)
                              return false;
                          here.push_back(vj == v0 ? 1 : -1);
                      }
                      if (signs.empty())
                          signs = here;
                      else if (signs != here)
                          return false;
                  }
                  if (generic < 2)
                      return false;
                  // alternating in the leaves of one white vertex
                  GrassPoint p = random_point(3, 6, rng);
                  TripodWeb t0 = tripod_of(webs[0]);
                  TripodWeb sw = t0;
                  std::swap(sw.L2[0], sw.L2[1]);
                  return eval_tripod(sw, p) == -eval_tripod(t0, p);
              });

    criterion(7, "module relations exact at N = 2n and 3n (rank-1 on (3,6); psi images on "
                 "(3,6) (4,8) (5,10))",
              [] {
                  if (!sweep_rank1_modules(3, 6, {12, 18}).ok())
                      return false;
                  for (auto [k, n] : {std::pair{3, 6}, {4, 8}, {5, 10}}) {
                      SweepReport r = sweep_psi_modules(k, n, {2 * n, 3 * n});
                      if (!r.ok()) {
                          std::printf("      failed: %s\n", r.failures.front().c_str());
                          return false;
                      }
                  }
                  return true;
              });

    criterion(8, "indecomposability: true for every psi image above, false for rank-1 sums "
                 "on (3,6)",
              [] {
                  for (auto [k, n] : {std::pair{3, 6}, {4, 8}, {5, 10}}) {
                      int N = default_truncation(n);
                      std::vector<Rank2Web> webs = enumerate_webs(k, n);
                      bool all_ok = true;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(&& : all_ok)
#endif
                      for (long long i = 0; i < static_cast<long long>(webs.size()); ++i) {
                          bool one;
                          try {
                              one = is_indecomposable(module_from_profile(psi(webs[i]), N));
                          } catch (const std::exception&) {
                              one = false;
                          }
                          all_ok = all_ok && one;
                      }
                      if (!all_ok)
                          return false;
                  }
                  int n = 6, k = 3, N = 12;
                  std::vector<int> full{1, 2, 3, 4, 5, 6};
                  auto subsets = combinations(full, k);
                  for (size_t i = 0; i < subsets.size(); ++i)
                      for (size_t j = i + 1; j < subsets.size(); ++j) {
                          ExplicitModule sum = direct_sum(
                              module_from_rank1(make_rank1_profile(n, S(n, subsets[i])), k, N),
                              module_from_rank1(make_rank1_profile(n, S(n, subsets[j])), k, N));
                          if (is_indecomposable(sum))
                              return false;
                      }
                  return true;
              });

    criterion(9, "SES certificates: worked k=7 case (reduced to Gr(7,15)) and full chains at "
                 "k=3,4",
              [] {
                  SesSuiteReport k7 = run_ses_case(7, 5, 1, 4, 4, 0, kSeed, true);
                  if (!k7.ok) {
                      for (const auto& c : k7.cases)
                          if (!c.ok)
                              std::printf("      failed: %s: %s / %s\n", c.name.c_str(),
                                          c.base.message.c_str(), c.stable.message.c_str());
                      return false;
                  }
                  for (const auto& c : k7.cases)
                      if (!(c.base.dims_ok && c.base.hom_dim > 0))
                          return false;
                  for (int k : {3, 4}) {
                      int n = 3 * (k - 1);
                      SesSuiteReport chain = run_ses_chain(k, default_truncation(n), kSeed + k);
                      if (!chain.ok) {
                          for (const auto& c : chain.cases)
                              if (!c.ok)
                                  std::printf("      failed: %s: %s / %s\n", c.name.c_str(),
                                              c.base.message.c_str(), c.stable.message.c_str());
                          return false;
                      }
                  }
                  return true;
              });

    criterion(10, "functor compatibility: eval/F_i on 20 random triples per (k,n); stretching "
                  "square on (3,6); stretched SES re-verifies",
              [] {
                  Rng rng(kSeed + 10);
                  for (auto [k, n] : {std::pair{3, 7}, {4, 9}}) {
                      std::vector<Rank2Web> webs = enumerate_webs(k, n - 1);
                      for (int t = 0; t < 20; ++t) {
                          const Rank2Web& w = webs[rng.next() % webs.size()];
                          int i = rng.range(1, n);
                          GrassPoint p = random_point(k, n, rng);
                          GrassPoint fp = [&] {
                              while (true) {
                                  try {
                                      return forget_column(p, i);
                                  } catch (const error&) {
                                      p = random_point(k, n, rng);
                                  }
                              }
                          }();
                          if (eval_web(stretch_web(w, StretchDir::up, i), p) != eval_web(w, fp))
                              return false;
                      }
                  }
                  // profile/module/web stretching square on the full (3,6) family
                  for (const Rank2Web& w : enumerate_webs(3, 6)) {
                      ExplicitModule m = module_from_profile(psi(w), 12);
                      for (int i = 1; i <= 7; ++i)
                          for (StretchDir dir : {StretchDir::up, StretchDir::down})
                              if (!(extract_profile(stretch_module(m, dir, i)) ==
                                    psi(stretch_web(w, dir, i))))
                                  return false;
                  }
                  // stretched SES re-verifies
                  auto seqs = ses_sides_for_mutation(3, 3, 1, 1, 1);
                  int N = 13;
                  ExplicitModule L = build_side(seqs[0][0], 3, N);
                  ExplicitModule M1 = build_side(seqs[0][1], 3, N);
                  ExplicitModule M2 = build_side(seqs[0][2], 3, N);
                  ExplicitModule T = build_side(seqs[0][3], 3, N);
                  for (StretchDir dir : {StretchDir::up, StretchDir::down}) {
                      SesReport r = verify_ses_modules(
                          "stretched", stretch_module(L, dir, 2), stretch_module(M1, dir, 2),
                          stretch_module(M2, dir, 2), stretch_module(T, dir, 2), kSeed);
                      if (!r.ok)
                          return false;
                  }
                  return true;
              });

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
