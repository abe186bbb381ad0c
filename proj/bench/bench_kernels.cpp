// Serial reference vs OpenMP kernel timings. Threads: POSITROID_LAB_THREADS.
#include "positroid/grassmann.hpp"
#include "positroid/hypersimplex.hpp"
#include "positroid/parallel.hpp"
#include "positroid/plabic.hpp"
#include "positroid/random.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace positroid;

namespace {

double seconds(const std::function<void()>& f, int reps) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

void report(const char* name, double serial, double parallel, bool agree) {
    std::printf("%-28s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, serial, parallel, serial / parallel,
                agree ? "agree" : "DISAGREE");
}

bool same_matchings(const std::vector<Matching>& a, const std::vector<Matching>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].edges != b[i].edges || a[i].boundary != b[i].boundary) return false;
    return true;
}

bool same_tilings(const std::vector<Tiling>& a, const std::vector<Tiling>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].tiles.size() != b[i].tiles.size()) return false;
        for (std::size_t j = 0; j < a[i].tiles.size(); ++j)
            if (a[i].tiles[j].perm != b[i].tiles[j].perm) return false;
    }
    return true;
}

}  // namespace

int main() {
    std::printf("threads %d\n", thread_count());
    bool ok = true;

    Rng rng(1);
    RatMatrix c(5, 13);
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = rng.signed_weight();
    PluckerVector ps, pp;
    double s = seconds([&] { ps = plucker_of_matrix_serial(c); }, 3);
    double p = seconds([&] { pp = plucker_of_matrix(c); }, 3);
    report("plucker minors (5,13)", s, p, ps == pp);
    ok = ok && ps == pp;

    auto g = top_cell_graph(4, 9);
    auto bg = bipartize(g).graph;
    std::vector<Matching> ms, mp;
    s = seconds([&] { ms = matchings_serial(bg); }, 3);
    p = seconds([&] { mp = matchings(bg); }, 3);
    report("matchings top cell (4,9)", s, p, same_matchings(ms, mp));
    ok = ok && same_matchings(ms, mp);

    std::vector<PluckerVector> ss, sp;
    s = seconds([&] { ss = sample_cell_serial(g, 40, 7); }, 1);
    p = seconds([&] { sp = sample_cell(g, 40, 7); }, 1);
    report("sample cell (4,9) x40", s, p, ss == sp);
    ok = ok && ss == sp;

    std::vector<Tiling> ts, tp;
    s = seconds([&] { ts = enumerate_tilings_serial(3, 7); }, 1);
    p = seconds([&] { tp = enumerate_tilings(3, 7); }, 1);
    report("tilings of D_{3,7}", s, p, same_tilings(ts, tp));
    ok = ok && same_tilings(ts, tp);

    return ok ? 0 : 1;
}
