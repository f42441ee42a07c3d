// Timing comparison of the serial reference kernels against the
// OpenMP-parallel ones on the two batch workloads: relation vanishing
// over sample points and Jacobian certification over special points.

#include <chrono>
#include <cstdio>

#include "tetra/core.hpp"
#include "tetra/parallel.hpp"
#include "tetra/relations.hpp"

using namespace tetra;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class Fn>
double timed(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return seconds(t0, std::chrono::steady_clock::now());
}

}  // namespace

int main(int argc, char** argv) {
    int samples = argc > 1 ? std::atoi(argv[1]) : 200;

    std::vector<QVec> lifts;
    for (const auto& c : sample_configs(11, samples, {.require_nonzero_edges = true})) {
        NormalizedChart ch = normalize(c);
        QVec y(kNumPairs);
        for (const auto& p : all_pairs())
            y[static_cast<std::size_t>(pair_index(p.face, p.edge))] =
                ch.x[static_cast<std::size_t>(p.edge)];
        lifts.push_back(std::move(y));
    }
    const auto& rels = core_relations();

    VanishingReport serial_rep, parallel_rep;
    double t_serial = timed([&] { serial_rep = verify_vanishing_serial(rels, lifts); });
    double t_parallel = timed([&] { parallel_rep = verify_vanishing(rels, lifts); });
    bool same = serial_rep.failures.size() == parallel_rep.failures.size();

    std::printf("vanishing of %zu relations on %d lifts\n", rels.size(), samples);
    std::printf("  serial    %8.3fs\n", t_serial);
    std::printf("  openmp    %8.3fs   (%d threads, identical report: %s)\n", t_parallel,
                worker_count(), same ? "yes" : "NO");

    Catalog cat = enumerate_special();
    std::vector<const CorePoint*> points;
    for (const auto& r : cat.records)
        for (const auto& z : r.representatives) points.push_back(&z);

    std::vector<int> coranks_serial(points.size()), coranks_parallel(points.size());
    parallel_enabled() = false;
    double c_serial = timed([&] {
        for (std::size_t i = 0; i < points.size(); ++i)
            coranks_serial[i] = jacobian_certificate(*points[i]).corank;
    });
    parallel_enabled() = true;
    double c_parallel = timed([&] {
        parallel_for(points.size(), [&](std::size_t i) {
            coranks_parallel[i] = jacobian_certificate(*points[i]).corank;
        });
    });
    std::printf("jacobian certificates at %zu special points\n", points.size());
    std::printf("  serial    %8.3fs\n", c_serial);
    std::printf("  openmp    %8.3fs   (identical coranks: %s)\n", c_parallel,
                coranks_serial == coranks_parallel ? "yes" : "NO");
    return 0;
}
