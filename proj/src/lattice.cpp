#include "gravnano/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "gravnano/detail/kahan.hpp"

namespace gravnano {

LatticeSphere generate_lattice_sphere(double radius_m, double delta_m) {
  if (!(radius_m > 0.0) || !(delta_m > 0.0))
    throw std::invalid_argument("generate_lattice_sphere: radius and delta must be > 0");
  double ratio = radius_m / delta_m;
  if (ratio > 2048.0)
    throw std::invalid_argument("generate_lattice_sphere: radius/delta too large");
  // Slightly inflated bound so shells landing exactly on R survive the
  // floating-point division above (R = 5 delta must keep the s = 25 shell).
  double limit = ratio * ratio * (1.0 + 1e-12);
  int kmax = (int)std::floor(ratio + 1e-9);
  LatticeSphere out;
  out.radius_m = radius_m;
  out.delta_m = delta_m;
  for (int k = -kmax; k <= kmax; ++k)
    for (int l = -kmax; l <= kmax; ++l)
      for (int m = -kmax; m <= kmax; ++m)
        if (double(k) * k + double(l) * l + double(m) * m <= limit)
          out.points.emplace_back(k, l, m);
  return out;
}

int effective_jobs(int jobs) {
  if (jobs > 0) return jobs;
  if (const char* env = std::getenv("GRAVNANO_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? (int)hw : 1;
}

namespace {

// Row-chunked pair sum. Chunk size is fixed so the partial sums, and therefore
// the in-order combined total, do not depend on the worker count.
constexpr std::size_t kChunkRows = 64;

struct ChunkResult {
  double sum = 0.0;
  std::size_t bad_i = SIZE_MAX, bad_j = SIZE_MAX;  // first coincident pair, if any
};

ChunkResult sum_chunk(const std::vector<Eigen::Vector3i>& pts, std::size_t row0, std::size_t row1,
                      const Eigen::Vector3d& t_in_delta, double min_dist) {
  ChunkResult r;
  detail::KahanSum acc;
  const std::size_t n = pts.size();
  for (std::size_t i = row0; i < row1; ++i) {
    Eigen::Vector3d xi = pts[i].cast<double>();
    detail::KahanSum row;
    for (std::size_t j = 0; j < n; ++j) {
      Eigen::Vector3d dvec = xi - (pts[j].cast<double>() + t_in_delta);
      double dist = dvec.norm();
      if (dist < min_dist) {
        if (r.bad_i == SIZE_MAX) {
          r.bad_i = i;
          r.bad_j = j;
        }
        continue;
      }
      row.add(1.0 / dist);
    }
    acc.add(row.sum());
  }
  r.sum = acc.sum();
  return r;
}

}  // namespace

double lattice_pair_energy(const LatticeSphere& lattice, const Eigen::Vector3d& translation_m,
                           double atom_mass_kg, const PhysicalConstants& c, int jobs) {
  if (!(atom_mass_kg > 0.0))
    throw std::invalid_argument("lattice_pair_energy: atom mass must be > 0");
  if (lattice.points.empty())
    throw std::invalid_argument("lattice_pair_energy: empty lattice");
  const std::size_t n = lattice.points.size();
  const Eigen::Vector3d t = translation_m / lattice.delta_m;  // work in units of delta
  const double min_dist = 1e-15;

  std::size_t nchunks = (n + kChunkRows - 1) / kChunkRows;
  int workers = std::min<std::size_t>(effective_jobs(jobs), nchunks);
  std::vector<ChunkResult> results(nchunks);

  if (workers <= 1) {
    for (std::size_t ci = 0; ci < nchunks; ++ci)
      results[ci] = sum_chunk(lattice.points, ci * kChunkRows,
                              std::min(n, (ci + 1) * kChunkRows), t, min_dist);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t ci = next.fetch_add(1);
        if (ci >= nchunks) return;
        results[ci] = sum_chunk(lattice.points, ci * kChunkRows,
                                std::min(n, (ci + 1) * kChunkRows), t, min_dist);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  detail::KahanSum total;
  for (const auto& r : results) {
    if (r.bad_i != SIZE_MAX)
      throw CoincidentPairError(r.bad_i, r.bad_j,
                                "lattice_pair_energy: coincident pair (" + std::to_string(r.bad_i) +
                                    ", " + std::to_string(r.bad_j) + ") at this translation");
    total.add(r.sum);
  }
  return -c.G * atom_mass_kg * atom_mass_kg * total.sum() / lattice.delta_m;
}

std::vector<LatticeProfilePoint> normalized_profile(const LatticeSphere& lattice,
                                                    const std::vector<double>& axis_fractions,
                                                    double atom_mass_kg,
                                                    const PhysicalConstants& c, int jobs) {
  double N = (double)lattice.atom_count();
  double m = atom_mass_kg;
  double vd = -6.0 * c.G * (N * m) * (N * m) / (5.0 * lattice.radius_m);
  std::vector<LatticeProfilePoint> out;
  out.reserve(axis_fractions.size());
  for (double x : axis_fractions) {
    if (!(x > 0.0) || !(x < 1.0))
      throw std::invalid_argument("normalized_profile: axis fractions must lie in (0, 1)");
    double d = x * lattice.delta_m;
    double e = lattice_pair_energy(lattice, {d, 0.0, 0.0}, m, c, jobs);
    double vs = -c.G * N * m * m / d;
    out.push_back({x, e / vd, vs / vd});
  }
  return out;
}

}  // namespace gravnano
