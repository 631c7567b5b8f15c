#include "vsckin/kmc.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "vsckin/error.hpp"

namespace vsckin {
namespace {

struct Accumulator {
  std::vector<double> sum;
  std::vector<double> sum_sq;
};

// Cumulative distribution over targets for each source state.
struct JumpTable {
  std::vector<double> exit_rate;
  std::vector<std::vector<double>> cumulative;
  std::vector<std::vector<std::size_t>> targets;
};

JumpTable build_jump_table(const RateMatrix& k) {
  const std::size_t n = k.dimension();
  JumpTable table;
  table.exit_rate.assign(n, 0.0);
  table.cumulative.resize(n);
  table.targets.resize(n);
  for (std::size_t from = 0; from < n; ++from) {
    double acc = 0.0;
    for (std::size_t to = 0; to < n; ++to) {
      if (to == from) continue;
      const double r = k.rate(to, from);
      if (r > 0.0) {
        acc += r;
        table.cumulative[from].push_back(acc);
        table.targets[from].push_back(to);
      }
    }
    table.exit_rate[from] = acc;
  }
  return table;
}

std::size_t sample_index(std::span<const double> cumulative, double u) {
  const double target = u * cumulative.back();
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
  if (it == cumulative.end()) --it;
  return static_cast<std::size_t>(it - cumulative.begin());
}

void run_shard(const JumpTable& table, const StateSpace& space, std::span<const double> p0_cdf,
               std::span<const double> checkpoints, std::size_t count, std::uint64_t seed,
               std::uint64_t shard, Accumulator& acc) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shard), static_cast<std::uint32_t>(shard >> 32)};
  std::mt19937_64 rng(seq);
  // 53-bit uniform in [0, 1).
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  const std::size_t ns = space.network().species_count();
  const std::size_t nc = checkpoints.size();
  for (std::size_t traj = 0; traj < count; ++traj) {
    std::size_t state = sample_index(p0_cdf, uniform());
    double t = 0.0;
    std::size_t next = 0;
    while (next < nc) {
      const double rate = table.exit_rate[state];
      const double dwell = rate > 0.0 ? -std::log1p(-uniform()) / rate : INFINITY;
      const double t_jump = t + dwell;
      while (next < nc && checkpoints[next] < t_jump) {
        const auto& st = space[state];
        for (std::size_t s = 0; s < ns; ++s) {
          const double c = st.count(s);
          acc.sum[next * ns + s] += c;
          acc.sum_sq[next * ns + s] += c * c;
        }
        ++next;
      }
      if (next >= nc) break;
      t = t_jump;
      const auto& cdf = table.cumulative[state];
      state = table.targets[state][sample_index(cdf, uniform())];
    }
  }
}

}  // namespace

KmcResult kmc_species_counts(const RateMatrix& k, const StateSpace& space,
                             std::span<const double> p0, std::span<const double> checkpoints,
                             const KmcOptions& options) {
  if (p0.size() != k.dimension() || space.size() != k.dimension()) {
    throw ValidationError("kmc: dimension mismatch");
  }
  if (options.trajectories == 0 || options.shards == 0) {
    throw ValidationError("kmc: trajectories and shards must be > 0");
  }
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (!(checkpoints[i] >= 0.0) || (i > 0 && !(checkpoints[i] > checkpoints[i - 1]))) {
      throw ValidationError("kmc: checkpoints must be >= 0 and strictly increasing");
    }
  }

  std::vector<double> p0_cdf(p0.size());
  std::partial_sum(p0.begin(), p0.end(), p0_cdf.begin());
  if (!(p0_cdf.back() > 0.0)) throw ValidationError("kmc: initial distribution is empty");

  const JumpTable table = build_jump_table(k);
  const std::size_t ns = space.network().species_count();
  const std::size_t nc = checkpoints.size();
  const std::size_t shards = std::min(options.shards, options.trajectories);

  std::vector<Accumulator> accs(shards, Accumulator{std::vector<double>(nc * ns, 0.0),
                                                    std::vector<double>(nc * ns, 0.0)});
  std::vector<std::size_t> counts(shards, options.trajectories / shards);
  for (std::size_t i = 0; i < options.trajectories % shards; ++i) ++counts[i];

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(shards)));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t s = w; s < shards; s += threads) {
          run_shard(table, space, p0_cdf, checkpoints, counts[s], options.seed, s, accs[s]);
        }
      });
    }
  }

  KmcResult result;
  result.checkpoints.assign(checkpoints.begin(), checkpoints.end());
  result.trajectories = options.trajectories;
  result.mean = Matrix(nc, ns);
  result.standard_error = Matrix(nc, ns);
  const double n = static_cast<double>(options.trajectories);
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t s = 0; s < ns; ++s) {
      double sum = 0.0;
      double sum_sq = 0.0;
      for (const auto& a : accs) {  // shard order keeps the reduction deterministic
        sum += a.sum[c * ns + s];
        sum_sq += a.sum_sq[c * ns + s];
      }
      const double mean = sum / n;
      const double var = std::max(0.0, sum_sq / n - mean * mean) * n / std::max(1.0, n - 1.0);
      result.mean(c, s) = mean;
      result.standard_error(c, s) = std::sqrt(var / n);
    }
  }
  return result;
}

}  // namespace vsckin
