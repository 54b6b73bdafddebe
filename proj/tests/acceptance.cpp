// Acceptance gate: runs every release criterion once, prints one PASS/FAIL
// line per criterion with the measured numbers, and exits with the count of
// unexpected failures.  One criterion is known not to hold (see its note) and
// is reported as an expected failure that does not affect the exit code.
//
// Usage: acceptance [--seed N]   (default seed 424242)

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "qcorr/qcorr.hpp"

namespace {

using namespace qcorr;
using clock_type = std::chrono::steady_clock;

std::string fmt(double v, const char* spec = "%.3g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

struct Outcome {
  bool ok = false;
  bool expected_failure = false;  // only meaningful when !ok
  std::string detail;
};

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

const BellDiagonalState kRef{0.8, -0.4, 0.5};

// 1. Discord stays on its plateau 1 - H(3/4) until the critical time.
Outcome criterion_plateau() {
  Outcome r;
  const DephasingChannel ch(1.0, 0.1);
  const double tau = *critical_time(kRef, ch).tau;
  const double plateau = 1.0 - binary_entropy(0.75);
  const auto start = clock_type::now();
  double max_dev = 0.0;
  const int n = 1000;
  for (int i = 0; i < n; ++i) {
    const double t = 0.999 * tau * static_cast<double>(i) / (n - 1);
    const double d = quantum_discord(evolve(kRef, ch, t));
    max_dev = std::max(max_dev, std::abs(d - plateau));
  }
  const double secs = seconds_since(start);
  r.ok = max_dev < 1e-10 && secs < 1.0;
  r.detail = "max |D - (1 - H(3/4))| = " + fmt(max_dev) + " over " +
             std::to_string(n) + " points in [0, 0.999 tau], " + fmt(secs) +
             " s";
  return r;
}

// Independent check for criterion 2: bisection on u + (e^{-ru} - 1)/r = target
// in the scaled time u = Gamma t.  The left side is strictly increasing.
double bisect_crossing(double ratio, double target) {
  double lo = 0.0;
  double hi = target + 1.0 / ratio + 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double g = mid + std::expm1(-ratio * mid) / ratio;
    (g < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// 2. Closed-form critical time against bisection, Markovian limit, and a
//    strictly decreasing bandwidth sweep.
Outcome criterion_critical_time() {
  Outcome r;
  const auto start = clock_type::now();
  const double target = std::log(0.8 / 0.5);

  const DephasingChannel ch(1.0, 0.1);
  const double closed = *critical_time(kRef, ch).scaled_tau;
  const double oracle = bisect_crossing(0.1, target);
  const double rel = std::abs(closed / oracle - 1.0);
  const bool near_quoted = std::abs(closed - 3.232) < 0.005;

  const double markov =
      *critical_time(kRef, DephasingChannel::markovian_limit(1.0)).scaled_tau;
  const bool markov_ok = std::abs(markov - target) < 1e-3;

  const auto sweep = bandwidth_sweep(make_ratio_grid(0.01, 100.0, 60, true),
                                     target);
  bool decreasing = sweep.size() == 60;
  for (std::size_t i = 0; i + 1 < sweep.size(); ++i)
    decreasing = decreasing && sweep[i + 1].scaled_tau < sweep[i].scaled_tau;

  const double secs = seconds_since(start);
  r.ok = rel < 1e-9 && near_quoted && markov_ok && decreasing && secs < 1.0;
  r.detail = "Gamma tau = " + fmt(closed, "%.10g") + ", vs bisection rel " +
             fmt(rel) + ", Markovian " + fmt(markov, "%.6g") +
             ", 60-point sweep " +
             (decreasing ? "strictly decreasing" : "NOT decreasing") + ", " +
             fmt(secs) + " s";
  return r;
}

// 3. Hilbert-Schmidt discord has no plateau: strictly decreasing up to tau,
//    with matching branch values there.
Outcome criterion_hs_monotone() {
  Outcome r;
  const DephasingChannel ch(1.0, 0.1);
  const double tau = *critical_time(kRef, ch).tau;

  bool decreasing = true;
  double prev = hs_piecewise(kRef, ch, 0.0);
  const double q0 = prev;
  const int n = 100;
  for (int i = 1; i < n; ++i) {
    const double q = hs_piecewise(kRef, ch, tau * i / (n - 1));
    decreasing = decreasing && q < prev;
    prev = q;
  }

  const double w2 = std::pow(decoherence_function(ch, tau), 2);
  const double c1t = kRef.c1 * w2;
  const double c2t = kRef.c2 * w2;
  const double before = 0.25 * (c2t * c2t + kRef.c3 * kRef.c3);
  const double after = 0.25 * (c1t * c1t + c2t * c2t);
  const double branch_gap = std::abs(before - after);

  r.ok = decreasing && std::abs(q0 - 0.1025) < 1e-12 &&
         std::abs(before - 0.078125) < 1e-12 && branch_gap < 1e-12;
  r.detail = "Q_S(0) = " + fmt(q0, "%.6g") + ", Q_S(tau) = " +
             fmt(before, "%.6g") + ", branch gap at tau = " + fmt(branch_gap) +
             (decreasing ? ", strictly decreasing on [0, tau]"
                         : ", NOT strictly decreasing");
  return r;
}

// 4. D and Q_S lose smoothness in the same grid cell, and that cell brackets
//    the closed-form critical time.
Outcome criterion_common_kink() {
  Outcome r;
  const DephasingChannel ch(1.0, 0.1);
  const double tau = *critical_time(kRef, ch).tau;
  const int n = 5001;  // 5000 steps on [0, 5]
  std::vector<double> t(n), d(n), q(n);
  for (int i = 0; i < n; ++i) {
    t[i] = 5.0 * i / (n - 1);
    const BellDiagonalState s = evolve(kRef, ch, t[i]);
    d[i] = quantum_discord(s);
    q[i] = hs_discord_bell(s);
  }
  const std::size_t jd = locate_kink_cell(d);
  const std::size_t jq = locate_kink_cell(q);
  const bool same = jd == jq;
  const bool contains = t[jd] <= tau && tau <= t[jd + 1];
  r.ok = same && contains;
  r.detail = "discord kink cell [" + fmt(t[jd], "%.4g") + ", " +
             fmt(t[jd + 1], "%.4g") + "], hs cell [" + fmt(t[jq], "%.4g") +
             ", " + fmt(t[jq + 1], "%.4g") + "], Gamma tau = " +
             fmt(tau, "%.6g") + (contains ? " inside" : " OUTSIDE");
  return r;
}

// 5. Discord and relative-entropy discord coincide for Bell-diagonal states.
Outcome criterion_discord_equals_rel_entropy(std::uint64_t seed) {
  Outcome r;
  oracle::StateSampler sampler(seed);
  double max_dev = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const BellDiagonalState s = sampler.next();
    max_dev = std::max(
        max_dev, std::abs(quantum_discord(s) - relative_entropy_discord(s).value));
  }
  r.ok = max_dev < 1e-10;
  r.detail = "max |D - Q_R| = " + fmt(max_dev) + " over 1000 seeded states";
  return r;
}

// 6. Brute-force optimizers agree with every closed formula.
Outcome criterion_oracle_agreement(std::uint64_t seed) {
  Outcome r;
  const auto start = clock_type::now();
  oracle::StateSampler sampler(seed);
  double dev_c = 0.0, dev_h = 0.0, dev_r = 0.0;
  for (int i = 0; i < 500; ++i) {
    const BellDiagonalState s = sampler.next();
    const DensityMatrix rho = to_density_matrix(s);
    dev_c = std::max(dev_c, std::abs(oracle::optimize_classical_correlation(rho).value -
                                     classical_correlation(s)));
    dev_h = std::max(dev_h, std::abs(oracle::min_hs_to_zero_discord(s).value -
                                     hs_discord_bell(s)));
    dev_r = std::max(dev_r, std::abs(oracle::min_relative_entropy_to_classical(s).value -
                                     relative_entropy_discord(s).value));
  }
  const double secs = seconds_since(start);
  r.ok = dev_c < 2e-4 && dev_h < 1e-8 && dev_r < 1e-6 && secs < 60.0;
  r.detail = "500 seeded states: max dev C = " + fmt(dev_c) + ", hs = " +
             fmt(dev_h) + ", rel-entropy = " + fmt(dev_r) + ", " + fmt(secs) +
             " s";
  return r;
}

// 7. With a unique dominant coefficient, the nearest zero-discord triple and
//    the closest classical triple are the same point.
Outcome criterion_coincidence(std::uint64_t seed) {
  Outcome r;
  oracle::StateSampler sampler(seed);
  double max_dev = 0.0;
  bool same_axis = true;
  int accepted = 0;
  while (accepted < 500) {
    const BellDiagonalState s = sampler.next();
    const std::array<double, 3> a = {std::abs(s.c1), std::abs(s.c2),
                                     std::abs(s.c3)};
    std::size_t jmax = 0;
    for (std::size_t j = 1; j < 3; ++j)
      if (a[j] > a[jmax]) jmax = j;
    double second = -1.0;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != jmax) second = std::max(second, a[j]);
    if (a[jmax] - second < 1e-9) continue;  // skip near-ties
    ++accepted;

    const BellDiagonalState n = nearest_zero_discord_state(s);
    const BellDiagonalState c = closest_classical_state(s).state;
    const std::array<double, 3> nn = {n.c1, n.c2, n.c3};
    const std::array<double, 3> cc = {c.c1, c.c2, c.c3};
    std::size_t axis_c = 0;
    for (std::size_t j = 1; j < 3; ++j)
      if (std::abs(cc[j]) > std::abs(cc[axis_c])) axis_c = j;
    same_axis = same_axis && axis_c == jmax;
    for (std::size_t j = 0; j < 3; ++j)
      max_dev = std::max(max_dev, std::abs(nn[j] - cc[j]));
  }
  r.ok = same_axis && max_dev < 1e-12;
  r.detail = std::string(same_axis ? "same axis" : "AXIS MISMATCH") +
             ", max coefficient gap = " + fmt(max_dev) +
             " over 500 unique-maximum states";
  return r;
}

// 8. Kraus-sum matrix evolution matches the closed-form triple map.
Outcome criterion_channel_consistency(std::uint64_t seed) {
  Outcome r;
  const DephasingChannel ch(1.0, 0.1);
  oracle::StateSampler sampler(seed);
  double max_state_dev = 0.0, max_comp_dev = 0.0;
  for (int i = 0; i < 100; ++i) {
    const BellDiagonalState s = sampler.next();
    const double t = 10.0 * sampler.uniform();
    const DensityMatrix direct = evolve_density(to_density_matrix(s), ch, t);
    const DensityMatrix closed = to_density_matrix(evolve(s, ch, t));
    max_state_dev = std::max(max_state_dev, max_abs(direct.m - closed.m));

    const KrausSet ks = kraus_operators(ch, t);
    Matrix4 sum;
    for (const Matrix4& op : ks.ops) sum = sum + adjoint(op) * op;
    max_comp_dev =
        std::max(max_comp_dev, max_abs(sum - Matrix4::identity()));
  }
  r.ok = max_state_dev < 1e-12 && max_comp_dev < 1e-13;
  r.detail = "max |Kraus - closed form| = " + fmt(max_state_dev) +
             ", max completeness defect = " + fmt(max_comp_dev) +
             " over 100 random states and times";
  return r;
}

// 9. Contour-map spot checks at c3 = 0.5.  The (0,0) subcheck cannot pass:
//    the state (0, 0, 0.5) has a single nonzero correlation, so it is
//    classically correlated and its discord is exactly zero; 0.188722 is its
//    total mutual information, which happens to equal the discord at
//    (0.8, -0.4).  The subcheck is kept as stated and reported as an expected
//    failure.
Outcome criterion_contour_spots() {
  Outcome r;
  const int g = 201;  // axis step 0.01, so all probe points lie on the grid
  const ContourTable dm = make_contour(g, 0.5, MeasureKind::discord);
  const ContourTable hm = make_contour(g, 0.5, MeasureKind::hs);
  const auto at = [g](const ContourTable& m, int i, int j) {
    return m.values[static_cast<std::size_t>(j) * g + i];
  };
  const double target = 1.0 - binary_entropy(0.75);

  const double v_ref = at(dm, 180, 60);     // (0.8, -0.4)
  const double v_origin = at(dm, 100, 100); // (0, 0)
  const double v_hs = at(hm, 180, 60);
  const double v_line = at(dm, 160, 70);    // (0.6, -0.3), on c2 = -0.5 c1

  const bool ok_ref = std::abs(v_ref - target) < 1e-6;
  const bool ok_origin = std::abs(v_origin - target) < 1e-6;
  const bool ok_hs = std::abs(v_hs - 0.1025) < 1e-6;
  const bool ok_line = std::abs(v_line - v_ref) < 1e-12;

  r.ok = ok_ref && ok_origin && ok_hs && ok_line;
  r.expected_failure = ok_ref && ok_hs && ok_line && !ok_origin;
  r.detail = "discord(0.8,-0.4) = " + fmt(v_ref, "%.6f") +
             (ok_ref ? " ok" : " BAD") + "; hs(0.8,-0.4) = " +
             fmt(v_hs, "%.6f") + (ok_hs ? " ok" : " BAD") +
             "; constant along c2 = -0.5 c1 at (0.6,-0.3)" +
             (ok_line ? " ok" : " BAD") + "; discord(0,0) = " +
             fmt(v_origin, "%.3g") + ", not 0.188722";
  if (r.expected_failure)
    r.detail +=
        " [expected failure: (0, 0, 0.5) has one nonzero correlation, a "
        "classically correlated state with zero discord; 0.188722 is its "
        "mutual information, which coincides with the discord at (0.8,-0.4)]";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 424242;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::fprintf(stderr, "usage: %s [--seed N]\n", argv[0]);
      return 64;
    }
  }

  std::printf("acceptance suite (seed %llu)\n",
              static_cast<unsigned long long>(seed));

  struct Row {
    const char* name;
    Outcome outcome;
  };
  const Row rows[] = {
      {"discord plateau", criterion_plateau()},
      {"critical time", criterion_critical_time()},
      {"hs discord monotone", criterion_hs_monotone()},
      {"common sudden-change cell", criterion_common_kink()},
      {"discord equals rel-entropy discord",
       criterion_discord_equals_rel_entropy(seed)},
      {"brute-force oracle agreement", criterion_oracle_agreement(seed + 1)},
      {"nearest/closest coincidence", criterion_coincidence(seed + 2)},
      {"channel consistency", criterion_channel_consistency(seed + 3)},
      {"contour spot checks", criterion_contour_spots()},
  };

  int passed = 0, failed = 0, expected = 0;
  int index = 0;
  for (const Row& row : rows) {
    ++index;
    const Outcome& o = row.outcome;
    if (o.ok)
      ++passed;
    else {
      ++failed;
      if (o.expected_failure) ++expected;
    }
    std::printf("[%s] %d. %s: %s\n", o.ok ? "PASS" : "FAIL", index, row.name,
                o.detail.c_str());
  }

  const int unexpected = failed - expected;
  std::printf("%d passed, %d failed (%d expected)\n", passed, failed, expected);
  return unexpected;
}
