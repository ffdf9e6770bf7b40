// SPDX-License-Identifier: Apache-2.0
//
// losmimo - LOS MIMO channel modelling and antenna separation design
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "losmimo/verify.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "losmimo/asp.hpp"
#include "losmimo/design.hpp"
#include "losmimo/io.hpp"
#include "losmimo/spectrum.hpp"

namespace losmimo::verify
{
    namespace
    {
        constexpr double kLambda28GHz = 3.0 / 280.0; // 28 GHz at c = 3e8
        constexpr double kRefSep = 0.5976;           // p=2 solution at D=50 m, M=3
        constexpr double kSnrDb = 13.0;

        std::string fmt(double v, int prec = 6)
        {
            return format_double(v, prec);
        }

        DesignSpec v2v_spec()
        {
            DesignSpec spec;
            spec.wavelength = Wavelength::from_meters(kLambda28GHz);
            return spec;
        }

        // Brute-force column inner product under the first-order path model:
        // the plain sum over receive antennas, independent of the
        // closed-form path.
        std::complex<double> direct_inner_product(const LinkGeometry &geom, double lambda_m,
                                                  int col_k, int col_l)
        {
            std::complex<double> sum = 0.0;
            for (int m = 0; m < geom.m_rx; ++m)
            {
                const double dr = path_length_approx(geom, m, col_l) -
                                  path_length_approx(geom, m, col_k);
                sum += std::polar(1.0, 2.0 * std::numbers::pi * dr / lambda_m);
            }
            return sum;
        }

        CheckResult check_admissible_set()
        {
            CheckResult r{"A1", "admissible p set for M=N=3 up to 8", false, ""};
            const std::vector<int> got = admissible_p(3, 3, 8);
            const std::vector<int> want = {1, 2, 4, 5, 7, 8};
            r.passed = got == want;
            std::ostringstream os;
            os << "got {";
            for (std::size_t i = 0; i < got.size(); ++i)
                os << (i ? "," : "") << got[i];
            os << "} want {1,2,4,5,7,8}";
            r.detail = os.str();
            return r;
        }

        CheckResult check_divisor_oracle()
        {
            CheckResult r{"A2", "divisor rule vs numerical orthogonality, M<=24, p<=100", false, ""};
            int checked = 0, disagreements = 0;
            for (int m = 2; m <= 24; ++m)
            {
                for (int n = 2; n <= m; ++n)
                {
                    const std::vector<int> adm = admissible_p(m, n, 100);
                    std::vector<bool> is_adm(101, false);
                    for (int p : adm)
                        is_adm[p] = true;
                    for (int p = 1; p <= 100; ++p)
                    {
                        const bool numeric =
                            orthogonality_check(static_cast<double>(p) / m, m, n).orthogonal;
                        ++checked;
                        if (numeric != is_adm[p])
                            ++disagreements;
                    }
                }
            }
            r.passed = disagreements == 0;
            r.detail = std::to_string(checked) + " triples, " +
                       std::to_string(disagreements) + " disagreements";
            return r;
        }

        CheckResult check_separation_value()
        {
            CheckResult r{"A3", "equal separation for p=2, D=50 m, M=3", false, ""};
            const double d = equal_separation(2, kLambda28GHz, 50.0, 3);
            r.passed = std::abs(d - 0.5976) <= 2e-4;
            r.detail = "d = " + fmt(d) + " m, want 0.5976 +/- 0.0002";
            return r;
        }

        CheckResult check_multi_distance()
        {
            CheckResult r{"A4", "optimum distances of d=0.5976 over [10, 100] m", false, ""};
            const std::vector<double> want = {10.0, 12.5, 14.2857, 20.0, 25.0, 50.0, 100.0};
            const std::vector<double> got =
                optimal_distances(kRefSep, kLambda28GHz, 3, 3, 10.0, 100.0);

            bool ok = got.size() == want.size();
            double worst = 0.0;
            if (ok)
                for (std::size_t i = 0; i < want.size(); ++i)
                    worst = std::max(worst, std::abs(got[i] - want[i]));
            ok = ok && worst <= 0.01;

            std::ostringstream os;
            os << got.size() << " distances {";
            for (std::size_t i = 0; i < got.size(); ++i)
                os << (i ? "," : "") << fmt(got[i]);
            os << "}, worst offset " << fmt(worst) << " m (tol 0.01)";
            r.passed = ok;
            r.detail = os.str();
            return r;
        }

        double waterfill_from(const std::vector<double> &eigs, double snr_db)
        {
            return waterfill_capacity(make_spectrum(eigs), snr_db).bits_per_s_per_hz;
        }

        CheckResult check_capacity_plateaus()
        {
            CheckResult r{"A5", "water-filling capacities at SNR 13 dB", false, ""};
            const double s17 = std::sqrt(17.0);
            const double c3 = waterfill_from({3.0, 3.0, 3.0}, kSnrDb);
            const double c2 = waterfill_from({(9.0 + s17) / 2.0, (9.0 - s17) / 2.0, 0.0}, kSnrDb);
            const double c1 = waterfill_from({9.0, 0.0, 0.0}, kSnrDb);
            r.passed = std::abs(c3 - 13.18) <= 0.02 && std::abs(c2 - 10.72) <= 0.02 &&
                       std::abs(c1 - 7.50) <= 0.02;
            r.detail = "C = {" + fmt(c3) + ", " + fmt(c2) + ", " + fmt(c1) +
                       "}, want {13.18, 10.72, 7.50} +/- 0.02";
            return r;
        }

        CheckResult check_end_to_end_orthogonality()
        {
            CheckResult r{"A6", "exact-model eigenvalues in [2.95, 3.05] and capacity at "
                                "the optimum distances of d=0.5976", false, ""};
            const DesignSpec spec = v2v_spec();
            const std::vector<double> dists = {10.0, 12.5, 14.2857, 20.0, 25.0, 50.0, 100.0};

            bool ok = true;
            std::ostringstream os;
            for (double dist : dists)
            {
                const ProfilePoint pt = evaluate_link(kRefSep, dist, spec);
                const bool eig_ok = pt.eigenvalues.front() <= 3.05 && pt.eigenvalues.back() >= 2.95;
                const bool cap_ok = std::abs(pt.capacity_bps_hz - 13.18) <= 0.05;
                if (!(eig_ok && cap_ok))
                {
                    ok = false;
                    os << " D=" << fmt(dist, 6) << ": eig={" << fmt(pt.eigenvalues[0], 4) << ","
                       << fmt(pt.eigenvalues[1], 4) << "," << fmt(pt.eigenvalues[2], 4)
                       << "} C=" << fmt(pt.capacity_bps_hz, 4) << (eig_ok ? "" : " [eig out]")
                       << (cap_ok ? "" : " [cap out]") << ';';
                }
            }
            r.passed = ok;
            r.detail = ok ? "all 7 distances within band" : "failing:" + os.str();
            return r;
        }

        CheckResult check_rank_collapse_locations()
        {
            CheckResult r{"A7", "rank-collapse distances on a 0.05 m sweep of [10, 100]", false, ""};
            const DesignSpec spec = v2v_spec();

            double best2 = std::numeric_limits<double>::infinity(), at2 = 0.0;
            double best3 = std::numeric_limits<double>::infinity(), at3 = 0.0;
            for (long k = 0; k <= 1800; ++k)
            {
                const double dist = 10.0 + 0.05 * k;
                const ProfilePoint pt = evaluate_link(kRefSep, dist, spec);
                const double l3 = pt.eigenvalues[2]; // smallest
                const double l2 = pt.eigenvalues[1]; // second smallest
                if (l3 < best3)
                {
                    best3 = l3;
                    at3 = dist;
                }
                if (l2 < best2)
                {
                    best2 = l2;
                    at2 = dist;
                }
            }
            // The second-smallest eigenvalue bottoms out where the rank
            // collapses to 1 (delta = 1); the smallest where it collapses
            // to 2 (delta = 1/2).
            const bool rank1_ok = std::abs(at2 - 33.33) <= 0.5;
            const bool rank2_ok = std::abs(at3 - 66.67) <= 0.5;
            r.passed = rank1_ok && rank2_ok;
            r.detail = "rank->1 at D=" + fmt(at2) + " m (lambda2=" + fmt(best2, 3) +
                       "), rank->2 at D=" + fmt(at3) + " m (lambda3=" + fmt(best3, 3) +
                       "); want 33.33 / 66.67 +/- 0.5";
            return r;
        }

        CheckResult check_shift_relation()
        {
            CheckResult r{"A8", "distance shift from d=0.5976 to d=0.7 at D=50 m", false, ""};
            const double shifted = shifted_distance(kRefSep, 0.7, 50.0);
            const double factor = (0.7 / kRefSep) * (0.7 / kRefSep);
            const ProfilePoint pt = evaluate_link(0.7, 68.60, v2v_spec());

            r.passed = std::abs(shifted - 68.60) <= 0.05 && std::abs(factor - 1.372) <= 0.003 &&
                       std::abs(pt.capacity_bps_hz - 13.18) <= 0.05;
            r.detail = "D' = " + fmt(shifted) + " m (want 68.60 +/- 0.05), factor " + fmt(factor) +
                       " (want 1.372 +/- 0.003), C(0.7, 68.60) = " + fmt(pt.capacity_bps_hz) +
                       " (want 13.18 +/- 0.05)";
            return r;
        }

        CheckResult check_delta_invariance()
        {
            CheckResult r{"A9", "capacity invariance under (d, D) -> (d s, D s^2), exact model",
                          false, ""};
            const DesignSpec spec = v2v_spec();
            std::mt19937_64 rng(20260811);
            std::uniform_real_distribution<double> sep_dist(0.2, 0.6);
            std::uniform_real_distribution<double> dist_dist(20.0, 60.0);
            std::uniform_real_distribution<double> scale_dist(0.5, 2.0);

            double worst = 0.0;
            for (int i = 0; i < 50; ++i)
            {
                const double d = sep_dist(rng);
                const double dist = dist_dist(rng);
                const double s = scale_dist(rng);
                const double c0 = evaluate_link(d, dist, spec).capacity_bps_hz;
                const double c1 = evaluate_link(d * s, dist * s * s, spec).capacity_bps_hz;
                worst = std::max(worst, std::abs(c1 - c0));
            }
            r.passed = worst < 0.1;
            r.detail = "max |dC| = " + fmt(worst) + " bps/Hz over 50 draws (tol 0.1)";
            return r;
        }

        CheckResult check_inner_product_oracle()
        {
            CheckResult r{"A10", "closed-form inner product vs direct summation", false, ""};
            std::mt19937_64 rng(77);
            std::uniform_int_distribution<int> count_dist(2, 6);
            std::uniform_real_distribution<double> sep_dist(0.05, 1.0);
            std::uniform_real_distribution<double> range_dist(10.0, 200.0);
            std::uniform_real_distribution<double> tilt_dist(0.0, 1.49);
            std::uniform_real_distribution<double> az_dist(0.0, 2.0 * std::numbers::pi);

            const Wavelength wl = Wavelength::from_meters(kLambda28GHz);
            double worst = 0.0;
            for (int i = 0; i < 200; ++i)
            {
                LinkGeometry geom;
                geom.n_tx = count_dist(rng);
                geom.m_rx = count_dist(rng);
                geom.d_tx_m = sep_dist(rng);
                geom.d_rx_m = sep_dist(rng);
                geom.range_m = range_dist(rng);
                geom.theta_tx_rad = tilt_dist(rng);
                geom.theta_rx_rad = tilt_dist(rng);
                geom.phi_rx_rad = az_dist(rng);

                for (int k = 0; k < geom.n_tx; ++k)
                    for (int l = 0; l < geom.n_tx; ++l)
                    {
                        if (k == l)
                            continue;
                        const auto closed = inner_product_closed_form(geom, wl, k, l);
                        const auto direct = direct_inner_product(geom, wl.meters, k, l);
                        worst = std::max(worst, std::abs(closed - direct));
                    }
            }
            r.passed = worst < 1e-9;
            r.detail = "max |closed - direct| = " + fmt(worst, 3) +
                       " over 200 geometries (tol 1e-9)";
            return r;
        }

        CheckResult check_trace_conservation()
        {
            CheckResult r{"A11", "trace of the eigenvalue spectrum equals M*N", false, ""};
            std::mt19937_64 rng(31);
            std::uniform_int_distribution<int> count_dist(2, 6);
            std::uniform_real_distribution<double> sep_dist(0.05, 1.0);
            std::uniform_real_distribution<double> range_dist(5.0, 200.0);
            std::uniform_real_distribution<double> tilt_dist(0.0, 1.49);

            const Wavelength wl = Wavelength::from_meters(kLambda28GHz);
            double worst_rel = 0.0;
            for (int i = 0; i < 100; ++i)
            {
                LinkGeometry geom;
                geom.n_tx = count_dist(rng);
                geom.m_rx = count_dist(rng);
                geom.d_tx_m = sep_dist(rng);
                geom.d_rx_m = sep_dist(rng);
                geom.range_m = range_dist(rng);
                geom.theta_tx_rad = tilt_dist(rng);
                geom.theta_rx_rad = tilt_dist(rng);

                const PathModel model = (i % 2) ? PathModel::exact : PathModel::approximate;
                const EigenSpectrum spec = eigen_spectrum(build_channel(geom, wl, model));
                const double mn = static_cast<double>(geom.m_rx) * geom.n_tx;
                worst_rel = std::max(worst_rel, std::abs(spec.trace - mn) / mn);
            }
            r.passed = worst_rel < 1e-8;
            r.detail = "max relative trace error " + fmt(worst_rel, 3) +
                       " over 100 channels (tol 1e-8)";
            return r;
        }

        CheckResult check_waterfilling_properties()
        {
            CheckResult r{"A12", "water-filling beats equal power; powers valid", false, ""};
            std::mt19937_64 rng(5150);
            std::uniform_int_distribution<int> size_dist(2, 6);
            std::uniform_real_distribution<double> eig_dist(0.0, 10.0);
            std::uniform_real_distribution<double> zero_dist(0.0, 1.0);
            std::uniform_real_distribution<double> snr_dist(-5.0, 30.0);

            bool ok = true;
            std::string why;
            for (int i = 0; i < 100 && ok; ++i)
            {
                std::vector<double> eigs(size_dist(rng));
                bool any = false;
                for (double &e : eigs)
                {
                    e = zero_dist(rng) < 0.2 ? 0.0 : eig_dist(rng);
                    any = any || e > 0.0;
                }
                if (!any)
                    eigs[0] = 1.0;

                const double snr_db = snr_dist(rng);
                const EigenSpectrum spec = make_spectrum(eigs);
                const CapacityResult wf = waterfill_capacity(spec, snr_db);
                const double eq = equal_power_capacity(spec, snr_db);

                double sum = 0.0;
                for (double p : wf.per_mode_power)
                {
                    if (p < 0.0)
                    {
                        ok = false;
                        why = "negative power";
                    }
                    sum += p;
                }
                if (std::abs(sum - 1.0) > 1e-10)
                {
                    ok = false;
                    why = "power sum " + fmt(sum, 12);
                }
                if (wf.bits_per_s_per_hz < eq - 1e-12)
                {
                    ok = false;
                    why = "wf " + fmt(wf.bits_per_s_per_hz) + " < equal " + fmt(eq);
                }
            }
            r.passed = ok;
            r.detail = ok ? "100 random spectra" : why;
            return r;
        }

        using CheckFn = std::function<CheckResult()>;

        const std::vector<std::pair<std::string, CheckFn>> &registry()
        {
            static const std::vector<std::pair<std::string, CheckFn>> checks = {
                {"A1", check_admissible_set},
                {"A2", check_divisor_oracle},
                {"A3", check_separation_value},
                {"A4", check_multi_distance},
                {"A5", check_capacity_plateaus},
                {"A6", check_end_to_end_orthogonality},
                {"A7", check_rank_collapse_locations},
                {"A8", check_shift_relation},
                {"A9", check_delta_invariance},
                {"A10", check_inner_product_oracle},
                {"A11", check_trace_conservation},
                {"A12", check_waterfilling_properties},
            };
            return checks;
        }
    }

    std::vector<CheckResult> run_reference_checks()
    {
        std::vector<CheckResult> out;
        out.reserve(registry().size());
        for (const auto &[id, fn] : registry())
            out.push_back(fn());
        return out;
    }

    CheckResult run_reference_check(const std::string &id)
    {
        for (const auto &[check_id, fn] : registry())
            if (check_id == id)
                return fn();
        throw std::invalid_argument("unknown check id: " + id);
    }

    std::vector<std::string> reference_check_ids()
    {
        std::vector<std::string> out;
        for (const auto &[id, fn] : registry())
            out.push_back(id);
        return out;
    }
}
