#include "checks.hpp"

#include "tables.hpp"

#include <chrono>
#include <cmath>
#include <random>

namespace hecke {

namespace {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

CheckResult make_result(const std::string& name, bool ok, const std::string& detail, double secs) {
    return CheckResult{name, ok, detail, secs};
}

unsigned default_prec_for(long N) { return N == -163 ? 80u : 64u; }

struct TableRun {
    QuatBundle bundle;
    std::vector<CentralValueReport> reports;
    Prec pr;
};

TableRun run_table(long N, std::optional<unsigned> prec_override, int jobs) {
    Prec pr{prec_override.value_or(default_prec_for(N)), 10};
    QuatBundle bundle = make_quat_bundle(Int(N));
    auto ds = golden_d_list(N);
    auto reports = central_values(Int(N), ds, bundle, pr, jobs);
    return TableRun{std::move(bundle), std::move(reports), pr};
}

}  // namespace

std::vector<CheckResult> run_table_checks(std::optional<unsigned> prec_override, int jobs) {
    std::vector<CheckResult> out;
    std::map<long, TableRun> runs;
    for (long N : {-7L, -11L, -163L}) {
        Stopwatch sw;
        std::string name = "table N=" + std::to_string(N);
        try {
            runs.emplace(N, run_table(N, prec_override, jobs));
            auto gc = check_against_golden(N, runs.at(N).reports, runs.at(N).bundle);
            std::string detail;
            for (const auto& f : gc.failures) detail += (detail.empty() ? "" : "; ") + f;
            out.push_back(make_result(name, gc.ok, detail, sw.seconds()));
        } catch (const std::exception& e) {
            out.push_back(make_result(name, false, e.what(), sw.seconds()));
        }
    }

    {
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        struct Want {
            long N, h, t;
        };
        for (auto w : {Want{-7, 1, 1}, Want{-11, 2, 2}, Want{-163, 14, 8}}) {
            auto it = runs.find(w.N);
            if (it == runs.end()) { ok = false; detail += "missing run; "; continue; }
            const ClassSet& cs = it->second.bundle.classes;
            if (cs.size() != w.h || cs.type_number() != w.t) {
                ok = false;
                detail += "N=" + std::to_string(w.N) + ": (h,t)=(" + std::to_string(cs.size()) +
                          "," + std::to_string(cs.type_number()) + "); ";
            }
            Rat mass(0);
            for (const auto& u : cs.unit_counts) mass += Rat(1) / Rat(u);
            if (mass != Rat(Int(-w.N - 1), Int(24))) {
                ok = false;
                detail += "N=" + std::to_string(w.N) + ": mass " + mass.str() + "; ";
            }
            if (w.N == -163) {
                int pairs = 0, singletons = 0;
                for (const auto& g : cs.type_groups)
                    (g.size() == 2 ? pairs : singletons) += 1;
                if (pairs != 6 || singletons != 2) {
                    ok = false;
                    detail += "N=-163 partition " + std::to_string(pairs) + " pairs/" +
                              std::to_string(singletons) + " singletons; ";
                }
            }
        }
        out.push_back(make_result("structure counts (h, t, mass, pairing)", ok, detail,
                                  sw.seconds()));
    }

    {
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        for (const auto& [d, h] : golden_hurwitz()) {
            if (hurwitz(Int(d)) != h) {
                ok = false;
                detail += "H(" + std::to_string(d) + ") != " + h.str() + "; ";
            }
        }
        out.push_back(make_result("Hurwitz class number table", ok, detail, sw.seconds()));
    }

    {
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        for (const auto& [N, run] : runs) {
            double tol = std::pow(10.0, -double(run.pr.digits) / 2);
            for (const auto& rep : run.reports) {
                if (!(rep.oracle_gap < tol)) {
                    ok = false;
                    detail += "N=" + std::to_string(N) + " D=" + rep.absD.str() + " gap " +
                              std::to_string(rep.oracle_gap) + "; ";
                }
                Int total(0);
                for (const auto& row : rep.rows) total += row.n;
                Int rm(0);
                for (const auto& [label, r] : rep.r_values) rm += r * rep.m_values.at(label);
                if (rm != total) {
                    ok = false;
                    detail += "N=" + std::to_string(N) + " D=" + rep.absD.str() + " sum r*m; ";
                }
            }
        }
        out.push_back(make_result("oracle agreement and L = Omega * sum(r m)", ok, detail,
                                  sw.seconds()));
    }

    {
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        for (long N : {-11L, -163L}) {
            auto it = runs.find(N);
            if (it == runs.end()) { ok = false; continue; }
            auto cr = cross_d_consistency(it->second.reports, it->second.bundle);
            if (!cr.consistent()) {
                ok = false;
                for (const auto& v : cr.violations) detail += v + "; ";
            }
        }
        out.push_back(make_result("cross-D consistency of |m| per ideal class", ok, detail,
                                  sw.seconds()));
    }
    return out;
}

CheckResult run_certificate_check(const Int& dmax, const Prec& pr, int jobs) {
    Stopwatch sw;
    try {
        QuatBundle bundle = make_quat_bundle(Int(-7));
        auto certs = nonvanishing_certificate(dmax, bundle, pr, jobs);
        bool ok = true;
        std::string detail;
        for (const auto& c : certs) {
            if (!c.ok) {
                ok = false;
                detail += "D=" + c.absD.str() + " parity=" + std::to_string(c.parity) +
                          " |L|=" + std::to_string(c.l_abs) + "; ";
            }
        }
        detail = detail.empty() ? std::to_string(certs.size()) + " split primes certified" : detail;
        return make_result("non-vanishing certificate N=-7, |D| <= " + dmax.str(), ok, detail,
                           sw.seconds());
    } catch (const std::exception& e) {
        return make_result("non-vanishing certificate N=-7", false, e.what(), sw.seconds());
    }
}

CheckResult run_stability_check(long N, const std::vector<Int>& ds, const Prec& pr, int jobs) {
    Stopwatch sw;
    try {
        QuatBundle bundle = make_quat_bundle(Int(N));
        auto base = central_values(Int(N), ds, bundle, pr, jobs);
        Prec doubled{pr.digits * 2, pr.guard};
        auto redo = central_values(Int(N), ds, bundle, doubled, jobs);
        bool ok = true;
        std::string detail;
        for (size_t i = 0; i < base.size(); ++i) {
            if (base[i].rows.size() != redo[i].rows.size()) { ok = false; continue; }
            for (size_t r = 0; r < base[i].rows.size(); ++r)
                if (base[i].rows[r].n != redo[i].rows[r].n) {
                    ok = false;
                    detail += "D=" + base[i].absD.str() + " row " + std::to_string(r) + "; ";
                }
            if (base[i].m_values != redo[i].m_values || base[i].r_values != redo[i].r_values) {
                ok = false;
                detail += "D=" + base[i].absD.str() + " m/r; ";
            }
        }
        return make_result("precision-doubling stability N=" + std::to_string(N), ok, detail,
                           sw.seconds());
    } catch (const std::exception& e) {
        return make_result("precision-doubling stability N=" + std::to_string(N), false, e.what(),
                           sw.seconds());
    }
}

std::vector<CheckResult> run_property_checks(const Prec& pr) {
    std::vector<CheckResult> out;
    double tol = pr.identity_tol();
    mpfr_prec_t bits = pr.bits();

    {
        // eta shift and inversion at random points, Im in [0.005, 2]
        Stopwatch sw;
        std::mt19937 rng(424242);
        std::uniform_real_distribution<double> xr(-3.0, 3.0), yr(0.005, 2.0);
        bool ok = true;
        std::string detail;
        // closed form at tau = i as an independent anchor:
        // eta(i) = Gamma(1/4) / (2 pi^(3/4))
        {
            Complex ei = eta(Complex(Real(bits), Real::from_long(1, bits)), pr);
            Real pi = Real::pi(bits);
            Real quarter = Real::from_rat(Rat(1, 4), bits);
            Real expected = quarter.gamma() /
                            (Real::from_long(2, bits) * (pi * pi * pi).sqrt().sqrt());
            double gap = (ei.re - expected).abs().to_double() + ei.im.abs().to_double();
            if (!(gap < tol)) {
                ok = false;
                detail += "eta(i) closed form gap " + std::to_string(gap) + "; ";
            }
        }
        for (int t = 0; t < 100 && ok; ++t) {
            double x = xr(rng), y = yr(rng);
            Complex tau(Real::from_rat(Rat(long(x * 4096), 4096), bits),
                        Real::from_rat(Rat(long(y * 4096) + 21, 4096), bits));
            Complex e0 = eta(tau, pr);
            // shift: eta(tau + 1) = exp(i pi / 12) eta(tau)
            Complex e1 = eta(Complex(tau.re + Real::from_long(1, bits), tau.im), pr);
            Real pi12 = Real::pi(bits) / Real::from_long(12, bits);
            Complex phase = cexp(Complex(Real(bits), pi12));
            if (cdist(e1, phase * e0) > tol) {
                ok = false;
                detail += "shift failed at t=" + std::to_string(t) + "; ";
            }
            // inversion: eta(-1/tau) = sqrt(tau / i) eta(tau)
            Complex minus_inv = -(Complex::one(bits) / tau);
            Complex e2 = eta(minus_inv, pr);
            Complex tau_over_i(tau.im, -tau.re);
            if (cdist(e2, csqrt(tau_over_i) * e0) > tol) {
                ok = false;
                detail += "inversion failed at t=" + std::to_string(t) + "; ";
            }
        }
        out.push_back(make_result("eta shift/inversion identities", ok, detail, sw.seconds()));
    }

    {
        // theta inversion theta(0, -(Q tau)^(-1)) = sqrt(det Q) (-i) tau theta(0, Q tau)
        // at the pipeline CM points for disc -11, -23, -71
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        struct Case { long N, D; };
        for (auto c : {Case{-11, 23}, Case{-7, 23}, Case{-7, 71}, Case{-7, 11}}) {
            auto ctx = canonical_ideal_above(Int(c.N), Int(c.D));
            Complex tau = cm_tau(CMPoint{Int(1), ctx.b, ctx.absD, ctx.N}, pr);
            for (const auto& f : reduced_forms(Int(-c.D))) {
                // -(Q tau)^(-1) = Adj(Q) * (-1 / (|D| tau)); Adj(Q_[a,b,c]) = Q_[c,-b,a]
                Complex tau2 = -(Complex::one(bits) /
                                 (tau.scaled(Real::from_long(c.D, bits))));
                Complex lhs = theta_form(QuadForm(f.c, -f.b, f.a), tau2, pr);
                Complex rhs = theta_form(f, tau, pr) * tau;
                rhs = Complex(rhs.im, -rhs.re, rhs.err);  // multiply by -i
                rhs = rhs.scaled(Real::sqrt_int(Int(c.D), bits));
                if (cdist(lhs, rhs) > tol) {
                    ok = false;
                    detail += "N=" + std::to_string(c.N) + " D=" + std::to_string(c.D) + " form " +
                              f.str() + "; ";
                }
            }
        }
        out.push_back(make_result("theta inversion identity", ok, detail, sw.seconds()));
    }

    {
        // (w sqrt(|D|)/4pi) E_1 = sum Theta_B at the pipeline z points and
        // one interior point
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        struct Case { long N, D; };
        for (auto c : {Case{-7, 11}, Case{-7, 23}, Case{-7, 71}, Case{-11, 23}, Case{-163, 151}}) {
            auto ctx = canonical_ideal_above(Int(c.N), Int(c.D));
            Complex tau = cm_tau(CMPoint{Int(1), ctx.b, ctx.absD, ctx.N}, pr);
            double gap = theta_decomp_residual(Int(c.D), tau, pr);
            if (!(gap < tol)) {
                ok = false;
                detail += "z point N=" + std::to_string(c.N) + " D=" + std::to_string(c.D) +
                          " gap " + std::to_string(gap) + "; ";
            }
        }
        {
            Complex tau(Real(bits), Real::from_rat(Rat(1, 5), bits));
            double gap = theta_decomp_residual(Int(23), tau, pr);
            if (!(gap < tol)) {
                ok = false;
                detail += "tau=i/5 gap " + std::to_string(gap) + "; ";
            }
        }
        out.push_back(make_result("Eisenstein/theta decomposition identity", ok, detail,
                                  sw.seconds()));
    }

    {
        // theta action under principal primes, three primes per sampled (N, D)
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        struct Case { long N, D; };
        for (auto c : {Case{-7, 11}, Case{-11, 23}}) {
            auto ctx = canonical_ideal_above(Int(c.N), Int(c.D));
            QuadIdeal ok_ideal(Int(1), ctx.b, ctx.N);
            QuadForm f = reduced_forms(Int(-c.D)).front();
            int used = 0;
            for (Int p(5); used < 3 && p < 200; ++p) {
                if (!is_prime(p) || gcd(p, 6 * ctx.absD) != 1) continue;
                if (!element_of_norm(ctx.N, p)) continue;
                double gap = theta_action_residual(ctx, ok_ideal, f, p, pr);
                ++used;
                if (!(gap < tol)) {
                    ok = false;
                    detail += "N=" + std::to_string(c.N) + " D=" + std::to_string(c.D) +
                              " p=" + p.str() + " gap " + std::to_string(gap) + "; ";
                }
            }
            if (used < 3) {
                ok = false;
                detail += "fewer than 3 principal primes found for N=" + std::to_string(c.N) + "; ";
            }
        }
        out.push_back(make_result("theta action under principal primes", ok, detail, sw.seconds()));
    }

    {
        // Siegel point invariants and the exact period-matrix reconstruction
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        struct Case { long N, D; };
        for (auto c : {Case{-7, 11}, Case{-7, 23}, Case{-11, 23}, Case{-11, 47}, Case{-163, 151}}) {
            auto ctx = canonical_ideal_above(Int(c.N), Int(c.D));
            QuadIdeal ok_ideal(Int(1), ctx.b, ctx.N);
            CMPoint z = z_point(ok_ideal, ctx);
            Quat v = solve_embedding(ctx.N, ctx.absD).v(ctx.N);
            for (const auto& f0 : reduced_forms(Int(-c.D))) {
                QuadForm f = form_with_b1mod4(f0);
                SiegelConstruction sc = siegel_ideal(z, f, v);
                try {
                    siegel_point(sc.lattice, -Quat::unit_j(ctx.N), sc.basis).validate();
                    auto omega = reconstruct_period_matrix(sc, ctx.N);
                    auto want = expected_period_matrix(z, f);
                    if (!(omega == want)) {
                        ok = false;
                        detail += "reconstruction mismatch N=" + std::to_string(c.N) +
                                  " D=" + std::to_string(c.D) + " " + f0.str() + "; ";
                    }
                } catch (const std::exception& e) {
                    ok = false;
                    detail += std::string(e.what()) + "; ";
                }
            }
        }
        out.push_back(make_result("Siegel point invariants and exact reconstruction", ok, detail,
                                  sw.seconds()));
    }

    {
        // left-order and canonicalization invariants on random ideals
        Stopwatch sw;
        bool ok = true;
        std::string detail;
        std::mt19937 rng(777);
        std::uniform_int_distribution<long> coef(-3, 3);
        for (long N : {-7L, -11L, -163L}) {
            QuatLattice o = standard_maximal_order(Int(N));
            auto b = o.basis();
            int done = 0;
            while (done < 50) {
                Quat alpha = Quat::zero(Int(N));
                for (int t = 0; t < 4; ++t)
                    alpha = alpha + b[size_t(t)].scale(Rat(coef(rng)));
                if (alpha.norm() == 0) continue;
                QuatLattice oa = lattice_right_scale(o, alpha);
                if (!(left_order(oa) == o)) {
                    ok = false;
                    detail += "left_order(O a) != O at N=" + std::to_string(N) + "; ";
                }
                if (!(oa.norm() == abs(alpha.norm()))) {
                    ok = false;
                    detail += "Norm(O a) != N(a) at N=" + std::to_string(N) + "; ";
                }
                // canonicalization: scaling steps commute with products
                Quat beta = b[size_t(rng() % 4)];
                if (beta.norm() != 0) {
                    QuatLattice lhs = lattice_right_scale(oa, beta);
                    QuatLattice rhs = lattice_right_scale(o, alpha * beta);
                    if (!(lhs == rhs)) {
                        ok = false;
                        detail += "canonical form not multiplicative at N=" + std::to_string(N) +
                                  "; ";
                    }
                }
                ++done;
            }
        }
        out.push_back(make_result("left-order and canonical-form invariants", ok, detail,
                                  sw.seconds()));
    }
    return out;
}

}  // namespace hecke
