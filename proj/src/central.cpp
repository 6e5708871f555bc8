#include "central.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace hecke {

QuatBundle make_quat_bundle(const Int& N) {
    QuatLattice order = standard_maximal_order(N);
    return QuatBundle{order, class_set(order)};
}

CentralValueReport central_value(const HeckeCharCtx& ctx, const QuatBundle& bundle,
                                 const Prec& pr) {
    require(bundle.order.algebra_N() == ctx.N, "central_value: bundle belongs to a different N");
    CentralValueReport rep;
    rep.N = ctx.N;
    rep.absD = ctx.absD;
    rep.b = ctx.b;

    QuadIdeal ok(Int(1), ctx.b, ctx.N);
    auto forms = reduced_forms(-ctx.absD);
    CMPoint z = z_point(ok, ctx);
    EmbeddingTriple vdata = solve_embedding(ctx.N, ctx.absD);
    Quat v = vdata.v(ctx.N);

    // the left order O_D is shared by every form of this D
    std::optional<QuatLattice> o_d;
    std::optional<Quat> gamma;
    std::vector<int> class_idx;
    for (const auto& f : forms) {
        QuadForm f4 = form_with_b1mod4(f);
        SiegelConstruction sc = siegel_ideal(z, f4, v);
        require(sc.lattice.is_maximal_ideal_pair(),
                "central_value: I_z fails the maximal-order discriminant test");
        QuatLattice lo = left_order(sc.lattice);
        if (!o_d) {
            o_d = lo;
            gamma = conjugating_element(lo, bundle.order);
            require(gamma.has_value(),
                    "central_value: left order of I_z is not conjugate to the reference order");
        } else {
            require(*o_d == lo, "central_value: left order varies across forms of one D");
        }
        QuatLattice transported =
            lattice_left_scale(gamma->inverse(), sc.lattice).primitive();
        class_idx.push_back(bundle.classes.classify(transported));
    }

    // n-values and rows
    Int total(0);
    for (size_t i = 0; i < forms.size(); ++i) {
        NValue nv = n_value(ok, forms[i], ctx, pr);
        total += nv.rounded;
        rep.rows.push_back(TableRow{ctx.absD, forms[i], nv.rounded,
                                    bundle.classes.labels[size_t(class_idx[i])], nv.residual});
    }

    // conjugate forms carry equal n
    for (const auto& row : rep.rows) {
        QuadForm cj = reduce_form(row.form.conj()).form;
        for (const auto& other : rep.rows)
            if (other.form == cj) require(other.n == row.n, "central_value: conjugate rows differ");
    }

    // m per class: one |n| wherever the class is hit
    for (const auto& label : bundle.classes.labels) rep.m_values[label] = 0;
    std::map<std::string, bool> hit;
    for (const auto& row : rep.rows) {
        Int a = abs(row.n);
        if (hit[row.class_label]) {
            require(rep.m_values[row.class_label] == a,
                    "central_value: inconsistent |n| within one ideal class");
        } else {
            rep.m_values[row.class_label] = a;
            hit[row.class_label] = true;
        }
    }
    // r per class: sum of n/m over the forms hitting the class
    for (const auto& label : bundle.classes.labels) rep.r_values[label] = 0;
    for (const auto& row : rep.rows) {
        Int m = rep.m_values[row.class_label];
        if (m == 0) continue;
        ensure(mod_positive(abs(row.n), m) == 0, "central_value: n/m not integral");
        rep.r_values[row.class_label] += row.n / m;
    }
    Int rm_sum(0);
    for (const auto& [label, r] : rep.r_values) rm_sum += r * rep.m_values[label];
    ensure(rm_sum == total, "central_value: sum r*m != sum n");

    rep.omega = omega_period(ctx, pr);
    rep.L_formula = rep.omega.scaled_int(total);
    rep.L_oracle = l_value_oracle(ctx, pr);
    rep.w_psi = root_number_numeric(ctx, pr);
    rep.oracle_gap = cdist(rep.L_formula, rep.L_oracle);
    double gap_tol = std::pow(10.0, -double(pr.digits) / 2);
    rep.oracle_ok = rep.oracle_gap < gap_tol;
    rep.parity = int((mod_positive(total, Int(2))).convert_to<long>());
    rep.nonvanishing = rep.L_formula.abs_double() > 1e-10;
    return rep;
}

std::vector<CentralValueReport> central_values(const Int& N, const std::vector<Int>& absDs,
                                               const QuatBundle& bundle, const Prec& pr,
                                               int jobs, bool conjugate_d) {
    std::vector<CentralValueReport> out(absDs.size());
    std::vector<std::string> errors(absDs.size());
    std::atomic<size_t> next(0);
    int nthreads = std::max(1, std::min<int>(jobs, int(absDs.size())));
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= absDs.size()) return;
            try {
                HeckeCharCtx ctx = canonical_ideal_above(N, absDs[i], conjugate_d);
                out[i] = central_value(ctx, bundle, pr);
                out[i].conjugate_d = conjugate_d;
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (size_t i = 0; i < absDs.size(); ++i)
        if (!errors[i].empty())
            throw std::runtime_error("D=" + absDs[i].str() + ": " + errors[i]);
    for (const auto& rep : out)
        if (!rep.oracle_ok)
            throw OracleMismatch("D=" + rep.absD.str() +
                                 ": formula and oracle routes disagree (gap " +
                                 std::to_string(rep.oracle_gap) + ")");
    return out;
}

std::vector<ParityCertificate> nonvanishing_certificate(const Int& dmax, const QuatBundle& bundle,
                                                        const Prec& pr, int jobs) {
    require(bundle.order.algebra_N() == -7, "nonvanishing_certificate: stated for N = -7 only");
    auto ds = split_prime_norms(Int(-7), dmax);
    auto reports = central_values(Int(-7), ds, bundle, pr, jobs);
    std::vector<ParityCertificate> certs;
    double gap_tol = std::pow(10.0, -double(pr.digits) / 2);
    for (const auto& rep : reports) {
        ParityCertificate c{rep.absD, rep.parity, rep.L_formula.abs_double(), rep.oracle_gap,
                            false};
        c.ok = (c.parity == 1) && (c.l_abs > 1e-10) && (c.oracle_gap < gap_tol);
        require(c.parity == 1, "nonvanishing_certificate: sum of n must be odd at N=-7");
        certs.push_back(c);
    }
    return certs;
}

CrossDReport cross_d_consistency(const std::vector<CentralValueReport>& reports,
                                 const QuatBundle& bundle) {
    CrossDReport out;
    for (const auto& rep : reports) {
        std::map<std::string, bool> hit;
        for (const auto& row : rep.rows) hit[row.class_label] = true;
        for (const auto& [label, m] : rep.m_values) {
            if (!hit.count(label)) continue;
            auto& seen = out.observed[label];
            if (std::find(seen.begin(), seen.end(), m) == seen.end()) seen.push_back(m);
        }
        // paired classes receive equal m within this D
        for (const auto& group : bundle.classes.type_groups) {
            if (group.size() < 2) continue;
            const std::string& l0 = bundle.classes.labels[size_t(group[0])];
            const std::string& l1 = bundle.classes.labels[size_t(group[1])];
            if (hit.count(l0) && hit.count(l1) && rep.m_values.at(l0) != rep.m_values.at(l1))
                out.violations.push_back("D=" + rep.absD.str() + ": paired classes " + l0 + "," +
                                         l1 + " carry different m");
        }
    }
    for (const auto& [label, ms] : out.observed) {
        if (ms.size() > 1)
            out.violations.push_back("class " + label + " received multiple |m| values across D");
    }
    return out;
}

}  // namespace hecke
