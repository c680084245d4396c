#pragma once

// Exhaustive enumeration of all pairs (A, B) over a small F_q: counts the
// vanishing locus of Delta, the branch-partition strata among smooth pairs,
// and the orbit of Z under the additive action.  Enumeration runs in
// serialization order (a_0 outermost), so any index range is a resumable,
// deterministic chunk; workers split the index space and reports merge by
// addition.

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "hyp2/moduli.hpp"

namespace hyp2 {

// Branch partition of a nonzero form: each irreducible factor of degree d
// and multiplicity e contributes d parts equal to e; a vanishing leading
// block contributes the multiplicity at (1:0).  No splitting-field work.
inline std::vector<int> branch_partition(const BinaryForm& A) {
    if (A.is_zero()) throw RangeError("branch partition of the zero form");
    std::vector<int> parts;
    UPoly p = A.dehomogenized();
    if (p.degree() >= 1)
        for (auto& [h, e] : factor(p))
            parts.insert(parts.end(), static_cast<std::size_t>(h.degree()), e);
    int einf = A.multiplicity_at_infinity();
    if (einf > 0) parts.push_back(einf);
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

struct CensusOptions {
    std::uint64_t budget = std::uint64_t(1) << 30;
    int jobs = 1;
};

struct CensusReport {
    std::uint64_t q = 0;
    int m = 0;
    std::uint64_t total = 0;
    std::uint64_t delta_zero = 0;
    std::map<std::vector<int>, std::uint64_t> strata; // partition -> smooth count
    std::uint64_t z_count = 0;                        // pairs in Z itself
    std::uint64_t ga_z_orbit = 0;                     // distinct pairs in Ga . Z
    bool ga_z_inside_delta_zero = true;

    double covered_fraction() const {
        return delta_zero ? static_cast<double>(ga_z_orbit) / static_cast<double>(delta_zero) : 0.0;
    }

    // exponent fit, reported with no pass/fail attached
    double log_q(std::uint64_t count) const {
        return std::log(static_cast<double>(count)) / std::log(static_cast<double>(q));
    }

    std::string csv() const;
};

namespace detail {

// digit <-> index codec for coefficient tuples (a_0..a_m, b_0..b_2m),
// a_0 the most significant digit
struct CensusSpace {
    const FieldCtx* F;
    int m;
    std::uint64_t q;
    int n; // 3m + 2 digits

    CensusSpace(const FieldCtx& field, int m_) : F(&field), m(m_), q(field.order()), n(3 * m_ + 2) {}

    std::vector<std::uint64_t> digits_of(std::uint64_t idx) const {
        std::vector<std::uint64_t> d(static_cast<std::size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            d[static_cast<std::size_t>(i)] = idx % q;
            idx /= q;
        }
        return d;
    }

    bool advance(std::vector<std::uint64_t>& d) const {
        for (int i = n - 1; i >= 0; --i) {
            if (++d[static_cast<std::size_t>(i)] < q) return true;
            d[static_cast<std::size_t>(i)] = 0;
        }
        return false;
    }

    CurvePair pair_of(const std::vector<std::uint64_t>& d) const {
        std::vector<Elem> a, b;
        for (int i = 0; i <= m; ++i) a.push_back(F->elem(d[static_cast<std::size_t>(i)]));
        for (int j = 0; j <= 2 * m; ++j) b.push_back(F->elem(d[static_cast<std::size_t>(m + 1 + j)]));
        return CurvePair(*F, m, BinaryForm(*F, std::move(a)), BinaryForm(*F, std::move(b)));
    }

    std::uint64_t index_of_pair(const CurvePair& C) const {
        std::uint64_t idx = 0;
        for (int i = 0; i <= m; ++i) idx = idx * q + C.A().coeff(i).bits;
        for (int j = 0; j <= 2 * m; ++j) idx = idx * q + C.B().coeff(j).bits;
        return idx;
    }
};

struct CensusPartial {
    std::uint64_t delta_zero = 0;
    std::map<std::vector<int>, std::uint64_t> strata;
    std::vector<std::uint64_t> z_members;
};

inline CensusPartial census_range(const CensusSpace& S, std::uint64_t begin, std::uint64_t end) {
    CensusPartial part;
    std::vector<std::uint64_t> d = S.digits_of(begin);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        CurvePair C = S.pair_of(d);
        if (delta(C).is_zero()) {
            ++part.delta_zero;
            if (!C.A().is_zero() && !C.B().is_zero() && in_Z(C).in_z)
                part.z_members.push_back(idx);
        } else {
            ++part.strata[branch_partition(C.A())];
        }
        S.advance(d);
    }
    return part;
}

} // namespace detail

inline unsigned field_degree_of_order(std::uint64_t q) {
    if (q < 2 || (q & (q - 1)) != 0)
        throw RangeError("field size must be a power of two, got " + std::to_string(q));
    return static_cast<unsigned>(__builtin_ctzll(q));
}

inline CensusReport run_census(std::uint64_t q, int m, CensusOptions opt = {}) {
    if (m < 1) throw RangeError("census needs m >= 1");
    const FieldCtx& F = FieldCtx::get(field_degree_of_order(q));
    detail::CensusSpace S(F, m);

    std::uint64_t total = 1;
    for (int i = 0; i < S.n; ++i) {
        if (total > opt.budget / q)
            throw RangeError("census budget exceeded: q^(3m+2) > " + std::to_string(opt.budget));
        total *= q;
    }

    CensusReport rep;
    rep.q = q;
    rep.m = m;
    rep.total = total;

    const int jobs = std::max(1, opt.jobs);
    std::vector<detail::CensusPartial> parts(static_cast<std::size_t>(jobs));
    if (jobs == 1) {
        parts[0] = detail::census_range(S, 0, total);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = total / static_cast<std::uint64_t>(jobs) + 1;
        for (int w = 0; w < jobs; ++w) {
            const std::uint64_t lo = std::min(total, chunk * static_cast<std::uint64_t>(w));
            const std::uint64_t hi = std::min(total, lo + chunk);
            pool.emplace_back([&, w, lo, hi] { parts[static_cast<std::size_t>(w)] = detail::census_range(S, lo, hi); });
        }
        for (auto& t : pool) t.join();
    }

    std::vector<std::uint64_t> z_members;
    for (auto& p : parts) {
        rep.delta_zero += p.delta_zero;
        for (auto& [part, cnt] : p.strata) rep.strata[part] += cnt;
        z_members.insert(z_members.end(), p.z_members.begin(), p.z_members.end());
    }
    rep.z_count = z_members.size();

    // orbit of Z under the additive action; every reached pair must stay in
    // the vanishing locus of Delta
    std::unordered_set<std::uint64_t> orbit;
    const std::uint64_t alpha_total = [&] {
        std::uint64_t t = 1;
        for (int i = 0; i <= m; ++i) t *= q;
        return t;
    }();
    std::vector<std::uint64_t> ad(static_cast<std::size_t>(m) + 1, 0);
    for (std::uint64_t zi : z_members) {
        CurvePair Z = S.pair_of(S.digits_of(zi));
        std::fill(ad.begin(), ad.end(), 0);
        for (std::uint64_t ai = 0; ai < alpha_total; ++ai) {
            std::vector<Elem> ac;
            for (std::uint64_t dgt : ad) ac.push_back(F.elem(dgt));
            CurvePair acted = act_ga(BinaryForm(F, std::move(ac)), Z);
            orbit.insert(S.index_of_pair(acted));
            if (!delta(acted).is_zero()) rep.ga_z_inside_delta_zero = false;
            // odometer over alpha digits
            for (int i = m; i >= 0; --i) {
                if (++ad[static_cast<std::size_t>(i)] < q) break;
                ad[static_cast<std::size_t>(i)] = 0;
            }
        }
    }
    rep.ga_z_orbit = orbit.size();
    return rep;
}

struct ClosureReport {
    std::uint64_t q = 0;
    int m = 0;
    bool inclusion_holds = false; // Ga . Z(F_q) inside {Delta = 0}(F_q)
    std::uint64_t ga_z_count = 0;
    std::uint64_t delta_zero_count = 0;
    double covered_fraction = 0.0; // recorded, never asserted
};

inline ClosureReport verify_closure(std::uint64_t q, int m, CensusOptions opt = {}) {
    CensusReport r = run_census(q, m, opt);
    return {q, m, r.ga_z_inside_delta_zero, r.ga_z_orbit, r.delta_zero, r.covered_fraction()};
}

inline std::string partition_string(const std::vector<int>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += "+";
        s += std::to_string(parts[i]);
    }
    return s;
}

inline std::string CensusReport::csv() const {
    auto logcol = [&](std::uint64_t c) {
        if (c == 0) return std::string("-inf");
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", log_q(c));
        return std::string(buf);
    };
    std::string out = "q,m,partition,count,log_q_count\n";
    auto row = [&](const std::string& label, std::uint64_t c) {
        out += std::to_string(q) + "," + std::to_string(m) + "," + label + ","
               + std::to_string(c) + "," + logcol(c) + "\n";
    };
    row("total", total);
    row("singular", delta_zero);
    for (auto& [part, cnt] : strata) row(partition_string(part), cnt);
    row("ga_z_orbit", ga_z_orbit);
    return out;
}

} // namespace hyp2
