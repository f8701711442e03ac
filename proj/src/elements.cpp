#include "ghzsim/elements.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace ghz {

void ModeMap::set_column(ModeId in, Column col) { cols_[in] = std::move(col); }

const ModeMap::Column* ModeMap::column(ModeId in) const {
    auto it = cols_.find(in);
    return it == cols_.end() ? nullptr : &it->second;
}

bool ModeMap::is_isometry(double tol) const {
    for (auto iu = cols_.begin(); iu != cols_.end(); ++iu) {
        for (auto iv = iu; iv != cols_.end(); ++iv) {
            Complex dot{0.0, 0.0};
            for (const auto& [mu, cu] : iu->second)
                for (const auto& [mv, cv] : iv->second)
                    if (mu == mv) dot += std::conj(cu) * cv;
            Complex want = (iu == iv) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            if (std::abs(dot - want) > tol) return false;
        }
    }
    return true;
}

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;

std::vector<ModeId> site_modes(Site s) {
    if (is_probe_site(s)) return {probe_mode(s)};
    return {mode(s, Pol::H), mode(s, Pol::V)};
}
}  // namespace

ModeMap bs50(Site s1, Site s2) {
    if (s1 == s2) throw std::invalid_argument("bs50: duplicate sites");
    if (is_probe_site(s1) != is_probe_site(s2))
        throw std::invalid_argument("bs50: cannot mix probe and photonic sites");
    ModeMap m;
    auto m1 = site_modes(s1), m2 = site_modes(s2);
    for (size_t i = 0; i < m1.size(); ++i) {
        m.set_column(m1[i], {{m1[i], kInvSqrt2}, {m2[i], kInvSqrt2}});
        m.set_column(m2[i], {{m1[i], kInvSqrt2}, {m2[i], -kInvSqrt2}});
    }
    return m;
}

ModeMap pbs(Site in1, Site in2, Site out1, Site out2) {
    if (in1 == in2 || out1 == out2) throw std::invalid_argument("pbs: duplicate sites");
    for (Site s : {in1, in2, out1, out2})
        if (is_probe_site(s)) throw std::invalid_argument("pbs: probe site");
    ModeMap m;
    m.set_column(mode(in1, Pol::H), {{mode(out1, Pol::H), 1.0}});
    m.set_column(mode(in1, Pol::V), {{mode(out2, Pol::V), 1.0}});
    m.set_column(mode(in2, Pol::H), {{mode(out2, Pol::H), 1.0}});
    m.set_column(mode(in2, Pol::V), {{mode(out1, Pol::V), 1.0}});
    return m;
}

ModeMap hwp_r90(Site s) {
    if (is_probe_site(s)) throw std::invalid_argument("hwp_r90: probe site");
    ModeMap m;
    m.set_column(mode(s, Pol::H), {{mode(s, Pol::V), 1.0}});
    m.set_column(mode(s, Pol::V), {{mode(s, Pol::H), 1.0}});
    return m;
}

ModeMap hadamard_wp(Site s) {
    if (is_probe_site(s)) throw std::invalid_argument("hadamard_wp: probe site");
    ModeMap m;
    m.set_column(mode(s, Pol::H), {{mode(s, Pol::H), kInvSqrt2}, {mode(s, Pol::V), kInvSqrt2}});
    m.set_column(mode(s, Pol::V), {{mode(s, Pol::H), kInvSqrt2}, {mode(s, Pol::V), -kInvSqrt2}});
    return m;
}

ModeMap phase_shift(Site s, double phi) {
    ModeMap m;
    Complex f = std::polar(1.0, phi);
    for (ModeId md : site_modes(s)) m.set_column(md, {{md, f}});
    return m;
}

ModeMap compose(const ModeMap& b, const ModeMap& a) {
    ModeMap out;
    // Domain: every input of a, plus inputs of b that a leaves untouched.
    for (const auto& [in, colA] : a.columns()) {
        ModeMap::Column acc;
        std::map<ModeId, Complex> sum;
        for (const auto& [mid, c] : colA) {
            if (const auto* colB = b.column(mid)) {
                for (const auto& [out_m, cb] : *colB) sum[out_m] += c * cb;
            } else {
                sum[mid] += c;
            }
        }
        for (const auto& [m, c] : sum) acc.push_back({m, c});
        out.set_column(in, std::move(acc));
    }
    for (const auto& [in, colB] : b.columns())
        if (!a.column(in)) out.set_column(in, colB);
    return out;
}

namespace {
double fact(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Expand (sum_k c_k x_k)^n over the column's outputs, emitting every
// composition (m_k) with its multinomial weight n!/(prod m_k!) prod c_k^{m_k}.
void expand_column(const ModeMap::Column& col, int n,
                   const std::function<void(const std::vector<int>&, Complex)>& emit) {
    std::vector<int> counts(col.size(), 0);
    std::function<void(size_t, int, Complex)> rec = [&](size_t k, int left, Complex coeff) {
        if (k + 1 == col.size()) {
            counts[k] = left;
            Complex c = coeff * std::pow(col[k].second, left) / fact(left);
            emit(counts, c * fact(n));
            return;
        }
        for (int take = 0; take <= left; ++take) {
            counts[k] = take;
            rec(k + 1, left - take, coeff * std::pow(col[k].second, take) / fact(take));
        }
    };
    if (col.empty()) throw std::logic_error("empty column");
    rec(0, n, {1.0, 0.0});
}
}  // namespace

HybridState apply_map(const ModeMap& m, const HybridState& s) {
    if (!m.is_isometry()) throw std::invalid_argument("apply_map: map is not an isometry");
    HybridState out;
    for (const auto& term : s.terms) {
        // Work in the monomial basis |occ> = prod (a^dag)^n / sqrt(n!) |0>.
        double in_norm = 1.0;
        for (const auto& [md, n] : term.fock.entries()) in_norm *= fact(n);
        Complex base = term.amplitude / std::sqrt(in_norm);

        std::vector<std::pair<FockOccupation, Complex>> partial{{FockOccupation{}, base}};
        for (const auto& [md, n] : term.fock.entries()) {
            ModeMap::Column ident{{md, Complex{1.0, 0.0}}};
            const ModeMap::Column& col = m.column(md) ? *m.column(md) : ident;
            std::vector<std::pair<FockOccupation, Complex>> next;
            expand_column(col, n, [&](const std::vector<int>& counts, Complex c) {
                if (std::abs(c) == 0.0) return;
                for (const auto& [occ, pc] : partial) {
                    FockOccupation f = occ;
                    for (size_t k = 0; k < col.size(); ++k)
                        if (counts[k] > 0) f.add(col[k].first, counts[k]);
                    next.push_back({std::move(f), pc * c});
                }
            });
            partial = std::move(next);
        }

        // Coherent labels transform with the same matrix.
        CoherentAssignment coh;
        std::map<ModeId, Complex> csum;
        for (const auto& [md, g] : term.coherent.entries()) {
            if (const auto* col = m.column(md)) {
                for (const auto& [out_m, c] : *col) csum[out_m] += c * g;
            } else {
                csum[md] += g;
            }
        }
        for (const auto& [md, g] : csum) coh.set(md, g);

        for (auto& [occ, c] : partial) {
            double out_norm = 1.0;
            for (const auto& [md, n] : occ.entries()) out_norm *= fact(n);
            out.terms.push_back({c * std::sqrt(out_norm), std::move(occ), coh});
        }
    }
    return canonicalize(out);
}

}  // namespace ghz
